#pragma once

#include "logmin/harness/json_io.hpp"

#include <cstdint>
#include <functional>
#include <random>

namespace logmin::harness {

enum class InstanceKind { IntegralMono, LogcfgTower, CurveDatum, PointDatum };
std::string to_string(InstanceKind k);
InstanceKind parse_instance_kind(const std::string& s);  // InvalidArgument

struct GeneratorBounds {
    std::size_t rank = 4;         // ambient rank of generated monoids
    long long entry = 3;          // coordinate bound of random generators
    std::size_t extra = 2;        // generators beyond the rank
    unsigned degree = 6;          // element degree of enumeration checks
    std::size_t objects = 20;     // per category of a generated tower
    std::size_t morphisms = 120;
    std::size_t retries = 200;    // rejection cap per instance
};
// "key=value,..." over the field names above, applied on top of `base`
GeneratorBounds parse_generator_bounds(const std::string& text, GeneratorBounds base = {});
json to_json(const GeneratorBounds& b);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    std::uint64_t below(std::uint64_t n) { return g_() % n; }
    long long range(long long lo, long long hi) { return lo + static_cast<long long>(below(hi - lo + 1)); }
    bool chance(unsigned num, unsigned den) { return below(den) < num; }

private:
    std::mt19937_64 g_;
};

std::uint64_t instance_seed(std::uint64_t seed, InstanceKind kind, std::uint64_t index);

// Flavors of integral-mono: "any" (default mix) and "trichotomy" (saturated codomain, cokernel rank <= 1,
// no nilpotents). Throws BoundsTooTight when the retry cap is exhausted.
json generate_instance(InstanceKind kind, std::uint64_t seed, std::uint64_t index, const GeneratorBounds& bounds,
                       const std::string& flavor = "any");
std::vector<json> generate_instances(InstanceKind kind, std::uint64_t seed, std::size_t count,
                                     const GeneratorBounds& bounds, const std::string& flavor = "any",
                                     unsigned threads = 1);

// runs f(i) for i < n over a pool of workers; exceptions are rethrown for the smallest failing i
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f);

}  // namespace logmin::harness

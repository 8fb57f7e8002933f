#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace logmin::monoid {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Vec = std::vector<Integer>;

inline Integer floor_mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

// floor(a / b) for b != 0
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::optional<std::int64_t> to_int64(const Integer& a) {
    if (a > std::numeric_limits<std::int64_t>::max() || a < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return static_cast<std::int64_t>(a);
}

inline Integer dot(const Vec& a, const Vec& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// g = gcd(a, b) = x*a + y*b with g >= 0
struct Bezout {
    Integer g, x, y;
};
Bezout extended_gcd(const Integer& a, const Integer& b);

std::string to_string(const Vec& v);

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept;
};

}  // namespace logmin::monoid

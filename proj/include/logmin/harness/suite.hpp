#pragma once

#include "logmin/harness/generate.hpp"

namespace logmin::harness {

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);
Status worst(Status a, Status b);

struct CheckOutcome {
    Status status = Status::Pass;
    json checks = json::object();  // check name -> "pass" | "fail" | "inconclusive"
    json stats = json::object();
    std::vector<std::string> details;

    void record(const std::string& name, Status s, const std::string& detail = "");
    void record(const std::string& name, bool ok, const std::string& detail = "") {
        record(name, ok ? Status::Pass : Status::Fail, detail);
    }
};

struct SuiteSpec {
    std::string name;
    InstanceKind kind;
    std::string flavor;
    std::function<CheckOutcome(const json& fixture, const GeneratorBounds& bounds)> check;
};
const std::vector<SuiteSpec>& all_suites();
const SuiteSpec& find_suite(const std::string& name);  // InvalidArgument

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::size_t count = 10;
    GeneratorBounds bounds;
    std::vector<std::string> suites;  // empty: all
    unsigned threads = 1;
};
json to_json(const SuiteConfig& c);

// One instance: generate, check, and on failure embed {"suite", "fixture"} for replay.
json run_instance(const SuiteSpec& suite, const SuiteConfig& config, std::size_t index);

struct SuiteTiming {
    std::string suite;
    double seconds;
};
// Report with instances sorted by id; timing is returned separately so reports stay byte-stable.
json run_suites(const SuiteConfig& config, std::vector<SuiteTiming>* timing = nullptr);
Status report_status(const json& report);

// re-runs the check of an embedded counterexample {"suite", "fixture"}
json replay(const json& counterexample, const GeneratorBounds& bounds = {});

// human summary, one line per suite
std::string summarize(const json& report);

}  // namespace logmin::harness

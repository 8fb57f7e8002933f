#include "logmin/harness/json_io.hpp"
#include "logmin/harness/suite.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <thread>

using namespace logmin;
using harness::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInvalid = 2, kInconclusive = 3 };

struct Options {
    std::string input;
    std::string bounds;
    std::string nilpotence = "exact";
    unsigned n_max = 16;
    std::uint64_t seed = 0;
    std::size_t count = 10;
    unsigned threads = 0;
    std::vector<std::string> suites;
    std::string kind = "integral-mono";
    std::string flavor = "any";
};

bool invalid_input(ErrorKind k) {
    switch (k) {
        case ErrorKind::MalformedFixture:
        case ErrorKind::InvalidArgument:
        case ErrorKind::UnknownObject:
        case ErrorKind::AmbientMismatch:
        case ErrorKind::BoundExceeded:
        case ErrorKind::BoundsTooTight: return true;
        default: return false;
    }
}

json element_list(const std::vector<monoid::GroupElement>& v) {
    json out = json::array();
    for (const auto& g : v) out.push_back(harness::to_json(g));
    return out;
}

json names(const category::FiniteCategory& c, const std::vector<bool>& mask, bool objects) {
    json out = json::array();
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(objects ? c.object_name(i) : c.morphism_name(i));
    return out;
}

std::string status_name(harness::Status s) { return harness::to_string(s); }

class Runner {
public:
    explicit Runner(Options o) : o_(std::move(o)) {}

    json load() const {
        if (o_.input.empty()) throw Error(ErrorKind::InvalidArgument, "--input is required");
        return harness::read_json_file(o_.input);
    }
    harness::Reader reader() const { return harness::Reader(std::filesystem::path(o_.input).parent_path()); }

    monoid::NilpotenceOptions nil_options() const {
        monoid::NilpotenceOptions n;
        if (o_.nilpotence == "bounded") n.method = monoid::NilpotenceOptions::Method::Bounded;
        else if (o_.nilpotence != "exact") throw Error(ErrorKind::InvalidArgument, "--nilpotence is exact or bounded");
        n.n_max = o_.n_max;
        return n;
    }

    // ---- monoid
    harness::Status monoid_check(json& r) const {
        json in = load();
        auto rd = reader();
        if (!in.contains("matrix")) {
            auto m = rd.monoid(in, "input");
            r["sharp"] = m.is_sharp();
            r["saturated"] = monoid::is_saturated(m);
            r["units"] = harness::to_json(monoid::units(m));
            r["groupification"] = harness::to_json(monoid::groupify(m).group());
            if (m.is_sharp()) r["atoms"] = element_list(monoid::atoms(m));
            return harness::Status::Pass;
        }
        auto h = rd.hom(in, "input");
        const bool mono = monoid::is_monomorphism(h);
        const bool integral = monoid::is_integral_morphism(h);
        const bool sharp = h.domain().is_sharp() && h.codomain().is_sharp();
        r["monomorphism"] = mono;
        r["integral"] = integral;
        r["sharp"] = sharp;
        if (!(mono && integral && sharp)) return harness::Status::Fail;
        auto im = monoid::IntegralMono::certify(h);
        auto nil = monoid::has_nilpotents(im, nil_options());
        json n = {{"status", nil.status == monoid::NilpotenceStatus::Absent    ? "absent"
                             : nil.status == monoid::NilpotenceStatus::Present ? "present"
                                                                               : "inconclusive"}};
        if (nil.element) n["element"] = harness::to_json(*nil.element);
        if (nil.multiplier) n["multiplier"] = *nil.multiplier;
        r["nilpotents"] = n;
        r["cokernel"] = monoid::to_string(monoid::Cokernel(im).cls().kind);
        return nil.status == monoid::NilpotenceStatus::Inconclusive ? harness::Status::Inconclusive
                                                                    : harness::Status::Pass;
    }

    harness::Status monoid_split(json& r) const {
        auto im = monoid::IntegralMono::certify(reader().hom(load(), "input"));
        r["p"] = harness::to_json(monoid::split_N(im));
        return harness::Status::Pass;
    }

    harness::Status monoid_cokernel(json& r) const {
        auto im = monoid::IntegralMono::certify(reader().hom(load(), "input"));
        monoid::Cokernel c(im);
        r["class"] = monoid::to_string(c.cls().kind);
        r["witness"] = element_list(c.cls().witness);
        r["explanation"] = c.cls().explanation;
        r["group"] = harness::to_json(c.group());
        r["torsion_free"] = c.torsion_free();
        return harness::Status::Pass;
    }

    harness::Status monoid_pushout(json& r) const {
        json in = load();
        auto rd = reader();
        if (in.contains("h")) {
            auto im = monoid::IntegralMono::certify(rd.hom(in["h"], "input.h"));
            if (!in.contains("f")) throw Error(ErrorKind::MalformedFixture, "input: missing field 'f'");
            auto po = monoid::monoid_pushout(im, rd.hom(in["f"], "input.f"));
            r["pushout"] = harness::to_json(po.monoid());
            r["in_P"] = harness::to_json(po.in_P());
            r["in_R"] = harness::to_json(po.in_R());
            return harness::Status::Pass;
        }
        auto n = monoid::pushout_Z_presentation(monoid::IntegralMono::certify(rd.hom(in, "input")));
        r["q0"] = harness::to_json(n.q0);
        r["p1"] = harness::to_json(n.p1);
        r["pm1"] = harness::to_json(n.pm1);
        return harness::Status::Pass;
    }

    harness::Status monoid_saturate(json& r) const {
        auto m = reader().monoid(load(), "input");
        auto s = monoid::saturate(m);
        r["saturated"] = monoid::is_saturated(m);
        r["saturation"] = harness::to_json(s);
        return harness::Status::Pass;
    }

    // ---- categories
    harness::Status cat_validate(json& r) const {
        json in = load();
        auto rd = reader();
        auto describe = [](const category::FiniteCategory& c) {
            return json{{"objects", c.object_count()}, {"morphisms", c.morphism_count()}};
        };
        if (in.contains("F")) {
            auto t = rd.tower(in, "input");
            r["Z"] = describe(*t.Z());
            r["LogSch"] = describe(*t.LogSch());
            r["Sch"] = describe(*t.Sch());
            r["fibered"] = true;
        } else if (in.contains("M")) {
            auto l = rd.logcfg(in, "input");
            r["X"] = describe(*l.X());
            r["groupoid_fibration"] = true;
        } else {
            r["category"] = describe(*rd.category(in, "input"));
        }
        return harness::Status::Pass;
    }

    harness::Status cat_cartesian(json& r) const {
        json in = load();
        auto rd = reader();
        auto report = [](const category::Functor& F) {
            auto cart = category::cartesian_morphisms(F);
            return json{{"cartesian", names(*F.source(), cart, false)},
                        {"fibered", category::is_fibered(F)},
                        {"groupoid_fibration", category::is_groupoid_fibration(F)}};
        };
        if (in.contains("F")) {
            auto t = rd.tower(in, "input");
            r["F"] = report(t.F());
            r["forget"] = report(t.forget());
        } else {
            auto s = rd.category(in.at("source"), "input.source");
            auto t = rd.category(in.at("target"), "input.target");
            r["functor"] = report(rd.functor(in.at("functor"), s, t, "input.functor"));
        }
        return harness::Status::Pass;
    }

    category::Tower tower_input() const {
        json in = load();
        auto rd = reader();
        if (in.contains("M")) return category::phi(rd.logcfg(in, "input")).tower;
        return rd.tower(in, "input");
    }

    harness::Status cat_minimal(json& r) const {
        auto t = tower_input();
        r["minimal"] = names(*t.Z(), category::minimal_objects(t), true);
        return harness::Status::Pass;
    }

    harness::Status cat_b1b2(json& r) const {
        auto t = tower_input();
        auto b1 = category::check_B1(t);
        auto b2 = category::check_B2(t);
        json f1 = json::array(), f2 = json::array();
        for (auto o : b1.failures) f1.push_back(t.Z()->object_name(o));
        for (auto m : b2.failures) f2.push_back(t.Z()->morphism_name(m));
        r["B1"] = {{"holds", b1.holds}, {"failures", f1}};
        r["B2"] = {{"holds", b2.holds}, {"failures", f2}};
        return b1.holds && b2.holds ? harness::Status::Pass : harness::Status::Fail;
    }

    harness::Status descent_run(json& r) const {
        auto t = tower_input();
        auto d = category::descent_construct(t);
        const auto& Zm = *d.minimal.Zm.category;
        json minimal = json::array();
        for (category::ObjId o = 0; o < Zm.object_count(); ++o) minimal.push_back(Zm.object_name(o));
        r["minimal"] = minimal;
        r["target"] = {{"objects", d.target.tower.Z()->object_count()},
                       {"morphisms", d.target.tower.Z()->morphism_count()}};
        r["phi"] = harness::functor_maps(d.phi)["objects"];
        r["psi"] = harness::functor_maps(d.psi)["objects"];
        r["eta_invertible"] = d.eta.is_invertible();
        r["theta_invertible"] = d.theta.is_invertible();
        auto lift = category::check_lifting_lemmas(t);
        r["lifting"] = {{"checked", lift.checked},
                        {"lemma1", {{"diagrams", lift.lemma1_diagrams}, {"failures", lift.lemma1_failures}}},
                        {"lemma2", {{"diagrams", lift.lemma2_diagrams}, {"failures", lift.lemma2_failures}}},
                        {"failures", lift.failures}};
        if (!lift.checked) r["lifting"]["skipped"] = lift.skipped_reason;
        bool ok = d.eta.is_invertible() && d.theta.is_invertible() && lift.lemma1_failures == 0 &&
                  lift.lemma2_failures == 0;
        if (!ok) return harness::Status::Fail;
        return lift.checked ? harness::Status::Pass : harness::Status::Inconclusive;
    }

    // ---- models
    harness::Status curve_classify(json& r) const {
        json in = load();
        auto rd = reader();
        if (in.contains("smoothing")) {
            auto d = rd.curve_fiber(in, "input");
            r["basic"] = models::is_basic_curve(d);
            auto b = models::basify_curve(d);
            r["free"] = harness::to_json(b.free);
            r["comparison"] = harness::to_json(b.comparison);
            return harness::Status::Pass;
        }
        auto s = models::structure_classify(models::CurvePointDatum(rd.hom(in, "input")));
        r["structure"] = harness::to_json(s);
        r["text"] = models::to_string(s);
        return harness::Status::Pass;
    }

    harness::Status point_basic(json& r) const {
        auto res = models::char_log_point_basic(reader().point(load(), "input"));
        r["NY"] = harness::to_json(res.NY);
        r["z"] = harness::to_json(res.z);
        r["basic"] = res.basic;
        return harness::Status::Pass;
    }

    // ---- suites
    harness::SuiteConfig suite_config() const {
        harness::SuiteConfig c;
        c.seed = o_.seed;
        c.count = o_.count;
        c.bounds = harness::parse_generator_bounds(o_.bounds);
        c.suites = o_.suites;
        c.threads = o_.threads ? o_.threads : std::max(1u, std::thread::hardware_concurrency());
        return c;
    }

    const Options& options() const { return o_; }

private:
    Options o_;
};

int emit(const std::string& command, harness::Status s, json result) {
    json report = {{"command", command}, {"status", status_name(s)}, {"result", std::move(result)}};
    std::cout << report.dump(2) << "\n";
    std::cerr << command << ": " << status_name(s) << "\n";
    switch (s) {
        case harness::Status::Pass: return kPass;
        case harness::Status::Fail: return kFail;
        case harness::Status::Inconclusive: return kInconclusive;
    }
    return kFail;
}

int run_guarded(const std::string& command, const std::function<harness::Status(json&)>& f) {
    json result = json::object();
    try {
        const harness::Status status = f(result);
        return emit(command, status, std::move(result));
    } catch (const Error& e) {
        json err = {{"kind", std::string(kind_name(e.kind()))}, {"message", e.what()}};
        if (invalid_input(e.kind())) {
            std::cout << json{{"command", command}, {"status", "invalid"}, {"error", err}}.dump(2) << "\n";
            std::cerr << command << ": invalid input: " << e.what() << "\n";
            return kInvalid;
        }
        result["error"] = err;
        return emit(command, harness::Status::Fail, std::move(result));
    } catch (const harness::json::exception& e) {
        std::cout << json{{"command", command},
                          {"status", "invalid"},
                          {"error", {{"kind", "MalformedFixture"}, {"message", e.what()}}}}
                         .dump(2)
                  << "\n";
        std::cerr << command << ": invalid input: " << e.what() << "\n";
        return kInvalid;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logmin: monoids, fibered categories and minimal log structures"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_input = [&](CLI::App* c) { c->add_option("--input", o.input, "fixture file (JSON)")->required(); };
    auto add_bounds = [&](CLI::App* c) {
        c->add_option("--bounds", o.bounds, "size caps, key=value,... (objects, morphisms; suites also rank, "
                                            "entry, extra, degree, retries)");
    };
    Runner* runner = nullptr;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& command,
                    harness::Status (Runner::*fn)(json&) const) {
        auto* c = parent->add_subcommand(name, help);
        add_input(c);
        add_bounds(c);
        c->callback([&, command, fn] {
            action = [&, command, fn] {
                if (!o.bounds.empty()) category::set_size_bounds(category::parse_size_bounds(o.bounds));
                return run_guarded(command, [&](json& r) { return (runner->*fn)(r); });
            };
        });
        return c;
    };

    auto* mon = app.add_subcommand("monoid", "monoid kernel operations")->require_subcommand(1);
    auto* check = leaf(mon, "check", "properties of a monoid or a hom", "monoid check", &Runner::monoid_check);
    check->add_option("--nilpotence", o.nilpotence, "exact or bounded");
    check->add_option("--n-max", o.n_max, "multiplier cap of the bounded nilpotence search");
    leaf(mon, "split", "split P = Q (+) N", "monoid split", &Runner::monoid_split);
    leaf(mon, "cokernel", "class of P/Q", "monoid cokernel", &Runner::monoid_cokernel);
    leaf(mon, "pushout", "node presentation, or the pushout of {h, f}", "monoid pushout", &Runner::monoid_pushout);
    leaf(mon, "saturate", "saturation", "monoid saturate", &Runner::monoid_saturate);

    auto* cat = app.add_subcommand("cat", "finite categories and fibrations")->require_subcommand(1);
    leaf(cat, "validate", "check category, tower or log configuration laws", "cat validate", &Runner::cat_validate);
    leaf(cat, "cartesian", "cartesian morphisms of a functor or tower", "cat cartesian", &Runner::cat_cartesian);
    leaf(cat, "minimal", "minimal objects of a tower", "cat minimal", &Runner::cat_minimal);
    leaf(cat, "b1b2", "conditions B1 and B2", "cat b1b2", &Runner::cat_b1b2);

    auto* des = app.add_subcommand("descent", "descent construction")->require_subcommand(1);
    leaf(des, "run", "minimal subfibration and the equivalence", "descent run", &Runner::descent_run);

    auto* curve = app.add_subcommand("curve", "log curve characteristics")->require_subcommand(1);
    leaf(curve, "classify", "stalk structure, or basicness of fiber data", "curve classify", &Runner::curve_classify);

    auto* point = app.add_subcommand("point", "log point characteristics")->require_subcommand(1);
    leaf(point, "basic", "basic log structure of (a, h)", "point basic", &Runner::point_basic);

    auto* suite = app.add_subcommand("suite", "property suites")->require_subcommand(1);
    auto* run = suite->add_subcommand("run", "generate instances and run the suites");
    run->add_option("--seed", o.seed, "random seed");
    run->add_option("--count", o.count, "instances per suite")->check(CLI::PositiveNumber);
    run->add_option("--threads", o.threads, "worker threads (0: hardware)");
    run->add_option("--suites", o.suites, "suites to run (default all)")->delimiter(',');
    add_bounds(run);
    run->callback([&] {
        action = [&] {
            harness::SuiteConfig c;
            try {
                c = runner->suite_config();
                for (const auto& s : c.suites) harness::find_suite(s);
            } catch (const Error& e) {
                std::cerr << "suite run: invalid input: " << e.what() << "\n";
                return int(kInvalid);
            }
            std::vector<harness::SuiteTiming> timing;
            json report = harness::run_suites(c, &timing);
            std::cout << report.dump(2) << "\n";
            std::cerr << harness::summarize(report);
            for (const auto& t : timing) std::cerr << "  " << t.suite << ": " << t.seconds << " s\n";
            switch (harness::report_status(report)) {
                case harness::Status::Pass: return int(kPass);
                case harness::Status::Fail: return int(kFail);
                case harness::Status::Inconclusive: return int(kInconclusive);
            }
            return int(kFail);
        };
    });
    auto* replay = suite->add_subcommand("replay", "re-run an embedded counterexample");
    add_input(replay);
    add_bounds(replay);
    replay->callback([&] {
        action = [&] {
            return run_guarded("suite replay", [&](json& r) {
                r = harness::replay(harness::read_json_file(o.input), harness::parse_generator_bounds(o.bounds));
                const std::string& s = r["status"].get_ref<const std::string&>();
                return s == "pass" ? harness::Status::Pass
                       : s == "fail" ? harness::Status::Fail
                                     : harness::Status::Inconclusive;
            });
        };
    });
    auto* gen = suite->add_subcommand("generate", "emit generated fixtures");
    gen->add_option("--kind", o.kind, "integral-mono, logcfg-tower, curve-datum or point-datum");
    gen->add_option("--flavor", o.flavor, "integral-mono flavor: any or trichotomy");
    gen->add_option("--seed", o.seed, "random seed");
    gen->add_option("--count", o.count, "number of fixtures")->check(CLI::PositiveNumber);
    add_bounds(gen);
    gen->callback([&] {
        action = [&] {
            return run_guarded("suite generate", [&](json& r) {
                auto c = runner->suite_config();
                auto fx = harness::generate_instances(harness::parse_instance_kind(o.kind), c.seed, c.count, c.bounds,
                                                      o.flavor, c.threads);
                r["fixtures"] = fx;
                return harness::Status::Pass;
            });
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : int(kInvalid);
    }
    Runner r(o);
    runner = &r;
    return action ? action() : int(kInvalid);
}

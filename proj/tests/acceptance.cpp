// Acceptance run: one PASS/FAIL line per criterion. Optional argv[1] is the logmin CLI, used for the
// cross-process determinism check.
#include "logmin/harness/suite.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>

using namespace logmin;
using namespace logmin::harness;
using monoid::IntMatrix;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Line {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        ok = false;
        note += (note.empty() ? "" : "; ") + why;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

int failures = 0;

void print(int n, const std::string& title, const Line& l) {
    std::cout << "criterion " << n << " " << (l.ok ? "PASS" : "FAIL") << "  " << title;
    if (!l.note.empty()) std::cout << "  (" << l.note << ")";
    std::cout << "\n" << std::flush;
    if (!l.ok) ++failures;
}

json run_one(const std::string& suite, std::size_t count, unsigned threads = 1) {
    SuiteConfig c;
    c.seed = 0;
    c.count = count;
    c.suites = {suite};
    c.threads = threads;
    return run_suites(c).at("suites").at(0);
}

// every instance passes, and the named checks were all recorded as pass
void require_suite(Line& l, const json& s, const std::vector<std::string>& checks = {}) {
    for (const auto& i : s["instances"]) {
        if (i["status"] != "pass") {
            l.fail(s["name"].get<std::string>() + " instance " + std::to_string(i["id"].get<std::size_t>()) + " " +
                   i["status"].get<std::string>());
            continue;
        }
        for (const auto& c : checks)
            if (!i["checks"].contains(c) || i["checks"][c] != "pass")
                l.fail(s["name"].get<std::string>() + " instance " + std::to_string(i["id"].get<std::size_t>()) +
                       " lacks " + c);
    }
}

IntMatrix mat(std::vector<std::vector<long long>> rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    pclose(p);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    // 1
    {
        Line l;
        auto t = Clock::now();
        json s = run_one("splitting", 200);
        double dt = since(t);
        require_suite(l, s, {"unique_split", "matches_oracle"});
        l.expect(s["instances"].size() == 200, "instance count");
        l.expect(dt < 30, "runtime " + std::to_string(dt) + " s");
        if (l.ok) l.note = std::to_string(dt) + " s";
        print(1, "primitive splitting matches enumeration, 200 integral monos", l);
    }
    // 2
    {
        Line l;
        auto t = Clock::now();
        json s = run_one("trichotomy", 100);
        double dt = since(t);
        require_suite(l, s, {"saturated_codomain", "nilpotent_free", "class_in_trichotomy", "torsion_free"});
        std::set<std::string> classes;
        for (const auto& i : s["instances"])
            if (i.contains("stats") && i["stats"].contains("class")) classes.insert(i["stats"]["class"].dump());
        l.expect(dt < 30, "runtime " + std::to_string(dt) + " s");
        if (l.ok) l.note = std::to_string(dt) + " s, " + std::to_string(classes.size()) + " classes seen";
        print(2, "cokernel trichotomy and torsion freeness, 100 instances", l);
    }
    // 3
    {
        Line l;
        json s = run_one("constructions", 200);
        require_suite(l, s);
        std::size_t cocartesian = 0, split = 0;
        for (const auto& i : s["instances"]) {
            cocartesian += i["checks"].contains("cocartesian");
            split += i["checks"].contains("split_iso");
        }
        l.expect(cocartesian > 0 && split > 0, "no applicable fixture for one construction");

        // diagonal N -> N^2: Q = N generated by q0 = 1 with h(q0) = (1,1). The oracle lists the
        // decompositions (1,1) = a + b into nonzero elements of N^2 and keeps the graded-lex smallest a.
        std::vector<std::pair<std::vector<long long>, std::vector<long long>>> splits;
        for (long long x = 0; x <= 1; ++x)
            for (long long y = 0; y <= 1; ++y) {
                std::vector<long long> a{x, y}, b{1 - x, 1 - y};
                if ((x || y) && (b[0] || b[1])) splits.push_back({a, b});
            }
        // graded lex: smaller sum first, then lexicographically larger first
        auto less = [](const std::vector<long long>& u, const std::vector<long long>& v) {
            if (u[0] + u[1] != v[0] + v[1]) return u[0] + u[1] < v[0] + v[1];
            return u > v;
        };
        auto best = *std::min_element(splits.begin(), splits.end(),
                                      [&](const auto& u, const auto& v) { return less(u.first, v.first); });
        l.expect(best.first == std::vector<long long>{1, 0} && best.second == std::vector<long long>{0, 1},
                 "oracle");
        auto node = monoid::pushout_Z_presentation(
            monoid::IntegralMono::certify(MonoidHom(FgMonoid::free(1), FgMonoid::free(2), mat({{1}, {1}}, 1))));
        l.expect(node.q0 == GroupElement{1}, "q0");
        l.expect(node.p1 == GroupElement{1, 0}, "p1");
        l.expect(node.pm1 == GroupElement{0, 1}, "p-1");
        if (l.ok)
            l.note = std::to_string(split) + " split, " + std::to_string(cocartesian) +
                     " cocartesian; diagonal gives (1,(1,0),(0,1))";
        print(3, "split_N and node presentation constructions", l);
    }
    // 4 and 5 share the round-trip fixtures
    {
        Line l4, l5;
        auto t = Clock::now();
        json s = run_one("descent", 100);
        double dt = since(t);
        require_suite(l4, s,
                      {"groupoid_fibration", "B1", "B2", "minimal_iff_invertible", "equivalence_invertible",
                       "naturality"});
        std::size_t max_objects = 0;
        for (const auto& i : s["instances"]) {
            if (i["checks"].value("lifting", "") != "pass")
                l5.fail("instance " + std::to_string(i["id"].get<std::size_t>()));
            if (i.contains("stats")) max_objects = std::max(max_objects, i["stats"].value("objects", std::size_t(0)));
        }
        l4.expect(max_objects <= 20, "fixture above 20 objects");
        l4.expect(dt < 120, "runtime " + std::to_string(dt) + " s");
        if (l4.ok) l4.note = std::to_string(dt) + " s";
        print(4, "descent round trip, 100 LogCfg fixtures", l4);
        print(5, "lifting lemmas on the round-trip fixtures", l5);
    }
    // 6
    {
        Line l;
        // (a) x lies in the saturation of <2,3> iff kx = 2i + 3j for some k >= 1; 1 qualifies with k = 2
        FgMonoid cusp(FgAbelianGroup::free(1), {GroupElement{2}, GroupElement{3}});
        auto in_cusp = [](long long x) {
            for (long long i = 0; 2 * i <= x; ++i)
                if ((x - 2 * i) % 3 == 0) return true;
            return false;
        };
        l.expect(!in_cusp(1) && in_cusp(2), "cusp oracle");
        l.expect(monoid::saturate(cusp) == FgMonoid::free(1), "(a) saturation");

        // (b) (1,1) - (1,0) = (0,1) has order n, and (1,0) has infinite order
        for (long long n : {2, 3, 4}) {
            FgMonoid p(FgAbelianGroup(1, {n}), {GroupElement{1, 0}, GroupElement{1, 1}});
            long long order = 1;
            while (order % n != 0) ++order;
            l.expect(order == n, "(b) oracle");
            l.expect(monoid::groupify(p).group() == FgAbelianGroup(1, {n}), "(b) n = " + std::to_string(n));
        }

        // (c) z : N^2 -> N sends both atoms to 1, so it is not injective and the point is not basic
        FgMonoid n1 = FgMonoid::free(1), n2 = FgMonoid::free(2);
        auto r = models::char_log_point_basic(
            models::CharLogPointDatum(MonoidHom(n2, n1, mat({{1, 1}}, 2)), MonoidHom(n2, n1, mat({{0, 0}}, 2))));
        l.expect(r.NY == n2, "(c) NY");
        l.expect(r.z.matrix() == mat({{1, 1}}, 2), "(c) z");
        l.expect(!r.basic, "(c) basic");

        // (d) I_Q = 2 + N for Q = 2N, so 1 is outside I_Q and 2 * 1 is inside
        auto in_iq = [](long long x) { return x >= 2; };
        l.expect(!in_iq(1) && in_iq(2), "(d) oracle");
        auto nil = monoid::has_nilpotents(monoid::IntegralMono::certify(MonoidHom(n1, n1, mat({{2}}, 1))));
        l.expect(nil.status == monoid::NilpotenceStatus::Present, "(d) status");
        l.expect(nil.element && *nil.element == GroupElement{1}, "(d) p");
        l.expect(nil.multiplier && *nil.multiplier == 2, "(d) n");
        print(6, "worked examples: cusp, torsion group, non-basic point, doubling", l);
    }
    // 7
    {
        Line l;
        json s = run_one("oracles", 200);
        require_suite(l, s, {"face_quotient"});
        // integrality is skipped when both codomains are trivial
        std::size_t integrality = 0;
        for (const auto& i : s["instances"]) integrality += i["checks"].contains("integrality");
        l.expect(integrality > 0, "no integrality comparison ran");
        if (l.ok) l.note = std::to_string(integrality) + " with integrality comparisons";
        print(7, "face quotients and integrality agree with brute force", l);
    }
    // 8
    {
        Line l;
        SuiteConfig c;
        c.seed = 0;
        c.count = 10;
        std::string a = run_suites(c).dump(2);
        std::string b = run_suites(c).dump(2);
        c.threads = 4;
        std::string d = run_suites(c).dump(2);
        l.expect(a == b, "two runs differ");
        l.expect(a == d, "1 vs 4 threads differ");
        if (argc > 1) {
            std::string cmd = std::string(argv[1]) + " suite run --seed 0 --count 10 2>/dev/null";
            std::string x = capture(cmd + " --threads 1");
            std::string y = capture(cmd + " --threads 4");
            l.expect(!x.empty() && x == y, "CLI outputs differ");
            l.expect(x == a + "\n", "CLI and in-process reports differ");
        }
        print(8, "suite run is byte-identical across runs and thread counts", l);
    }
    return failures == 0 ? 0 : 1;
}

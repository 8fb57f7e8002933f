#include "logmin/harness/brute.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace logmin::harness::brute {

std::optional<Vec> positive_functional(const FgMonoid& m) {
    const auto& G = m.ambient();
    const std::size_t r = G.rank();
    std::vector<Vec> gens;
    for (const auto& g : m.generators()) gens.push_back(G.free_part(g));
    if (gens.empty()) return Vec(r);
    if (r == 0) return std::nullopt;
    // box [-2, 3]^r, visited in increasing max-norm so small functionals come first
    for (int radius = 1; radius <= 3; ++radius) {
        Vec f(r);
        std::vector<int> c(r, -std::min(radius, 2));
        for (;;) {
            int norm = 0;
            for (int x : c) norm = std::max(norm, std::abs(x));
            if (norm == radius) {
                for (std::size_t i = 0; i < r; ++i) f[i] = c[i];
                bool ok = true;
                for (const auto& g : gens) {
                    Integer s = 0;
                    for (std::size_t i = 0; i < r; ++i) s += f[i] * g[i];
                    if (s <= 0) { ok = false; break; }
                }
                if (ok) return f;
            }
            std::size_t k = 0;
            while (k < r && ++c[k] > radius) c[k++] = -std::min(radius, 2);
            if (k == r) break;
        }
    }
    return std::nullopt;
}

Membership::Membership(FgMonoid m) : m_(std::move(m)) {
    auto f = positive_functional(m_);
    if (!f) throw Error(ErrorKind::InvalidArgument, "no small positive functional for " + monoid::to_string(m_));
    functional_ = *f;
    for (const auto& g : m_.generators()) gen_weight_.push_back(weight(g));
}

Integer Membership::weight(const GroupElement& x) const {
    Vec fp = m_.ambient().free_part(x);
    Integer s = 0;
    for (std::size_t i = 0; i < fp.size(); ++i) s += functional_[i] * fp[i];
    return s;
}

bool Membership::contains(const GroupElement& x0) {
    const auto& G = m_.ambient();
    GroupElement x = G.make(x0.coords());
    if (x.is_zero()) return true;
    if (weight(x) <= 0) return false;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    bool found = false;
    for (const auto& g : m_.generators())
        if (contains(G.sub(x, g))) { found = true; break; }
    memo_.emplace(x, found);
    return found;
}

std::vector<GroupElement> enumerate(const Membership& m, const Integer& bound, std::size_t cap) {
    const auto& M = m.monoid();
    const auto& G = M.ambient();
    std::unordered_set<GroupElement, monoid::GroupElementHash> seen{G.zero()};
    std::deque<GroupElement> queue{G.zero()};
    while (!queue.empty() && seen.size() <= cap) {
        GroupElement x = queue.front();
        queue.pop_front();
        for (const auto& g : M.generators()) {
            GroupElement y = G.add(x, g);
            if (m.weight(y) > bound || seen.count(y)) continue;
            seen.insert(y);
            queue.push_back(y);
        }
    }
    std::vector<GroupElement> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), monoid::GradedLexLess{});
    return out;
}

std::vector<Split> all_primitive_splits(const MonoidHom& h, Membership& P, const GroupElement& p) {
    const auto& Q = h.domain();
    const auto& GQ = Q.ambient();
    const auto& GP = P.monoid().ambient();
    const Integer wp = P.weight(p);
    std::vector<Split> out;
    std::unordered_set<GroupElement, monoid::GroupElementHash> seen{GQ.zero()};
    std::deque<GroupElement> queue{GQ.zero()};
    while (!queue.empty()) {
        GroupElement q = queue.front();
        queue.pop_front();
        GroupElement r = GP.sub(p, h(q));
        if (P.contains(r)) {
            bool primitive = true;
            for (const auto& g : Q.generators())
                if (P.contains(GP.sub(r, h(g)))) { primitive = false; break; }
            if (primitive) out.push_back({r, q});
        }
        for (const auto& g : Q.generators()) {
            GroupElement q2 = GQ.add(q, g);
            // h(q2) <= p forces its weight below that of p
            if (P.weight(h(q2)) > wp || seen.count(q2)) continue;
            seen.insert(q2);
            queue.push_back(q2);
        }
    }
    return out;
}

std::vector<std::size_t> congruence_classes(const Membership& m, const FgMonoid& face,
                                            const std::vector<GroupElement>& elements, const Integer& window) {
    const auto& G = m.monoid().ambient();
    auto all = enumerate(m, window);
    std::unordered_map<GroupElement, std::size_t, monoid::GroupElementHash> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
    std::vector<std::size_t> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < all.size(); ++i)
        for (const auto& f : face.generators()) {
            auto it = index.find(G.add(all[i], f));
            if (it != index.end()) parent[find(it->second)] = find(i);
        }
    std::vector<std::size_t> out;
    for (const auto& e : elements) {
        auto it = index.find(G.make(e.coords()));
        if (it == index.end()) throw Error(ErrorKind::InvalidArgument, "element outside the congruence window");
        out.push_back(find(it->second));
    }
    return out;
}

std::optional<IntegralityViolation> find_integrality_violation(const MonoidHom& h,
                                                               const std::vector<GroupElement>& q_window,
                                                               const std::vector<GroupElement>& p_window) {
    const auto& GQ = h.domain().ambient();
    const auto& GP = h.codomain().ambient();
    Membership P(h.codomain());
    Membership Q(h.domain());
    std::vector<GroupElement> hq;
    Integer q_cap = 0;
    for (const auto& a : q_window) {
        hq.push_back(h(a));
        q_cap = std::max(q_cap, Q.weight(a));
    }
    // generators killed by h leave the P-weight unchanged, so a3 is also capped in Q
    q_cap *= 2;
    for (const auto& g : h.domain().generators()) q_cap = std::max(q_cap, Q.weight(g));
    for (std::size_t i1 = 0; i1 < q_window.size(); ++i1)
        for (std::size_t i2 = 0; i2 < q_window.size(); ++i2)
            for (const auto& b1 : p_window) {
                GroupElement b2 = GP.sub(GP.add(hq[i1], b1), hq[i2]);
                if (!P.contains(b2)) continue;
                // witnesses: a3 in Q with b = b1 - h(a3) in P, a4 = a1 + a3 - a2 in Q, b2 = h(a4) + b
                bool ok = false;
                std::unordered_set<GroupElement, monoid::GroupElementHash> seen{GQ.zero()};
                std::deque<GroupElement> queue{GQ.zero()};
                const Integer wb1 = P.weight(b1);
                while (!queue.empty() && !ok) {
                    GroupElement a3 = queue.front();
                    queue.pop_front();
                    GroupElement b = GP.sub(b1, h(a3));
                    if (P.contains(b)) {
                        GroupElement a4 = GQ.sub(GQ.add(q_window[i1], a3), q_window[i2]);
                        if (Q.contains(a4) && GP.add(h(a4), b) == GP.make(b2.coords())) ok = true;
                    }
                    for (const auto& g : h.domain().generators()) {
                        GroupElement n = GQ.add(a3, g);
                        if (P.weight(h(n)) > wb1 || Q.weight(n) > q_cap || seen.count(n)) continue;
                        seen.insert(n);
                        queue.push_back(n);
                    }
                }
                if (!ok) return IntegralityViolation{q_window[i1], q_window[i2], b1, b2};
            }
    return std::nullopt;
}

}  // namespace logmin::harness::brute

namespace logmin::harness::brute {

bool window_bijective(const MonoidHom& f, const Integer& bound) {
    Membership P(f.codomain());
    const auto& D = f.domain();
    const auto& GD = D.ambient();
    for (const auto& g : D.generators())
        if (P.weight(f(g)) <= 0) return false;
    std::unordered_set<GroupElement, monoid::GroupElementHash> seen{GD.zero()};
    std::unordered_set<GroupElement, monoid::GroupElementHash> images{f(GD.zero())};
    std::deque<GroupElement> queue{GD.zero()};
    while (!queue.empty()) {
        GroupElement x = queue.front();
        queue.pop_front();
        for (const auto& g : D.generators()) {
            GroupElement y = GD.add(x, g);
            if (seen.count(y)) continue;
            GroupElement fy = f(y);
            if (P.weight(fy) > bound) continue;
            seen.insert(y);
            if (!images.insert(fy).second) return false;
            queue.push_back(y);
        }
    }
    for (const auto& p : enumerate(P, bound))
        if (!images.count(p)) return false;
    return true;
}

Integer window_for(const Membership& m, std::size_t cap, const Integer& limit) {
    Integer best = 0;
    for (Integer w = 1; w <= limit; ++w) {
        if (enumerate(m, w, cap).size() > cap) break;
        best = w;
    }
    return best;
}

}  // namespace logmin::harness::brute

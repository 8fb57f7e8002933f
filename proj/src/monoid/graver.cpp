#include "logmin/monoid/graver.hpp"

#include "logmin/errors.hpp"
#include "logmin/monoid/kernels.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace logmin::monoid {

bool conformal_le(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if ((a[i] > 0) != (b[i] > 0) || b[i] == 0) return false;
        if (abs(a[i]) > abs(b[i])) return false;
    }
    return true;
}

namespace {

struct Overflow {};

// Packed int64 storage; the reducer scan goes through the runtime-selected kernel.
class SmallStore {
public:
    using Elem = std::vector<std::int64_t>;

    explicit SmallStore(std::size_t n) : n_(n), stride_((n + 3) / 4 * 4) {}

    Elem from(const Vec& v) const {
        Elem e(stride_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            auto x = to_int64(v[i]);
            if (!x) throw Overflow{};
            e[i] = *x;
        }
        return e;
    }
    Vec to_vec(const Elem& e) const {
        Vec v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = e[i];
        return v;
    }
    Elem sum(const Elem& a, const Elem& b) const { return combine(a, b, 1); }
    Elem diff(const Elem& a, const Elem& b) const { return combine(a, b, -1); }
    static bool is_zero(const Elem& e) {
        return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
    }
    static Integer norm(const Elem& e) {
        Integer s = 0;
        for (auto x : e) s += x < 0 ? -Integer(x) : Integer(x);
        return s;
    }
    static bool sign_compatible(const Elem& a, const Elem& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if ((a[i] > 0 && b[i] < 0) || (a[i] < 0 && b[i] > 0)) return false;
        return true;
    }

    void push(const Elem& e) {
        rows_.insert(rows_.end(), e.begin(), e.end());
        ++count_;
    }
    std::size_t size() const { return count_; }
    Elem get(std::size_t i) const {
        return Elem(rows_.begin() + static_cast<std::ptrdiff_t>(i * stride_),
                    rows_.begin() + static_cast<std::ptrdiff_t>((i + 1) * stride_));
    }
    std::size_t find_reducer(const Elem& s) const {
        lo_.assign(stride_, 0);
        hi_.assign(stride_, 0);
        for (std::size_t i = 0; i < stride_; ++i) (s[i] < 0 ? lo_[i] : hi_[i]) = s[i];
        return kernels::find_row_in_box(rows_.data(), stride_, count_, lo_.data(), hi_.data());
    }

private:
    Elem combine(const Elem& a, const Elem& b, int sign) const {
        Elem out(stride_);
        if (!kernels::add_checked(a.data(), b.data(), sign, out.data(), stride_)) throw Overflow{};
        return out;
    }

    std::size_t n_, stride_;
    std::vector<std::int64_t> rows_;
    std::size_t count_ = 0;
    mutable std::vector<std::int64_t> lo_, hi_;
};

class BigStore {
public:
    using Elem = Vec;

    explicit BigStore(std::size_t n) : n_(n) {}

    Elem from(const Vec& v) const { return v; }
    Vec to_vec(const Elem& e) const { return e; }
    Elem sum(const Elem& a, const Elem& b) const {
        Elem out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = a[i] + b[i];
        return out;
    }
    Elem diff(const Elem& a, const Elem& b) const {
        Elem out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = a[i] - b[i];
        return out;
    }
    static bool is_zero(const Elem& e) {
        return std::all_of(e.begin(), e.end(), [](const Integer& x) { return x == 0; });
    }
    static Integer norm(const Elem& e) {
        Integer s = 0;
        for (const auto& x : e) s += abs(x);
        return s;
    }
    static bool sign_compatible(const Elem& a, const Elem& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if ((a[i] > 0 && b[i] < 0) || (a[i] < 0 && b[i] > 0)) return false;
        return true;
    }
    void push(const Elem& e) { rows_.push_back(e); }
    std::size_t size() const { return rows_.size(); }
    const Elem& get(std::size_t i) const { return rows_[i]; }
    std::size_t find_reducer(const Elem& s) const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (conformal_le(rows_[r], s)) return r;
        return rows_.size();
    }

private:
    std::size_t n_;
    std::vector<Elem> rows_;
};

template <class Store>
std::vector<Vec> complete(const std::vector<Vec>& gens, std::size_t n, std::size_t max_size) {
    using Elem = typename Store::Elem;
    Store g(n);
    std::set<std::pair<Integer, Elem>> pending;

    auto enqueue_pairs = [&](const Elem& f) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            Elem h = g.get(i);
            if (Store::sign_compatible(f, h)) continue;
            Elem s = g.sum(f, h);
            if (!Store::is_zero(s)) pending.emplace(Store::norm(s), std::move(s));
        }
    };
    auto normal_form = [&](Elem s) {
        while (!Store::is_zero(s)) {
            std::size_t r = g.find_reducer(s);
            if (r == g.size()) break;
            s = g.diff(s, g.get(r));
        }
        return s;
    };
    auto insert = [&](const Elem& f) {
        if (g.size() >= max_size)
            throw Error(ErrorKind::BoundExceeded, "Graver completion passed " + std::to_string(max_size) + " elements");
        enqueue_pairs(f);
        g.push(f);
    };

    for (const auto& v : gens) {
        Vec neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        for (const Vec* w : std::initializer_list<const Vec*>{&v, &neg}) {
            Elem e = normal_form(g.from(*w));
            if (!Store::is_zero(e)) insert(e);
        }
    }
    while (!pending.empty()) {
        Elem s = pending.begin()->second;
        pending.erase(pending.begin());
        Elem r = normal_form(std::move(s));
        if (!Store::is_zero(r)) insert(r);
    }

    std::vector<Vec> all;
    for (std::size_t i = 0; i < g.size(); ++i) all.push_back(g.to_vec(g.get(i)));
    std::vector<Vec> minimal;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool reducible = false;
        for (std::size_t j = 0; j < all.size() && !reducible; ++j)
            reducible = j != i && conformal_le(all[j], all[i]) && all[j] != all[i];
        if (!reducible) minimal.push_back(all[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Vec& a, const Vec& b) {
        Integer na = BigStore::norm(a), nb = BigStore::norm(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    return minimal;
}

}  // namespace

std::vector<Vec> graver_basis(const std::vector<Vec>& lattice_generators, std::size_t n, std::size_t max_size) {
    try {
        return complete<SmallStore>(lattice_generators, n, max_size);
    } catch (const Overflow&) {
        return complete<BigStore>(lattice_generators, n, max_size);
    }
}

}  // namespace logmin::monoid

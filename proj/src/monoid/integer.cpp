#include "logmin/monoid/integer.hpp"

#include <boost/container_hash/hash.hpp>

namespace logmin::monoid {

Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a), y = abs(b);
    while (y != 0) {
        Integer r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

std::size_t VecHash::operator()(const Vec& v) const noexcept {
    std::size_t seed = v.size();
    for (const auto& x : v) {
        if (auto small = to_int64(x)) {
            boost::hash_combine(seed, *small);
        } else {
            boost::hash_combine(seed, x.str());
        }
    }
    return seed;
}

}  // namespace logmin::monoid

#include "fjrw/rational.hpp"

namespace fjrw {

std::optional<Integer> iroot(const Integer& v, unsigned n) {
    if (n == 0) return std::nullopt;
    if (n == 1) return v;
    if (v < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = iroot(-v, n);
        if (!r) return std::nullopt;
        return -*r;
    }
    if (v == 0 || v == 1) return v;
    // bisection on [1, v]
    Integer lo = 1, hi = v;
    while (lo <= hi) {
        Integer mid = (lo + hi) / 2;
        Integer p = boost::multiprecision::pow(mid, n);
        if (p == v) return mid;
        if (p < v) lo = mid + 1; else hi = mid - 1;
    }
    return std::nullopt;
}

std::optional<Rational> rational_root(const Rational& v, unsigned n) {
    auto rn = iroot(num(v), n);
    if (!rn) return std::nullopt;
    auto rd = iroot(den(v), n);
    if (!rd) return std::nullopt;
    return Rational(*rn) / Rational(*rd);
}

Rational pow(const Rational& base, long e) {
    if (e == 0) return 1;
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long k = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    Rational acc = 1;
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

} // namespace fjrw

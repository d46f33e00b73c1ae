#ifndef FJRW_RATIONAL_HPP
#define FJRW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace fjrw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// floor(r) as an Integer
inline Integer rfloor(const Rational& r) {
    Integer q = num(r) / den(r);
    if (num(r) < 0 && q * den(r) != num(r)) --q;
    return q;
}

// r reduced into [0,1)
inline Rational mod1(const Rational& r) { return r - Rational(rfloor(r)); }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// exact integer n-th root if it exists
std::optional<Integer> iroot(const Integer& v, unsigned n);

// exact rational n-th root if it exists
std::optional<Rational> rational_root(const Rational& v, unsigned n);

Rational pow(const Rational& base, long e);

} // namespace fjrw

#endif

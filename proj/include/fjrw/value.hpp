#ifndef FJRW_VALUE_HPP
#define FJRW_VALUE_HPP

#include "fjrw/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace fjrw {

// Polynomial in named symbols with rational coefficients; the value domain for
// correlators and structure constants that the axioms leave undetermined.
struct SymValue {
    using Mono = std::map<std::string, int>; // symbol -> exponent
    std::map<Mono, Rational> terms;

    SymValue() = default;
    SymValue(const Rational& c) {
        if (c != 0) terms[{}] = c;
    }
    static SymValue symbol(const std::string& name) {
        SymValue v;
        v.terms[{{name, 1}}] = 1;
        return v;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_rational() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
    }
    Rational rational() const {
        if (terms.empty()) return 0;
        if (!is_rational()) throw std::runtime_error("SymValue not rational: " + str());
        return terms.begin()->second;
    }
    std::vector<std::string> symbols() const;

    SymValue operator+(const SymValue& o) const;
    SymValue operator-(const SymValue& o) const;
    SymValue operator*(const SymValue& o) const;
    SymValue operator-() const;
    bool operator==(const SymValue& o) const { return terms == o.terms; }

    // replace a symbol by a value
    SymValue substitute(const std::string& name, const SymValue& repl) const;
    SymValue substitute_all(const std::map<std::string, SymValue>& subs) const;

    std::string str() const;
};

} // namespace fjrw

#endif

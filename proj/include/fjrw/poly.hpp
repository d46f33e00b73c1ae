#ifndef FJRW_POLY_HPP
#define FJRW_POLY_HPP

#include "fjrw/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fjrw {

// Sparse exponent vector: variable index -> positive exponent.
struct Monomial {
    std::map<int, long> exps;

    long exp(int var) const {
        auto it = exps.find(var);
        return it == exps.end() ? 0 : it->second;
    }
    void set(int var, long e) {
        if (e == 0) exps.erase(var);
        else exps[var] = e;
    }
    bool is_one() const { return exps.empty(); }
    long total_degree() const {
        long d = 0;
        for (auto& [v, e] : exps) d += e;
        return d;
    }
    Monomial operator*(const Monomial& o) const;
    // componentwise divisibility
    bool divides(const Monomial& o) const;
    // o / this, requires divides
    Monomial divide_into(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator<(const Monomial& o) const { return exps < o.exps; } // container key order only
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct Polynomial {
    std::vector<std::string> vars;
    std::map<Monomial, Rational> terms;
    std::vector<Monomial> input_order; // first-appearance order of monomials

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> v) : vars(std::move(v)) {}

    int nvars() const { return (int)vars.size(); }
    bool is_zero() const { return terms.empty(); }
    size_t nterms() const { return terms.size(); }

    void add_term(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const {
        auto it = terms.find(m);
        return it == terms.end() ? Rational(0) : it->second;
    }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return vars == o.vars && terms == o.terms; }

    Polynomial derivative(int var) const;
    // substitute 0 for the listed variables, keep the ambient variable list
    Polynomial substitute_zero(const std::vector<int>& kill) const;
    // restrict to a subset of variables (they must be the only ones appearing)
    Polynomial restrict_vars(const std::vector<int>& keep) const;

    std::string monomial_str(const Monomial& m) const;
    std::string str() const; // canonical: terms sorted by (total degree, exps)
};

// Grammar: sum of terms  c * x^a * y^b ...  with optional rational c.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& var_order = {});

struct ExponentMatrix {
    std::vector<std::vector<long>> rows; // term order x variable order
    bool is_square() const { return !rows.empty() && rows.size() == rows[0].size(); }
    Integer determinant() const; // 0 when non-square
    bool is_invertible() const { return is_square() && determinant() != 0; }
    std::vector<std::vector<long>> transposed() const;
};

struct WeightSystem {
    std::vector<Rational> q;          // one per variable, in (0,1)
    Rational central_charge;          // sum(1 - 2 q_j)
    std::vector<int> heavy;           // indices with q_j >= 1/2
};

ExponentMatrix exponent_matrix(const Polynomial& W);
WeightSystem solve_weights(const Polynomial& W);
Polynomial transpose_potential(const Polynomial& W);
std::vector<Polynomial> jacobian(const Polynomial& W);

} // namespace fjrw

#endif

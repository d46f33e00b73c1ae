#include "fjrw/poly.hpp"
#include "fjrw/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fjrw {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (auto& [v, e] : o.exps) r.set(v, r.exp(v) + e);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (auto& [v, e] : exps)
        if (o.exp(v) < e) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial r;
    for (auto& [v, e] : o.exps) r.set(v, e - exp(v));
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r = *this;
    for (auto& [v, e] : o.exps) r.set(v, std::max(r.exp(v), e));
    return r;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
        input_order.push_back(m);
    } else {
        it->second += c;
        if (it->second == 0) {
            terms.erase(it);
            input_order.erase(std::find(input_order.begin(), input_order.end(), m));
        }
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(vars);
    for (auto& [m1, c1] : terms)
        for (auto& [m2, c2] : o.terms) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(vars);
    if (c == 0) return r;
    for (auto& [m, k] : terms) r.add_term(m, k * c);
    return r;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(vars);
    for (auto& [m, c] : terms) {
        long e = m.exp(var);
        if (e == 0) continue;
        Monomial d = m;
        d.set(var, e - 1);
        r.add_term(d, c * Rational(e));
    }
    return r;
}

Polynomial Polynomial::substitute_zero(const std::vector<int>& kill) const {
    Polynomial r(vars);
    for (auto& [m, c] : terms) {
        bool dies = false;
        for (int v : kill)
            if (m.exp(v) > 0) { dies = true; break; }
        if (!dies) r.add_term(m, c);
    }
    return r;
}

Polynomial Polynomial::restrict_vars(const std::vector<int>& keep) const {
    std::vector<std::string> names;
    std::vector<int> remap(vars.size(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = (int)i;
        names.push_back(vars[keep[i]]);
    }
    Polynomial r(names);
    for (auto& [m, c] : terms) {
        Monomial mm;
        for (auto& [v, e] : m.exps) {
            if (remap[v] < 0) throw std::runtime_error("restrict_vars: variable not in keep set");
            mm.set(remap[v], e);
        }
        r.add_term(mm, c);
    }
    return r;
}

std::string Polynomial::monomial_str(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : m.exps) {
        if (!first) os << "*";
        first = false;
        os << vars[v];
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string Polynomial::str() const {
    if (terms.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> ts(terms.begin(), terms.end());
    std::sort(ts.begin(), ts.end(), [](auto& a, auto& b) {
        long da = a.first.total_degree(), db = b.first.total_degree();
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : ts) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) os << to_string(a);
        else {
            if (a != 1) os << to_string(a) << "*";
            os << monomial_str(m);
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    std::vector<std::string> vars;
    bool fixed_vars;

    Parser(const std::string& text, const std::vector<std::string>& var_order)
        : s(text), vars(var_order), fixed_vars(!var_order.empty()) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Integer parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw ParseError("expected number", start);
        return Integer(s.substr(start, pos - start));
    }

    std::string parse_name() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !std::isalpha((unsigned char)s[pos]))
            throw ParseError("expected variable name", pos);
        while (pos < s.size() &&
               (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        return s.substr(start, pos - start);
    }

    int var_index(const std::string& name, size_t at) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it != vars.end()) return (int)(it - vars.begin());
        if (fixed_vars) throw ParseError("unknown variable '" + name + "'", at);
        vars.push_back(name);
        return (int)vars.size() - 1;
    }

    // term := [sign] factor (* factor)*
    // factor := rational | name [^ int]
    void parse_term(std::vector<std::pair<Monomial, Rational>>& out, bool negate) {
        Rational coeff = negate ? -1 : 1;
        Monomial mono;
        bool any = false;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (std::isdigit((unsigned char)c)) {
                Integer n = parse_integer();
                Rational r(n);
                skip_ws();
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    Integer d = parse_integer();
                    if (d == 0) throw ParseError("zero denominator", pos);
                    r = Rational(n) / Rational(d);
                }
                coeff *= r;
                any = true;
            } else if (std::isalpha((unsigned char)c)) {
                size_t at = pos;
                std::string name = parse_name();
                int vi = var_index(name, at);
                long e = 1;
                skip_ws();
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    skip_ws();
                    if (pos < s.size() && s[pos] == '-')
                        throw ParseError("negative exponent", pos);
                    Integer ei = parse_integer();
                    if (ei > 1000000) throw ParseError("exponent too large", pos);
                    e = (long)ei;
                }
                mono.set(vi, mono.exp(vi) + e);
                any = true;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
            }
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) throw ParseError("empty term", pos);
        out.emplace_back(mono, coeff);
    }

    std::vector<std::pair<Monomial, Rational>> parse_sum() {
        std::vector<std::pair<Monomial, Rational>> out;
        skip_ws();
        if (pos >= s.size()) throw ParseError("empty input", 0);
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = (s[pos] == '-');
            ++pos;
        }
        parse_term(out, neg);
        while (!at_end()) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                parse_term(out, c == '-');
            } else {
                throw ParseError(std::string("expected '+' or '-', got '") + c + "'", pos);
            }
        }
        return out;
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& var_order) {
    Parser p(text, var_order);
    auto raw = p.parse_sum();
    Polynomial poly(p.vars);
    for (auto& [m, c] : raw) poly.add_term(m, c);
    return poly;
}

Integer ExponentMatrix::determinant() const {
    if (!is_square()) return 0;
    Matrix A;
    for (auto& row : rows) {
        Vector r;
        for (long e : row) r.emplace_back(e);
        A.push_back(r);
    }
    Rational d = fjrw::determinant(A);
    return num(d);
}

std::vector<std::vector<long>> ExponentMatrix::transposed() const {
    if (rows.empty()) return {};
    size_t m = rows.size(), n = rows[0].size();
    std::vector<std::vector<long>> t(n, std::vector<long>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) t[j][i] = rows[i][j];
    return t;
}

ExponentMatrix exponent_matrix(const Polynomial& W) {
    if (W.is_zero()) throw std::invalid_argument("exponent_matrix: zero polynomial");
    ExponentMatrix B;
    for (auto& m : W.input_order) {
        std::vector<long> row(W.nvars());
        for (int j = 0; j < W.nvars(); ++j) row[j] = m.exp(j);
        B.rows.push_back(row);
    }
    return B;
}

WeightSystem solve_weights(const Polynomial& W) {
    auto B = exponent_matrix(W);
    Matrix A;
    for (auto& row : B.rows) {
        Vector r;
        for (long e : row) r.emplace_back(e);
        A.push_back(r);
    }
    Vector b(A.size(), 1);
    auto res = solve_linear(A, b);
    if (res.status == SolveStatus::Underdetermined)
        throw std::runtime_error("solve_weights: weights not unique");
    if (res.status == SolveStatus::NoSolution)
        throw std::runtime_error("solve_weights: no weight system");
    WeightSystem ws;
    ws.q = res.solution;
    Rational c = 0;
    for (size_t j = 0; j < ws.q.size(); ++j) {
        if (ws.q[j] <= 0 || ws.q[j] >= 1)
            throw std::runtime_error("solve_weights: weight outside (0,1) for variable " +
                                     W.vars[j]);
        c += 1 - 2 * ws.q[j];
        if (ws.q[j] >= Rational(1, 2)) ws.heavy.push_back((int)j);
    }
    ws.central_charge = c;
    return ws;
}

Polynomial transpose_potential(const Polynomial& W) {
    auto B = exponent_matrix(W);
    if (!B.is_square()) throw std::runtime_error("transpose_potential: matrix not square");
    if (B.determinant() == 0) throw std::runtime_error("transpose_potential: singular matrix");
    auto T = B.transposed();
    Polynomial r(W.vars);
    for (auto& row : T) {
        Monomial m;
        for (size_t j = 0; j < row.size(); ++j) m.set((int)j, row[j]);
        r.add_term(m, 1);
    }
    return r;
}

std::vector<Polynomial> jacobian(const Polynomial& W) {
    std::vector<Polynomial> out;
    for (int j = 0; j < W.nvars(); ++j) out.push_back(W.derivative(j));
    return out;
}

} // namespace fjrw

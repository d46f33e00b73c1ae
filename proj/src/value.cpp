#include "fjrw/value.hpp"

#include <set>
#include <sstream>

namespace fjrw {

std::vector<std::string> SymValue::symbols() const {
    std::set<std::string> s;
    for (auto& [m, c] : terms)
        for (auto& [name, e] : m) s.insert(name);
    return {s.begin(), s.end()};
}

SymValue SymValue::operator+(const SymValue& o) const {
    SymValue r = *this;
    for (auto& [m, c] : o.terms) {
        auto it = r.terms.find(m);
        if (it == r.terms.end()) r.terms.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

SymValue SymValue::operator-() const {
    SymValue r;
    for (auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
}

SymValue SymValue::operator-(const SymValue& o) const { return *this + (-o); }

SymValue SymValue::operator*(const SymValue& o) const {
    SymValue r;
    for (auto& [m1, c1] : terms) {
        for (auto& [m2, c2] : o.terms) {
            Mono m = m1;
            for (auto& [n, e] : m2) m[n] += e;
            Rational c = c1 * c2;
            auto it = r.terms.find(m);
            if (it == r.terms.end()) r.terms.emplace(m, c);
            else {
                it->second += c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    }
    return r;
}

SymValue SymValue::substitute(const std::string& name, const SymValue& repl) const {
    SymValue r;
    for (auto& [m, c] : terms) {
        SymValue t(c);
        for (auto& [n, e] : m) {
            if (n == name) {
                for (int i = 0; i < e; ++i) t = t * repl;
            } else {
                SymValue s;
                s.terms[{{n, e}}] = 1;
                t = t * s;
            }
        }
        r = r + t;
    }
    return r;
}

SymValue SymValue::substitute_all(const std::map<std::string, SymValue>& subs) const {
    SymValue r = *this;
    bool changed = true;
    size_t guard = 0;
    while (changed) {
        changed = false;
        for (auto& [n, v] : subs) {
            for (auto& s : r.symbols()) {
                if (s == n) {
                    r = r.substitute(n, v);
                    changed = true;
                }
            }
        }
        if (++guard > 100) throw std::runtime_error("substitute_all: cyclic substitution");
    }
    return r;
}

std::string SymValue::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.empty()) os << to_string(a);
        else {
            if (a != 1) os << to_string(a) << "*";
            bool f2 = true;
            for (auto& [n, e] : m) {
                if (!f2) os << "*";
                f2 = false;
                os << n;
                if (e != 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

} // namespace fjrw

#include "fjrw/symmetry.hpp"
#include "fjrw/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fjrw {

PhaseVector PhaseVector::operator+(const PhaseVector& o) const {
    PhaseVector r;
    r.theta.reserve(theta.size());
    for (size_t i = 0; i < theta.size(); ++i) r.theta.push_back(mod1(theta[i] + o.theta[i]));
    return r;
}

PhaseVector PhaseVector::operator-() const {
    PhaseVector r;
    r.theta.reserve(theta.size());
    for (auto& t : theta) r.theta.push_back(mod1(-t));
    return r;
}

PhaseVector PhaseVector::times(long k) const {
    PhaseVector r;
    r.theta.reserve(theta.size());
    for (auto& t : theta) r.theta.push_back(mod1(t * k));
    return r;
}

long PhaseVector::order() const {
    Integer l = 1;
    for (auto& t : theta) l = boost::multiprecision::lcm(l, den(t));
    return (long)l;
}

std::string PhaseVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < theta.size(); ++i) {
        if (i) os << ", ";
        os << to_string(theta[i]);
    }
    os << ")";
    return os.str();
}

bool DiagonalGroup::contains(const PhaseVector& h) const {
    return std::binary_search(elements.begin(), elements.end(), h);
}

bool DiagonalGroup::is_cyclic() const {
    for (auto& e : elements)
        if ((size_t)e.order() == elements.size()) return true;
    return false;
}

DiagonalGroup group_from_generators(const std::vector<PhaseVector>& gens) {
    DiagonalGroup G;
    G.generators = gens;
    std::set<PhaseVector> seen;
    PhaseVector id;
    if (!gens.empty()) id.theta.assign(gens[0].size(), 0);
    seen.insert(id);
    std::vector<PhaseVector> frontier = {id};
    while (!frontier.empty()) {
        std::vector<PhaseVector> next;
        for (auto& e : frontier) {
            for (auto& g : gens) {
                PhaseVector s = e + g;
                if (seen.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
        if (seen.size() > 100000) throw std::runtime_error("group closure too large");
    }
    G.elements.assign(seen.begin(), seen.end());
    return G;
}

DiagonalGroup maximal_symmetry_group(const Polynomial& W) {
    auto B = exponent_matrix(W);
    if (!B.is_square() || B.determinant() == 0)
        throw std::runtime_error("maximal_symmetry_group: exponent matrix not invertible");
    Matrix A;
    for (auto& row : B.rows) {
        Vector r;
        for (long e : row) r.emplace_back(e);
        A.push_back(r);
    }
    auto inv = inverse(A);
    std::vector<PhaseVector> gens;
    size_t n = A.size();
    for (size_t j = 0; j < n; ++j) {
        PhaseVector g;
        for (size_t i = 0; i < n; ++i) g.theta.push_back(mod1((*inv)[i][j]));
        gens.push_back(g);
    }
    DiagonalGroup G = group_from_generators(gens);
    Integer d = B.determinant();
    if (d < 0) d = -d;
    if (Integer((long long)G.order()) != d)
        throw std::runtime_error("maximal_symmetry_group: order mismatch vs det");
    return G;
}

PhaseVector grading_element(const WeightSystem& ws) {
    PhaseVector J;
    for (auto& q : ws.q) J.theta.push_back(mod1(q));
    return J;
}

std::optional<PhaseVector> find_cyclic_generator(const DiagonalGroup& G, const PhaseVector& J,
                                                 const std::optional<PhaseVector>& pinned) {
    size_t n = G.order();
    if (pinned) {
        if (!G.contains(*pinned) || (size_t)pinned->order() != n)
            throw std::runtime_error("pinned generator does not generate the group");
        return pinned;
    }
    if ((size_t)J.order() == n) return J;
    for (auto& e : G.elements)
        if ((size_t)e.order() == n) return e; // elements sorted: lex-least wins
    return std::nullopt;
}

FixedLocus fixed_locus(const PhaseVector& h) {
    FixedLocus F;
    for (size_t j = 0; j < h.theta.size(); ++j)
        if (h.theta[j] == 0) F.fixed.push_back((int)j);
    return F;
}

std::vector<PhaseVector> cyclic_subgroup(const PhaseVector& h) {
    std::vector<PhaseVector> out;
    long n = h.order();
    for (long k = 0; k < n; ++k) out.push_back(h.times(k));
    return out;
}

} // namespace fjrw

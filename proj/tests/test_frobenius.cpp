#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fjrw/frobenius.hpp"

#include <map>

using namespace fjrw;

namespace {

struct AModel {
    StateSpace S;
    CorrelatorSystem sys;
    Resolution res;
    std::vector<std::map<std::string, Rational>> assignments;
    std::map<std::string, int> idx;

    explicit AModel(const std::string& txt) {
        auto W = parse_polynomial(txt);
        auto ws = solve_weights(W);
        auto G = maximal_symmetry_group(W);
        S = build_state_space(W, ws, G);
        sys = compute_correlators(S);
        res = resolve_unknowns(sys);
        assignments = sign_assignments(sys, res);
        for (size_t i = 0; i < S.basis.size(); ++i) idx[S.basis[i].label] = (int)i;
    }
    int at(const std::string& label) const { return idx.at(label); }
};

bool is_unit_vec(const SymVec& v, int at, const Rational& c) {
    for (size_t i = 0; i < v.size(); ++i) {
        SymValue want = (int)i == at ? SymValue(c) : SymValue();
        if (!(v[i] == want)) return false;
    }
    return true;
}

bool is_zero_vec(const SymVec& v) {
    for (auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("E_19 algebra structure under both sign choices") {
    AModel M("x^3 + x*y^7");
    REQUIRE(M.assignments.size() == 2);
    for (auto& asg : M.assignments) {
        FrobeniusAlgebra A = build_algebra(M.sys, M.res, asg);
        CHECK(A.dim == 15);
        CHECK(A.identity == M.at("e_1"));
        CHECK(A.all_known());
        CHECK(check_frobenius(A).ok);

        CHECK(is_unit_vec(A.prod[M.at("e_13")][M.at("e_13")], M.at("e_4"), 1));
        CHECK(is_unit_vec(A.power(M.at("e_11"), 3), M.at("e_10"), -7));
        CHECK(is_unit_vec(A.power(M.at("e_13"), 6), M.at("e_10"), 1));
        auto x2y = A.multiply(A.power(M.at("e_11"), 2), A.unit(M.at("e_13")));
        CHECK(is_zero_vec(x2y));
    }
}

TEST_CASE("corrupted correlator breaks associativity") {
    AModel M("x^3 + x*y^7");
    auto sys = M.sys;
    // overwrite a concavity value with a wrong constant
    std::array<int, 3> t{M.at("e_4"), M.at("e_5"), M.at("e_13")};
    auto* e = const_cast<CorrelatorEntry*>(sys.find(t));
    REQUIRE(e != nullptr);
    e->value = CorrelatorValue::known(2);
    FrobeniusAlgebra A = build_algebra(sys, M.res, M.assignments[0]);
    auto rep = check_frobenius(A);
    CHECK(!rep.ok);
    CHECK(!rep.witness.empty());
}

TEST_CASE("Z_12 algebra is associative modulo the residual ideal") {
    AModel M("x^3*y + x*y^4");
    REQUIRE(M.assignments.size() == 1);
    CHECK(M.res.has_residual());
    FrobeniusAlgebra A = build_algebra(M.sys, M.res, M.assignments[0]);
    CHECK(!A.all_known());
    CHECK(check_frobenius(A).ok);

    int x = M.at("e_6"), y = M.at("e_8");
    // combinations of X^2 and Y^3 with rational products against the generators
    auto x2 = A.prod[x][x];
    auto y3 = A.power(y, 3);
    SymVec mu(A.dim), nu(A.dim);
    for (size_t i = 0; i < A.dim; ++i) {
        mu[i] = x2[i] + SymValue(Rational(4)) * y3[i];
        nu[i] = SymValue(Rational(3)) * x2[i] + y3[i];
    }
    CHECK(is_zero_vec(A.multiply(mu, A.unit(x))));
    CHECK(is_unit_vec(A.multiply(mu, A.unit(y)), M.at("e_7"), -11));
    CHECK(is_unit_vec(A.multiply(nu, A.unit(x)), M.at("e_5"), -11));
    CHECK(is_zero_vec(A.multiply(nu, A.unit(y))));
}

TEST_CASE("milnor algebra of the E_19 transpose") {
    auto WT = parse_polynomial("x^3*y + y^7");
    auto R = milnor_ring(WT, solve_weights(WT).q);
    FrobeniusAlgebra B = milnor_algebra(R);
    CHECK(B.dim == 15);
    CHECK(B.all_known());
    CHECK(check_frobenius(B).ok);
    CHECK(B.degrees[B.identity] == 0);

    // locate x and y among the basis labels
    int xi = -1, yi = -1;
    for (size_t i = 0; i < B.dim; ++i) {
        if (B.labels[i] == "x") xi = (int)i;
        if (B.labels[i] == "y") yi = (int)i;
    }
    REQUIRE(xi >= 0);
    REQUIRE(yi >= 0);
    CHECK(B.degrees[xi] == Rational(4, 7));
    CHECK(B.degrees[yi] == Rational(2, 7));
    // jacobian relations hold in the quotient: x^2*y = 0 and x^3 = -7y^6
    CHECK(is_zero_vec(B.multiply(B.power(xi, 2), B.unit(yi))));
    auto x3 = B.power(xi, 3);
    auto y6 = B.power(yi, 6);
    for (size_t i = 0; i < B.dim; ++i) CHECK(x3[i] == SymValue(Rational(-7)) * y6[i]);
}

TEST_CASE("tensor product of milnor algebras") {
    auto A2 = parse_polynomial("x^3");
    auto RA = milnor_ring(A2, solve_weights(A2).q);
    FrobeniusAlgebra B = milnor_algebra(RA);
    CHECK(B.dim == 2);
    FrobeniusAlgebra T = tensor_product(B, B);
    CHECK(T.dim == 4);
    CHECK(check_frobenius(T).ok);
    CHECK(T.degrees[T.identity] == 0);
    CHECK(T.labels[T.identity] == "1 (x) 1");
    // top degree is the sum of the factor top degrees
    Rational top = 0;
    for (auto& d : T.degrees) top = std::max(top, d);
    CHECK(top == Rational(2, 3) + Rational(2, 3));
}

TEST_CASE("generator search") {
    auto WT = parse_polynomial("x^3*y + y^7");
    auto R = milnor_ring(WT, solve_weights(WT).q);
    FrobeniusAlgebra B = milnor_algebra(R);
    std::vector<Rational> target{Rational(4, 7), Rational(2, 7)};
    auto found = find_generators(B, 2, target);
    REQUIRE(!found.empty());
    REQUIRE(found[0].size() == 2);
    std::vector<std::string> names{B.labels[found[0][0]], B.labels[found[0][1]]};
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"x", "y"});
}

TEST_CASE("symbolic rank") {
    std::set<std::string> hyp;
    SymVec r1{SymValue(Rational(1)), SymValue(Rational(2))};
    SymVec r2{SymValue(Rational(2)), SymValue(Rational(4))};
    CHECK(symbolic_rank({r1, r2}, hyp) == 1);
    SymVec r3{SymValue::symbol("t"), SymValue(Rational(0))};
    SymVec r4{SymValue(Rational(0)), SymValue(Rational(1))};
    CHECK(symbolic_rank({r3, r4}, hyp) == 2);
    CHECK(hyp.count("t != 0") == 1);
    // multi-term pivots are refused
    SymVec r5{SymValue::symbol("u") + SymValue(Rational(1)), SymValue(Rational(0))};
    CHECK(!symbolic_rank({r5}, hyp).has_value());
}

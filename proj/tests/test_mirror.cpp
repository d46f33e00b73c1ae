#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fjrw/mirror.hpp"

using namespace fjrw;

namespace {

MirrorVerdict run_mirror(const std::string& txt) {
    auto W = parse_polynomial(txt);
    auto ws = solve_weights(W);
    auto G = maximal_symmetry_group(W);
    auto S = build_state_space(W, ws, G);
    auto sys = compute_correlators(S);
    auto res = resolve_unknowns(sys);
    return verify_mirror(W, S, sys, res);
}

} // namespace

TEST_CASE("fermat A_3 is self-mirror") {
    auto V = run_mirror("x^4");
    CHECK(V.status == MirrorStatus::Isomorphic);
    CHECK(V.dim_A == 3);
    CHECK(V.dim_B == 3);
    CHECK(V.hypotheses.empty());
}

TEST_CASE("E_19 mirror verification") {
    auto V = run_mirror("x^3 + x*y^7");
    CHECK(V.status == MirrorStatus::Isomorphic);
    CHECK(V.dim_A == 15);
    CHECK(V.dim_B == 15);
    CHECK(V.sign_assignments_tested == 2);
    CHECK(V.hypotheses.empty());
}

TEST_CASE("Z_12 mirror verification through the relation ideal") {
    auto V = run_mirror("x^3*y + x*y^4");
    CHECK(V.status == MirrorStatus::Isomorphic);
    CHECK(V.dim_A == 12);
    CHECK(V.dim_B == 12);
    CHECK(V.hypotheses.empty());
}

TEST_CASE("Z_1_0 mirror verification") {
    auto V = run_mirror("x^3*y + y^7");
    CHECK(V.status == MirrorStatus::Isomorphic);
    CHECK(V.dim_A == 19);
    CHECK(V.dim_B == 19);
}

TEST_CASE("relation check failure is reported") {
    auto A2 = parse_polynomial("x^3");
    auto R = milnor_ring(A2, solve_weights(A2).q);
    FrobeniusAlgebra B = milnor_algebra(R);
    int xi = -1;
    for (size_t i = 0; i < B.dim; ++i)
        if (B.labels[i] == "x") xi = (int)i;
    REQUIRE(xi >= 0);
    auto ok = check_relations(B, {xi}, jacobian(A2));
    CHECK(ok.ok);
    // the linear polynomial x does not vanish in the quotient
    auto bad = check_relations(B, {xi}, {parse_polynomial("x")});
    CHECK(!bad.ok);
}

TEST_CASE("graded non-existence: dimension obstruction") {
    // dim 8, generators of scaled degree 10, 10, 8, 6, top scaled degree 20
    auto V = milnor_nonexistence_check(8, {10, 10, 8, 6}, 20);
    CHECK(V.status == MirrorStatus::NoMilnorRing);
    REQUIRE(V.alpha.has_value());
    CHECK(*V.alpha == Rational(1, 22));
    REQUIRE(V.mu.has_value());
    CHECK(*V.mu == Rational(168, 25));
}

TEST_CASE("graded non-existence: non-integral mu") {
    auto V = milnor_nonexistence_check(7, {14, 10, 16, 12, 18}, 28);
    CHECK(V.status == MirrorStatus::NoMilnorRing);
    REQUIRE(V.alpha.has_value());
    CHECK(*V.alpha == Rational(5, 168));
    REQUIRE(V.mu.has_value());
    CHECK(!is_integer(*V.mu));
}

TEST_CASE("graded non-existence control: consistent data is not rejected") {
    // data of A_3 = x^4 with the maximal group: dim 3, one generator
    auto V = milnor_nonexistence_check(3, {2}, 4);
    CHECK(V.status == MirrorStatus::Undetermined);
    REQUIRE(V.alpha.has_value());
    CHECK(*V.alpha == Rational(1, 8));
    REQUIRE(V.mu.has_value());
    CHECK(*V.mu == 3);
}

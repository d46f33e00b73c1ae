#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fjrw/state_space.hpp"

using namespace fjrw;

namespace {

StateSpace e19() {
    auto W = parse_polynomial("x^3 + x*y^7");
    auto ws = solve_weights(W);
    auto G = maximal_symmetry_group(W);
    return build_state_space(W, ws, G);
}

} // namespace

TEST_CASE("E_19 state space basis") {
    auto S = e19();
    REQUIRE(S.basis.size() == 15);
    std::vector<std::string> want = {"y^6 e_0", "e_1",  "e_2",  "e_4",  "e_5",
                                     "e_7",     "e_8",  "e_10", "e_11", "e_13",
                                     "e_14",    "e_16", "e_17", "e_19", "e_20"};
    std::vector<std::string> got;
    for (auto& b : S.basis) got.push_back(b.label);
    CHECK(got == want);
    CHECK(S.identity == 1);
    CHECK(S.basis[S.identity].degree == 0);
}

TEST_CASE("E_19 scaled degree table") {
    auto S = e19();
    auto tab = degree_table(S);
    std::vector<std::pair<std::string, long>> want = {
        {"e_0", 24},  {"e_1", 0},   {"e_2", 18},  {"e_4", 12},  {"e_5", 30},
        {"e_7", 24},  {"e_8", 42},  {"e_10", 36}, {"e_11", 12}, {"e_13", 6},
        {"e_14", 24}, {"e_16", 18}, {"e_17", 36}, {"e_19", 30}, {"e_20", 48}};
    REQUIRE(tab.size() == want.size());
    for (size_t i = 0; i < tab.size(); ++i) {
        CHECK(tab[i].sector_label == want[i].first);
        CHECK(tab[i].scaled_degree == Rational(want[i].second));
    }
    CHECK(tab[0].invariants == std::vector<std::string>{"y^6 e_0"});
}

TEST_CASE("E_19 sector mu values") {
    auto S = e19();
    for (auto& sec : S.sectors) {
        if (sec.k == 0) CHECK(sec.ring.mu == 19);
        else if (sec.k % 3 == 0) CHECK(sec.ring.mu == 2);
        else CHECK(sec.ring.mu == 1);
    }
}

TEST_CASE("E_19 no invariants in the x-line sectors") {
    auto S = e19();
    for (auto& sec : S.sectors)
        if (sec.k != 0 && sec.k % 3 == 0) CHECK(S.sector_elements[sec.k].empty());
}

TEST_CASE("E_19 pairing") {
    auto S = e19();
    // <y^6 e_0, y^6 e_0> = -1/7
    CHECK(S.eta[0][0] == Rational(-1, 7));
    // twisted point sectors pair to 1 with the opposite sector
    for (size_t i = 1; i < S.basis.size(); ++i) {
        int count = 0;
        for (size_t j = 0; j < S.basis.size(); ++j) {
            if (S.eta[i][j] != 0) {
                ++count;
                CHECK(S.eta[i][j] == 1);
                CHECK(S.deg((int)i) + S.deg((int)j) == 2 * S.chat);
            }
        }
        CHECK(count == 1);
    }
    // symmetric
    for (size_t i = 0; i < S.basis.size(); ++i)
        for (size_t j = 0; j < S.basis.size(); ++j) CHECK(S.eta[i][j] == S.eta[j][i]);
}

TEST_CASE("w-degree formula spot checks") {
    auto S = e19();
    // e_20 has degree 2c = 48/21
    CHECK(S.basis.back().degree == Rational(48, 21));
    CHECK(S.basis.back().degree == 2 * S.chat);
}

TEST_CASE("Z_12 untwisted invariants") {
    auto W = parse_polynomial("x^3*y + x*y^4");
    auto ws = solve_weights(W);
    auto G = maximal_symmetry_group(W);
    auto S = build_state_space(W, ws, G);
    // two invariants x^2 e_0 and y^3 e_0 in the untwisted sector
    std::vector<std::string> got;
    for (int ei : S.sector_elements[0]) got.push_back(S.basis[ei].label);
    CHECK(got == std::vector<std::string>{"x^2 e_0", "y^3 e_0"});
    // eta block on the untwisted pair: residue pairing of {x^2, y^3} with
    // NF(x^4) = -4 x^2 y^3, NF(y^6) = -3 x^2 y^3, NF(hess) = 132 x^2 y^3
    int a = S.sector_elements[0][0], b = S.sector_elements[0][1];
    CHECK(S.eta[a][a] == Rational(-4, 11));
    CHECK(S.eta[a][b] == Rational(1, 11));
    CHECK(S.eta[b][b] == Rational(-3, 11));
}

TEST_CASE("dimension equals mu of the transpose") {
    for (const char* txt : {"x^3 + x*y^7", "x^3*y + y^5", "x^2*z + y*z^2 + y^4"}) {
        auto W = parse_polynomial(txt);
        auto ws = solve_weights(W);
        auto G = maximal_symmetry_group(W);
        auto S = build_state_space(W, ws, G);
        auto WT = transpose_potential(W);
        auto RT = milnor_ring(WT, solve_weights(WT).q);
        CHECK(S.basis.size() == RT.mu);
    }
}

TEST_CASE("x^2 with maximal group") {
    auto W = parse_polynomial("x^2");
    auto ws = solve_weights(W);
    auto G = maximal_symmetry_group(W);
    auto S = build_state_space(W, ws, G);
    // untwisted sector has no invariants; the twisted point sector carries e_1
    REQUIRE(S.basis.size() == 1);
    CHECK(S.basis[0].label == "e_1");
    CHECK(S.identity == 0);
}

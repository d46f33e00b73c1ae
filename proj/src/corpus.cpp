#include "fjrw/corpus.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

namespace fjrw {

namespace {

Rational fr(long a, long b) { return Rational(a) / Rational(b); }

std::string ek(int k) { return "e_" + std::to_string(k); }

// concavity correlator, value 1
ExpectedCorrelator cc(int a, int b, int c) {
    return {{ek(a), ek(b), ek(c)}, Rational(1), Axiom::Concavity};
}

// index-zero correlator
ExpectedCorrelator iz(int a, int b, int c, long v) {
    return {{ek(a), ek(b), ek(c)}, Rational(v), Axiom::IndexZero};
}

// pairing correlator with explicit labels
ExpectedCorrelator pr(const std::string& a, const std::string& b, const std::string& c,
                      const Rational& v) {
    return {{a, b, c}, v, Axiom::Pairing};
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> L;

    {
        CorpusEntry e;
        e.name = "E_19";
        e.poly = "x^3 + x*y^7";
        e.vars = {"x", "y"};
        e.group_order = 21;
        e.chat = fr(8, 7);
        e.sector_mus = {19, 2};
        e.dim = 15;
        e.mirror_dim = 15;
        e.correlators = {pr("e_1", "y^6 e_0", "y^6 e_0", fr(-1, 7))};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Q_11";
        e.poly = "x^2*z + y^3 + y*z^3";
        e.vars = {"x", "y", "z"};
        e.group_order = 18;
        e.chat = fr(10, 9);
        e.sector_mus = {11, 2, 7};
        e.dim = 13;
        e.mirror_dim = 13;
        e.correlators = {pr("e_1", "z^2 e_9", "z^2 e_9", fr(-1, 3)),
                         cc(5, 16, 16), cc(7, 14, 16), cc(10, 11, 16), cc(10, 13, 14),
                         iz(11, 13, 13, -2), iz(8, 13, 16, -2)};
        e.generator_labels = {"e_10", "e_14", "e_16"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "S_11";
        e.poly = "x^2*z + y*z^2 + y^4";
        e.vars = {"x", "y", "z"};
        e.group_order = 16;
        e.chat = fr(9, 8);
        e.sector_mus = {11, 3, 5};
        e.dim = 13;
        e.mirror_dim = 13;
        e.correlators = {pr("e_1", "z e_8", "z e_8", fr(-1, 2)),
                         cc(5, 14, 14), cc(6, 13, 14), cc(9, 10, 14), cc(9, 11, 13),
                         iz(7, 13, 13, -2), iz(10, 10, 13, -2), iz(11, 11, 11, -2)};
        e.generator_labels = {"e_9", "e_13", "e_14"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "S_12";
        e.poly = "x^2*z + y*z^2 + x*y^3";
        e.vars = {"x", "y", "z"};
        e.group_order = 13;
        e.chat = fr(15, 13);
        e.sector_mus = {12};
        e.dim = 12;
        e.mirror_dim = 12;
        e.correlators = {cc(5, 11, 11), cc(6, 10, 11), cc(7, 9, 11), cc(8, 9, 10),
                         iz(7, 10, 10, -2), iz(8, 8, 11, -2), iz(9, 9, 9, -3)};
        e.generator_labels = {"e_9", "e_10", "e_11"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Z_11";
        e.poly = "x^3*y + y^5";
        e.vars = {"x", "y"};
        e.group_order = 15;
        e.chat = fr(16, 15);
        e.sector_mus = {11, 4};
        e.dim = 13;
        e.mirror_dim = 13;
        e.correlators = {pr("e_1", "x^2 e_0", "x^2 e_0", fr(-1, 3)),
                         cc(2, 2, 12), cc(2, 6, 8), cc(4, 6, 6), cc(6, 12, 13),
                         cc(7, 12, 12), cc(8, 11, 12), iz(4, 4, 8, -3)};
        e.generator_labels = {"e_6", "e_12"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Z_12";
        e.poly = "x^3*y + x*y^4";
        e.vars = {"x", "y"};
        e.group_order = 11;
        e.chat = fr(12, 11);
        e.sector_mus = {12};
        e.dim = 12;
        e.mirror_dim = 12;
        e.correlators = {pr("e_1", "x^2 e_0", "x^2 e_0", fr(-4, 11)),
                         pr("e_1", "x^2 e_0", "y^3 e_0", fr(1, 11)),
                         pr("e_1", "y^3 e_0", "y^3 e_0", fr(-3, 11)),
                         cc(2, 2, 8), cc(2, 4, 6), cc(6, 8, 9), cc(7, 8, 8),
                         iz(4, 4, 4, -3)};
        e.generator_labels = {"e_6", "e_8"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Z_13";
        e.poly = "x^3*y + y^6";
        e.vars = {"x", "y"};
        e.group_order = 18;
        e.chat = fr(10, 9);
        e.sector_mus = {13, 5};
        e.dim = 16;
        e.mirror_dim = 16;
        e.correlators = {pr("e_1", "e_9", "e_9", Rational(1)),
                         pr("e_1", "x^2 e_0", "x^2 e_0", fr(-1, 3)),
                         cc(2, 2, 15), cc(2, 4, 13), cc(2, 8, 9), cc(3, 8, 8), cc(4, 7, 8),
                         cc(7, 15, 15), cc(8, 13, 16), cc(8, 14, 15), cc(9, 13, 15),
                         cc(11, 13, 13), iz(4, 4, 11, -3), iz(11, 11, 15, -3)};
        e.generator_labels = {"e_13", "e_8"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "W_13";
        e.poly = "x^4 + x*y^4";
        e.vars = {"x", "y"};
        e.group_order = 16;
        e.chat = fr(9, 8);
        e.sector_mus = {13, 3};
        e.dim = 13;
        e.mirror_dim = 13;
        e.correlators = {pr("e_1", "y^3 e_0", "y^3 e_0", fr(-1, 4)),
                         cc(2, 2, 13), cc(2, 6, 9), cc(5, 6, 6), cc(6, 13, 14),
                         cc(7, 13, 13), cc(9, 11, 13), iz(11, 11, 11, -4)};
        e.generator_labels = {"e_6", "e_13"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "E_13";
        e.poly = "x^3 + x*y^5";
        e.vars = {"x", "y"};
        e.group_order = 15;
        e.chat = fr(16, 15);
        e.sector_mus = {13, 2};
        e.dim = 11;
        e.mirror_dim = 11;
        e.correlators = {pr("e_1", "y^4 e_0", "y^4 e_0", fr(-1, 5)),
                         cc(2, 4, 10), cc(4, 4, 8), cc(8, 10, 13), cc(10, 10, 11)};
        e.generator_labels = {"e_8", "e_10"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Z_17";
        e.poly = "x^3*y + y^8";
        e.vars = {"x", "y"};
        e.group_order = 24;
        e.chat = fr(7, 6);
        e.sector_mus = {17, 7};
        e.dim = 22;
        e.mirror_dim = 22;
        e.correlators = {pr("e_1", "e_12", "e_12", Rational(1)),
                         pr("e_1", "x^2 e_0", "x^2 e_0", fr(-1, 3)),
                         cc(2, 2, 21), cc(2, 4, 19), cc(2, 5, 18), cc(2, 9, 14),
                         cc(2, 11, 12), cc(3, 4, 18), cc(3, 11, 11), cc(4, 4, 17),
                         cc(4, 9, 12), cc(4, 10, 11), cc(5, 9, 11), cc(7, 9, 9),
                         cc(9, 18, 22), cc(9, 19, 21), cc(10, 18, 21), cc(11, 17, 21),
                         cc(11, 18, 20), cc(11, 19, 19), cc(12, 18, 19), cc(13, 18, 18),
                         cc(14, 17, 18),
                         iz(4, 7, 14, -3), iz(7, 7, 11, -3), iz(7, 21, 21, -3),
                         iz(14, 14, 21, -3)};
        e.generator_labels = {"e_9", "e_18"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Z_17T";
        e.poly = "x^3 + x*y^8";
        e.vars = {"x", "y"};
        e.pinned_gen = {fr(16, 24), fr(1, 24)};
        e.group_order = 24;
        e.chat = fr(7, 6);
        e.sector_mus = {22, 2};
        e.dim = 17;
        e.mirror_dim = 17;
        e.correlators = {pr("e_2", "y^7 e_0", "y^7 e_0", fr(-1, 8)),
                         cc(1, 5, 20), cc(1, 8, 17), cc(1, 11, 14), cc(4, 5, 17),
                         cc(4, 8, 14), cc(4, 11, 11), cc(5, 5, 16), cc(5, 7, 14),
                         cc(5, 8, 13), cc(5, 10, 11), cc(7, 8, 11), cc(8, 8, 10)};
        e.generator_labels = {"e_1", "e_5"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Z_18";
        e.poly = "x^3*y + x*y^6";
        e.vars = {"x", "y"};
        e.group_order = 17;
        e.chat = fr(20, 17);
        e.sector_mus = {18};
        e.dim = 18;
        e.mirror_dim = 18;
        e.correlators = {pr("e_1", "x^2 e_0", "x^2 e_0", fr(-6, 17)),
                         pr("e_1", "x^2 e_0", "y^5 e_0", fr(1, 17)),
                         pr("e_1", "y^5 e_0", "y^5 e_0", fr(-3, 17)),
                         cc(2, 2, 14), cc(2, 4, 12), cc(2, 5, 11), cc(2, 7, 9),
                         cc(3, 4, 11), cc(4, 4, 10), cc(4, 5, 9), cc(9, 11, 15),
                         cc(9, 12, 14), cc(10, 11, 14), cc(11, 11, 13), cc(11, 12, 12),
                         iz(4, 7, 7, -3), iz(7, 14, 14, -3)};
        e.generator_labels = {"e_9", "e_11"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Z_19";
        e.poly = "x^3*y + y^9";
        e.vars = {"x", "y"};
        e.group_order = 27;
        e.chat = fr(32, 27);
        e.sector_mus = {19, 8};
        e.dim = 25;
        e.mirror_dim = 25;
        e.correlators = {pr("e_1", "x^2 e_0", "x^2 e_0", fr(-1, 3)),
                         cc(2, 2, 24), cc(2, 4, 22), cc(2, 5, 21), cc(2, 7, 19),
                         cc(2, 11, 15), cc(2, 12, 14), cc(3, 4, 21), cc(3, 11, 14),
                         cc(4, 4, 20), cc(4, 5, 19), cc(4, 10, 14), cc(4, 11, 13),
                         cc(4, 12, 12), cc(5, 11, 12), cc(6, 11, 11), cc(7, 10, 11),
                         cc(10, 21, 24), cc(11, 19, 25), cc(11, 20, 24), cc(11, 21, 23),
                         cc(11, 22, 22), cc(12, 19, 24), cc(12, 21, 22), cc(13, 21, 21),
                         cc(14, 19, 22), cc(14, 20, 21), cc(15, 19, 21), cc(17, 19, 19),
                         iz(4, 7, 17, -3), iz(7, 7, 14, -3), iz(7, 24, 24, -3),
                         iz(17, 17, 21, -3), iz(14, 17, 24, -3)};
        e.generator_labels = {"e_19", "e_11"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Z_19T";
        e.poly = "x^3 + x*y^9";
        e.vars = {"x", "y"};
        e.group_order = 27;
        e.chat = fr(32, 27);
        e.sector_mus = {25, 2};
        e.dim = 19;
        e.mirror_dim = 19;
        e.correlators = {pr("e_1", "y^8 e_0", "y^8 e_0", fr(-1, 9)),
                         cc(2, 4, 22), cc(2, 7, 19), cc(2, 10, 16), cc(4, 4, 20),
                         cc(4, 5, 19), cc(4, 7, 17), cc(4, 8, 16), cc(4, 10, 14),
                         cc(5, 7, 16), cc(7, 7, 14), cc(14, 16, 25), cc(14, 19, 22),
                         cc(16, 16, 23), cc(16, 17, 22), cc(16, 19, 20), cc(17, 19, 19)};
        e.generator_labels = {"e_14", "e_16"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "W_17";
        e.poly = "x^4 + x*y^5";
        e.vars = {"x", "y"};
        e.group_order = 20;
        e.chat = fr(6, 5);
        e.sector_mus = {17, 3};
        e.dim = 16;
        e.mirror_dim = 16;
        e.correlators = {pr("e_1", "e_10", "e_10", Rational(1)),
                         pr("e_1", "y^4 e_0", "y^4 e_0", fr(-1, 5)),
                         cc(2, 2, 17), cc(2, 5, 14), cc(2, 9, 10), cc(3, 9, 9),
                         cc(5, 7, 9), cc(7, 17, 17), cc(9, 14, 18), cc(9, 15, 17),
                         cc(10, 14, 17), cc(13, 14, 14), iz(7, 7, 7, -5)};
        e.generator_labels = {"e_14", "e_9"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "W_17T";
        e.poly = "x^4*y + y^5";
        e.vars = {"x", "y"};
        e.pinned_gen = {fr(1, 20), fr(16, 20)};
        e.group_order = 20;
        e.chat = fr(6, 5);
        e.sector_mus = {16, 4};
        e.dim = 17;
        e.mirror_dim = 17;
        e.correlators = {pr("e_4", "x^3 e_0", "x^3 e_0", fr(-1, 4)),
                         cc(1, 9, 14), cc(2, 3, 19), cc(2, 8, 14), cc(2, 9, 13),
                         cc(3, 3, 18), cc(3, 7, 14), cc(3, 8, 13), cc(3, 9, 12),
                         cc(6, 9, 9), cc(7, 8, 9), cc(8, 8, 8), iz(1, 1, 2, -4)};
        e.generator_labels = {"e_9", "e_3"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Q_17";
        e.poly = "x^3 + x*y^5 + y*z^2";
        e.vars = {"x", "y", "z"};
        e.group_order = 30;
        e.chat = fr(6, 5);
        e.sector_mus = {17, 13, 2};
        e.dim = 21;
        e.mirror_dim = 21;
        e.correlators = {pr("e_1", "y^4 e_15", "y^4 e_15", fr(-1, 5)),
                         cc(2, 10, 19), cc(4, 8, 19), cc(4, 10, 17), cc(5, 10, 16),
                         cc(7, 8, 16), cc(8, 10, 13), cc(8, 25, 28), cc(10, 10, 11),
                         cc(10, 23, 28), cc(10, 25, 26), cc(16, 17, 28), cc(16, 19, 26),
                         cc(17, 19, 25), cc(19, 19, 23),
                         iz(5, 7, 19, -2), iz(5, 28, 28, -2), iz(7, 7, 17, -2),
                         iz(7, 10, 14, -2), iz(7, 26, 28, -2), iz(14, 19, 28, -2)};
        e.generator_labels = {"e_8", "e_10", "e_16"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Q_17T";
        e.poly = "x^3*y + y^5*z + z^2";
        e.vars = {"x", "y", "z"};
        e.pinned_gen = {fr(1, 30), fr(27, 30), fr(15, 30)};
        e.group_order = 30;
        e.chat = fr(6, 5);
        e.sector_mus = {21, 1, 9};
        e.dim = 17;
        e.mirror_dim = 17;
        e.correlators = {pr("e_9", "e_15", "e_15", Rational(1)),
                         pr("e_9", "y^4 e_10", "y^4 e_20", fr(-1, 5)),
                         cc(1, 19, 19), cc(3, 7, 29), cc(3, 17, 19), cc(5, 5, 29),
                         cc(5, 7, 27), cc(5, 15, 19), cc(5, 17, 17), cc(7, 7, 25),
                         cc(7, 13, 19), cc(7, 15, 17),
                         iz(1, 1, 7, -3), iz(1, 3, 5, -3), iz(3, 3, 3, -3)};
        e.generator_labels = {"e_19", "e_7", "y^4 e_10"};
        e.expected_status = MirrorStatus::Conditional;
        e.expect_hypotheses = true;
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "S_16";
        e.poly = "x^2*z + y*z^2 + x*y^4";
        e.vars = {"x", "y", "z"};
        e.group_order = 17;
        e.chat = fr(21, 17);
        e.sector_mus = {16};
        e.dim = 16;
        e.mirror_dim = 16;
        e.correlators = {cc(2, 8, 8), cc(3, 7, 8), cc(4, 6, 8), cc(5, 6, 7),
                         cc(6, 14, 15), cc(7, 13, 15), cc(8, 12, 15), cc(8, 13, 14),
                         iz(4, 7, 7, -2), iz(7, 14, 14, -2), iz(5, 5, 8, -2),
                         iz(5, 15, 15, -2), iz(6, 6, 6, -4)};
        e.generator_labels = {"e_7", "e_8", "e_6"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "S_17";
        e.poly = "x^2*z + y*z^2 + y^6";
        e.vars = {"x", "y", "z"};
        e.group_order = 24;
        e.chat = fr(5, 4);
        e.sector_mus = {17, 5, 7};
        e.dim = 21;
        e.mirror_dim = 21;
        e.correlators = {pr("e_1", "z e_12", "z e_12", fr(-1, 2)),
                         cc(2, 8, 15), cc(3, 7, 15), cc(3, 8, 14), cc(4, 8, 13),
                         cc(5, 7, 13), cc(7, 8, 10), cc(7, 20, 22), cc(8, 8, 9),
                         cc(8, 19, 22), cc(8, 20, 21), cc(13, 14, 22), cc(13, 15, 21),
                         cc(14, 15, 20), cc(15, 15, 19),
                         iz(4, 7, 14, -2), iz(5, 5, 15, -2), iz(5, 22, 22, -2),
                         iz(7, 7, 11, -2), iz(7, 21, 21, -2), iz(14, 14, 21, -2)};
        e.generator_labels = {"e_8", "e_13", "e_7"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "S_17T";
        e.poly = "x^6*z + z^2*y + y^2";
        e.vars = {"x", "y", "z"};
        e.pinned_gen = {fr(1, 24), fr(12, 24), fr(18, 24)};
        e.group_order = 24;
        e.chat = fr(5, 4);
        e.sector_mus = {21, 1, 3};
        e.dim = 17;
        e.mirror_dim = 17;
        e.correlators = {pr("e_3", "z e_4", "z e_20", fr(-1, 2)),
                         pr("e_3", "z e_8", "z e_16", fr(-1, 2)),
                         pr("e_3", "z e_12", "z e_12", fr(-1, 2)),
                         cc(1, 7, 19), cc(5, 7, 15), cc(7, 7, 13), cc(7, 9, 11),
                         cc(5, 11, 11), cc(1, 11, 15), iz(1, 1, 1, -6)};
        e.generator_labels = {"e_7", "e_1", "z e_4"};
        e.expected_status = MirrorStatus::Conditional;
        e.expect_hypotheses = true;
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Q_2_0";
        e.poly = "x^3 + y*z^2 + x*y^4";
        e.vars = {"x", "y", "z"};
        e.pinned_gen = {fr(8, 24), fr(22, 24), fr(1, 24)};
        e.group_order = 24;
        e.chat = fr(7, 6);
        e.sector_mus = {14, 10, 2};
        e.dim = 17;
        e.mirror_dim = 17;
        e.correlators = {pr("e_10", "y^3 e_12", "y^3 e_12", fr(-1, 4)),
                         cc(1, 11, 22), cc(4, 7, 23), cc(4, 8, 22), cc(4, 11, 19),
                         cc(5, 7, 22), cc(7, 7, 20), cc(7, 8, 19), cc(7, 11, 16),
                         iz(1, 2, 7, -2)};
        e.generator_labels = {"e_11", "e_7", "e_22"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Q_2_0T";
        e.poly = "x^3*y + y^4*z + z^2";
        e.vars = {"x", "y", "z"};
        e.group_order = 24;
        e.chat = fr(7, 6);
        e.sector_mus = {17, 1, 7};
        e.dim = 14;
        e.mirror_dim = 14;
        e.correlators = {pr("e_1", "y^3 e_8", "y^3 e_16", fr(-1, 4)),
                         cc(3, 11, 11), cc(5, 9, 11), cc(7, 9, 9), cc(9, 19, 21),
                         cc(11, 17, 21), cc(11, 19, 19),
                         iz(7, 7, 11, -3), iz(7, 21, 21, -3)};
        e.generator_labels = {"e_9", "e_11", "y^3 e_8"};
        e.expected_status = MirrorStatus::Conditional;
        e.expect_hypotheses = true;
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "S_1_0";
        e.poly = "x^2*z + y*z^2 + y^5";
        e.vars = {"x", "y", "z"};
        e.pinned_gen = {fr(1, 20), fr(4, 20), fr(18, 20)};
        e.group_order = 20;
        e.chat = fr(6, 5);
        e.sector_mus = {14, 6, 4};
        e.dim = 17;
        e.mirror_dim = 17;
        e.correlators = {pr("e_6", "z e_10", "z e_10", fr(-1, 2)),
                         cc(1, 7, 18), cc(1, 8, 17), cc(1, 9, 16), cc(2, 7, 17),
                         cc(2, 8, 16), cc(3, 7, 16), cc(7, 7, 12), cc(7, 8, 11),
                         iz(1, 1, 4, -2), iz(1, 2, 3, -2), iz(2, 2, 2, -2),
                         iz(8, 9, 9, -2)};
        e.generator_labels = {"e_16", "e_1", "e_7"};
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "S_1_0T";
        e.poly = "x^2 + y*z^5 + x*y^2";
        e.vars = {"x", "y", "z"};
        e.group_order = 20;
        e.chat = fr(6, 5);
        e.sector_mus = {17, 1, 3};
        e.dim = 14;
        e.mirror_dim = 14;
        e.correlators = {pr("e_1", "y e_4", "y e_16", fr(-1, 2)),
                         pr("e_1", "y e_8", "y e_12", fr(-1, 2)),
                         cc(3, 9, 9), cc(5, 7, 9), cc(7, 17, 17), cc(9, 15, 17),
                         iz(7, 7, 7, -5)};
        e.generator_labels = {"y e_8", "e_9", "e_7"};
        e.expected_status = MirrorStatus::Conditional;
        e.expect_hypotheses = true;
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "Z_1_0";
        e.poly = "x^3*y + y^7";
        e.vars = {"x", "y"};
        e.pinned_gen = {fr(1, 21), fr(18, 21)};
        e.group_order = 21;
        e.chat = fr(8, 7);
        e.sector_mus = {15, 6};
        e.dim = 19;
        e.mirror_dim = 19;
        e.correlators = {pr("e_6", "x^2 e_0", "x^2 e_0", fr(-1, 3)),
                         cc(1, 13, 13), cc(2, 5, 20), cc(2, 12, 13), cc(3, 5, 19),
                         cc(3, 4, 20), cc(3, 11, 13), cc(3, 12, 12), cc(4, 4, 19),
                         cc(4, 5, 18), cc(4, 10, 13), cc(4, 11, 12), cc(5, 5, 17),
                         cc(5, 9, 13), cc(5, 10, 12), cc(5, 11, 11),
                         iz(1, 1, 4, -3), iz(1, 2, 3, -3), iz(2, 2, 2, -3)};
        e.generator_labels = {"e_13", "e_5"};
        L.push_back(std::move(e));
    }

    // sums of simple singularities, verified factorwise
    auto tensor = [&](const std::string& name, const std::string& poly,
                      std::vector<std::string> vars, std::vector<std::string> factors,
                      const Rational& chat, size_t dim) {
        CorpusEntry e;
        e.name = name;
        e.poly = poly;
        e.vars = std::move(vars);
        e.kind = EntryKind::Tensor;
        e.factors = std::move(factors);
        e.chat = chat;
        e.dim = dim;
        e.mirror_dim = dim;
        L.push_back(std::move(e));
    };
    tensor("Q_10", "x^2*z + y^3 + z^4", {"x", "y", "z"}, {"x^2*z + z^4", "y^3"}, fr(13, 12), 14);
    tensor("Q_12", "x^2*z + y^3 + z^5", {"x", "y", "z"}, {"x^2*z + z^5", "y^3"}, fr(17, 15), 18);
    tensor("U_12", "x^3 + y^3 + z^4", {"x", "y", "z"}, {"x^3", "y^3", "z^4"}, fr(7, 6), 12);
    tensor("W_12", "x^4 + y^5", {"x", "y"}, {"x^4", "y^5"}, fr(11, 10), 12);
    tensor("E_12", "x^3 + y^7", {"x", "y"}, {"x^3", "y^7"}, fr(22, 21), 12);
    tensor("E_14", "x^3 + y^8", {"x", "y"}, {"x^3", "y^8"}, fr(13, 12), 14);
    tensor("E_18", "x^3 + y^10", {"x", "y"}, {"x^3", "y^10"}, fr(17, 15), 18);
    tensor("E_20", "x^3 + y^11", {"x", "y"}, {"x^3", "y^11"}, fr(38, 33), 20);
    tensor("U_16", "x^3 + x*z^2 + y^5", {"x", "y", "z"}, {"x^3 + x*z^2", "y^5"}, fr(19, 15), 20);
    tensor("W_18", "x^4 + y^7", {"x", "y"}, {"x^4", "y^7"}, fr(17, 14), 18);
    tensor("Q_16", "x^3 + y*z^2 + y^7", {"x", "y", "z"}, {"x^3", "y*z^2 + y^7"}, fr(25, 21), 26);
    tensor("Q_18", "x^3 + y*z^2 + y^8", {"x", "y", "z"}, {"x^3", "y*z^2 + y^8"}, fr(29, 24), 30);

    // one-parameter families with no graded Milnor-ring mirror
    {
        CorpusEntry e;
        e.name = "J_3_0";
        e.poly = "x^3 + b*x^2*y^3 + y^9";
        e.vars = {"x", "y"};
        e.params = {{"b", Rational(1)}};
        e.maximal_group = false;
        e.kind = EntryKind::Nonexistence;
        e.group_order = 9;
        e.chat = fr(10, 9);
        e.sector_mus = {16, 2};
        e.dim = 8;
        e.correlators = {cc(2, 4, 4)};
        e.param_correlators = [](const std::map<std::string, Rational>& p) {
            Rational b = p.at("b");
            Rational den = 4 * b * b * b + 27;
            return std::vector<ExpectedCorrelator>{
                pr("e_1", "y^5 e_0", "y^5 e_0", 2 * b * b / (9 * den)),
                pr("e_1", "y^5 e_0", "x*y^2 e_0", Rational(1) / den),
                pr("e_1", "x*y^2 e_0", "x*y^2 e_0", -2 * b / (3 * den))};
        };
        e.expected_status = MirrorStatus::NoMilnorRing;
        e.expected_alpha = fr(1, 22);
        e.expected_mu_obstruction = fr(168, 25);
        L.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "W_1_0";
        e.poly = "x^4 + a*x^2*y^3 + y^6";
        e.vars = {"x", "y"};
        e.params = {{"a", Rational(1)}};
        e.maximal_group = false;
        e.kind = EntryKind::Nonexistence;
        e.group_order = 12;
        e.chat = fr(7, 6);
        e.sector_mus = {15, 3, 5};
        e.dim = 9;
        e.correlators = {cc(2, 2, 9), cc(7, 9, 9)};
        e.param_correlators = [](const std::map<std::string, Rational>& p) {
            Rational a = p.at("a");
            return std::vector<ExpectedCorrelator>{
                pr("e_1", "x*y^2 e_0", "x*y^2 e_0", Rational(1) / (24 - 6 * a * a))};
        };
        e.expected_status = MirrorStatus::NoMilnorRing;
        e.expected_alpha = fr(1, 29);
        e.expected_mu_obstruction = fr(969, 128);
        L.push_back(std::move(e));
    }

    return L;
}

} // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> L = build_corpus();
    return L;
}

const CorpusEntry* corpus_find(const std::string& name) {
    for (auto& e : corpus())
        if (e.name == name) return &e;
    return nullptr;
}

Polynomial substitute_params(const Polynomial& W, const std::map<std::string, Rational>& params) {
    std::vector<std::string> keep;
    std::vector<int> remap(W.nvars(), -1);
    for (int i = 0; i < W.nvars(); ++i) {
        if (params.count(W.vars[i])) continue;
        remap[i] = (int)keep.size();
        keep.push_back(W.vars[i]);
    }
    Polynomial out(keep);
    for (auto& m : W.input_order) {
        auto it = W.terms.find(m);
        if (it == W.terms.end()) continue;
        Rational c = it->second;
        Monomial mm;
        for (auto& [v, e] : m.exps) {
            auto p = params.find(W.vars[v]);
            if (p != params.end()) {
                for (long i = 0; i < e; ++i) c *= p->second;
            } else {
                mm.set(remap[v], e);
            }
        }
        if (c != 0) out.add_term(mm, c);
    }
    return out;
}

Polynomial instantiate(const CorpusEntry& e, const std::map<std::string, Rational>& overrides) {
    std::map<std::string, Rational> params = e.params;
    for (auto& [k, v] : overrides) {
        if (!params.count(k)) throw std::runtime_error("unknown parameter '" + k + "'");
        params[k] = v;
    }
    std::vector<std::string> order = e.vars;
    for (auto& [k, v] : params) order.push_back(k);
    Polynomial W = parse_polynomial(e.poly, order);
    if (params.empty()) return W;
    return substitute_params(W, params);
}

void run_pipeline(PipelineResult& out, const Polynomial& W, bool maximal_group,
                  const std::vector<Rational>& pinned_gen) {
    out.W = W;
    out.ws = solve_weights(W);
    if (maximal_group) {
        out.G = maximal_symmetry_group(W);
    } else {
        out.G = group_from_generators({grading_element(out.ws)});
    }
    std::optional<PhaseVector> pin;
    if (!pinned_gen.empty()) pin = PhaseVector{pinned_gen};
    out.S = build_state_space(W, out.ws, out.G, pin);
    out.sys = compute_correlators(out.S);
    out.sys.S = &out.S;
    out.res = resolve_unknowns(out.sys);
}

MirrorVerdict verify_mirror_tensor(const Polynomial& W, const std::vector<Polynomial>& factors,
                                   bool all_signs) {
    MirrorVerdict V;
    V.tensor_path = true;
    Polynomial WT = transpose_potential(W);
    WeightSystem wsT = solve_weights(WT);
    QuotientRing RT = milnor_ring(WT, wsT.q);
    V.dim_B = RT.mu;

    size_t dim_a = 1;
    int worst = 0;
    std::set<std::string> hyp;
    std::vector<std::unique_ptr<PipelineResult>> pipes;
    std::optional<FrobeniusAlgebra> T;

    for (auto& f : factors) {
        auto P = std::make_unique<PipelineResult>();
        run_pipeline(*P, f, true);
        MirrorVerdict fv = verify_mirror(P->W, P->S, P->sys, P->res, {}, all_signs);
        V.sign_assignments_tested += fv.sign_assignments_tested;
        dim_a *= fv.dim_A;
        int rank;
        switch (fv.status) {
            case MirrorStatus::Isomorphic: rank = 0; break;
            case MirrorStatus::IsomorphicUpToSignChoice: rank = 1; break;
            case MirrorStatus::Conditional: rank = 2; break;
            default: rank = 3; break;
        }
        if (rank == 3) {
            V.status = MirrorStatus::Undetermined;
            V.detail = "summand " + f.str() + ": " + fv.detail;
            return V;
        }
        worst = std::max(worst, rank);
        hyp.insert(fv.hypotheses.begin(), fv.hypotheses.end());

        auto asg = sign_assignments(P->sys, P->res, true);
        FrobeniusAlgebra A =
            build_algebra(P->sys, P->res, asg.empty() ? std::map<std::string, Rational>{} : asg[0]);
        if (!T) T = A;
        else T = tensor_product(*T, A);
        pipes.push_back(std::move(P));
    }

    V.dim_A = dim_a;
    if (V.dim_A != V.dim_B) {
        V.status = MirrorStatus::Undetermined;
        V.detail = "dimension mismatch";
        return V;
    }

    // degrees of the combined algebra must match the target Milnor ring
    FrobeniusAlgebra B = milnor_algebra(RT);
    std::multiset<Rational> da(T->degrees.begin(), T->degrees.end());
    std::multiset<Rational> db(B.degrees.begin(), B.degrees.end());
    if (da != db) {
        V.status = MirrorStatus::Undetermined;
        V.detail = "degree spectrum mismatch";
        return V;
    }
    auto fc = check_frobenius(*T);
    if (!fc.ok) {
        V.status = MirrorStatus::Undetermined;
        V.detail = "combined algebra: " + fc.witness;
        return V;
    }

    V.hypotheses.assign(hyp.begin(), hyp.end());
    if (worst == 0) V.status = MirrorStatus::Isomorphic;
    else if (worst == 1) V.status = MirrorStatus::IsomorphicUpToSignChoice;
    else V.status = MirrorStatus::Conditional;
    return V;
}

namespace {

std::string triple_str(const ExpectedCorrelator& c) {
    return "<" + c.labels[0] + ", " + c.labels[1] + ", " + c.labels[2] + ">";
}

} // namespace

EntryResult run_entry(const CorpusEntry& e, const std::map<std::string, Rational>& param_overrides,
                      bool all_signs) {
    EntryResult r;
    r.name = e.name;
    auto fail = [&](const std::string& m) {
        r.ok = false;
        r.failures.push_back(m);
    };

    try {
        std::map<std::string, Rational> params = e.params;
        for (auto& [k, v] : param_overrides) params[k] = v;
        Polynomial W = instantiate(e, param_overrides);

        PipelineResult P;
        run_pipeline(P, W, e.maximal_group, e.pinned_gen);

        if (e.group_order && P.G.order() != e.group_order)
            fail("group order " + std::to_string(P.G.order()) + ", expected " +
                 std::to_string(e.group_order));
        if (e.chat != 0 && P.ws.central_charge != e.chat)
            fail("central charge " + to_string(P.ws.central_charge) + ", expected " +
                 to_string(e.chat));
        if (e.dim && P.S.basis.size() != e.dim)
            fail("state space dimension " + std::to_string(P.S.basis.size()) + ", expected " +
                 std::to_string(e.dim));

        if (!e.sector_mus.empty()) {
            std::set<size_t> got, want(e.sector_mus.begin(), e.sector_mus.end());
            for (auto& sec : P.S.sectors)
                if (sec.fix.dimension() > 0) got.insert(sec.ring.mu);
            if (got != want) {
                std::ostringstream os;
                os << "sector milnor numbers {";
                for (auto v : got) os << " " << v;
                os << " }, expected {";
                for (auto v : want) os << " " << v;
                os << " }";
                fail(os.str());
            }
        }

        auto index_of = [&](const std::string& lbl) {
            for (size_t i = 0; i < P.S.basis.size(); ++i)
                if (P.S.basis[i].label == lbl) return (int)i;
            return -1;
        };
        std::vector<ExpectedCorrelator> expected = e.correlators;
        if (e.param_correlators) {
            auto extra = e.param_correlators(params);
            expected.insert(expected.end(), extra.begin(), extra.end());
        }
        for (auto& c : expected) {
            std::array<int, 3> t;
            bool resolved = true;
            for (int i = 0; i < 3; ++i) {
                t[i] = index_of(c.labels[i]);
                if (t[i] < 0) {
                    fail("no basis element labelled '" + c.labels[i] + "'");
                    resolved = false;
                }
            }
            if (!resolved) continue;
            const CorrelatorEntry* ent = P.sys.find(t);
            if (!ent || ent->value.kind != CorrelatorValue::Known) {
                fail("correlator " + triple_str(c) + " is not determined");
                continue;
            }
            if (ent->value.value != c.value)
                fail("correlator " + triple_str(c) + " = " + to_string(ent->value.value) +
                     ", expected " + to_string(c.value));
            if (c.axiom != Axiom::None && ent->axiom != c.axiom)
                fail("correlator " + triple_str(c) + " determined by the wrong rule");
        }

        switch (e.kind) {
            case EntryKind::Direct: {
                r.verdict = verify_mirror(P.W, P.S, P.sys, P.res, e.generator_labels, all_signs);
                break;
            }
            case EntryKind::Tensor: {
                std::vector<Polynomial> fs;
                for (auto& t : e.factors) fs.push_back(parse_polynomial(t));
                r.verdict = verify_mirror_tensor(W, fs, all_signs);
                break;
            }
            case EntryKind::Nonexistence: {
                auto asg = sign_assignments(P.sys, P.res, true);
                FrobeniusAlgebra A = build_algebra(
                    P.sys, P.res, asg.empty() ? std::map<std::string, Rational>{} : asg[0]);
                auto sets = find_generators(A, A.dim);
                if (sets.empty()) {
                    fail("no generating set found");
                    break;
                }
                std::vector<Rational> degs;
                for (int i : sets[0]) degs.push_back(A.degrees[i] * (long)P.G.order());
                Rational top = 2 * P.ws.central_charge * (long)P.G.order();
                r.verdict = milnor_nonexistence_check(A.dim, degs, top);
                if (e.expected_alpha && r.verdict.alpha != e.expected_alpha)
                    fail("alpha " + (r.verdict.alpha ? to_string(*r.verdict.alpha) : "-") +
                         ", expected " + to_string(*e.expected_alpha));
                if (e.expected_mu_obstruction && r.verdict.mu != e.expected_mu_obstruction)
                    fail("mu " + (r.verdict.mu ? to_string(*r.verdict.mu) : "-") + ", expected " +
                         to_string(*e.expected_mu_obstruction));
                break;
            }
        }

        if (r.verdict.status != e.expected_status)
            fail("verdict " + to_string(r.verdict.status) + ", expected " +
                 to_string(e.expected_status) +
                 (r.verdict.detail.empty() ? "" : " (" + r.verdict.detail + ")"));
        if (e.kind != EntryKind::Nonexistence) {
            if (e.mirror_dim &&
                (r.verdict.dim_A != e.mirror_dim || r.verdict.dim_B != e.mirror_dim))
                fail("mirror dimensions " + std::to_string(r.verdict.dim_A) + "/" +
                     std::to_string(r.verdict.dim_B) + ", expected " +
                     std::to_string(e.mirror_dim));
            if (e.expect_hypotheses != !r.verdict.hypotheses.empty())
                fail(e.expect_hypotheses ? "expected nonzero hypotheses, got none"
                                         : "unexpected hypotheses");
        }
    } catch (const std::exception& ex) {
        fail(std::string("exception: ") + ex.what());
    }
    return r;
}

} // namespace fjrw

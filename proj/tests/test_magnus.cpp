#include <catch2/catch_amalgamated.hpp>

#include "jkl/lie.hpp"
#include "jkl/parse.hpp"
#include "jkl/series.hpp"
#include "test_util.hpp"

using namespace jkl;

namespace {
Word W(const std::string& s, int n = 3) { return parse_word(s, n); }
}  // namespace

TEST_CASE("magnus expansion basics") {
    CHECK(magnus_expand(Word(), 3, 3) == TruncatedSeries::one(3, 3));

    // [x1,x2] at D=2: multiply (1+X1)(1+X2)(1-X1+X1^2)(1-X2+X2^2) and truncate
    TruncatedSeries s = magnus_expand(W("[x1,x2]"), 3, 2);
    TruncatedSeries want = TruncatedSeries::one(3, 2);
    want.add(mono_from_indices({1, 2}), 1);
    want.add(mono_from_indices({2, 1}), -1);
    CHECK(s == want);

    // [[x1,x2],x1] at D=3
    TruncatedSeries s3 = magnus_expand(W("[[x1,x2],x1]"), 3, 3);
    TruncatedSeries want3 = TruncatedSeries::one(3, 3);
    want3.add(mono_from_indices({1, 2, 1}), 2);
    want3.add(mono_from_indices({2, 1, 1}), -1);
    want3.add(mono_from_indices({1, 1, 2}), -1);
    CHECK(s3 == want3);
}

TEST_CASE("expansion is multiplicative") {
    testing::Rng rng(11);
    for (int t = 0; t < 250; ++t) {
        int n = testing::uniform(rng, 2, 4);
        int d = testing::uniform(rng, 1, 4);
        Word u = testing::random_word(rng, n, 6);
        Word v = testing::random_word(rng, n, 6);
        CHECK(magnus_expand(u * v, n, d) == magnus_expand(u, n, d) * magnus_expand(v, n, d));
    }
}

TEST_CASE("word expansions are units") {
    testing::Rng rng(14);
    for (int t = 0; t < 200; ++t) {
        int n = testing::uniform(rng, 2, 4);
        Word w = testing::random_word(rng, n, 8);
        CHECK(magnus_expand(w, n, 3).coeff(kEmptyMono) == 1);
    }
}

TEST_CASE("filtration degree") {
    CHECK(filtration_degree(W("x1"), 3, 4) == 1);
    CHECK(filtration_degree(W("[x1,x2]"), 3, 4) == 2);
    CHECK(filtration_degree(W("[[x1,x2],x1]"), 3, 4) == 3);
    CHECK(!filtration_degree(Word(), 3, 4).has_value());
    // weight-k brackets lie in F^(k)
    testing::Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        int n = testing::uniform(rng, 2, 4);
        Word w = testing::random_word(rng, n, 5);
        Word u = testing::random_word(rng, n, 5);
        Word c = word_commutator(w, u);
        auto d = filtration_degree(c, n, 4);
        CHECK((!d || *d >= 2));
        Word c2 = word_commutator(c, testing::random_word(rng, n, 4));
        auto d2 = filtration_degree(c2, n, 4);
        CHECK((!d2 || *d2 >= 3));
    }
}

TEST_CASE("leading terms") {
    HomogeneousTensor t = leading_term(W("[x1,x2]"), 3, 2);
    HomogeneousTensor want{3, 2, {}};
    want.add(mono_from_indices({1, 2}), 1);
    want.add(mono_from_indices({2, 1}), -1);
    CHECK(t == want);

    HomogeneousTensor t3 = leading_term(W("[[x1,x2],x1]"), 3, 3);
    HomogeneousTensor want3{3, 3, {}};
    want3.add(mono_from_indices({1, 2, 1}), 2);
    want3.add(mono_from_indices({2, 1, 1}), -1);
    want3.add(mono_from_indices({1, 1, 2}), -1);
    CHECK(t3 == want3);

    CHECK_THROWS_AS(leading_term(W("x1"), 3, 2), error);
}

TEST_CASE("dsw projection") {
    auto roundtrip = [&](const std::string& s, int a, int b, int c) {
        Lie3 out = dsw_left_normed(leading_term(W(s), 3, 3));
        REQUIRE(out.size() == 1);
        CHECK(out.begin()->first == std::array<int, 3>{a, b, c});
        CHECK(out.begin()->second == 1);
    };
    roundtrip("[[x1,x2],x1]", 1, 2, 1);
    roundtrip("[[x1,x2],x3]", 1, 2, 3);

    HomogeneousTensor bad{3, 3, {}};
    bad.add(mono_from_indices({1, 2, 3}), 1);
    CHECK_THROWS_AS(dsw_left_normed(bad), error);

    // rho multiplies genuine degree-3 leading terms by 3
    testing::Rng rng(13);
    int cases = 0;
    while (cases < 200) {
        int n = testing::uniform(rng, 2, 4);
        Word w = word_commutator(word_commutator(testing::random_word(rng, n, 3),
                                                 testing::random_word(rng, n, 3)),
                                 testing::random_word(rng, n, 3));
        auto d = filtration_degree(w, n, 3);
        if (!d || *d != 3) continue;
        CHECK(is_lie_degree3(leading_term(w, n, 3)));
        ++cases;
    }
}

TEST_CASE("l2_to_wedge") {
    ModulePtr w2h = wedge2(std_module(3));
    ModuleElement e = l2_to_wedge(leading_term(W("[x1,x2]"), 3, 2), w2h);
    CHECK(e == basis_element(w2h, w2h->wedge_ord({0, 1}).first));

    HomogeneousTensor sym{3, 2, {}};
    sym.add(mono_from_indices({1, 2}), 1);
    sym.add(mono_from_indices({2, 1}), 1);
    CHECK_THROWS_AS(l2_to_wedge(sym, w2h), error);

    CHECK(l2_to_wedge(HomogeneousTensor{3, 2, {}}, w2h).is_zero());

    // round trip e_i ^ e_j for all i<j
    for (int n = 2; n <= 4; ++n) {
        ModulePtr w2 = wedge2(std_module(n));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Word c = word_commutator(Word::generator(i), Word::generator(j));
                CHECK(l2_to_wedge(leading_term(c, n, 2), w2) ==
                      basis_element(w2, w2->wedge_ord({i - 1, j - 1}).first));
            }
    }
}

TEST_CASE("l3_to_quotient") {
    ModulePtr l3q = lie3_quotient_module(3);
    // [[x1,x2],x1] -> class of (e1^e2)(x)e1 (a kept coordinate)
    Lie3 t;
    lie3_add(t, 1, 2, 1, Rational(1));
    ModuleElement v = l3_to_quotient(t, l3q);
    REQUIRE(v.coords.size() == 1);
    CHECK(v.module->basis_name(v.coords[0].first) == "[(1^2)⊗1]");
    CHECK(v.coords[0].second == 1);

    // the Jacobi sum [[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2] dies
    Lie3 jac;
    lie3_add(jac, 1, 2, 3, Rational(1));
    lie3_add(jac, 2, 3, 1, Rational(1));
    lie3_add(jac, 3, 1, 2, Rational(1));
    CHECK(l3_to_quotient(jac, l3q).is_zero());

    // (e1^e2)(x)e3 is eliminated: its class re-expands on the kept basis
    Lie3 elim;
    lie3_add(elim, 1, 2, 3, Rational(1));
    Lie3 rhs;  // (e1^e3)(x)e2 - (e2^e3)(x)e1
    lie3_add(rhs, 1, 3, 2, Rational(1));
    lie3_add(rhs, 2, 3, 1, Rational(-1));
    CHECK(l3_to_quotient(elim, l3q) == l3_to_quotient(rhs, l3q));

    // dim span of all left-normed bracket classes is the Witt number
    for (int n = 3; n <= 6; ++n) {
        ModulePtr q = lie3_quotient_module(n);
        std::vector<SparseVec> all;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c) {
                    Lie3 one;
                    lie3_add(one, a, b, c, Rational(1));
                    all.push_back(l3_to_quotient(one, q).coords);
                }
        CHECK(static_cast<int64_t>(rank_of(all)) == (int64_t(n) * n * n - n) / 3);
        CHECK(q->dim() == (int64_t(n) * n * n - n) / 3);
    }
}

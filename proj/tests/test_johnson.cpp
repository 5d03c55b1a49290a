#include <catch2/catch_amalgamated.hpp>

#include "jkl/johnson.hpp"
#include "jkl/parse.hpp"
#include "test_util.hpp"

using namespace jkl;

namespace {
AutWord A(const std::string& s, int n = 3) { return parse_autword(s, n); }
}  // namespace

TEST_CASE("tau on generators") {
    JohnsonCtx ctx(3);
    CHECK(tau(ctx, A("g[1,2]")) == ctx.u_elem(1, 2, 2));
    CHECK(tau(ctx, A("g[2,1]")) == ctx.u_elem(2, 1, 1));  // = -(e1^e2)(x)e1*
    CHECK(tau(ctx, A("f[1,2,3]")) == ctx.u_elem(1, 2, 3));
    CHECK(tau(ctx, A("[g[1,2],g[2,1]]")).is_zero());
    CHECK_THROWS_WITH(tau(ctx, A("T[1,2]")),
                      Catch::Matchers::ContainsSubstring("not an IA automorphism"));
}

TEST_CASE("tau2 values") {
    JohnsonCtx ctx(3);
    ModuleElement v = tau2(ctx, A("[g[1,2],g[2,1]]"));
    // class((e1^e2)(x)e1)(x)e1* + class((e1^e2)(x)e2)(x)e2*
    ModuleElement want = zero_element(ctx.Tau2);
    {
        const ModulePtr& inner = ctx.L3Q->children()[0];
        for (int r = 1; r <= 2; ++r) {
            SparseVec child{{inner->tensor_ord(0, r - 1), Rational(1)}};
            for (const auto& [o, c] : ctx.L3Q->quotient_project(child))
                want += basis_element(ctx.Tau2, ctx.Tau2->tensor_ord(o, r - 1), c);
        }
    }
    CHECK(v == want);
    CHECK(v.str() == "[(1^2)⊗1]⊗1* + [(1^2)⊗2]⊗2*");

    CHECK(tau2(ctx, AutWord(3)).is_zero());
    CHECK(tau2(ctx, A("[g[1,2],g[1,3]]")).is_zero());
    CHECK_THROWS_WITH(tau2(ctx, A("g[1,2]")),
                      Catch::Matchers::ContainsSubstring("not in ker tau"));
}

TEST_CASE("inner embeddings") {
    for (int n : {3, 4}) {
        JohnsonCtx ctx(n);
        for (int k = 1; k <= n; ++k)
            CHECK(tau(ctx, inner_autword(n, k)) == ctx.inner_embed(k));

        std::vector<SparseVec> images;
        for (int k = 1; k <= n; ++k) images.push_back(ctx.inner_embed(k).coords);
        CHECK(rank_of(images) == static_cast<size_t>(n));

        // conjugation by [x_j, x_k] maps to inner_embed2(j,k) under tau2
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                AutWord conj = aut_commutator(inner_autword(n, j), inner_autword(n, k));
                CHECK(tau2(ctx, conj) == ctx.inner_embed2(j, k));
            }
    }
}

TEST_CASE("outer variants") {
    JohnsonCtx ctx(3);
    CHECK(tau_bar(ctx, A("g[1,2]*g[1,3]")).is_zero());
    CHECK(!tau_bar(ctx, A("g[1,2]")).is_zero());
    AutWord conj12 = aut_commutator(inner_autword(3, 1), inner_autword(3, 2));
    CHECK(tau2_bar(ctx, conj12).is_zero());
}

TEST_CASE("abelian cycles") {
    JohnsonCtx ctx(3);
    ModuleElement w1 = abelian_cycle_image(ctx, A("g[1,2]*g[1,3]"), A("g[2,3]"));
    ModuleElement expect = wedge_pair(ctx.W2U, ctx.u_elem(1, 2, 2) + ctx.u_elem(1, 3, 3),
                                      ctx.u_elem(2, 3, 3));
    CHECK(w1 == expect);

    CHECK(abelian_cycle_image(ctx, A("g[1,2]"), A("g[1,2]")).is_zero());
    CHECK_THROWS_WITH(abelian_cycle_image(ctx, A("g[1,2]"), A("g[2,1]")),
                      Catch::Matchers::ContainsSubstring("do not commute"));

    JohnsonCtx ctx4(4);
    ModuleElement w2 =
        abelian_cycle_image(ctx4, parse_autword("g[1,3]", 4), parse_autword("g[2,4]", 4));
    CHECK(w2 == wedge_pair(ctx4.W2U, ctx4.u_elem(1, 3, 3), ctx4.u_elem(2, 4, 4)));
}

TEST_CASE("the worked tau2 contraction values") {
    for (int n : {3, 4, 5}) {
        JohnsonCtx ctx(n);
        AutWord c = aut_commutator(single(n, AutLetter::g(1, 2)), single(n, AutLetter::g(2, 1)));
        ModuleElement lifted = lift_tau2(ctx, tau2(ctx, c));
        ModuleElement e12 = basis_element(ctx.W2H, ctx.W2H->wedge_ord({0, 1}).first);
        CHECK(map_contract3(ctx, map_alt(ctx, lifted)) == e12 * Rational(6));

        ModuleElement twisted = map_wedge12(ctx, apply_eij({1, n}, map_alt(ctx, lifted)));
        int32_t ord = ctx.Lift->tensor_ord(ctx.Lift->children()[0]->tensor_ord(0, 0), n - 1);
        CHECK(twisted == basis_element(ctx.Lift, ord) * Rational(-4));
    }
}

TEST_CASE("the worked cycle detection values") {
    for (int n : {3, 4, 5, 6}) {
        JohnsonCtx ctx(n);
        AutWord u = single(n, AutLetter::g(1, 2)) * single(n, AutLetter::g(1, n));
        AutWord v = single(n, AutLetter::g(2, n));
        ModuleElement cyc1 = abelian_cycle_image(ctx, u, v);
        ModuleElement e12 = basis_element(ctx.W2H, 0);
        CHECK(map_g1(ctx, map_f(ctx, cyc1)) == e12 * Rational(2));
        if (n > 3) {
            ModuleElement cyc2 = abelian_cycle_image(ctx, single(n, AutLetter::g(1, 3)),
                                                     single(n, AutLetter::g(2, n)));
            CHECK(map_g2(ctx, map_f(ctx, cyc2)) == e12 * Rational(2));
            CHECK(map_g1(ctx, map_f(ctx, cyc2)).is_zero());
        }
    }
}

TEST_CASE("named map domain checks") {
    JohnsonCtx ctx(3);
    ModuleElement wrong = basis_element(ctx.U, 0);
    CHECK_THROWS_AS(map_f1(ctx, wrong), error);
    CHECK_THROWS_AS(named_map(ctx, "nosuch", wrong), error);
    // f = f2 after f1
    testing::Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        ModuleElement v = testing::random_element(rng, ctx.W2U, 4);
        CHECK(map_f(ctx, v) == map_f2(ctx, map_f1(ctx, v)));
        CHECK(named_map(ctx, "f", v) == map_f(ctx, v));
    }
}

TEST_CASE("in_K") {
    CHECK(in_K(A("g[1,2]"), 1));
    CHECK(!in_K(A("g[1,2]"), 2));
    AutWord c = A("[g[1,2],g[2,1]]");
    CHECK(in_K(c, 2));
    CHECK(!in_K(c, 3));
    CHECK(in_K(A("[g[1,2],g[1,3]]"), 3));
    CHECK_THROWS_AS(in_K(c, 4), error);
}

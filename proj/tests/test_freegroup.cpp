#include <catch2/catch_amalgamated.hpp>

#include "jkl/aut.hpp"
#include "jkl/parse.hpp"
#include "jkl/word.hpp"
#include "test_util.hpp"

using namespace jkl;

TEST_CASE("word reduction") {
    CHECK(Word::reduce({1, -1}, 3).is_identity());
    CHECK(Word::reduce({1, 2, -2, 1}, 3) == Word::reduce({1, 1}, 3));
    Word w = Word::reduce({1, 2, -1, -2}, 3);
    CHECK(w.letters() == std::vector<int32_t>{1, 2, -1, -2});
    CHECK_THROWS_AS(Word::reduce({4}, 3), error);
}

TEST_CASE("word reduction is idempotent and confluent") {
    testing::Rng rng(202401);
    for (int t = 0; t < 300; ++t) {
        Word w = testing::random_word(rng, 4, 14);
        CHECK(Word::reduce(w.letters(), 4) == w);
    }
}

TEST_CASE("word commutator") {
    Word x1 = Word::generator(1), x2 = Word::generator(2);
    CHECK(word_commutator(x1, x2).letters() == std::vector<int32_t>{1, 2, -1, -2});
    CHECK(word_commutator(x1, x1).is_identity());
    // [[x1,x2],x1] expanded and reduced by hand: c x1 c^-1 x1^-1 with
    // c = x1 x2 x1^-1 x2^-1 concatenates without junction cancellation
    Word inner = word_commutator(x1, x2);
    CHECK(word_commutator(inner, x1).letters() ==
          std::vector<int32_t>{1, 2, -1, -2, 1, 2, 1, -2, -1, -1});
}

TEST_CASE("evaluate of Magnus generators") {
    Endomorphism g12 = evaluate(single(3, AutLetter::g(1, 2)));
    CHECK(g12.image(1) == Word::generator(1));
    CHECK(g12.image(2) == parse_word("x1*x2*x1^-1", 3));
    CHECK(g12.image(3) == Word::generator(3));

    Endomorphism f123 = evaluate(single(3, AutLetter::f(1, 2, 3)));
    CHECK(f123.image(1) == Word::generator(1));
    CHECK(f123.image(2) == Word::generator(2));
    CHECK(f123.image(3) == parse_word("x3*[x1,x2]", 3));

    // paper: [g12,g21] sends x_r to [[x1,x2],x_r] x_r for r in {1,2}
    AutWord c = aut_commutator(single(3, AutLetter::g(1, 2)), single(3, AutLetter::g(2, 1)));
    Endomorphism e = evaluate(c);
    for (int r : {1, 2})
        CHECK(e.image(r) ==
              word_commutator(word_commutator(Word::generator(1), Word::generator(2)),
                              Word::generator(r)) *
                  Word::generator(r));
    CHECK(e.image(3) == Word::generator(3));
}

TEST_CASE("compose") {
    Endomorphism id(3);
    Endomorphism g12 = evaluate(single(3, AutLetter::g(1, 2)));
    CHECK(compose(id, g12) == g12);
    CHECK(compose(g12, evaluate(single(3, AutLetter::g(1, 2)).inverted())).is_identity());

    Endomorphism both = compose(g12, evaluate(single(3, AutLetter::g(1, 3))));
    CHECK(both.image(2) == parse_word("x1*x2*x1^-1", 3));
    CHECK(both.image(3) == parse_word("x1*x3*x1^-1", 3));
}

TEST_CASE("abelianization matrix") {
    CHECK(is_IA(Endomorphism(3)));
    CHECK(is_IA(evaluate(single(3, AutLetter::g(1, 2)))));
    auto m = abelianization_matrix(evaluate(single(3, AutLetter::transvect(1, 2))));
    std::vector<std::vector<int64_t>> want{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}};
    CHECK(m == want);
}

TEST_CASE("evaluate is a monoid homomorphism") {
    testing::Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        int n = testing::uniform(rng, 2, 5);
        AutWord u = testing::random_magnus_word(rng, n, 6);
        AutWord v = testing::random_magnus_word(rng, n, 6);
        CHECK(evaluate(u * v) == compose(evaluate(u), evaluate(v)));
    }
}

TEST_CASE("closed-form inverse letter images") {
    // g_ij^-1: x_j -> x_i^-1 x_j x_i
    Endomorphism ginv = evaluate_letter(AutLetter::g(1, 2, true), 3);
    CHECK(ginv.image(2) == parse_word("x1^-1*x2*x1", 3));
    // f_ijk^-1: x_k -> x_k [x_j, x_i]
    Endomorphism finv = evaluate_letter(AutLetter::f(1, 2, 3, true), 3);
    CHECK(finv.image(3) == parse_word("x3*[x2,x1]", 3));
    Endomorphism tinv = evaluate_letter(AutLetter::transvect(1, 2, true), 3);
    CHECK(tinv.image(1) == parse_word("x1*x2^-1", 3));
}

TEST_CASE("formal inverses evaluate to inverse automorphisms") {
    testing::Rng rng(8);
    for (int n = 2; n <= 4; ++n)
        for (const auto& l : magnus_letters(n))
            CHECK(compose(evaluate_letter(l, n), evaluate_letter(l.inverted(), n)).is_identity());
    for (int t = 0; t < 100; ++t) {
        int n = testing::uniform(rng, 2, 4);
        AutWord u = testing::random_nielsen_word(rng, n, 5);
        CHECK(evaluate(u * u.inverted()).is_identity());
    }
}

TEST_CASE("abelianization is multiplicative") {
    testing::Rng rng(9);
    for (int t = 0; t < 150; ++t) {
        int n = testing::uniform(rng, 2, 4);
        AutWord u = testing::random_nielsen_word(rng, n, 5);
        AutWord v = testing::random_nielsen_word(rng, n, 5);
        auto a = abelianization_matrix(evaluate(u));
        auto b = abelianization_matrix(evaluate(v));
        std::vector<std::vector<int64_t>> prod(n, std::vector<int64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) prod[i][j] += a[i][k] * b[k][j];
        CHECK(abelianization_matrix(evaluate(u * v)) == prod);
    }
}

TEST_CASE("all Magnus letters are IA") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& l : magnus_letters(n)) CHECK(is_IA(evaluate_letter(l, n)));
}

TEST_CASE("text grammar") {
    CHECK(parse_word("x1*x2*x2^-1*x1", 3) == Word::reduce({1, 1}, 3));
    CHECK(parse_word("[x1,x2]", 3) == word_commutator(Word::generator(1), Word::generator(2)));
    CHECK(parse_word("(x1*x2)^-1", 3) == Word::reduce({-2, -1}, 3));

    AutWord w = parse_autword("g[1,2]*f[1,2,3]^-1", 3);
    REQUIRE(w.letters().size() == 2);
    CHECK(w.letters()[0] == AutLetter::g(1, 2));
    CHECK(w.letters()[1] == AutLetter::f(1, 2, 3, true));

    AutWord c = parse_autword("[g[1,2],g[2,1]]", 3);
    CHECK(evaluate(c) ==
          evaluate(aut_commutator(single(3, AutLetter::g(1, 2)), single(3, AutLetter::g(2, 1)))));

    CHECK(parse_autword("P[1,2]", 3).letters()[0] == AutLetter::perm(1, 2));
    CHECK(parse_autword("I[2]", 3).letters()[0] == AutLetter::invgen(2));
    CHECK(parse_autword("T[1,2]", 3).letters()[0] == AutLetter::transvect(1, 2));

    CHECK_THROWS_AS(parse_word("x4", 3), error);
    CHECK_THROWS_AS(parse_autword("g[1,1]", 3), error);
    CHECK_THROWS_AS(parse_autword("q[1,2]", 3), error);
    CHECK_THROWS_AS(parse_autword("g[1,2]x", 3), error);
}

#include "fpa/error.hpp"
#include "fpa/pairenc.hpp"
#include "fpa/poly.hpp"
#include "fpa/word.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace fpa;
using test::word_of;

namespace {
const Gen X = 0, Y = 1;
Polynomial gen(Gen g) { return Polynomial::generator(g); }
} // namespace

TEST_CASE("word comparison under deglex") {
    MonomialOrder ord = MonomialOrder::by_declaration(2);
    CHECK(ord.compare(word_of({X, Y}), word_of({Y, X})) < 0);
    CHECK(ord.compare(word_of({Y}), word_of({X, X})) < 0);
    CHECK(ord.compare(word_of({Y, X}), word_of({Y, X})) == 0);
    // Reversed precedence flips the same-degree case.
    MonomialOrder rev = MonomialOrder::from_precedence({Y, X});
    CHECK(rev.compare(word_of({X, Y}), word_of({Y, X})) > 0);
    CHECK(rev.compare(word_of({Y}), word_of({X, X})) < 0);
}

TEST_CASE("order axioms on random words") {
    MonomialOrder ord = MonomialOrder::by_declaration(2);
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 2000; ++iter) {
        Word a = test::random_word(rng, 2, 8);
        Word b = test::random_word(rng, 2, 8);
        Word c = test::random_word(rng, 2, 8);
        // Antisymmetry and identity-of-equals.
        CHECK(ord.compare(a, b) == -ord.compare(b, a));
        CHECK((ord.compare(a, b) == 0) == (a == b));
        // Transitivity.
        if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0) {
            CHECK(ord.compare(a, c) <= 0);
        }
        // Compatibility with multiplication.
        if (ord.less(a, b)) {
            Word u = test::random_word(rng, 2, 3);
            Word v = test::random_word(rng, 2, 3);
            CHECK(ord.less(u * a * v, u * b * v));
        }
        // Degree dominates.
        if (a.degree() < b.degree()) CHECK(ord.less(a, b));
    }
}

TEST_CASE("polynomial combine") {
    Polynomial p = gen(X) + gen(Y);
    CHECK(p.combine(gen(X), Scalar(-1)) == gen(Y));
    CHECK(Polynomial::zero().combine(Polynomial::monomial(word_of({Y, X, Y})), Scalar(1)) ==
          Polynomial::monomial(word_of({Y, X, Y})));
    Polynomial xx = Polynomial::monomial(word_of({X, X}));
    CHECK(xx.combine(xx, Scalar(-1)).is_zero());
    CHECK(xx.combine(xx, Scalar(-1)).degree() == -1);
}

TEST_CASE("polynomial product") {
    Polynomial left = gen(X) + gen(Y);
    Polynomial right = gen(X) - gen(Y);
    Polynomial expect = Polynomial::monomial(word_of({X, X})) - Polynomial::monomial(word_of({X, Y})) +
                        Polynomial::monomial(word_of({Y, X})) - Polynomial::monomial(word_of({Y, Y}));
    CHECK(left * right == expect);
    std::mt19937 rng(7);
    Polynomial p = test::random_poly(rng, 2, 4, 4);
    CHECK(Polynomial::one() * p == p);
    CHECK(gen(X) * Polynomial::monomial(word_of({Y, X, Y})) ==
          Polynomial::monomial(word_of({X, Y, X, Y})));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(987);
    for (int iter = 0; iter < 300; ++iter) {
        Polynomial p = test::random_poly(rng, 2, 4, 4);
        Polynomial q = test::random_poly(rng, 2, 4, 4);
        Polynomial r = test::random_poly(rng, 2, 4, 4);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * Polynomial::one() == p);
        CHECK(Polynomial::one() * p == p);
    }
}

TEST_CASE("leading term") {
    MonomialOrder ord = MonomialOrder::by_declaration(2);
    Polynomial p = Polynomial::monomial(word_of({X, X})) + gen(Y);
    CHECK(p.leading_term(ord).first == word_of({X, X}));
    CHECK(p.leading_term(ord).second == 1);
    Polynomial q = Polynomial::monomial(word_of({Y, X}), Scalar(3)) - Polynomial::monomial(word_of({X, Y}));
    CHECK(q.leading_term(ord).first == word_of({Y, X}));
    CHECK(q.leading_term(ord).second == 3);
    CHECK_THROWS_AS(Polynomial::zero().leading_term(ord), DomainError);
}

TEST_CASE("word parity") {
    CHECK(word_of({X, Y, X}).parity() == Parity::odd);
    CHECK(Word::one().parity() == Parity::even);
    CHECK(word_of({X, Y, Y, X}).parity() == Parity::even);
}

TEST_CASE("parity is multiplicative") {
    std::mt19937 rng(55);
    std::vector<Parity> table = {Parity::odd, Parity::even, Parity::odd};
    for (int iter = 0; iter < 500; ++iter) {
        Word u = test::random_word(rng, 3, 6);
        Word v = test::random_word(rng, 3, 6);
        CHECK(word_parity(u * v, table) == (word_parity(u, table) ^ word_parity(v, table)));
    }
}

TEST_CASE("pair encoding examples") {
    // x=0, y=1 over m=2: xyyx -> y12 * y21.
    CHECK(pair_encode_word(word_of({X, Y, Y, X}), 2) ==
          word_of({pair_index(X, Y, 2), pair_index(Y, X, 2)}));
    CHECK(pair_encode_word(Word::one(), 2) == Word::one());
    CHECK_THROWS_AS(pair_encode_word(word_of({X, Y, X}), 2), DomainError);

    CHECK(pair_decode_word(word_of({pair_index(X, X, 2)}), 2) == word_of({X, X}));
    CHECK(pair_decode_word(word_of({pair_index(X, Y, 2), pair_index(Y, Y, 2)}), 2) ==
          word_of({X, Y, Y, Y}));
    CHECK(pair_decode_word(Word::one(), 2) == Word::one());
}

TEST_CASE("pair encoding is a length-halving bijection (exhaustive, m=2, length <= 8)") {
    for (int d = 0; d <= 8; d += 2) {
        std::set<std::vector<Gen>> images;
        for (const auto& w : test::all_words(2, d)) {
            Word enc = pair_encode_word(w, 2);
            CHECK(enc.degree() == w.degree() / 2);
            CHECK(pair_decode_word(enc, 2) == w);
            images.insert(enc.letters);
        }
        // Every pair word of length d/2 is hit exactly once.
        CHECK(images.size() == test::all_words(4, d / 2).size());
    }
    // And decode is a left inverse on pair words.
    for (int d = 0; d <= 4; ++d) {
        for (const auto& w : test::all_words(4, d)) {
            CHECK(pair_encode_word(pair_decode_word(w, 2), 2) == w);
        }
    }
}

TEST_CASE("pair generator naming") {
    auto names = pair_generator_names(2);
    REQUIRE(names.size() == 4);
    CHECK(names[pair_index(0, 1, 2)] == "y12");
    CHECK(names[pair_index(1, 0, 2)] == "y21");
    auto big = pair_generator_names(12);
    CHECK(big[pair_index(0, 11, 12)] == "y1_12");
}

TEST_CASE("substitute_one matches general substitution") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial p = test::random_poly(rng, 2, 4, 5);
        Polynomial image = test::random_poly(rng, 2, 2, 2);
        std::vector<Polynomial> images = {image, gen(Y)};
        CHECK(p.substitute_one(X, image) == p.substitute(images));
    }
}

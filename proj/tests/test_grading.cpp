#include "fpa/error.hpp"
#include "fpa/grading.hpp"
#include "fpa/ncgb.hpp"
#include "fpa/pairenc.hpp"
#include "fpa/presio.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fpa;
using test::word_of;

namespace {

const Gen X = 0, Y = 1;

Polynomial mono(std::initializer_list<Gen> w) { return Polynomial::monomial(word_of(w)); }

Presentation example1() {
    return parse_presentation(
        "gens x y; odd x y; rel x^2; rel y*x*y; schema x*y^(2*i+1)*x = 0 for i >= 1;");
}

bool contains(const std::vector<Polynomial>& v, const Polynomial& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

} // namespace

TEST_CASE("splitting relations by parity") {
    std::vector<Parity> odd2 = {Parity::odd, Parity::odd};
    SplitRelations s = split_by_parity({mono({X, X}), mono({Y, X, Y})}, odd2);
    REQUIRE(s.even.size() == 1);
    REQUIRE(s.odd.size() == 1);
    CHECK(s.even[0] == mono({X, X}));
    CHECK(s.odd[0] == mono({Y, X, Y}));

    // A mixed relation splits into its components.
    SplitRelations mixed = split_by_parity({mono({X, X}) + mono({Y, X, Y})}, odd2);
    REQUIRE(mixed.even.size() == 1);
    REQUIRE(mixed.odd.size() == 1);
    CHECK(mixed.even[0] == mono({X, X}));
    CHECK(mixed.odd[0] == mono({Y, X, Y}));

    SplitRelations none = split_by_parity({}, odd2);
    CHECK(none.even.empty());
    CHECK(none.odd.empty());
}

TEST_CASE("splitting preserves the generated ideal") {
    Presentation p = example1().expand_schemas(8);
    // Make one relation mixed on purpose; the ideal must not change.
    std::vector<Polynomial> mixed_rels = p.relations;
    mixed_rels[0] = mixed_rels[0] + mixed_rels[1];
    SplitRelations s = split_by_parity(mixed_rels, p.parity_table());
    std::vector<Polynomial> split_rels = s.even;
    split_rels.insert(split_rels.end(), s.odd.begin(), s.odd.end());

    MonomialOrder ord = p.declaration_order();
    RewriteSystem orig = complete_truncated(mixed_rels, ord, 8, 2);
    RewriteSystem split_sys = complete_truncated(split_rels, ord, 8, 2);
    for (const auto& r : split_rels) CHECK(reduce_poly(r, orig).is_zero());
    for (const auto& r : mixed_rels) CHECK(reduce_poly(r, split_sys).is_zero());
}

TEST_CASE("the M' set of the running example") {
    Presentation p = parse_presentation("gens x y; odd x y; rel x^2; rel y*x*y;");
    SplitRelations s = split_by_parity(p.relations, p.parity_table());
    std::vector<Polynomial> mp = build_mprime(s, p);
    REQUIRE(mp.size() == 9); // |M0|(1+m^2) + 2m|M1| = 1*5 + 4*1
    for (auto w : {word_of({X, X}), word_of({X, Y, X, Y}), word_of({Y, Y, X, Y}),
                   word_of({Y, X, Y, X}), word_of({Y, X, Y, Y}), word_of({X, X, X, X}),
                   word_of({X, X, X, Y}), word_of({Y, X, X, X}), word_of({Y, X, X, Y})}) {
        CHECK(contains(mp, Polynomial::monomial(w)));
    }
    // Every element is even and lies in the input ideal.
    RewriteSystem sys = complete_truncated(p.relations, p.declaration_order(), 8, 2);
    for (const auto& q : mp) {
        for (const auto& [w, c] : q.terms()) {
            (void)c;
            CHECK(w.degree() % 2 == 0);
        }
        CHECK(reduce_poly(q, sys).is_zero());
    }
}

TEST_CASE("M' cardinality formula") {
    Presentation p = parse_presentation("gens x y; odd x y; rel x^2;");
    SplitRelations s = split_by_parity(p.relations, p.parity_table());
    CHECK(build_mprime(s, p).size() == 5); // |M0|(1+m^2) = 5
    SplitRelations empty;
    CHECK(build_mprime(empty, p).empty());
}

TEST_CASE("even generators are rejected") {
    Presentation p = parse_presentation("gens x y; odd x; even y; rel x^2;");
    SplitRelations s = split_by_parity(p.relations, p.parity_table());
    CHECK_THROWS_AS(build_mprime(s, p), DomainError);
    CHECK_THROWS_AS(even_part_presentation(p, 4, false), DomainError);
}

TEST_CASE("even part of the running example at degree 4") {
    Presentation p = example1();

    EvenPartResult raw = even_part_presentation(p, 4, /*simplify=*/false);
    CHECK(raw.presentation.gens ==
          std::vector<std::string>{"y11", "y12", "y21", "y22"});
    REQUIRE(raw.presentation.relations.size() == 9);
    Presentation expected_raw = parse_presentation(
        "gens y11 y12 y21 y22;"
        "rel y11; rel y11^2; rel y11*y12; rel y21*y11; rel y21*y12;"
        "rel y12^2; rel y22*y12; rel y21^2; rel y21*y22;");
    CHECK(raw.presentation == expected_raw);

    EvenPartResult simp = even_part_presentation(p, 4, /*simplify=*/true);
    Presentation expected = parse_presentation(
        "gens y12 y21 y22;"
        "rel y12^2; rel y22*y12; rel y21^2; rel y21*y22; rel y21*y12;");
    CHECK(simp.presentation == expected);
}

TEST_CASE("even part of a free presentation is free") {
    Presentation p = parse_presentation("gens x y; odd x y;");
    EvenPartResult res = even_part_presentation(p, 6, false);
    CHECK(res.presentation.gen_count() == 4);
    CHECK(res.presentation.relations.empty());
}

TEST_CASE("even-part dimension agreement with the input") {
    Presentation p = example1();
    int max_deg = 8;
    EvenPartResult res = even_part_presentation(p, max_deg, false);

    RewriteSystem xsys = presentation_system(p, max_deg);
    RewriteSystem ysys = presentation_system(res.presentation, max_deg / 2);
    HilbertVector hx = hilbert_profile(xsys, max_deg);
    HilbertVector hy = hilbert_profile(ysys, max_deg / 2);
    REQUIRE(hx.exact);
    REQUIRE(hy.exact);
    for (int d = 0; d <= max_deg / 2; ++d) {
        CHECK(hy.dims[d] == hx.dims[2 * d]);
    }
}

TEST_CASE("decoded output relations lie in the input ideal") {
    Presentation p = example1();
    EvenPartResult res = even_part_presentation(p, 8, false);
    RewriteSystem xsys = presentation_system(p, 8);
    for (const auto& r : res.presentation.relations) {
        CHECK(reduce_poly(pair_decode(r, res.input_gens), xsys).is_zero());
    }
}

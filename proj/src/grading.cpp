#include "fpa/grading.hpp"

#include "fpa/equiv.hpp"
#include "fpa/error.hpp"
#include "fpa/pairenc.hpp"

#include <algorithm>

namespace fpa {

SplitRelations split_by_parity(const std::vector<Polynomial>& rels,
                               std::span<const Parity> parities) {
    SplitRelations out;
    for (const auto& r : rels) {
        auto [even, odd] = r.parity_split(parities);
        if (!even.is_zero()) out.even.push_back(std::move(even));
        if (!odd.is_zero()) out.odd.push_back(std::move(odd));
    }
    return out;
}

namespace {

void require_all_odd(const Presentation& p) {
    auto pt = p.parity_table();
    if (!std::all_of(pt.begin(), pt.end(), [](Parity q) { return q == Parity::odd; })) {
        throw DomainError("Theorem 1 requires odd generators");
    }
}

} // namespace

std::vector<Polynomial> build_mprime(const SplitRelations& split, const Presentation& p) {
    require_all_odd(p);
    const std::size_t m = p.gen_count();
    MonomialOrder ord = p.declaration_order();
    std::vector<Polynomial> out;
    out.reserve(split.even.size() * (1 + m * m) + 2 * m * split.odd.size());
    for (const auto& a : split.even) out.push_back(a.monic(ord));
    for (const auto& b : split.odd) {
        for (Gen i = 0; i < m; ++i) {
            out.push_back(sandwich(Word::single(i), b, Word::one()).monic(ord));
        }
        for (Gen i = 0; i < m; ++i) {
            out.push_back(sandwich(Word::one(), b, Word::single(i)).monic(ord));
        }
    }
    for (const auto& a : split.even) {
        for (Gen i = 0; i < m; ++i) {
            for (Gen j = 0; j < m; ++j) {
                out.push_back(sandwich(Word::single(i), a, Word::single(j)).monic(ord));
            }
        }
    }
    sort_relations(out, ord);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EvenPartResult even_part_presentation(const Presentation& p, int max_deg, bool simplify) {
    require_all_odd(p);
    if (max_deg < 1) throw DomainError("max_deg must be >= 1");
    Presentation expanded = p.expand_schemas(max_deg);
    const std::size_t m = expanded.gen_count();
    SplitRelations split = split_by_parity(expanded.relations, expanded.parity_table());

    EvenPartResult res;
    res.input_gens = m;
    res.mprime = build_mprime(split, expanded);

    Presentation out;
    out.gens = pair_generator_names(m);
    out.relations.reserve(res.mprime.size());
    for (const auto& r : res.mprime) out.relations.push_back(pair_encode(r, m));
    out.canonicalize();

    if (simplify) out = tietze_simplify(out, std::max(1, max_deg / 2));
    res.presentation = std::move(out);
    return res;
}

} // namespace fpa

#include "fpa/pairenc.hpp"

#include "fpa/error.hpp"

namespace fpa {

Word pair_encode_word(const Word& w, std::size_t m) {
    if (w.degree() % 2 != 0) throw DomainError("odd word not encodable");
    Word out;
    out.letters.reserve(w.degree() / 2);
    for (std::size_t k = 0; k < w.degree(); k += 2) {
        out.letters.push_back(pair_index(w.letters[k], w.letters[k + 1], m));
    }
    return out;
}

Word pair_decode_word(const Word& w, std::size_t m) {
    Word out;
    out.letters.reserve(w.degree() * 2);
    for (Gen y : w.letters) {
        auto [i, j] = pair_split(y, m);
        out.letters.push_back(i);
        out.letters.push_back(j);
    }
    return out;
}

Polynomial pair_encode(const Polynomial& p, std::size_t m) {
    std::vector<Polynomial::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& [w, c] : p.terms()) ts.emplace_back(pair_encode_word(w, m), c);
    return Polynomial::from_terms(std::move(ts));
}

Polynomial pair_decode(const Polynomial& p, std::size_t m) {
    std::vector<Polynomial::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& [w, c] : p.terms()) ts.emplace_back(pair_decode_word(w, m), c);
    return Polynomial::from_terms(std::move(ts));
}

std::vector<std::string> pair_generator_names(std::size_t m) {
    std::vector<std::string> names;
    names.reserve(m * m);
    const char* sep = m > 9 ? "_" : "";
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            names.push_back("y" + std::to_string(i + 1) + sep + std::to_string(j + 1));
        }
    }
    return names;
}

MonomialOrder pair_order(const MonomialOrder& base) {
    std::size_t m = base.alphabet();
    MonomialOrder ord;
    ord.rank.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            ord.rank[pair_index(static_cast<Gen>(i), static_cast<Gen>(j), m)] =
                static_cast<std::uint32_t>(base.rank[i] * m + base.rank[j]);
        }
    }
    return ord;
}

} // namespace fpa

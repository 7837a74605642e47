#pragma once

#include "fpa/poly.hpp"

#include <string>
#include <vector>

namespace fpa {

/// Encoding between even words over an m-letter alphabet X and words over
/// the m^2-letter pair alphabet Y, pairing letters strictly left to right:
/// x_i x_j ... -> y_{ij} ... The pair letter for (i, j) has index i*m + j.

inline std::size_t pair_count(std::size_t m) { return m * m; }

inline Gen pair_index(Gen i, Gen j, std::size_t m) { return static_cast<Gen>(i * m + j); }

inline std::pair<Gen, Gen> pair_split(Gen y, std::size_t m) {
    return {static_cast<Gen>(y / m), static_cast<Gen>(y % m)};
}

/// Throws DomainError on odd-length words.
Word pair_encode_word(const Word& w, std::size_t m);
Word pair_decode_word(const Word& w, std::size_t m);

/// Termwise extension; every word must have even length.
Polynomial pair_encode(const Polynomial& p, std::size_t m);
Polynomial pair_decode(const Polynomial& p, std::size_t m);

/// "y11", "y12", ... (1-based positions; "_"-separated above 9 generators).
std::vector<std::string> pair_generator_names(std::size_t m);

/// Order on the pair alphabet induced by a base order: y_{ij} ranked by
/// (rank i, rank j) lexicographically.
MonomialOrder pair_order(const MonomialOrder& base);

} // namespace fpa

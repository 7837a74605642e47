#pragma once

#include "fpa/presentation.hpp"

#include <span>

namespace fpa {

/// Relations split into even (M0) and odd (M1) homogeneous components.
/// Mixed-parity inputs split into both; the generated ideal is unchanged
/// because the ideal is graded.
struct SplitRelations {
    std::vector<Polynomial> even;
    std::vector<Polynomial> odd;
};

SplitRelations split_by_parity(const std::vector<Polynomial>& rels,
                               std::span<const Parity> parities);

/// M' = {a} u {x_i b} u {b x_i} u {x_i a x_j} for a in M0, b in M1 and all
/// generators x_i, x_j; monic, duplicates removed. Every element is even and
/// lies in the ideal generated by the input. Requires all generators odd.
std::vector<Polynomial> build_mprime(const SplitRelations& split, const Presentation& p);

struct EvenPartResult {
    Presentation presentation; // on the m^2 pair generators
    std::vector<Polynomial> mprime; // over the input alphabet
    std::size_t input_gens = 0;
};

/// Theorem-1 transformer: expands schemas at max_deg, builds M', and encodes
/// it on the pair generators; presents the even part A0. With simplify the
/// output is Tietze-simplified at the halved degree bound.
EvenPartResult even_part_presentation(const Presentation& p, int max_deg, bool simplify);

} // namespace fpa

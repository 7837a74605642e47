#pragma once

#include "fpa/ncgb.hpp"
#include "fpa/presentation.hpp"

namespace fpa {

/// Images of a source presentation's generators as polynomials over a
/// target presentation's generators.
struct GeneratorMap {
    std::vector<Polynomial> images; // indexed by source generator
};

struct EquivalenceReport {
    enum class Verdict { consistent, mismatch, inconclusive };

    struct DegreeRow {
        int degree;     // degree on the p2 side
        Count dim_p1;   // dims(p1)[ratio * degree]
        Count dim_p2;   // dims(p2)[degree]
    };

    int degree_bound = 0;
    int ratio = 1;
    std::vector<DegreeRow> per_degree;
    std::vector<Membership> relation_verdicts; // for generator-map checks
    Verdict verdict = Verdict::inconclusive;
    int mismatch_degree = -1; // smallest failing degree, or -1
    bool exact = false;
};

const char* to_string(EquivalenceReport::Verdict v);

/// Compares dims(p2)[d] against dims(p1)[ratio*d] for d = 0..max_d.
/// Requires homogeneous presentations (after schema expansion) and ratio >= 1.
EquivalenceReport compare_hilbert(const Presentation& p1, const Presentation& p2, int max_d,
                                  int ratio);

/// Tests each src relation's image under gm for membership in dst's ideal,
/// i.e. whether gm induces a homomorphism. Schemas are expanded at max_deg.
EquivalenceReport check_generator_map(const Presentation& src, const Presentation& dst,
                                      const GeneratorMap& gm, int max_deg);

/// Deterministic degree-bounded presentation cleanup: drops duplicate
/// relations, deletes generators that are relations themselves, eliminates
/// generators defined by other generators, and drops relations derivable
/// from the rest. Schemas are expanded at max_deg first; idempotent/witness
/// metadata does not survive.
Presentation tietze_simplify(const Presentation& p, int max_deg);

} // namespace fpa

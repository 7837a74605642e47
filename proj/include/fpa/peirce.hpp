#pragma once

#include "fpa/ncgb.hpp"
#include "fpa/presentation.hpp"

namespace fpa {

struct IdempotentSpec {
    Gen e;
};

enum class WitnessVerdict { verified, inconclusive, refuted };
const char* to_string(WitnessVerdict v);

/// Checks the fullness witnesses 1 = sum u_i e v_i and 1 = sum s_j (1-e) t_j
/// for ideal membership at max_deg. Reduction alone never refutes; a failed
/// check is inconclusive. Requires e^2 - e to be derivable.
WitnessVerdict verify_witnesses(const Presentation& p, const IdempotentSpec& spec,
                                const WitnessDecomposition& we, const WitnessDecomposition& wf,
                                int max_deg);

/// Replaces every generator g != e by four typed generators g_ee, g_ef,
/// g_fe, g_ff (the Peirce components), turns e into the typed idempotent,
/// and adds the typing relations. Tietze-equivalent to the input. The output
/// carries Peirce types, the induced parity (matched = even), and the typed
/// idempotent as generator 0.
Presentation peirce_homogenize(const Presentation& p, const IdempotentSpec& spec);

/// images[g] = the homogenized expression of original generator g (the sum
/// of its four components; the idempotent maps to the typed idempotent),
/// indexed exactly as peirce_homogenize lays the generators out.
std::vector<Polynomial> homogenize_images(const Presentation& p, const IdempotentSpec& spec);

/// Presentation on the odd generating set Omega together with the data the
/// component extraction needs.
struct OmegaPresentation {
    Presentation pres; // all generators odd
    /// Defining expression of each Omega generator over the homogenized
    /// generators (mismatched generators map to themselves).
    std::vector<Polynomial> defs;
    std::vector<std::uint32_t> lambda_eps; // lambda_{eps,j}, one per w_f term
    std::vector<std::uint32_t> rho;        // rho_j
    std::vector<std::uint32_t> sigma;      // sigma_i, one per w_e term
    std::vector<std::uint32_t> nu;         // nu_i
};

/// Builds Omega: mismatched typed generators, the lambda/rho factorizations
/// of (e,e)-typed generators through w_f, and the mu/nu/sigma family of
/// (f,f)-typed generators through w_e. Matched generators are substituted
/// away; consistency relations tie each Omega generator to its definition;
/// every relation is split by parity. Witness words are over the original
/// presentation; original_images translates them (see homogenize_images).
OmegaPresentation build_odd_generating_set(const Presentation& hp,
                                           const WitnessDecomposition& we,
                                           const WitnessDecomposition& wf,
                                           std::span<const Polynomial> original_images);

struct PeirceOptions {
    int max_deg = 10;
    bool simplify = true;
    bool override_witnesses = false;
};

struct PeirceResult {
    Presentation component; // presents eAe
    WitnessVerdict witnesses = WitnessVerdict::inconclusive;
    bool refused = false;        // witnesses unverified and no override
    bool unit_derivable = false; // e_Y - 1 reduces to 0 pre-simplification
    bool degenerate = false;     // 1 = 0 in the component
    Polynomial unit_expression;  // e_Y over the raw pair generators
};

/// Theorem-2 pipeline: homogenize -> odd generating set -> even part ->
/// adjoin the f-component relation -> optional simplification.
PeirceResult peirce_component_presentation(const Presentation& p, const IdempotentSpec& spec,
                                           const WitnessDecomposition& we,
                                           const WitnessDecomposition& wf,
                                           const PeirceOptions& opts);

/// Convenience overload reading the idempotent and witnesses from p.
PeirceResult peirce_component_presentation(const Presentation& p, const PeirceOptions& opts);

} // namespace fpa

#pragma once

#include "fpa/poly.hpp"
#include "fpa/presentation.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fpa {

/// Formal two-sided combination sum_k c_k * u_k * g_{i_k} * v_k over an
/// indexed family of polynomials (input relations or rewrite rules).
struct Combination {
    struct Piece {
        Word left;
        std::uint32_t index;
        Word right;
        Scalar coeff;
    };
    std::vector<Piece> pieces;

    void add(Word left, std::uint32_t index, Word right, Scalar coeff);
    /// Prepends u and appends v to every piece, scaling by c.
    Combination conjugated(const Word& u, const Word& v, const Scalar& c) const;
    Polynomial expand(std::span<const Polynomial> family) const;
};

/// Oriented relation lhs -> rhs: the polynomial lhs - rhs lies in the ideal
/// and every rhs word is strictly smaller than lhs in the monomial order.
struct RewriteRule {
    Word lhs;
    Polynomial rhs;
    /// Sorted input-relation indices this rule derives from (when tracked).
    std::vector<std::uint32_t> sources;
    /// lhs - rhs as a combination of input relations (when tracked).
    Combination provenance;

    Polynomial to_poly() const { return Polynomial::monomial(lhs).combine(rhs, Scalar(-1)); }
};

/// Degree-truncated rewriting system. When complete_up_to_degree holds,
/// normal forms are unique for polynomials of degree <= truncation_degree
/// and, for homogeneous inputs, reduction to zero decides ideal membership.
struct RewriteSystem {
    std::vector<RewriteRule> rules;
    MonomialOrder order;
    int truncation_degree = 0;
    bool complete_up_to_degree = false;
    bool homogeneous = false;
    /// The ideal contains 1; every element reduces to zero.
    bool degenerate = false;
    std::size_t alphabet = 0;

    struct Match {
        std::size_t pos;
        std::uint32_t rule;
    };
    /// Leftmost reducible position of w (shortest lhs, then lowest rule id
    /// on ties), optionally restricted to the rules enabled in mask.
    /// Ignores the degenerate flag.
    std::optional<Match> first_match(const Word& w, const std::vector<bool>* mask = nullptr) const;
    bool is_normal_word(const Word& w) const;

    /// Sorts rules by lhs and rebuilds the first-letter index.
    void finalize();

private:
    std::vector<std::vector<std::uint32_t>> index_;
};

struct CompletionOptions {
    bool track_sources = false;
    bool track_provenance = false;
};

/// Buchberger/Mora-style overlap completion, processing S-polynomials in
/// increasing overlap-degree order and discarding those above max_deg.
/// Requires max_deg >= max degree of the input relations.
RewriteSystem complete_truncated(const std::vector<Polynomial>& rels, const MonomialOrder& ord,
                                 int max_deg, std::size_t alphabet,
                                 const CompletionOptions& opts = {});

/// Expands schemas at max_deg and completes; truncation is raised to the
/// largest input relation degree if that exceeds max_deg.
RewriteSystem presentation_system(const Presentation& p, int max_deg,
                                  std::optional<MonomialOrder> ord = std::nullopt,
                                  const CompletionOptions& opts = {});

/// Normal form: no word of the result contains any rule lhs as a factor.
/// Deterministic strategy: order-largest reducible word, leftmost position.
Polynomial reduce_poly(const Polynomial& p, const RewriteSystem& rs);

/// Normal form using only the rules with rule_mask[i] set.
Polynomial reduce_poly_masked(const Polynomial& p, const RewriteSystem& rs,
                              const std::vector<bool>& rule_mask);

struct ReductionTrace {
    Polynomial normal_form;
    /// p = normal_form + sum of pieces, each piece indexing rs.rules.
    Combination used;
};
ReductionTrace reduce_with_trace(const Polynomial& p, const RewriteSystem& rs);

/// Overlap words w = lhs(r1)·s = s'·lhs(r2) (proper boundary overlap, r1 on
/// the left) plus containments of lhs(r2) inside lhs(r1). Deduplicated,
/// sorted by the structural key order.
std::vector<Word> find_overlaps(const RewriteRule& r1, const RewriteRule& r2);

enum class Membership { member, non_member_up_to_degree, unknown };
const char* to_string(Membership v);

/// Requires degree(p) <= truncation degree.
Membership ideal_member(const Polynomial& p, const RewriteSystem& rs);

/// Number of degree-d words containing no rule lhs as a factor.
Count count_normal_words(const RewriteSystem& rs, int d);

struct HilbertVector {
    std::vector<Count> dims; // index d = 0..max_d
    bool exact = false;
};

/// dims[d] = count_normal_words(rs, d); exact iff complete and homogeneous.
HilbertVector hilbert_profile(const RewriteSystem& rs, int max_d);

/// Deterministic finite recognizer of factor-avoiding words (Ufnarovski-style
/// fast path). Requires every rule to be monomial (rhs = 0).
struct NormalWordAutomaton {
    std::size_t alphabet = 0;
    static constexpr std::int32_t dead = -1;
    /// next[s][c] = successor state or dead; state 0 is initial; all states
    /// accept. Empty when the language is empty.
    std::vector<std::vector<std::int32_t>> next;

    std::vector<Count> path_counts(int max_d) const;
};
NormalWordAutomaton normal_word_automaton(const RewriteSystem& rs);

/// Independent confluence certificate: every S-polynomial of overlap degree
/// <= max_deg reduces to zero.
bool confluent_up_to(const RewriteSystem& rs, int max_deg);

} // namespace fpa

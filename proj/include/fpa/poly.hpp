#pragma once

#include "fpa/scalar.hpp"
#include "fpa/word.hpp"

#include <span>
#include <utility>
#include <vector>

namespace fpa {

/// Element of the free algebra: a finite map Word -> nonzero Scalar, stored
/// as a vector of terms sorted by the structural key order. Degree of the
/// zero polynomial is reported as -1 (the "-inf" marker).
class Polynomial {
public:
    using Term = std::pair<Word, Scalar>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial one() { return monomial(Word::one()); }
    static Polynomial monomial(Word w, Scalar c = Scalar(1));
    static Polynomial generator(Gen g) { return monomial(Word::single(g)); }
    /// Takes arbitrary (word, coeff) pairs; merges and drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    int degree() const;
    bool is_homogeneous() const;
    /// True when the polynomial is a single scalar multiple of the unit word.
    bool is_constant() const;

    bool operator==(const Polynomial&) const = default;

    /// *this + c * q
    Polynomial combine(const Polynomial& q, const Scalar& c) const;
    Polynomial operator+(const Polynomial& q) const { return combine(q, Scalar(1)); }
    Polynomial operator-(const Polynomial& q) const { return combine(q, Scalar(-1)); }
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& q) const;
    Polynomial scaled(const Scalar& c) const;

    /// Coefficient of w (zero if absent).
    Scalar coeff(const Word& w) const;

    /// Order-maximal term. Throws DomainError on the zero polynomial.
    const Term& leading_term(const MonomialOrder& ord) const;

    /// Scales so the leading coefficient is 1. Zero stays zero.
    Polynomial monic(const MonomialOrder& ord) const;

    /// (even part, odd part) with respect to a per-generator parity table.
    std::pair<Polynomial, Polynomial> parity_split(std::span<const Parity> parities) const;

    /// Substitutes images[g] for every occurrence of g (algebra homomorphism).
    Polynomial substitute(std::span<const Polynomial> images) const;

    /// Substitutes image for g only; other generators stay fixed.
    Polynomial substitute_one(Gen g, const Polynomial& image) const;

    /// Drops every term whose word mentions g.
    Polynomial without_generator(Gen g) const;
    bool mentions(Gen g) const;

    /// Applies a generator relabelling; map[g] is the new index.
    Polynomial relabel(std::span<const Gen> map) const;

private:
    std::vector<Term> terms_;
};

/// u * p * v without building intermediate polynomials.
Polynomial sandwich(const Word& u, const Polynomial& p, const Word& v);

/// Total structural order on polynomials (by terms from the largest word
/// down under `ord`, coefficients breaking ties). Canonical list order.
int poly_cmp(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord);

Parity word_parity(const Word& w, std::span<const Parity> parities);

} // namespace fpa

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace fpa {

/// 0-based generator index into a presentation's generator list.
using Gen = std::uint32_t;

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator^(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

/// A monomial of the free algebra: a finite sequence of generators.
/// The empty word is the multiplicative unit; degree = length.
struct Word {
    std::vector<Gen> letters;

    Word() = default;
    explicit Word(std::vector<Gen> ls) : letters(std::move(ls)) {}
    static Word one() { return Word{}; }
    static Word single(Gen g) { return Word{{g}}; }

    std::size_t degree() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Parity parity() const { return static_cast<Parity>(letters.size() & 1); }

    bool operator==(const Word&) const = default;

    /// Concatenation (the product in the free algebra).
    Word operator*(const Word& rhs) const;

    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix(std::size_t len) const { return subword(letters.size() - len, len); }
    bool mentions(Gen g) const;
};

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// First position at which `factor` occurs in `w`, or npos. The empty word
/// is a factor of everything (position 0).
std::size_t find_factor(const Word& w, const Word& factor);

bool has_factor(const Word& w, const Word& factor);
bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);

/// Structural key order (degree, then raw indices lexicographically).
/// Used for term storage; independent of any configurable monomial order.
int word_key_cmp(const Word& a, const Word& b);
inline bool word_key_less(const Word& a, const Word& b) { return word_key_cmp(a, b) < 0; }

/// Degree-lexicographic order with a configurable generator precedence.
/// rank[g] is the position of g in the precedence (smaller = smaller letter).
struct MonomialOrder {
    std::vector<std::uint32_t> rank;

    static MonomialOrder by_declaration(std::size_t m);
    /// `smallest_first` lists every generator exactly once.
    static MonomialOrder from_precedence(const std::vector<Gen>& smallest_first);

    std::size_t alphabet() const { return rank.size(); }
    /// Declaration-order precedence; deglex then coincides with the
    /// structural key order.
    bool is_identity() const;
    int compare(const Word& a, const Word& b) const;
    bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
};

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

} // namespace fpa

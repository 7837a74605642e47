#include "fpa/word.hpp"

#include "fpa/error.hpp"

#include <algorithm>
#include <numeric>

namespace fpa {

Word Word::operator*(const Word& rhs) const {
    Word out;
    out.letters.reserve(letters.size() + rhs.letters.size());
    out.letters.insert(out.letters.end(), letters.begin(), letters.end());
    out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word{std::vector<Gen>(letters.begin() + pos, letters.begin() + pos + len)};
}

bool Word::mentions(Gen g) const {
    return std::find(letters.begin(), letters.end(), g) != letters.end();
}

std::size_t find_factor(const Word& w, const Word& factor) {
    if (factor.empty()) return 0;
    if (factor.degree() > w.degree()) return npos;
    auto it = std::search(w.letters.begin(), w.letters.end(),
                          factor.letters.begin(), factor.letters.end());
    if (it == w.letters.end()) return npos;
    return static_cast<std::size_t>(it - w.letters.begin());
}

bool has_factor(const Word& w, const Word& factor) { return find_factor(w, factor) != npos; }

bool is_prefix(const Word& p, const Word& w) {
    return p.degree() <= w.degree() &&
           std::equal(p.letters.begin(), p.letters.end(), w.letters.begin());
}

bool is_suffix(const Word& s, const Word& w) {
    return s.degree() <= w.degree() &&
           std::equal(s.letters.rbegin(), s.letters.rend(), w.letters.rbegin());
}

int word_key_cmp(const Word& a, const Word& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.degree(); ++i) {
        if (a.letters[i] != b.letters[i]) return a.letters[i] < b.letters[i] ? -1 : 1;
    }
    return 0;
}

MonomialOrder MonomialOrder::by_declaration(std::size_t m) {
    MonomialOrder ord;
    ord.rank.resize(m);
    std::iota(ord.rank.begin(), ord.rank.end(), 0u);
    return ord;
}

MonomialOrder MonomialOrder::from_precedence(const std::vector<Gen>& smallest_first) {
    MonomialOrder ord;
    ord.rank.assign(smallest_first.size(), 0);
    std::vector<bool> seen(smallest_first.size(), false);
    for (std::size_t pos = 0; pos < smallest_first.size(); ++pos) {
        Gen g = smallest_first[pos];
        if (g >= ord.rank.size() || seen[g]) throw DomainError("precedence must list every generator exactly once");
        ord.rank[g] = static_cast<std::uint32_t>(pos);
        seen[g] = true;
    }
    return ord;
}

bool MonomialOrder::is_identity() const {
    for (std::size_t i = 0; i < rank.size(); ++i) {
        if (rank[i] != i) return false;
    }
    return true;
}

int MonomialOrder::compare(const Word& a, const Word& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.degree(); ++i) {
        std::uint32_t ra = rank[a.letters[i]];
        std::uint32_t rb = rank[b.letters[i]];
        if (ra != rb) return ra < rb ? -1 : 1;
    }
    return 0;
}

std::size_t WordHash::operator()(const Word& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ w.degree();
    for (Gen g : w.letters) {
        h ^= g + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace fpa

#include "fpa/poly.hpp"

#include "fpa/error.hpp"

#include <algorithm>

namespace fpa {

Polynomial Polynomial::monomial(Word w, Scalar c) {
    Polynomial p;
    if (!fpa::is_zero(c)) p.terms_.emplace_back(std::move(w), std::move(c));
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return word_key_less(a.first, b.first); });
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (fpa::is_zero(p.terms_.back().second)) p.terms_.pop_back();
        } else if (!fpa::is_zero(t.second)) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // Terms are sorted by (degree, ...), so the last one is maximal in degree.
    return static_cast<int>(terms_.back().first.degree());
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::size_t d = terms_.front().first.degree();
    return terms_.back().first.degree() == d;
}

bool Polynomial::is_constant() const {
    return terms_.size() == 1 && terms_.front().first.empty();
}

Polynomial Polynomial::combine(const Polynomial& q, const Scalar& c) const {
    if (fpa::is_zero(c) || q.terms_.empty()) return *this;
    Polynomial out;
    out.terms_.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        int cmp = word_key_cmp(terms_[i].first, q.terms_[j].first);
        if (cmp < 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp > 0) {
            out.terms_.emplace_back(q.terms_[j].first, c * q.terms_[j].second);
            ++j;
        } else {
            Scalar s = terms_[i].second + c * q.terms_[j].second;
            if (!fpa::is_zero(s)) out.terms_.emplace_back(terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < q.terms_.size(); ++j) out.terms_.emplace_back(q.terms_[j].first, c * q.terms_[j].second);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    std::vector<Term> prod;
    prod.reserve(terms_.size() * q.terms_.size());
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : q.terms_) {
            prod.emplace_back(wa * wb, ca * cb);
        }
    }
    return from_terms(std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (fpa::is_zero(c)) return zero();
    Polynomial out = *this;
    for (auto& t : out.terms_) t.second *= c;
    return out;
}

Scalar Polynomial::coeff(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& key) { return word_key_less(t.first, key); });
    if (it != terms_.end() && it->first == w) return it->second;
    return Scalar(0);
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw DomainError("no leading term: zero polynomial");
    if (ord.is_identity()) return terms_.back();
    const Term* best = &terms_.front();
    for (const auto& t : terms_) {
        if (ord.less(best->first, t.first)) best = &t;
    }
    return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    const Scalar& lc = leading_term(ord).second;
    if (lc == 1) return *this;
    return scaled(Scalar(1) / lc);
}

std::pair<Polynomial, Polynomial> Polynomial::parity_split(std::span<const Parity> parities) const {
    Polynomial even, odd;
    for (const auto& t : terms_) {
        if (word_parity(t.first, parities) == Parity::even) {
            even.terms_.push_back(t);
        } else {
            odd.terms_.push_back(t);
        }
    }
    return {std::move(even), std::move(odd)};
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
    Polynomial out;
    for (const auto& [w, c] : terms_) {
        Polynomial prod = monomial(Word::one(), c);
        for (Gen g : w.letters) prod = prod * images[g];
        out = out + prod;
    }
    return out;
}

Polynomial Polynomial::substitute_one(Gen g, const Polynomial& image) const {
    Polynomial out;
    for (const auto& [w, c] : terms_) {
        if (!w.mentions(g)) {
            out = out + monomial(w, c);
            continue;
        }
        // Split the word at occurrences of g and interleave the image.
        Polynomial prod = monomial(Word::one(), c);
        Word segment;
        for (Gen letter : w.letters) {
            if (letter == g) {
                prod = sandwich(Word::one(), prod, segment) * image;
                segment = Word::one();
            } else {
                segment.letters.push_back(letter);
            }
        }
        out = out + sandwich(Word::one(), prod, segment);
    }
    return out;
}

Polynomial Polynomial::without_generator(Gen g) const {
    Polynomial out;
    for (const auto& t : terms_) {
        if (!t.first.mentions(g)) out.terms_.push_back(t);
    }
    return out;
}

bool Polynomial::mentions(Gen g) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [g](const Term& t) { return t.first.mentions(g); });
}

Polynomial Polynomial::relabel(std::span<const Gen> map) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        Word nw = w;
        for (Gen& g : nw.letters) g = map[g];
        ts.emplace_back(std::move(nw), c);
    }
    return from_terms(std::move(ts));
}

Polynomial sandwich(const Word& u, const Polynomial& p, const Word& v) {
    std::vector<Polynomial::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& [w, c] : p.terms()) ts.emplace_back(u * w * v, c);
    return Polynomial::from_terms(std::move(ts));
}

int poly_cmp(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
    if (ord.is_identity()) {
        // Stored term order is the monomial order; walk from the back.
        const auto& ta = a.terms();
        const auto& tb = b.terms();
        for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
            const auto& x = ta[ta.size() - 1 - i];
            const auto& y = tb[tb.size() - 1 - i];
            int wcmp = word_key_cmp(x.first, y.first);
            if (wcmp != 0) return wcmp;
            int ccmp = ::cmp(x.second, y.second);
            if (ccmp != 0) return ccmp < 0 ? -1 : 1;
        }
        if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
        return 0;
    }
    // Walk both term lists from the order-largest word down.
    auto sorted = [&ord](const Polynomial& p) {
        std::vector<const Polynomial::Term*> ts;
        ts.reserve(p.term_count());
        for (const auto& t : p.terms()) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(), [&ord](const auto* x, const auto* y) {
            return ord.less(y->first, x->first);
        });
        return ts;
    };
    auto ta = sorted(a);
    auto tb = sorted(b);
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        int cmp = ord.compare(ta[i]->first, tb[i]->first);
        if (cmp != 0) return cmp;
        int ccmp = ::cmp(ta[i]->second, tb[i]->second);
        if (ccmp != 0) return ccmp < 0 ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

Parity word_parity(const Word& w, std::span<const Parity> parities) {
    Parity p = Parity::even;
    for (Gen g : w.letters) p = p ^ parities[g];
    return p;
}

} // namespace fpa

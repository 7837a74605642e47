#include "fpa/ncgb.hpp"

#include "fpa/error.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace fpa {

void Combination::add(Word left, std::uint32_t index, Word right, Scalar coeff) {
    pieces.push_back({std::move(left), index, std::move(right), std::move(coeff)});
}

Combination Combination::conjugated(const Word& u, const Word& v, const Scalar& c) const {
    Combination out;
    out.pieces.reserve(pieces.size());
    for (const auto& p : pieces) {
        out.pieces.push_back({u * p.left, p.index, p.right * v, c * p.coeff});
    }
    return out;
}

Polynomial Combination::expand(std::span<const Polynomial> family) const {
    Polynomial out;
    for (const auto& p : pieces) {
        out = out.combine(sandwich(p.left, family[p.index], p.right), p.coeff);
    }
    return out;
}

std::optional<RewriteSystem::Match> RewriteSystem::first_match(const Word& w,
                                                               const std::vector<bool>* mask) const {
    if (index_.size() != alphabet) {
        // finalize() not called; linear fallback keeps queries correct.
        std::optional<Match> best;
        for (std::uint32_t r = 0; r < rules.size(); ++r) {
            if (mask && !(*mask)[r]) continue;
            std::size_t pos = find_factor(w, rules[r].lhs);
            if (pos == npos) continue;
            if (!best || pos < best->pos ||
                (pos == best->pos && rules[r].lhs.degree() < rules[best->rule].lhs.degree())) {
                best = Match{pos, r};
            }
        }
        return best;
    }
    for (std::size_t pos = 0; pos < w.degree(); ++pos) {
        std::optional<Match> best;
        for (std::uint32_t r : index_[w.letters[pos]]) {
            if (mask && !(*mask)[r]) continue;
            const Word& lhs = rules[r].lhs;
            if (lhs.degree() > w.degree() - pos) continue;
            if (best && rules[best->rule].lhs.degree() <= lhs.degree()) continue;
            if (std::equal(lhs.letters.begin(), lhs.letters.end(), w.letters.begin() + pos)) {
                best = Match{pos, r};
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

bool RewriteSystem::is_normal_word(const Word& w) const {
    if (degenerate) return false;
    return !first_match(w).has_value();
}

void RewriteSystem::finalize() {
    std::sort(rules.begin(), rules.end(), [this](const RewriteRule& a, const RewriteRule& b) {
        return order.less(a.lhs, b.lhs);
    });
    index_.assign(alphabet, {});
    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        if (!rules[r].lhs.empty()) index_[rules[r].lhs.letters[0]].push_back(r);
    }
}

namespace {

// Overlap of a (left-aligned) with b occurring at pos: either a proper
// boundary overlap (pos + |b| == |word|, pos > 0) or containment of b in a.
struct OverlapPos {
    Word word;
    std::size_t pos;
};

std::vector<OverlapPos> overlap_positions(const Word& a, const Word& b) {
    std::vector<OverlapPos> out;
    std::size_t la = a.degree(), lb = b.degree();
    // Proper boundary overlaps: a nonempty proper suffix of a equals a prefix of b.
    for (std::size_t k = 1; k < std::min(la, lb); ++k) {
        if (std::equal(a.letters.end() - k, a.letters.end(), b.letters.begin())) {
            Word w = a;
            w.letters.insert(w.letters.end(), b.letters.begin() + k, b.letters.end());
            out.push_back({std::move(w), la - k});
        }
    }
    // Containments of b strictly inside a.
    if (lb < la) {
        for (std::size_t pos = 0; pos + lb <= la; ++pos) {
            if (std::equal(b.letters.begin(), b.letters.end(), a.letters.begin() + pos)) {
                out.push_back({a, pos});
            }
        }
    }
    return out;
}

// S-polynomial of the two reductions of the overlap word.
Polynomial spoly_at(const RewriteRule& r1, const RewriteRule& r2, const OverlapPos& ov) {
    const Word tail = ov.word.subword(r1.lhs.degree(), ov.word.degree() - r1.lhs.degree());
    const Word pre = ov.word.prefix(ov.pos);
    const Word post = ov.word.subword(ov.pos + r2.lhs.degree(),
                                      ov.word.degree() - ov.pos - r2.lhs.degree());
    return sandwich(Word::one(), r1.rhs, tail).combine(sandwich(pre, r2.rhs, post), Scalar(-1));
}

struct Pending {
    Word key; // overlap word or leading word; drives the processing order
    bool is_spoly = false;
    Polynomial poly;
    std::uint32_t r1 = 0, r2 = 0;
    std::size_t pos = 0;
    std::vector<std::uint32_t> sources;
    Combination prov;
    std::uint64_t seq = 0;
};

std::vector<std::uint32_t> merge_sources(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class Completer {
public:
    Completer(const MonomialOrder& ord, int max_deg, std::size_t alphabet,
              const CompletionOptions& opts)
        : ord_(ord), max_deg_(max_deg), alphabet_(alphabet), opts_(opts),
          bucket_(alphabet), queue_(Cmp{this}) {}

    RewriteSystem run(const std::vector<Polynomial>& rels) {
        homogeneous_ = std::all_of(rels.begin(), rels.end(),
                                   [](const Polynomial& r) { return r.is_homogeneous(); });
        for (std::uint32_t i = 0; i < rels.size(); ++i) {
            if (rels[i].is_zero()) continue;
            if (rels[i].degree() > max_deg_) {
                throw DomainError("truncation degree below an input relation degree");
            }
            Pending item;
            item.key = rels[i].leading_term(ord_).first;
            item.poly = rels[i];
            if (opts_.track_sources) item.sources = {i};
            if (opts_.track_provenance) item.prov.add(Word::one(), i, Word::one(), Scalar(1));
            push(std::move(item));
        }
        while (!queue_.empty() && !degenerate_) {
            Pending item = pop();
            Polynomial p;
            std::vector<std::uint32_t> sources;
            Combination prov;
            if (item.is_spoly) {
                if (!alive_[item.r1] || !alive_[item.r2]) continue;
                const auto& r1 = rules_[item.r1];
                const auto& r2 = rules_[item.r2];
                OverlapPos ov{item.key, item.pos};
                p = spoly_at(r1, r2, ov);
                if (opts_.track_sources) sources = merge_sources(r1.sources, r2.sources);
                if (opts_.track_provenance) {
                    // S = pre*p2*post - p1*tail for the rule polynomials p_i.
                    const Word tail = ov.word.subword(r1.lhs.degree(),
                                                      ov.word.degree() - r1.lhs.degree());
                    const Word pre = ov.word.prefix(ov.pos);
                    const Word post = ov.word.subword(ov.pos + r2.lhs.degree(),
                                                      ov.word.degree() - ov.pos - r2.lhs.degree());
                    prov = r2.provenance.conjugated(pre, post, Scalar(1));
                    auto other = r1.provenance.conjugated(Word::one(), tail, Scalar(-1));
                    prov.pieces.insert(prov.pieces.end(), other.pieces.begin(), other.pieces.end());
                }
            } else {
                p = std::move(item.poly);
                sources = std::move(item.sources);
                prov = std::move(item.prov);
            }
            reduce_inplace(p, &sources, &prov);
            if (p.is_zero()) continue;
            if (p.is_constant()) {
                degenerate_ = true;
                break;
            }
            add_rule(std::move(p), std::move(sources), std::move(prov));
        }

        RewriteSystem rs;
        rs.order = ord_;
        rs.truncation_degree = max_deg_;
        rs.homogeneous = homogeneous_;
        rs.degenerate = degenerate_;
        rs.alphabet = alphabet_;
        rs.complete_up_to_degree = degenerate_ || homogeneous_ || !discarded_;
        if (!degenerate_) {
            inter_reduce_rhs();
            for (std::uint32_t r = 0; r < rules_.size(); ++r) {
                if (alive_[r]) rs.rules.push_back(std::move(rules_[r]));
            }
        }
        rs.finalize();
        return rs;
    }

private:
    struct Cmp {
        Completer* c;
        bool operator()(const std::uint32_t& a, const std::uint32_t& b) const {
            const Pending& pa = c->pool_[a];
            const Pending& pb = c->pool_[b];
            // priority_queue pops the largest; invert for smallest-first.
            if (pa.key.degree() != pb.key.degree()) return pa.key.degree() > pb.key.degree();
            int cmp = c->ord_.compare(pa.key, pb.key);
            if (cmp != 0) return cmp > 0;
            return pa.seq > pb.seq;
        }
    };

    void push(Pending item) {
        item.seq = seq_++;
        pool_.push_back(std::move(item));
        queue_.push(static_cast<std::uint32_t>(pool_.size() - 1));
    }

    Pending pop() {
        std::uint32_t id = queue_.top();
        queue_.pop();
        return std::move(pool_[id]);
    }

    std::optional<RewriteSystem::Match> match_word(const Word& w) {
        if (match_cache_.size() > (1u << 20)) match_cache_.clear();
        auto it = match_cache_.find(w);
        if (it != match_cache_.end()) return it->second;
        std::optional<RewriteSystem::Match> best;
        for (std::size_t pos = 0; pos < w.degree() && !best; ++pos) {
            std::optional<RewriteSystem::Match> here;
            for (std::uint32_t r : bucket_[w.letters[pos]]) {
                if (!alive_[r]) continue;
                const Word& lhs = rules_[r].lhs;
                if (lhs.degree() > w.degree() - pos) continue;
                if (here && rules_[here->rule].lhs.degree() <= lhs.degree()) continue;
                if (std::equal(lhs.letters.begin(), lhs.letters.end(), w.letters.begin() + pos)) {
                    here = RewriteSystem::Match{pos, r};
                }
            }
            best = here;
        }
        match_cache_.emplace(w, best);
        return best;
    }

    // Normal form against the live rules; merges rule sources/provenance
    // into the accumulators when tracking.
    void reduce_inplace(Polynomial& p, std::vector<std::uint32_t>* sources, Combination* prov) {
        while (true) {
            const Polynomial::Term* target = nullptr;
            RewriteSystem::Match match{};
            for (const auto& t : p.terms()) {
                if (target && ord_.less(t.first, target->first)) continue;
                auto m = match_word(t.first);
                if (m) {
                    target = &t;
                    match = *m;
                }
            }
            if (!target) return;
            const RewriteRule& rule = rules_[match.rule];
            const Word u = target->first.prefix(match.pos);
            const Word v = target->first.subword(match.pos + rule.lhs.degree(),
                                                 target->first.degree() - match.pos - rule.lhs.degree());
            Scalar c = target->second;
            // p -= c * u*(lhs - rhs)*v; prov keeps expressing the current p.
            p = p.combine(sandwich(u, rule.to_poly(), v), -c);
            if (opts_.track_sources && sources) *sources = merge_sources(*sources, rule.sources);
            if (opts_.track_provenance && prov) {
                auto piece = rule.provenance.conjugated(u, v, -c);
                prov->pieces.insert(prov->pieces.end(), piece.pieces.begin(), piece.pieces.end());
            }
        }
    }

    void add_rule(Polynomial p, std::vector<std::uint32_t> sources, Combination prov) {
        const auto& [lw, lc] = p.leading_term(ord_);
        Word lhs = lw;
        if (opts_.track_provenance) {
            prov = prov.conjugated(Word::one(), Word::one(), Scalar(1) / lc);
        }
        Polynomial monic = p.scaled(Scalar(1) / lc);
        Polynomial rhs = Polynomial::monomial(lhs).combine(monic, Scalar(-1));

        std::uint32_t id = static_cast<std::uint32_t>(rules_.size());
        RewriteRule rule;
        rule.lhs = lhs;
        rule.rhs = std::move(rhs);
        rule.sources = std::move(sources);
        rule.provenance = std::move(prov);
        rules_.push_back(std::move(rule));
        alive_.push_back(true);
        if (bucket_.size() < alphabet_) bucket_.resize(alphabet_);
        bucket_[lhs.letters[0]].push_back(id);
        match_cache_.clear();

        // Retire rules whose lhs became reducible; requeue their polynomials.
        for (std::uint32_t r = 0; r < id; ++r) {
            if (!alive_[r]) continue;
            if (has_factor(rules_[r].lhs, lhs)) {
                alive_[r] = false;
                Pending item;
                item.key = rules_[r].lhs;
                item.poly = rules_[r].to_poly();
                item.sources = rules_[r].sources;
                item.prov = rules_[r].provenance;
                push(std::move(item));
            }
        }

        // Queue overlaps of the new rule with every live rule (both sides).
        for (std::uint32_t r = 0; r < rules_.size(); ++r) {
            if (!alive_[r]) continue;
            queue_overlaps(id, r);
            if (r != id) queue_overlaps(r, id);
        }
    }

    void queue_overlaps(std::uint32_t left, std::uint32_t right) {
        // Monomial-monomial pairs have identically zero S-polynomials.
        if (rules_[left].rhs.is_zero() && rules_[right].rhs.is_zero()) return;
        for (auto& ov : overlap_positions(rules_[left].lhs, rules_[right].lhs)) {
            if (static_cast<int>(ov.word.degree()) > max_deg_) {
                discarded_ = true;
                continue;
            }
            Pending item;
            item.key = std::move(ov.word);
            item.is_spoly = true;
            item.r1 = left;
            item.r2 = right;
            item.pos = ov.pos;
            push(std::move(item));
        }
    }

    void inter_reduce_rhs() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t r = 0; r < rules_.size(); ++r) {
                if (!alive_[r]) continue;
                Polynomial nf = rules_[r].rhs;
                std::vector<std::uint32_t> sources = rules_[r].sources;
                Combination delta; // rhs_new = rhs_old + delta
                reduce_inplace(nf, &sources, &delta);
                if (nf == rules_[r].rhs) continue;
                changed = true;
                rules_[r].rhs = std::move(nf);
                rules_[r].sources = std::move(sources);
                if (opts_.track_provenance) {
                    // rule poly = lhs - rhs, so the polynomial loses delta.
                    auto add = delta.conjugated(Word::one(), Word::one(), Scalar(-1));
                    rules_[r].provenance.pieces.insert(rules_[r].provenance.pieces.end(),
                                                       add.pieces.begin(), add.pieces.end());
                }
                match_cache_.clear();
            }
        }
    }

    const MonomialOrder& ord_;
    int max_deg_;
    std::size_t alphabet_;
    CompletionOptions opts_;
    bool homogeneous_ = false;
    bool degenerate_ = false;
    bool discarded_ = false;
    std::uint64_t seq_ = 0;

    std::vector<RewriteRule> rules_;
    std::vector<bool> alive_;
    std::vector<std::vector<std::uint32_t>> bucket_;
    std::vector<Pending> pool_;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, Cmp> queue_;
    std::unordered_map<Word, std::optional<RewriteSystem::Match>, WordHash> match_cache_;
};

} // namespace

RewriteSystem complete_truncated(const std::vector<Polynomial>& rels, const MonomialOrder& ord,
                                 int max_deg, std::size_t alphabet,
                                 const CompletionOptions& opts) {
    if (max_deg < 0) throw DomainError("truncation degree must be non-negative");
    Completer completer(ord, max_deg, alphabet, opts);
    return completer.run(rels);
}

RewriteSystem presentation_system(const Presentation& p, int max_deg,
                                  std::optional<MonomialOrder> ord,
                                  const CompletionOptions& opts) {
    Presentation expanded = p.schemas.empty() ? p : p.expand_schemas(max_deg);
    int eff = max_deg;
    for (const auto& r : expanded.relations) eff = std::max(eff, r.degree());
    MonomialOrder o = ord ? *ord : expanded.declaration_order();
    return complete_truncated(expanded.relations, o, eff, expanded.gen_count(), opts);
}

namespace {

Polynomial reduce_impl(const Polynomial& p, const RewriteSystem& rs, Combination* trace,
                       const std::vector<bool>* mask = nullptr) {
    if (rs.degenerate) {
        if (trace) trace->pieces.clear();
        return Polynomial::zero();
    }
    std::unordered_map<Word, std::optional<RewriteSystem::Match>, WordHash> cache;
    auto match_word = [&](const Word& w) {
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        auto m = rs.first_match(w, mask);
        cache.emplace(w, m);
        return m;
    };
    Polynomial out = p;
    while (true) {
        const Polynomial::Term* target = nullptr;
        RewriteSystem::Match match{};
        for (const auto& t : out.terms()) {
            if (target && rs.order.less(t.first, target->first)) continue;
            auto m = match_word(t.first);
            if (m) {
                target = &t;
                match = *m;
            }
        }
        if (!target) return out;
        const RewriteRule& rule = rs.rules[match.rule];
        const Word u = target->first.prefix(match.pos);
        const Word v = target->first.subword(match.pos + rule.lhs.degree(),
                                             target->first.degree() - match.pos - rule.lhs.degree());
        Scalar c = target->second;
        out = out.combine(sandwich(u, rule.to_poly(), v), -c);
        if (trace) trace->add(u, match.rule, v, c);
    }
}

} // namespace

Polynomial reduce_poly(const Polynomial& p, const RewriteSystem& rs) {
    return reduce_impl(p, rs, nullptr);
}

Polynomial reduce_poly_masked(const Polynomial& p, const RewriteSystem& rs,
                              const std::vector<bool>& rule_mask) {
    return reduce_impl(p, rs, nullptr, &rule_mask);
}

ReductionTrace reduce_with_trace(const Polynomial& p, const RewriteSystem& rs) {
    ReductionTrace tr;
    tr.normal_form = reduce_impl(p, rs, &tr.used);
    return tr;
}

std::vector<Word> find_overlaps(const RewriteRule& r1, const RewriteRule& r2) {
    std::vector<Word> words;
    for (auto& ov : overlap_positions(r1.lhs, r2.lhs)) words.push_back(std::move(ov.word));
    std::sort(words.begin(), words.end(), word_key_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

const char* to_string(Membership v) {
    switch (v) {
        case Membership::member: return "member";
        case Membership::non_member_up_to_degree: return "non-member-up-to-degree";
        default: return "unknown";
    }
}

Membership ideal_member(const Polynomial& p, const RewriteSystem& rs) {
    if (p.degree() > rs.truncation_degree) throw DomainError("degree exceeds truncation");
    if (reduce_poly(p, rs).is_zero()) return Membership::member;
    if (rs.complete_up_to_degree && rs.homogeneous) return Membership::non_member_up_to_degree;
    return Membership::unknown;
}

namespace {

// DP over "longest suffix that is a proper prefix of some lhs" states.
// Valid for inter-reduced rule sets (no lhs is a factor of another).
struct PrefixDP {
    std::vector<std::vector<std::int32_t>> next; // state x letter; -1 = dead
    std::size_t alphabet = 0;

    explicit PrefixDP(const RewriteSystem& rs) {
        alphabet = rs.alphabet;
        std::unordered_set<Word, WordHash> lhs_set;
        std::size_t max_len = 0;
        for (const auto& r : rs.rules) {
            lhs_set.insert(r.lhs);
            max_len = std::max(max_len, r.lhs.degree());
        }
        std::unordered_map<Word, std::int32_t, WordHash> state_id;
        std::vector<Word> states;
        auto intern = [&](const Word& w) {
            auto [it, fresh] = state_id.emplace(w, static_cast<std::int32_t>(states.size()));
            if (fresh) states.push_back(w);
            return it->second;
        };
        intern(Word::one());
        for (const auto& r : rs.rules) {
            for (std::size_t len = 1; len < r.lhs.degree(); ++len) intern(r.lhs.prefix(len));
        }
        next.assign(states.size(), std::vector<std::int32_t>(alphabet, -1));
        for (std::size_t s = 0; s < states.size(); ++s) {
            for (std::size_t c = 0; c < alphabet; ++c) {
                Word t = states[s] * Word::single(static_cast<Gen>(c));
                std::int32_t target = 0;
                bool dead = false;
                // Longest-suffix scan; for inter-reduced systems the first
                // hit (lhs or proper prefix) decides.
                for (std::size_t len = t.degree(); len >= 1; --len) {
                    Word suf = t.suffix(len);
                    if (lhs_set.count(suf)) {
                        dead = true;
                        break;
                    }
                    auto it = state_id.find(suf);
                    if (it != state_id.end()) {
                        target = it->second;
                        break;
                    }
                }
                next[s][c] = dead ? -1 : target;
            }
        }
    }

    std::vector<Count> counts(int max_d) const {
        std::vector<Count> out;
        out.reserve(max_d + 1);
        out.emplace_back(1);
        std::vector<Count> cur(next.size(), 0);
        cur[0] = 1;
        for (int d = 1; d <= max_d; ++d) {
            std::vector<Count> nxt(next.size(), 0);
            for (std::size_t s = 0; s < next.size(); ++s) {
                if (cur[s] == 0) continue;
                for (std::size_t c = 0; c < alphabet; ++c) {
                    std::int32_t t = next[s][c];
                    if (t >= 0) nxt[t] += cur[s];
                }
            }
            Count total = 0;
            for (const auto& v : nxt) total += v;
            out.push_back(total);
            cur = std::move(nxt);
        }
        return out;
    }
};

} // namespace

Count count_normal_words(const RewriteSystem& rs, int d) {
    if (d < 0 || d > rs.truncation_degree) throw DomainError("degree out of range");
    if (rs.degenerate) return 0;
    if (d == 0) return 1;
    // Length-1 lhs rules make letters dead; PrefixDP handles them uniformly.
    PrefixDP dp(rs);
    return dp.counts(d).back();
}

HilbertVector hilbert_profile(const RewriteSystem& rs, int max_d) {
    if (max_d < 0 || max_d > rs.truncation_degree) throw DomainError("degree out of range");
    HilbertVector hv;
    hv.exact = rs.complete_up_to_degree && rs.homogeneous;
    if (rs.degenerate) {
        hv.dims.assign(max_d + 1, Count(0));
        return hv;
    }
    PrefixDP dp(rs);
    hv.dims = dp.counts(max_d);
    return hv;
}

NormalWordAutomaton normal_word_automaton(const RewriteSystem& rs) {
    for (const auto& r : rs.rules) {
        if (!r.rhs.is_zero()) throw DomainError("monomial fast path requires monomial rules");
    }
    NormalWordAutomaton a;
    a.alphabet = rs.alphabet;
    if (rs.degenerate) return a; // empty language
    // Aho-Corasick over the lhs patterns; accepting states are the
    // non-terminal trie nodes.
    struct Node {
        std::unordered_map<Gen, std::int32_t> child;
        std::int32_t fail = 0;
        bool terminal = false;
    };
    std::vector<Node> trie(1);
    for (const auto& r : rs.rules) {
        std::int32_t s = 0;
        for (Gen g : r.lhs.letters) {
            auto it = trie[s].child.find(g);
            if (it == trie[s].child.end()) {
                trie.push_back({});
                it = trie[s].child.emplace(g, static_cast<std::int32_t>(trie.size() - 1)).first;
            }
            s = it->second;
        }
        trie[s].terminal = true;
    }
    // BFS failure links.
    std::vector<std::int32_t> order;
    for (auto& [g, c] : trie[0].child) {
        trie[c].fail = 0;
        order.push_back(c);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::int32_t s = order[i];
        for (auto& [g, c] : trie[s].child) {
            std::int32_t f = trie[s].fail;
            while (f != 0 && !trie[f].child.count(g)) f = trie[f].fail;
            auto it = trie[f].child.find(g);
            trie[c].fail = (it != trie[f].child.end() && it->second != c) ? it->second : 0;
            if (trie[trie[c].fail].terminal) trie[c].terminal = true;
            order.push_back(c);
        }
    }
    auto step = [&](std::int32_t s, Gen g) {
        while (true) {
            auto it = trie[s].child.find(g);
            if (it != trie[s].child.end()) return it->second;
            if (s == 0) return std::int32_t{0};
            s = trie[s].fail;
        }
    };
    // Keep only non-terminal states reachable without passing a terminal.
    std::vector<std::int32_t> remap(trie.size(), -1);
    std::vector<std::int32_t> keep;
    for (std::size_t s = 0; s < trie.size(); ++s) {
        if (!trie[s].terminal) {
            remap[s] = static_cast<std::int32_t>(keep.size());
            keep.push_back(static_cast<std::int32_t>(s));
        }
    }
    a.next.assign(keep.size(), std::vector<std::int32_t>(a.alphabet, NormalWordAutomaton::dead));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t g = 0; g < a.alphabet; ++g) {
            std::int32_t t = step(keep[i], static_cast<Gen>(g));
            if (!trie[t].terminal) a.next[i][g] = remap[t];
        }
    }
    return a;
}

std::vector<Count> NormalWordAutomaton::path_counts(int max_d) const {
    std::vector<Count> out;
    out.reserve(max_d + 1);
    if (next.empty()) {
        out.assign(max_d + 1, Count(0));
        return out;
    }
    out.emplace_back(1);
    std::vector<Count> cur(next.size(), 0);
    cur[0] = 1;
    for (int d = 1; d <= max_d; ++d) {
        std::vector<Count> nxt(next.size(), 0);
        for (std::size_t s = 0; s < next.size(); ++s) {
            if (cur[s] == 0) continue;
            for (std::size_t c = 0; c < alphabet; ++c) {
                std::int32_t t = next[s][c];
                if (t != dead) nxt[t] += cur[s];
            }
        }
        Count total = 0;
        for (const auto& v : nxt) total += v;
        out.push_back(total);
        cur = std::move(nxt);
    }
    return out;
}

bool confluent_up_to(const RewriteSystem& rs, int max_deg) {
    if (rs.degenerate) return true;
    for (std::uint32_t i = 0; i < rs.rules.size(); ++i) {
        for (std::uint32_t j = 0; j < rs.rules.size(); ++j) {
            for (const auto& ov : overlap_positions(rs.rules[i].lhs, rs.rules[j].lhs)) {
                if (static_cast<int>(ov.word.degree()) > max_deg) continue;
                Polynomial s = spoly_at(rs.rules[i], rs.rules[j], ov);
                if (!reduce_poly(s, rs).is_zero()) return false;
            }
        }
    }
    return true;
}

} // namespace fpa

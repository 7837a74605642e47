#include "fpa/equiv.hpp"

#include "fpa/error.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>

namespace fpa {

const char* to_string(EquivalenceReport::Verdict v) {
    switch (v) {
        case EquivalenceReport::Verdict::consistent: return "consistent-up-to-degree";
        case EquivalenceReport::Verdict::mismatch: return "mismatch";
        default: return "inconclusive";
    }
}

EquivalenceReport compare_hilbert(const Presentation& p1, const Presentation& p2, int max_d,
                                  int ratio) {
    if (ratio < 1) throw DomainError("ratio must be >= 1");
    if (max_d < 0) throw DomainError("degree bound must be >= 0");
    Presentation q1 = p1.expand_schemas(ratio * max_d);
    Presentation q2 = p2.expand_schemas(max_d);
    for (const auto& r : q1.relations) {
        if (!r.is_homogeneous()) throw DomainError("compare_hilbert requires homogeneous presentations");
    }
    for (const auto& r : q2.relations) {
        if (!r.is_homogeneous()) throw DomainError("compare_hilbert requires homogeneous presentations");
    }
    RewriteSystem s1 = presentation_system(q1, ratio * max_d);
    RewriteSystem s2 = presentation_system(q2, max_d);
    HilbertVector h1 = hilbert_profile(s1, ratio * max_d);
    HilbertVector h2 = hilbert_profile(s2, max_d);

    EquivalenceReport rep;
    rep.degree_bound = max_d;
    rep.ratio = ratio;
    rep.exact = h1.exact && h2.exact;
    for (int d = 0; d <= max_d; ++d) {
        rep.per_degree.push_back({d, h1.dims[ratio * d], h2.dims[d]});
        if (rep.mismatch_degree < 0 && h1.dims[ratio * d] != h2.dims[d]) {
            rep.mismatch_degree = d;
        }
    }
    if (rep.mismatch_degree >= 0) {
        rep.verdict = EquivalenceReport::Verdict::mismatch;
    } else {
        rep.verdict = rep.exact ? EquivalenceReport::Verdict::consistent
                                : EquivalenceReport::Verdict::inconclusive;
    }
    return rep;
}

EquivalenceReport check_generator_map(const Presentation& src, const Presentation& dst,
                                      const GeneratorMap& gm, int max_deg) {
    if (gm.images.size() != src.gen_count()) throw DomainError("generator map size mismatch");
    for (const auto& img : gm.images) {
        for (const auto& [w, c] : img.terms()) {
            (void)c;
            for (Gen g : w.letters) {
                if (g >= dst.gen_count()) throw DomainError("generator map image mentions an unknown generator");
            }
        }
    }
    Presentation s = src.expand_schemas(max_deg);
    RewriteSystem sys = presentation_system(dst, max_deg);

    EquivalenceReport rep;
    rep.degree_bound = max_deg;
    bool any_unknown = false;
    for (std::size_t i = 0; i < s.relations.size(); ++i) {
        Polynomial image = s.relations[i].substitute(gm.images);
        if (image.degree() > sys.truncation_degree) {
            throw DomainError("image degree exceeds truncation");
        }
        Membership m = ideal_member(image, sys);
        rep.relation_verdicts.push_back(m);
        if (m == Membership::non_member_up_to_degree && rep.mismatch_degree < 0) {
            rep.mismatch_degree = std::max(image.degree(), s.relations[i].degree());
        }
        if (m == Membership::unknown) any_unknown = true;
    }
    if (rep.mismatch_degree >= 0) {
        rep.verdict = EquivalenceReport::Verdict::mismatch;
    } else if (any_unknown) {
        rep.verdict = EquivalenceReport::Verdict::inconclusive;
    } else {
        rep.verdict = EquivalenceReport::Verdict::consistent;
        rep.exact = true;
    }
    return rep;
}

namespace {

// Removes marked generators (no surviving relation may mention them) and
// compacts indices.
void drop_generators(Presentation& p, const std::vector<bool>& doomed) {
    std::vector<Gen> map(p.gen_count(), 0);
    std::vector<std::string> gens;
    std::vector<Parity> parity;
    std::vector<PeirceType> ptypes;
    for (Gen i = 0; i < p.gen_count(); ++i) {
        if (doomed[i]) continue;
        map[i] = static_cast<Gen>(gens.size());
        gens.push_back(p.gens[i]);
        if (p.parity) parity.push_back((*p.parity)[i]);
        if (p.peirce_types) ptypes.push_back((*p.peirce_types)[i]);
    }
    std::vector<Polynomial> rels;
    for (const auto& r : p.relations) {
        Polynomial nr = r.relabel(map);
        if (!nr.is_zero()) rels.push_back(std::move(nr));
    }
    p.relations = std::move(rels);
    p.gens = std::move(gens);
    if (p.parity) p.parity = std::move(parity);
    if (p.peirce_types) p.peirce_types = std::move(ptypes);
}

// (2): a relation that is a single generator g means g = 0; erase g-words
// everywhere and delete g. Processed as a batch: the deletions commute.
bool zero_generator_pass(Presentation& p) {
    std::vector<bool> zero(p.gen_count(), false);
    bool any = false;
    for (const auto& r : p.relations) {
        if (r.term_count() == 1 && r.terms().front().first.degree() == 1) {
            zero[r.terms().front().first.letters[0]] = true;
            any = true;
        }
    }
    if (!any) return false;
    std::vector<Polynomial> rels;
    rels.reserve(p.relations.size());
    for (const auto& s : p.relations) {
        std::vector<Polynomial::Term> kept;
        for (const auto& t : s.terms()) {
            bool mentions_zero = std::any_of(t.first.letters.begin(), t.first.letters.end(),
                                             [&zero](Gen g) { return zero[g]; });
            if (!mentions_zero) kept.push_back(t);
        }
        Polynomial ns = Polynomial::from_terms(std::move(kept));
        if (!ns.is_zero()) rels.push_back(std::move(ns));
    }
    p.relations = std::move(rels);
    drop_generators(p, zero);
    p.canonicalize();
    return true;
}

// (3): a relation of the form g - P with P free of g eliminates g by
// substitution, unless some substituted relation would exceed max_deg.
bool elimination_pass(Presentation& p, int max_deg) {
    MonomialOrder ord = p.declaration_order();
    for (std::size_t idx = 0; idx < p.relations.size(); ++idx) {
        const Polynomial& r = p.relations[idx];
        // Candidate single-generator terms, smallest first.
        std::vector<const Polynomial::Term*> candidates;
        for (const auto& t : r.terms()) {
            if (t.first.degree() == 1) candidates.push_back(&t);
        }
        std::sort(candidates.begin(), candidates.end(),
                  [&ord](const auto* a, const auto* b) { return ord.less(a->first, b->first); });
        for (const auto* cand : candidates) {
            Gen g = cand->first.letters[0];
            Polynomial rest = r.combine(Polynomial::generator(g), -cand->second);
            if (rest.mentions(g)) continue;
            Polynomial image = rest.scaled(Scalar(-1) / cand->second);
            if (image.degree() > max_deg) continue;
            // Only relations mentioning g change under the substitution.
            std::vector<std::pair<std::size_t, Polynomial>> updated;
            bool blowup = false;
            for (std::size_t k = 0; k < p.relations.size() && !blowup; ++k) {
                if (!p.relations[k].mentions(g)) continue;
                Polynomial nr = p.relations[k].substitute_one(g, image);
                if (nr.degree() > max_deg) {
                    blowup = true;
                    break;
                }
                updated.emplace_back(k, std::move(nr));
            }
            if (blowup) continue;
            std::vector<Polynomial> rels;
            rels.reserve(p.relations.size());
            std::size_t next = 0;
            for (std::size_t k = 0; k < p.relations.size(); ++k) {
                if (next < updated.size() && updated[next].first == k) {
                    if (!updated[next].second.is_zero()) rels.push_back(std::move(updated[next].second));
                    ++next;
                } else {
                    rels.push_back(p.relations[k]);
                }
            }
            p.relations = std::move(rels);
            std::vector<bool> doomed(p.gen_count(), false);
            doomed[g] = true;
            drop_generators(p, doomed);
            p.canonicalize();
            return true;
        }
    }
    return false;
}

// (4): drop relations that reduce to zero using only rules derived from the
// other (still kept) relations. Sources-filtered reduction keeps the drop
// set sound when several relations are mutually redundant.
bool redundancy_pass(Presentation& p, int max_deg) {
    if (p.relations.size() < 2) return false;
    MonomialOrder ord = p.declaration_order();
    int eff = max_deg;
    for (const auto& r : p.relations) eff = std::max(eff, r.degree());
    CompletionOptions opts;
    opts.track_sources = true;
    RewriteSystem sys = complete_truncated(p.relations, ord, eff, p.gen_count(), opts);
    if (sys.degenerate) return false;

    std::vector<bool> dropped(p.relations.size(), false);
    bool changed = false;
    for (std::uint32_t k = 0; k < p.relations.size(); ++k) {
        std::vector<bool> mask(sys.rules.size());
        for (std::size_t r = 0; r < sys.rules.size(); ++r) {
            const auto& sources = sys.rules[r].sources;
            mask[r] = !std::any_of(sources.begin(), sources.end(),
                                   [&](std::uint32_t s) { return s == k || dropped[s]; });
        }
        if (reduce_poly_masked(p.relations[k], sys, mask).is_zero()) {
            dropped[k] = true;
            changed = true;
        }
    }
    if (changed) {
        std::vector<Polynomial> rels;
        for (std::size_t k = 0; k < p.relations.size(); ++k) {
            if (!dropped[k]) rels.push_back(p.relations[k]);
        }
        p.relations = std::move(rels);
    }
    return changed;
}

} // namespace

Presentation tietze_simplify(const Presentation& p, int max_deg) {
    if (max_deg < 1) throw DomainError("max_deg must be >= 1");
    const bool timing = std::getenv("FPA_TIMING") != nullptr;
    auto stamp = [&timing](const char* what, const Presentation& q) {
        if (timing) {
            std::fprintf(stderr, "[tietze] %s: gens=%zu rels=%zu t=%ld\n", what, q.gen_count(),
                         q.relations.size(),
                         (long)std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now().time_since_epoch())
                             .count());
        }
    };
    Presentation cur = p.expand_schemas(max_deg);
    cur.idempotent.reset();
    cur.witness_e.reset();
    cur.witness_f.reset();
    cur.canonicalize();
    bool changed = true;
    while (changed) {
        changed = false;
        // (1) is subsumed by canonicalize(): monic relations, duplicates gone.
        while (zero_generator_pass(cur)) changed = true;
        stamp("zero", cur);
        while (elimination_pass(cur, max_deg)) changed = true;
        stamp("elim", cur);
        if (redundancy_pass(cur, max_deg)) changed = true;
        stamp("redundancy", cur);
    }
    return cur;
}

} // namespace fpa

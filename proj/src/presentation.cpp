#include "fpa/presentation.hpp"

#include "fpa/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace fpa {

Polynomial RelationSchema::instantiate(long i) const {
    Polynomial out;
    for (const auto& term : terms) {
        Word w;
        for (const auto& f : term.factors) {
            long e = f.exp_coeff * i + f.exp_const;
            if (e < 0) throw DomainError("schema exponent negative at " + param + "=" + std::to_string(i));
            for (long k = 0; k < e; ++k) w.letters.push_back(f.gen);
        }
        out = out + Polynomial::monomial(std::move(w), term.coeff);
    }
    return out;
}

long RelationSchema::instance_degree(long i) const {
    long deg = 0;
    for (const auto& term : terms) {
        long d = 0;
        for (const auto& f : term.factors) d += f.exp_coeff * i + f.exp_const;
        deg = std::max(deg, d);
    }
    return deg;
}

std::optional<Gen> Presentation::find_gen(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] == name) return static_cast<Gen>(i);
    }
    return std::nullopt;
}

std::vector<Parity> Presentation::parity_table() const {
    if (parity) return *parity;
    return std::vector<Parity>(gens.size(), Parity::odd);
}

void sort_relations(std::vector<Polynomial>& rels, const MonomialOrder& ord) {
    std::sort(rels.begin(), rels.end(), [&ord](const Polynomial& a, const Polynomial& b) {
        return poly_cmp(a, b, ord) < 0;
    });
}

void Presentation::canonicalize() {
    MonomialOrder ord = declaration_order();
    for (auto& r : relations) {
        if (r.is_zero()) throw ValidationError("relation is the zero polynomial");
        r = r.monic(ord);
    }
    sort_relations(relations, ord);
    relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
}

void Presentation::validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& n : gens) {
        if (n.empty()) throw ValidationError("empty generator name");
        if (!seen.insert(n).second) throw ValidationError("duplicate generator name: " + n);
    }
    auto check_poly = [this](const Polynomial& p, const char* what) {
        for (const auto& [w, c] : p.terms()) {
            (void)c;
            for (Gen g : w.letters) {
                if (g >= gens.size()) throw ValidationError(std::string(what) + " mentions an undeclared generator");
            }
        }
    };
    for (const auto& r : relations) {
        if (r.is_zero()) throw ValidationError("relation is the zero polynomial");
        check_poly(r, "relation");
    }
    if (parity && parity->size() != gens.size()) throw ValidationError("parity table size mismatch");
    for (const auto& s : schemas) {
        if (s.terms.empty()) throw ValidationError("empty schema pattern");
        for (const auto& t : s.terms) {
            long total_coeff = 0;
            for (const auto& f : t.factors) {
                if (f.gen >= gens.size()) throw ValidationError("schema mentions an undeclared generator");
                if (f.exp_coeff < 0) throw ValidationError("malformed schema exponent: negative parameter coefficient");
                if (f.exp_coeff * s.lower + f.exp_const < 0) {
                    throw ValidationError("malformed schema exponent: negative at the lower bound");
                }
                total_coeff += f.exp_coeff;
            }
            if (total_coeff <= 0) {
                throw ValidationError("malformed schema exponent: instance degree must strictly increase");
            }
        }
    }
    if (idempotent && *idempotent >= gens.size()) throw ValidationError("idempotent is not a declared generator");
    auto check_witness = [&](const std::optional<WitnessDecomposition>& w, Side side) {
        if (!w) return;
        if (w->side != side) throw ValidationError("witness side mismatch");
        if (w->terms.empty()) throw ValidationError("witness must have at least one term");
        if (!idempotent) throw ValidationError("witness requires a designated idempotent");
        for (const auto& t : w->terms) {
            if (is_zero(t.coeff)) throw ValidationError("witness term with zero coefficient");
            for (Gen g : t.u.letters) {
                if (g >= gens.size()) throw ValidationError("witness mentions an undeclared generator");
            }
            for (Gen g : t.v.letters) {
                if (g >= gens.size()) throw ValidationError("witness mentions an undeclared generator");
            }
        }
    };
    check_witness(witness_e, Side::e);
    check_witness(witness_f, Side::f);
}

Presentation Presentation::expand_schemas(int max_deg) const {
    Presentation out = *this;
    out.schemas.clear();
    for (const auto& s : schemas) {
        long prev_deg = -1;
        for (long i = s.lower;; ++i) {
            long d = s.instance_degree(i);
            if (d <= prev_deg) throw ValidationError("malformed schema exponent: instance degree must strictly increase");
            prev_deg = d;
            if (d > max_deg) break;
            Polynomial inst = s.instantiate(i);
            if (!inst.is_zero()) out.relations.push_back(std::move(inst));
        }
    }
    out.canonicalize();
    return out;
}

} // namespace fpa

#include "fpa/peirce.hpp"

#include "fpa/equiv.hpp"
#include "fpa/error.hpp"
#include "fpa/grading.hpp"
#include "fpa/pairenc.hpp"

#include <algorithm>
#include <unordered_set>

namespace fpa {

const char* to_string(WitnessVerdict v) {
    switch (v) {
        case WitnessVerdict::verified: return "verified";
        case WitnessVerdict::refuted: return "refuted";
        default: return "inconclusive";
    }
}

namespace {

Polynomial witness_term_poly(const WitnessTerm& t, Gen e, bool complement) {
    // c * u * e * v, or c * u * (1-e) * v when complement is set.
    Polynomial sandwiched = Polynomial::monomial(t.u * Word::single(e) * t.v, t.coeff);
    if (!complement) return sandwiched;
    return Polynomial::monomial(t.u * t.v, t.coeff) - sandwiched;
}

Polynomial idempotent_defect(Gen e) {
    Word ee;
    ee.letters = {e, e};
    return Polynomial::monomial(ee) - Polynomial::generator(e);
}

} // namespace

WitnessVerdict verify_witnesses(const Presentation& p, const IdempotentSpec& spec,
                                const WitnessDecomposition& we, const WitnessDecomposition& wf,
                                int max_deg) {
    if (we.terms.empty() || wf.terms.empty()) throw ValidationError("witness must have at least one term");
    if (spec.e >= p.gen_count()) throw DomainError("idempotent is not a declared generator");
    RewriteSystem sys = presentation_system(p, max_deg);
    if (!reduce_poly(idempotent_defect(spec.e), sys).is_zero()) {
        throw DomainError("missing idempotent relation");
    }
    Polynomial qe = Polynomial::one();
    for (const auto& t : we.terms) qe = qe - witness_term_poly(t, spec.e, false);
    Polynomial qf = Polynomial::one();
    for (const auto& t : wf.terms) qf = qf - witness_term_poly(t, spec.e, true);
    if (qe.degree() > sys.truncation_degree || qf.degree() > sys.truncation_degree) {
        throw DomainError("degree of witness expression exceeds truncation");
    }
    bool ok_e = reduce_poly(qe, sys).is_zero();
    bool ok_f = reduce_poly(qf, sys).is_zero();
    return (ok_e && ok_f) ? WitnessVerdict::verified : WitnessVerdict::inconclusive;
}

std::vector<Polynomial> homogenize_images(const Presentation& p, const IdempotentSpec& spec) {
    if (spec.e >= p.gen_count()) throw DomainError("idempotent is not a declared generator");
    std::vector<Polynomial> images(p.gen_count());
    images[spec.e] = Polynomial::generator(0);
    Gen next = 1;
    for (Gen g = 0; g < p.gen_count(); ++g) {
        if (g == spec.e) continue;
        Polynomial sum;
        for (int k = 0; k < 4; ++k) sum = sum + Polynomial::generator(next++);
        images[g] = std::move(sum);
    }
    return images;
}

Presentation peirce_homogenize(const Presentation& p, const IdempotentSpec& spec) {
    if (spec.e >= p.gen_count()) throw DomainError("idempotent is not a declared generator");
    MonomialOrder ord = p.declaration_order();
    Polynomial defect = idempotent_defect(spec.e).monic(ord);
    if (std::find(p.relations.begin(), p.relations.end(), defect) == p.relations.end()) {
        throw DomainError("missing idempotent relation");
    }

    Presentation out;
    std::vector<PeirceType> types;
    out.gens.push_back(p.gens[spec.e]);
    types.push_back({Side::e, Side::e});
    static constexpr const char* suffix[4] = {"_ee", "_ef", "_fe", "_ff"};
    static constexpr Side sides[4][2] = {{Side::e, Side::e},
                                         {Side::e, Side::f},
                                         {Side::f, Side::e},
                                         {Side::f, Side::f}};
    for (Gen g = 0; g < p.gen_count(); ++g) {
        if (g == spec.e) continue;
        for (int k = 0; k < 4; ++k) {
            out.gens.push_back(p.gens[g] + suffix[k]);
            types.push_back({sides[k][0], sides[k][1]});
        }
    }
    {
        std::unordered_set<std::string> names(out.gens.begin(), out.gens.end());
        if (names.size() != out.gens.size()) {
            throw ValidationError("generated component name collides with an existing generator");
        }
    }

    const Gen eps = 0;
    auto gp = [](Gen g) { return Polynomial::generator(g); };
    out.relations.push_back(idempotent_defect(eps));
    for (Gen g = 1; g < out.gens.size(); ++g) {
        PeirceType t = types[g];
        Polynomial left = gp(eps) * gp(g);
        Polynomial right = gp(g) * gp(eps);
        out.relations.push_back(t.left == Side::e ? left - gp(g) : left);
        out.relations.push_back(t.right == Side::e ? right - gp(g) : right);
    }
    std::vector<Polynomial> images = homogenize_images(p, spec);
    for (const auto& r : p.relations) {
        Polynomial nr = r.substitute(images);
        if (!nr.is_zero()) out.relations.push_back(std::move(nr));
    }

    out.peirce_types = std::move(types);
    std::vector<Parity> parity;
    for (const auto& t : *out.peirce_types) {
        parity.push_back(t.matched() ? Parity::even : Parity::odd);
    }
    out.parity = std::move(parity);
    out.idempotent = eps;
    out.canonicalize();
    out.validate();
    return out;
}

namespace {

struct OmegaBuilder {
    Presentation out;
    std::vector<Polynomial> defs;
    std::vector<PeirceType> types;

    Gen add(std::string name, PeirceType t, Polynomial def) {
        if (std::find(out.gens.begin(), out.gens.end(), name) != out.gens.end()) {
            throw ValidationError("generated name collision: " + name);
        }
        out.gens.push_back(std::move(name));
        types.push_back(t);
        defs.push_back(std::move(def));
        return static_cast<Gen>(out.gens.size() - 1);
    }
};

} // namespace

OmegaPresentation build_odd_generating_set(const Presentation& hp,
                                           const WitnessDecomposition& we,
                                           const WitnessDecomposition& wf,
                                           std::span<const Polynomial> original_images) {
    if (!hp.peirce_types || !hp.idempotent) {
        throw DomainError("build_odd_generating_set expects a Peirce-homogenized presentation");
    }
    if (we.terms.empty() || wf.terms.empty()) throw ValidationError("witness must have at least one term");
    const auto& types = *hp.peirce_types;
    const Gen eps = *hp.idempotent;

    auto homog = [&original_images](const Word& w, const Scalar& c) {
        return Polynomial::monomial(w, c).substitute(original_images);
    };

    OmegaBuilder b;
    const Polynomial eps_poly = Polynomial::generator(eps);
    const Polynomial f_poly = Polynomial::one() - eps_poly;

    // (i) mismatched typed generators survive as themselves.
    std::vector<Gen> mismatched;
    for (Gen g = 0; g < hp.gen_count(); ++g) {
        if (!types[g].matched()) {
            b.add(hp.gens[g], types[g], Polynomial::generator(g));
            mismatched.push_back(g);
        }
    }
    std::vector<Gen> matched_ee, matched_ff;
    for (Gen g = 0; g < hp.gen_count(); ++g) {
        if (!types[g].matched()) continue;
        (types[g].left == Side::e ? matched_ee : matched_ff).push_back(g);
    }

    OmegaPresentation res;
    // (ii) lambda_{z,j} = z * s_j * f and rho_j = f * t_j * e over w_f.
    std::vector<std::vector<Gen>> lambda(hp.gen_count());
    for (Gen z : matched_ee) {
        for (std::size_t j = 0; j < wf.terms.size(); ++j) {
            const auto& t = wf.terms[j];
            Polynomial def = Polynomial::generator(z) * homog(t.u, t.coeff) * f_poly;
            Gen idx = b.add("l_" + hp.gens[z] + "_" + std::to_string(j + 1),
                            {Side::e, Side::f}, std::move(def));
            lambda[z].push_back(idx);
            if (z == eps) res.lambda_eps.push_back(idx);
        }
    }
    std::vector<Gen> rho;
    for (std::size_t j = 0; j < wf.terms.size(); ++j) {
        Polynomial def = f_poly * homog(wf.terms[j].v, Scalar(1)) * eps_poly;
        rho.push_back(b.add("r_" + std::to_string(j + 1), {Side::f, Side::e}, std::move(def)));
        res.rho.push_back(rho.back());
    }
    // (iii) mu_{z,i} = z * u_i * e, nu_i = e * v_i * f, sigma_i = f * u_i * e
    // over w_e.
    std::vector<std::vector<Gen>> mu(hp.gen_count());
    for (Gen z : matched_ff) {
        for (std::size_t i = 0; i < we.terms.size(); ++i) {
            const auto& t = we.terms[i];
            Polynomial def = Polynomial::generator(z) * homog(t.u, t.coeff) * eps_poly;
            mu[z].push_back(b.add("m_" + hp.gens[z] + "_" + std::to_string(i + 1),
                                  {Side::f, Side::e}, std::move(def)));
        }
    }
    std::vector<Gen> nu, sigma;
    for (std::size_t i = 0; i < we.terms.size(); ++i) {
        Polynomial def = eps_poly * homog(we.terms[i].v, Scalar(1)) * f_poly;
        nu.push_back(b.add("n_" + std::to_string(i + 1), {Side::e, Side::f}, std::move(def)));
        res.nu.push_back(nu.back());
    }
    for (std::size_t i = 0; i < we.terms.size(); ++i) {
        const auto& t = we.terms[i];
        Polynomial def = f_poly * homog(t.u, t.coeff) * eps_poly;
        sigma.push_back(b.add("s_" + std::to_string(i + 1), {Side::f, Side::e}, std::move(def)));
        res.sigma.push_back(sigma.back());
    }

    // Substitution of every homogenized generator by its Omega expression.
    std::vector<Polynomial> subst(hp.gen_count());
    {
        std::vector<Gen> omega_of(hp.gen_count(), 0);
        for (std::size_t k = 0; k < mismatched.size(); ++k) {
            omega_of[mismatched[k]] = static_cast<Gen>(k);
        }
        for (Gen g = 0; g < hp.gen_count(); ++g) {
            if (!types[g].matched()) {
                subst[g] = Polynomial::generator(omega_of[g]);
            } else if (types[g].left == Side::e) {
                Polynomial sum;
                for (std::size_t j = 0; j < wf.terms.size(); ++j) {
                    sum = sum + Polynomial::generator(lambda[g][j]) * Polynomial::generator(rho[j]);
                }
                subst[g] = std::move(sum);
            } else {
                Polynomial sum;
                for (std::size_t i = 0; i < we.terms.size(); ++i) {
                    sum = sum + Polynomial::generator(mu[g][i]) * Polynomial::generator(nu[i]);
                }
                subst[g] = std::move(sum);
            }
        }
    }

    // Relations: substituted homogenized relations plus the consistency
    // relation of every Omega generator, each split by parity (word length).
    std::vector<Polynomial> raw;
    for (const auto& r : hp.relations) raw.push_back(r.substitute(subst));
    for (Gen w = 0; w < b.out.gens.size(); ++w) {
        raw.push_back(Polynomial::generator(w) - b.defs[w].substitute(subst));
    }
    std::vector<Parity> all_odd(b.out.gens.size(), Parity::odd);
    for (const auto& r : raw) {
        auto [even, odd] = r.parity_split(all_odd);
        if (!even.is_zero()) b.out.relations.push_back(std::move(even));
        if (!odd.is_zero()) b.out.relations.push_back(std::move(odd));
    }

    b.out.parity = all_odd;
    b.out.peirce_types = b.types;
    b.out.canonicalize();
    b.out.validate();
    res.pres = std::move(b.out);
    res.defs = std::move(b.defs);
    return res;
}

PeirceResult peirce_component_presentation(const Presentation& p, const IdempotentSpec& spec,
                                           const WitnessDecomposition& we,
                                           const WitnessDecomposition& wf,
                                           const PeirceOptions& opts) {
    PeirceResult res;
    res.witnesses = verify_witnesses(p, spec, we, wf, opts.max_deg);
    if (res.witnesses != WitnessVerdict::verified && !opts.override_witnesses) {
        res.refused = true;
        return res;
    }

    Presentation expanded = p.expand_schemas(opts.max_deg);
    Presentation hp = peirce_homogenize(expanded, spec);
    std::vector<Polynomial> images = homogenize_images(expanded, spec);
    OmegaPresentation omega = build_odd_generating_set(hp, we, wf, images);
    EvenPartResult even = even_part_presentation(omega.pres, opts.max_deg, /*simplify=*/false);

    const std::size_t nomega = omega.pres.gen_count();
    Polynomial f_expr;
    for (std::size_t i = 0; i < omega.sigma.size(); ++i) {
        f_expr = f_expr + Polynomial::generator(pair_index(omega.sigma[i], omega.nu[i], nomega));
    }
    Polynomial e_expr;
    for (std::size_t j = 0; j < omega.lambda_eps.size(); ++j) {
        e_expr = e_expr + Polynomial::generator(pair_index(omega.lambda_eps[j], omega.rho[j], nomega));
    }
    res.unit_expression = e_expr;

    Presentation raw = even.presentation;
    if (!f_expr.is_zero()) raw.relations.push_back(f_expr);
    raw.canonicalize();

    int yd = std::max(1, opts.max_deg / 2);
    RewriteSystem sys = presentation_system(raw, yd);
    res.degenerate = sys.degenerate;
    res.unit_derivable = reduce_poly(e_expr - Polynomial::one(), sys).is_zero();

    res.component = opts.simplify ? tietze_simplify(raw, yd) : raw;
    return res;
}

PeirceResult peirce_component_presentation(const Presentation& p, const PeirceOptions& opts) {
    if (!p.idempotent) throw DomainError("presentation has no designated idempotent");
    if (!p.witness_e || !p.witness_f) throw DomainError("presentation lacks fullness witnesses");
    return peirce_component_presentation(p, IdempotentSpec{*p.idempotent}, *p.witness_e,
                                         *p.witness_f, opts);
}

} // namespace fpa

#include "fpa/report.hpp"

#include "fpa/presio.hpp"

namespace fpa {

using nlohmann::json;

json to_json(const HilbertVector& hv) {
    json dims = json::array();
    for (const auto& d : hv.dims) dims.push_back(d.get_str());
    return json{{"dims", dims}, {"exact", hv.exact}};
}

json to_json(const EquivalenceReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.per_degree) {
        rows.push_back(json{{"degree", row.degree},
                            {"dim_p1", row.dim_p1.get_str()},
                            {"dim_p2", row.dim_p2.get_str()}});
    }
    json verdicts = json::array();
    for (auto m : rep.relation_verdicts) verdicts.push_back(to_string(m));
    json out{{"verdict", to_string(rep.verdict)},
             {"degree_bound", rep.degree_bound},
             {"ratio", rep.ratio},
             {"exact", rep.exact}};
    if (!rep.per_degree.empty()) out["per_degree"] = rows;
    if (!rep.relation_verdicts.empty()) out["relations"] = verdicts;
    if (rep.mismatch_degree >= 0) out["mismatch_degree"] = rep.mismatch_degree;
    return out;
}

json presentation_json(const Presentation& p) {
    json gens = json::array();
    for (const auto& g : p.gens) gens.push_back(g);
    json rels = json::array();
    MonomialOrder ord = p.declaration_order();
    for (const auto& r : p.relations) rels.push_back(render_poly(r, p.gens, ord));
    return json{{"text", print_canonical(p)}, {"gens", gens}, {"relations", rels}};
}

json rules_json(const RewriteSystem& rs, const std::vector<std::string>& names) {
    json rules = json::array();
    for (const auto& r : rs.rules) {
        rules.push_back(json{{"lhs", render_word(r.lhs, names)},
                             {"rhs", render_poly(r.rhs, names, rs.order)}});
    }
    return json{{"rules", rules},
                {"complete", rs.complete_up_to_degree},
                {"degree_bound", rs.truncation_degree},
                {"homogeneous", rs.homogeneous},
                {"degenerate", rs.degenerate}};
}

} // namespace fpa

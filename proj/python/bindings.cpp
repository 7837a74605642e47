#include "fpa/equiv.hpp"
#include "fpa/error.hpp"
#include "fpa/grading.hpp"
#include "fpa/ncgb.hpp"
#include "fpa/peirce.hpp"
#include "fpa/presio.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

py::object big_int(const fpa::Count& c) {
    return py::module_::import("builtins").attr("int")(c.get_str());
}

fpa::MonomialOrder order_for(const fpa::Presentation& p,
                             const std::optional<std::vector<std::string>>& precedence) {
    if (!precedence) return p.declaration_order();
    std::vector<fpa::Gen> gens;
    for (const auto& name : *precedence) {
        auto g = p.find_gen(name);
        if (!g) throw fpa::DomainError("precedence lists unknown generator: " + name);
        gens.push_back(*g);
    }
    return fpa::MonomialOrder::from_precedence(gens);
}

py::dict hilbert_dict(const fpa::HilbertVector& hv) {
    py::list dims;
    for (const auto& d : hv.dims) dims.append(big_int(d));
    py::dict out;
    out["dims"] = dims;
    out["exact"] = hv.exact;
    return out;
}

py::dict report_dict(const fpa::EquivalenceReport& rep) {
    py::dict out;
    out["verdict"] = fpa::to_string(rep.verdict);
    out["degree_bound"] = rep.degree_bound;
    out["ratio"] = rep.ratio;
    out["exact"] = rep.exact;
    if (rep.mismatch_degree >= 0) out["mismatch_degree"] = rep.mismatch_degree;
    py::list rows;
    for (const auto& row : rep.per_degree) {
        rows.append(py::make_tuple(row.degree, big_int(row.dim_p1), big_int(row.dim_p2)));
    }
    out["per_degree"] = rows;
    py::list verdicts;
    for (auto m : rep.relation_verdicts) verdicts.append(fpa::to_string(m));
    out["relations"] = verdicts;
    return out;
}

} // namespace

PYBIND11_MODULE(_fpa, m) {
    m.doc() = "Finitely presented algebras: even parts, Peirce components, "
              "and degree-truncated noncommutative rewriting";

    py::register_exception<fpa::ParseError>(m, "FpaParseError", PyExc_ValueError);
    py::register_exception<fpa::ValidationError>(m, "FpaValidationError", PyExc_ValueError);
    py::register_exception<fpa::DomainError>(m, "FpaDomainError", PyExc_ValueError);

    py::class_<fpa::Presentation>(m, "Presentation")
        .def_static("parse", [](const std::string& text) { return fpa::parse_presentation(text); },
                    py::arg("text"), "Parse .fpa text")
        .def("canonical", [](const fpa::Presentation& p) { return fpa::print_canonical(p); })
        .def("expand_schemas", &fpa::Presentation::expand_schemas, py::arg("max_deg"))
        .def_property_readonly("gens", [](const fpa::Presentation& p) { return p.gens; })
        .def_property_readonly("relations",
                               [](const fpa::Presentation& p) {
                                   std::vector<std::string> out;
                                   auto ord = p.declaration_order();
                                   for (const auto& r : p.relations) {
                                       out.push_back(fpa::render_poly(r, p.gens, ord));
                                   }
                                   return out;
                               })
        .def("__eq__", [](const fpa::Presentation& a, const fpa::Presentation& b) { return a == b; })
        .def("__repr__", [](const fpa::Presentation& p) {
            return "Presentation(" + std::to_string(p.gen_count()) + " gens, " +
                   std::to_string(p.relations.size()) + " relations)";
        });

    m.def("parse", [](const std::string& text) { return fpa::parse_presentation(text); },
          py::arg("text"));

    m.def(
        "gb",
        [](const fpa::Presentation& p, int max_deg,
           const std::optional<std::vector<std::string>>& precedence) {
            auto sys = fpa::presentation_system(p, max_deg, order_for(p, precedence));
            py::list rules;
            for (const auto& r : sys.rules) {
                rules.append(py::make_tuple(fpa::render_word(r.lhs, p.gens),
                                            fpa::render_poly(r.rhs, p.gens, sys.order)));
            }
            py::dict out;
            out["rules"] = rules;
            out["complete"] = sys.complete_up_to_degree;
            out["degenerate"] = sys.degenerate;
            out["degree_bound"] = sys.truncation_degree;
            return out;
        },
        py::arg("presentation"), py::arg("max_deg") = 10, py::arg("precedence") = py::none());

    m.def(
        "hilbert",
        [](const fpa::Presentation& p, int max_deg,
           const std::optional<std::vector<std::string>>& precedence) {
            auto sys = fpa::presentation_system(p, max_deg, order_for(p, precedence));
            return hilbert_dict(fpa::hilbert_profile(sys, max_deg));
        },
        py::arg("presentation"), py::arg("max_deg") = 10, py::arg("precedence") = py::none());

    m.def(
        "member",
        [](const fpa::Presentation& p, const std::string& element, int max_deg,
           bool expand_schemas) {
            auto q = fpa::parse_poly(element, p.gens);
            fpa::Presentation scope = p;
            if (!expand_schemas) scope.schemas.clear();
            auto sys = fpa::presentation_system(scope, max_deg);
            return std::string(fpa::to_string(fpa::ideal_member(q, sys)));
        },
        py::arg("presentation"), py::arg("element"), py::arg("max_deg") = 10,
        py::arg("expand_schemas") = false);

    m.def(
        "even_part",
        [](const fpa::Presentation& p, int max_deg, bool simplify) {
            return fpa::even_part_presentation(p, max_deg, simplify).presentation;
        },
        py::arg("presentation"), py::arg("max_deg") = 10, py::arg("simplify") = true);

    m.def(
        "verify_witnesses",
        [](const fpa::Presentation& p, int max_deg) {
            if (!p.idempotent || !p.witness_e || !p.witness_f) {
                throw fpa::DomainError("presentation lacks an idempotent or witnesses");
            }
            return std::string(fpa::to_string(fpa::verify_witnesses(
                p, fpa::IdempotentSpec{*p.idempotent}, *p.witness_e, *p.witness_f, max_deg)));
        },
        py::arg("presentation"), py::arg("max_deg") = 10);

    m.def(
        "peirce_component",
        [](const fpa::Presentation& p, int max_deg, bool simplify, bool override_witnesses) {
            fpa::PeirceOptions opts;
            opts.max_deg = max_deg;
            opts.simplify = simplify;
            opts.override_witnesses = override_witnesses;
            auto res = fpa::peirce_component_presentation(p, opts);
            py::dict out;
            out["witnesses"] = fpa::to_string(res.witnesses);
            out["refused"] = res.refused;
            if (!res.refused) {
                out["presentation"] = res.component;
                out["unit_derivable"] = res.unit_derivable;
                out["degenerate"] = res.degenerate;
            }
            return out;
        },
        py::arg("presentation"), py::arg("max_deg") = 10, py::arg("simplify") = true,
        py::arg("override_witnesses") = false);

    m.def(
        "compare_hilbert",
        [](const fpa::Presentation& p1, const fpa::Presentation& p2, int max_d, int ratio) {
            return report_dict(fpa::compare_hilbert(p1, p2, max_d, ratio));
        },
        py::arg("p1"), py::arg("p2"), py::arg("max_d") = 5, py::arg("ratio") = 1);

    m.def(
        "check_generator_map",
        [](const fpa::Presentation& src, const fpa::Presentation& dst,
           const std::map<std::string, std::string>& images, int max_deg) {
            fpa::GeneratorMap gm;
            gm.images.assign(src.gen_count(), fpa::Polynomial{});
            std::vector<bool> seen(src.gen_count(), false);
            for (const auto& [name, expr] : images) {
                auto g = src.find_gen(name);
                if (!g) throw fpa::DomainError("map names unknown source generator: " + name);
                seen[*g] = true;
                gm.images[*g] = fpa::parse_poly(expr, dst.gens);
            }
            for (std::size_t g = 0; g < src.gen_count(); ++g) {
                if (!seen[g]) throw fpa::DomainError("map missing source generator: " + src.gens[g]);
            }
            return report_dict(fpa::check_generator_map(src, dst, gm, max_deg));
        },
        py::arg("src"), py::arg("dst"), py::arg("images"), py::arg("max_deg") = 10);

    m.def(
        "tietze_simplify",
        [](const fpa::Presentation& p, int max_deg) { return fpa::tietze_simplify(p, max_deg); },
        py::arg("presentation"), py::arg("max_deg") = 10);
}

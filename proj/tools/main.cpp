#include "fpa/equiv.hpp"
#include "fpa/error.hpp"
#include "fpa/grading.hpp"
#include "fpa/ncgb.hpp"
#include "fpa/pairenc.hpp"
#include "fpa/peirce.hpp"
#include "fpa/presio.hpp"
#include "fpa/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

// Exit codes: 0 success/consistent/member, 1 mismatch/refuted/non-member,
// 2 usage or parse error, 3 inconclusive (truncation too small).
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fpa::Error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fpa::Presentation load(const std::string& path) {
    return fpa::parse_presentation(read_file(path));
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw fpa::Error("cannot write file: " + out_path);
    out << text;
}

fpa::MonomialOrder make_order(const fpa::Presentation& p, const std::string& precedence) {
    if (precedence.empty()) return p.declaration_order();
    std::vector<fpa::Gen> gens;
    std::stringstream ss(precedence);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto g = p.find_gen(name);
        if (!g) throw fpa::Error("precedence lists unknown generator: " + name);
        gens.push_back(*g);
    }
    if (gens.size() != p.gen_count()) {
        throw fpa::Error("precedence must list every generator exactly once");
    }
    return fpa::MonomialOrder::from_precedence(gens);
}

std::string hilbert_text(const fpa::HilbertVector& hv) {
    std::ostringstream os;
    os << "degree  dim\n";
    for (std::size_t d = 0; d < hv.dims.size(); ++d) {
        os << d << "       " << hv.dims[d].get_str() << "\n";
    }
    os << "exact: " << (hv.exact ? "yes" : "no") << "\n";
    return os.str();
}

int verdict_exit(fpa::EquivalenceReport::Verdict v) {
    switch (v) {
        case fpa::EquivalenceReport::Verdict::consistent: return kOk;
        case fpa::EquivalenceReport::Verdict::mismatch: return kMismatch;
        default: return kInconclusive;
    }
}

struct Common {
    std::string input;
    std::string output;
    std::string precedence;
    int max_deg = 10;
    bool as_json = false;
};

int cmd_parse(const Common& c) {
    fpa::Presentation p = load(c.input);
    if (c.as_json) {
        json j{{"presentation", fpa::presentation_json(p)}};
        write_output(c.output, j.dump(2) + "\n");
    } else {
        write_output(c.output, fpa::print_canonical(p));
    }
    return kOk;
}

int cmd_gb(const Common& c) {
    fpa::Presentation p = load(c.input);
    auto sys = fpa::presentation_system(p, c.max_deg, make_order(p, c.precedence));
    if (c.as_json) {
        json j = fpa::rules_json(sys, p.gens);
        write_output(c.output, j.dump(2) + "\n");
        return kOk;
    }
    std::ostringstream os;
    if (sys.degenerate) os << "degenerate presented algebra: 1 = 0\n";
    os << "rules (" << (sys.complete_up_to_degree ? "complete" : "not certified complete")
       << " up to degree " << sys.truncation_degree << "):\n";
    for (const auto& r : sys.rules) {
        os << "  " << fpa::render_word(r.lhs, p.gens) << " -> "
           << fpa::render_poly(r.rhs, p.gens, sys.order) << "\n";
    }
    write_output(c.output, os.str());
    return kOk;
}

int cmd_hilbert(const Common& c) {
    fpa::Presentation p = load(c.input);
    auto sys = fpa::presentation_system(p, c.max_deg, make_order(p, c.precedence));
    auto hv = fpa::hilbert_profile(sys, c.max_deg);
    if (c.as_json) {
        json j{{"hilbert", fpa::to_json(hv)},
               {"degree_bound", c.max_deg},
               {"complete", sys.complete_up_to_degree},
               {"degenerate", sys.degenerate}};
        write_output(c.output, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        if (sys.degenerate) os << "degenerate presented algebra: 1 = 0\n";
        os << hilbert_text(hv);
        write_output(c.output, os.str());
    }
    return kOk;
}

int cmd_member(const Common& c, const std::string& element, bool expand) {
    fpa::Presentation p = load(c.input);
    fpa::Polynomial q = fpa::parse_poly(element, p.gens);
    // Membership is tested against the explicit relations; schema instances
    // are not consequences of them unless --expand-schemas is given.
    if (!expand) p.schemas.clear();
    auto sys = fpa::presentation_system(p, c.max_deg, make_order(p, c.precedence));
    fpa::Membership m = fpa::ideal_member(q, sys);
    if (c.as_json) {
        json j{{"verdict", fpa::to_string(m)}, {"degree_bound", c.max_deg},
               {"complete", sys.complete_up_to_degree}};
        write_output(c.output, j.dump(2) + "\n");
    } else {
        write_output(c.output, std::string("verdict: ") + fpa::to_string(m) + "\n");
    }
    switch (m) {
        case fpa::Membership::member: return kOk;
        case fpa::Membership::non_member_up_to_degree: return kMismatch;
        default: return kInconclusive;
    }
}

int cmd_even_part(const Common& c, bool simplify) {
    fpa::Presentation p = load(c.input);
    auto res = fpa::even_part_presentation(p, c.max_deg, simplify);
    if (c.as_json) {
        json map = json::object();
        for (const auto& name : res.presentation.gens) {
            // Surviving pair generators decode to length-2 input words.
            for (std::size_t i = 0; i < res.input_gens; ++i) {
                for (std::size_t j = 0; j < res.input_gens; ++j) {
                    if (fpa::pair_generator_names(res.input_gens)[i * res.input_gens + j] == name) {
                        fpa::Word w;
                        w.letters = {static_cast<fpa::Gen>(i), static_cast<fpa::Gen>(j)};
                        map[name] = fpa::render_word(w, p.gens);
                    }
                }
            }
        }
        json j{{"presentation", fpa::presentation_json(res.presentation)},
               {"pair_map", map},
               {"degree_bound", c.max_deg}};
        write_output(c.output, j.dump(2) + "\n");
        return kOk;
    }
    std::ostringstream os;
    os << fpa::print_canonical(res.presentation);
    auto names = fpa::pair_generator_names(res.input_gens);
    for (const auto& name : res.presentation.gens) {
        for (std::size_t k = 0; k < names.size(); ++k) {
            if (names[k] == name) {
                fpa::Word w;
                w.letters = {static_cast<fpa::Gen>(k / res.input_gens),
                             static_cast<fpa::Gen>(k % res.input_gens)};
                os << "# " << name << " = " << fpa::render_word(w, p.gens) << "\n";
            }
        }
    }
    write_output(c.output, os.str());
    return kOk;
}

int cmd_peirce(const Common& c, bool simplify, bool override_witnesses) {
    fpa::Presentation p = load(c.input);
    fpa::PeirceOptions opts;
    opts.max_deg = c.max_deg;
    opts.simplify = simplify;
    opts.override_witnesses = override_witnesses;
    auto res = fpa::peirce_component_presentation(p, opts);
    int yd = std::max(1, c.max_deg / 2);
    json j{{"witnesses", fpa::to_string(res.witnesses)},
           {"degree_bound", c.max_deg}};
    std::ostringstream os;
    os << "witnesses: " << fpa::to_string(res.witnesses) << "\n";
    if (res.refused) {
        j["verdict"] = "refused";
        os << "refused: fullness witnesses not verified (use --override-witnesses to force)\n";
    } else {
        auto sys = fpa::presentation_system(res.component, yd);
        auto hv = fpa::hilbert_profile(sys, yd);
        j["unit_derivable"] = res.unit_derivable;
        j["degenerate"] = res.degenerate;
        j["presentation"] = fpa::presentation_json(res.component);
        j["hilbert"] = fpa::to_json(hv);
        j["complete"] = sys.complete_up_to_degree;
        os << "unit: " << (res.unit_derivable ? "derivable" : "not certified") << "\n";
        if (res.degenerate) os << "degenerate presented algebra: 1 = 0\n";
        os << "presentation:\n" << fpa::print_canonical(res.component);
        os << "hilbert (0.." << yd << "):";
        for (const auto& d : hv.dims) os << " " << d.get_str();
        os << (hv.exact ? " (exact)" : " (not certified)") << "\n";
    }
    write_output(c.output, c.as_json ? j.dump(2) + "\n" : os.str());
    if (res.refused) {
        return res.witnesses == fpa::WitnessVerdict::refuted ? kMismatch : kInconclusive;
    }
    return kOk;
}

int cmd_verify_equiv(const Common& c, const std::string& other, int ratio) {
    fpa::Presentation p1 = load(c.input);
    fpa::Presentation p2 = load(other);
    auto rep = fpa::compare_hilbert(p1, p2, c.max_deg, ratio);
    if (c.as_json) {
        write_output(c.output, fpa::to_json(rep).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "degree  dim(p1@" << ratio << "d)  dim(p2@d)\n";
        for (const auto& row : rep.per_degree) {
            os << row.degree << "       " << row.dim_p1.get_str() << "           "
               << row.dim_p2.get_str() << "\n";
        }
        os << "verdict: " << fpa::to_string(rep.verdict);
        if (rep.mismatch_degree >= 0) os << " at degree " << rep.mismatch_degree;
        os << "\n";
        write_output(c.output, os.str());
    }
    return verdict_exit(rep.verdict);
}

int cmd_check_map(const Common& c, const std::string& dst_path, const std::string& map_text) {
    fpa::Presentation src = load(c.input);
    fpa::Presentation dst = load(dst_path);
    fpa::GeneratorMap gm;
    gm.images.assign(src.gen_count(), fpa::Polynomial{});
    std::vector<bool> seen(src.gen_count(), false);
    std::stringstream ss(map_text);
    std::string entry;
    while (std::getline(ss, entry, ';')) {
        if (entry.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        auto eq = entry.find('=');
        if (eq == std::string::npos) throw fpa::Error("map entry without '=': " + entry);
        std::string name = entry.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t\r\n"));
        name.erase(name.find_last_not_of(" \t\r\n") + 1);
        auto g = src.find_gen(name);
        if (!g) throw fpa::Error("map names unknown source generator: " + name);
        if (seen[*g]) throw fpa::Error("map lists generator twice: " + name);
        seen[*g] = true;
        gm.images[*g] = fpa::parse_poly(entry.substr(eq + 1), dst.gens);
    }
    for (std::size_t g = 0; g < src.gen_count(); ++g) {
        if (!seen[g]) throw fpa::Error("map missing source generator: " + src.gens[g]);
    }
    auto rep = fpa::check_generator_map(src, dst, gm, c.max_deg);
    if (c.as_json) {
        write_output(c.output, fpa::to_json(rep).dump(2) + "\n");
    } else {
        std::ostringstream os;
        fpa::Presentation s = src.expand_schemas(c.max_deg);
        fpa::MonomialOrder ord = s.declaration_order();
        for (std::size_t i = 0; i < rep.relation_verdicts.size(); ++i) {
            os << fpa::render_poly(s.relations[i], s.gens, ord) << ": "
               << fpa::to_string(rep.relation_verdicts[i]) << "\n";
        }
        os << "verdict: " << fpa::to_string(rep.verdict) << "\n";
        write_output(c.output, os.str());
    }
    return verdict_exit(rep.verdict);
}

int cmd_simplify(const Common& c) {
    fpa::Presentation p = load(c.input);
    fpa::Presentation out = fpa::tietze_simplify(p, c.max_deg);
    if (c.as_json) {
        json j{{"presentation", fpa::presentation_json(out)}, {"degree_bound", c.max_deg}};
        write_output(c.output, j.dump(2) + "\n");
    } else {
        write_output(c.output, fpa::print_canonical(out));
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finitely presented algebra toolkit: even parts, Peirce components, "
                 "and degree-truncated rewriting oracles"};
    app.require_subcommand(1);

    Common c;
    std::string element, other, map_text;
    int ratio = 1;
    bool simplify = false, override_witnesses = false, expand = false;

    auto add_common = [&](CLI::App* sub, bool with_deg = true) {
        sub->add_option("input", c.input, "input .fpa file")->required();
        sub->add_option("-o,--output", c.output, "write the report to a file");
        sub->add_flag("--json", c.as_json, "machine-readable JSON report");
        if (with_deg) sub->add_option("--max-deg", c.max_deg, "degree bound (default 10)");
    };

    auto* parse_cmd = app.add_subcommand("parse", "validate and canonically print");
    add_common(parse_cmd, false);

    auto* gb_cmd = app.add_subcommand("gb", "degree-truncated rewriting system");
    add_common(gb_cmd);
    gb_cmd->add_option("--precedence", c.precedence, "generator precedence, smallest first (comma-separated)");

    auto* hilbert_cmd = app.add_subcommand("hilbert", "per-degree dimension profile");
    add_common(hilbert_cmd);
    hilbert_cmd->add_option("--precedence", c.precedence, "generator precedence, smallest first");

    auto* member_cmd = app.add_subcommand("member", "ideal membership up to degree");
    add_common(member_cmd);
    member_cmd->add_option("--element", element, "polynomial to test")->required();
    member_cmd->add_option("--precedence", c.precedence, "generator precedence, smallest first");
    member_cmd->add_flag("--expand-schemas", expand, "test against schema instances too");

    auto* even_cmd = app.add_subcommand("even-part", "presentation of the even part (all generators odd)");
    add_common(even_cmd);
    even_cmd->add_flag("--simplify", simplify, "Tietze-simplify the output");

    auto* peirce_cmd = app.add_subcommand("peirce", "presentation of the Peirce component eAe");
    add_common(peirce_cmd);
    peirce_cmd->add_flag("--simplify", simplify, "Tietze-simplify the output");
    peirce_cmd->add_flag("--override-witnesses", override_witnesses,
                         "run the pipeline even if witnesses fail to verify");

    auto* equiv_cmd = app.add_subcommand("verify-equiv", "compare Hilbert profiles under a degree ratio");
    add_common(equiv_cmd);
    equiv_cmd->add_option("other", other, "second .fpa file")->required();
    equiv_cmd->add_option("--ratio", ratio, "degree d in the second maps to ratio*d in the first");

    auto* map_cmd = app.add_subcommand("check-map", "test a generator map for inducing a homomorphism");
    add_common(map_cmd);
    map_cmd->add_option("dst", other, "target .fpa file")->required();
    map_cmd->add_option("--map", map_text, "images, e.g. \"a=x*y;b=y^2;c=y*x\"")->required();

    auto* simp_cmd = app.add_subcommand("simplify", "Tietze simplification");
    add_common(simp_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(c);
        if (gb_cmd->parsed()) return cmd_gb(c);
        if (hilbert_cmd->parsed()) return cmd_hilbert(c);
        if (member_cmd->parsed()) return cmd_member(c, element, expand);
        if (even_cmd->parsed()) return cmd_even_part(c, simplify);
        if (peirce_cmd->parsed()) return cmd_peirce(c, simplify, override_witnesses);
        if (equiv_cmd->parsed()) return cmd_verify_equiv(c, other, ratio);
        if (map_cmd->parsed()) return cmd_check_map(c, other, map_text);
        if (simp_cmd->parsed()) return cmd_simplify(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

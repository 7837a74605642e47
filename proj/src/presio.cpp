#include "fpa/presio.hpp"

#include "fpa/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fpa {

namespace {

enum class Tok { ident, integer, semi, eq, plus, minus, star, caret, lparen, rparen, colon, slash, ge, eof };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Tok::eof, "", line, col};
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                s += src_[pos_];
                advance();
            }
            return {Tok::ident, std::move(s), line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                s += src_[pos_];
                advance();
            }
            return {Tok::integer, std::move(s), line, col};
        }
        if (c == '>' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
            advance();
            advance();
            return {Tok::ge, ">=", line, col};
        }
        advance();
        switch (c) {
            case ';': return {Tok::semi, ";", line, col};
            case '=': return {Tok::eq, "=", line, col};
            case '+': return {Tok::plus, "+", line, col};
            case '-': return {Tok::minus, "-", line, col};
            case '*': return {Tok::star, "*", line, col};
            case '^': return {Tok::caret, "^", line, col};
            case '(': return {Tok::lparen, "(", line, col};
            case ')': return {Tok::rparen, ")", line, col};
            case ':': return {Tok::colon, ":", line, col};
            case '/': return {Tok::slash, "/", line, col};
            default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

constexpr long kMaxExponent = 100000;

// Recursive-descent parser over the token stream. Polynomial expressions are
// parsed into schema terms (exponents affine in an optional parameter); plain
// polynomials are the parameter-free special case.
class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { bump(); }

    Presentation parse_file() {
        Presentation p;
        while (cur_.kind != Tok::eof) statement(p);
        p.canonicalize();
        p.validate();
        return p;
    }

    Polynomial parse_single_poly(const std::vector<std::string>& gen_names) {
        Presentation scope;
        scope.gens = gen_names;
        Polynomial p = polynomial(scope);
        expect(Tok::eof, "end of input");
        return p;
    }

private:
    void bump() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(cur_.line, cur_.col, msg); }

    void expect(Tok kind, const char* what) {
        if (cur_.kind != kind) fail(std::string("expected ") + what);
        bump();
    }

    std::string ident(const char* what) {
        if (cur_.kind != Tok::ident) fail(std::string("expected ") + what);
        std::string s = cur_.text;
        bump();
        return s;
    }

    long integer(const char* what) {
        if (cur_.kind != Tok::integer) fail(std::string("expected ") + what);
        long v = 0;
        try {
            v = std::stol(cur_.text);
        } catch (const std::exception&) {
            fail("integer out of range");
        }
        bump();
        return v;
    }

    void statement(Presentation& p) {
        if (cur_.kind != Tok::ident) fail("expected a statement keyword");
        std::string kw = cur_.text;
        if (kw == "gens") {
            bump();
            while (cur_.kind == Tok::ident) {
                std::string name = cur_.text;
                if (p.find_gen(name)) fail("duplicate generator name: " + name);
                p.gens.push_back(name);
                bump();
            }
            expect(Tok::semi, "';'");
        } else if (kw == "odd" || kw == "even") {
            bump();
            if (!p.parity) p.parity = std::vector<Parity>(p.gens.size(), Parity::odd);
            p.parity->resize(p.gens.size(), Parity::odd);
            Parity value = kw == "odd" ? Parity::odd : Parity::even;
            bool any = false;
            while (cur_.kind == Tok::ident) {
                Gen g = gen_ref(p);
                (*p.parity)[g] = value;
                any = true;
            }
            if (!any) fail("parity statement lists no generators");
            expect(Tok::semi, "';'");
        } else if (kw == "rel") {
            bump();
            Polynomial lhs = polynomial(p);
            Polynomial value = lhs;
            if (cur_.kind == Tok::eq) {
                bump();
                Polynomial rhs = polynomial(p);
                value = lhs - rhs;
            }
            if (value.is_zero()) fail("relation is the zero polynomial");
            p.relations.push_back(std::move(value));
            expect(Tok::semi, "';'");
        } else if (kw == "schema") {
            bump();
            schema_params_seen_.clear();
            RelationSchema s;
            s.terms = schema_terms(p);
            expect(Tok::eq, "'='");
            if (cur_.kind != Tok::integer || cur_.text != "0") fail("schema right-hand side must be 0");
            bump();
            if (cur_.kind != Tok::ident || cur_.text != "for") fail("expected 'for'");
            bump();
            s.param = ident("schema parameter");
            if (p.find_gen(s.param)) fail("schema parameter shadows a generator: " + s.param);
            expect(Tok::ge, "'>='");
            s.lower = integer("lower bound");
            expect(Tok::semi, "';'");
            for (const auto& used : schema_params_seen_) {
                if (used != s.param) fail("unknown schema parameter: " + used);
            }
            p.schemas.push_back(std::move(s));
        } else if (kw == "idempotent") {
            bump();
            p.idempotent = gen_ref(p);
            expect(Tok::semi, "';'");
        } else if (kw == "witness") {
            bump();
            std::string side_name = ident("witness side ('e' or 'f')");
            Side side;
            if (side_name == "e") {
                side = Side::e;
            } else if (side_name == "f") {
                side = Side::f;
            } else {
                fail("witness side must be 'e' or 'f'");
            }
            if (!p.idempotent) fail("witness requires a prior idempotent statement");
            expect(Tok::colon, "':'");
            if (cur_.kind != Tok::integer || cur_.text != "1") fail("witness left-hand side must be 1");
            bump();
            expect(Tok::eq, "'='");
            WitnessDecomposition w;
            w.side = side;
            witness_sum(p, side, w);
            expect(Tok::semi, "';'");
            if (side == Side::e) {
                p.witness_e = std::move(w);
            } else {
                p.witness_f = std::move(w);
            }
        } else {
            fail("unknown statement: " + kw);
        }
    }

    Gen gen_ref(const Presentation& p) {
        if (cur_.kind != Tok::ident) fail("expected a generator name");
        auto g = p.find_gen(cur_.text);
        if (!g) fail("undeclared generator " + cur_.text);
        bump();
        return *g;
    }

    // --- polynomial / schema expressions ---

    bool starts_factor() const { return cur_.kind == Tok::ident || cur_.kind == Tok::integer; }

    // marker_gen: when set (witness-f context), the reserved name "f" maps to
    // this sentinel letter.
    std::vector<SchemaTerm> schema_terms(const Presentation& p, bool allow_param = true,
                                         std::optional<Gen> f_sentinel = std::nullopt) {
        std::vector<SchemaTerm> terms;
        Scalar sign(1);
        if (cur_.kind == Tok::minus) {
            sign = -1;
            bump();
        } else if (cur_.kind == Tok::plus) {
            bump();
        }
        while (true) {
            SchemaTerm t = schema_term(p, allow_param, f_sentinel);
            t.coeff *= sign;
            if (!is_zero(t.coeff)) terms.push_back(std::move(t));
            if (cur_.kind == Tok::plus) {
                sign = 1;
                bump();
            } else if (cur_.kind == Tok::minus) {
                sign = -1;
                bump();
            } else {
                break;
            }
        }
        return terms;
    }

    SchemaTerm schema_term(const Presentation& p, bool allow_param, std::optional<Gen> f_sentinel) {
        SchemaTerm t;
        if (!starts_factor()) fail("expected a term");
        factor(p, t, allow_param, f_sentinel);
        while (cur_.kind == Tok::star) {
            bump();
            if (!starts_factor()) fail("expected a factor after '*'");
            factor(p, t, allow_param, f_sentinel);
        }
        return t;
    }

    void factor(const Presentation& p, SchemaTerm& t, bool allow_param, std::optional<Gen> f_sentinel) {
        if (cur_.kind == Tok::integer) {
            long num = integer("number");
            Scalar c(num);
            if (cur_.kind == Tok::slash) {
                bump();
                long den = integer("denominator");
                if (den == 0) fail("zero denominator");
                c = Scalar(num, den);
                c.canonicalize();
            }
            t.coeff *= c;
            return;
        }
        std::string name = cur_.text;
        Gen g;
        if (f_sentinel && name == "f" && !p.find_gen("f")) {
            g = *f_sentinel;
        } else {
            auto found = p.find_gen(name);
            if (!found) fail("undeclared generator " + name);
            g = *found;
        }
        bump();
        SchemaFactor fac;
        fac.gen = g;
        fac.exp_coeff = 0;
        fac.exp_const = 1;
        if (cur_.kind == Tok::caret) {
            bump();
            if (cur_.kind == Tok::integer) {
                fac.exp_const = integer("exponent");
            } else if (cur_.kind == Tok::lparen) {
                if (!allow_param) fail("parameterized exponent outside a schema");
                bump();
                affine_exp(fac);
                expect(Tok::rparen, "')'");
            } else {
                fail("expected an exponent");
            }
            if (fac.exp_const > kMaxExponent || fac.exp_coeff > kMaxExponent) fail("exponent too large");
            if (fac.exp_coeff == 0 && fac.exp_const < 0) fail("negative exponent");
        }
        // Merge adjacent powers of the same generator.
        if (!t.factors.empty() && t.factors.back().gen == fac.gen) {
            t.factors.back().exp_coeff += fac.exp_coeff;
            t.factors.back().exp_const += fac.exp_const;
        } else {
            t.factors.push_back(fac);
        }
    }

    // INT | [INT '*'] IDENT [('+'|'-') INT]
    void affine_exp(SchemaFactor& fac) {
        if (cur_.kind == Tok::integer) {
            long a = integer("exponent");
            if (cur_.kind == Tok::star) {
                bump();
                std::string param = ident("schema parameter");
                schema_params_seen_.insert(param);
                fac.exp_coeff = a;
                fac.exp_const = 0;
            } else {
                fac.exp_const = a;
                return;
            }
        } else {
            std::string param = ident("schema parameter");
            schema_params_seen_.insert(param);
            fac.exp_coeff = 1;
            fac.exp_const = 0;
        }
        if (cur_.kind == Tok::plus) {
            bump();
            fac.exp_const = integer("exponent offset");
        } else if (cur_.kind == Tok::minus) {
            bump();
            fac.exp_const = -integer("exponent offset");
        }
    }

    Polynomial polynomial(const Presentation& p) {
        auto terms = schema_terms(p, /*allow_param=*/false);
        Polynomial out;
        for (const auto& t : terms) {
            Word w;
            for (const auto& f : t.factors) {
                for (long k = 0; k < f.exp_const; ++k) w.letters.push_back(f.gen);
            }
            out = out + Polynomial::monomial(std::move(w), t.coeff);
        }
        return out;
    }

    void witness_sum(const Presentation& p, Side side, WitnessDecomposition& w) {
        Gen marker;
        Gen f_sentinel = static_cast<Gen>(p.gens.size());
        std::optional<Gen> sentinel_opt;
        if (side == Side::e) {
            marker = *p.idempotent;
        } else {
            if (p.find_gen("f")) fail("generator named 'f' conflicts with the witness f marker");
            marker = f_sentinel;
            sentinel_opt = f_sentinel;
        }
        auto terms = schema_terms(p, /*allow_param=*/false, sentinel_opt);
        for (const auto& t : terms) {
            Word word;
            for (const auto& f : t.factors) {
                for (long k = 0; k < f.exp_const; ++k) word.letters.push_back(f.gen);
            }
            std::size_t count = static_cast<std::size_t>(
                std::count(word.letters.begin(), word.letters.end(), marker));
            if (count == 0) {
                fail(side == Side::e ? "witness term must contain the idempotent"
                                     : "witness term must contain 'f'");
            }
            if (side == Side::f && count > 1) fail("witness term must contain 'f' exactly once");
            std::size_t pos = static_cast<std::size_t>(
                std::find(word.letters.begin(), word.letters.end(), marker) - word.letters.begin());
            WitnessTerm wt;
            wt.coeff = t.coeff;
            wt.u = word.prefix(pos);
            wt.v = word.subword(pos + 1, word.degree() - pos - 1);
            w.terms.push_back(std::move(wt));
        }
    }

    Lexer lex_;
    Token cur_{Tok::eof, "", 0, 0};
    std::set<std::string> schema_params_seen_;
};

std::string render_coeff_mag(const Scalar& c) {
    Scalar mag = abs(c);
    return to_string(mag);
}

} // namespace

Presentation parse_presentation(std::string_view text) {
    Parser parser(text);
    return parser.parse_file();
}

Polynomial parse_poly(std::string_view text, const std::vector<std::string>& gen_names) {
    Parser parser(text);
    return parser.parse_single_poly(gen_names);
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.degree()) {
        std::size_t run = 1;
        while (i + run < w.degree() && w.letters[i + run] == w.letters[i]) ++run;
        if (!out.empty()) out += "*";
        out += names[w.letters[i]];
        if (run > 1) out += "^" + std::to_string(run);
        i += run;
    }
    return out;
}

std::string render_poly(const Polynomial& p, const std::vector<std::string>& names,
                        const MonomialOrder& ord) {
    if (p.is_zero()) return "0";
    std::vector<const Polynomial::Term*> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [&ord](const auto* a, const auto* b) { return ord.less(b->first, a->first); });
    std::string out;
    bool first = true;
    for (const auto* t : ts) {
        const auto& [w, c] = *t;
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Scalar mag = abs(c);
        if (w.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += render_word(w, names);
        } else {
            out += to_string(mag) + "*" + render_word(w, names);
        }
    }
    return out;
}

namespace {

std::string render_schema_term(const SchemaTerm& t, const Presentation& p, const std::string& param) {
    std::string out;
    Scalar mag = abs(t.coeff);
    bool wrote = false;
    if (mag != 1 || t.factors.empty()) {
        out += to_string(mag);
        wrote = true;
    }
    for (const auto& f : t.factors) {
        if (wrote) out += "*";
        wrote = true;
        out += p.gens[f.gen];
        if (f.exp_coeff == 0) {
            if (f.exp_const != 1) out += "^" + std::to_string(f.exp_const);
        } else {
            out += "^(";
            if (f.exp_coeff != 1) out += std::to_string(f.exp_coeff) + "*";
            out += param;
            if (f.exp_const > 0) {
                out += "+" + std::to_string(f.exp_const);
            } else if (f.exp_const < 0) {
                out += "-" + std::to_string(-f.exp_const);
            }
            out += ")";
        }
    }
    return out;
}

std::string render_witness(const WitnessDecomposition& w, const Presentation& p) {
    std::string out;
    bool first = true;
    for (const auto& t : w.terms) {
        bool neg = sgn(t.coeff) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::vector<std::string> parts;
        Scalar mag = abs(t.coeff);
        if (mag != 1) parts.push_back(render_coeff_mag(t.coeff));
        if (w.side == Side::e) {
            Word full = t.u * Word::single(*p.idempotent) * t.v;
            parts.push_back(render_word(full, p.gens));
        } else {
            if (!t.u.empty()) parts.push_back(render_word(t.u, p.gens));
            parts.push_back("f");
            if (!t.v.empty()) parts.push_back(render_word(t.v, p.gens));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += "*";
            out += parts[i];
        }
    }
    return out;
}

} // namespace

std::string print_canonical(const Presentation& p) {
    std::ostringstream os;
    os << "gens";
    for (const auto& g : p.gens) os << " " << g;
    os << ";\n";
    if (p.parity) {
        std::string odd, even;
        for (std::size_t i = 0; i < p.gens.size(); ++i) {
            ((*p.parity)[i] == Parity::odd ? odd : even) += " " + p.gens[i];
        }
        if (!odd.empty()) os << "odd" << odd << ";\n";
        if (!even.empty()) os << "even" << even << ";\n";
    }
    MonomialOrder ord = p.declaration_order();
    for (const auto& r : p.relations) {
        os << "rel " << render_poly(r, p.gens, ord) << ";\n";
    }
    for (const auto& s : p.schemas) {
        os << "schema ";
        bool first = true;
        for (const auto& t : s.terms) {
            bool neg = sgn(t.coeff) < 0;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            os << render_schema_term(t, p, s.param);
        }
        os << " = 0 for " << s.param << " >= " << s.lower << ";\n";
    }
    if (p.idempotent) os << "idempotent " << p.gens[*p.idempotent] << ";\n";
    if (p.witness_e) os << "witness e: 1 = " << render_witness(*p.witness_e, p) << ";\n";
    if (p.witness_f) os << "witness f: 1 = " << render_witness(*p.witness_f, p) << ";\n";
    return os.str();
}

} // namespace fpa

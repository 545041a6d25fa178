#pragma once

// Text format for quadric inputs:
//
//   gens x y z;
//   rel y*z + z*y + x^2;
//   central f = 3*x^2 + 3*y^2 + 4*z^2;
//   witness (-x - y + 2*z, -x - y + 2*z);
//   grading z2;                 # allows constant terms in relations
//
// Coefficients are Gaussian rationals: 3, -1/2, i, 2i, (2+3i), (1/2-3/4 i).

#include "presentation.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadrics {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

struct LinearForm {
    Vec coeffs;  // one entry per generator
};

struct SourceModel {
    std::vector<std::string> gens;
    std::vector<Relation> relations;
    bool z2_graded = false;
    std::optional<CentralElement> central;
    std::vector<std::pair<LinearForm, LinearForm>> witness;

    QuadraticPresentation presentation() const {
        if (z2_graded) return QuadraticPresentation::inhomogeneous(gens, relations);
        std::vector<Vec> quads;
        for (const auto& r : relations) quads.push_back(r.quad);
        return QuadraticPresentation::homogeneous(gens, quads);
    }
};

namespace detail {

struct Token {
    enum Kind { Ident, Number, Symbol, End } kind;
    std::string text;
    std::size_t line, column;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, k = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j, ++k) {
            if (src[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (k < src.size()) {
        const char c = src[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        } else if (c == '#') {
            while (k < src.size() && src[k] != '\n') advance(1);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t e = k;
            while (e < src.size() && (std::isalnum(static_cast<unsigned char>(src[e])) || src[e] == '_' ||
                                      src[e] == '@' || src[e] == '\''))
                ++e;
            out.push_back({Token::Ident, src.substr(k, e - k), line, col});
            advance(e - k);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t e = k;
            while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) ++e;
            out.push_back({Token::Number, src.substr(k, e - k), line, col});
            advance(e - k);
        } else if (std::string(";+-*^/(),=").find(c) != std::string::npos) {
            out.push_back({Token::Symbol, std::string(1, c), line, col});
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src), toks_(tokenize(src)) {}

    SourceModel run() {
        SourceModel m;
        expect_keyword("gens");
        while (peek().kind == Token::Ident) {
            const Token& t = next();
            if (t.text == "i") throw ParseError("'i' is reserved for the imaginary unit", t.line, t.column);
            for (const auto& g : m.gens)
                if (g == t.text) throw ParseError("duplicate generator '" + t.text + "'", t.line, t.column);
            m.gens.push_back(t.text);
        }
        if (m.gens.empty()) error("expected at least one generator");
        expect(";");
        gens_ = &m.gens;
        std::vector<std::pair<FreePoly, Token>> rels;
        while (peek().kind != Token::End) {
            const Token kw = peek();
            if (kw.kind != Token::Ident) error("expected a statement keyword");
            next();
            if (kw.text == "rel") {
                FreePoly p = expression();
                rels.emplace_back(std::move(p), kw);
                expect(";");
            } else if (kw.text == "central") {
                if (m.central) throw ParseError("second central element", kw.line, kw.column);
                const Token& name = next();
                if (name.kind != Token::Ident) throw ParseError("expected a name for the central element", name.line, name.column);
                expect("=");
                FreePoly p = expression();
                for (const auto& [w, c] : p.terms())
                    if (w.size() != 2)
                        throw ParseError("central element degree " + std::to_string(w.size()), kw.line, kw.column);
                m.central = CentralElement{name.text, quad_vector(p)};
                expect(";");
            } else if (kw.text == "grading") {
                const Token& g = next();
                if (g.text != "z2") throw ParseError("unknown grading '" + g.text + "'", g.line, g.column);
                m.z2_graded = true;
                expect(";");
            } else if (kw.text == "witness") {
                do {
                    expect("(");
                    LinearForm u = linear_form(), v;
                    expect(",");
                    v = linear_form();
                    expect(")");
                    m.witness.emplace_back(std::move(u), std::move(v));
                } while (accept(","));
                expect(";");
            } else {
                throw ParseError("unknown statement '" + kw.text + "'", kw.line, kw.column);
            }
        }
        for (const auto& [p, at] : rels) {
            Scalar constant;
            for (const auto& [w, c] : p.terms()) {
                if (w.size() == 2) continue;
                if (w.empty() && m.z2_graded) {
                    constant = c;
                    continue;
                }
                if (w.empty()) throw ParseError("constant term in relation (declare 'grading z2;')", at.line, at.column);
                throw ParseError("relation degree " + std::to_string(w.size()), at.line, at.column);
            }
            Vec q = quad_vector(p.homogeneous_part(2));
            if (is_zero(q)) throw ParseError("relation has no quadratic part", at.line, at.column);
            m.relations.push_back({std::move(q), constant});
        }
        // relation independence is a presentation invariant; report it with a position
        try {
            (void)m.presentation();
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), rels.empty() ? 1 : rels.back().second.line, 1);
        }
        return m;
    }

    /// A single expression over the given generators (any degree, constants allowed).
    FreePoly polynomial(const std::vector<std::string>& gens) {
        gens_ = &gens;
        FreePoly p = expression();
        if (peek().kind != Token::End) error("trailing input after expression");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    [[noreturn]] void error(const std::string& what) const {
        const Token& t = peek();
        throw ParseError(what + (t.kind == Token::End ? " (found end of input)" : " (found '" + t.text + "')"), t.line,
                         t.column);
    }
    bool accept(const std::string& sym) {
        if (peek().kind == Token::Symbol && peek().text == sym) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const std::string& sym) {
        if (!accept(sym)) error("expected '" + sym + "'");
    }
    void expect_keyword(const std::string& kw) {
        if (peek().kind != Token::Ident || peek().text != kw) error("expected '" + kw + "'");
        next();
    }

    Vec quad_vector(const FreePoly& p) const {
        const std::size_t n = gens_->size();
        Vec v(n * n);
        for (const auto& [w, c] : p.terms())
            v[static_cast<unsigned char>(w[0]) * n + static_cast<unsigned char>(w[1])] = c;
        return v;
    }

    LinearForm linear_form() {
        const Token at = peek();
        FreePoly p = expression();
        LinearForm f{Vec(gens_->size())};
        for (const auto& [w, c] : p.terms()) {
            if (w.size() != 1) throw ParseError("witness entries must be linear forms", at.line, at.column);
            f.coeffs[static_cast<unsigned char>(w[0])] = c;
        }
        return f;
    }

    FreePoly expression() {
        FreePoly out;
        bool negative = accept("-");
        if (!negative) accept("+");
        while (true) {
            FreePoly t = term();
            out += negative ? Scalar(-1) * t : t;
            if (accept("+"))
                negative = false;
            else if (accept("-"))
                negative = true;
            else
                break;
        }
        return out;
    }

    FreePoly term() {
        Scalar coef(1);
        Word w;
        do {
            factor(coef, w);
        } while (accept("*"));
        return FreePoly::word(w, coef);
    }

    void factor(Scalar& coef, Word& w) {
        const Token t = peek();
        if (t.kind == Token::Number) {
            next();
            mpq_class q(mpz_class(t.text));
            if (accept("/")) {
                const Token d = next();
                if (d.kind != Token::Number || mpz_class(d.text) == 0) throw ParseError("bad denominator", d.line, d.column);
                q /= mpq_class(mpz_class(d.text));
            }
            Scalar s(q);
            if (peek().kind == Token::Ident && peek().text == "i") {
                next();
                s *= Scalar::i();
            }
            coef *= s;
        } else if (t.kind == Token::Ident && t.text == "i") {
            next();
            coef *= Scalar::i();
        } else if (t.kind == Token::Ident) {
            next();
            std::size_t g = gens_->size();
            for (std::size_t k = 0; k < gens_->size(); ++k)
                if ((*gens_)[k] == t.text) g = k;
            if (g == gens_->size()) throw ParseError("unknown generator '" + t.text + "'", t.line, t.column);
            long power = 1;
            if (accept("^")) {
                const Token e = next();
                if (e.kind != Token::Number) throw ParseError("expected an exponent", e.line, e.column);
                power = std::stol(e.text);
            }
            for (long k = 0; k < power; ++k) w.push_back(static_cast<char>(g));
        } else if (t.kind == Token::Symbol && t.text == "(") {
            next();
            std::string text;
            while (!(peek().kind == Token::Symbol && peek().text == ")")) {
                if (peek().kind == Token::End) error("unterminated scalar literal");
                text += next().text;
            }
            next();
            try {
                coef *= Scalar::parse(text);
            } catch (const std::exception&) {
                throw ParseError("invalid scalar literal '" + text + "'", t.line, t.column);
            }
        } else {
            error("expected a coefficient or generator");
        }
    }

    std::string src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const std::vector<std::string>* gens_ = nullptr;
};

}  // namespace detail

inline SourceModel parse_source(const std::string& text) { return detail::Parser(text).run(); }

inline FreePoly parse_polynomial(const std::string& text, const std::vector<std::string>& gens) {
    return detail::Parser(text).polynomial(gens);
}

inline std::string linear_form_string(const LinearForm& f, const std::vector<std::string>& gens) {
    FreePoly p;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) p.add(make_word({static_cast<int>(k)}), f.coeffs[k]);
    return p.to_string(gens);
}

/// Normalized text; parse(print(m)) == m.
inline std::string print_source(const SourceModel& m) {
    std::ostringstream os;
    os << "gens";
    for (const auto& g : m.gens) os << " " << g;
    os << ";\n";
    if (m.z2_graded) os << "grading z2;\n";
    for (const auto& r : m.relations)
        os << "rel " << QuadraticPresentation::to_free_poly(r.quad, m.gens.size(), r.constant).to_string(m.gens) << ";\n";
    if (m.central)
        os << "central " << m.central->name << " = "
           << QuadraticPresentation::to_free_poly(m.central->lift, m.gens.size()).to_string(m.gens) << ";\n";
    if (!m.witness.empty()) {
        os << "witness ";
        for (std::size_t k = 0; k < m.witness.size(); ++k) {
            if (k) os << ", ";
            os << "(" << linear_form_string(m.witness[k].first, m.gens) << ", "
               << linear_form_string(m.witness[k].second, m.gens) << ")";
        }
        os << ";\n";
    }
    return os.str();
}

}  // namespace quadrics

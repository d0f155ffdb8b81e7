#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "modelkit/poly.hpp"

namespace modelkit {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Recursive-descent parser for the polynomial grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] base ['^' nat]
//   base   := 'z1' | 'z2' | 'cz1' | 'cz2' | 'i' | rational | ident | '(' expr ')'
// Rational literals are p or p/q; identifiers denote formal real parameters.
class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    RPoly parse() {
        RPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    RPoly expr() {
        RPoly p = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    RPoly term() {
        RPoly p = factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                p *= factor();
            else
                return p;
        }
    }

    RPoly factor() {
        skip_ws();
        bool neg = accept('-');
        RPoly b = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected exponent");
            long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                e = e * 10 + (text_[pos_++] - '0');
            if (e > 64) throw ParseError(at, "exponent too large");
            b = b.pow(static_cast<int>(e));
        }
        return neg ? -b : b;
    }

    RPoly base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RPoly p = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (c == '.') fail("irrational literal rejected; use p/q rationals");
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected character");
        return {};
    }

    RPoly rational_literal() {
        BigInt num = integer();
        if (pos_ < text_.size() && text_[pos_] == '.')
            fail("irrational literal rejected; use p/q rationals");
        skip_ws();
        if (accept('/')) {
            skip_ws();
            std::size_t at = pos_;
            BigInt den = integer();
            if (den == 0) throw ParseError(at, "zero denominator");
            return RPoly(GQ(Rational(num, den)));
        }
        return RPoly(GQ(Rational(num)));
    }

    BigInt integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected number");
        BigInt v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    RPoly identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "z1") return RPoly::var_z1();
        if (name == "cz1") return RPoly::var_cz1();
        if (name == "z2") return RPoly::var_z2();
        if (name == "cz2") return RPoly::var_cz2();
        if (name == "i") return RPoly(GQ::i());
        return RPoly::param(name);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    std::string text_;
    std::size_t pos_ = 0;
};

inline RPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

inline std::string monomial_to_string(const Monomial& m) {
    std::string s;
    auto factor = [&s](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    factor("z1", m.j1);
    factor("cz1", m.k1);
    factor("z2", m.j2);
    factor("cz2", m.k2);
    for (auto& [name, e] : m.params) {
        if (!s.empty()) s += "*";
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// Emits the same grammar the parser reads, terms in canonical order.
inline std::string to_string(const RPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : p.terms()) {
        std::string mono = monomial_to_string(m);
        std::string coeff;
        bool negative = false;
        if (c.im == 0) {
            Rational r = c.re;
            if (r < 0) {
                negative = true;
                r = -r;
            }
            if (r != 1 || mono.empty()) coeff = rat_to_string(r);
        } else if (c.re == 0) {
            Rational r = c.im;
            if (r < 0) {
                negative = true;
                r = -r;
            }
            coeff = (r == 1) ? "i" : rat_to_string(r) + "*i";
        } else {
            coeff = "(" + gq_to_string(c) + ")";
        }
        std::string body = coeff;
        if (!mono.empty()) {
            if (!body.empty()) body += "*";
            body += mono;
        }
        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

inline std::string to_string(const HoloPoly& p) { return to_string(p.poly()); }

}  // namespace modelkit

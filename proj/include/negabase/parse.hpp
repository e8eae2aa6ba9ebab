#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "negabase/poly.hpp"
#include "negabase/rational.hpp"

namespace negabase {

using VarEnv = std::map<std::string, long>;

namespace detail {

struct PolyLexer {
    std::string s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

// term := factor ('*' factor)* ; factor := INT | IDENT | x ['^' INT]
inline void parse_term(PolyLexer& lx, const VarEnv& env, std::vector<BigInt>& coeffs, int sign) {
    BigInt coef(sign);
    long expo = 0;
    bool expect_factor = true;
    while (true) {
        char c = lx.peek();
        if (expect_factor) {
            if (c == 'x') {
                lx.take();
                long e = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    std::string num;
                    while (std::isdigit(static_cast<unsigned char>(lx.peek()))) num += lx.take();
                    if (num.empty()) throw std::invalid_argument("exponent expected after '^'");
                    e = std::stol(num);
                }
                expo += e;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (std::isdigit(static_cast<unsigned char>(lx.peek()))) num += lx.take();
                coef *= BigInt(num);
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string id;
                while (std::isalnum(static_cast<unsigned char>(lx.peek())) || lx.peek() == '_')
                    id += lx.take();
                auto it = env.find(id);
                if (it == env.end()) throw std::invalid_argument("unknown symbol: " + id);
                coef *= BigInt(it->second);
            } else {
                throw std::invalid_argument("term expected in polynomial");
            }
            expect_factor = false;
        } else if (c == '*') {
            lx.take();
            expect_factor = true;
        } else {
            break;
        }
    }
    if (static_cast<long>(coeffs.size()) <= expo) coeffs.resize(expo + 1, BigInt(0));
    coeffs[expo] += coef;
}

}  // namespace detail

/// Symbolic form like "x^3-x-1" or "x^2-a*x-b" with `env` supplying values
/// for free symbols.
inline IntPoly parse_poly_expr(const std::string& text, const VarEnv& env = {}) {
    detail::PolyLexer lx{text};
    std::vector<BigInt> coeffs;
    int sign = 1;
    if (lx.peek() == '-') {
        lx.take();
        sign = -1;
    } else if (lx.peek() == '+') {
        lx.take();
    }
    detail::parse_term(lx, env, coeffs, sign);
    while (!lx.done()) {
        char c = lx.take();
        if (c == '+')
            sign = 1;
        else if (c == '-')
            sign = -1;
        else
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in polynomial");
        detail::parse_term(lx, env, coeffs, sign);
    }
    return IntPoly(std::move(coeffs));
}

/// Either "c0,c1,...,cn" (ascending coefficients) or the symbolic form.
inline IntPoly parse_poly(const std::string& text) {
    if (text.find('x') != std::string::npos) return parse_poly_expr(text);
    std::vector<BigInt> coeffs;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        // trim
        std::size_t a = tok.find_first_not_of(" \t");
        std::size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty coefficient");
        coeffs.emplace_back(tok.substr(a, b - a + 1));
    }
    if (coeffs.empty()) throw std::invalid_argument("empty polynomial");
    return IntPoly(std::move(coeffs));
}

/// Comma-separated field-element coordinates "c0,c1,...,c(n-1)", rationals
/// allowed as "p/q".
inline std::vector<BigRat> parse_coords(const std::string& text) {
    std::vector<BigRat> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t a = tok.find_first_not_of(" \t");
        std::size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty coordinate");
        out.push_back(parse_rat(tok.substr(a, b - a + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty coordinate vector");
    return out;
}

/// One variable of the scan grammar: name plus an integer range whose bounds
/// may reference earlier variables.
struct FamilyVar {
    std::string name;
    std::string lo_expr, hi_expr;  // integer literal or variable name
};

/// Parsed scan family "x^2-a*x-b; a=1..10; b=1..a".
struct Family {
    std::string template_expr;
    std::vector<FamilyVar> vars;

    /// All member polynomials, in nested-loop order (earlier variables
    /// outermost).
    std::vector<IntPoly> enumerate() const {
        std::vector<IntPoly> out;
        VarEnv env;
        enumerate_rec(0, env, out);
        return out;
    }

  private:
    static long bound_value(const std::string& e, const VarEnv& env) {
        if (!e.empty() && (std::isdigit(static_cast<unsigned char>(e[0])) || e[0] == '-'))
            return std::stol(e);
        auto it = env.find(e);
        if (it == env.end()) throw std::invalid_argument("unknown range bound: " + e);
        return it->second;
    }

    void enumerate_rec(std::size_t k, VarEnv& env, std::vector<IntPoly>& out) const {
        if (k == vars.size()) {
            out.push_back(parse_poly_expr(template_expr, env));
            return;
        }
        long lo = bound_value(vars[k].lo_expr, env);
        long hi = bound_value(vars[k].hi_expr, env);
        for (long v = lo; v <= hi; ++v) {
            env[vars[k].name] = v;
            enumerate_rec(k + 1, env, out);
        }
        env.erase(vars[k].name);
    }
};

inline Family parse_family(const std::string& text) {
    Family fam;
    std::stringstream in(text);
    std::string part;
    bool first = true;
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        if (a == std::string::npos) return std::string();
        return s.substr(a, b - a + 1);
    };
    while (std::getline(in, part, ';')) {
        part = trim(part);
        if (part.empty()) continue;
        if (first) {
            fam.template_expr = part;
            first = false;
            continue;
        }
        auto eq = part.find('=');
        auto dots = part.find("..");
        if (eq == std::string::npos || dots == std::string::npos || dots < eq)
            throw std::invalid_argument("range must look like name=lo..hi: " + part);
        FamilyVar v;
        v.name = trim(part.substr(0, eq));
        v.lo_expr = trim(part.substr(eq + 1, dots - eq - 1));
        v.hi_expr = trim(part.substr(dots + 2));
        if (v.name.empty() || v.lo_expr.empty() || v.hi_expr.empty())
            throw std::invalid_argument("malformed range: " + part);
        fam.vars.push_back(std::move(v));
    }
    if (fam.template_expr.empty()) throw std::invalid_argument("empty family expression");
    return fam;
}

}  // namespace negabase

#ifndef HEIGHTLAB_SPREADS_HPP
#define HEIGHTLAB_SPREADS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "heightlab/numbers.hpp"

namespace heightlab::spreads {

// Symbolic constants admitted in defining equations.
struct ConstSymbol {
    enum Kind { imaginary_unit, pi, euler, sqrt_int, sqrt_pi } kind;
    Int arg; // sqrt_int only: squarefree integer >= 2

    static ConstSymbol i() { return {imaginary_unit, 0}; }
    static ConstSymbol Pi() { return {pi, 0}; }
    static ConstSymbol e() { return {euler, 0}; }
    static ConstSymbol sqrt_of(const Int& n) { return {sqrt_int, n}; }
    static ConstSymbol sqrt_of_pi() { return {sqrt_pi, 0}; }

    friend bool operator<(const ConstSymbol& a, const ConstSymbol& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.arg < b.arg;
    }
    friend bool operator==(const ConstSymbol& a, const ConstSymbol& b) {
        return a.kind == b.kind && a.arg == b.arg;
    }
    std::string to_string() const;
};

// Monomial over named variables and constant symbols; exponents positive.
struct Monomial {
    std::map<std::string, int> vars;
    std::map<ConstSymbol, int> consts;

    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.vars != b.vars) return a.vars < b.vars;
        return a.consts < b.consts;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.vars == b.vars && a.consts == b.consts;
    }
};

// Multivariate polynomial, normalized: zero coefficients dropped.
using MPoly = std::map<Monomial, Rat>;

MPoly mp_add(const MPoly& a, const MPoly& b);
MPoly mp_mul(const MPoly& a, const MPoly& b);
MPoly mp_scale(const MPoly& a, const Rat& s);
MPoly mp_pow(const MPoly& a, unsigned e);
std::string mp_to_string(const MPoly& p);

// Parse result: normalized polynomial plus the declaration order of
// constants and variables (first textual occurrence).
struct PolyExpr {
    std::string text;
    MPoly poly;
    std::vector<ConstSymbol> const_order;
    std::vector<std::string> var_order;
};

// Grammar: rational literals (a, a/b, decimals), identifiers (variables),
// reserved constants pi, e, i, sqrt(<squarefree int >= 2>), sqrt(pi),
// operators + - * / ^ and parentheses.  '/' and negative '^' exponents are
// admitted only where the divisor/base reduces to a rational constant.
PolyExpr parse_poly(const std::string& text);

struct SpreadPresentation {
    std::vector<MPoly> main;      // over original + fresh variables
    std::vector<MPoly> relations; // over fresh variables
    std::vector<std::pair<ConstSymbol, std::string>> substitution;
    std::vector<PolyExpr> originals;
    // --over-z: (D, h) with relation D*h - 1 appended and 1/D rewritten as h
    std::optional<std::pair<Int, std::string>> denominator_inverse;
};

// Replace each constant by a fresh variable (first-occurrence order, names
// drawn from u, v, w, t, s, ...), emitting the defining relation of each
// algebraic constant: i -> X^2+1, sqrt(k) -> X^2-k, and u - v^2 linking pi
// and sqrt(pi) when both occur; pi, e (and a lone sqrt(pi)) stay free.
SpreadPresentation spread(const PolyExpr& input, bool over_z = false);
SpreadPresentation spread_system(const std::vector<PolyExpr>& inputs, bool over_z = false);

struct VerifyReport {
    bool pass = false;
    double max_relation_residual = 0.0;
    double max_coefficient_residual = 0.0;
};

// Substitute 50-digit values of the true constants for the fresh variables:
// every relation must vanish below 1e-30 and the main polynomials must
// reproduce the original coefficients below 1e-30 relative.
VerifyReport verify_spread(const SpreadPresentation& sp);

} // namespace heightlab::spreads

#endif

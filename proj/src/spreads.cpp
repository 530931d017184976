#include "heightlab/spreads.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cctype>

namespace heightlab::spreads {

std::string ConstSymbol::to_string() const {
    switch (kind) {
        case imaginary_unit: return "i";
        case pi: return "pi";
        case euler: return "e";
        case sqrt_int: return "sqrt(" + arg.str() + ")";
        case sqrt_pi: return "sqrt(pi)";
    }
    return "?";
}

MPoly mp_add(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b) {
        auto it = r.find(m);
        if (it == r.end()) {
            r.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

MPoly mp_scale(const MPoly& a, const Rat& s) {
    MPoly r;
    if (s == 0) return r;
    for (const auto& [m, c] : a) r.emplace(m, c * s);
    return r;
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m = ma;
            for (const auto& [v, e] : mb.vars) m.vars[v] += e;
            for (const auto& [s, e] : mb.consts) m.consts[s] += e;
            auto it = r.find(m);
            if (it == r.end()) {
                r.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return r;
}

MPoly mp_pow(const MPoly& a, unsigned e) {
    MPoly r{{Monomial{}, Rat(1)}};
    MPoly b = a;
    while (e) {
        if (e & 1) r = mp_mul(r, b);
        b = mp_mul(b, b);
        e >>= 1;
    }
    return r;
}

namespace {

std::string monomial_to_string(const Monomial& m) {
    std::string s;
    auto emit = [&s](const std::string& name, int e) {
        if (!s.empty()) s += "*";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    };
    for (const auto& [c, e] : m.consts) emit(c.to_string(), e);
    for (const auto& [v, e] : m.vars) emit(v, e);
    return s;
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m.vars) d += e;
    for (const auto& [c, e] : m.consts) d += e;
    return d;
}

} // namespace

std::string mp_to_string(const MPoly& p) {
    if (p.empty()) return "0";
    // graded order, highest total degree first, map order within a grade
    std::vector<std::pair<Monomial, Rat>> terms(p.begin(), p.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return total_degree(a.first) > total_degree(b.first);
    });
    std::string s;
    for (const auto& [m, c] : terms) {
        std::string mono = monomial_to_string(m);
        bool neg = c < 0;
        Rat ac = neg ? Rat(-c) : c;
        if (s.empty()) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        if (mono.empty()) s += rat_to_string(ac);
        else if (ac == 1) s += mono;
        else s += rat_to_string(ac) + "*" + mono;
    }
    return s;
}

// ---- parser ---------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    PolyExpr out;

    explicit Parser(const std::string& text) : s(text) { out.text = text; }

    [[noreturn]] void fail(const std::string& what) {
        throw SyntaxError(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void note_const(const ConstSymbol& c) {
        for (const auto& k : out.const_order)
            if (k == c) return;
        out.const_order.push_back(c);
    }
    void note_var(const std::string& v) {
        for (const auto& k : out.var_order)
            if (k == v) return;
        out.var_order.push_back(v);
    }

    static MPoly constant(const Rat& c) {
        MPoly p;
        if (c != 0) p.emplace(Monomial{}, c);
        return p;
    }

    std::optional<Rat> as_rational(const MPoly& p) {
        if (p.empty()) return Rat(0);
        if (p.size() == 1 && p.begin()->first == Monomial{}) return p.begin()->second;
        return std::nullopt;
    }

    MPoly parse() {
        MPoly e = expr();
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input");
        return e;
    }

    MPoly expr() {
        MPoly acc = accept('-') ? mp_scale(term(), Rat(-1)) : term();
        while (true) {
            if (accept('+')) acc = mp_add(acc, term());
            else if (accept('-')) acc = mp_add(acc, mp_scale(term(), Rat(-1)));
            else return acc;
        }
    }

    MPoly term() {
        MPoly acc = factor();
        while (true) {
            if (accept('*')) {
                acc = mp_mul(acc, factor());
            } else if (accept('/')) {
                MPoly d = factor();
                auto c = as_rational(d);
                if (!c || *c == 0) fail("division restricted to nonzero rational constants");
                acc = mp_scale(acc, Rat(1) / *c);
            } else {
                return acc;
            }
        }
    }

    MPoly factor() {
        MPoly base = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected integer exponent");
            unsigned e = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
            if (neg) {
                auto c = as_rational(base);
                if (!c || *c == 0) fail("negative exponents restricted to rational constants");
                return constant(pow_rat(Rat(1) / *c, static_cast<long>(e)));
            }
            return mp_pow(base, e);
        }
        return base;
    }

    MPoly atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (accept('(')) {
            MPoly e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
                ++pos;
            return constant(parse_rat(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "sqrt") return sqrt_atom();
            if (name == "pi") return const_atom(ConstSymbol::Pi());
            if (name == "e") return const_atom(ConstSymbol::e());
            if (name == "i") return const_atom(ConstSymbol::i());
            note_var(name);
            Monomial m;
            m.vars[name] = 1;
            MPoly p;
            p.emplace(std::move(m), Rat(1));
            return p;
        }
        fail("unexpected character");
    }

    MPoly const_atom(const ConstSymbol& cs) {
        note_const(cs);
        Monomial m;
        m.consts[cs] = 1;
        MPoly p;
        p.emplace(std::move(m), Rat(1));
        return p;
    }

    MPoly sqrt_atom() {
        if (!accept('(')) fail("expected '(' after sqrt");
        skip_ws();
        // sqrt(pi) or sqrt(<integer>)
        if (pos + 1 < s.size() && s[pos] == 'p' && s[pos + 1] == 'i') {
            pos += 2;
            if (!accept(')')) fail("expected ')'");
            return const_atom(ConstSymbol::sqrt_of_pi());
        }
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected 'pi' or an integer inside sqrt");
        Int n(s.substr(start, pos - start));
        if (!accept(')')) fail("expected ')'");
        if (n < 2) fail("sqrt radicand must be >= 2");
        for (const auto& [p, e] : factor_integer(n))
            if (e >= 2) fail("sqrt radicand must be squarefree");
        return const_atom(ConstSymbol::sqrt_of(n));
    }
};

} // namespace

PolyExpr parse_poly(const std::string& text) {
    Parser p(text);
    p.out.poly = p.parse();
    PolyExpr out = std::move(p.out);
    return out;
}

// ---- spread ----------------------------------------------------------------

namespace {

const char* kFreshPool[] = {"u", "v", "w", "t", "s", "p", "q", "r", "m", "n"};

std::string fresh_name(size_t idx, const std::set<std::string>& taken) {
    size_t seen = 0;
    for (size_t round = 0;; ++round) {
        for (const char* base : kFreshPool) {
            std::string cand = round == 0 ? std::string(base)
                                          : std::string(base) + std::to_string(round);
            if (taken.count(cand)) continue;
            if (seen == idx) return cand;
            ++seen;
        }
    }
}

MPoly var_poly(const std::string& name) {
    Monomial m;
    m.vars[name] = 1;
    MPoly p;
    p.emplace(std::move(m), Rat(1));
    return p;
}

MPoly int_const(const Rat& c) {
    MPoly p;
    if (c != 0) p.emplace(Monomial{}, c);
    return p;
}

} // namespace

SpreadPresentation spread_system(const std::vector<PolyExpr>& inputs, bool over_z) {
    SpreadPresentation sp;
    sp.originals = inputs;

    std::vector<ConstSymbol> order;
    std::set<std::string> taken;
    for (const auto& in : inputs) {
        for (const auto& v : in.var_order) taken.insert(v);
        for (const auto& c : in.const_order) {
            bool seen = false;
            for (const auto& k : order) seen = seen || (k == c);
            if (!seen) order.push_back(c);
        }
    }

    std::map<ConstSymbol, std::string> names;
    for (size_t i = 0; i < order.size(); ++i) {
        std::string n = fresh_name(i, taken);
        names.emplace(order[i], n);
        sp.substitution.emplace_back(order[i], n);
    }

    bool has_sqrt_pi = names.count(ConstSymbol::sqrt_of_pi()) > 0;
    for (const auto& c : order) {
        switch (c.kind) {
            case ConstSymbol::imaginary_unit:
                sp.relations.push_back(
                    mp_add(mp_mul(var_poly(names[c]), var_poly(names[c])), int_const(Rat(1))));
                break;
            case ConstSymbol::sqrt_int:
                sp.relations.push_back(mp_add(mp_mul(var_poly(names[c]), var_poly(names[c])),
                                              int_const(Rat(-c.arg))));
                break;
            case ConstSymbol::pi:
                if (has_sqrt_pi) {
                    // u - v^2 between pi and sqrt(pi)
                    sp.relations.push_back(mp_add(
                        var_poly(names[c]),
                        mp_scale(mp_mul(var_poly(names[ConstSymbol::sqrt_of_pi()]),
                                        var_poly(names[ConstSymbol::sqrt_of_pi()])),
                                 Rat(-1))));
                }
                break;
            case ConstSymbol::euler:
            case ConstSymbol::sqrt_pi:
                break; // free coordinates (sqrt_pi ties to pi through pi's case)
        }
    }

    for (const auto& in : inputs) {
        MPoly main;
        for (const auto& [mono, coeff] : in.poly) {
            Monomial m;
            m.vars = mono.vars;
            for (const auto& [c, e] : mono.consts) m.vars[names[c]] += e;
            main.emplace(std::move(m), coeff);
        }
        sp.main.push_back(std::move(main));
    }

    if (over_z) {
        Int D = 1;
        for (const auto& p : sp.main)
            for (const auto& [m, c] : p) D = lcm_int(D, den(c));
        if (D > 1) {
            for (const auto& [c, n] : names) taken.insert(n);
            std::string h = fresh_name(0, taken);
            sp.denominator_inverse = {D, h};
            for (auto& p : sp.main) {
                MPoly q;
                for (const auto& [m, c] : p) {
                    if (den(c) == 1) {
                        q.emplace(m, c);
                    } else {
                        Monomial mm = m;
                        mm.vars[h] += 1;
                        q.emplace(std::move(mm), c * D); // (a/b)*D integral since b | D
                    }
                }
                p = std::move(q);
            }
            // D*h - 1 = 0
            sp.relations.push_back(
                mp_add(mp_scale(var_poly(h), Rat(D)), int_const(Rat(-1))));
        }
    }
    return sp;
}

SpreadPresentation spread(const PolyExpr& input, bool over_z) {
    return spread_system({input}, over_z);
}

// ---- verification ----------------------------------------------------------

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;
using CBig = boost::multiprecision::cpp_complex_50;

CBig numeric_value(const ConstSymbol& c) {
    switch (c.kind) {
        case ConstSymbol::imaginary_unit: return CBig(0, 1);
        case ConstSymbol::pi: return CBig(boost::math::constants::pi<Big>());
        case ConstSymbol::euler: return CBig(exp(Big(1)));
        case ConstSymbol::sqrt_int: return CBig(sqrt(Big(c.arg.str())));
        case ConstSymbol::sqrt_pi: return CBig(sqrt(boost::math::constants::pi<Big>()));
    }
    throw InvalidArgument("unreachable");
}

CBig rat_to_big(const Rat& q) { return CBig(Big(num(q).str()) / Big(den(q).str())); }

CBig pow_big(CBig b, int e) {
    CBig r(1);
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

// Collapse to a map over variable-monomials with numeric coefficients, using
// `values` for the named variables it covers (others stay symbolic).
std::map<std::map<std::string, int>, CBig> collapse(
    const MPoly& p, const std::map<std::string, CBig>& values,
    const std::map<ConstSymbol, CBig>& const_values) {
    std::map<std::map<std::string, int>, CBig> out;
    for (const auto& [mono, coeff] : p) {
        CBig c = rat_to_big(coeff);
        std::map<std::string, int> rest;
        for (const auto& [v, e] : mono.vars) {
            auto it = values.find(v);
            if (it == values.end()) rest[v] = e;
            else c *= pow_big(it->second, e);
        }
        for (const auto& [s, e] : mono.consts) c *= pow_big(const_values.at(s), e);
        auto it = out.find(rest);
        if (it == out.end()) out.emplace(std::move(rest), c);
        else it->second += c;
    }
    return out;
}

} // namespace

VerifyReport verify_spread(const SpreadPresentation& sp) {
    const double eps = 1e-30;
    VerifyReport rep;
    std::map<std::string, CBig> values;
    std::map<ConstSymbol, CBig> const_values;
    for (const auto& [c, name] : sp.substitution) {
        CBig v = numeric_value(c);
        values.emplace(name, v);
        const_values.emplace(c, v);
    }
    if (sp.denominator_inverse)
        values.emplace(sp.denominator_inverse->second,
                       CBig(1) / rat_to_big(Rat(sp.denominator_inverse->first)));

    for (const auto& rel : sp.relations) {
        auto v = collapse(rel, values, const_values);
        for (const auto& [m, c] : v) {
            if (!m.empty())
                throw VerificationFailed("relation contains an original variable");
            rep.max_relation_residual =
                std::max(rep.max_relation_residual, static_cast<double>(abs(c)));
        }
    }

    if (sp.main.size() != sp.originals.size())
        throw VerificationFailed("presentation/original arity mismatch");
    for (size_t k = 0; k < sp.main.size(); ++k) {
        auto got = collapse(sp.main[k], values, const_values);
        auto want = collapse(sp.originals[k].poly, values, const_values);
        double scale = 0.0;
        for (const auto& [m, c] : want) scale = std::max(scale, static_cast<double>(abs(c)));
        if (scale == 0.0) scale = 1.0;
        auto keys = got;
        for (const auto& [m, c] : want) keys.emplace(m, CBig(0));
        for (const auto& [m, tag] : keys) {
            (void)tag;
            CBig a = got.count(m) ? got.at(m) : CBig(0);
            CBig b = want.count(m) ? want.at(m) : CBig(0);
            double mag = std::max({static_cast<double>(abs(a)),
                                   static_cast<double>(abs(b)), scale * 1e-10});
            double resid = static_cast<double>(abs(a - b)) / mag;
            rep.max_coefficient_residual = std::max(rep.max_coefficient_residual, resid);
        }
    }

    rep.pass = rep.max_relation_residual < eps && rep.max_coefficient_residual < eps;
    return rep;
}

} // namespace heightlab::spreads

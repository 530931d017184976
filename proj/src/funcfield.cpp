#include "heightlab/funcfield.hpp"

#include <cctype>
#include <sstream>

namespace heightlab::funcfield {

namespace {

bool is_irreducible_deg_le2(const Poly<Rat>& m) {
    if (m.degree() == 1) return true;
    if (m.degree() != 2) return false;
    Rat disc = m.coeff(1) * m.coeff(1) - 4 * m.coeff(2) * m.coeff(0);
    return !sqrt_exact(disc).has_value();
}

} // namespace

Place Place::finite(Poly<Rat> minimal) {
    if (minimal.degree() < 1 || minimal.degree() > 2)
        throw InvalidArgument("finite place needs a polynomial of degree 1 or 2");
    minimal = minimal.make_monic();
    if (!is_irreducible_deg_le2(minimal))
        throw InvalidArgument("place polynomial is reducible: " + poly_to_string(minimal, "t"));
    return Place(false, std::move(minimal));
}

Place Place::at(const Rat& root) {
    return Place(false, Poly<Rat>({-root, Rat(1)}));
}

std::string Place::to_string() const {
    if (infinite_) return "(infinity)";
    return "(" + poly_to_string(minpoly_, "t") + ")";
}

std::string ResidueElement::to_string() const {
    if (b == 0) return rat_to_string(a);
    std::string s = rat_to_string(a);
    if (b > 0) s += "+";
    s += (b == 1 ? "" : b == -1 ? "-" : rat_to_string(b) + "*");
    s += "theta";
    return s;
}

ResidueElement residue_mul(const ResidueElement& x, const ResidueElement& y) {
    if (x.place != y.place) throw InvalidArgument("residue elements at different places");
    if (x.place.degree() == 1) return {x.place, x.a * y.a, Rat(0)};
    // theta^2 = -c1*theta - c0
    const auto& m = x.place.minimal_polynomial();
    Rat c1 = m.coeff(1), c0 = m.coeff(0);
    Rat hi = x.a * y.b + x.b * y.a;
    Rat sq = x.b * y.b;
    return {x.place, x.a * y.a - sq * c0, hi - sq * c1};
}

Rat residue_norm(const ResidueElement& x) {
    if (x.place.degree() == 1) return x.a;
    const auto& m = x.place.minimal_polynomial();
    Rat c1 = m.coeff(1), c0 = m.coeff(0);
    return x.a * x.a - c1 * x.a * x.b + c0 * x.b * x.b;
}

ResidueElement residue_inverse(const ResidueElement& x) {
    if (x.is_zero()) throw ZeroElement("inverse of zero residue element");
    if (x.place.degree() == 1) return {x.place, Rat(1) / x.a, Rat(0)};
    // conj(a + b*theta) = (a - c1*b) - b*theta ; x * conj(x) = N(x)
    const auto& m = x.place.minimal_polynomial();
    Rat c1 = m.coeff(1);
    Rat n = residue_norm(x);
    return {x.place, (x.a - c1 * x.b) / n, -x.b / n};
}

ResidueElement residue_pow(const ResidueElement& x, long e) {
    ResidueElement r{x.place, Rat(1), Rat(0)};
    if (e == 0) return r;
    ResidueElement b = e < 0 ? residue_inverse(x) : x;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    while (ae) {
        if (ae & 1) r = residue_mul(r, b);
        b = residue_mul(b, b);
        ae >>= 1;
    }
    return r;
}

bool residue_equal(const ResidueElement& x, const ResidueElement& y) {
    return x.place == y.place && x.a == y.a && x.b == y.b;
}

RationalFunction::RationalFunction(Poly<Rat> num, Poly<Rat> den) {
    if (den.is_zero()) throw ZeroElement("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly<Rat>::zero();
        den_ = Poly<Rat>::one();
        return;
    }
    Poly<Rat> g = gcd(num, den);
    if (g.degree() > 0) {
        num = div_exact(num, g);
        den = div_exact(den, g);
    }
    Rat dl = den.lc();
    num_ = num * (Rat(1) / dl);
    den_ = den * (Rat(1) / dl);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction::constant(Rat(1));
    if (is_zero()) {
        if (e > 0) return *this;
        throw ZeroElement("negative power of the zero function");
    }
    RationalFunction r = RationalFunction::constant(Rat(1));
    RationalFunction b = e < 0 ? RationalFunction(den_, num_) : *this;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    while (ae) {
        if (ae & 1) r = r * b;
        b = b * b;
        ae >>= 1;
    }
    return r;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_ == Poly<Rat>::one()) return poly_to_string(num_, var);
    return "(" + poly_to_string(num_, var) + ")/(" + poly_to_string(den_, var) + ")";
}

void Divisor::add(const Place& p, int mult) {
    if (mult == 0) return;
    auto it = support.find(p);
    if (it == support.end()) {
        support.emplace(p, mult);
    } else {
        it->second += mult;
        if (it->second == 0) support.erase(it);
    }
}

int Divisor::degree_sum() const {
    int s = 0;
    for (const auto& [p, m] : support) s += m * p.degree();
    return s;
}

Divisor Divisor::operator-() const {
    Divisor d;
    for (const auto& [p, m] : support) d.support.emplace(p, -m);
    return d;
}

Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [p, m] : b.support) a.add(p, m);
    return a;
}

namespace {

// Roots p/q of a primitive integer polynomial: p | constant term, q | lc.
std::vector<Rat> integer_poly_rational_roots(const Poly<Rat>& p) {
    std::vector<Rat> roots;
    // strip t^k
    Poly<Rat> q = p;
    size_t low = 0;
    while (low < q.coeffs().size() && q.coeffs()[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(Rat(0));
        std::vector<Rat> v(q.coeffs().begin() + static_cast<long>(low), q.coeffs().end());
        q = Poly<Rat>(std::move(v));
    }
    if (q.degree() < 1) return roots;
    Int c0 = num(q.coeff(0));
    Int cl = num(q.lc());
    for (const Int& a : divisors(c0)) {
        for (const Int& b : divisors(cl)) {
            for (int sign : {1, -1}) {
                Rat r(sign * a, b);
                if (q.eval(r) == 0) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Exhaustive search for a degree-2 factor of a primitive squarefree integer
// polynomial with no rational roots.  Any integer quadratic factor g
// satisfies lc(g) | lc(p), g(0) | p(0), g(1) | p(1) (Gauss), so trying every
// such candidate is complete: if none divides, p has an irreducible factor
// of degree >= 3.
std::optional<Poly<Rat>> find_quadratic_factor(const Poly<Rat>& p) {
    Rat p0 = p.eval(Rat(0)), p1 = p.eval(Rat(1));
    if (p0 == 0 || p1 == 0) throw InvalidArgument("rational roots must be stripped first");
    std::vector<Int> d0 = divisors(num(p0));
    std::vector<Int> d1 = divisors(num(p1));
    std::vector<Int> dl = divisors(num(p.lc()));
    for (const Int& c : dl) {
        for (const Int& a0 : d0) {
            for (int s0 : {1, -1}) {
                Int a = s0 * a0;
                for (const Int& b1 : d1) {
                    for (int s1 : {1, -1}) {
                        // g(1) = c + b + a = s1*b1
                        Int b = s1 * b1 - c - a;
                        Poly<Rat> g({Rat(a), Rat(b), Rat(c)});
                        if (g.degree() == 2 && divides(g, p)) return g;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<Rat> rational_roots(const Poly<Rat>& p) {
    if (p.degree() < 1) return {};
    auto [content, prim] = primitive_part(p);
    (void)content;
    return integer_poly_rational_roots(prim);
}

PlaceFactorization factor_into_places(const Poly<Rat>& p) {
    if (p.is_zero()) throw ZeroElement("factoring the zero polynomial");
    PlaceFactorization out;
    out.unit = p.lc();
    if (p.degree() == 0) return out;
    for (auto& [component, mult] : squarefree_decomposition(p)) {
        Poly<Rat> rem = component;
        for (const Rat& r : rational_roots(component)) {
            Poly<Rat> lin({-r, Rat(1)});
            rem = div_exact(rem, lin);
            auto [it, fresh] = out.factors.emplace(Place::at(r), mult);
            if (!fresh) it->second += mult;
        }
        while (rem.degree() > 0) {
            if (rem.degree() == 2) {
                auto [it, fresh] = out.factors.emplace(Place::finite(rem), mult);
                if (!fresh) it->second += mult;
                break;
            }
            if (rem.degree() % 2 == 1)
                throw FactorDegreeExceeded("irreducible factor of degree >= 3 in " +
                                           poly_to_string(p, "t"));
            auto [c, prim] = primitive_part(rem);
            (void)c;
            auto quad = find_quadratic_factor(prim);
            if (!quad)
                throw FactorDegreeExceeded("irreducible factor of degree >= 3 in " +
                                           poly_to_string(p, "t"));
            auto [it, fresh] = out.factors.emplace(Place::finite(*quad), mult);
            if (!fresh) it->second += mult;
            rem = div_exact(rem, *quad);
        }
    }
    return out;
}

Divisor divisor_of(const RationalFunction& f) {
    if (f.is_zero()) throw ZeroElement("divisor of the zero function");
    Divisor d;
    for (const auto& [p, m] : factor_into_places(f.num()).factors) d.add(p, m);
    for (const auto& [p, m] : factor_into_places(f.den()).factors) d.add(p, -m);
    d.add(Place::infinity(), f.den().degree() - f.num().degree());
    if (d.degree_sum() != 0)
        throw InvalidArgument("internal: divisor degree is nonzero");
    return d;
}

namespace {

int poly_order_at_finite(const Poly<Rat>& p, const Poly<Rat>& minpoly) {
    int ord = 0;
    Poly<Rat> cur = p;
    while (true) {
        auto [q, r] = divmod(cur, minpoly);
        if (!r.is_zero()) return ord;
        cur = q;
        ++ord;
        if (cur.is_zero()) throw ZeroElement("order of the zero polynomial");
    }
}

// p with every minpoly factor removed, paired with its order.
std::pair<int, Poly<Rat>> strip_place(const Poly<Rat>& p, const Poly<Rat>& minpoly) {
    int ord = 0;
    Poly<Rat> cur = p;
    while (true) {
        auto [q, r] = divmod(cur, minpoly);
        if (!r.is_zero()) return {ord, cur};
        cur = q;
        ++ord;
    }
}

ResidueElement eval_poly_at(const Poly<Rat>& p, const Place& place) {
    if (place.is_infinity()) throw InvalidArgument("polynomial evaluation at infinity");
    if (place.degree() == 1) {
        Rat root = -place.minimal_polynomial().coeff(0);
        return {place, p.eval(root), Rat(0)};
    }
    Poly<Rat> r = p % place.minimal_polynomial();
    return {place, r.coeff(0), r.coeff(1)};
}

} // namespace

int order_at(const RationalFunction& f, const Place& p) {
    if (f.is_zero()) throw ZeroElement("order of the zero function");
    if (p.is_infinity()) return f.den().degree() - f.num().degree();
    const auto& m = p.minimal_polynomial();
    return poly_order_at_finite(f.num(), m) - poly_order_at_finite(f.den(), m);
}

ResidueElement evaluate_at(const RationalFunction& f, const Place& p) {
    if (f.is_zero()) throw ZeroElement("evaluating the zero function");
    int ord = order_at(f, p);
    if (ord != 0)
        throw NotAUnit("nu_p(f) = " + std::to_string(ord) + " != 0 at " + p.to_string());
    if (p.is_infinity()) {
        // deg num == deg den; denominator is monic
        return {p, f.num().lc(), Rat(0)};
    }
    const auto& m = p.minimal_polynomial();
    auto [on, sn] = strip_place(f.num(), m);
    auto [od, sd] = strip_place(f.den(), m);
    (void)on;
    (void)od;
    return residue_mul(eval_poly_at(sn, p), residue_inverse(eval_poly_at(sd, p)));
}

ResidueElement tame_symbol(const RationalFunction& f, const RationalFunction& g,
                           const Place& p) {
    if (f.is_zero() || g.is_zero()) throw ZeroElement("tame symbol of the zero function");
    long nf = order_at(f, p), ng = order_at(g, p);
    ResidueElement uf{p, Rat(1), Rat(0)}, ug{p, Rat(1), Rat(0)};
    if (p.is_infinity()) {
        uf = {p, f.num().lc() / f.den().lc(), Rat(0)};
        ug = {p, g.num().lc() / g.den().lc(), Rat(0)};
    } else {
        const auto& m = p.minimal_polynomial();
        auto strip_eval = [&](const RationalFunction& h) {
            auto [on, sn] = strip_place(h.num(), m);
            auto [od, sd] = strip_place(h.den(), m);
            (void)on;
            (void)od;
            return residue_mul(eval_poly_at(sn, p), residue_inverse(eval_poly_at(sd, p)));
        };
        uf = strip_eval(f);
        ug = strip_eval(g);
    }
    ResidueElement t = residue_mul(residue_pow(uf, ng), residue_pow(ug, -nf));
    if ((nf * ng) % 2 != 0) {
        t.a = -t.a;
        t.b = -t.b;
    }
    return t;
}

std::vector<WeilFactor> weil_factors(const RationalFunction& f, const RationalFunction& g) {
    // union of the two supports; places off both divisors have symbol 1
    std::map<Place, int> places;
    for (const auto& [p, m] : divisor_of(f).support) places.emplace(p, m);
    for (const auto& [p, m] : divisor_of(g).support) places.emplace(p, m);
    std::vector<WeilFactor> out;
    for (const auto& [p, tag] : places) {
        (void)tag;
        ResidueElement sym = tame_symbol(f, g, p);
        out.push_back({p, sym, residue_norm(sym)});
    }
    return out;
}

Rat weil_product(const RationalFunction& f, const RationalFunction& g) {
    Rat prod(1);
    for (const auto& fac : weil_factors(f, g)) prod *= fac.norm;
    return prod;
}

// ---- expression parser -----------------------------------------------------

namespace {

struct RFParser {
    const std::string& s;
    const std::string& var;
    size_t pos = 0;

    RFParser(const std::string& text, const std::string& v) : s(text), var(v) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw SyntaxError(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }

    RationalFunction parse() {
        RationalFunction e = expr();
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input");
        return e;
    }

    RationalFunction expr() {
        RationalFunction acc = accept('-') ? RationalFunction::constant(-1) * term() : term();
        while (true) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        while (true) {
            if (accept('*')) acc = acc * factor();
            else if (accept('/')) acc = acc / factor();
            else return acc;
        }
    }

    RationalFunction factor() {
        RationalFunction base = atom();
        skip_ws();
        if (accept('^')) {
            long e = integer_exponent();
            base = base.pow(e);
        }
        return base;
    }

    long integer_exponent() {
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer exponent");
        long v = std::stol(s.substr(start, pos - start));
        return neg ? -v : v;
    }

    RationalFunction atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (accept('(')) {
            RationalFunction e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '.')) ++pos;
            return RationalFunction::constant(parse_rat(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            if (name != var) fail("unknown identifier '" + name + "'");
            return RationalFunction::t();
        }
        fail("unexpected character");
    }
};

} // namespace

RationalFunction parse_rational_function(const std::string& text, const std::string& var) {
    RFParser p(text, var);
    return p.parse();
}

} // namespace heightlab::funcfield

#include "heightlab/arch_pairing.hpp"

namespace heightlab::archpair {

using funcfield::divisor_of;
using funcfield::evaluate_at;
using funcfield::order_at;
using funcfield::residue_norm;

void Precycle0::require_single_ambient() const {
    if (!p1_terms.empty() && !line_terms.empty())
        throw InvalidArgument("precycle mixes P1 and P2-line supports");
}

void ZeroCycle::add(const Place& p, int m) {
    if (m == 0) return;
    auto it = places.find(p);
    if (it == places.end()) {
        places.emplace(p, m);
    } else {
        it->second += m;
        if (it->second == 0) places.erase(it);
    }
}

ZeroCycle operator+(ZeroCycle a, const ZeroCycle& b) {
    for (const auto& [p, m] : b.places) a.add(p, m);
    for (const auto& [p, m] : b.points.points) a.points.add(p, m);
    return a;
}

LineFunction line_function_from_rational(const RationalFunction& f) {
    if (f.is_zero()) throw ZeroElement("zero function on a line");
    LineFunction out = LineFunction::constant(Gaussian(1));
    auto push_poly = [&out](const Poly<Rat>& p, long e) {
        auto fac = funcfield::factor_into_places(p);
        out.scalar = out.scalar * pow_gaussian(Gaussian(fac.unit), e);
        for (const auto& [place, mult] : fac.factors) {
            const auto& m = place.minimal_polynomial();
            if (place.degree() == 1) {
                out.push(Poly<Gaussian>({Gaussian(m.coeff(0)), Gaussian(1)}), e * mult);
                continue;
            }
            // split t^2 + c1 t + c0 over Q(i): roots (-c1 +- sqrt(disc))/2
            Rat disc = m.coeff(1) * m.coeff(1) - 4 * m.coeff(0);
            auto root = sqrt_exact(Gaussian(disc));
            if (!root)
                throw FactorDegreeExceeded("place " + place.to_string() +
                                           " does not split over Q(i); no exact point "
                                           "bookkeeping on a line");
            Gaussian r1 = (Gaussian(-m.coeff(1)) + *root) * Gaussian(Rat(1, 2));
            Gaussian r2 = (Gaussian(-m.coeff(1)) - *root) * Gaussian(Rat(1, 2));
            out.push(Poly<Gaussian>({-r1, Gaussian(1)}), e * mult);
            out.push(Poly<Gaussian>({-r2, Gaussian(1)}), e * mult);
        }
    };
    push_poly(f.num(), 1);
    push_poly(f.den(), -1);
    return out;
}

ZeroCycle zero_cycle_of_divisor(const Divisor& d) {
    ZeroCycle z;
    for (const auto& [p, m] : d.support) z.add(p, m);
    return z;
}

ZeroCycle boundary(const Precycle0& xi1p) {
    xi1p.require_single_ambient();
    ZeroCycle out;
    for (const auto& term : xi1p.p1_terms)
        for (const auto& [p, m] : divisor_of(term.f).support) out.add(p, m);
    for (const auto& term : xi1p.line_terms) {
        for (const auto& [root, mult] : term.f.finite_divisor())
            out.points.add(term.line.at(root), static_cast<int>(mult));
        long inf = term.f.order_at_infinity();
        if (inf != 0) out.points.add(term.line.at_infinity(), static_cast<int>(inf));
    }
    return out;
}

ExactLog pair_m0(const Precycle0& xi1p, const ZeroCycle& xi2) {
    xi1p.require_single_ambient();
    ZeroCycle bd = boundary(xi1p);
    for (const auto& [p, m] : bd.places)
        if (xi2.places.count(p))
            throw SupportsNotDisjoint("boundary and xi2 share the place " + p.to_string());
    for (const auto& [p, m] : bd.points.points)
        if (xi2.points.points.count(p))
            throw SupportsNotDisjoint("boundary and xi2 share the point " + p.to_string());

    ExactLog out;
    for (const auto& term : xi1p.p1_terms) {
        for (const auto& [place, mult] : xi2.places) {
            Rat n = residue_norm(evaluate_at(term.f, place)); // throws NotAUnit on nonzero order
            out.ratio_sq *= pow_rat(n * n, mult);
        }
    }
    for (const auto& term : xi1p.line_terms) {
        for (const auto& [pt, mult] : xi2.points.points) {
            if (!term.line.contains(pt)) continue;
            auto tau = term.line.parameter_of(pt);
            long ord = tau ? term.f.order_at(*tau) : term.f.order_at_infinity();
            if (ord != 0)
                throw NotAUnit("xi2 point " + pt.to_string() + " is a zero/pole on " +
                               term.line.to_string());
            auto v = tau ? term.f.value_at(*tau) : term.f.value_at_infinity();
            out.ratio_sq *= pow_rat(v->norm(), mult);
        }
    }
    return out;
}

std::pair<ExactLog, ExactLog> reciprocity_check(const Precycle0& xi1p, const Precycle0& xi2p) {
    return {pair_m0(xi1p, boundary(xi2p)), pair_m0(xi2p, boundary(xi1p))};
}

FiniteSelfMap::FiniteSelfMap(RationalFunction f) : phi(std::move(f)) {
    if (phi.is_zero() || phi.is_constant())
        throw DegenerateMap("self-map must be nonconstant");
}

namespace {

// prod over roots beta of P (with multiplicity) of Q(beta); exact.
Rat root_product(const Poly<Rat>& P, const Poly<Rat>& Q) {
    if (P.degree() <= 0) return Rat(1);
    if (Q.is_zero()) return Rat(0);
    if (Q.degree() == 0) return pow_rat(Q.coeff(0), P.degree());
    Poly<Rat> R = Q % P;
    if (R != Q) return root_product(P, R);
    // swap using prod_{P=0}Q = lc(Q)^degP / lc(P)^degQ * (-1)^(degP degQ) prod_{Q=0}P
    Rat c = pow_rat(Q.lc(), P.degree()) / pow_rat(P.lc(), Q.degree());
    if ((P.degree() % 2) && (Q.degree() % 2)) c = -c;
    return c * root_product(Q, P % Q);
}

Poly<Rat> lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    Poly<Rat> acc = Poly<Rat>::zero();
    for (size_t i = 0; i < pts.size(); ++i) {
        Poly<Rat> basis = Poly<Rat>::one();
        Rat denom(1);
        for (size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly<Rat>({-pts[j].first, Rat(1)});
            denom *= pts[i].first - pts[j].first;
        }
        acc = acc + basis * (pts[i].second / denom);
    }
    return acc;
}

// W_P(s) = prod over roots beta of P of (A(beta) - s B(beta)), a polynomial
// in s of degree <= deg P.
Poly<Rat> fiber_product_poly(const Poly<Rat>& P, const Poly<Rat>& A, const Poly<Rat>& B) {
    if (P.degree() <= 0) return Poly<Rat>::one();
    int target = P.degree();
    std::vector<std::pair<Rat, Rat>> samples;
    int k = 0;
    while (static_cast<int>(samples.size()) < target + 1) {
        Rat si = (k % 2 == 0) ? Rat(k / 2) : Rat(-(k / 2 + 1));
        ++k;
        Poly<Rat> G = A - B * si;
        samples.emplace_back(si, root_product(P, G));
    }
    return lagrange_interpolate(samples);
}

} // namespace

RationalFunction norm_along(const FiniteSelfMap& phi, const RationalFunction& f) {
    if (f.is_zero()) throw ZeroElement("norm of the zero function");
    const Poly<Rat>& A = phi.phi.num();
    const Poly<Rat>& B = phi.phi.den();
    int n = phi.degree();
    Poly<Rat> lead(
        std::vector<Rat>{A.coeff(static_cast<size_t>(n)), -B.coeff(static_cast<size_t>(n))});
    // lead(s) = a_n - s*b_n, the leading coefficient of A - sB in t
    Poly<Rat> Wn = fiber_product_poly(f.num(), A, B);
    Poly<Rat> Wd = fiber_product_poly(f.den(), A, B);
    Poly<Rat> numo = Wn;
    Poly<Rat> deno = Wd;
    int dn = f.num().degree(), dd = f.den().degree();
    for (int i = 0; i < dd; ++i) numo = numo * lead;
    for (int i = 0; i < dn; ++i) deno = deno * lead;
    return RationalFunction(numo, deno);
}

Precycle0 pushforward_precycle(const FiniteSelfMap& phi, const Precycle0& xi1p) {
    if (!xi1p.on_p1())
        throw InvalidArgument("pushforward is defined for P1 precycles");
    Precycle0 out;
    for (const auto& term : xi1p.p1_terms)
        out.p1_terms.push_back({norm_along(phi, term.f)});
    return out;
}

ZeroCycle pullback_cycle(const FiniteSelfMap& phi, const ZeroCycle& xi2) {
    if (!xi2.points.empty())
        throw InvalidArgument("pullback is defined for P1 cycles");
    ZeroCycle out;
    for (const auto& [q, mult] : xi2.places) {
        if (q.is_infinity()) {
            for (const auto& [p, m] : divisor_of(phi.phi).support)
                if (m < 0) out.add(p, -m * mult);
            continue;
        }
        const auto& mu = q.minimal_polynomial();
        // mu(phi) cleared: for mu = t + c0 -> A + c0 B over B;
        // for mu = t^2 + c1 t + c0 -> A^2 + c1 A B + c0 B^2 over B^2.
        Poly<Rat> comp_num, comp_den;
        const Poly<Rat>& A = phi.phi.num();
        const Poly<Rat>& B = phi.phi.den();
        if (mu.degree() == 1) {
            comp_num = A + B * mu.coeff(0);
            comp_den = B;
        } else {
            comp_num = A * A + A * B * mu.coeff(1) + B * B * mu.coeff(0);
            comp_den = B * B;
        }
        RationalFunction h(comp_num, comp_den);
        for (const auto& [p, m] : divisor_of(h).support)
            if (m > 0) out.add(p, m * mult);
    }
    return out;
}

} // namespace heightlab::archpair

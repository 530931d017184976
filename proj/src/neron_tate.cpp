#include "heightlab/neron_tate.hpp"

#include <cmath>

namespace heightlab::nt {

EllipticCurveQ::EllipticCurveQ(Int a1, Int a2, Int a3, Int a4, Int a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)),
      a6_(std::move(a6)) {
    Int c_b2 = b2(), c_b4 = b4(), c_b6 = b6(), c_b8 = b8();
    disc_ = -c_b2 * c_b2 * c_b8 - 8 * c_b4 * c_b4 * c_b4 - 27 * c_b6 * c_b6 +
            9 * c_b2 * c_b4 * c_b6;
    if (disc_ == 0) throw InvalidArgument("singular curve: discriminant is zero");
}

std::string EllipticCurveQ::to_string() const {
    return "[" + a1_.str() + "," + a2_.str() + "," + a3_.str() + "," + a4_.str() + "," +
           a6_.str() + "]";
}

std::string ECPoint::to_string() const {
    if (infinity) return "O";
    return "(" + rat_to_string(x) + ", " + rat_to_string(y) + ")";
}

bool is_on_curve(const EllipticCurveQ& E, const ECPoint& P) {
    if (P.infinity) return true;
    Rat lhs = P.y * P.y + Rat(E.a1()) * P.x * P.y + Rat(E.a3()) * P.y;
    Rat rhs = P.x * P.x * P.x + Rat(E.a2()) * P.x * P.x + Rat(E.a4()) * P.x + Rat(E.a6());
    return lhs == rhs;
}

void require_on_curve(const EllipticCurveQ& E, const ECPoint& P) {
    if (!is_on_curve(E, P))
        throw NotOnCurve("point " + P.to_string() + " is not on " + E.to_string());
}

ECPoint ec_neg(const EllipticCurveQ& E, const ECPoint& P) {
    if (P.infinity) return P;
    return ECPoint::affine(P.x, -P.y - Rat(E.a1()) * P.x - Rat(E.a3()));
}

namespace {

ECPoint chord_tangent(const EllipticCurveQ& E, const ECPoint& P, const ECPoint& Q,
                      const Rat& lambda) {
    Rat nu = P.y - lambda * P.x;
    Rat x3 = lambda * lambda + Rat(E.a1()) * lambda - Rat(E.a2()) - P.x - Q.x;
    Rat y3 = -(lambda + Rat(E.a1())) * x3 - nu - Rat(E.a3());
    return ECPoint::affine(x3, y3);
}

} // namespace

ECPoint ec_add(const EllipticCurveQ& E, const ECPoint& P, const ECPoint& Q) {
    require_on_curve(E, P);
    require_on_curve(E, Q);
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    if (P.x == Q.x) {
        if (Q.y == -P.y - Rat(E.a1()) * P.x - Rat(E.a3())) return ECPoint::O();
        // P == Q
        Rat numl = 3 * P.x * P.x + 2 * Rat(E.a2()) * P.x + Rat(E.a4()) - Rat(E.a1()) * P.y;
        Rat denl = 2 * P.y + Rat(E.a1()) * P.x + Rat(E.a3());
        return chord_tangent(E, P, Q, numl / denl);
    }
    return chord_tangent(E, P, Q, (Q.y - P.y) / (Q.x - P.x));
}

ECPoint ec_double(const EllipticCurveQ& E, const ECPoint& P) { return ec_add(E, P, P); }

ECPoint ec_mul(const EllipticCurveQ& E, long n, const ECPoint& P) {
    require_on_curve(E, P);
    if (n == 0 || P.infinity) return ECPoint::O();
    ECPoint base = n < 0 ? ec_neg(E, P) : P;
    unsigned long an = static_cast<unsigned long>(n < 0 ? -n : n);
    ECPoint acc = ECPoint::O();
    while (an) {
        if (an & 1) acc = ec_add(E, acc, base);
        base = ec_double(E, base);
        an >>= 1;
    }
    return acc;
}

double naive_height(const ECPoint& P) {
    if (P.infinity) return 0.0;
    Int n = abs_int(num(P.x)), d = den(P.x);
    return log_int(n > d ? n : d > 0 ? d : Int(1));
}

namespace {

// Duplication quotient x(2P) = N(x)/D(x).
std::pair<Poly<Rat>, Poly<Rat>> duplication_polys(const EllipticCurveQ& E) {
    Rat b2(E.b2()), b4(E.b4()), b6(E.b6()), b8(E.b8());
    Poly<Rat> N({-b8, -2 * b6, -b4, Rat(0), Rat(1)});
    Poly<Rat> D({b6, 2 * b4, b2, Rat(4)});
    return {N, D};
}

double l1_log(const Poly<Rat>& p) {
    Rat s(0);
    for (const auto& c : p.coeffs()) s += abs_rat(c);
    return log_rat_abs(s);
}

// Clear denominators of u*X + v*Y = 1 into U*X + V*Y = lambda over Z;
// returns log(lcm * (|U|_1 + |V|_1) / ... ) pieces the caller combines.
struct BezoutData {
    Int lambda;        // integral right-hand side
    Rat cofactor_sum;  // |U|_1 + |V|_1 after clearing
};

BezoutData cleared_bezout(const Poly<Rat>& X, const Poly<Rat>& Y) {
    auto e = ext_gcd(X, Y);
    if (e.g.degree() != 0)
        throw InvalidArgument("duplication polynomials are not coprime");
    // ext_gcd returns monic g = 1 already
    Int l = lcm_int(denominator_lcm(e.u), denominator_lcm(e.v));
    Rat sum(0);
    for (const auto& c : e.u.coeffs()) sum += abs_rat(c * l);
    for (const auto& c : e.v.coeffs()) sum += abs_rat(c * l);
    return {l, sum};
}

} // namespace

double height_difference_bound(const EllipticCurveQ& E) {
    auto [N, D] = duplication_polys(E);
    // Upper direction: |N*(a,b)|, |D*(a,b)| <= (coefficient l1) * max(|a|,|b|)^4.
    double c1 = std::max(l1_log(N), l1_log(D));
    // Lower direction via Bezout cofactors of (N, D) and of the reversals:
    // lambda * b^7 = U N* + V D*  and  mu * a^7 = U' N* + V' D', giving
    // h(2P) >= 4 h(P) - log(K * lcm(lambda, mu) / min(lambda, mu)).
    BezoutData direct = cleared_bezout(N, D);
    // reversals t^4 N(1/t), t^4 D(1/t); D has degree 3, so its reversal gets
    // a vanishing constant term
    Poly<Rat> Nrev = Poly<Rat>(std::vector<Rat>(N.coeffs().rbegin(), N.coeffs().rend()));
    std::vector<Rat> drev(5, Rat(0));
    for (int i = 0; i <= D.degree(); ++i)
        drev[static_cast<size_t>(4 - i)] = D.coeff(static_cast<size_t>(i));
    Poly<Rat> Drev(std::move(drev));
    BezoutData rev = cleared_bezout(Nrev, Drev);
    Int lam = abs_int(direct.lambda), mu = abs_int(rev.lambda);
    Rat K = direct.cofactor_sum > rev.cofactor_sum ? direct.cofactor_sum : rev.cofactor_sum;
    Int l = lcm_int(lam, mu);
    Int mn = lam < mu ? lam : mu;
    double c2 = log_rat_abs(K) + log_int(l) - log_int(mn);
    return std::max(c1, c2);
}

namespace {

// Modulus bounding gcd(N*(a,b), D*(a,b)) for coprime (a, b): the lcm of the
// cleared Bezout right-hand sides of (N, D) and their reversals.  Keeping the
// x-iteration on integer pairs with this small-gcd reduction avoids full-size
// gcd normalizations of ~4^n-digit rationals.
Int duplication_gcd_modulus(const EllipticCurveQ& E) {
    auto [N, D] = duplication_polys(E);
    BezoutData direct = cleared_bezout(N, D);
    Poly<Rat> Nrev = Poly<Rat>(std::vector<Rat>(N.coeffs().rbegin(), N.coeffs().rend()));
    std::vector<Rat> drev(5, Rat(0));
    for (int i = 0; i <= D.degree(); ++i)
        drev[static_cast<size_t>(4 - i)] = D.coeff(static_cast<size_t>(i));
    BezoutData rev = cleared_bezout(Nrev, Poly<Rat>(std::move(drev)));
    return lcm_int(abs_int(direct.lambda), abs_int(rev.lambda));
}

} // namespace

double canonical_height(const EllipticCurveQ& E, const ECPoint& P, const HeightOptions& opt) {
    require_on_curve(E, P);
    if (opt.tol < 1e-12) throw InvalidArgument("tolerance below supported range");
    if (P.infinity) return 0.0;
    double C = height_difference_bound(E) / 3.0;
    int n = 0;
    double tail = C;
    while (tail >= opt.tol) {
        ++n;
        tail /= 4.0;
        if (n > opt.max_doublings)
            throw PrecisionUnreachable("needs " + std::to_string(n) +
                                       " doublings (cap " + std::to_string(opt.max_doublings) +
                                       ") for tol " + std::to_string(opt.tol));
    }
    Int b2 = E.b2(), b4 = E.b4(), b6 = E.b6(), b8 = E.b8();
    Int lambda = duplication_gcd_modulus(E);
    Int a = num(P.x), b = den(P.x);
    for (int k = 0; k < n; ++k) {
        Int a2 = a * a, b_2 = b * b;
        Int ab = a * b;
        Int na = a2 * a2 - b4 * a2 * b_2 - 2 * b6 * ab * b_2 - b8 * b_2 * b_2;
        Int nb = 4 * a2 * ab + b2 * a2 * b_2 + 2 * b4 * ab * b_2 + b6 * b_2 * b_2;
        if (nb == 0) return 0.0; // hit 2-torsion: the next double is O
        // gcd(na, nb) divides lambda, so reduce mod lambda before the gcd
        Int ga = gcd_int(abs_int(na % lambda), lambda);
        Int gb = gcd_int(abs_int(nb % lambda), lambda);
        Int g = gcd_int(ga, gb);
        a = na / g;
        b = nb / g;
        if (b < 0) { a = -a; b = -b; }
    }
    Int aa = abs_int(a);
    return std::ldexp(log_int(aa > b ? aa : b), -2 * n); // 4^-n h(2^n P)
}

double nt_pairing(const EllipticCurveQ& E, const ECPoint& P, const ECPoint& Q,
                  const HeightOptions& opt) {
    double hpq = canonical_height(E, ec_add(E, P, Q), opt);
    double hp = canonical_height(E, P, opt);
    double hq = canonical_height(E, Q, opt);
    return 0.5 * (hpq - hp - hq);
}

DegreeZeroDivisorClass DegreeZeroDivisorClass::difference(const ECPoint& P, const ECPoint& Q) {
    DegreeZeroDivisorClass d;
    d.terms = {{P, 1}, {Q, -1}};
    return d;
}

int DegreeZeroDivisorClass::total_degree() const {
    int s = 0;
    for (const auto& [p, m] : terms) s += m;
    return s;
}

ECPoint class_to_point(const EllipticCurveQ& E, const DegreeZeroDivisorClass& d) {
    if (d.total_degree() != 0)
        throw InvalidArgument("divisor class must have degree 0");
    ECPoint acc = ECPoint::O();
    for (const auto& [p, m] : d.terms) acc = ec_add(E, acc, ec_mul(E, m, p));
    return acc;
}

long intersection_number(const SurfaceClass& a, const SurfaceClass& b) {
    if (a.genus != b.genus) throw InvalidArgument("classes on different surfaces");
    long g = a.genus;
    // Gram matrix over {Delta, e x C, C x e}:
    //   Delta.Delta = 2 - 2g, Delta.(e x C) = Delta.(C x e) = 1,
    //   (e x C).(C x e) = 1, squares of the product classes vanish.
    long dd = 2 - 2 * g;
    return a.c_diag * b.c_diag * dd + (a.c_diag * b.c_vert + a.c_vert * b.c_diag) +
           (a.c_diag * b.c_horiz + a.c_horiz * b.c_diag) +
           (a.c_vert * b.c_horiz + a.c_horiz * b.c_vert);
}

SurfaceClass delta11_class(int genus) {
    SurfaceClass c;
    c.genus = genus;
    c.c_diag = 1;
    c.c_vert = -1;
    c.c_horiz = -1;
    return c;
}

long delta11_self_intersection(int genus) {
    if (genus < 0) throw InvalidArgument("negative genus");
    SurfaceClass d = delta11_class(genus);
    return intersection_number(d, d);
}

double weighted_height_relation(long deg_w1w2, const EllipticCurveQ& E,
                             const DegreeZeroDivisorClass& a1,
                             const DegreeZeroDivisorClass& a2, const HeightOptions& opt) {
    if (deg_w1w2 == 0) return 0.0;
    ECPoint P = class_to_point(E, a1);
    ECPoint Q = class_to_point(E, a2);
    return static_cast<double>(deg_w1w2) * nt_pairing(E, P, Q, opt);
}

double graded_height_ex5(const EllipticCurveQ& E, const ECPoint& p1, const ECPoint& q1,
                         const ECPoint& p2, const ECPoint& q2, const std::vector<int>& genera,
                         const HeightOptions& opt) {
    long factor = 1;
    for (int g : genera) factor *= delta11_self_intersection(g);
    if (factor == 0) return 0.0;
    auto c1 = DegreeZeroDivisorClass::difference(p1, q1);
    auto c2 = DegreeZeroDivisorClass::difference(p2, q2);
    return static_cast<double>(factor) *
           nt_pairing(E, class_to_point(E, c1), class_to_point(E, c2), opt);
}

} // namespace heightlab::nt

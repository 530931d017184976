#include "heightlab/regulator.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace heightlab::regulator {

FormProduct FormProduct::constant(const Gaussian& c) {
    if (c.is_zero()) throw ZeroElement("zero constant in a symbol entry");
    FormProduct f;
    f.scalar = c;
    return f;
}

void FormProduct::push(const LinearForm& f, long e) {
    if (e == 0) return;
    auto [sc, nf] = f.normalized();
    scalar = scalar * pow_gaussian(sc, e);
    for (auto& [g, k] : factors) {
        if (g == nf) {
            k += e;
            return;
        }
    }
    factors.emplace_back(nf, e);
}

long FormProduct::total_degree() const {
    long d = 0;
    for (const auto& [f, e] : factors) d += e;
    return d;
}

FormProduct FormProduct::operator*(const FormProduct& o) const {
    FormProduct r = *this;
    r.scalar = r.scalar * o.scalar;
    for (const auto& [f, e] : o.factors) r.push(f, e);
    return r;
}

FormProduct FormProduct::pow(long e) const {
    FormProduct r;
    r.scalar = pow_gaussian(scalar, e);
    if (e != 0)
        for (const auto& [f, k] : factors) r.factors.emplace_back(f, k * e);
    return r;
}

std::vector<std::pair<LinearForm, long>> FormProduct::divisor() const {
    std::vector<std::pair<LinearForm, long>> out;
    for (const auto& [f, e] : factors)
        if (e != 0) out.emplace_back(f, e);
    return out;
}

LineFunction FormProduct::restrict_to(const Line& line) const {
    LineFunction out = LineFunction::constant(scalar);
    for (const auto& [f, e] : factors) {
        Poly<Gaussian> r = geom::restrict_form(f, line);
        if (r.is_zero())
            throw IndeterminateRestriction("form " + f.to_string() +
                                           " vanishes identically on " + line.to_string());
        out.push(std::move(r), e);
    }
    return out;
}

std::string FormProduct::to_string() const {
    std::ostringstream os;
    os << gaussian_to_string(scalar);
    for (const auto& [f, e] : factors) os << " * (" << f.to_string() << ")^" << e;
    return os.str();
}

ZeroCycleP2 k1_boundary_check(const K1Precycle& xi) {
    ZeroCycleP2 cyc;
    for (const auto& term : xi) {
        for (const auto& [root, mult] : term.g.finite_divisor())
            cyc.add(term.line.at(root), static_cast<int>(mult));
        long inf = term.g.order_at_infinity();
        if (inf != 0) cyc.add(term.line.at_infinity(), static_cast<int>(inf));
    }
    return cyc;
}

K1Precycle tame_symbol_cycle(const SymbolPair& sp) {
    if (sp.f1.total_degree() != 0 || sp.f2.total_degree() != 0)
        throw InvalidArgument("symbol entries must have total degree 0");
    auto d1 = sp.f1.divisor();
    auto d2 = sp.f2.divisor();
    std::vector<LinearForm> lines;
    auto note = [&](const LinearForm& f) {
        for (const auto& g : lines)
            if (g == f) return;
        lines.push_back(f);
    };
    for (const auto& [f, e] : d1) note(f);
    for (const auto& [f, e] : d2) note(f);

    auto exponent_on = [](const std::vector<std::pair<LinearForm, long>>& d,
                          const LinearForm& f) {
        for (const auto& [g, e] : d)
            if (g == f) return e;
        return 0L;
    };
    auto strip = [](const FormProduct& f, const LinearForm& d) {
        FormProduct out;
        out.scalar = f.scalar;
        for (const auto& [g, e] : f.factors)
            if (!(g == d)) out.push(g, e);
        return out;
    };

    K1Precycle out;
    for (const auto& form : lines) {
        long n1 = exponent_on(d1, form);
        long n2 = exponent_on(d2, form);
        Line line = Line::from_form(form);
        FormProduct u1 = strip(sp.f1, form);
        FormProduct u2 = strip(sp.f2, form);
        LineFunction t = u1.restrict_to(line).pow(n2) * u2.restrict_to(line).pow(-n1);
        if ((n1 * n2) % 2 != 0) t.scalar = -t.scalar;
        out.push_back({line, std::move(t)});
    }
    return out;
}

namespace {

struct Moebius {
    Gaussian alpha, beta, gamma, delta;
    std::optional<Gaussian> zero; // nullopt = infinity
    std::optional<Gaussian> pole;
};

// The g of an arc must be a degree-1 map of the line's P^1 parameter.
Moebius as_moebius(const LineFunction& g) {
    std::optional<Gaussian> zero_root, pole_root;
    for (const auto& [p, e] : g.factors) {
        Gaussian root = -p.coeff(0);
        if (e == 1 && !zero_root) zero_root = root;
        else if (e == -1 && !pole_root) pole_root = root;
        else
            throw NotMoebius("term of degree > 1 on its line: " + g.to_string());
    }
    Moebius m;
    const Gaussian& s = g.scalar;
    if (zero_root && pole_root) {
        m = {s, -(s * *zero_root), Gaussian(1), -*pole_root, zero_root, pole_root};
    } else if (zero_root) {
        m = {s, -(s * *zero_root), Gaussian(0), Gaussian(1), zero_root, std::nullopt};
    } else if (pole_root) {
        m = {Gaussian(0), s, Gaussian(1), -*pole_root, std::nullopt, pole_root};
    } else {
        throw NotMoebius("constant term has no arc representation: " + g.to_string());
    }
    return m;
}

P2Point point_at(const Line& line, const std::optional<Gaussian>& tau) {
    return tau ? line.at(*tau) : line.at_infinity();
}

// Numeric shape of a factored function composed with the arc's v-chart:
// F(v) = c * prod (v - sigma_k)^{e_k}, sum e_k = 0.
struct VChartFunction {
    double log_abs_c = 0.0;
    std::vector<std::pair<std::complex<double>, double>> roots; // (sigma, exponent)

    double log_abs(double v) const {
        double s = log_abs_c;
        for (const auto& [sig, e] : roots) s += e * std::log(std::abs(v - sig));
        return s;
    }
    double im_dlog(double v) const {
        double s = 0.0;
        for (const auto& [sig, e] : roots) s += e * std::imag(1.0 / (v - sig));
        return s;
    }
};

// Compose the restriction F(tau) with tau(v) = (delta*v - beta)/(-gamma*v + alpha).
// Each monic factor (tau + c) becomes ((delta + c*(-gamma)) v + (-beta + c*alpha))
// over the common denominator (-gamma*v + alpha); the leftover power of that
// denominator carries the function's order at the chart's infinity parameter.
struct ExactVChart {
    Gaussian scalar;
    std::vector<std::pair<Gaussian, long>> roots; // (sigma, exponent), v - sigma factors

    void push_root(const Gaussian& sigma, long e) {
        if (e == 0) return;
        for (auto& [s, k] : roots) {
            if (s == sigma) {
                k += e;
                return;
            }
        }
        roots.emplace_back(sigma, e);
    }
};

ExactVChart compose_with_chart(const LineFunction& f, const Arc& arc) {
    ExactVChart out;
    out.scalar = f.scalar;
    long chart_denominator_power = 0;
    for (const auto& [p, e] : f.factors) {
        Gaussian c0 = p.coeff(0); // tau + c0
        Gaussian lin1 = arc.delta - c0 * arc.gamma;
        Gaussian lin0 = c0 * arc.alpha - arc.beta;
        chart_denominator_power += e;
        if (lin1.is_zero()) {
            if (lin0.is_zero())
                throw IndeterminateRestriction("degenerate arc chart");
            out.scalar = out.scalar * pow_gaussian(lin0, e);
            continue;
        }
        out.scalar = out.scalar * pow_gaussian(lin1, e);
        out.push_root(-(lin0 / lin1), e);
    }
    if (chart_denominator_power != 0) {
        // (-gamma v + alpha)^(-power): a zero/pole of f at tau = infinity
        if (arc.gamma.is_zero()) {
            out.scalar = out.scalar * pow_gaussian(arc.alpha, -chart_denominator_power);
        } else {
            out.scalar =
                out.scalar * pow_gaussian(-arc.gamma, -chart_denominator_power);
            out.push_root(arc.alpha / arc.gamma, -chart_denominator_power);
        }
    }
    std::vector<std::pair<Gaussian, long>> kept;
    for (auto& [s, k] : out.roots)
        if (k != 0) kept.emplace_back(s, k);
    out.roots = std::move(kept);
    return out;
}

double ray_distance(const std::complex<double>& sigma) {
    // distance from sigma to the integration path (-infinity, 0]
    if (sigma.real() <= 0.0) return std::abs(sigma.imag());
    return std::abs(sigma);
}

VChartFunction to_numeric_guarded(const ExactVChart& ex, double guard, const Arc& arc) {
    VChartFunction out;
    out.log_abs_c = 0.5 * std::log(to_double(ex.scalar.norm()));
    for (const auto& [sig, e] : ex.roots) {
        std::complex<double> s = sig.to_complex();
        if (ray_distance(s) < guard)
            throw SingularityOnPath("zero/pole at v = " + gaussian_to_string(sig) +
                                    " within guard distance of an arc on " +
                                    arc.line.to_string());
        out.roots.emplace_back(s, static_cast<double>(e));
    }
    return out;
}

double adaptive_integral(const std::function<double(double)>& f, double tol, int max_depth,
                         const char* what) {
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0, l1 = 0.0;
    double val = gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0,
                                                      static_cast<unsigned>(max_depth), tol,
                                                      &error, &l1);
    if (error > tol * std::max(l1, 1.0) * 16.0)
        throw NoConvergence(std::string(what) + ": quadrature error estimate " +
                            std::to_string(error) + " above tolerance at subdivision cap");
    return val;
}

double orientation_sign(Orientation o) { return o == Orientation::ccw ? -1.0 : 1.0; }

} // namespace

Contour build_gamma(const K1Precycle& xi) {
    Contour c;
    for (const auto& term : xi) {
        if (term.g.is_constant()) {
            // empty preimage unless the constant lies on the negative real ray
            const Gaussian& s = term.g.scalar;
            if (s.is_real() && s.re <= 0)
                throw NotMoebius("constant term in [-inf,0]: whole-line preimage");
            continue;
        }
        Moebius m = as_moebius(term.g);
        Arc a{term.line, m.alpha, m.beta, m.gamma, m.delta,
              point_at(term.line, m.zero), point_at(term.line, m.pole)};
        c.arcs.push_back(std::move(a));
    }
    std::map<P2Point, int> balance;
    for (const auto& a : c.arcs) {
        balance[a.start] += 1;
        balance[a.end] -= 1;
    }
    c.closed = true;
    for (const auto& [p, m] : balance) c.closed = c.closed && (m == 0);
    if (!c.closed && k1_boundary_check(xi).empty())
        throw OpenContour("endpoints fail to chain despite empty boundary");
    return c;
}

double integrate_darg(const FormProduct& f, const Arc& arc, const QuadratureOptions& opt) {
    if (f.total_degree() != 0)
        throw InvalidArgument("d arg integrand must have total degree 0");
    LineFunction rest = f.restrict_to(arc.line);
    VChartFunction F = to_numeric_guarded(compose_with_chart(rest, arc), opt.guard, arc);
    auto integrand = [&F](double u) {
        double v = -u / (1.0 - u);
        double dv = -1.0 / ((1.0 - u) * (1.0 - u));
        return F.im_dlog(v) * dv;
    };
    double val = adaptive_integral(integrand, opt.tol, opt.max_depth, "integrate_darg");
    return orientation_sign(opt.orientation) * val;
}

long winding_number(const FormProduct& f, const Contour& gamma, const QuadratureOptions& opt) {
    if (!gamma.closed) throw OpenContour("winding number needs a closed contour");
    double total = 0.0;
    for (const auto& arc : gamma.arcs) total += integrate_darg(f, arc, opt);
    double w = total / (2.0 * M_PI);
    double rounded = std::round(w);
    if (std::abs(w - rounded) >= 0.01)
        throw RoundingAmbiguous("winding residual " + std::to_string(std::abs(w - rounded)) +
                                " >= 0.01");
    return static_cast<long>(rounded);
}

namespace {

// Extended value of a line function at a parameter: finite Gaussian, or
// nullopt for infinity (pole).
std::optional<Gaussian> extended_value(const LineFunction& g, const std::optional<Gaussian>& tau) {
    long ord = tau ? g.order_at(*tau) : g.order_at_infinity();
    if (ord > 0) return Gaussian(0);
    if (ord < 0) return std::nullopt; // = infinity
    if (tau) return g.value_at(*tau);
    return g.value_at_infinity();
}

bool values_meet_in_box(const std::optional<Gaussian>& a, const std::optional<Gaussian>& b) {
    // equality in P^1, excluding the removed point 1 of the box coordinate
    if (!a && !b) return true; // both infinity
    if (!a || !b) return false;
    if (!(*a == *b)) return false;
    return !(*a == Gaussian(1));
}

// num/den of a factored line function, expanded (degrees are tiny here).
std::pair<Poly<Gaussian>, Poly<Gaussian>> expand(const LineFunction& g) {
    Poly<Gaussian> num = Poly<Gaussian>::constant(g.scalar);
    Poly<Gaussian> den = Poly<Gaussian>::one();
    for (const auto& [p, e] : g.factors) {
        for (long k = 0; k < (e > 0 ? e : -e); ++k) {
            if (e > 0) num = num * p;
            else den = den * p;
        }
    }
    return {num, den};
}

void check_same_line_disjoint(const K1Term& t1, const K1Term& t2) {
    auto [n1, d1] = expand(t1.g);
    auto [n2, d2] = expand(t2.g);
    // common poles are common values (= infinity), which lies inside the box
    if (gcd(d1, d2).degree() > 0)
        throw GeneralPositionFailure("shared pole on " + t1.line.to_string());
    Poly<Gaussian> h = n1 * d2 - n2 * d1;
    if (h.is_zero())
        throw GeneralPositionFailure("identical graphs on " + t1.line.to_string());
    // roots of h where the common value is 1 are outside the box; saturate
    // them away and see whether anything is left
    Poly<Gaussian> ones = n1 - d1; // g1 = 1 locus (numerator)
    Poly<Gaussian> rem = h;
    if (!ones.is_zero()) {
        while (true) {
            Poly<Gaussian> g = gcd(rem, ones);
            if (g.degree() == 0) break;
            rem = div_exact(rem, g);
        }
    }
    if (rem.degree() > 0)
        throw GeneralPositionFailure("graphs meet over " + t1.line.to_string());
    // the parameter at infinity is not covered by h's roots
    if (values_meet_in_box(extended_value(t1.g, std::nullopt), extended_value(t2.g, std::nullopt)))
        throw GeneralPositionFailure("graphs meet at infinity on " + t1.line.to_string());
}

} // namespace

void require_general_position(const K1Precycle& xi1, const K1Precycle& xi2) {
    for (const auto& t1 : xi1) {
        for (const auto& t2 : xi2) {
            if (t1.line == t2.line) {
                check_same_line_disjoint(t1, t2);
                continue;
            }
            P2Point x = geom::meet(t1.line, t2.line);
            auto v1 = extended_value(t1.g, t1.line.parameter_of(x));
            auto v2 = extended_value(t2.g, t2.line.parameter_of(x));
            if (values_meet_in_box(v1, v2))
                throw GeneralPositionFailure("supports meet at " + x.to_string());
        }
    }
}

double pair_m1_real(const K1Precycle& xi, const SymbolPair& sp, const QuadratureOptions& opt) {
    if (!k1_boundary_check(xi).empty())
        throw InvalidArgument("xi1 is not a cycle: nonzero divisor sum");
    K1Precycle xi2 = tame_symbol_cycle(sp);
    require_general_position(xi, xi2);
    Contour gamma = build_gamma(xi);

    double total = 0.0;
    for (const auto& arc : gamma.arcs) {
        LineFunction r1 = sp.f1.restrict_to(arc.line);
        LineFunction r2 = sp.f2.restrict_to(arc.line);
        VChartFunction F1 = to_numeric_guarded(compose_with_chart(r1, arc), opt.guard, arc);
        VChartFunction F2 = to_numeric_guarded(compose_with_chart(r2, arc), opt.guard, arc);
        auto integrand = [&F1, &F2](double u) {
            double v = -u / (1.0 - u);
            double dv = -1.0 / ((1.0 - u) * (1.0 - u));
            return (F1.log_abs(v) * F2.im_dlog(v) - F2.log_abs(v) * F1.im_dlog(v)) * dv;
        };
        total += adaptive_integral(integrand, opt.tol, opt.max_depth, "pair_m1_real");
    }
    return -2.0 * M_PI * orientation_sign(opt.orientation) * total;
}

CurrentIdentityReport current_identity_check_m1(const K1Precycle& xi) {
    CurrentIdentityReport rep;
    for (const auto& term : xi) {
        if (term.g.is_constant()) continue;
        Moebius m = as_moebius(term.g);
        rep.endpoint_cycle.add(point_at(term.line, m.zero), 1);
        rep.endpoint_cycle.add(point_at(term.line, m.pole), -1);
    }
    rep.boundary_cycle = k1_boundary_check(xi);
    rep.equal = rep.endpoint_cycle == rep.boundary_cycle;
    return rep;
}

} // namespace heightlab::regulator

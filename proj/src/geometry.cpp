#include "heightlab/geometry.hpp"

#include <sstream>

namespace heightlab::geom {

P2Point P2Point::of(Gaussian z0, Gaussian z1, Gaussian z2) {
    std::array<Gaussian, 3> z{std::move(z0), std::move(z1), std::move(z2)};
    for (auto& c : z) {
        if (!c.is_zero()) {
            Gaussian inv = c.inverse();
            for (auto& x : z) x = x * inv;
            return P2Point{z};
        }
    }
    throw InvalidArgument("P2 point with all coordinates zero");
}

std::string P2Point::to_string() const {
    return "[" + gaussian_to_string(z[0]) + " : " + gaussian_to_string(z[1]) + " : " +
           gaussian_to_string(z[2]) + "]";
}

std::pair<Gaussian, LinearForm> LinearForm::normalized() const {
    if (is_zero()) throw InvalidArgument("normalizing the zero form");
    for (const auto& c : a) {
        if (!c.is_zero()) {
            Gaussian inv = c.inverse();
            return {c, LinearForm(a[0] * inv, a[1] * inv, a[2] * inv)};
        }
    }
    throw InvalidArgument("unreachable");
}

std::string LinearForm::to_string() const {
    static const char* names[3] = {"z0", "z1", "z2"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (a[i].is_zero()) continue;
        std::string cs = gaussian_to_string(a[i]);
        if (s.empty()) {
            if (cs == "1") s = names[i];
            else if (cs == "-1") s = std::string("-") + names[i];
            else s = (a[i].is_real() ? cs : "(" + cs + ")") + "*" + names[i];
        } else {
            bool neg = a[i].is_real() && a[i].re < 0;
            Gaussian c = neg ? -a[i] : a[i];
            std::string ps = gaussian_to_string(c);
            s += neg ? " - " : " + ";
            if (ps == "1") s += names[i];
            else s += (c.is_real() ? ps : "(" + ps + ")") + std::string("*") + names[i];
        }
    }
    return s.empty() ? "0" : s;
}

Line Line::from_form(const LinearForm& f) {
    auto [sc, nf] = f.normalized();
    (void)sc;
    // Two independent solutions of a*z0 + b*z1 + c*z2 = 0, chosen from the
    // cross products with the coordinate axes; deterministic in the form.
    const Gaussian& a = nf.a[0];
    const Gaussian& b = nf.a[1];
    const Gaussian& c = nf.a[2];
    std::array<std::array<Gaussian, 3>, 3> cands = {{
        {Gaussian(0), c, -b},   // form x e0
        {-c, Gaussian(0), a},   // form x e1
        {b, -a, Gaussian(0)},   // form x e2
    }};
    std::vector<std::array<Gaussian, 3>> pts;
    for (auto& v : cands) {
        if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
        // normalize first nonzero coordinate to 1 for determinism
        for (int i = 0; i < 3; ++i) {
            if (!v[i].is_zero()) {
                Gaussian inv = v[i].inverse();
                for (auto& x : v) x = x * inv;
                break;
            }
        }
        bool dup = false;
        for (auto& w : pts) dup = dup || (w == v);
        if (!dup) pts.push_back(v);
        if (pts.size() == 2) break;
    }
    if (pts.size() < 2) throw InvalidArgument("degenerate line form");
    Line L;
    L.form = nf;
    L.dir = pts[0];
    L.base = pts[1];
    return L;
}

P2Point Line::at(const Gaussian& tau) const {
    return P2Point::of(base[0] + tau * dir[0], base[1] + tau * dir[1],
                       base[2] + tau * dir[2]);
}

P2Point Line::at_infinity() const { return P2Point::of(dir[0], dir[1], dir[2]); }

std::optional<Gaussian> Line::parameter_of(const P2Point& p) const {
    // Solve p ~ base + tau*dir: tau = (p x base) / (dir x p) on a nonzero
    // coordinate pair; use determinants of 2x2 minors.
    // p = s*(base + tau*dir): for indices (i,j):
    //   p_i*(base_j + tau*dir_j) - p_j*(base_i + tau*dir_i) = 0
    // => tau * (p_i*dir_j - p_j*dir_i) = p_j*base_i - p_i*base_j
    Gaussian A(0), B(0);
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i) {
        for (int j = i + 1; j < 3 && !found; ++j) {
            Gaussian coef = p.z[i] * dir[j] - p.z[j] * dir[i];
            Gaussian rhs = p.z[j] * base[i] - p.z[i] * base[j];
            if (!coef.is_zero() || !rhs.is_zero()) {
                A = coef;
                B = rhs;
                found = true;
            }
        }
    }
    if (!found) throw InvalidArgument("parameter_of: degenerate data");
    if (A.is_zero()) return std::nullopt; // the point at infinity of the chart
    return B / A;
}

P2Point meet(const Line& a, const Line& b) {
    const auto& u = a.form.a;
    const auto& v = b.form.a;
    Gaussian x = u[1] * v[2] - u[2] * v[1];
    Gaussian y = u[2] * v[0] - u[0] * v[2];
    Gaussian z = u[0] * v[1] - u[1] * v[0];
    if (x.is_zero() && y.is_zero() && z.is_zero())
        throw InvalidArgument("meet of identical lines");
    return P2Point::of(x, y, z);
}

Poly<Gaussian> restrict_form(const LinearForm& f, const Line& line) {
    Gaussian c1 = f.a[0] * line.dir[0] + f.a[1] * line.dir[1] + f.a[2] * line.dir[2];
    Gaussian c0 = f.a[0] * line.base[0] + f.a[1] * line.base[1] + f.a[2] * line.base[2];
    return Poly<Gaussian>({c0, c1});
}

LineFunction LineFunction::constant(const Gaussian& c) {
    if (c.is_zero()) throw ZeroElement("zero line function");
    LineFunction f;
    f.scalar = c;
    return f;
}

LineFunction LineFunction::ratio(Poly<Gaussian> num, Poly<Gaussian> den) {
    LineFunction f;
    f.push(std::move(num), 1);
    f.push(std::move(den), -1);
    return f;
}

void LineFunction::push(Poly<Gaussian> p, long e) {
    if (p.is_zero()) throw ZeroElement("zero factor in a line function");
    if (e == 0) return;
    if (p.degree() == 0) {
        scalar = scalar * pow_gaussian(p.coeff(0), e);
        return;
    }
    if (p.degree() > 1) throw InvalidArgument("line-function factors must have degree <= 1");
    // normalize to monic, fold the leading coefficient into the scalar
    Gaussian l = p.lc();
    scalar = scalar * pow_gaussian(l, e);
    Poly<Gaussian> m = p * l.inverse();
    for (auto& [q, k] : factors) {
        if (q == m) {
            k += e;
            return;
        }
    }
    factors.emplace_back(std::move(m), e);
}

long LineFunction::numerator_degree() const {
    long d = 0;
    for (const auto& [p, e] : factors)
        if (e > 0) d += e;
    return d;
}

long LineFunction::denominator_degree() const {
    long d = 0;
    for (const auto& [p, e] : factors)
        if (e < 0) d -= e;
    return d;
}

LineFunction LineFunction::operator*(const LineFunction& o) const {
    LineFunction f = *this;
    f.scalar = f.scalar * o.scalar;
    for (const auto& [p, e] : o.factors) f.push(p, e);
    // drop cancelled factors
    std::vector<std::pair<Poly<Gaussian>, long>> kept;
    for (auto& [p, e] : f.factors)
        if (e != 0) kept.emplace_back(p, e);
    f.factors = std::move(kept);
    return f;
}

LineFunction LineFunction::pow(long e) const {
    LineFunction f;
    if (e == 0) return constant(Gaussian(1));
    f.scalar = pow_gaussian(scalar, e);
    for (const auto& [p, k] : factors) f.factors.emplace_back(p, k * e);
    return f;
}

std::optional<Gaussian> LineFunction::value_at(const Gaussian& tau) const {
    Gaussian v = scalar;
    for (const auto& [p, e] : factors) {
        Gaussian x = p.eval(tau);
        if (x.is_zero()) return std::nullopt;
        v = v * pow_gaussian(x, e);
    }
    return v;
}

std::optional<Gaussian> LineFunction::value_at_infinity() const {
    if (order_at_infinity() != 0) return std::nullopt;
    Gaussian v = scalar;
    for (const auto& [p, e] : factors) v = v * pow_gaussian(p.lc(), e);
    return v;
}

long LineFunction::order_at(const Gaussian& tau) const {
    long ord = 0;
    for (const auto& [p, e] : factors)
        if (p.eval(tau).is_zero()) ord += e;
    return ord;
}

long LineFunction::order_at_infinity() const {
    long ord = 0;
    for (const auto& [p, e] : factors) ord -= e; // each monic linear factor has a pole of order e
    return ord;
}

std::vector<std::pair<Gaussian, long>> LineFunction::finite_divisor() const {
    std::vector<std::pair<Gaussian, long>> out;
    for (const auto& [p, e] : factors) {
        Gaussian root = -p.coeff(0); // monic
        bool merged = false;
        for (auto& [r, m] : out) {
            if (r == root) {
                m += e;
                merged = true;
                break;
            }
        }
        if (!merged) out.emplace_back(root, e);
    }
    std::vector<std::pair<Gaussian, long>> kept;
    for (auto& [r, m] : out)
        if (m != 0) kept.emplace_back(r, m);
    return kept;
}

std::string LineFunction::to_string() const {
    std::ostringstream os;
    os << gaussian_to_string(scalar);
    for (const auto& [p, e] : factors)
        os << " * (" << poly_to_string(p, "tau") << ")^" << e;
    return os.str();
}

void ZeroCycleP2::add(const P2Point& p, int mult) {
    if (mult == 0) return;
    auto it = points.find(p);
    if (it == points.end()) {
        points.emplace(p, mult);
    } else {
        it->second += mult;
        if (it->second == 0) points.erase(it);
    }
}

std::string ZeroCycleP2::to_string() const {
    if (points.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, m] : points) {
        if (!first) s += " ";
        if (m >= 0 && !first) s += "+ ";
        if (m < 0) s += "- ";
        int am = m < 0 ? -m : m;
        if (am != 1) s += std::to_string(am) + "*";
        s += p.to_string();
        first = false;
    }
    return s;
}

} // namespace heightlab::geom

#include "heightlab/polynomial.hpp"

namespace heightlab {

Int denominator_lcm(const Poly<Rat>& p) {
    Int d = 1;
    for (const auto& c : p.coeffs()) d = lcm_int(d, den(c));
    return d;
}

std::pair<Rat, Poly<Rat>> primitive_part(const Poly<Rat>& p) {
    if (p.is_zero()) return {Rat(0), p};
    Int d = denominator_lcm(p);
    Int g = 0;
    for (const auto& c : p.coeffs()) g = gcd_int(g, num(c * d));
    if (p.lc() < 0) g = -g;
    Rat content(g, d);
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c / content);
    return {content, Poly<Rat>(std::move(v))};
}

namespace {

template <class K>
std::string poly_to_string_impl(const Poly<K>& p, const std::string& var,
                                std::string (*coeff_str)(const K&),
                                bool (*is_one)(const K&), bool (*is_neg_one)(const K&)) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        K c = p.coeff(static_cast<size_t>(i));
        if (c == K(0)) continue;
        std::string cs = coeff_str(c);
        bool leading = s.empty();
        if (!leading) {
            if (!cs.empty() && cs[0] == '-') {
                s += " - ";
                cs = cs.substr(1);
            } else {
                s += " + ";
            }
        }
        if (i == 0) {
            s += leading ? cs : cs;
        } else {
            std::string mono = var + (i == 1 ? "" : "^" + std::to_string(i));
            if (is_one(c)) s += mono;
            else if (is_neg_one(c) && leading) s += "-" + mono;
            else if (is_neg_one(c)) s += mono;
            else {
                if (!leading && !cs.empty() && cs[0] == '-') cs = cs.substr(1);
                s += cs + "*" + mono;
            }
        }
    }
    return s;
}

std::string rat_coeff(const Rat& c) { return rat_to_string(c); }
bool rat_is_one(const Rat& c) { return c == 1; }
bool rat_is_neg_one(const Rat& c) { return c == -1; }

std::string gauss_coeff(const Gaussian& c) {
    if (c.im == 0) return rat_to_string(c.re);
    return "(" + gaussian_to_string(c) + ")";
}
bool gauss_is_one(const Gaussian& c) { return c == Gaussian(1); }
bool gauss_is_neg_one(const Gaussian& c) { return c == Gaussian(-1); }

} // namespace

std::string poly_to_string(const Poly<Rat>& p, const std::string& var) {
    return poly_to_string_impl<Rat>(p, var, rat_coeff, rat_is_one, rat_is_neg_one);
}

std::string poly_to_string(const Poly<Gaussian>& p, const std::string& var) {
    return poly_to_string_impl<Gaussian>(p, var, gauss_coeff, gauss_is_one, gauss_is_neg_one);
}

} // namespace heightlab

#include "heightlab/presets.hpp"

namespace heightlab::presets {

using geom::LinearForm;
using geom::Line;
using regulator::FormProduct;
using regulator::K1Precycle;
using regulator::K1Term;
using regulator::SymbolPair;

K1Term k1_term_from_forms(const LinearForm& num, const LinearForm& den,
                          const LinearForm& line) {
    Line L = Line::from_form(line);
    Poly<Gaussian> rn = geom::restrict_form(num, L);
    Poly<Gaussian> rd = geom::restrict_form(den, L);
    if (rn.is_zero() || rd.is_zero())
        throw IndeterminateRestriction("form vanishes identically on " + L.to_string());
    return {L, geom::LineFunction::ratio(std::move(rn), std::move(rd))};
}

K1Precycle triangle_precycle() {
    LinearForm z0(Gaussian(1), Gaussian(0), Gaussian(0));
    LinearForm z1(Gaussian(0), Gaussian(1), Gaussian(0));
    LinearForm z2(Gaussian(0), Gaussian(0), Gaussian(1));
    LinearForm m_z1(Gaussian(0), Gaussian(-1), Gaussian(0));
    LinearForm m_z2(Gaussian(0), Gaussian(0), Gaussian(-1));
    LinearForm m_z0(Gaussian(-1), Gaussian(0), Gaussian(0));
    K1Precycle xi;
    xi.push_back(k1_term_from_forms(m_z1, z2, z0)); // -z1/z2 on V(z0)
    xi.push_back(k1_term_from_forms(m_z2, z0, z1)); // -z2/z0 on V(z1)
    xi.push_back(k1_term_from_forms(m_z0, z1, z2)); // -z0/z1 on V(z2)
    return xi;
}

FormProduct simplex_marker_function(const Gaussian& p) {
    Gaussian i(Rat(0), Rat(1));
    LinearForm numerator(Gaussian(1) - p, i - p, -p);
    LinearForm L(Gaussian(1), Gaussian(1), Gaussian(1));
    FormProduct f;
    f.push(numerator, 1);
    f.push(L, -1);
    return f;
}

SymbolPair simplex_symbol_pair(const Gaussian& f1, const Gaussian& p) {
    if (f1.is_zero()) throw ZeroElement("f1 must be nonzero");
    SymbolPair sp;
    sp.f1 = FormProduct::constant(f1);
    sp.f2 = simplex_marker_function(p);
    return sp;
}

spreads::PolyExpr spread_example_affine() {
    return spreads::parse_poly("pi*y^2 + (sqrt(pi)+4)*x^3 + e*x");
}

std::vector<spreads::PolyExpr> spread_example_projective_system() {
    // The projective cubic with pi presented through sqrt(pi)^2, plus the
    // quintic cut defining the cycle; one shared substitution map.
    return {
        spreads::parse_poly(
            "1/2*e*z0*z2^2 - sqrt(pi)^2*z1^3 + sqrt(pi)*z1*z0^2 + i*sqrt(3)*z0^3"),
        spreads::parse_poly("sqrt(5)*z0^4*z1 + i*z2^5"),
    };
}

} // namespace heightlab::presets

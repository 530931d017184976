#ifndef HEIGHTLAB_PRESETS_HPP
#define HEIGHTLAB_PRESETS_HPP

#include "heightlab/regulator.hpp"
#include "heightlab/spreads.hpp"

namespace heightlab::presets {

// The coordinate-line K1 cycle on P^2:
//   (-z1/z2 on V(z0)) + (-z2/z0 on V(z1)) + (-z0/z1 on V(z2)),
// whose contour is the boundary of the real 2-simplex.
regulator::K1Precycle triangle_precycle();

// f2 = (z0 + i z1 - p L)/L with L = z0 + z1 + z2, vanishing at w = p in the
// w = t0 + i t1 chart of the simplex plane.
regulator::FormProduct simplex_marker_function(const Gaussian& p);

// Symbol pair {f1, f2} with constant f1.
regulator::SymbolPair simplex_symbol_pair(const Gaussian& f1, const Gaussian& p);

// K1 term (g restricted to the line) from a ratio of two linear forms.
regulator::K1Term k1_term_from_forms(const regulator::LinearForm& num, const regulator::LinearForm& den,
                               const regulator::LinearForm& line);

// Spread presets: the cuspidal-looking affine cubic with pi, sqrt(pi), e
// coefficients, and the projective cubic over Q(sqrt(pi), e, i, sqrt3, sqrt5)
// together with its hyperplane-cut cycle.
spreads::PolyExpr spread_example_affine();
std::vector<spreads::PolyExpr> spread_example_projective_system();

} // namespace heightlab::presets

#endif

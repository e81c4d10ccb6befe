#ifndef MAPENUM_PARTIAL_FRACTIONS_HPP
#define MAPENUM_PARTIAL_FRACTIONS_HPP

#include "mapenum/factored_rat.hpp"

#include <vector>

namespace mapenum {

/// coefficient / (1 - k t)^exponent
struct PoleTerm {
    LinFactor factor;
    unsigned exponent = 1;
    Rat coefficient;
    friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

/// f = poly_part + sum of pole terms. Every exponent 1..e of every
/// denominator factor gets an entry, zeros included, so the simple-pole
/// coefficients are always inspectable.
struct PFDecomp {
    Poly poly_part;
    std::vector<PoleTerm> pole_terms;
};

/// Partial fractions of f, which must have t_power >= 0 and at most two
/// distinct denominator factors.
///
/// Principal parts come from the Taylor expansion of (1 - k t)^e f at the
/// pole t = 1/k, computed in the local variable u = 1 - k t; the polynomial
/// part is the Euclidean quotient of the numerator by the denominator.
PFDecomp partial_fractions(const FactoredRat& f);

/// Sums the decomposition back over the common denominator.
FactoredRat recombine(const PFDecomp& d);

/// Antiderivative of the decomposed function that vanishes at t = 0.
///
/// Term by term: c/(1 - k t)^j integrates to (c/(k (j-1))) / (1 - k t)^{j-1};
/// the constant is minus the sum of those terms at t = 0. A nonzero
/// exponent-1 coefficient would produce a logarithm and raises SimplePole.
FactoredRat pf_integrate(const PFDecomp& d);

} // namespace mapenum

#endif // MAPENUM_PARTIAL_FRACTIONS_HPP

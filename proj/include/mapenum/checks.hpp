#ifndef MAPENUM_CHECKS_HPP
#define MAPENUM_CHECKS_HPP

#include "mapenum/genus.hpp"

namespace mapenum {

// Symbolic identities the computed solutions must satisfy. These are
// transcribed independently of ModelSpec so a typo in one place cannot hide
// behind the same typo in the other.

/// LHS - RHS of the first-order ODE in t that links C_g to lower genera.
///
/// Hypermaps:
///   t(1-t)^2(1-2t) C_g' + (1-t)(1-2t+4t^2) C_g
///     = t^3(1-2t)^3 (D C_{g-1} + (1-4t)^-2 sum (4(1-4t)C_i + 6t(1-2t)C_i') C_{g-i}')
/// Maps:
///   t(1-2t)(1-3t) C_g' + (1-4t+6t^2) C_g
///     = t^2(1-3t)^2 (D C_{g-1} + 3 sum (C_i + w C_i')(C_{g-i} + w C_{g-i}')),
///   w = 2t(1-3t)/(1-6t).
/// Needs g >= 1 and genera 0..g in the table.
FactoredRat ode_residual(const GenusTable& table, unsigned g);

/// d/dt(F C_g) - mu * LHS(C_g), with (F, mu) = (t(1-t)^3/(1-2t)^2, (1-t)/(1-2t)^3)
/// for hypermaps and (t(1-2t)/(1-3t), (1-3t)^-2) for maps.
FactoredRat integrating_factor_residual(ModelKind kind, const FactoredRat& c_of_t);

/// The third-order operators written out directly, for cross-checking
/// ModelSpec::operator_coeffs.
FactoredRat reference_operator(ModelKind kind, const FactoredRat& f);

} // namespace mapenum

#endif // MAPENUM_CHECKS_HPP

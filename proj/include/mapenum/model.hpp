#ifndef MAPENUM_MODEL_HPP
#define MAPENUM_MODEL_HPP

#include "mapenum/factored_rat.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <utility>

namespace mapenum {

enum class ModelKind { Hypermap, Map };

std::string_view to_string(ModelKind kind) noexcept;
std::optional<ModelKind> parse_model_kind(std::string_view name) noexcept;

/// f -> coeff_value * f + coeff_derivative * f'
struct FirstOrderForm {
    FactoredRat coeff_value;
    FactoredRat coeff_derivative;
};

/// Everything that distinguishes the hypermap recursion from the map one.
/// Both models run through the same engine code; the differences are data.
///
/// With s = t(1 - a t), the genus-g function is recovered as
///
///   C_g = prefactor * integral_0^t outer * ( D C_{g-1}
///                 + scale * sum_{i=1}^{g-1} left(C_i) * right(C_{g-i}) )
///
/// where D = sum_n operator_coeffs[n] d^n/dt^n.
struct ModelSpec {
    ModelKind kind;
    long subst_coeff;
    std::array<LinFactor, 2> denom_factors;

    std::array<FactoredRat, 4> operator_coeffs;
    FactoredRat outer;
    FactoredRat scale;
    FirstOrderForm left;
    FirstOrderForm right;
    FactoredRat prefactor;
    /// R_g -> P_g
    FactoredRat polynomial_multiplier;

    /// Exponents of denom_factors in C_g for g >= 1.
    std::pair<long, long> denom_exponents(unsigned g) const;
    /// Exponents that clear the antiderivative down to R_g, g >= 2.
    std::pair<long, long> antiderivative_exponents(unsigned g) const;
    /// Inclusive support of P_g, g >= 1.
    std::pair<long, long> poly_degree_bounds(unsigned g) const;
    /// Inclusive support of R_g, g >= 2.
    std::pair<long, long> antiderivative_degree_bounds(unsigned g) const;

    /// Closed forms of C_0 and C_1 in the t variable.
    FactoredRat closed_form(unsigned g) const;

    /// Whether C_g(0) = 0 is required for this genus.
    bool anchored_at_zero(unsigned g) const { return kind == ModelKind::Hypermap || g >= 1; }
};

const ModelSpec& hypermap_model();
const ModelSpec& map_model();
const ModelSpec& model_for(ModelKind kind);

} // namespace mapenum

#endif // MAPENUM_MODEL_HPP

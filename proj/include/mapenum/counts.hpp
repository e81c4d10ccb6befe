#ifndef MAPENUM_COUNTS_HPP
#define MAPENUM_COUNTS_HPP

#include "mapenum/genus.hpp"

#include <span>
#include <string>
#include <vector>

namespace mapenum {

/// Rooted counts of one genus: counts[n] is the number of rooted hypermaps
/// with n darts (or maps with n edges).
struct CountTable {
    ModelKind kind = ModelKind::Hypermap;
    unsigned genus = 0;
    std::vector<BigInt> counts;

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Compositional inverse t(s) of s = t(1 - a t), truncated at s^order.
/// coeffs[0] = 0, coeffs[1] = 1.
struct ReversionSeries {
    long subst_coeff = 0;
    std::size_t order = 0;
    std::vector<Rat> coeffs;
};

ReversionSeries revert(long subst_coeff, std::size_t order);

/// sum_j series[j] * t(s)^j, truncated at s^order.
std::vector<Rat> compose(std::span<const Rat> series, const ReversionSeries& rev, std::size_t order);

/// Counts c_{g,0..max_n} from the rational solution by expanding in t and
/// substituting t(s). Throws NonIntegerCount / NegativeCount /
/// InvariantViolation (wrong first nonzero index).
CountTable counts_from_solution(const ModelSpec& model, const GenusSolution& sol, const ReversionSeries& rev,
                                std::size_t max_n);

/// Counts for genus g straight from the coefficient recursion.
/// `lower` holds genera 0..g-1 of the same model, each to at least max_n.
CountTable counts_by_recursion(ModelKind kind, unsigned g, std::size_t max_n, std::span<const CountTable> lower);

/// Genera 0..max_genus by recursion.
std::vector<CountTable> counts_by_recursion_all(ModelKind kind, unsigned max_genus, std::size_t max_n);

/// Indices n past the first nonzero one where counts[n] < counts[n-1].
/// Observed rather than proven, so callers report instead of failing.
std::vector<std::size_t> monotonicity_violations(const CountTable& table);

/// Index of the first nonzero count required by the series support.
std::size_t first_nonzero_index(ModelKind kind, unsigned g);

} // namespace mapenum

#endif // MAPENUM_COUNTS_HPP

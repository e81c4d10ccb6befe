#ifndef MAPENUM_GENUS_HPP
#define MAPENUM_GENUS_HPP

#include "mapenum/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mapenum {

struct GenusSolution {
    unsigned genus = 0;
    /// C_g(t(1 - a t)) in canonical form.
    FactoredRat c_of_t;
    /// P_g for g >= 1, i.e. c_of_t times the standard denominator F1^e1 F2^e2. Absent
    /// for g = 0, whose denominator is not of the (F1, F2) shape.
    std::optional<Poly> polynomial;

    friend bool operator==(const GenusSolution&, const GenusSolution&) = default;
};

/// Solutions for g = 0..G of one model, contiguous from genus 0.
///
/// Entries are immutable once appended; concurrent reads are safe as long
/// as no append runs at the same time.
class GenusTable {
public:
    explicit GenusTable(const ModelSpec& model) : model_(&model) {}

    const ModelSpec& model() const noexcept { return *model_; }
    std::size_t size() const noexcept { return solutions_.size(); }
    bool contains(unsigned g) const noexcept { return g < solutions_.size(); }
    /// Throws MissingGenus.
    const GenusSolution& at(unsigned g) const;
    const std::vector<GenusSolution>& solutions() const noexcept { return solutions_; }

    /// Validates the solution and appends it; its genus must equal size().
    void push(GenusSolution sol);

private:
    const ModelSpec* model_;
    std::vector<GenusSolution> solutions_;
};

GenusSolution base_case(const ModelSpec& model, unsigned g);

/// sum_n operator_coeffs[n] * f^(n)
FactoredRat apply_operator(const ModelSpec& model, const FactoredRat& f);

/// The integrand whose antiderivative, times the prefactor, is C_g.
/// `jobs` > 1 evaluates the convolution terms concurrently.
FactoredRat build_integrand(const ModelSpec& model, const GenusTable& table, unsigned g, unsigned jobs = 1);

/// Runs one step of the genus recursion. Needs genera 0..g-1 in the table.
GenusSolution solve_genus(const ModelSpec& model, const GenusTable& table, unsigned g, unsigned jobs = 1);

/// p_{g,2g+1} = (2g)!/(g+1) for hypermaps, p_{g,2g} = (4g-1)!!/(2g+1) for maps.
BigInt leading_coefficient(const ModelSpec& model, unsigned g);

/// The same value from the genus-to-genus recurrence seeded at g = 1.
Rat leading_coefficient_by_recurrence(const ModelSpec& model, unsigned g);

/// Hard invariants of a solution (structure, integrality, support, roots,
/// vanishing at the origin). Throws EngineError naming the violated one.
void validate_solution(const ModelSpec& model, const GenusSolution& sol);

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Non-vanishing conditions that are only observed, not proven:
/// top coefficient nonzero and no root at either pole location (and, for
/// hypermaps, at t = 1). Empty for g < 2.
std::vector<CheckOutcome> nonvanishing_checks(const ModelSpec& model, const GenusSolution& sol);

/// Builds the table through max_genus; genus 1 is recursed from genus 0 and
/// must agree with the closed form.
GenusTable compute_table(const ModelSpec& model, unsigned max_genus, unsigned jobs = 1);

/// Extends `table` in place up to max_genus.
void extend_table(GenusTable& table, unsigned max_genus, unsigned jobs = 1);

} // namespace mapenum

#endif // MAPENUM_GENUS_HPP

#ifndef MAPENUM_RENDER_HPP
#define MAPENUM_RENDER_HPP

#include "mapenum/counts.hpp"
#include "mapenum/genus.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mapenum {

/// Closed form for g <= 1, "(P_g)/((F1)^e1(F2)^e2)" above.
std::string render_plain(const ModelSpec& model, const GenusSolution& sol);

/// Terms as in "8t^5-92t^6+...+816t^{11}" (braces on multi-digit powers).
std::string latex_terms(const Poly& p);

/// Width of the term text on one aligned line before a break.
inline constexpr std::size_t kLatexLineWidth = 76;

/// Lines of "P_g(t)&=..." with "\\" breaks, the first line carrying the
/// name, continuation lines starting with "      &". No trailing punctuation.
std::vector<std::string> latex_polynomial_lines(const ModelSpec& model, const GenusSolution& sol,
                                                std::size_t width = kLatexLineWidth);

/// align* block holding C_g and, for g >= 2, P_g.
std::string render_latex(const ModelSpec& model, const GenusSolution& sol);

/// align* block listing P_g for several genera, comma separated and ending
/// in a full stop.
std::string render_latex_polynomials(const ModelSpec& model, const std::vector<GenusSolution>& sols);

/// {model, genus, offset, coefficients[], denom:[{k, exp}]}; all big
/// numbers as decimal strings. For g >= 1 the coefficients are those of
/// P_g starting at t^offset; for g = 0 they are the closed form's numerator.
nlohmann::json solution_to_json(const ModelSpec& model, const GenusSolution& sol);

/// Inverse of solution_to_json. Does not validate; GenusTable::push does.
GenusSolution solution_from_json(const ModelSpec& model, const nlohmann::json& j);

nlohmann::json counts_to_json(const CountTable& table);
std::string counts_to_csv(const CountTable& table);
std::string counts_to_plain(const CountTable& table);

} // namespace mapenum

#endif // MAPENUM_RENDER_HPP

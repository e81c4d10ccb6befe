#include "mapenum/genus.hpp"

#include "mapenum/errors.hpp"
#include "mapenum/partial_fractions.hpp"

#include <algorithm>
#include <future>

namespace mapenum {

namespace {

std::string genus_label(const ModelSpec& model, unsigned g) {
    return std::string(to_string(model.kind)) + " genus " + std::to_string(g);
}

/// F1^{e1} F2^{e2}, or its reciprocal when `inverse` is set.
FactoredRat standard_denominator(const ModelSpec& model, unsigned g, bool inverse = false) {
    const auto [e1, e2] = model.denom_exponents(g);
    const long sign = inverse ? -1 : 1;
    return FactoredRat::lin_pow(model.denom_factors[0].k, sign * e1)
           * FactoredRat::lin_pow(model.denom_factors[1].k, sign * e2);
}

FactoredRat apply_form(const FirstOrderForm& form, const FactoredRat& f, const FactoredRat& df) {
    return form.coeff_value * f + form.coeff_derivative * df;
}

void check_support(const Poly& p, std::pair<long, long> bounds, const std::string& what) {
    if (p.is_zero())
        throw EngineError(ErrorKind::DegreeBoundViolation, what + " is identically zero");
    if (p.valuation() < bounds.first || p.degree() > bounds.second)
        throw EngineError(ErrorKind::DegreeBoundViolation,
                          what + " has support [" + std::to_string(p.valuation()) + ", "
                              + std::to_string(p.degree()) + "], expected within ["
                              + std::to_string(bounds.first) + ", " + std::to_string(bounds.second) + "]");
}

} // namespace

const GenusSolution& GenusTable::at(unsigned g) const {
    if (g >= solutions_.size())
        throw EngineError(ErrorKind::MissingGenus, genus_label(*model_, g) + " is not in the table (holds "
                                                       + std::to_string(solutions_.size()) + " genera)");
    return solutions_[g];
}

void GenusTable::push(GenusSolution sol) {
    if (sol.genus != solutions_.size())
        throw EngineError(ErrorKind::InvariantViolation,
                          "table is contiguous: expected genus " + std::to_string(solutions_.size()) + ", got "
                              + std::to_string(sol.genus));
    validate_solution(*model_, sol);
    solutions_.push_back(std::move(sol));
}

GenusSolution base_case(const ModelSpec& model, unsigned g) {
    if (g > 1)
        throw EngineError(ErrorKind::InvalidArgument, "base cases are genus 0 and 1");
    GenusSolution sol{g, model.closed_form(g), std::nullopt};
    if (g == 1)
        sol.polynomial = (sol.c_of_t * standard_denominator(model, 1)).as_polynomial();
    return sol;
}

FactoredRat apply_operator(const ModelSpec& model, const FactoredRat& f) {
    FactoredRat sum;
    FactoredRat deriv = f;
    for (std::size_t n = 0; n < model.operator_coeffs.size(); ++n) {
        if (n > 0)
            deriv = deriv.derivative();
        if (!model.operator_coeffs[n].is_zero())
            sum += model.operator_coeffs[n] * deriv;
    }
    return sum;
}

FactoredRat build_integrand(const ModelSpec& model, const GenusTable& table, unsigned g, unsigned jobs) {
    if (g == 0)
        throw EngineError(ErrorKind::InvalidArgument, "the recursion starts at genus 1");
    for (unsigned i = 0; i < g; ++i)
        (void)table.at(i);

    FactoredRat bracket = apply_operator(model, table.at(g - 1).c_of_t);
    if (g >= 2) {
        std::vector<FactoredRat> derivs(g);
        for (unsigned i = 1; i < g; ++i)
            derivs[i] = table.at(i).c_of_t.derivative();

        auto term = [&](unsigned i) {
            const auto& ci = table.at(i).c_of_t;
            const auto& cj = table.at(g - i).c_of_t;
            return apply_form(model.left, ci, derivs[i]) * apply_form(model.right, cj, derivs[g - i]);
        };
        auto chunk_sum = [&](unsigned start, unsigned stride) {
            FactoredRat s;
            for (unsigned i = start; i < g; i += stride)
                s += term(i);
            return s;
        };

        FactoredRat conv;
        const unsigned workers = std::clamp(jobs, 1u, g - 1);
        if (workers == 1) {
            conv = chunk_sum(1, 1);
        } else {
            std::vector<std::future<FactoredRat>> parts;
            for (unsigned w = 0; w < workers; ++w)
                parts.push_back(std::async(std::launch::async, chunk_sum, 1 + w, workers));
            for (auto& p : parts)
                conv += p.get();
        }
        bracket += model.scale * conv;
    }
    return model.outer * bracket;
}

GenusSolution solve_genus(const ModelSpec& model, const GenusTable& table, unsigned g, unsigned jobs) {
    const FactoredRat integrand = build_integrand(model, table, g, jobs);
    const PFDecomp pf = partial_fractions(integrand);
    const FactoredRat antiderivative = pf_integrate(pf);

    GenusSolution sol;
    sol.genus = g;
    sol.c_of_t = model.prefactor * antiderivative;

    const std::string label = genus_label(model, g);
    if (g == 1) {
        const FactoredRat cleared = sol.c_of_t * standard_denominator(model, g);
        if (!cleared.is_polynomial())
            throw EngineError(ErrorKind::Indivisibility, label + ": C_1 does not clear to a polynomial");
        sol.polynomial = cleared.as_polynomial();
        return sol;
    }

    const auto [r1, r2] = model.antiderivative_exponents(g);
    const FactoredRat r_form = antiderivative * FactoredRat::lin_pow(model.denom_factors[0].k, r1)
                               * FactoredRat::lin_pow(model.denom_factors[1].k, r2);
    if (!r_form.is_polynomial())
        throw EngineError(ErrorKind::Indivisibility,
                          label + ": antiderivative does not clear to a polynomial, left with " + r_form.to_string());
    const Poly r_poly = r_form.as_polynomial();
    check_support(r_poly, model.antiderivative_degree_bounds(g), label + " R_g");

    const FactoredRat p_form = model.polynomial_multiplier * FactoredRat::from_poly(r_poly);
    if (p_form.t_power() < 0)
        throw EngineError(ErrorKind::Indivisibility, label + ": R_g is not divisible by t");
    Poly p = p_form.as_polynomial();
    if (!p.has_integer_coeffs())
        throw EngineError(ErrorKind::NonIntegerCoefficient, label + ": P_g = " + p.to_string());
    check_support(p, model.poly_degree_bounds(g), label + " P_g");
    sol.polynomial = std::move(p);

    validate_solution(model, sol);
    return sol;
}

BigInt leading_coefficient(const ModelSpec& model, unsigned g) {
    if (g == 0)
        throw EngineError(ErrorKind::InvalidArgument, "leading coefficient is defined for g >= 1");
    if (model.kind == ModelKind::Hypermap)
        return factorial(2 * g) / (g + 1);
    return double_factorial(4 * g - 1) / (2 * g + 1);
}

Rat leading_coefficient_by_recurrence(const ModelSpec& model, unsigned g) {
    if (g == 0)
        throw EngineError(ErrorKind::InvalidArgument, "leading coefficient is defined for g >= 1");
    Rat p = 1;
    for (unsigned h = 2; h <= g; ++h) {
        const long n = h;
        Rat step = model.kind == ModelKind::Hypermap ? Rat((2 * n - 1) * (2 * n) * (2 * n), 2 * n + 2)
                                                     : Rat((2 * n - 1) * (4 * n - 1) * (4 * n - 3), 2 * n + 1);
        step.canonicalize();
        p *= step;
    }
    return p;
}

void validate_solution(const ModelSpec& model, const GenusSolution& sol) {
    const unsigned g = sol.genus;
    const std::string label = genus_label(model, g);
    auto fail = [&](ErrorKind kind, const std::string& what) { throw EngineError(kind, label + ": " + what); };

    if (model.anchored_at_zero(g) && !sol.c_of_t.is_zero() && sol.c_of_t.t_power() < 1)
        fail(ErrorKind::InvariantViolation, "C_g(0) must vanish, got " + sol.c_of_t.to_string());
    if (sol.c_of_t.t_power() < 0)
        fail(ErrorKind::InvariantViolation, "pole at t = 0 in " + sol.c_of_t.to_string());

    if (g <= 1) {
        if (sol.c_of_t != model.closed_form(g))
            fail(ErrorKind::InvariantViolation, "expected closed form " + model.closed_form(g).to_string()
                                                    + ", got " + sol.c_of_t.to_string());
        if (g == 0) {
            if (sol.polynomial)
                fail(ErrorKind::InvariantViolation, "genus 0 carries no P_g");
            return;
        }
    }

    if (!sol.polynomial)
        fail(ErrorKind::InvariantViolation, "missing P_g");
    const Poly& p = *sol.polynomial;
    if (!p.has_integer_coeffs())
        fail(ErrorKind::NonIntegerCoefficient, "P_g = " + p.to_string());

    for (const auto& d : sol.c_of_t.denominator())
        if (d.factor != model.denom_factors[0] && d.factor != model.denom_factors[1])
            fail(ErrorKind::InvariantViolation, "unexpected denominator factor " + factor_to_string(d));
    if (sol.c_of_t != FactoredRat::from_poly(p) * standard_denominator(model, g, true))
        fail(ErrorKind::InvariantViolation, "C_g != P_g / (F1^e1 F2^e2) with the standard exponents");

    if (g == 1)
        return;

    check_support(p, model.poly_degree_bounds(g), label + " P_g");
    const auto low = static_cast<std::size_t>(model.poly_degree_bounds(g).first);
    if (p.coeff(low) != Rat(leading_coefficient(model, g)))
        fail(ErrorKind::InvariantViolation, "lowest coefficient " + p.coeff(low).get_str() + " != "
                                                + leading_coefficient(model, g).get_str());

    if (model.kind == ModelKind::Hypermap) {
        const Rat half(1, 2);
        if (p(half) != 0)
            fail(ErrorKind::InvariantViolation, "P_g(1/2) != 0");
        if (p.derivative()(half) != 0)
            fail(ErrorKind::InvariantViolation, "P_g'(1/2) != 0");
    } else {
        if (p(Rat(1, 3)) != 0)
            fail(ErrorKind::InvariantViolation, "P_g(1/3) != 0");
    }
}

std::vector<CheckOutcome> nonvanishing_checks(const ModelSpec& model, const GenusSolution& sol) {
    std::vector<CheckOutcome> out;
    if (sol.genus < 2 || !sol.polynomial)
        return out;
    const Poly& p = *sol.polynomial;
    const auto top = static_cast<std::size_t>(model.poly_degree_bounds(sol.genus).second);
    const std::string g = std::to_string(sol.genus);
    const std::string name = model.kind == ModelKind::Hypermap ? "P_" + g : "~P_" + g;

    out.push_back({name + " top coefficient (t^" + std::to_string(top) + ") nonzero", p.coeff(top) != 0,
                   p.coeff(top).get_str()});
    std::vector<std::pair<Rat, std::string>> points;
    if (model.kind == ModelKind::Hypermap)
        points = {{Rat(1), "1"}, {Rat(1, 4), "1/4"}};
    else
        points = {{Rat(1, 2), "1/2"}, {Rat(1, 6), "1/6"}};
    for (const auto& [x, text] : points) {
        const Rat v = p(x);
        out.push_back({name + "(" + text + ") nonzero", v != 0, v.get_str()});
    }
    return out;
}

void extend_table(GenusTable& table, unsigned max_genus, unsigned jobs) {
    const ModelSpec& model = table.model();
    for (unsigned g = static_cast<unsigned>(table.size()); g <= max_genus; ++g) {
        if (g == 0) {
            table.push(base_case(model, 0));
            continue;
        }
        GenusSolution sol = solve_genus(model, table, g, jobs);
        if (g == 1 && sol != base_case(model, 1))
            throw EngineError(ErrorKind::InvariantViolation,
                              genus_label(model, 1) + ": recursion gave " + sol.c_of_t.to_string()
                                  + ", closed form is " + model.closed_form(1).to_string());
        table.push(std::move(sol));
    }
}

GenusTable compute_table(const ModelSpec& model, unsigned max_genus, unsigned jobs) {
    GenusTable table(model);
    extend_table(table, max_genus, jobs);
    return table;
}

} // namespace mapenum

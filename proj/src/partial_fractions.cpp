#include "mapenum/partial_fractions.hpp"

#include "mapenum/errors.hpp"

namespace mapenum {

PFDecomp partial_fractions(const FactoredRat& f) {
    if (f.t_power() < 0)
        throw EngineError(ErrorKind::NegativeTPower, "partial fractions need a function regular at t = 0, got "
                                                         + f.to_string());
    if (f.denominator().size() > 2)
        throw EngineError(ErrorKind::PartialFraction,
                          "more than two pole locations in " + f.to_string());

    PFDecomp out;
    if (f.is_zero())
        return out;

    const Poly full = f.numerator().shifted_up(static_cast<std::size_t>(f.t_power()));
    Poly remainder;
    full.divmod(f.denominator_poly(), out.poly_part, remainder);

    for (const auto& d : f.denominator()) {
        const long k = d.factor.k;
        Poly others{1};
        for (const auto& o : f.denominator())
            if (o.factor.k != k)
                others *= Poly::lin_power(o.factor.k, o.exponent);

        // f = g(u) / u^e with u = 1 - k t; the coefficient of u^{-j} is [u^{e-j}] g.
        const Poly num_u = full.substitute_pole_local(k);
        const Poly den_u = others.substitute_pole_local(k);
        const std::vector<Rat> g = num_u.series_quotient(den_u, d.exponent - 1);
        for (unsigned j = 1; j <= d.exponent; ++j)
            out.pole_terms.push_back({d.factor, j, g[d.exponent - j]});
    }
    return out;
}

FactoredRat recombine(const PFDecomp& d) {
    FactoredRat sum = FactoredRat::from_poly(d.poly_part);
    for (const auto& p : d.pole_terms) {
        if (p.coefficient == 0)
            continue;
        sum += FactoredRat::lin_pow(p.factor.k, -static_cast<long>(p.exponent)) * p.coefficient;
    }
    return sum;
}

FactoredRat pf_integrate(const PFDecomp& d) {
    for (const auto& p : d.pole_terms) {
        if (p.exponent == 1 && p.coefficient != 0)
            throw EngineError(ErrorKind::SimplePole,
                              "nonzero simple-pole coefficient " + p.coefficient.get_str() + " at "
                                  + factor_to_string({p.factor, 1}) + "; the antiderivative is not rational");
    }

    FactoredRat sum = FactoredRat::from_poly(d.poly_part.antiderivative());
    Rat at_zero = 0;
    for (const auto& p : d.pole_terms) {
        if (p.coefficient == 0 || p.exponent == 1)
            continue;
        const long lowered = static_cast<long>(p.exponent) - 1;
        const Rat c = p.coefficient / Rat(p.factor.k * lowered);
        sum += FactoredRat::lin_pow(p.factor.k, -lowered) * c;
        at_zero += c;
    }
    return sum + FactoredRat::constant(-at_zero);
}

} // namespace mapenum

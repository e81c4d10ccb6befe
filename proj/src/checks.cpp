#include "mapenum/checks.hpp"

#include "mapenum/errors.hpp"

namespace mapenum {

namespace {

using FR = FactoredRat;

FR lin(long k, long e = 1) { return FR::lin_pow(k, e); }
FR t_(long m = 1) { return FR::t_pow(m); }
FR c(long v) { return FR::constant(v); }
FR poly(std::initializer_list<long> cs) { return FR::from_poly(Poly(cs)); }

FR lhs(ModelKind kind, const FR& cg) {
    const FR d = cg.derivative();
    if (kind == ModelKind::Hypermap)
        return t_() * lin(1, 2) * lin(2) * d + lin(1) * poly({1, -2, 4}) * cg;
    return t_() * lin(2) * lin(3) * d + poly({1, -4, 6}) * cg;
}

} // namespace

FactoredRat reference_operator(ModelKind kind, const FactoredRat& f) {
    const FR d1 = f.derivative();
    const FR d2 = d1.derivative();
    const FR d3 = d2.derivative();
    if (kind == ModelKind::Hypermap) {
        return t_(2) * lin(2, 2) * lin(4, -3) * d3
               + t_() * lin(2) * poly({5, -28, 56}) * lin(4, -4) * d2
               + c(4) * poly({1, -11, 58, -144, 144}) * lin(4, -5) * d1;
    }
    return c(4) * t_(3) * lin(3, 3) * lin(6, -3) * d3
           + c(24) * t_(2) * lin(3, 2) * poly({1, -9, 27}) * lin(6, -4) * d2
           + c(9) * t_() * lin(3) * poly({3, -56, 456, -1728, 2592}) * lin(6, -5) * d1
           + c(3) * f;
}

FactoredRat ode_residual(const GenusTable& table, unsigned g) {
    if (g == 0)
        throw EngineError(ErrorKind::InvalidArgument, "the ODE links genus g >= 1 to lower genera");
    const ModelKind kind = table.model().kind;
    const FR& cg = table.at(g).c_of_t;

    FR conv;
    for (unsigned i = 1; i < g; ++i) {
        const FR& ci = table.at(i).c_of_t;
        const FR& cj = table.at(g - i).c_of_t;
        if (kind == ModelKind::Hypermap) {
            conv += (c(4) * lin(4) * ci + c(6) * t_() * lin(2) * ci.derivative()) * cj.derivative();
        } else {
            const FR w = c(2) * t_() * lin(3) * lin(6, -1);
            conv += (ci + w * ci.derivative()) * (cj + w * cj.derivative());
        }
    }

    const FR& prev = table.at(g - 1).c_of_t;
    FR rhs;
    if (kind == ModelKind::Hypermap)
        rhs = t_(3) * lin(2, 3) * (reference_operator(kind, prev) + lin(4, -2) * conv);
    else
        rhs = t_(2) * lin(3, 2) * (reference_operator(kind, prev) + c(3) * conv);
    return lhs(kind, cg) - rhs;
}

FactoredRat integrating_factor_residual(ModelKind kind, const FactoredRat& c_of_t) {
    if (kind == ModelKind::Hypermap) {
        const FR factor = t_() * lin(1, 3) * lin(2, -2);
        const FR mu = lin(1) * lin(2, -3);
        return (factor * c_of_t).derivative() - mu * lhs(kind, c_of_t);
    }
    const FR factor = t_() * lin(2) * lin(3, -1);
    return (factor * c_of_t).derivative() - lin(3, -2) * lhs(kind, c_of_t);
}

} // namespace mapenum

#include "mapenum/model.hpp"

#include "mapenum/errors.hpp"

namespace mapenum {

std::string_view to_string(ModelKind kind) noexcept {
    return kind == ModelKind::Hypermap ? "hypermap" : "map";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) noexcept {
    if (name == "hypermap")
        return ModelKind::Hypermap;
    if (name == "map")
        return ModelKind::Map;
    return std::nullopt;
}

namespace {

FactoredRat frac(long t_power, Poly num, std::vector<DenomFactor> den = {}) {
    return FactoredRat::from_parts(t_power, std::move(num), std::move(den));
}

DenomFactor pow_of(long k, unsigned e) { return {LinFactor{k}, e}; }

ModelSpec make_hypermap() {
    ModelSpec m;
    m.kind = ModelKind::Hypermap;
    m.subst_coeff = 2;
    m.denom_factors = {LinFactor{1}, LinFactor{4}};

    m.operator_coeffs = {
        FactoredRat{},
        frac(0, Poly{1, -11, 58, -144, 144} * Rat(4), {pow_of(4, 5)}),
        frac(1, Poly::lin(2) * Poly{5, -28, 56}, {pow_of(4, 4)}),
        frac(2, Poly::lin_power(2, 2), {pow_of(4, 3)}),
    };
    m.outer = frac(3, Poly::lin(1));
    m.scale = FactoredRat::lin_pow(4, -2);
    m.left = {frac(0, Poly::lin(4) * Rat(4)), frac(1, Poly::lin(2) * Rat(6))};
    m.right = {FactoredRat{}, FactoredRat::constant(1)};
    m.prefactor = frac(-1, Poly::lin_power(2, 2), {pow_of(1, 3)});
    m.polynomial_multiplier = frac(-1, Poly::lin_power(2, 2));
    return m;
}

ModelSpec make_map() {
    ModelSpec m;
    m.kind = ModelKind::Map;
    m.subst_coeff = 3;
    m.denom_factors = {LinFactor{2}, LinFactor{6}};

    m.operator_coeffs = {
        FactoredRat::constant(3),
        frac(1, Poly::lin(3) * Poly{3, -56, 456, -1728, 2592} * Rat(9), {pow_of(6, 5)}),
        frac(2, Poly::lin_power(3, 2) * Poly{1, -9, 27} * Rat(24), {pow_of(6, 4)}),
        frac(3, Poly::lin_power(3, 3) * Rat(4), {pow_of(6, 3)}),
    };
    m.outer = FactoredRat::t_pow(2);
    m.scale = FactoredRat::constant(3);
    // 2s d/ds in the t variable: 2 t (1 - 3t) / (1 - 6t) d/dt
    const FactoredRat weight = frac(1, Poly::lin(3) * Rat(2), {pow_of(6, 1)});
    m.left = {FactoredRat::constant(1), weight};
    m.right = m.left;
    m.prefactor = frac(-1, Poly::lin(3), {pow_of(2, 1)});
    m.polynomial_multiplier = frac(-1, Poly::lin(3));
    return m;
}

} // namespace

std::pair<long, long> ModelSpec::denom_exponents(unsigned g) const {
    const long n = g;
    if (kind == ModelKind::Hypermap)
        return {4 * n - 3, 5 * n - 3};
    return {3 * n - 2, 5 * n - 3};
}

std::pair<long, long> ModelSpec::antiderivative_exponents(unsigned g) const {
    const long n = g;
    if (kind == ModelKind::Hypermap)
        return {4 * n - 6, 5 * n - 3};
    return {3 * n - 3, 5 * n - 3};
}

std::pair<long, long> ModelSpec::poly_degree_bounds(unsigned g) const {
    const long n = g;
    if (kind == ModelKind::Hypermap)
        return {2 * n + 1, 9 * n - 7};
    return {2 * n, 8 * n - 6};
}

std::pair<long, long> ModelSpec::antiderivative_degree_bounds(unsigned g) const {
    const long n = g;
    if (kind == ModelKind::Hypermap)
        return {2 * n + 2, 9 * n - 8};
    return {2 * n + 1, 8 * n - 6};
}

FactoredRat ModelSpec::closed_form(unsigned g) const {
    if (g > 1)
        throw EngineError(ErrorKind::InvalidArgument, "closed forms exist only for genus 0 and 1");
    if (kind == ModelKind::Hypermap) {
        if (g == 0)
            return frac(1, Poly::lin(3), {pow_of(2, 2)});
        return frac(3, Poly{1}, {pow_of(1, 1), pow_of(4, 2)});
    }
    if (g == 0)
        return frac(0, Poly::lin(4), {pow_of(3, 2)});
    return frac(2, Poly{1}, {pow_of(2, 1), pow_of(6, 2)});
}

const ModelSpec& hypermap_model() {
    static const ModelSpec m = make_hypermap();
    return m;
}

const ModelSpec& map_model() {
    static const ModelSpec m = make_map();
    return m;
}

const ModelSpec& model_for(ModelKind kind) {
    return kind == ModelKind::Hypermap ? hypermap_model() : map_model();
}

} // namespace mapenum

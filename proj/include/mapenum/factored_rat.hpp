#ifndef MAPENUM_FACTORED_RAT_HPP
#define MAPENUM_FACTORED_RAT_HPP

#include "mapenum/poly.hpp"

#include <compare>
#include <string>
#include <vector>

namespace mapenum {

/// The linear factor (1 - k t), k >= 1.
struct LinFactor {
    long k = 1;
    friend auto operator<=>(const LinFactor&, const LinFactor&) = default;
};

struct DenomFactor {
    LinFactor factor;
    unsigned exponent = 0;
    friend bool operator==(const DenomFactor&, const DenomFactor&) = default;
};

/// Rational function t^m * N(t) / prod (1 - k_i t)^{e_i}.
///
/// Always held in canonical form:
///   - N(0) != 0 (all powers of t live in m), and N is not divisible by any
///     denominator factor;
///   - denominator factors are distinct, have positive exponents and are
///     sorted by k;
///   - the zero function is m = 0, N = 0, empty denominator.
/// Two values represent the same function iff they compare equal.
class FactoredRat {
public:
    FactoredRat() = default;

    /// Builds t^t_power * numerator / prod(den) and reduces it.
    static FactoredRat from_parts(long t_power, Poly numerator, std::vector<DenomFactor> den = {});
    static FactoredRat from_poly(Poly p) { return from_parts(0, std::move(p)); }
    static FactoredRat constant(const Rat& c) { return from_poly(Poly::constant(c)); }
    static FactoredRat t_pow(long m) { return from_parts(m, Poly{1}); }
    /// (1 - k t)^e, e may be negative.
    static FactoredRat lin_pow(long k, long e);

    long t_power() const noexcept { return t_power_; }
    const Poly& numerator() const noexcept { return num_; }
    const std::vector<DenomFactor>& denominator() const noexcept { return den_; }
    unsigned exponent_of(long k) const noexcept;
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return t_power_ >= 0 && den_.empty(); }

    /// t^m N(t) as a polynomial; requires is_polynomial().
    Poly as_polynomial() const;
    /// prod (1 - k t)^e expanded.
    Poly denominator_poly() const;

    /// Exact value at x; x must not be a pole.
    Rat operator()(const Rat& x) const;

    FactoredRat operator-() const;
    friend FactoredRat operator+(const FactoredRat& a, const FactoredRat& b);
    friend FactoredRat operator-(const FactoredRat& a, const FactoredRat& b) { return a + (-b); }
    friend FactoredRat operator*(const FactoredRat& a, const FactoredRat& b);
    friend FactoredRat operator*(const FactoredRat& a, const Rat& c);
    friend FactoredRat operator*(const Rat& c, const FactoredRat& a) { return a * c; }
    FactoredRat& operator+=(const FactoredRat& o) { return *this = *this + o; }
    FactoredRat& operator*=(const FactoredRat& o) { return *this = *this * o; }

    friend bool operator==(const FactoredRat&, const FactoredRat&) = default;

    FactoredRat derivative() const;
    FactoredRat derivative(unsigned order) const;

    /// e.g. "t^3/((1-t)(1-4t)^2)", "t(1-3t)/(1-2t)^2", "(1-4t)/(1-3t)^2".
    std::string to_string() const;

private:
    void normalize();

    long t_power_ = 0;
    Poly num_;
    std::vector<DenomFactor> den_;
};

/// "(1-t)", "(1-4t)^2"
std::string factor_to_string(const DenomFactor& f);

/// Taylor coefficients of f at t = 0, orders 0..order. Throws NegativeTPower
/// if f has a pole at the origin.
std::vector<Rat> series_expand(const FactoredRat& f, std::size_t order);

} // namespace mapenum

#endif // MAPENUM_FACTORED_RAT_HPP

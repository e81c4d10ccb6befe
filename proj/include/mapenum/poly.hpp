#ifndef MAPENUM_POLY_HPP
#define MAPENUM_POLY_HPP

#include "mapenum/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mapenum {

/// Dense univariate polynomial over Q in the variable t.
///
/// coeffs()[i] is the coefficient of t^i. The vector is kept trimmed so the
/// leading coefficient is nonzero; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, std::size_t degree);
    /// 1 - k t
    static Poly lin(long k);
    /// (1 - k t)^e
    static Poly lin_power(long k, unsigned e);

    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for zero.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Index of the lowest nonzero coefficient; -1 for zero.
    long valuation() const noexcept;
    Rat coeff(std::size_t i) const;
    const Rat& leading() const;
    bool has_integer_coeffs() const;

    Rat operator()(const Rat& x) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;
    /// Multiply by t^n.
    Poly shifted_up(std::size_t n) const;
    /// Divide by t^n; the caller guarantees valuation() >= n.
    Poly shifted_down(std::size_t n) const;

    /// Exact quotient by (1 - k t) when the remainder vanishes.
    std::optional<Poly> divide_by_lin(long k) const;
    /// Euclidean division; divisor must be nonzero.
    void divmod(const Poly& divisor, Poly& quotient, Poly& remainder) const;

    /// p((1 - u)/k) as a polynomial in u.
    Poly substitute_pole_local(long k) const;

    /// First n+1 Taylor coefficients of this / divisor at 0; divisor(0) != 0.
    std::vector<Rat> series_quotient(const Poly& divisor, std::size_t n) const;

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Truncated power-series product, keeping coefficients t^0..t^n.
std::vector<Rat> series_mul(std::span<const Rat> a, std::span<const Rat> b, std::size_t n);

} // namespace mapenum

#endif // MAPENUM_POLY_HPP

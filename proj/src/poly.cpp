#include "mapenum/poly.hpp"

#include "mapenum/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mapenum {

Rat parse_rat(const std::string& text) {
    Rat q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw EngineError(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw EngineError(ErrorKind::InvalidArgument, "zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt double_factorial(unsigned long n) {
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), n);
    return r;
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::lin(long k) { return Poly{1, -k}; }

Poly Poly::lin_power(long k, unsigned e) {
    // binomial expansion keeps this linear in e instead of e multiplications
    std::vector<Rat> v(e + 1);
    BigInt binom = 1;
    BigInt kpow = 1;
    for (unsigned i = 0; i <= e; ++i) {
        v[i] = (i % 2 == 0 ? 1 : -1) * binom * kpow;
        binom = binom * (e - i) / (i + 1);
        kpow *= k;
    }
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

long Poly::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return static_cast<long>(i);
    return -1;
}

Rat Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

const Rat& Poly::leading() const {
    if (coeffs_.empty())
        throw EngineError(ErrorKind::InvalidArgument, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool Poly::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return is_integer(c); });
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.coeffs_)
        x = -x;
    return r;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rat> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
    if (coeffs_.empty())
        return {};
    std::vector<Rat> out(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
    return Poly(std::move(out));
}

Poly Poly::shifted_up(std::size_t n) const {
    if (is_zero() || n == 0)
        return *this;
    std::vector<Rat> out(n, Rat(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(out));
}

Poly Poly::shifted_down(std::size_t n) const {
    if (n == 0 || is_zero())
        return *this;
    if (valuation() < static_cast<long>(n))
        throw EngineError(ErrorKind::Indivisibility, "polynomial not divisible by t^" + std::to_string(n));
    return Poly(std::vector<Rat>(coeffs_.begin() + static_cast<long>(n), coeffs_.end()));
}

std::optional<Poly> Poly::divide_by_lin(long k) const {
    // p(t) = (1 - k t) q(t): read off q from the top degree down.
    if (is_zero())
        return Poly{};
    const std::size_t d = coeffs_.size() - 1;
    if (d == 0)
        return std::nullopt;
    std::vector<Rat> q(d);
    // p_i = q_i - k q_{i-1}
    q[d - 1] = -coeffs_[d] / k;
    for (std::size_t i = d - 1; i > 0; --i)
        q[i - 1] = (q[i] - coeffs_[i]) / k;
    if (q[0] != coeffs_[0])
        return std::nullopt;
    return Poly(std::move(q));
}

void Poly::divmod(const Poly& divisor, Poly& quotient, Poly& remainder) const {
    if (divisor.is_zero())
        throw EngineError(ErrorKind::InvalidArgument, "division by zero polynomial");
    std::vector<Rat> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) {
        quotient = Poly{};
        remainder = *this;
        return;
    }
    std::vector<Rat> quo(rem.size() - dd);
    const Rat& lead = divisor.coeffs_.back();
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0)
            continue;
        Rat f = rem[i] / lead;
        quo[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] -= f * divisor.coeffs_[j];
    }
    rem.resize(dd);
    quotient = Poly(std::move(quo));
    remainder = Poly(std::move(rem));
}

Poly Poly::substitute_pole_local(long k) const {
    // Horner in the polynomial ring: acc = acc * ((1 - u)/k) + c
    const Poly step = Poly(std::vector<Rat>{Rat(1, k), Rat(-1, k)});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * step + Poly::constant(*it);
    return acc;
}

std::vector<Rat> Poly::series_quotient(const Poly& divisor, std::size_t n) const {
    if (divisor.coeff(0) == 0)
        throw EngineError(ErrorKind::InvalidArgument, "series division by a divisor vanishing at 0");
    const Rat inv0 = 1 / divisor.coeffs_[0];
    std::vector<Rat> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Rat acc = coeff(i);
        const std::size_t jmax = std::min(i, divisor.coeffs_.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j)
            acc -= divisor.coeffs_[j] * out[i - j];
        out[i] = acc * inv0;
    }
    return out;
}

std::string Poly::to_string(char var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0)
            continue;
        Rat mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (i == 0 || mag != 1)
            os << mag.get_str();
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
        first = false;
    }
    return os.str();
}

std::vector<Rat> series_mul(std::span<const Rat> a, std::span<const Rat> b, std::size_t n) {
    std::vector<Rat> out(n + 1);
    for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace mapenum

#include "mapenum/factored_rat.hpp"

#include "mapenum/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mapenum {

FactoredRat FactoredRat::from_parts(long t_power, Poly numerator, std::vector<DenomFactor> den) {
    FactoredRat f;
    f.t_power_ = t_power;
    f.num_ = std::move(numerator);
    f.den_ = std::move(den);
    f.normalize();
    return f;
}

FactoredRat FactoredRat::lin_pow(long k, long e) {
    if (e >= 0)
        return from_poly(Poly::lin_power(k, static_cast<unsigned>(e)));
    return from_parts(0, Poly{1}, {{LinFactor{k}, static_cast<unsigned>(-e)}});
}

void FactoredRat::normalize() {
    if (num_.is_zero()) {
        t_power_ = 0;
        den_.clear();
        return;
    }
    const long v = num_.valuation();
    if (v > 0) {
        num_ = num_.shifted_down(static_cast<std::size_t>(v));
        t_power_ += v;
    }

    std::map<long, unsigned> merged;
    for (const auto& d : den_) {
        if (d.factor.k < 1)
            throw EngineError(ErrorKind::InvalidArgument,
                              "linear factor (1 - k t) needs k >= 1, got k = " + std::to_string(d.factor.k));
        merged[d.factor.k] += d.exponent;
    }
    den_.clear();
    for (auto [k, e] : merged) {
        const Rat root(1, k);
        while (e > 0 && num_(root) == 0) {
            num_ = *num_.divide_by_lin(k);
            --e;
        }
        if (e > 0)
            den_.push_back({LinFactor{k}, e});
    }
}

unsigned FactoredRat::exponent_of(long k) const noexcept {
    for (const auto& d : den_)
        if (d.factor.k == k)
            return d.exponent;
    return 0;
}

Poly FactoredRat::as_polynomial() const {
    if (!is_polynomial())
        throw EngineError(ErrorKind::Indivisibility, "not a polynomial: " + to_string());
    return num_.shifted_up(static_cast<std::size_t>(t_power_));
}

Poly FactoredRat::denominator_poly() const {
    Poly d{1};
    for (const auto& f : den_)
        d *= Poly::lin_power(f.factor.k, f.exponent);
    return d;
}

Rat FactoredRat::operator()(const Rat& x) const {
    if (is_zero())
        return 0;
    const Rat dv = denominator_poly()(x);
    if (dv == 0 || (x == 0 && t_power_ < 0))
        throw EngineError(ErrorKind::InvalidArgument, "evaluation at a pole of " + to_string());
    Rat xp = 1;
    const Rat base = t_power_ >= 0 ? x : Rat(Rat(1) / x);
    for (long i = 0; i < std::abs(t_power_); ++i)
        xp *= base;
    return xp * num_(x) / dv;
}

FactoredRat FactoredRat::operator-() const {
    FactoredRat r = *this;
    r.num_ = -r.num_;
    return r;
}

FactoredRat operator+(const FactoredRat& a, const FactoredRat& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const long m = std::min(a.t_power_, b.t_power_);

    std::map<long, unsigned> common;
    for (const auto& d : a.den_)
        common[d.factor.k] = std::max(common[d.factor.k], d.exponent);
    for (const auto& d : b.den_)
        common[d.factor.k] = std::max(common[d.factor.k], d.exponent);

    auto lift = [&](const FactoredRat& f) {
        Poly p = f.num_.shifted_up(static_cast<std::size_t>(f.t_power_ - m));
        for (auto [k, e] : common) {
            const unsigned missing = e - f.exponent_of(k);
            if (missing > 0)
                p *= Poly::lin_power(k, missing);
        }
        return p;
    };

    std::vector<DenomFactor> den;
    for (auto [k, e] : common)
        den.push_back({LinFactor{k}, e});
    return FactoredRat::from_parts(m, lift(a) + lift(b), std::move(den));
}

FactoredRat operator*(const FactoredRat& a, const FactoredRat& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<DenomFactor> den = a.den_;
    den.insert(den.end(), b.den_.begin(), b.den_.end());
    return FactoredRat::from_parts(a.t_power_ + b.t_power_, a.num_ * b.num_, std::move(den));
}

FactoredRat operator*(const FactoredRat& a, const Rat& c) {
    if (c == 0)
        return {};
    FactoredRat r = a;
    r.num_ *= c;
    return r;
}

FactoredRat FactoredRat::derivative() const {
    if (is_zero())
        return {};
    // log-derivative: f'/f = m/t + N'/N + sum k e_k / (1 - k t)
    Poly lin_all{1};
    for (const auto& d : den_)
        lin_all *= Poly::lin(d.factor.k);

    Poly inner = (num_ * Rat(t_power_) + num_.derivative().shifted_up(1)) * lin_all;
    for (const auto& d : den_) {
        Poly others{1};
        for (const auto& o : den_)
            if (o.factor.k != d.factor.k)
                others *= Poly::lin(o.factor.k);
        inner += num_.shifted_up(1) * others * Rat(d.factor.k * static_cast<long>(d.exponent));
    }

    std::vector<DenomFactor> den = den_;
    for (auto& d : den)
        d.exponent += 1;
    return from_parts(t_power_ - 1, std::move(inner), std::move(den));
}

FactoredRat FactoredRat::derivative(unsigned order) const {
    FactoredRat r = *this;
    for (unsigned i = 0; i < order; ++i)
        r = r.derivative();
    return r;
}

std::string factor_to_string(const DenomFactor& f) {
    std::string s = f.factor.k == 1 ? "(1-t)" : "(1-" + std::to_string(f.factor.k) + "t)";
    if (f.exponent != 1)
        s += "^" + std::to_string(f.exponent);
    return s;
}

std::string FactoredRat::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;

    const long m = t_power_;
    const bool num_is_one = num_ == Poly{1};
    const bool num_is_monomial = num_.coeffs().size() == 1;
    std::string mono;
    if (m > 0)
        mono = m == 1 ? "t" : "t^" + std::to_string(m);

    if (m > 0 && num_is_one) {
        os << mono;
    } else if (m > 0 && num_is_monomial) {
        os << num_.to_string() << mono;
    } else if (m > 0) {
        os << mono << '(' << num_.to_string() << ')';
    } else if (num_is_monomial || den_.empty()) {
        os << num_.to_string();
    } else {
        os << '(' << num_.to_string() << ')';
    }

    std::vector<std::string> parts;
    if (m < 0)
        parts.push_back(m == -1 ? "t" : "t^" + std::to_string(-m));
    for (const auto& d : den_)
        parts.push_back(factor_to_string(d));
    if (parts.size() == 1) {
        os << '/' << parts.front();
    } else if (parts.size() > 1) {
        os << "/(";
        for (const auto& p : parts)
            os << p;
        os << ')';
    }
    return os.str();
}

std::vector<Rat> series_expand(const FactoredRat& f, std::size_t order) {
    if (f.t_power() < 0)
        throw EngineError(ErrorKind::NegativeTPower,
                          "series expansion at t = 0 of " + f.to_string() + " which has a pole there");
    std::vector<Rat> out(order + 1);
    if (f.is_zero())
        return out;
    const auto m = static_cast<std::size_t>(f.t_power());
    if (m > order)
        return out;
    std::vector<Rat> q = f.numerator().series_quotient(f.denominator_poly(), order - m);
    std::copy(q.begin(), q.end(), out.begin() + static_cast<long>(m));
    return out;
}

} // namespace mapenum

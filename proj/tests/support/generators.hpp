#ifndef MAPENUM_TESTS_GENERATORS_HPP
#define MAPENUM_TESTS_GENERATORS_HPP

#include "mapenum/factored_rat.hpp"
#include "mapenum/oracle.hpp"
#include "mapenum/partial_fractions.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace mapenum::testing {

/// Seeded source of random algebraic objects. Reproducible across runs.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return range(0, 1) == 1; }

    Rat rat(long bound = 9) {
        Rat q(range(-bound, bound), range(1, 4));
        q.canonicalize();
        return q;
    }

    Poly poly(long max_degree, long bound = 9, bool integer = false) {
        std::vector<Rat> c(static_cast<std::size_t>(range(0, max_degree) + 1));
        for (auto& x : c)
            x = integer ? Rat(range(-bound, bound)) : rat(bound);
        return Poly(std::move(c));
    }

    /// A pole location from the set used by both models.
    long pole() {
        static constexpr long ks[] = {1, 2, 3, 4, 6};
        return ks[range(0, 4)];
    }

    /// One or two distinct poles, each with exponent 1..max_exp.
    std::vector<DenomFactor> denominator(unsigned max_exp = 5) {
        std::vector<DenomFactor> den;
        const long a = pole();
        den.push_back({LinFactor{a}, static_cast<unsigned>(range(1, max_exp))});
        if (coin()) {
            long b = pole();
            while (b == a)
                b = pole();
            den.push_back({LinFactor{b}, static_cast<unsigned>(range(1, max_exp))});
        }
        return den;
    }

    /// Rational function with t_power >= 0 and at most two poles (rarely none).
    FactoredRat frat(long max_degree = 8) {
        Poly num = poly(max_degree);
        if (num.is_zero())
            num = Poly{1};
        std::vector<DenomFactor> den;
        if (range(0, 9) != 0)
            den = denominator();
        return FactoredRat::from_parts(range(0, 3), std::move(num), std::move(den));
    }

    /// Decomposition whose exponent-1 coefficients are all zero.
    PFDecomp integrable_decomposition() {
        PFDecomp d;
        d.poly_part = poly(4);
        for (const auto& f : denominator()) {
            const unsigned e = std::max(2u, f.exponent);
            for (unsigned j = 1; j <= e; ++j)
                d.pole_terms.push_back({f.factor, j, j == 1 ? Rat(0) : rat()});
        }
        return d;
    }

    oracle::Perm perm(std::size_t d) {
        std::vector<std::uint8_t> im(d);
        std::iota(im.begin(), im.end(), std::uint8_t{0});
        std::shuffle(im.begin(), im.end(), rng_);
        return oracle::Perm(std::move(im));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace mapenum::testing

#endif // MAPENUM_TESTS_GENERATORS_HPP

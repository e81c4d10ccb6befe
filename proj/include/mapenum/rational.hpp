#ifndef MAPENUM_RATIONAL_HPP
#define MAPENUM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace mapenum {

// GMP keeps mpq_class canonical (reduced, positive denominator, 0 == 0/1)
// after every arithmetic operation, which is exactly the Rat invariant.
using BigInt = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_decimal(const BigInt& z) { return z.get_str(10); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_decimal(const Rat& q) { return q.get_str(10); }

Rat parse_rat(const std::string& text);

BigInt factorial(unsigned long n);
BigInt double_factorial(unsigned long n);

inline std::size_t bit_length(const BigInt& z) {
    return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

} // namespace mapenum

#endif // MAPENUM_RATIONAL_HPP

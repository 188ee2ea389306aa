#pragma once

#include <gmpxx.h>

namespace iwg {

bool is_prime(long long p);

// gmpxx has no long long overloads; on this platform long is 64-bit.
inline mpz_class to_mpz(long long v) {
    static_assert(sizeof(long) == sizeof(long long));
    return mpz_class(static_cast<long>(v));
}

// Exponent of p in n; n must be nonzero.
long p_valuation(const mpz_class& n, long long p);

mpz_class pow_ll(long long base, unsigned long exp);

// Nonnegative representative of a mod q, q > 0.
long long mod_floor(long long a, long long q);

}  // namespace iwg

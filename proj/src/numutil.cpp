#include "iwg/numutil.hpp"

#include <stdexcept>

namespace iwg {

bool is_prime(long long p) {
    if (p < 2) return false;
    mpz_class z = static_cast<long>(p);
    // GMP's BPSW + Miller-Rabin test is exact for 64-bit inputs.
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

long p_valuation(const mpz_class& n, long long p) {
    if (n == 0) throw std::invalid_argument("p_valuation: zero argument");
    mpz_class pz = static_cast<long>(p);
    mpz_class stripped;
    return static_cast<long>(mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

mpz_class pow_ll(long long base, unsigned long exp) {
    mpz_class b = static_cast<long>(base);
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

long long mod_floor(long long a, long long q) {
    long long r = a % q;
    return r < 0 ? r + q : r;
}

}  // namespace iwg

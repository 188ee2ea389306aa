#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace iwg {

// Element of the integral group ring of an infinite cyclic group, written
// as a Laurent polynomial in a formal generator x: a finitely supported
// map exponent -> coefficient. Zero coefficients are never stored.
class GroupRingElement {
  public:
    GroupRingElement() = default;

    static GroupRingElement constant(mpz_class c);
    static GroupRingElement monomial(mpz_class coeff, long long exp);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long long, mpz_class>& terms() const { return terms_; }
    mpz_class coefficient(long long exp) const;

    GroupRingElement& operator+=(const GroupRingElement& rhs);
    GroupRingElement& operator-=(const GroupRingElement& rhs);
    GroupRingElement operator+(const GroupRingElement& rhs) const;
    GroupRingElement operator-(const GroupRingElement& rhs) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const GroupRingElement& rhs) const;

    bool operator==(const GroupRingElement& rhs) const { return terms_ == rhs.terms_; }

    // Image in Z[x]/(x^modulus - 1): exponents folded mod modulus.
    GroupRingElement reduced_mod_cycle(long long modulus) const;

    // Augmentation x -> 1.
    mpz_class evaluate_at_one() const;

    // gcd of all coefficients, nonnegative; 0 for the zero element.
    mpz_class content() const;

    // e.g. "-x^2 + 2 - x^-1"; "0" for zero.
    std::string to_string() const;

  private:
    std::map<long long, mpz_class> terms_;
    void insert_term(long long exp, mpz_class coeff);
};

}  // namespace iwg

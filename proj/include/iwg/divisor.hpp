#pragma once

#include <gmpxx.h>

#include <map>

#include "iwg/graph.hpp"

namespace iwg {

// Formal integer combination of vertices, finitely supported.
class Divisor {
  public:
    Divisor() = default;
    explicit Divisor(std::map<int, mpz_class> coefficients);

    const std::map<int, mpz_class>& coefficients() const { return coefficients_; }
    mpz_class coefficient(int v) const;
    void set_coefficient(int v, mpz_class c);

    mpz_class degree() const;

    Divisor& operator+=(const Divisor& rhs);
    Divisor& operator-=(const Divisor& rhs);
    Divisor operator+(const Divisor& rhs) const;
    Divisor operator-(const Divisor& rhs) const;
    bool operator==(const Divisor& rhs) const { return coefficients_ == rhs.coefficients_; }

  private:
    std::map<int, mpz_class> coefficients_;  // vertex label -> coefficient, no zeros
};

// deg(v)*v - sum of neighbors of v: the image of v under the Laplacian.
Divisor principal_divisor(const Graph& g, int v);

// Laplacian acting on divisors; the image always has degree 0.
Divisor laplacian_image(const Graph& g, const Divisor& d);

}  // namespace iwg

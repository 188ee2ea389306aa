#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "iwg/graph.hpp"

namespace iwg {

// Dense matrix of arbitrary-precision integers. All arithmetic in this
// project is exact; there is no floating point anywhere.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

    std::string to_string() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> a_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(IntMatrix a);

IntMatrix laplacian(const Graph& g);

// Laplacian with the row and column of `removed` (a 1-based label) deleted.
IntMatrix reduced_laplacian(const Graph& g, int removed);

}  // namespace iwg

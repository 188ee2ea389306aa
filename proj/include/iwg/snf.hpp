#pragma once

#include <optional>
#include <vector>

#include "iwg/matrix.hpp"

namespace iwg {

struct SnfResult {
    // Diagonal invariants, length min(rows, cols): nonnegative,
    // d[i] | d[i+1], zeros trailing.
    std::vector<mpz_class> diag;
    // Unimodular witnesses with left * A * right == diag(d), present only
    // when requested.
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;
};

// Smith normal form over the integers, the reference path: plain
// arbitrary-precision elimination, no modular reduction anywhere. Pivoting
// picks the nonzero entry of minimal absolute value, ties broken by
// (row, col) lexicographic order. Coefficient growth limits it to small
// matrices; large cover Laplacians go through snf_diagonal_modular.
SnfResult smith_normal_form(IntMatrix a, bool with_transforms = false);

// Invariant factors of a square nonsingular matrix, computed with every
// entry kept balanced modulo |det|. Exact: the column lattice contains
// det * Z^n, so shifting entries by multiples of the determinant never
// changes the cokernel. Cross-checked against smith_normal_form by the
// test suite. Throws std::invalid_argument on singular input.
std::vector<mpz_class> snf_diagonal_modular(IntMatrix a);

}  // namespace iwg

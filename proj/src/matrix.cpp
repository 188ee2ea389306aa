#include "iwg/matrix.hpp"

#include <sstream>

#include "iwg/errors.hpp"

namespace iwg {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) out << (j ? " " : "[") << (*this)(i, j);
        out << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw input_error("matmul: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

mpz_class determinant(IntMatrix a) {
    if (a.rows() != a.cols()) throw input_error("determinant: matrix not square");
    const int n = a.rows();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    mpz_class t;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            for (int j = k; j < n; ++j) swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Bareiss step: (a_kk * a_ij - a_ik * a_kj) / prev, exact.
                t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : mpz_class(-a(n - 1, n - 1));
}

IntMatrix laplacian(const Graph& g) {
    const int n = g.vertex_count();
    IntMatrix L(n, n);
    for (int v = 1; v <= n; ++v) L(v - 1, v - 1) = g.degree(v);
    for (const auto& [i, j] : g.edges()) {
        L(i - 1, j - 1) = -1;
        L(j - 1, i - 1) = -1;
    }
    return L;
}

IntMatrix reduced_laplacian(const Graph& g, int removed) {
    const int n = g.vertex_count();
    if (removed < 1 || removed > n)
        throw input_error("reduced_laplacian: vertex " + std::to_string(removed) +
                          " out of range 1.." + std::to_string(n));
    IntMatrix L = laplacian(g);
    IntMatrix R(n - 1, n - 1);
    for (int i = 0, ri = 0; i < n; ++i) {
        if (i == removed - 1) continue;
        for (int j = 0, rj = 0; j < n; ++j) {
            if (j == removed - 1) continue;
            R(ri, rj) = L(i, j);
            ++rj;
        }
        ++ri;
    }
    return R;
}

}  // namespace iwg

#include "iwg/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace iwg {

namespace {

// Shared diagonalization core. With a modulus, every touched entry is
// balanced-reduced into (-modulus/2, modulus/2]; adding multiples of the
// modulus to entries preserves the column lattice whenever the lattice
// contains modulus * Z^n, so the final diagonal still presents it.
// Transforms are only tracked in the pure (modulus == nullptr) mode.
//
// Entries in a row or column are cleared with a single 2x2 unimodular
// transform built from an extended gcd, never with repeated Euclidean
// swap steps; the chains those produce blow coefficients up even on
// small dense matrices.
class Eliminator {
  public:
    Eliminator(IntMatrix& a, std::optional<IntMatrix>& U, std::optional<IntMatrix>& V,
               const mpz_class* modulus)
        : a_(a), U_(U), V_(V), modulus_(modulus), rows_(a.rows()), cols_(a.cols()) {}

    int run() {
        const int rank_bound = std::min(rows_, cols_);
        int t = 0;
        for (; t < rank_bound; ++t) {
            if (!select_pivot(t)) break;
            for (;;) {
                clear_line(t);
                int bad_row = find_nondivisible_row(t);
                if (bad_row < 0) break;
                // fold the offending row into row t; the next clearing
                // pass turns the pivot into a proper divisor of itself
                add_row(t, bad_row);
            }
            if (a_(t, t) < 0) negate_row(t);
        }
        return t;
    }

  private:
    IntMatrix& a_;
    std::optional<IntMatrix>& U_;
    std::optional<IntMatrix>& V_;
    const mpz_class* modulus_;
    const int rows_;
    const int cols_;
    mpz_class q_, g_, u_, v_, w1_, w2_;

    void reduce_entry(mpz_class& x) {
        if (!modulus_ || x == 0) return;
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus_->get_mpz_t());  // 0 <= x < modulus
        w1_ = x * 2;
        if (mpz_cmpabs(w1_.get_mpz_t(), modulus_->get_mpz_t()) > 0) x -= *modulus_;
    }
    void reduce_row(int r, int from_col) {
        if (!modulus_) return;
        for (int j = from_col; j < cols_; ++j) reduce_entry(a_(r, j));
    }
    void reduce_col(int c, int from_row) {
        if (!modulus_) return;
        for (int i = from_row; i < rows_; ++i) reduce_entry(a_(i, c));
    }

    bool select_pivot(int t) {
        int pr = -1, pc = -1;
        // nonzero entry of minimal absolute value, ties broken by
        // (row, col) lexicographic order
        for (int i = t; i < rows_; ++i)
            for (int j = t; j < cols_; ++j) {
                if (a_(i, j) == 0) continue;
                if (pr < 0 || mpz_cmpabs(a_(i, j).get_mpz_t(), a_(pr, pc).get_mpz_t()) < 0) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) return false;
        swap_rows(t, pr);
        swap_cols(t, pc);
        return true;
    }

    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < cols_; ++j) swap(a_(r1, j), a_(r2, j));
        if (U_)
            for (int j = 0; j < rows_; ++j) swap((*U_)(r1, j), (*U_)(r2, j));
    }
    void swap_cols(int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < rows_; ++i) swap(a_(i, c1), a_(i, c2));
        if (V_)
            for (int i = 0; i < cols_; ++i) swap((*V_)(i, c1), (*V_)(i, c2));
    }
    void negate_row(int r) {
        for (int j = 0; j < cols_; ++j) mpz_neg(a_(r, j).get_mpz_t(), a_(r, j).get_mpz_t());
        if (U_)
            for (int j = 0; j < rows_; ++j) mpz_neg((*U_)(r, j).get_mpz_t(), (*U_)(r, j).get_mpz_t());
    }
    void add_row(int r, int k) {
        for (int j = 0; j < cols_; ++j) a_(r, j) += a_(k, j);
        reduce_row(r, 0);
        if (U_)
            for (int j = 0; j < rows_; ++j) (*U_)(r, j) += (*U_)(k, j);
    }

    // row r -= q * row t (q already set); only columns >= t can be nonzero
    void row_sub(int r, int t) {
        for (int j = t; j < cols_; ++j)
            mpz_submul(a_(r, j).get_mpz_t(), q_.get_mpz_t(), a_(t, j).get_mpz_t());
        reduce_row(r, t);
        if (U_)
            for (int j = 0; j < rows_; ++j)
                mpz_submul((*U_)(r, j).get_mpz_t(), q_.get_mpz_t(), (*U_)(t, j).get_mpz_t());
    }
    void col_sub(int c, int t) {
        for (int i = t; i < rows_; ++i)
            mpz_submul(a_(i, c).get_mpz_t(), q_.get_mpz_t(), a_(i, t).get_mpz_t());
        reduce_col(c, t);
        if (V_)
            for (int i = 0; i < cols_; ++i)
                mpz_submul((*V_)(i, c).get_mpz_t(), q_.get_mpz_t(), (*V_)(i, t).get_mpz_t());
    }

    // [row_t; row_i] := [[u, v], [-b/g, p/g]] * [row_t; row_i] where
    // g = u*p + v*b, p = a(t,t), b = a(i,t). Unimodular (det = 1); leaves
    // a(t,t) = g, a(i,t) = 0.
    void gcd_rows(int t, int i) {
        mpz_gcdext(g_.get_mpz_t(), u_.get_mpz_t(), v_.get_mpz_t(), a_(t, t).get_mpz_t(),
                   a_(i, t).get_mpz_t());
        mpz_class p_over_g = a_(t, t) / g_;
        mpz_class b_over_g = a_(i, t) / g_;
        for (int j = t; j < cols_; ++j) {
            w1_ = u_ * a_(t, j) + v_ * a_(i, j);
            w2_ = a_(t, j) * -b_over_g + a_(i, j) * p_over_g;
            a_(t, j) = w1_;
            a_(i, j) = w2_;
        }
        reduce_row(t, t);
        reduce_row(i, t);
        if (U_)
            for (int j = 0; j < rows_; ++j) {
                w1_ = u_ * (*U_)(t, j) + v_ * (*U_)(i, j);
                w2_ = (*U_)(t, j) * -b_over_g + (*U_)(i, j) * p_over_g;
                (*U_)(t, j) = w1_;
                (*U_)(i, j) = w2_;
            }
    }
    void gcd_cols(int t, int j) {
        mpz_gcdext(g_.get_mpz_t(), u_.get_mpz_t(), v_.get_mpz_t(), a_(t, t).get_mpz_t(),
                   a_(t, j).get_mpz_t());
        mpz_class p_over_g = a_(t, t) / g_;
        mpz_class b_over_g = a_(t, j) / g_;
        for (int i = t; i < rows_; ++i) {
            w1_ = u_ * a_(i, t) + v_ * a_(i, j);
            w2_ = a_(i, t) * -b_over_g + a_(i, j) * p_over_g;
            a_(i, t) = w1_;
            a_(i, j) = w2_;
        }
        reduce_col(t, t);
        reduce_col(j, t);
        if (V_)
            for (int i = 0; i < cols_; ++i) {
                w1_ = u_ * (*V_)(i, t) + v_ * (*V_)(i, j);
                w2_ = (*V_)(i, t) * -b_over_g + (*V_)(i, j) * p_over_g;
                (*V_)(i, t) = w1_;
                (*V_)(i, j) = w2_;
            }
    }

    // Zero out column t below the pivot and row t right of it. A gcd
    // transform on columns refills parts of column t, so the passes repeat
    // until the row pass needed no pivot change; the pivot strictly
    // divides its former value on every repeat, so this terminates.
    void clear_line(int t) {
        for (;;) {
            for (int i = t + 1; i < rows_; ++i) {
                if (a_(i, t) == 0) continue;
                if (mpz_divisible_p(a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t())) {
                    mpz_divexact(q_.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                    row_sub(i, t);
                } else {
                    gcd_rows(t, i);
                }
            }
            bool pivot_shrunk = false;
            for (int j = t + 1; j < cols_; ++j) {
                if (a_(t, j) == 0) continue;
                if (mpz_divisible_p(a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
                    mpz_divexact(q_.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                    col_sub(j, t);
                } else {
                    gcd_cols(t, j);
                    pivot_shrunk = true;
                }
            }
            if (!pivot_shrunk) return;
        }
    }

    int find_nondivisible_row(int t) {
        for (int i = t + 1; i < rows_; ++i)
            for (int j = t + 1; j < cols_; ++j)
                if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) return i;
        return -1;
    }
};

}  // namespace

SnfResult smith_normal_form(IntMatrix a, bool with_transforms) {
    const int rank_bound = std::min(a.rows(), a.cols());
    std::optional<IntMatrix> U, V;
    if (with_transforms) {
        U = IntMatrix::identity(a.rows());
        V = IntMatrix::identity(a.cols());
    }
    const int rank = Eliminator(a, U, V, nullptr).run();
    SnfResult result;
    result.diag.resize(rank_bound);
    for (int i = 0; i < rank; ++i) result.diag[i] = a(i, i);
    result.left = std::move(U);
    result.right = std::move(V);
    return result;
}

std::vector<mpz_class> snf_diagonal_modular(IntMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("snf_diagonal_modular: matrix not square");
    const int n = a.rows();
    const mpz_class det = determinant(a);
    if (det == 0) throw std::invalid_argument("snf_diagonal_modular: matrix is singular");
    const mpz_class d = abs(det);

    std::vector<mpz_class> diag(n);
    if (d == 1) {
        for (auto& x : diag) x = 1;
        return diag;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpz_fdiv_r(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), d.get_mpz_t());
            if (mpz_class(a(i, j) * 2) > d) a(i, j) -= d;
        }
    std::optional<IntMatrix> no_u, no_v;
    const int rank = Eliminator(a, no_u, no_v, &d).run();
    // The elimination presented the lattice spanned by the columns plus
    // d*Z^n, so each true invariant factor is the gcd of the diagonal
    // entry with d (positions past the modular rank carry d itself).
    mpz_class product = 1;
    for (int i = 0; i < n; ++i) {
        if (i < rank) {
            mpz_gcd(diag[i].get_mpz_t(), a(i, i).get_mpz_t(), d.get_mpz_t());
        } else {
            diag[i] = d;
        }
        product *= diag[i];
    }
    for (int i = 0; i + 1 < n; ++i)
        if (!mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()))
            throw std::logic_error("snf_diagonal_modular: divisibility chain broken");
    if (product != d) throw std::logic_error("snf_diagonal_modular: factor product differs from the determinant");
    return diag;
}

}  // namespace iwg

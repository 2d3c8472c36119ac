#pragma once

#include <initializer_list>
#include <vector>

#include "symrep/intpoly.hpp"

namespace symrep {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix submatrix(int row0, int col0, int nrows, int ncols) const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator*(const Int& scalar) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& rhs) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// Square integer matrix with symmetry checked at construction.
class SymIntMatrix {
public:
    SymIntMatrix() = default;
    explicit SymIntMatrix(IntMatrix m);

    static SymIntMatrix identity(int n) { return SymIntMatrix(IntMatrix::identity(n)); }
    static SymIntMatrix zero(int n) { return SymIntMatrix(IntMatrix(n, n)); }

    int size() const { return m_.rows(); }
    const IntMatrix& matrix() const { return m_; }
    const Int& at(int i, int j) const { return m_.at(i, j); }
    bool operator==(const SymIntMatrix& rhs) const = default;

private:
    IntMatrix m_;
};

/// Exact product (same as operator*).
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

Int trace(const IntMatrix& m);

/// Determinant by fraction-free Bareiss elimination with row pivoting.
Int det(const IntMatrix& m);

/// Monic characteristic polynomial det(X*I - m) by Faddeev-LeVerrier;
/// every interior division is exact over the integers.
IntPoly charpoly(const IntMatrix& m);
IntPoly charpoly(const SymIntMatrix& m);

/// Leading principal minors D_1, ..., D_n; D_n = det(m).
std::vector<Int> leading_principal_minors(const SymIntMatrix& m);

/// Sylvester's criterion: all leading principal minors positive.
bool is_positive_definite(const SymIntMatrix& m);

/// All eigenvalues nonnegative, decided by the sign pattern of the
/// characteristic polynomial (valid because the spectrum is real).
bool is_positive_semidefinite(const SymIntMatrix& m);

/// [[a, b], [c, d]] from compatible blocks.
IntMatrix block_assemble(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                         const IntMatrix& d);

/// Block-diagonal concatenation.
IntMatrix direct_sum(const std::vector<IntMatrix>& blocks);

/// Evaluates det(Q^t Q) and the sum of squared maximal minors of Q and
/// reports whether they agree (an executable Cauchy-Binet identity).
/// Requires q.rows() >= q.cols().
bool cauchy_binet_check(const IntMatrix& q);

}  // namespace symrep

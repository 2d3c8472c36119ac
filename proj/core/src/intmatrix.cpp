#include "symrep/intmatrix.hpp"

#include <sstream>

namespace symrep {

namespace {

std::string dim_str(const IntMatrix& m) {
    std::ostringstream os;
    os << m.rows() << 'x' << m.cols();
    return os.str();
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("ragged initializer rows");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(int row0, int col0, int nrows, int ncols) const {
    if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_)
        throw DimensionMismatch("submatrix out of range");
    IntMatrix s(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) s.at(i, j) = at(row0 + i, col0 + j);
    return s;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("cannot multiply " + dim_str(*this) + " by " + dim_str(rhs));
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator*(const Int& scalar) const {
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("cannot add " + dim_str(*this) + " and " + dim_str(rhs));
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("cannot subtract " + dim_str(rhs) + " from " + dim_str(*this));
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

SymIntMatrix::SymIntMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw NotSquare();
    if (!m_.is_symmetric()) throw NotSymmetric();
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) { return a * b; }

Int trace(const IntMatrix& m) {
    if (!m.is_square()) throw NotSquare();
    Int t = 0;
    for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw NotSquare();
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntPoly charpoly(const IntMatrix& m) {
    if (!m.is_square()) throw NotSquare();
    int n = m.rows();
    if (n == 0) return IntPoly::constant(1);
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    IntMatrix mk = m;
    c[static_cast<size_t>(n - 1)] = -trace(mk);
    for (int k = 2; k <= n; ++k) {
        IntMatrix shifted = mk;
        const Int& ck = c[static_cast<size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
        mk = m * shifted;
        Int t = trace(mk);
        Int& out = c[static_cast<size_t>(n - k)];
        mpz_divexact_ui(out.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        out = -out;
    }
    return IntPoly(std::move(c));
}

IntPoly charpoly(const SymIntMatrix& m) { return charpoly(m.matrix()); }

std::vector<Int> leading_principal_minors(const SymIntMatrix& m) {
    int n = m.size();
    std::vector<Int> minors;
    minors.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) minors.push_back(det(m.matrix().submatrix(0, 0, k, k)));
    return minors;
}

bool is_positive_definite(const SymIntMatrix& m) {
    for (int k = 1; k <= m.size(); ++k)
        if (det(m.matrix().submatrix(0, 0, k, k)) <= 0) return false;
    return true;
}

bool is_positive_semidefinite(const SymIntMatrix& m) {
    // The spectrum is real, so all eigenvalues are >= 0 exactly when the
    // characteristic polynomial X^n + c_{n-1} X^(n-1) + ... + c_0 has
    // (-1)^(n-i) c_i >= 0 for every i.
    IntPoly p = charpoly(m);
    int n = p.degree();
    for (int i = 0; i < n; ++i) {
        const Int& ci = p.coeff(i);
        if ((n - i) % 2 == 0 ? ci < 0 : ci > 0) return false;
    }
    return true;
}

IntMatrix block_assemble(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                         const IntMatrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        throw DimensionMismatch("incompatible blocks " + dim_str(a) + ", " + dim_str(b) + ", " +
                                dim_str(c) + ", " + dim_str(d));
    IntMatrix out(a.rows() + c.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    for (int i = 0; i < c.rows(); ++i) {
        for (int j = 0; j < c.cols(); ++j) out.at(a.rows() + i, j) = c.at(i, j);
        for (int j = 0; j < d.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = d.at(i, j);
    }
    return out;
}

IntMatrix direct_sum(const std::vector<IntMatrix>& blocks) {
    int rows = 0, cols = 0;
    for (const IntMatrix& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix out(rows, cols);
    int r0 = 0, c0 = 0;
    for (const IntMatrix& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.at(r0 + i, c0 + j) = b.at(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

bool cauchy_binet_check(const IntMatrix& q) {
    int m = q.rows();
    int n = q.cols();
    if (m < n) throw DimensionMismatch("need at least as many rows as columns");
    Int lhs = det(q.transpose() * q);
    Int rhs = 0;
    // enumerate n-element row subsets J in increasing order
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        IntMatrix sub(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sub.at(i, j) = q.at(idx[static_cast<size_t>(i)], j);
        Int d = det(sub);
        rhs += d * d;
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - n + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < n; ++i) idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
    return lhs == rhs;
}

}  // namespace symrep

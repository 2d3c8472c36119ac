#include "symrep/psatz.hpp"

#include <vector>

#include "symrep/foursquare.hpp"

namespace symrep {

namespace {

Int matrix_content(const IntMatrix& m) {
    Int c = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), m.at(i, j).get_mpz_t());
            if (c == 1) return c;
        }
    return c;
}

/// g = square_part^2 * rest with rest kept square-poor: small prime squares
/// and a perfect-square cofactor are recognized; any residual square in
/// `rest` is harmless for correctness.
void split_square_part(const Int& g, Int& square_part, Int& rest) {
    square_part = 1;
    rest = g;
    if (g <= 1) return;
    if (mpz_perfect_square_p(g.get_mpz_t())) {
        mpz_sqrt(square_part.get_mpz_t(), g.get_mpz_t());
        rest = 1;
        return;
    }
    for (long p = 2; p <= 10000 && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > rest) break;  // no square factor can remain below here
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_part *= p;
        if (e % 2 == 1) rest *= p;  // keep the odd power in rest
    }
    Int root;
    if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
        square_part *= root;
        rest = 1;
    }
}

struct Peeled {
    Int scale;                          // S >= 1
    std::vector<std::vector<Int>> rows; // each of length k, S * N = sum row^t row
};

void append_digit_rows(std::vector<std::vector<Int>>& rows, const Int& amount,
                       const std::vector<Int>& direction) {
    FourSquare fs = decompose(amount);
    for (const Int& digit : {fs.a, fs.b, fs.c, fs.d}) {
        if (digit == 0) continue;
        std::vector<Int> row(direction.size());
        for (size_t j = 0; j < direction.size(); ++j) row[j] = digit * direction[j];
        rows.push_back(std::move(row));
    }
}

Peeled peel(const IntMatrix& a) {
    int k = a.rows();
    if (k == 0) return {1, {}};
    const Int& d = a.at(0, 0);
    if (d < 0) throw NotPositiveSemidefinite();

    auto extend = [k](Peeled inner) {
        for (auto& row : inner.rows) row.insert(row.begin(), Int(0));
        (void)k;
        return inner;
    };

    if (d == 0) {
        // a semidefinite matrix with a zero diagonal entry has a zero row there
        for (int j = 0; j < k; ++j)
            if (a.at(0, j) != 0) throw NotPositiveSemidefinite();
        return extend(peel(a.submatrix(1, 1, k - 1, k - 1)));
    }

    bool diagonal_pivot = true;
    for (int j = 1; j < k; ++j)
        if (a.at(0, j) != 0) {
            diagonal_pivot = false;
            break;
        }

    if (diagonal_pivot) {
        // split off the d * e_0 e_0^t summand; no Schur complement needed
        Peeled inner = extend(peel(a.submatrix(1, 1, k - 1, k - 1)));
        std::vector<Int> e0(static_cast<size_t>(k));
        e0[0] = 1;
        Peeled out{inner.scale, {}};
        append_digit_rows(out.rows, inner.scale * d, e0);
        for (auto& row : inner.rows) out.rows.push_back(std::move(row));
        return out;
    }

    // generic pivot: d*a - v^t v has a zero first row/column and stays psd
    std::vector<Int> v(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) v[static_cast<size_t>(j)] = a.at(0, j);
    IntMatrix rest(k - 1, k - 1);
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j)
            rest.at(i - 1, j - 1) = d * a.at(i, j) - a.at(0, i) * a.at(0, j);

    Int s_prime;
    Peeled inner;
    Int g = matrix_content(rest);
    if (g == 0) {  // a was exactly v^t v / d
        s_prime = 1;
        inner = {1, {}};
    } else {
        Int h, g0;
        split_square_part(g, h, g0);
        for (int i = 0; i < k - 1; ++i)
            for (int j = 0; j < k - 1; ++j)
                mpz_divexact(rest.at(i, j).get_mpz_t(), rest.at(i, j).get_mpz_t(), g.get_mpz_t());
        inner = peel(rest);
        // S~ * (rest/g) = q~^t q~  =>  (g0*S~) * rest = (g0*h*q~)^t (g0*h*q~)
        s_prime = g0 * inner.scale;
        Int factor = g0 * h;
        for (auto& row : inner.rows)
            for (Int& entry : row) entry *= factor;
    }

    Peeled out{d * s_prime, {}};
    append_digit_rows(out.rows, s_prime, v);
    for (auto& row : inner.rows) {
        row.insert(row.begin(), Int(0));
        out.rows.push_back(std::move(row));
    }
    return out;
}

IntMatrix rows_to_matrix(const std::vector<std::vector<Int>>& rows, int cols) {
    IntMatrix q(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) q.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    return q;
}

}  // namespace

bool PsatzCertificate::identity_holds() const {
    int n = b.size();
    if (s < 1 || m != q.rows() || q.cols() != n || m > 8 * n) return false;
    return b.matrix() * s == IntMatrix::identity(n) + q.transpose() * q;
}

Int find_scale(const SymIntMatrix& b) {
    if (!is_positive_definite(b)) throw NotPositiveDefinite();
    int n = b.size();
    auto shifted_psd = [&](const Int& t) {
        return is_positive_semidefinite(SymIntMatrix(b.matrix() * t - IntMatrix::identity(n)));
    };
    if (shifted_psd(1)) return 1;
    Int lo = 1;  // known to fail
    Int hi = 2;
    while (!shifted_psd(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        (shifted_psd(mid) ? hi : lo) = mid;
    }
    return hi;
}

std::pair<Int, IntMatrix> peel_gram(const SymIntMatrix& n) {
    Peeled p = peel(n.matrix());
    IntMatrix q = rows_to_matrix(p.rows, n.size());
    if (q.rows() > 4 * n.size() || n.matrix() * p.scale != q.transpose() * q)
        throw InternalCertificateFailure("rank-one peeling produced an invalid decomposition");
    return {p.scale, q};
}

PsatzCertificate certify(const SymIntMatrix& b) {
    Int t = find_scale(b);  // raises NotPositiveDefinite for bad input
    int n = b.size();
    auto [cap_s, q0] = peel_gram(SymIntMatrix(b.matrix() * t - IntMatrix::identity(n)));
    // S*t*b = S*I + q0^t q0; the surplus (S-1)*I becomes four-square rows
    std::vector<std::vector<Int>> rows;
    FourSquare fs = decompose(cap_s - 1);
    for (const Int& digit : {fs.a, fs.b, fs.c, fs.d}) {
        if (digit == 0) continue;
        for (int j = 0; j < n; ++j) {
            std::vector<Int> row(static_cast<size_t>(n));
            row[static_cast<size_t>(j)] = digit;
            rows.push_back(std::move(row));
        }
    }
    for (int i = 0; i < q0.rows(); ++i) {
        std::vector<Int> row(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = q0.at(i, j);
        rows.push_back(std::move(row));
    }
    PsatzCertificate cert{b, cap_s * t, rows_to_matrix(rows, n), static_cast<int>(rows.size())};
    if (!cert.identity_holds())
        throw InternalCertificateFailure("Positivstellensatz certificate failed its own identity");
    return cert;
}

}  // namespace symrep

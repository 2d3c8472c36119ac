#include "symrep/verify.hpp"

#include <exception>
#include <functional>
#include <sstream>

namespace symrep {

namespace {

/// Exact quotient f / g in Z[X]; inexact division means the caller's
/// invariant is broken, so it throws.
IntPoly poly_exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial();
    if (f.is_zero()) return f;
    if (f.degree() < g.degree()) throw InternalCertificateFailure("inexact polynomial division");
    std::vector<Int> q(static_cast<size_t>(f.degree() - g.degree()) + 1);
    IntPoly r = f;
    const Int& lead = g.leading_coefficient();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        if (mpz_divisible_p(r.leading_coefficient().get_mpz_t(), lead.get_mpz_t()) == 0)
            throw InternalCertificateFailure("inexact polynomial division");
        Int c;
        mpz_divexact(c.get_mpz_t(), r.leading_coefficient().get_mpz_t(), lead.get_mpz_t());
        int k = r.degree() - g.degree();
        q[static_cast<size_t>(k)] = c;
        r = r - IntPoly::monomial(k, c) * g;
    }
    if (!r.is_zero()) throw InternalCertificateFailure("inexact polynomial division");
    return IntPoly(std::move(q));
}

std::string ord(int i) { return std::to_string(i + 1); }

}  // namespace

IntPoly charpoly_bareiss(const IntMatrix& m) {
    if (!m.is_square()) throw NotSquare();
    int n = m.rows();
    if (n == 0) return IntPoly::constant(1);
    // X*I - m over Z[X]; the pivots are monic characteristic polynomials of
    // leading submatrices, hence never zero: no pivoting required.
    std::vector<std::vector<IntPoly>> a(static_cast<size_t>(n), std::vector<IntPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntPoly e = IntPoly::constant(-m.at(i, j));
            if (i == j) e = e + IntPoly::monomial(1);
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(e);
        }
    IntPoly prev = IntPoly::constant(1);
    for (int k = 0; k + 1 < n; ++k) {
        auto& ak = a[static_cast<size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            auto& ai = a[static_cast<size_t>(i)];
            for (int j = k + 1; j < n; ++j)
                ai[static_cast<size_t>(j)] = poly_exact_div(
                    ak[static_cast<size_t>(k)] * ai[static_cast<size_t>(j)] -
                        ai[static_cast<size_t>(k)] * ak[static_cast<size_t>(j)],
                    prev);
            ai[static_cast<size_t>(k)] = IntPoly::zero();
        }
        prev = ak[static_cast<size_t>(k)];
    }
    return a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

VerificationReport verify_certificate(const EigenCertificate& cert) {
    VerificationReport report;
    auto finding = [&report](const std::string& name, const std::function<std::pair<bool, std::string>()>& run) {
        Finding f;
        f.name = name;
        try {
            auto [pass, detail] = run();
            f.pass = pass;
            f.detail = detail;
        } catch (const std::exception& e) {
            f.pass = false;
            f.detail = std::string("check aborted: ") + e.what();
        }
        report.findings.push_back(std::move(f));
    };

    finding("symmetric", [&]() -> std::pair<bool, std::string> {
        if (!cert.m_matrix.is_square()) return {false, "M is not square"};
        if (!cert.m_matrix.is_symmetric()) return {false, "M differs from its transpose"};
        return {true, "M equals its transpose"};
    });

    finding("psatz_identity", [&]() -> std::pair<bool, std::string> {
        if (cert.parts.empty()) return {false, "certificate carries no component data"};
        for (size_t i = 0; i < cert.parts.size(); ++i) {
            const StrictPart& part = cert.parts[i];
            const PsatzCertificate& ps = part.psatz;
            int n = ps.b.size();
            if (ps.s < 1) return {false, "component " + ord(static_cast<int>(i)) + ": scale s < 1"};
            if (ps.q.cols() != n || ps.m != ps.q.rows())
                return {false, "component " + ord(static_cast<int>(i)) + ": Q shape disagrees with m, n"};
            if (ps.m > 8 * n)
                return {false, "component " + ord(static_cast<int>(i)) + ": m exceeds the 8n bound"};
            if (ps.b.matrix() * ps.s != IntMatrix::identity(n) + ps.q.transpose() * ps.q)
                return {false, "component " + ord(static_cast<int>(i)) + ": s*B != I + Q^t*Q"};
        }
        return {true, "s*B = I + Q^t*Q with m <= 8n in every component"};
    });

    finding("intertwine", [&]() -> std::pair<bool, std::string> {
        if (cert.parts.empty()) return {false, "certificate carries no component data"};
        for (size_t i = 0; i < cert.parts.size(); ++i) {
            const StrictPart& part = cert.parts[i];
            const IntMatrix& c = part.c.matrix;
            const IntMatrix& b = part.b.matrix.matrix();
            if (c * b != b * c.transpose())
                return {false, "component " + ord(static_cast<int>(i)) + ": C*B != B*C^t"};
        }
        return {true, "C*B = B*C^t in every component"};
    });

    finding("divides", [&]() -> std::pair<bool, std::string> {
        IntPoly p = charpoly_bareiss(cert.m_matrix);
        if (!poly_divrem(p, cert.f).second.is_zero())
            return {false, cert.f.to_pretty_string() + " does not divide charpoly(M)"};
        return {true, cert.f.to_pretty_string() + " divides charpoly(M)"};
    });

    finding("size_bound", [&]() -> std::pair<bool, std::string> {
        std::ostringstream os;
        if (cert.n != cert.f.degree()) return {false, "declared degree disagrees with f"};
        if (cert.m_matrix.rows() != cert.size || cert.m_matrix.cols() != cert.size) {
            os << "M is " << cert.m_matrix.rows() << "x" << cert.m_matrix.cols()
               << " but the declared size is " << cert.size;
            return {false, os.str()};
        }
        if (cert.size > 9 * cert.n) {
            os << "size " << cert.size << " exceeds 9n = " << 9 * cert.n;
            return {false, os.str()};
        }
        os << "size " << cert.size << " <= " << 9 * cert.n;
        return {true, os.str()};
    });

    report.passed = true;
    for (const Finding& f : report.findings) report.passed = report.passed && f.pass;
    return report;
}

OracleResult brute_force_min_size(const IntPoly& f, int max_size, int max_entry,
                                  unsigned long long budget) {
    if (!f.is_monic() || f.degree() < 1) throw NotMonic("the oracle needs a monic polynomial of degree >= 1");
    if (max_size < 1 || max_entry < 0) throw BoundsTooLarge("bounds must be positive");

    Int estimate = 0;
    Int values = 2 * Int(max_entry) + 1;
    for (int r = 1; r <= max_size; ++r) {
        Int count;
        mpz_pow_ui(count.get_mpz_t(), values.get_mpz_t(), static_cast<unsigned long>(r * (r + 1) / 2));
        estimate += count;
    }
    Int budget_z(static_cast<unsigned long>(budget));
    if (estimate > budget_z)
        throw BoundsTooLarge("estimated " + estimate.get_str() + " candidates exceeds the budget of " +
                             budget_z.get_str());

    OracleResult result;
    result.f = f;
    result.max_size = max_size;
    result.max_entry = max_entry;

    // entry values in canonical order 0, 1, -1, 2, -2, ...
    std::vector<long> vals;
    vals.push_back(0);
    for (long v = 1; v <= max_entry; ++v) {
        vals.push_back(v);
        vals.push_back(-v);
    }

    for (int r = 1; r <= max_size; ++r) {
        if (r < f.degree()) continue;  // charpoly has degree r; divisibility is impossible
        int slots = r * (r + 1) / 2;
        std::vector<int> si(static_cast<size_t>(slots));
        std::vector<int> sj(static_cast<size_t>(slots));
        {
            int s = 0;
            for (int i = 0; i < r; ++i)
                for (int j = i; j < r; ++j, ++s) {
                    si[static_cast<size_t>(s)] = i;
                    sj[static_cast<size_t>(s)] = j;
                }
        }
        std::vector<size_t> odo(static_cast<size_t>(slots), 0);
        IntMatrix m(r, r);
        while (true) {
            for (int s = 0; s < slots; ++s) {
                long v = vals[odo[static_cast<size_t>(s)]];
                m.at(si[static_cast<size_t>(s)], sj[static_cast<size_t>(s)]) = v;
                m.at(sj[static_cast<size_t>(s)], si[static_cast<size_t>(s)]) = v;
            }
            if (poly_divrem(charpoly(m), f).second.is_zero()) {
                result.min_size_found = r;
                result.witness = SymIntMatrix(m);
                return result;
            }
            // odometer: last slot runs fastest so earlier slots stay most
            // significant and the first hit is the canonical least witness
            int pos = slots - 1;
            while (pos >= 0 && odo[static_cast<size_t>(pos)] + 1 == vals.size()) {
                odo[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++odo[static_cast<size_t>(pos)];
        }
    }
    return result;
}

}  // namespace symrep

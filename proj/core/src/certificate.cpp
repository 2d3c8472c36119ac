#include "symrep/certificate.hpp"

namespace symrep {

namespace {

/// All construction data for one strict factor, with every structural
/// identity re-checked; a failed check is a defect, not an input error.
StrictPart build_part(const IntPoly& g) {
    StrictPart part;
    part.g = g;
    part.c = companion(g);
    part.b = bezout_ffprime(g);
    part.psatz = certify(part.b.matrix);

    const int n = part.c.n;
    const int m = part.psatz.m;
    const IntMatrix& c = part.c.matrix;
    const IntMatrix& q = part.psatz.q;
    IntMatrix ct = c.transpose();
    IntMatrix qt = q.transpose();
    IntMatrix qct = q * ct;
    IntMatrix block = block_assemble(c - qt * qct, c * qt, qct, IntMatrix(m, m));

    if (!block.is_symmetric())
        throw InternalCertificateFailure("assembled matrix is not symmetric for " + g.to_pretty_string());
    part.block = SymIntMatrix(block);

    if (c * part.b.matrix.matrix() != part.b.matrix.matrix() * ct)
        throw InternalCertificateFailure("companion/Bezout intertwining failed for " + g.to_pretty_string());

    if (!poly_divrem(charpoly(block), g).second.is_zero())
        throw InternalCertificateFailure("characteristic polynomial not divisible by " + g.to_pretty_string());

    if (m > 8 * n)
        throw InternalCertificateFailure("certificate row count exceeds the 8n bound for " + g.to_pretty_string());

    // similarity replay: q_prime * block = m_prime * q_prime with unimodular
    // q_prime = [[I, Q^t], [0, I]] and block-triangular m_prime
    part.q_prime = block_assemble(IntMatrix::identity(n), qt, IntMatrix(m, n), IntMatrix::identity(m));
    part.m_prime = block_assemble(c, IntMatrix(n, m), qct, -(qct * qt));
    if (part.q_prime * block != part.m_prime * part.q_prime)
        throw InternalCertificateFailure("similarity replay failed for " + g.to_pretty_string());

    return part;
}

CheckRecord checks_for(const EigenCertificate& cert) {
    // build_part enforced every identity per block already; record the
    // outcomes of the whole-matrix checks
    CheckRecord r;
    r.symmetric = cert.m_matrix.is_symmetric();
    r.divides = poly_divrem(charpoly(cert.m_matrix), cert.f).second.is_zero();
    r.size_bound = cert.size == cert.m_matrix.rows() && cert.size <= 9 * cert.n;
    r.intertwine = true;
    r.similarity = true;
    return r;
}

}  // namespace

EigenCertificate build_strict(const IntPoly& f) {
    if (!is_strict_real_zero(f))
        throw NotStrictRealZero(f.to_pretty_string() + " is not real-rooted and squarefree");
    EigenCertificate cert;
    cert.f = f;
    cert.n = f.degree();
    cert.parts.push_back(build_part(f));
    cert.m_matrix = cert.parts.front().block.matrix();
    cert.size = cert.m_matrix.rows();
    cert.checks = checks_for(cert);
    if (!cert.checks.all()) throw InternalCertificateFailure("certificate checks failed for " + f.to_pretty_string());
    return cert;
}

EigenCertificate build_any(const IntPoly& f) {
    if (!is_real_zero(f)) throw NotRealZero(f.to_pretty_string() + " is not real-rooted");
    EigenCertificate cert;
    cert.f = f;
    cert.n = f.degree();
    std::vector<IntMatrix> blocks;
    for (const auto& [factor, multiplicity] : squarefree_decompose(f).parts) {
        StrictPart part = build_part(factor);
        part.multiplicity = multiplicity;
        for (int i = 0; i < multiplicity; ++i) blocks.push_back(part.block.matrix());
        cert.parts.push_back(std::move(part));
    }
    cert.m_matrix = direct_sum(blocks);
    cert.size = cert.m_matrix.rows();
    cert.checks = checks_for(cert);
    if (!cert.checks.all()) throw InternalCertificateFailure("certificate checks failed for " + f.to_pretty_string());
    return cert;
}

}  // namespace symrep

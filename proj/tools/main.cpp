#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "symrep/certificate.hpp"
#include "symrep/json_io.hpp"
#include "symrep/verify.hpp"

namespace {

using symrep::Int;
using symrep::IntPoly;

struct Options {
    std::string poly;
    std::string input;
    std::string output;
    bool json = false;
    bool allow_multiplicities = false;
    int max_size = 3;
    int max_entry = 2;
    unsigned long long budget = symrep::kDefaultOracleBudget;
};

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output_path);
    if (!out) {
        std::cerr << "error: cannot write " << output_path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

std::string matrix_text(const symrep::IntMatrix& m, const std::string& indent) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j).get_str();
        }
        os << "]\n";
    }
    return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

IntPoly squarefree_part(const IntPoly& f) {
    IntPoly g = symrep::poly_gcd(f, symrep::derivative(f));
    return g.is_constant() ? f : symrep::poly_divrem(f, g).first;
}

int run_certify(const Options& opt) {
    IntPoly f;
    try {
        f = IntPoly::from_string(opt.poly);
    } catch (const symrep::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!f.is_monic() || f.degree() < 1) {
        std::cerr << "error: polynomial must be monic of degree >= 1 (leading coefficient 1)\n";
        return 2;
    }

    bool strict = symrep::is_strict_real_zero(f);
    if (!strict) {
        IntPoly g = squarefree_part(f);
        int real_roots = symrep::sturm_distinct_real_roots(g);
        if (real_roots != g.degree()) {
            std::cerr << "error: not a real zero polynomial: " << real_roots
                      << " distinct real roots where " << g.degree()
                      << " required (Sturm count on the squarefree part " << g.to_pretty_string()
                      << ")\n";
            return 3;
        }
        if (!opt.allow_multiplicities) {
            std::cerr << "error: " << f.to_pretty_string()
                      << " is real-rooted but has repeated roots; rerun with --allow-multiplicities\n";
            return 4;
        }
    }

    symrep::EigenCertificate cert;
    try {
        cert = strict ? symrep::build_strict(f) : symrep::build_any(f);
    } catch (const symrep::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }

    // size diagnostics (certificate integers can grow; make that visible)
    size_t s_bits = 0, q_bits = 0;
    for (const symrep::StrictPart& part : cert.parts) {
        s_bits = std::max(s_bits, mpz_sizeinbase(part.psatz.s.get_mpz_t(), 2));
        const symrep::IntMatrix& q = part.psatz.q;
        for (int i = 0; i < q.rows(); ++i)
            for (int j = 0; j < q.cols(); ++j)
                q_bits = std::max(q_bits, mpz_sizeinbase(q.at(i, j).get_mpz_t(), 2));
    }
    std::cerr << "certificate for " << f.to_pretty_string() << ": matrix size " << cert.size
              << " (bound " << 9 * cert.n << "), scale bits " << s_bits << ", max |Q| entry bits "
              << (cert.parts.empty() ? 0 : q_bits) << "\n";

    if (opt.json) return emit(symrep::certificate_to_json(cert).dump(2) + "\n", opt.output);

    std::ostringstream os;
    os << "f = " << f.to_pretty_string() << "  (degree " << cert.n << ")\n";
    os << "matrix size = " << cert.size << "  (bound " << 9 * cert.n << ")\n";
    for (const symrep::StrictPart& part : cert.parts) {
        os << "component " << part.g.to_pretty_string() << " x" << part.multiplicity
           << ": s = " << part.psatz.s.get_str() << ", m = " << part.psatz.m << "\n";
    }
    os << "M =\n" << matrix_text(cert.m_matrix, "  ");
    os << "checks: symmetric=" << yes_no(cert.checks.symmetric) << " divides=" << yes_no(cert.checks.divides)
       << " size_bound=" << yes_no(cert.checks.size_bound) << " intertwine=" << yes_no(cert.checks.intertwine)
       << " similarity=" << yes_no(cert.checks.similarity) << "\n";
    return emit(os.str(), opt.output);
}

int run_check(const Options& opt) {
    std::ifstream in(opt.input);
    if (!in) {
        std::cerr << "error: cannot read " << opt.input << "\n";
        return 2;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    symrep::Json j = symrep::Json::parse(buffer.str(), nullptr, false);
    if (j.is_discarded()) {
        std::cerr << "error: " << opt.input << " is not valid JSON\n";
        return 2;
    }
    symrep::EigenCertificate cert;
    try {
        cert = symrep::certificate_from_json(j);
    } catch (const symrep::Error& e) {
        std::cerr << "error: malformed certificate: " << e.what() << "\n";
        return 2;
    }
    symrep::VerificationReport report = symrep::verify_certificate(cert);
    if (opt.json) {
        int rc = emit(symrep::report_to_json(report).dump(2) + "\n", opt.output);
        if (rc != 0) return rc;
    } else {
        std::ostringstream os;
        for (const symrep::Finding& f : report.findings)
            os << (f.pass ? "PASS" : "FAIL") << " " << f.name << ": " << f.detail << "\n";
        os << (report.passed ? "certificate verified\n" : "certificate rejected\n");
        int rc = emit(os.str(), opt.output);
        if (rc != 0) return rc;
    }
    return report.passed ? 0 : 1;
}

int run_oracle(const Options& opt) {
    IntPoly f;
    try {
        f = IntPoly::from_string(opt.poly);
    } catch (const symrep::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!f.is_monic() || f.degree() < 1) {
        std::cerr << "error: polynomial must be monic of degree >= 1\n";
        return 2;
    }
    symrep::OracleResult result;
    try {
        result = symrep::brute_force_min_size(f, opt.max_size, opt.max_entry, opt.budget);
    } catch (const symrep::BoundsTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    if (opt.json) return emit(symrep::oracle_to_json(result).dump(2) + "\n", opt.output);
    std::ostringstream os;
    os << "f = " << f.to_pretty_string() << "\n";
    if (result.min_size_found) {
        os << "minimal size within bounds: " << *result.min_size_found << "\n";
        os << "witness =\n" << matrix_text(result.witness->matrix(), "  ");
    } else {
        os << "no symmetric matrix of size <= " << opt.max_size << " with entries in [-"
           << opt.max_entry << ", " << opt.max_entry << "] works\n";
    }
    return emit(os.str(), opt.output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symrep: symmetric integer matrix realizations of real-rooted monic polynomials"};
    app.require_subcommand(1);
    Options opt;

    const char* poly_help = "Comma-separated integer coefficients, constant term first"
                            " (\"-1,-1,1\" is X^2 - X - 1)";

    CLI::App* certify = app.add_subcommand(
        "certify", "Build a symmetric matrix of size <= 9n whose characteristic polynomial the input divides");
    certify->add_option("--poly", opt.poly, poly_help)->required();
    certify->add_flag("--json", opt.json, "Emit the certificate bundle as JSON");
    certify->add_flag("--allow-multiplicities", opt.allow_multiplicities,
                      "Accept real-rooted inputs with repeated roots (direct-sum construction)");
    certify->add_option("--output", opt.output, "Write the artifact here instead of stdout");

    CLI::App* check = app.add_subcommand("check", "Verify a certificate bundle produced by certify");
    check->add_option("--input", opt.input, "Path to the JSON bundle")->required();
    check->add_flag("--json", opt.json, "Emit the verification report as JSON");
    check->add_option("--output", opt.output, "Write the report here instead of stdout");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Exhaustively search for the smallest symmetric integer matrix realizing the input");
    oracle->add_option("--poly", opt.poly, poly_help)->required();
    oracle->add_option("--max-size", opt.max_size, "Largest matrix size to try (default 3)");
    oracle->add_option("--max-entry", opt.max_entry, "Entries range over [-max-entry, max-entry] (default 2)");
    oracle->add_option("--budget", opt.budget,
                       "Refuse searches whose candidate-count estimate exceeds this (default 10000000)");
    oracle->add_flag("--json", opt.json, "Emit the search result as JSON");
    oracle->add_option("--output", opt.output, "Write the result here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (certify->parsed()) return run_certify(opt);
    if (check->parsed()) return run_check(opt);
    return run_oracle(opt);
}

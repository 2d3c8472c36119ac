#include "symrep/json_io.hpp"

#include <cctype>

namespace symrep {

namespace {

Int parse_int(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a decimal string");
    const std::string& text = j.get_ref<const std::string&>();
    if (text.empty()) throw ParseError(where + ": empty integer");
    size_t p = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (p == text.size()) throw ParseError(where + ": bad integer '" + text + "'");
    for (size_t i = p; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(where + ": bad integer '" + text + "'");
    return Int(text, 10);
}

int parse_count(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    auto v = j.get<long long>();
    if (v < 0 || v > 1000000) throw ParseError(where + ": " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

IntPoly poly_from(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a coefficient string");
    return IntPoly::from_string(j.get_ref<const std::string&>());
}

Json checks_to_json(const CheckRecord& r) {
    Json j = Json::object();
    j["symmetric"] = r.symmetric;
    j["divides"] = r.divides;
    j["size_bound"] = r.size_bound;
    j["intertwine"] = r.intertwine;
    j["similarity"] = r.similarity;
    return j;
}

CheckRecord checks_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("checks: expected an object");
    CheckRecord r;
    auto read = [&j](const char* key) {
        const Json& v = field(j, key, "checks");
        if (!v.is_boolean()) throw ParseError(std::string("checks.") + key + ": expected a boolean");
        return v.get<bool>();
    };
    r.symmetric = read("symmetric");
    r.divides = read("divides");
    r.size_bound = read("size_bound");
    r.intertwine = read("intertwine");
    r.similarity = read("similarity");
    return r;
}

/// Companion/Bezout/psatz data of one strict component from its JSON form.
StrictPart part_from_json(const Json& j, const IntPoly& g, int multiplicity, const std::string& where) {
    StrictPart part;
    part.g = g;
    part.multiplicity = multiplicity;
    IntMatrix c = matrix_from_json(field(j, "C", where));
    if (!c.is_square() || c.rows() != g.degree()) throw ParseError(where + ": C has the wrong shape");
    part.c = {c.rows(), std::move(c)};
    IntMatrix b = matrix_from_json(field(j, "B", where));
    if (!b.is_square() || b.rows() != g.degree()) throw ParseError(where + ": B has the wrong shape");
    if (!b.is_symmetric()) throw ParseError(where + ": B is not symmetric");
    SymIntMatrix bsym(std::move(b));
    part.b = {bsym.size(), bsym, g, derivative(g)};
    part.psatz = psatz_from_json(field(j, "psatz", where), bsym);
    return part;
}

}  // namespace

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw ParseError("matrix: expected rows to be arrays");
        cols = static_cast<int>(j[0].size());
    }
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix: ragged rows");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = parse_int(row[static_cast<size_t>(c)], "matrix entry");
    }
    return m;
}

Json psatz_to_json(const PsatzCertificate& cert) {
    Json j = Json::object();
    j["s"] = cert.s.get_str();
    j["Q"] = matrix_to_json(cert.q);
    j["m"] = cert.m;
    j["n"] = cert.b.size();
    return j;
}

PsatzCertificate psatz_from_json(const Json& j, const SymIntMatrix& b) {
    if (!j.is_object()) throw ParseError("psatz: expected an object");
    PsatzCertificate cert;
    cert.b = b;
    cert.s = parse_int(field(j, "s", "psatz"), "psatz.s");
    cert.q = matrix_from_json(field(j, "Q", "psatz"));
    cert.m = parse_count(field(j, "m", "psatz"), "psatz.m");
    int n = parse_count(field(j, "n", "psatz"), "psatz.n");
    if (n != b.size()) throw ParseError("psatz: n disagrees with B");
    if (cert.q.rows() != cert.m) throw ParseError("psatz: Q has " + std::to_string(cert.q.rows()) +
                                                  " rows but m = " + std::to_string(cert.m));
    if (cert.q.rows() == 0)
        cert.q = IntMatrix(0, n);  // an empty row list still needs the right width
    else if (cert.q.cols() != n)
        throw ParseError("psatz: Q has the wrong width");
    return cert;
}

Json certificate_to_json(const EigenCertificate& cert) {
    Json j = Json::object();
    j["f"] = cert.f.to_string();
    j["n"] = cert.n;
    if (cert.is_single_strict()) {
        j["C"] = matrix_to_json(cert.c().matrix);
        j["B"] = matrix_to_json(cert.b().matrix.matrix());
        j["psatz"] = psatz_to_json(cert.psatz());
    } else {
        Json components = Json::array();
        for (const StrictPart& part : cert.parts) {
            Json c = Json::object();
            c["g"] = part.g.to_string();
            c["multiplicity"] = part.multiplicity;
            c["C"] = matrix_to_json(part.c.matrix);
            c["B"] = matrix_to_json(part.b.matrix.matrix());
            c["psatz"] = psatz_to_json(part.psatz);
            components.push_back(std::move(c));
        }
        j["components"] = std::move(components);
    }
    j["M"] = matrix_to_json(cert.m_matrix);
    j["size"] = cert.size;
    j["checks"] = checks_to_json(cert.checks);
    return j;
}

EigenCertificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("certificate: expected an object");
    EigenCertificate cert;
    cert.f = poly_from(field(j, "f", "certificate"), "certificate.f");
    cert.n = parse_count(field(j, "n", "certificate"), "certificate.n");
    if (auto it = j.find("components"); it != j.end()) {
        if (!it->is_array() || it->empty()) throw ParseError("certificate: components must be a nonempty array");
        int index = 0;
        for (const Json& cj : *it) {
            std::string where = "components[" + std::to_string(index) + "]";
            if (!cj.is_object()) throw ParseError(where + ": expected an object");
            IntPoly g = poly_from(field(cj, "g", where), where + ".g");
            int multiplicity = parse_count(field(cj, "multiplicity", where), where + ".multiplicity");
            if (multiplicity < 1) throw ParseError(where + ": multiplicity must be positive");
            cert.parts.push_back(part_from_json(cj, g, multiplicity, where));
            ++index;
        }
    } else {
        cert.parts.push_back(part_from_json(j, cert.f, 1, "certificate"));
    }
    cert.m_matrix = matrix_from_json(field(j, "M", "certificate"));
    cert.size = parse_count(field(j, "size", "certificate"), "certificate.size");
    cert.checks = checks_from_json(field(j, "checks", "certificate"));
    return cert;
}

Json report_to_json(const VerificationReport& report) {
    Json j = Json::object();
    j["passed"] = report.passed;
    Json findings = Json::array();
    for (const Finding& f : report.findings) {
        Json fj = Json::object();
        fj["name"] = f.name;
        fj["pass"] = f.pass;
        fj["detail"] = f.detail;
        findings.push_back(std::move(fj));
    }
    j["findings"] = std::move(findings);
    return j;
}

Json oracle_to_json(const OracleResult& result) {
    Json j = Json::object();
    j["f"] = result.f.to_string();
    j["min_size_found"] = result.min_size_found ? Json(*result.min_size_found) : Json(nullptr);
    j["witness"] = result.witness ? matrix_to_json(result.witness->matrix()) : Json(nullptr);
    Json bounds = Json::object();
    bounds["max_size"] = result.max_size;
    bounds["max_entry"] = result.max_entry;
    j["search_bounds"] = std::move(bounds);
    return j;
}

}  // namespace symrep

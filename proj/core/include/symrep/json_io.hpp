#pragma once

#include <json.hpp>

#include "symrep/certificate.hpp"
#include "symrep/verify.hpp"

namespace symrep {

using Json = nlohmann::ordered_json;

/// Matrices serialize as arrays of arrays of decimal strings; entries can
/// exceed 64 bits, so consumers must not assume native integers.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json psatz_to_json(const PsatzCertificate& cert);
/// The certificate JSON carries s/Q/m/n only; the matrix it certifies is
/// supplied by the surrounding bundle.
PsatzCertificate psatz_from_json(const Json& j, const SymIntMatrix& b);

Json certificate_to_json(const EigenCertificate& cert);
EigenCertificate certificate_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
Json oracle_to_json(const OracleResult& result);

}  // namespace symrep

#pragma once

#include <string>

#include "twistknot/verify.hpp"

namespace twistknot {

// Canonical single-line JSON serialization of a certificate.  Deterministic:
// identical reports render byte-identically.  Integer coefficients that do
// not fit in 64 bits fall back to decimal strings; gcd certificates render
// as exact rational strings.
std::string render_report_json(const ConjectureReport& report);

// Inverse of render_report_json; throws ParseError on malformed input.
// render(parse(render(r))) == render(r) holds for every report.
ConjectureReport parse_report_json(const std::string& text);

}  // namespace twistknot

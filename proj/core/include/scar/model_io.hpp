#pragma once

#include <string>

#include "scar/armodel.hpp"
#include "scar/pipeline.hpp"

namespace scar::io {

/// Parses complex literals like "-8.312-8.569i", "1.5", "2i", "-1+0.5i".
std::complex<double> parse_complex(const std::string& text);
std::string format_complex(std::complex<double> z, int decimals = 4);

/// Model file: JSON with p, coefficients as re/im pairs, forcing, Q, dt,
/// mean offset, and a provenance tag. Doubles round-trip bit-exactly.
void save_model(const armodel::ARModel& model, const std::string& path);
armodel::ARModel load_model(const std::string& path);
std::string model_to_json(const armodel::ARModel& model);
armodel::ARModel model_from_json(const std::string& text);

/// Certificate file: lambda, s_hat, dt_hat, the boundary surface in
/// canonical text form, scored candidates, the oracle report, tool
/// version, and the budgets used. Round-trips bit-exactly.
void save_certificate(const pipeline::SCARCertificate& cert, const std::string& path);
pipeline::SCARCertificate load_certificate(const std::string& path);
std::string certificate_to_json(const pipeline::SCARCertificate& cert);
pipeline::SCARCertificate certificate_from_json(const std::string& text);

}  // namespace scar::io

#include "scar/model_io.hpp"

#include <fstream>
#include <json.hpp>

namespace scar::io {

using nlohmann::json;

std::complex<double> parse_complex(const std::string& text) {
  const std::string s = [&] {
    std::string out;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
  }();
  if (s.empty()) throw Error("parse_complex: empty literal");
  // split at the sign that separates the real and imaginary parts
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }
  const auto parse_part = [](const std::string& part, bool expect_i) -> double {
    std::string body = part;
    const bool has_i = !body.empty() && body.back() == 'i';
    if (has_i != expect_i) throw Error("parse_complex: malformed literal");
    if (has_i) {
      body.pop_back();
      if (body.empty() || body == "+") body = "1";
      if (body == "-") body = "-1";
    }
    size_t used = 0;
    const double v = std::stod(body, &used);
    if (used != body.size()) throw Error("parse_complex: malformed literal");
    return v;
  };
  try {
    if (!s.empty() && s.back() == 'i') {
      if (split == std::string::npos) return {0.0, parse_part(s, true)};
      return {parse_part(s.substr(0, split), false), parse_part(s.substr(split), true)};
    }
    if (split != std::string::npos)
      throw Error("parse_complex: malformed literal '" + text + "'");
    return {parse_part(s, false), 0.0};
  } catch (const std::exception&) {
    throw Error("parse_complex: malformed literal '" + text + "'");
  }
}

std::string format_complex(std::complex<double> z, int decimals) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.*f%+.*fi", decimals, z.real(), decimals, z.imag());
  return buf;
}

namespace {

json complex_to_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::complex<double> complex_from_json(const json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("io: cannot write " + path);
  out << text << "\n";
  if (!out) throw Error("io: write failed for " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io: cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

json interval_to_json(const algebra::Interval& iv) {
  return json{{"lo", algebra::to_string(iv.lo)}, {"hi", algebra::to_string(iv.hi)}};
}

algebra::Interval interval_from_json(const json& j) {
  return algebra::Interval(algebra::rational_from_string(j.at("lo").get<std::string>()),
                           algebra::rational_from_string(j.at("hi").get<std::string>()));
}

}  // namespace

std::string model_to_json(const armodel::ARModel& model) {
  model.validate();
  json j;
  j["p"] = model.p;
  json coeffs = json::array();
  for (const auto& a : model.coeffs) coeffs.push_back(complex_to_json(a));
  j["coeffs"] = coeffs;
  j["f"] = complex_to_json(model.forcing);
  j["Q"] = model.noise_variance;
  j["dt"] = model.dt;
  j["mean_offset"] = complex_to_json(model.mean_offset);
  j["provenance"] = armodel::provenance_tag(model.provenance);
  return j.dump(2);
}

armodel::ARModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("io: malformed model JSON: ") + e.what());
  }
  armodel::ARModel model;
  try {
    model.p = j.at("p").get<int>();
    for (const auto& c : j.at("coeffs")) model.coeffs.push_back(complex_from_json(c));
    model.forcing = complex_from_json(j.at("f"));
    model.noise_variance = j.at("Q").get<double>();
    model.dt = j.at("dt").get<double>();
    model.mean_offset = complex_from_json(j.at("mean_offset"));
    model.provenance = armodel::provenance_from_tag(j.at("provenance").get<std::string>());
  } catch (const json::exception& e) {
    throw Error(std::string("io: model JSON missing field: ") + e.what());
  }
  model.validate();
  return model;
}

void save_model(const armodel::ARModel& model, const std::string& path) {
  write_file(path, model_to_json(model));
}

armodel::ARModel load_model(const std::string& path) { return model_from_json(read_file(path)); }

std::string certificate_to_json(const pipeline::SCARCertificate& cert) {
  json j;
  j["lambda"] = complex_to_json(cert.lambda);
  j["s_hat"] = complex_to_json(cert.s_hat);
  j["dt_hat"] = cert.dt_hat;
  j["r_surface"] = cert.r_surface.to_string();
  json candidates = json::array();
  for (const auto& cand : cert.candidates) {
    json c;
    c["alpha"] = interval_to_json(cand.point.coordinates.at("alpha"));
    c["beta"] = interval_to_json(cand.point.coordinates.at("beta"));
    c["dt_bar"] = cand.dt_bar;
    candidates.push_back(c);
  }
  j["candidates"] = candidates;
  j["oracle_report"] = {{"sampled_dts", cert.oracle_report.sampled_dts},
                        {"max_root_moduli", cert.oracle_report.max_root_moduli},
                        {"boundary_modulus_at_dt_hat", cert.oracle_report.boundary_modulus_at_dt_hat}};
  j["tool_version"] = cert.tool_version;
  j["method"] = cert.method;
  j["budgets"] = {{"symbolic_seconds", cert.budgets.symbolic_seconds},
                  {"symbolic_max_basis", cert.budgets.symbolic_max_basis},
                  {"symbolic_max_terms", cert.budgets.symbolic_max_terms},
                  {"rationalize_denominator", cert.budgets.rationalize_denominator},
                  {"search_lo", cert.budgets.search_lo},
                  {"search_hi", cert.budgets.search_hi},
                  {"search_grid", cert.budgets.search_grid},
                  {"oracle_samples", cert.budgets.oracle_samples}};
  return j.dump(2);
}

pipeline::SCARCertificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("io: malformed certificate JSON: ") + e.what());
  }
  pipeline::SCARCertificate cert;
  try {
    cert.lambda = complex_from_json(j.at("lambda"));
    cert.s_hat = complex_from_json(j.at("s_hat"));
    cert.dt_hat = j.at("dt_hat").get<double>();
    cert.r_surface = algebra::Polynomial::parse(j.at("r_surface").get<std::string>());
    for (const auto& c : j.at("candidates")) {
      pipeline::Candidate cand;
      cand.point.coordinates["alpha"] = interval_from_json(c.at("alpha"));
      cand.point.coordinates["beta"] = interval_from_json(c.at("beta"));
      cand.dt_bar = c.at("dt_bar").get<double>();
      cert.candidates.push_back(std::move(cand));
    }
    const auto& oracle = j.at("oracle_report");
    cert.oracle_report.sampled_dts = oracle.at("sampled_dts").get<std::vector<double>>();
    cert.oracle_report.max_root_moduli = oracle.at("max_root_moduli").get<std::vector<double>>();
    cert.oracle_report.boundary_modulus_at_dt_hat =
        oracle.at("boundary_modulus_at_dt_hat").get<double>();
    cert.tool_version = j.at("tool_version").get<std::string>();
    cert.method = j.at("method").get<std::string>();
    const auto& budgets = j.at("budgets");
    cert.budgets.symbolic_seconds = budgets.at("symbolic_seconds").get<double>();
    cert.budgets.symbolic_max_basis = budgets.at("symbolic_max_basis").get<size_t>();
    cert.budgets.symbolic_max_terms = budgets.at("symbolic_max_terms").get<size_t>();
    cert.budgets.rationalize_denominator = budgets.at("rationalize_denominator").get<unsigned long>();
    cert.budgets.search_lo = budgets.at("search_lo").get<double>();
    cert.budgets.search_hi = budgets.at("search_hi").get<double>();
    cert.budgets.search_grid = budgets.at("search_grid").get<int>();
    cert.budgets.oracle_samples = budgets.at("oracle_samples").get<int>();
  } catch (const json::exception& e) {
    throw Error(std::string("io: certificate JSON missing field: ") + e.what());
  }
  return cert;
}

void save_certificate(const pipeline::SCARCertificate& cert, const std::string& path) {
  write_file(path, certificate_to_json(cert));
}

pipeline::SCARCertificate load_certificate(const std::string& path) {
  return certificate_from_json(read_file(path));
}

}  // namespace scar::io

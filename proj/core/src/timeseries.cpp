#include "scar/timeseries.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "scar/rational.hpp"

namespace scar {

std::complex<double> TimeSeries::mean() const {
  std::complex<double> acc(0.0, 0.0);
  if (values.empty()) return acc;
  for (const auto& v : values) acc += v;
  return acc / static_cast<double>(values.size());
}

double TimeSeries::variance() const {
  if (values.empty()) return 0.0;
  const std::complex<double> m = mean();
  double acc = 0.0;
  for (const auto& v : values) acc += std::norm(v - m);
  return acc / static_cast<double>(values.size());
}

namespace {

constexpr double kDayInMonths = 12.0 / 365.0;

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

double parse_number(const std::string& s, size_t line_no) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("timeseries: malformed number at line " + std::to_string(line_no));
  }
}

// days since civil epoch; standard proleptic Gregorian arithmetic
long days_from_civil(long y, unsigned m, unsigned d) {
  y -= m <= 2;
  const long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long>(doe);
}

long parse_date(const std::string& s, size_t line_no) {
  long y = 0;
  unsigned m = 0, d = 0;
  if (std::sscanf(s.c_str(), "%ld-%u-%u", &y, &m, &d) != 3 || m < 1 || m > 12 || d < 1 || d > 31)
    throw Error("timeseries: malformed date at line " + std::to_string(line_no));
  return days_from_civil(y, m, d);
}

}  // namespace

TimeSeries load_timeseries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("timeseries: cannot open " + path);
  std::string header;
  if (!std::getline(in, header)) throw Error("timeseries: empty file " + path);
  if (!header.empty() && header.back() == '\r') header.pop_back();

  const bool native = header == "t,re,im";
  const bool rmm = header == "date,rmm1,rmm2";
  if (!native && !rmm) throw Error("timeseries: unrecognized header '" + header + "' in " + path);

  TimeSeries out;
  std::vector<double> times;
  std::vector<long> days;
  std::string line;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 3) throw Error("timeseries: malformed row at line " + std::to_string(line_no));
    if (native) {
      times.push_back(parse_number(fields[0], line_no));
      out.values.emplace_back(parse_number(fields[1], line_no), parse_number(fields[2], line_no));
    } else {
      const long day = parse_date(fields[0], line_no);
      if (!days.empty() && day != days.back() + 1) {
        throw Error("timeseries: gap in dates before line " + std::to_string(line_no) + " (" +
                    fields[0] + ")");
      }
      days.push_back(day);
      out.values.emplace_back(parse_number(fields[1], line_no), parse_number(fields[2], line_no));
    }
  }
  if (out.values.empty()) throw Error("timeseries: no samples in " + path);

  if (rmm) {
    out.dt = kDayInMonths;
    out.t0 = 0.0;
    return out;
  }

  out.t0 = times.front();
  if (times.size() == 1) {
    out.dt = 1.0;
    return out;
  }
  out.dt = times[1] - times[0];
  if (!(out.dt > 0)) throw Error("timeseries: nonuniform sampling at line 3");
  for (size_t i = 1; i < times.size(); ++i) {
    const double step = times[i] - times[i - 1];
    if (std::abs(step - out.dt) > 1e-9 * std::max(1.0, std::abs(out.dt)))
      throw Error("timeseries: nonuniform sampling at line " + std::to_string(i + 2));
  }
  return out;
}

void save_timeseries(const TimeSeries& series, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("timeseries: cannot write " + path);
  out << "t,re,im\n";
  char buf[128];
  for (size_t i = 0; i < series.values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", series.time_at(i),
                  series.values[i].real(), series.values[i].imag());
    out << buf;
  }
  if (!out) throw Error("timeseries: write failed for " + path);
}

}  // namespace scar

#include "stokes3d/ingest.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "stokes3d/errors.hpp"

namespace stokes3d {

namespace {

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& field, int line_no) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("field CSV line " + std::to_string(line_no) +
                                ": cannot parse '" + field + "'");
  }
  if (strip(field.substr(pos)) != "")
    throw std::invalid_argument("field CSV line " + std::to_string(line_no) +
                                ": trailing junk in '" + field + "'");
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(strip(field));
  return out;
}

}  // namespace

FieldSampleSeries read_field_csv(std::istream& in) {
  FieldSampleSeries series;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip(line);
    if (body.empty() || body[0] == '#') continue;
    if (!header_seen) {
      const auto fields = split_csv(body);
      if (fields != std::vector<std::string>{"t", "x1", "x2", "x3"})
        throw std::invalid_argument("field CSV line " + std::to_string(line_no) +
                                    ": expected header 't,x1,x2,x3'");
      header_seen = true;
      continue;
    }
    const auto fields = split_csv(body);
    if (fields.size() != 4)
      throw std::invalid_argument("field CSV line " + std::to_string(line_no) +
                                  ": expected 4 comma-separated values");
    series.samples.push_back({parse_real(fields[0], line_no),
                              parse_real(fields[1], line_no),
                              parse_real(fields[2], line_no),
                              parse_real(fields[3], line_no)});
  }
  if (!header_seen)
    throw std::invalid_argument("field CSV: missing header 't,x1,x2,x3'");
  return series;
}

FieldSampleSeries read_field_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open field CSV: " + path);
  return read_field_csv(in);
}

FitResult fit_initial_conditions(const FieldSampleSeries& series) {
  const auto& samples = series.samples;
  if (samples.size() < 4)
    throw IdentifiabilityError("fit requires at least 4 samples");
  if (!(series.omega > 0.0) || !std::isfinite(series.omega))
    throw std::invalid_argument("fit: omega must be positive and finite");

  // Shared 2x2 normal matrix for the basis {cos t', sin t'}.
  double scc = 0.0, sss = 0.0, scs = 0.0;
  for (const FieldSample& s : samples) {
    const double tp = series.omega * s.t;
    const double c = std::cos(tp);
    const double sn = std::sin(tp);
    scc += c * c;
    sss += sn * sn;
    scs += c * sn;
  }
  const double tr = scc + sss;
  const double det = scc * sss - scs * scs;
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  const double mu_max = 0.5 * (tr + disc);
  const double mu_min = 0.5 * (tr - disc);
  const double cond = mu_min > 0.0 ? mu_max / mu_min
                                   : std::numeric_limits<double>::infinity();
  if (!(cond < 1e8))
    throw IdentifiabilityError(
        "sample times cannot separate cosine and sine amplitudes "
        "(normal-equation condition number " +
        std::to_string(cond) + ")");

  FitResult out;
  out.condition_number = cond;
  for (int comp = 0; comp < 3; ++comp) {
    double rc = 0.0, rs = 0.0;
    for (const FieldSample& s : samples) {
      const double tp = series.omega * s.t;
      const double x = comp == 0 ? s.x1 : comp == 1 ? s.x2 : s.x3;
      rc += std::cos(tp) * x;
      rs += std::sin(tp) * x;
    }
    const double a = (sss * rc - scs * rs) / det;
    const double b = (scc * rs - scs * rc) / det;
    out.ic.a[comp] = a;
    out.ic.b[comp] = b;

    double rss = 0.0;
    for (const FieldSample& s : samples) {
      const double tp = series.omega * s.t;
      const double x = comp == 0 ? s.x1 : comp == 1 ? s.x2 : s.x3;
      const double e = x - (a * std::cos(tp) + b * std::sin(tp));
      rss += e * e;
    }
    out.rms_residuals[comp] = std::sqrt(rss / static_cast<double>(samples.size()));
  }
  return out;
}

AnalysisReport analyze(const FieldSampleSeries& series) {
  AnalysisReport out{fit_initial_conditions(series), {}};
  out.geometry = geometry_report(out.fit.ic);
  return out;
}

}  // namespace stokes3d

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stokes3d/ellipse.hpp"

namespace stokes3d {

struct FieldSample {
  double t = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

// Sampled three-component field; omega rescales sample times to the natural
// units used everywhere else (t' = omega t).
struct FieldSampleSeries {
  std::vector<FieldSample> samples;
  double omega = 1.0;
};

// CSV with header `t,x1,x2,x3`; lines starting with `#` and blank lines are
// skipped.  Malformed rows throw std::invalid_argument with a line number.
FieldSampleSeries read_field_csv(std::istream& in);
FieldSampleSeries read_field_csv_file(const std::string& path);

struct FitResult {
  InitialConditions ic;
  Vec3 rms_residuals{};
  double condition_number = 0.0;
};

// Per-component least squares on {cos t', sin t'} via the shared 2x2 normal
// equations.  Throws IdentifiabilityError when the design cannot separate
// the cosine and sine amplitudes.
FitResult fit_initial_conditions(const FieldSampleSeries& series);

struct AnalysisReport {
  FitResult fit;
  GeometryReport geometry;
};

AnalysisReport analyze(const FieldSampleSeries& series);

}  // namespace stokes3d

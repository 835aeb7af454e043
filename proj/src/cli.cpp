#include "stokes3d/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "stokes3d/ellipse.hpp"
#include "stokes3d/errors.hpp"
#include "stokes3d/ingest.hpp"
#include "stokes3d/json_writer.hpp"
#include "stokes3d/polarization.hpp"
#include "stokes3d/verify.hpp"

namespace stokes3d {

namespace {

double parse_real_field(const std::string& text, const std::string& what) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": cannot parse '" + text + "'");
  }
  if (pos != text.size())
    throw std::invalid_argument(what + ": trailing junk in '" + text + "'");
  return v;
}

std::vector<double> parse_tuple(const std::string& text, size_t n,
                                const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(parse_real_field(field, what));
  if (out.size() != n)
    throw std::invalid_argument(what + ": expected " + std::to_string(n) +
                                " comma-separated reals, got '" + text + "'");
  return out;
}

cplx parse_complex(const std::string& text) {
  const auto v = parse_tuple(text, 2, "--alpha");
  return {v[0], v[1]};
}

Vec3 parse_vec3(const std::string& text, const std::string& what) {
  const auto v = parse_tuple(text, 3, what);
  return {v[0], v[1], v[2]};
}

int default_cutoff() {
  const char* env = std::getenv("STOKES3D_DEFAULT_CUTOFF");
  if (env == nullptr || *env == '\0') return 12;
  const double v = parse_real_field(env, "STOKES3D_DEFAULT_CUTOFF");
  const int cutoff = static_cast<int>(v);
  if (v != cutoff || cutoff < 2 || cutoff > 64)
    throw std::invalid_argument(
        "STOKES3D_DEFAULT_CUTOFF must be an integer in 2..64");
  return cutoff;
}

void check_cutoff(int cutoff) {
  if (cutoff < 2 || cutoff > 64)
    throw std::invalid_argument("--cutoff must be in 2..64");
}

json real_array(const double* v, int n) {
  json out = json::array();
  for (int i = 0; i < n; ++i) out.push_back(v[i]);
  return out;
}

json stokes_json(const StokesVector& s) { return real_array(s.s.data(), 9); }

json vec3_json(const Vec3& v) { return real_array(v.data(), 3); }

json mat3_json(const Mat3& m) {
  json out = json::array();
  for (int r = 0; r < 3; ++r) out.push_back(real_array(m.data() + 3 * r, 3));
  return out;
}

json complex_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json cmatrix_json(const ComplexMatrix3& m) {
  json out = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(complex_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

json alpha_json(const CoherentAmplitudes& alpha) {
  json out = json::array();
  for (int m = 1; m <= 3; ++m) out.push_back(complex_json(alpha.amplitude(m)));
  return out;
}

void emit(const json& report, const std::string& out_path, std::ostream& out) {
  const std::string text = write_json(report);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text;
}

void emit_orbit_csv(const InitialConditions& ic, long samples,
                    const std::string& path) {
  if (samples < 4)
    throw std::invalid_argument("--samples must be at least 4");
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open orbit file: " + path);
  f << "t,x1,x2,x3\n";
  for (long k = 0; k < samples; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
                     static_cast<double>(samples);
    const Vec3 x = orbit_position(ic, t);
    f << format_real(t) << ',' << format_real(x[0]) << ',' << format_real(x[1])
      << ',' << format_real(x[2]) << '\n';
  }
}

json report_json(const VerificationReport& r) {
  json out;
  out["name"] = r.name;
  out["tolerance"] = r.tolerance;
  out["max_residual"] = r.max_residual;
  out["checks"] = r.checks;
  out["passed"] = r.passed();
  json fails = json::array();
  for (const PairResidual& f : r.failures) {
    json entry;
    entry["first"] = f.first;
    entry["second"] = f.second;
    entry["residual"] = f.residual;
    fails.push_back(entry);
  }
  out["failures"] = fails;
  return out;
}

// Shared between `ellipse` and `ingest`: the full geometry block in the
// documented key order, with ellipse-only keys left out for degenerate
// orbits instead of carrying NaN.
void append_geometry(json& out, const GeometryReport& g) {
  out["stokes_canonical"] = stokes_json(g.canonical);
  out["stokes_geometric"] = stokes_json(g.geometric);
  out["L"] = vec3_json(g.angular_momentum);
  out["energy"] = g.energy;
  if (g.geometry) {
    out["theta"] = g.geometry->theta;
    out["phi"] = g.geometry->phi;
  }
  json quadric;
  quadric["Q"] = mat3_json(g.quadric.q);
  quadric["c"] = g.quadric.c;
  out["quadric"] = quadric;
  out["runge"] = mat3_json(g.runge.a);
  if (g.geometry) {
    out["eigenvalues"] = real_array(g.geometry->eigenvalues.data(), 3);
    out["semi_axes"] =
        json::array({g.geometry->semi_major, g.geometry->semi_minor});
    out["axes"] = json::array({vec3_json(g.geometry->major_axis),
                               vec3_json(g.geometry->minor_axis),
                               vec3_json(g.geometry->normal)});
  }
  json flags;
  flags["rest"] = g.rest;
  flags["linear"] = g.linear;
  flags["circular"] = g.geometry ? g.geometry->circular : false;
  out["degenerate_flags"] = flags;
}

struct CommonOptions {
  int cutoff = 12;
  double tol = 0.0;
  unsigned long seed = 12345;
  std::string out_path;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"generalized Stokes operators and polarization-ellipse geometry"};
  app.require_subcommand(1);

  CommonOptions common;
  std::vector<std::string> alpha_strs;
  std::string a_str, b_str, file_path, orbit_path;
  double omega = 1.0;
  long samples = 360;
  double reduce_tol = 1e-10;

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the operator-algebra verification suites");
  verify_cmd->add_option("--cutoff", common.cutoff, "per-mode Fock cutoff");
  verify_cmd->add_option("--tol", common.tol, "override every check tolerance");
  verify_cmd->add_option("--seed", common.seed, "seed for the random sweeps");
  verify_cmd->add_option("--out", common.out_path, "write the JSON report here");

  CLI::App* expect_cmd = app.add_subcommand(
      "expect", "coherent-state Stokes expectations vs the closed form");
  expect_cmd->add_option("--alpha", alpha_strs, "three amplitudes, each re,im")
      ->expected(3)
      ->required();
  expect_cmd->add_option("--cutoff", common.cutoff, "per-mode Fock cutoff");
  expect_cmd->add_option("--out", common.out_path, "write the JSON report here");

  CLI::App* ellipse_cmd =
      app.add_subcommand("ellipse", "classical orbit and polarization-ellipse geometry");
  ellipse_cmd->add_option("--a", a_str, "position at t=0 as x,y,z")->required();
  ellipse_cmd->add_option("--b", b_str, "velocity at t=0 as x,y,z")->required();
  ellipse_cmd->add_option("--samples", samples, "orbit CSV sample count");
  ellipse_cmd->add_option("--emit-orbit", orbit_path, "write sampled orbit CSV here");
  ellipse_cmd->add_option("--out", common.out_path, "write the JSON report here");

  CLI::App* polmatrix_cmd =
      app.add_subcommand("polmatrix", "3x3 polarization matrix from coherent amplitudes");
  polmatrix_cmd->add_option("--alpha", alpha_strs, "three amplitudes, each re,im")
      ->expected(3)
      ->required();
  polmatrix_cmd->add_option("--tol", reduce_tol,
                            "third-mode threshold for the 2x2 reduction");
  polmatrix_cmd->add_option("--out", common.out_path, "write the JSON report here");

  CLI::App* ingest_cmd =
      app.add_subcommand("ingest", "fit sampled field data and report its geometry");
  ingest_cmd->add_option("--file", file_path, "CSV of t,x1,x2,x3 samples")->required();
  ingest_cmd->add_option("--omega", omega, "angular frequency rescaling t' = omega t");
  ingest_cmd->add_option("--out", common.out_path, "write the JSON report here");

  try {
    common.cutoff = default_cutoff();

    std::vector<const char*> argv;
    argv.push_back("stokes3d");
    for (const std::string& s : args) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (verify_cmd->parsed()) {
      check_cutoff(common.cutoff);
      VerifySettings settings;
      settings.cutoff = common.cutoff;
      settings.seed = common.seed;
      if (verify_cmd->count("--tol") > 0) {
        if (!(common.tol > 0.0))
          throw std::invalid_argument("--tol must be positive");
        settings.tol_override = common.tol;
      }
      const auto reports = run_all_checks(settings);

      bool all_passed = true;
      json jr;
      jr["command"] = "verify";
      jr["cutoff"] = settings.cutoff;
      jr["seed"] = settings.seed;
      json checks = json::array();
      for (const VerificationReport& r : reports) {
        checks.push_back(report_json(r));
        all_passed = all_passed && r.passed();
      }
      jr["passed"] = all_passed;
      jr["checks"] = checks;
      emit(jr, common.out_path, out);
      return all_passed ? 0 : 1;
    }

    if (expect_cmd->parsed()) {
      check_cutoff(common.cutoff);
      const CoherentAmplitudes alpha(parse_complex(alpha_strs[0]),
                                     parse_complex(alpha_strs[1]),
                                     parse_complex(alpha_strs[2]));
      const FockBasis basis(common.cutoff);
      const StokesVector closed = stokes_closed_form(alpha);
      const StokesExpectation expct = stokes_expectation(alpha, basis);

      json jr;
      jr["command"] = "expect";
      jr["cutoff"] = common.cutoff;
      jr["alpha"] = alpha_json(alpha);
      jr["closed_form"] = stokes_json(closed);
      jr["expectation"] = stokes_json(expct.values);
      std::array<double, 9> abs_err{};
      for (int i = 0; i < 9; ++i)
        abs_err[i] = std::abs(expct.values.s[i] - closed.s[i]);
      jr["abs_error"] = real_array(abs_err.data(), 9);
      jr["truncation_deficit"] = expct.truncation_deficit;
      jr["truncation_warning"] = expct.truncation_warning;
      emit(jr, common.out_path, out);
      return 0;
    }

    if (ellipse_cmd->parsed()) {
      InitialConditions ic{parse_vec3(a_str, "--a"), parse_vec3(b_str, "--b")};
      const GeometryReport report = geometry_report(ic);

      json jr;
      jr["command"] = "ellipse";
      jr["a"] = vec3_json(ic.a);
      jr["b"] = vec3_json(ic.b);
      append_geometry(jr, report);
      if (!orbit_path.empty()) emit_orbit_csv(ic, samples, orbit_path);
      emit(jr, common.out_path, out);
      return 0;
    }

    if (polmatrix_cmd->parsed()) {
      const CoherentAmplitudes alpha(parse_complex(alpha_strs[0]),
                                     parse_complex(alpha_strs[1]),
                                     parse_complex(alpha_strs[2]));
      if (!(reduce_tol > 0.0))
        throw std::invalid_argument("--tol must be positive");
      const StokesVector s = stokes_closed_form(alpha);
      const PolarizationMatrix3 j3d = build_j3d(s);
      const auto eig = hermitian3_eigenvalues(j3d);

      json jr;
      jr["command"] = "polmatrix";
      jr["alpha"] = alpha_json(alpha);
      jr["stokes"] = stokes_json(s);
      jr["J"] = cmatrix_json(j3d);
      jr["eigenvalues"] = real_array(eig.data(), 3);
      try {
        const Matrix2 block = reduce_to_2d(j3d, reduce_tol);
        json reduced = json::array();
        for (int r = 0; r < 2; ++r)
          reduced.push_back(json::array(
              {complex_json(block[r][0]), complex_json(block[r][1])}));
        jr["reduced_2d"] = reduced;
      } catch (const NotZPropagatingError&) {
        // third mode carries weight; the 2x2 block is not reported
      }
      emit(jr, common.out_path, out);
      return 0;
    }

    if (ingest_cmd->parsed()) {
      FieldSampleSeries series = read_field_csv_file(file_path);
      if (!(omega > 0.0))
        throw std::invalid_argument("--omega must be positive");
      series.omega = omega;
      const AnalysisReport analysis = analyze(series);

      json jr;
      jr["command"] = "ingest";
      jr["file"] = file_path;
      jr["omega"] = omega;
      jr["samples"] = static_cast<long long>(series.samples.size());
      jr["a"] = vec3_json(analysis.fit.ic.a);
      jr["b"] = vec3_json(analysis.fit.ic.b);
      append_geometry(jr, analysis.geometry);
      jr["fit_residuals"] = vec3_json(analysis.fit.rms_residuals);
      jr["condition_number"] = analysis.fit.condition_number;
      emit(jr, common.out_path, out);
      return 0;
    }

    err << "no command dispatched\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    err << app.help();
    return 2;
  } catch (const SerializationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const IdentifiabilityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace stokes3d

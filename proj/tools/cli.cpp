#include "cli.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "report.hpp"
#include "spinrep/grassmann.hpp"
#include "suites.hpp"

namespace spinrep::cli {
namespace {

const char* const kPresetPlus = "minkowski+---";
const char* const kPresetMinus = "minkowski-+++";

double parse_real(const std::string& token) {
  std::size_t a = token.find_first_not_of(" \t\n");
  std::size_t b = token.find_last_not_of(" \t\n");
  if (a == std::string::npos) throw ConfigError("empty matrix entry");
  const std::string t = token.substr(a, b - a + 1);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError("not a finite real number: '" + t + "'");
  }
  return v;
}

Mat4r matrix_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read matrix file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError("malformed JSON in " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix")) throw ConfigError(path + ": expected an object with a \"matrix\" key");
  const Json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != kDim) throw ConfigError(path + ": \"matrix\" must have 4 rows");
  Mat4r m;
  for (int i = 0; i < kDim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != kDim) throw ConfigError(path + ": every row must have 4 entries");
    for (int j = 0; j < kDim; ++j) {
      if (!rows[i][j].is_number()) throw ConfigError(path + ": matrix entries must be numbers");
      m(i, j) = rows[i][j].get<double>();
    }
  }
  return m;
}

std::string metric_name(const std::string& spec) {
  return spec == kPresetPlus || spec == kPresetMinus ? spec : "custom";
}

std::string format_coeff(Complex c) {
  char buf[64];
  if (std::abs(c.imag()) < 1e-12) {
    std::snprintf(buf, sizeof buf, "%+.16g", c.real());
  } else {
    std::snprintf(buf, sizeof buf, "(%.16g%+.16gi)", c.real(), c.imag());
  }
  return buf;
}

// "+γ01", "-1", "2γ0 + 0.5·1"; "0" for the zero element.
std::string label_element(const Coeffs16& c, const std::string& symbol) {
  std::string s;
  for (BladeIndex b = 0; b < kBlades; ++b) {
    const Complex x = c[b];
    if (std::abs(x) < 1e-12) continue;
    const std::string label = blade_label(b, symbol, "1");
    std::string term;
    if (std::abs(x.imag()) < 1e-12 && std::abs(std::abs(x.real()) - 1.0) < 1e-12) {
      term = (x.real() > 0 ? "+" : "-") + label;
    } else {
      char buf[64];
      if (std::abs(x.imag()) < 1e-12) {
        std::snprintf(buf, sizeof buf, "%+.4g*", x.real());
      } else {
        std::snprintf(buf, sizeof buf, "+(%.4g%+.4gi)*", x.real(), x.imag());
      }
      term = buf + label;
    }
    s += s.empty() ? term : " " + term;
  }
  return s.empty() ? "0" : s;
}

void print_grid(std::ostream& out, const std::vector<std::string>& heads,
                const std::vector<std::vector<std::string>>& cells) {
  std::size_t w = 0;
  for (const auto& h : heads) w = std::max(w, h.size());
  for (const auto& row : cells) {
    for (const auto& c : row) w = std::max(w, c.size());
  }
  auto pad = [w](const std::string& s) { return s + std::string(w - std::min(w, s.size()) + 1, ' '); };
  out << pad("");
  for (const auto& h : heads) out << pad(h);
  out << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << pad(heads[i]);
    for (const auto& c : cells[i]) out << pad(c);
    out << "\n";
  }
}

Json header(const std::string& command, const RunConfig& cfg, const Metric& g) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["command"] = command;
  j["metric"] = {{"name", metric_name(cfg.metric_spec)}, {"matrix", to_json(g.matrix())}};
  return j;
}

// ---------------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Metric g = parse_metric(cfg.metric_spec);
  const SuiteContext ctx = SuiteContext::make(g, cfg.seed, cfg.tol, cfg.samples);
  Report report = verify(ctx, cfg.suites);
  report.metric_name = metric_name(cfg.metric_spec);
  if (cfg.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
  }
  return report.passed() ? kPass : kCheckFailure;
}

int cmd_lift(const RunConfig& cfg, const std::string& matrix_spec, std::ostream& out) {
  const Metric g = parse_metric(cfg.metric_spec);
  const LinearMap4 a(parse_matrix(matrix_spec));
  const SuiteContext ctx = SuiteContext::make(g, cfg.seed, cfg.tol, cfg.samples);
  if (!ctx.basis) throw ConfigError("lift needs the Dirac matrix representation: " + ctx.basis_error);
  const GammaBasis& basis = *ctx.basis;
  const LiftOptions opts = ctx.lift_options();

  Json j = header("lift", cfg, g);
  j["tolerances"] = {{"isometry", opts.isometry_tol}, {"lift_null", opts.null_tol}, {"lift_gap", opts.gap_tol}};
  j["A"] = to_json(a.matrix());
  const double defect = a.isometry_defect(g);
  j["isometry_defect"] = defect;
  j["isometry"] = defect < opts.isometry_tol;

  std::ostringstream text;
  char buf[160];
  std::snprintf(buf, sizeof buf, "isometry defect ||A^T g A - g||_max = %.3e\n", defect);
  text << buf;

  int code = kPass;
  if (defect < opts.isometry_tol) {
    try {
      const SpinElement s = transforms::spin_lift(a, g, basis, opts);
      Json coeffs = Json::array();
      text << "Sigma in the gamma-blade basis:\n";
      for (BladeIndex b = 0; b < kBlades; ++b) {
        if (std::abs(s.sigma[b]) < 1e-12) continue;
        const std::string label = blade_label(b, "γ", "1");
        coeffs.push_back({{"blade", label}, {"re", s.sigma[b].real()}, {"im", s.sigma[b].imag()}});
        text << "  " << format_coeff(s.sigma[b]) << "  " << label << "\n";
      }
      text << "Sigma as a matrix:\n";
      for (int i = 0; i < kDim; ++i) {
        text << " ";
        for (int k = 0; k < kDim; ++k) {
          std::snprintf(buf, sizeof buf, " %+.6f%+.6fi", s.matrix(i, k).real(), s.matrix(i, k).imag());
          text << buf;
        }
        text << "\n";
      }
      std::snprintf(buf, sizeof buf, "%s, branch (-i)^%d, conjugation residual %.3e\n",
                    s.even ? "even" : "odd", s.branch, s.residual);
      text << buf;
      j["lift"] = {{"sigma", coeffs},
                   {"matrix", to_json(s.matrix)},
                   {"even", s.even},
                   {"branch", s.branch},
                   {"residual", s.residual}};
      code = s.residual < cfg.tol ? kPass : kCheckFailure;
    } catch (const LiftNotFound& e) {
      text << "isometry, but " << e.what() << "\n";
      j["lift"] = nullptr;
      j["error"] = e.what();
      code = kCheckFailure;
    }
  } else {
    const ConjugationSpectrum spec = transforms::conjugation_spectrum(a, basis);
    const bool trivial = spec.null_dimension(opts.null_tol) == 0;
    std::snprintf(buf, sizeof buf, "not an isometry; no lift (null space %s, smallest singular value %.3e)\n",
                  trivial ? "trivial" : "NOT trivial", spec.smallest());
    text << buf;
    j["lift"] = nullptr;
    j["null_space_trivial"] = trivial;
    j["smallest_singular"] = spec.smallest();
    code = kCheckFailure;
  }
  j["status"] = code == kPass ? "pass" : "fail";
  if (cfg.json) {
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return code;
}

int cmd_table(const RunConfig& cfg, const std::string& which, std::ostream& out) {
  const Metric g = parse_metric(cfg.metric_spec);
  Json j = header("table", cfg, g);
  j["table"] = which;

  if (which == "hodge") {
    const auto o = Orientation::Positive;
    const auto s = grassmann::double_hodge_scalars(g, o);
    const auto lt = grassmann::contraction_sign_table(g, o);
    const auto rt = grassmann::right_contraction_sign_table(g, o);
    Json ds = Json::array();
    for (const Complex x : s) ds.push_back(x.real());
    j["double_star"] = ds;
    j["contraction_sign_left"] = lt;
    j["contraction_sign_right"] = rt;
    if (cfg.json) {
      out << j.dump(2) << "\n";
      return kPass;
    }
    char buf[64];
    out << "grade k                        0   1   2   3   4\n";
    out << "star star on grade k        ";
    for (const Complex x : s) {
      std::snprintf(buf, sizeof buf, " %+3.0f", x.real());
      out << buf;
    }
    out << "\ncontraction = s_k * (v vee w)";
    for (int x : lt) {
      std::snprintf(buf, sizeof buf, " %+3d", x);
      out << buf;
    }
    out << "\nright contraction sign       ";
    for (int x : rt) {
      std::snprintf(buf, sizeof buf, " %+3d", x);
      out << buf;
    }
    out << "\n";
    return kPass;
  }

  // clifford or wedge: a 16 × 16 table in the gamma-blade labels.
  const clifford::CliffordAlgebra cl(g);
  std::vector<std::string> heads;
  for (BladeIndex b = 0; b < kBlades; ++b) heads.push_back(blade_label(b, "γ", "1"));
  std::vector<std::vector<std::string>> cells(kBlades, std::vector<std::string>(kBlades));
  for (BladeIndex i = 0; i < kBlades; ++i) {
    for (BladeIndex k = 0; k < kBlades; ++k) {
      const Coeffs16 c =
          which == "clifford"
              ? cl.product(CliffordElement::blade(i), CliffordElement::blade(k)).coeffs()
              : grassmann::wedge(GrassmannElement::blade(i), GrassmannElement::blade(k)).coeffs();
      cells[i][k] = label_element(c, "γ");
    }
  }
  if (cfg.json) {
    j["labels"] = heads;
    j["entries"] = cells;
    out << j.dump(2) << "\n";
  } else {
    print_grid(out, heads, cells);
  }
  return kPass;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_suites) {
  sub->add_option("--metric", cfg.metric_spec,
                  "Preset (minkowski+---, minkowski-+++), 16 comma-separated reals, or a JSON file");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--tol", cfg.tol, "Isometry tolerance and residual bound for lifts")
      ->check(CLI::PositiveNumber);
  sub->add_option("--samples", cfg.samples, "Sample scale for randomised checks")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--json", cfg.json, "Emit a JSON report");
  if (with_suites) {
    std::vector<std::string> names(kSuiteNames.begin(), kSuiteNames.end());
    sub->add_option("--suite", cfg.suites, "Suites to run (repeatable or comma-separated)")
        ->delimiter(',')
        ->check(CLI::IsMember(names));
  }
}

}  // namespace

Mat4r parse_matrix(const std::string& spec) {
  if (spec == kPresetPlus) return Vec4r(1, -1, -1, -1).asDiagonal();
  if (spec == kPresetMinus) return Vec4r(-1, 1, 1, 1).asDiagonal();
  std::error_code ec;
  if (spec.find(',') == std::string::npos && std::filesystem::is_regular_file(spec, ec)) {
    return matrix_from_json_file(spec);
  }
  std::vector<double> values;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) values.push_back(parse_real(token));
  if (values.size() != kBlades) {
    throw ConfigError("expected 16 comma-separated reals, a preset name or a JSON file, got '" + spec + "'");
  }
  Mat4r m;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) m(i, j) = values[i * kDim + j];
  }
  return m;
}

Metric parse_metric(const std::string& spec) {
  const Mat4r m = parse_matrix(spec);
  try {
    const Metric g(m);
    g.require_nondegenerate();
    return g;
  } catch (const DegenerateMetric& e) {
    throw ConfigError(std::string("DegenerateMetric: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grassmann and Clifford algebra checks for spinor transformations", "spinrep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string matrix_spec;
  std::string which;

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  add_common(verify_cmd, cfg, true);

  CLI::App* lift_cmd = app.add_subcommand("lift", "Compute the spin lift of a 4x4 matrix");
  lift_cmd->add_option("matrix", matrix_spec, "16 comma-separated reals (row-major) or a JSON file")
      ->required();
  add_common(lift_cmd, cfg, false);

  CLI::App* table_cmd = app.add_subcommand("table", "Print a product or sign table");
  table_cmd->add_option("which", which, "clifford, wedge or hodge")
      ->required()
      ->check(CLI::IsMember({"clifford", "wedge", "hodge"}));
  add_common(table_cmd, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (lift_cmd->parsed()) return cmd_lift(cfg, matrix_spec, out);
    return cmd_table(cfg, which, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    // Anything else is a failure of the computation, not of the input.
    err << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
}

}  // namespace spinrep::cli

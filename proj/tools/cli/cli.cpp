// Copyright 2026 The Ancilla Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "ancilla/channels.hpp"
#include "ancilla/matrix_io.hpp"
#include "ancilla/norms_opt.hpp"
#include "ancilla/structure.hpp"
#include "json.hpp"

namespace ancilla::cli {

namespace {

constexpr int kFastStarts = 50;

/// Invalid flag combination detected after CLI11 parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OptFlags {
  int starts = 1000;
  double tol = 1e-5;
  int max_iters = 10000;
  std::uint64_t seed = 1;
  bool fast = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--starts", starts, "Number of random starts")->capture_default_str();
    cmd->add_option("--tol", tol, "Stopping tolerance on the objective increase")
        ->capture_default_str();
    cmd->add_option("--max-iters", max_iters, "Iteration cap per start")->capture_default_str();
    cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
    cmd->add_flag("--fast", fast, "Use 50 starts");
  }

  [[nodiscard]] OptConfig config() const {
    if (starts < 1) throw UsageError("--starts must be at least 1");
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");
    if (max_iters < 1) throw UsageError("--max-iters must be at least 1");
    OptConfig cfg;
    cfg.num_starts = fast ? kFastStarts : starts;
    cfg.stop_tol = tol;
    cfg.max_iters = max_iters;
    cfg.seed = seed;
    return cfg;
  }
};

ComplexMatrix load_matrix(const std::string& path) {
  try {
    return read_matrix_file(path);
  } catch (const MatrixParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

std::string fixed(double v) { return fmt::format("{:.10f}", v); }

std::string spectrum(const ComplexMatrix& sigma) {
  std::string s;
  for (Eigen::Index i = 0; i < sigma.rows(); ++i) {
    if (i > 0) s += ' ';
    s += fmt::format("{:.12g}", sigma(i, i).real());
  }
  return s;
}

// -----------------------------------------------------------------------------
// table1

struct Table1Args {
  int n = 2;
  int m_min = 0;
  int m_max = 0;
  std::string out = "-";
  std::string format = "csv";
  bool skip_hermitian = false;
  OptFlags opt;
};

int cmd_table1(const Table1Args& a, std::ostream& out) {
  if (a.n < 2) throw UsageError("--n must be at least 2");
  const int m_min = a.m_min > 0 ? a.m_min : a.n;
  const int m_max = a.m_max > 0 ? a.m_max : a.n * a.n;
  if (m_min < a.n || m_min > m_max || m_max > a.n * a.n) {
    throw UsageError(fmt::format("need {} <= m-min <= m-max <= {}, got m-min={} m-max={}", a.n,
                                 a.n * a.n, m_min, m_max));
  }
  if (a.format != "csv" && a.format != "json") {
    throw UsageError("--format must be csv or json, got " + a.format);
  }
  const OptConfig cfg = a.opt.config();
  const LinearMapRep psi = psi_map(a.n, 2);

  std::vector<TableRow> rows;
  for (int m = m_min; m <= m_max; ++m) {
    const auto t0 = std::chrono::steady_clock::now();
    TableRow row;
    row.n = a.n;
    row.m = m;
    row.value = induced_trace_norm_lb(psi, m, cfg).value;
    if (!a.skip_hermitian) row.value_hermitian = induced_trace_norm_hermitian_lb(psi, m, cfg).value;
    row.starts = cfg.num_starts;
    row.tol = cfg.stop_tol;
    row.seed = cfg.seed;
    row.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    rows.push_back(row);
  }

  const std::string text = a.format == "csv" ? format_csv(rows) : format_json(rows);
  if (a.out == "-") {
    out << text;
  } else {
    std::ofstream file(a.out);
    if (!file || !(file << text)) throw UsageError("cannot write " + a.out);
  }
  return kExitOk;
}

// -----------------------------------------------------------------------------
// discriminate

struct DiscriminateArgs {
  int n = 2;
  int k = 2;
  int m = 1;
  std::optional<double> lambda;
  OptFlags opt;
};

int cmd_discriminate(const DiscriminateArgs& a, std::ostream& out) {
  if (a.n < 2) throw UsageError("--n must be at least 2");
  if (a.k < 1) throw UsageError("--k must be at least 1");
  if (a.m < 1) throw UsageError("--m must be at least 1");
  const double lambda = a.lambda.value_or(werner_holevo_lambda(a.n));
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw UsageError("--lambda must lie in [0, 1]");
  const OptConfig cfg = a.opt.config();
  const double p = discrimination_value(gamma_channel(a.n, a.k, 0), gamma_channel(a.n, a.k, 1),
                                        lambda, a.m, cfg);
  out << fmt::format("n={} k={} m={} lambda={}\n", a.n, a.k, a.m, lambda);
  out << "success_probability=" << fixed(p) << "\n";
  return kExitOk;
}

// -----------------------------------------------------------------------------
// structure

struct StructureArgs {
  std::string input;
  int n = 0;
  int m = 0;
  double tol = kStructureTol;
};

int cmd_structure(const StructureArgs& a, std::ostream& out) {
  const ComplexMatrix x = load_matrix(a.input);
  if (a.n < 1 || a.m < 1) throw UsageError("--n and --m must be positive");
  if (x.rows() != static_cast<Eigen::Index>(a.n) * a.m || x.cols() != x.rows()) {
    throw UsageError(fmt::format("matrix is {}x{}, expected side n*m = {}", x.rows(), x.cols(),
                                 a.n * a.m));
  }
  const double norm = trace_norm(x);
  if (std::abs(norm - 1.0) > 1e-8) {
    throw UsageError(fmt::format("trace norm of input is {:.12g}, expected 1", norm));
  }
  const auto d = extract_structure(x, a.n, a.m, a.tol);
  out << fmt::format("negativity={}\n", fixed(negativity(x, SystemLayout{a.n, a.m}, 1)));
  if (!d) {
    out << "none\n";
    return kExitOk;
  }
  out << "r=" << d->r << "\n";
  out << "sigma=" << spectrum(d->sigma) << "\n";
  out << fmt::format("residual={:.3e}\n", d->residual);
  return kExitOk;
}

// -----------------------------------------------------------------------------
// reversibility

struct ReversibilityArgs {
  std::string choi;
  int dim_in = 0;
  int dim_out = 0;
  int samples = 20;
  std::uint64_t seed = 1;
  double tol = kStructureTol;
};

int cmd_reversibility(const ReversibilityArgs& a, std::ostream& out) {
  const ComplexMatrix j = load_matrix(a.choi);
  if (a.dim_in < 1 || a.dim_out < 1) throw UsageError("--dim-in and --dim-out must be positive");
  if (a.samples < 1) throw UsageError("--samples must be at least 1");
  const Eigen::Index side = static_cast<Eigen::Index>(a.dim_in) * a.dim_out;
  if (j.rows() != side || j.cols() != side) {
    throw UsageError(fmt::format("Choi matrix is {}x{}, expected side dim_in*dim_out = {}",
                                 j.rows(), j.cols(), side));
  }
  const LinearMapRep map(a.dim_in, a.dim_out, j);
  const auto report = reversibility_check(map, a.samples, a.seed, a.tol);
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << "structure=" << yes_no(report.structure.has_value()) << "\n";
  out << "trace_norm_preserving=" << yes_no(report.trace_norm_preserving) << "\n";
  out << "fidelity_preserving=" << yes_no(report.fidelity_preserving) << "\n";
  out << "complement_constant=" << yes_no(report.complement_constant) << "\n";
  out << "left_inverse=" << yes_no(report.left_inverse_verified) << "\n";
  if (report.structure) {
    out << "r=" << report.structure->r << "\n";
    out << "sigma=" << spectrum(report.structure->sigma) << "\n";
    out << fmt::format("left_inverse_error={:.3e}\n", report.left_inverse_error);
  }
  out << "reversible=" << yes_no(report.verdict) << "\n";
  if (!report.consistent()) {
    out << "inconsistent indicators\n";
    return kExitCompute;
  }
  return kExitOk;
}

// -----------------------------------------------------------------------------
// export

struct ExportArgs {
  std::string family;
  int n = 2;
  int k = 1;
  int alpha = 0;
  std::string out;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  if (a.n < 1) throw UsageError("--n must be positive");
  ComplexMatrix m;
  const std::string& f = a.family;
  if (f == "identity") {
    m = identity_map(a.n).choi();
  } else if (f == "transpose") {
    m = transpose_map(a.n).choi();
  } else if (f == "depolarizing") {
    m = completely_depolarizing(a.n).choi();
  } else if (f == "werner-holevo") {
    m = werner_holevo(a.n, a.alpha).choi();
  } else if (f == "gamma") {
    m = gamma_channel(a.n, a.k, a.alpha).choi();
  } else if (f == "psi") {
    m = psi_map(a.n, a.k).choi();
  } else if (f == "max-entangled") {
    m = max_entangled_state(a.n);
  } else {
    throw UsageError("unknown family " + f);
  }
  if (a.out.empty() || a.out == "-") {
    out << serialize_matrix(m);
  } else {
    write_matrix_file(a.out, m);
  }
  return kExitOk;
}

}  // namespace

// -----------------------------------------------------------------------------
// Output formats

std::string format_csv(const std::vector<TableRow>& rows) {
  std::string s = std::string(kTableHeader) + "\n";
  for (const auto& r : rows) {
    s += fmt::format("{},{},{},{},{},{},{},{}\n", r.n, r.m, fixed(r.value),
                     r.value_hermitian ? fixed(*r.value_hermitian) : std::string(), r.starts,
                     r.tol, r.seed, r.wall_time_ms);
  }
  return s;
}

std::string format_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json o;
    o["n"] = r.n;
    o["m"] = r.m;
    o["value"] = r.value;
    o["value_hermitian"] = r.value_hermitian ? nlohmann::json(*r.value_hermitian) : nullptr;
    o["starts"] = r.starts;
    o["tol"] = r.tol;
    o["seed"] = r.seed;
    o["wall_time_ms"] = r.wall_time_ms;
    arr.push_back(std::move(o));
  }
  nlohmann::json doc;
  doc["rows"] = std::move(arr);
  return doc.dump(2) + "\n";
}

// -----------------------------------------------------------------------------
// Entry point

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Channel discrimination, induced trace norms and entanglement structure"};
  app.name("ancilla");
  app.require_subcommand(1);

  Table1Args t1;
  auto* table1 = app.add_subcommand("table1", "Lower bounds on ||Psi_{n,2} ⊗ I_m||_1 per m");
  table1->add_option("--n", t1.n, "Local dimension n")->capture_default_str();
  table1->add_option("--m-min", t1.m_min, "Smallest ancilla dimension (default n)");
  table1->add_option("--m-max", t1.m_max, "Largest ancilla dimension (default n^2)");
  table1->add_option("--out", t1.out, "Output path, - for stdout")->capture_default_str();
  table1->add_option("--format", t1.format, "csv or json")->capture_default_str();
  table1->add_flag("--skip-hermitian", t1.skip_hermitian, "Skip the Hermitian-input column");
  t1.opt.add_to(table1);

  DiscriminateArgs da;
  auto* disc = app.add_subcommand("discriminate",
                                  "Success probability for the Gamma^0 / Gamma^1 channel pair");
  disc->add_option("--n", da.n, "Local dimension n")->capture_default_str();
  disc->add_option("--k", da.k, "Number of copies k")->capture_default_str();
  disc->add_option("--m", da.m, "Ancilla dimension")->capture_default_str();
  disc->add_option("--lambda", da.lambda, "Prior of channel 0 (default (n+1)/(2n))");
  da.opt.add_to(disc);

  StructureArgs sa;
  auto* st = app.add_subcommand("structure", "Decompose an operator on C^n ⊗ C^m");
  st->add_option("--input", sa.input, "Matrix file")->required();
  st->add_option("--n", sa.n, "Dimension of the first factor")->required();
  st->add_option("--m", sa.m, "Dimension of the second factor")->required();
  st->add_option("--tol", sa.tol, "Decision tolerance")->capture_default_str();

  ReversibilityArgs ra;
  auto* rev = app.add_subcommand("reversibility", "Test a channel for a channel left inverse");
  rev->add_option("--choi", ra.choi, "Choi matrix file")->required();
  rev->add_option("--dim-in", ra.dim_in, "Input dimension")->required();
  rev->add_option("--dim-out", ra.dim_out, "Output dimension")->required();
  rev->add_option("--samples", ra.samples, "Samples per sampled indicator")
      ->capture_default_str();
  rev->add_option("--seed", ra.seed, "Sampling seed")->capture_default_str();
  rev->add_option("--tol", ra.tol, "Decision tolerance")->capture_default_str();

  ExportArgs ea;
  auto* exp = app.add_subcommand("export", "Write a Choi matrix or state as a matrix file");
  exp->add_option("--family", ea.family,
                  "identity, transpose, depolarizing, werner-holevo, gamma, psi or max-entangled")
      ->required();
  exp->add_option("--n", ea.n, "Local dimension")->capture_default_str();
  exp->add_option("--k", ea.k, "Copies for gamma and psi")->capture_default_str();
  exp->add_option("--alpha", ea.alpha, "0 or 1 for werner-holevo and gamma")
      ->capture_default_str();
  exp->add_option("--out", ea.out, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*table1) return cmd_table1(t1, out);
    if (*disc) return cmd_discriminate(da, out);
    if (*st) return cmd_structure(sa, out);
    if (*rev) return cmd_reversibility(ra, out);
    if (*exp) return cmd_export(ea, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MatrixParseError& e) {
    err << "error: malformed matrix file: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotChannelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitUsage;
}

}  // namespace ancilla::cli

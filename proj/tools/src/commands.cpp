// Copyright 2026 The maxent Authors
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

#include "maxent_cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "maxent/synthesize.hpp"
#include "maxent/verify.hpp"
#include "maxent_cli/io.hpp"

namespace maxent::cli {
namespace {

using nlohmann::json;

// Tolerance a loaded certificate must meet before it is simulated.
constexpr double kLoadedGramTol = 1e-8;
constexpr double kLoadedPsdTol = 1e-9;
constexpr double kDeltaTol = 1e-6;

std::uint64_t default_seed() {
  const char* env = std::getenv("MAXENT_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error("MAXENT_SEED must be a non-negative integer");
  }
}

void emit_json(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json(path, j);
  }
}

struct CheckArgs {
  std::string gate_path;
  bool adjoint = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<int> restarts;
  std::optional<int> max_iters;
  std::string out_path;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const GateFile file = gate_file_from_json(read_json(a.gate_path));
  const BipartiteGate gate = file.gate();

  FeasibilityOptions opts;
  opts.rng_seed = a.seed ? *a.seed : default_seed();
  if (a.tol) opts.affine_tol = opts.psd_tol = *a.tol;
  if (a.restarts) opts.restarts = *a.restarts;
  if (a.max_iters) opts.max_iters = *a.max_iters;
  opts.validate();

  CertificateFile cert_file;
  cert_file.certificate = a.adjoint ? certify_adjoint(gate, opts) : certify(gate, opts);
  cert_file.dA = gate.dA();
  cert_file.dB = gate.dB();
  cert_file.adjoint = a.adjoint;
  cert_file.tool_version = tool_version();
  cert_file.rng_seed = opts.rng_seed;
  if (cert_file.certificate.status == CertificateStatus::kCertified) {
    cert_file.verification = report(a.adjoint ? gate.adjoint() : gate, cert_file.certificate);
  }

  emit_json(to_json(cert_file), a.out_path, out);
  if (!a.out_path.empty()) {
    const Certificate& c = cert_file.certificate;
    out << "status: " << to_string(c.status) << '\n'
        << "reason: " << c.reason << '\n'
        << std::setprecision(17)
        << "affine_residual: " << c.affine_residual << '\n'
        << "min_eigenvalue: " << c.min_eigenvalue << '\n'
        << "gram_deviation: " << c.gram_deviation << '\n';
    if (cert_file.verification) {
      out << "delta: " << cert_file.verification->delta << '\n';
    }
  }
  return exit_code_for(cert_file.certificate.status);
}

struct VerifyArgs {
  std::string gate_path;
  std::string cert_path;
  std::string json_out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const BipartiteGate loaded = gate_file_from_json(read_json(a.gate_path)).gate();
  const CertificateFile cert_file = certificate_file_from_json(read_json(a.cert_path));
  if (cert_file.dA != loaded.dA() || cert_file.dB != loaded.dB()) {
    throw Error("certificate dimensions (" + std::to_string(cert_file.dA) + ", " +
                std::to_string(cert_file.dB) + ") do not match the gate (" +
                std::to_string(loaded.dA()) + ", " + std::to_string(loaded.dB()) + ")");
  }
  const Certificate& cert = cert_file.certificate;
  if (cert.status != CertificateStatus::kCertified) {
    throw Error("certificate status is " + std::string(to_string(cert.status)) +
                ", only CERTIFIED certificates can be verified");
  }
  const ComplexMatrix& rho = *cert.rho;
  if (rho.rows() != loaded.dB() || rho.cols() != loaded.dB()) {
    throw Error("certificate rho must be dB x dB");
  }
  if (hermiticity_defect(rho) > kHermitianTol) throw Error("certificate rho is not Hermitian");
  if (std::abs(rho.trace() - Complex{1.0, 0.0}) > 1e-8) {
    throw Error("certificate rho does not have trace 1");
  }
  if (hermitian_eig(rho).eigenvalues[0] < -kLoadedPsdTol) {
    throw Error("certificate rho is not positive semidefinite");
  }
  const BipartiteGate gate = cert_file.adjoint ? loaded.adjoint() : loaded;
  const double gram_dev = gram_deviation(extract(gate), rho);
  if (gram_dev > kLoadedGramTol) {
    std::ostringstream msg;
    msg << "certificate rho violates the Gram condition for this gate (deviation "
        << gram_dev << ")";
    throw Error(msg.str());
  }

  const EntanglementReport r = report(gate, cert);
  const double target = 2.0 * std::log2(static_cast<double>(gate.dA()));
  const bool ok = r.delta >= target - kDeltaTol;
  out << std::setprecision(17)
      << "e_in: " << r.e_in << '\n'
      << "e_out: " << r.e_out << '\n'
      << "delta: " << r.delta << '\n'
      << "bjk_gram_deviation: " << r.bjk_gram_deviation << '\n'
      << "target_delta: " << target << '\n'
      << "result: " << (ok ? "PASS" : "FAIL") << '\n';
  if (!a.json_out.empty()) {
    json j = to_json(r);
    j["target_delta"] = target;
    j["pass"] = ok;
    write_json(a.json_out, j);
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

struct ScanArgs {
  int grid = 16;
  double tol = 1e-9;
  std::string json_out;
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  if (a.grid < 2) throw Error("--grid must be at least 2");
  if (!(a.tol > 0.0)) throw Error("--tol must be positive");
  const auto rows = scan_hamiltonian(a.grid, a.tol);

  std::size_t agreed = 0;
  json j = json::array();
  out << "# i j k alpha_x alpha_y alpha_z res_1 res_2 res_3 res_4 normalizations closed_form "
         "certifier agree\n";
  out << std::setprecision(10);
  for (const auto& row : rows) {
    if (row.agree()) ++agreed;
    out << row.grid_index[0] << ' ' << row.grid_index[1] << ' ' << row.grid_index[2] << ' '
        << row.alphas.alpha_x << ' ' << row.alphas.alpha_y << ' ' << row.alphas.alpha_z;
    for (double r : row.residuals) out << ' ' << r;
    out << ' ' << row.normalizations << ' ' << row.closed_form << ' ' << row.certifier << ' '
        << row.agree() << '\n';
    if (!a.json_out.empty()) {
      j.push_back({{"index", row.grid_index},
                   {"alpha", {row.alphas.alpha_x, row.alphas.alpha_y, row.alphas.alpha_z}},
                   {"residuals", row.residuals},
                   {"normalizations", row.normalizations},
                   {"closed_form", row.closed_form},
                   {"certifier", row.certifier}});
    }
  }
  out << "agreement: " << agreed << '/' << rows.size() << '\n';
  if (!a.json_out.empty()) {
    write_json(a.json_out, json{{"grid", a.grid}, {"tol", a.tol}, {"rows", j}});
  }
  return agreed == rows.size() ? kExitOk : kExitScanDisagreement;
}

struct DesignArgs {
  std::string construction;
  int d = 2;
  int dA = 2;
  int dB = 4;
  double ax = 0.0, ay = 0.0, az = 0.0;
  std::optional<std::uint64_t> seed;
  std::string out_path;
};

int cmd_design(const DesignArgs& a, std::ostream& out) {
  json comment{{"construction", a.construction}};
  std::optional<BipartiteGate> gate;
  const auto seed = [&] {
    const std::uint64_t s = a.seed ? *a.seed : default_seed();
    comment["seed"] = s;
    return s;
  };
  if (a.construction == "first-columns") {
    gate = first_columns_gate({seed(), a.dA, a.dB});
  } else if (a.construction == "haar") {
    if (a.dA < 2 || a.dB < a.dA) throw Error("haar: need 2 <= dA <= dB");
    gate = haar_random_gate(a.dA, a.dB, seed());
  } else if (a.construction == "two-qubit") {
    comment["alpha"] = {a.ax, a.ay, a.az};
    gate = BipartiteGate(2, 2, two_qubit_unitary({a.ax, a.ay, a.az}));
  } else if (a.construction == "swap") {
    gate = swap_gate(a.d);
  } else if (a.construction == "dcnot") {
    gate = double_cnot_gate();
  } else if (a.construction == "cnot") {
    gate = cnot_gate();
  } else if (a.construction == "identity") {
    if (a.dA < 2 || a.dB < a.dA) throw Error("identity: need 2 <= dA <= dB");
    gate = identity_gate(a.dA, a.dB);
  } else {
    throw Error("unknown construction '" + a.construction + "'");
  }
  emit_json(to_json(make_gate_file(*gate, std::move(comment))), a.out_path, out);
  return kExitOk;
}

}  // namespace

int exit_code_for(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::kCertified: return kExitOk;
    case CertificateStatus::kInfeasible: return kExitInfeasible;
    case CertificateStatus::kNotFound: return kExitNotFound;
  }
  return kExitInputError;
}

std::vector<ScanRow> scan_hamiltonian(int grid, double tol) {
  FeasibilityOptions opts;
  opts.affine_tol = tol;
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(grid) * grid * grid);
  const double step = std::numbers::pi / grid;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      for (int k = 0; k < grid; ++k) {
        ScanRow row;
        row.grid_index = {i, j, k};
        row.alphas = {i * step, j * step, k * step};
        row.residuals = normalization_residuals(row.alphas);
        row.normalizations = check_normalizations(row.alphas, tol);
        row.closed_form = closed_form_maximal(row.alphas, tol);
        const BipartiteGate gate(2, 2, two_qubit_unitary(row.alphas));
        row.certifier = fast_path_equal_dims(extract(gate), opts).status ==
                        CertificateStatus::kCertified;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify, design and verify maximally entangling bipartite gates", "maxent"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Certify a gate file; prints a certificate");
  check_cmd->add_option("gate", check.gate_path, "Gate file (JSON)")->required();
  check_cmd->add_flag("--adjoint", check.adjoint, "Certify U^dagger (disentangling power)");
  check_cmd->add_option("--seed", check.seed, "RNG seed (default: MAXENT_SEED or 0)");
  check_cmd->add_option("--tol", check.tol, "Affine and PSD tolerance (default 1e-9)");
  check_cmd->add_option("--restarts", check.restarts, "Search restarts (default 16)");
  check_cmd->add_option("--max-iters", check.max_iters, "Iterations per restart (default 5000)");
  check_cmd->add_option("--out", check.out_path, "Write the certificate here instead of stdout");

  DesignArgs design;
  auto* design_cmd = app.add_subcommand("design", "Emit a gate file");
  design_cmd->add_option("construction", design.construction,
                         "first-columns | two-qubit | swap | dcnot | haar | cnot | identity")
      ->required()
      ->check(CLI::IsMember(
          {"first-columns", "two-qubit", "swap", "dcnot", "haar", "cnot", "identity"}));
  design_cmd->add_option("--d", design.d, "Local dimension for swap");
  design_cmd->add_option("--da", design.dA, "Dimension of A");
  design_cmd->add_option("--db", design.dB, "Dimension of B");
  design_cmd->add_option("--ax", design.ax, "alpha_x for two-qubit");
  design_cmd->add_option("--ay", design.ay, "alpha_y for two-qubit");
  design_cmd->add_option("--az", design.az, "alpha_z for two-qubit");
  design_cmd->add_option("--seed", design.seed, "RNG seed (default: MAXENT_SEED or 0)");
  design_cmd->add_option("--out", design.out_path, "Write the gate here instead of stdout");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand(
      "scan-hamiltonian", "Compare the three two-qubit maximality tests on a grid");
  scan_cmd->add_option("--grid", scan.grid, "Points per axis, alpha = k pi / grid");
  scan_cmd->add_option("--tol", scan.tol, "Tolerance for every verdict");
  scan_cmd->add_option("--json-out", scan.json_out, "Also write the table as JSON");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Simulate the optimal input of a certificate");
  verify_cmd->add_option("gate", verify.gate_path, "Gate file (JSON)")->required();
  verify_cmd->add_option("certificate", verify.cert_path, "Certificate file (JSON)")->required();
  verify_cmd->add_option("--json-out", verify.json_out, "Also write the report as JSON");

  std::vector<std::string> argv_storage{"maxent"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check, out);
    if (design_cmd->parsed()) return cmd_design(design, out);
    if (scan_cmd->parsed()) return cmd_scan(scan, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace maxent::cli

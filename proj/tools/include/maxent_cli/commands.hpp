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

#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process.
//
// Exit codes:
//   0  success (CERTIFIED / verified / full scan agreement)
//   1  input error or violated file invariant
//   2  INFEASIBLE
//   3  NOT_FOUND
//   4  verification ran but the entanglement jump fell short
//   5  scan disagreement

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "maxent/certify.hpp"
#include "maxent/hamiltonian2q.hpp"

namespace maxent::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitInfeasible = 2,
  kExitNotFound = 3,
  kExitVerifyFailed = 4,
  kExitScanDisagreement = 5,
};

int exit_code_for(CertificateStatus status);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ScanRow {
  std::array<int, 3> grid_index{};
  TwoQubitAlphas alphas;
  std::array<double, 4> residuals{};
  bool normalizations = false;
  bool closed_form = false;
  bool certifier = false;

  bool agree() const { return normalizations == closed_form && closed_form == certifier; }
};

/// All grid^3 points alpha_j = k_j pi / grid, sorted by grid index.
std::vector<ScanRow> scan_hamiltonian(int grid, double tol);

}  // namespace maxent::cli

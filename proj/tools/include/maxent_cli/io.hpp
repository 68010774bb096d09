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

// JSON gate and certificate files.
//
// Complex numbers are [re, im] pairs and matrices are row-major nested arrays
// rows x cols x 2. Basis labels are 0-based; the designated product-state
// direction of the first-columns construction is basis vector 0 of B.
//
// Gate file:
//   {"dA": 2, "dB": 4, "unitary": [[[re, im], ...], ...],
//    "comment": {"construction": "first-columns", "seed": 7, ...}}
//
// Certificate file:
//   {"status": "CERTIFIED" | "INFEASIBLE" | "NOT_FOUND",
//    "dA": 2, "dB": 4, "adjoint": false,
//    "rho": [[[re, im], ...], ...],             (CERTIFIED only)
//    "affine_residual": ..., "min_eigenvalue": ..., "gram_deviation": ...,
//    "reason": "...", "tool_version": "maxent 0.1.0", "rng_seed": 0,
//    "verification": {"e_in": ..., "e_out": ..., "delta": ...,
//                     "bjk_gram_deviation": ...}}   (optional)

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "maxent/certify.hpp"
#include "maxent/decompose.hpp"
#include "maxent/verify.hpp"

namespace maxent::cli {

inline constexpr double kGateLoadTol = 1e-8;

std::string tool_version();

nlohmann::json matrix_to_json(const ComplexMatrix& m);
/// Throws Error naming `what` when the value is not a rows x cols x 2 array
/// of finite numbers.
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& what);

struct GateFile {
  int dA = 0;
  int dB = 0;
  ComplexMatrix unitary;
  nlohmann::json comment = nlohmann::json::object();

  /// Checks the file invariants and builds the gate; throws Error naming the
  /// first violated invariant.
  BipartiteGate gate() const;
};

nlohmann::json to_json(const GateFile& file);
GateFile gate_file_from_json(const nlohmann::json& j);
GateFile make_gate_file(const BipartiteGate& gate, nlohmann::json comment = nlohmann::json::object());

struct CertificateFile {
  Certificate certificate;
  int dA = 0;
  int dB = 0;
  bool adjoint = false;
  std::string tool_version;
  std::uint64_t rng_seed = 0;
  std::optional<EntanglementReport> verification;
};

nlohmann::json to_json(const CertificateFile& file);
CertificateFile certificate_file_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EntanglementReport& r);

/// Reads and parses a JSON document; throws Error on I/O or syntax errors.
nlohmann::json read_json(const std::string& path);
void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace maxent::cli

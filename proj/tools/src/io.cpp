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

#include "maxent_cli/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#ifndef MAXENT_VERSION
#define MAXENT_VERSION "0.0.0"
#endif

namespace maxent::cli {
namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw Error(what + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw Error(what + ": missing field '" + key + "'");
  return *it;
}

int require_int(const json& j, const char* key, const std::string& what) {
  const json& v = require_field(j, key, what);
  if (!v.is_number_integer()) throw Error(what + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

double require_double(const json& j, const char* key, const std::string& what) {
  const json& v = require_field(j, key, what);
  if (!v.is_number()) throw Error(what + ": field '" + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

std::string tool_version() { return std::string("maxent ") + MAXENT_VERSION; }

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw Error(what + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw Error(what + ": row 0 must be a non-empty array");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw Error(what + ": row " + std::to_string(i) + " must have " + std::to_string(cols) +
                  " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      const json& z = row[k];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw Error(what + ": entry [" + std::to_string(i) + "][" + std::to_string(k) +
                    "] must be a [re, im] pair");
      }
      const double re = z[0].get<double>();
      const double im = z[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw Error(what + ": entry [" + std::to_string(i) + "][" + std::to_string(k) +
                    "] is not finite");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = Complex{re, im};
    }
  }
  return m;
}

BipartiteGate GateFile::gate() const {
  if (dA < 2) throw Error("gate file: dA must be at least 2");
  if (dB < dA) throw Error("gate file: dB must be at least dA");
  const Eigen::Index n = static_cast<Eigen::Index>(dA) * dB;
  if (unitary.rows() != n || unitary.cols() != n) {
    throw Error("gate file: unitary must be (dA*dB) x (dA*dB) = " + std::to_string(n) + " x " +
                std::to_string(n));
  }
  if (unitarity_defect(unitary) > kGateLoadTol) {
    throw Error("gate file: matrix is not unitary within 1e-8");
  }
  return BipartiteGate(dA, dB, unitary, kGateLoadTol);
}

json to_json(const GateFile& file) {
  json j;
  j["dA"] = file.dA;
  j["dB"] = file.dB;
  j["unitary"] = matrix_to_json(file.unitary);
  j["comment"] = file.comment;
  return j;
}

GateFile gate_file_from_json(const json& j) {
  GateFile file;
  file.dA = require_int(j, "dA", "gate file");
  file.dB = require_int(j, "dB", "gate file");
  file.unitary = matrix_from_json(require_field(j, "unitary", "gate file"), "gate file unitary");
  if (const auto it = j.find("comment"); it != j.end()) file.comment = *it;
  file.gate();
  return file;
}

GateFile make_gate_file(const BipartiteGate& gate, json comment) {
  return {gate.dA(), gate.dB(), gate.unitary(), std::move(comment)};
}

json to_json(const EntanglementReport& r) {
  return json{{"e_in", r.e_in},
              {"e_out", r.e_out},
              {"delta", r.delta},
              {"bjk_gram_deviation", r.bjk_gram_deviation}};
}

json to_json(const CertificateFile& file) {
  const Certificate& c = file.certificate;
  json j;
  j["status"] = std::string(to_string(c.status));
  j["dA"] = file.dA;
  j["dB"] = file.dB;
  j["adjoint"] = file.adjoint;
  if (c.rho) j["rho"] = matrix_to_json(*c.rho);
  j["affine_residual"] = c.affine_residual;
  j["min_eigenvalue"] = c.min_eigenvalue;
  j["gram_deviation"] = c.gram_deviation;
  j["reason"] = c.reason;
  j["tool_version"] = file.tool_version;
  j["rng_seed"] = file.rng_seed;
  if (file.verification) j["verification"] = to_json(*file.verification);
  return j;
}

CertificateFile certificate_file_from_json(const json& j) {
  const std::string what = "certificate file";
  CertificateFile file;
  const json& status = require_field(j, "status", what);
  if (!status.is_string()) throw Error(what + ": field 'status' must be a string");
  file.certificate.status = status_from_string(status.get<std::string>());
  file.dA = require_int(j, "dA", what);
  file.dB = require_int(j, "dB", what);
  if (const auto it = j.find("adjoint"); it != j.end()) {
    if (!it->is_boolean()) throw Error(what + ": field 'adjoint' must be a boolean");
    file.adjoint = it->get<bool>();
  }
  if (const auto it = j.find("rho"); it != j.end() && !it->is_null()) {
    file.certificate.rho = matrix_from_json(*it, what + " rho");
  }
  if (file.certificate.status == CertificateStatus::kCertified && !file.certificate.rho) {
    throw Error(what + ": CERTIFIED status requires 'rho'");
  }
  file.certificate.affine_residual = require_double(j, "affine_residual", what);
  file.certificate.min_eigenvalue = require_double(j, "min_eigenvalue", what);
  file.certificate.gram_deviation = require_double(j, "gram_deviation", what);
  if (const auto it = j.find("reason"); it != j.end() && it->is_string()) {
    file.certificate.reason = it->get<std::string>();
  }
  const json& version = require_field(j, "tool_version", what);
  if (!version.is_string()) throw Error(what + ": field 'tool_version' must be a string");
  file.tool_version = version.get<std::string>();
  const json& seed = require_field(j, "rng_seed", what);
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    throw Error(what + ": field 'rng_seed' must be an integer");
  }
  file.rng_seed = seed.get<std::uint64_t>();
  if (const auto it = j.find("verification"); it != j.end() && !it->is_null()) {
    EntanglementReport r;
    r.e_in = require_double(*it, "e_in", what + " verification");
    r.e_out = require_double(*it, "e_out", what + " verification");
    r.delta = require_double(*it, "delta", what + " verification");
    r.bjk_gram_deviation = require_double(*it, "bjk_gram_deviation", what + " verification");
    file.verification = r;
  }
  return file;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace maxent::cli

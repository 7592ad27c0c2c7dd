// Copyright 2026 The superdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "superdiscord/state_io.hpp"

#include <fstream>

namespace superdiscord::cli {
namespace {

Eigen::MatrixXd read_real_matrix(const nlohmann::json& doc, const char* key, int n) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw DomainError(std::string("state file needs an array \"") + key + "\"");
  }
  const auto& rows = doc[key];
  if (static_cast<int>(rows.size()) != n) {
    throw BadDimension(std::string("\"") + key + "\" must have " + std::to_string(n) + " rows");
  }
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw BadDimension(std::string("\"") + key + "\" row " + std::to_string(i) + " must have " +
                         std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_number()) {
        throw DomainError(std::string("\"") + key + "\" entries must be numbers");
      }
      out(i, j) = row[j].get<double>();
    }
  }
  return out;
}

}  // namespace

DensityMatrix state_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw DomainError("state file must hold a JSON object");
  if (!doc.contains("dim_a") || !doc["dim_a"].is_number_integer()) {
    throw DomainError("state file needs an integer \"dim_a\"");
  }
  const int dim_a = doc["dim_a"].get<int>();
  const int dim_b = doc.value("dim_b", 2);
  if (dim_a < 1) throw BadDimension("dim_a must be positive");
  if (dim_b != 2) throw BadDimension("dim_b must be 2");
  const int n = dim_a * dim_b;
  const Eigen::MatrixXd re = read_real_matrix(doc, "re", n);
  const Eigen::MatrixXd im = read_real_matrix(doc, "im", n);
  Matrix m(n, n);
  m.real() = re;
  m.imag() = im;
  return DensityMatrix::validate(m, dim_a, dim_b);
}

nlohmann::json state_to_json(const DensityMatrix& rho) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int i = 0; i < rho.dim(); ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (int j = 0; j < rho.dim(); ++j) {
      re_row.push_back(rho(i, j).real());
      im_row.push_back(rho(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"dim_a", rho.dim_a()}, {"dim_b", rho.dim_b()}, {"re", re}, {"im", im}};
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open state file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("state file " + path + " is not valid JSON: " + e.what());
  }
  return state_from_json(doc);
}

}  // namespace superdiscord::cli

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
#include "superdiscord/output.hpp"

#include <cmath>
#include <cstdio>

namespace superdiscord::cli {
namespace {

void emit(const nlohmann::json& v, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(key).dump() + ": ";
        emit(item, depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        emit(v[i], depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_number(v.get<double>());
      return;
    default:
      out += v.dump();
  }
}

void flatten_into(const std::string& prefix, const nlohmann::json& v,
                  std::vector<std::pair<std::string, nlohmann::json>>& out) {
  if (v.is_object()) {
    for (const auto& [key, item] : v.items()) {
      flatten_into(prefix.empty() ? key : prefix + "_" + key, item, out);
    }
  } else {
    out.emplace_back(prefix, v);
  }
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string dump_json(const nlohmann::json& doc) {
  std::string out;
  emit(doc, 0, out);
  out += "\n";
  return out;
}

std::vector<std::pair<std::string, nlohmann::json>> flatten(const nlohmann::json& object) {
  std::vector<std::pair<std::string, nlohmann::json>> out;
  flatten_into("", object, out);
  return out;
}

std::string csv_field(const nlohmann::json& value) {
  if (value.is_number_float()) {
    const std::string s = format_number(value.get<double>());
    return s.front() == '"' ? s.substr(1, s.size() - 2) : s;
  }
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

}  // namespace superdiscord::cli

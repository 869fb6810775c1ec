// Copyright 2026 The numrad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numrad/matrix_json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "numrad/error.hpp"

namespace numrad {

using nlohmann::json;

ComplexMatrix matrix_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, std::string("matrix json: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::Parse, "matrix json: expected an object");
  auto extent = [&](const char* key) -> std::size_t {
    if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1) {
      throw Error(Errc::Parse, std::string("matrix json: field '") + key +
                                   "' must be a positive integer");
    }
    return doc[key].get<std::size_t>();
  };
  const std::size_t rows = extent("rows");
  const std::size_t cols = extent("cols");
  if (!doc.contains("data") || !doc["data"].is_array()) {
    throw Error(Errc::Parse, "matrix json: field 'data' must be an array");
  }
  const json& data = doc["data"];
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    const json& e = data[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw Error(Errc::Parse, "matrix json: data[" + std::to_string(k) + "] must be [re, im]");
    }
    entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  if (entries.size() != rows * cols) {
    const std::size_t index = std::min(entries.size(), rows * cols);
    throw Error(Errc::Parse, "matrix json: data has " + std::to_string(entries.size()) +
                                 " entries, expected " + std::to_string(rows * cols) +
                                 " (mismatch at index " + std::to_string(index) + ")");
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

std::string matrix_to_json(const ComplexMatrix& m) {
  json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  json data = json::array();
  for (const auto& v : m.data()) data.push_back({v.real(), v.imag()});
  doc["data"] = std::move(data);
  return doc.dump();
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return matrix_from_json(buf.str());
  } catch (const Error& e) {
    throw Error(Errc::Parse, path + ": " + e.detail());
  }
}

}  // namespace numrad

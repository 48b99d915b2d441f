// Copyright 2026 The wittext Authors
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

#include "wittext/serialize.hpp"

namespace wittext {

json to_json(const QuadScalar& x) {
  return json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"d", std::to_string(x.d())}};
}

QuadScalar quad_from_json(const json& j) {
  if (j.is_string()) return parse_quad(j.get<std::string>());
  if (j.is_number_integer()) return QuadScalar(Rational(j.get<long>()));
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "scalar: " + j.dump());
  Rational a = parse_rational(j.at("a").get<std::string>());
  Rational b = j.contains("b") ? parse_rational(j.at("b").get<std::string>()) : Rational(0);
  std::int64_t d = j.contains("d") ? std::stoll(j.at("d").get<std::string>()) : 1;
  if (sgn(b) == 0) return QuadScalar(a);
  return QuadScalar(a, b, d);
}

json to_json(const FieldMatrix& m) {
  json entries = json::array();
  for (const auto& x : m.entries()) entries.push_back(to_json(x));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

FieldMatrix matrix_from_json(const json& j) {
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  std::vector<QuadScalar> entries;
  for (const auto& e : j.at("entries")) entries.push_back(quad_from_json(e));
  return FieldMatrix(rows, cols, std::move(entries));
}

json to_json(const std::vector<QuadScalar>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace wittext

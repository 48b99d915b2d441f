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

#ifndef WITTEXT_SERIALIZE_HPP
#define WITTEXT_SERIALIZE_HPP

#include <json.hpp>

#include "wittext/matrix.hpp"
#include "wittext/quad.hpp"

namespace wittext {

using json = nlohmann::ordered_json;

json to_json(const QuadScalar& x);
QuadScalar quad_from_json(const json& j);

json to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(const json& j);

json to_json(const std::vector<QuadScalar>& v);

}  // namespace wittext

#endif  // WITTEXT_SERIALIZE_HPP

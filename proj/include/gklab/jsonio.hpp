// Copyright 2026 The gklab authors
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

#include <json.hpp>

#include "gklab/ints.hpp"

namespace gklab {

using json = nlohmann::json;

/// Big integers are emitted as plain JSON numbers while they fit exactly in
/// a double (|x| < 2^53), as decimal strings beyond that.
inline json int_to_json(const Int& x) {
    static const Int kLimit = Int(1) << 53;
    if (x > -kLimit && x < kLimit) return json((long long)x);
    return json(x.str());
}

inline Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long long>());
}

inline json rat_to_json(const Rat& r) {
    return json{{"num", int_to_json(numerator(r))}, {"den", int_to_json(denominator(r))}};
}

}  // namespace gklab

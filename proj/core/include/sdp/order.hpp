// Copyright 2026 The sdp Authors.
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

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdp {

/// Exact group order. Direct powers of the matrix groups overflow 64 bits.
using Order = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Order& n) { return n.str(); }
inline Order parse_order(const std::string& text) { return Order(text); }

}  // namespace sdp

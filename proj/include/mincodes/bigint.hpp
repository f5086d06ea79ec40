/*
 * Copyright 2026 The mincodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "mincodes/errors.hpp"

namespace mincodes {

using BigInt = boost::multiprecision::cpp_int;

/// a / b, throwing FormulaError when b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (b == 0) throw FormulaError(std::string(what) + ": division by zero");
  BigInt quot, rem;
  boost::multiprecision::divide_qr(a, b, quot, rem);
  if (rem != 0) {
    throw FormulaError(std::string(what) + ": inexact division " + a.str() + " / " + b.str());
  }
  return quot;
}

inline BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

inline BigInt ipow(std::int64_t base, unsigned exp) { return ipow(BigInt(base), exp); }

}  // namespace mincodes

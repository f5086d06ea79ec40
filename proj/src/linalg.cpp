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

#include "mincodes/linalg.hpp"

#include <algorithm>

#include "mincodes/errors.hpp"

namespace mincodes {

RowEchelon::RowEchelon(Field field, std::size_t cols) : field_(std::move(field)), cols_(cols), scratch_(cols) {}

bool RowEchelon::insert(std::span<const ElemIndex> v) {
  if (v.size() != cols_) throw InvalidArgument("row length does not match column count");
  if (rows_.size() == cols_) return false;
  std::copy(v.begin(), v.end(), scratch_.begin());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const ElemIndex c = scratch_[pivots_[r]];
    if (c == 0) continue;
    const ElemIndex nc = field_.neg(c);
    const auto& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < cols_; ++j) {
      if (row[j] != 0) scratch_[j] = field_.add(scratch_[j], field_.mul(nc, row[j]));
    }
  }
  auto it = std::find_if(scratch_.begin(), scratch_.end(), [](ElemIndex x) { return x != 0; });
  if (it == scratch_.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - scratch_.begin());
  const ElemIndex s = field_.inv(*it);
  for (std::size_t j = piv; j < cols_; ++j) scratch_[j] = field_.mul(s, scratch_[j]);
  rows_.push_back(scratch_);
  pivots_.push_back(piv);
  return true;
}

std::size_t rank(const Field& field, std::size_t cols, std::span<const std::vector<ElemIndex>> rows) {
  RowEchelon ech(field, cols);
  for (const auto& r : rows) {
    ech.insert(r);
    if (ech.rank() == cols) break;
  }
  return ech.rank();
}

}  // namespace mincodes

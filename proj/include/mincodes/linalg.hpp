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

#include <span>
#include <vector>

#include "mincodes/field.hpp"

namespace mincodes {

/// Incremental row echelon basis over GF(q). Each stored row has a pivot
/// normalized to 1 and zeros at the pivots of earlier rows.
class RowEchelon {
 public:
  RowEchelon(Field field, std::size_t cols);

  /// Reduces v against the basis; adds the remainder if nonzero.
  /// Returns true when the rank grew.
  bool insert(std::span<const ElemIndex> v);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

 private:
  Field field_;
  std::size_t cols_;
  std::vector<std::vector<ElemIndex>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<ElemIndex> scratch_;
};

/// Rank of the matrix whose rows are the given vectors.
std::size_t rank(const Field& field, std::size_t cols, std::span<const std::vector<ElemIndex>> rows);

}  // namespace mincodes

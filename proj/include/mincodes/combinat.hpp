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

#include <cstdint>
#include <vector>

#include "mincodes/bigint.hpp"

namespace mincodes {

/// Ordered block sizes (r_1, ..., r_l), all >= 1. A trailing zero block is
/// recorded as a flag and does not change any count.
struct Composition {
  std::vector<unsigned> parts;
  bool trailing_zero = false;

  unsigned total() const noexcept;
  std::size_t length() const noexcept { return parts.size(); }
};

/// Multiplicities of the distinct values of a multiset of parts, in order of
/// first appearance.
struct PartitionType {
  std::vector<unsigned> multiplicities;
};

struct PartMultiset {
  Composition parts;  // sorted descending
  PartitionType type;
};

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(unsigned n);

/// Number of all-nonzero s-tuples over GF(q) summing to 0.
BigInt psi(unsigned s, unsigned q);

/// Number of all-nonzero s-tuples over GF(q) summing to 1.
BigInt phi(unsigned s, unsigned q);

/// Solution count of the block system
///     sum of all entries = gamma,  sum_b alpha_b * (block b sum) = 0,
///     all entries nonzero,
/// for pairwise distinct nonzero alpha_1..alpha_l. The count does not depend
/// on the alphas, nor on gamma once gamma != 0. Uses the recursion on the last
/// block; requires l <= q - 1.
BigInt count_A(const Composition& c, unsigned q, bool gamma_is_zero = true);

/// count_A(c, q, true) through the expanded alternating sum instead of the
/// recursion.
BigInt count_A_closed(const Composition& c, unsigned q);

/// Surjections from an x-set onto a y-set.
BigInt surjections(unsigned x, unsigned y);

/// h-tuples over GF(q), q odd, with every entry nonzero and no two entries
/// summing to zero.
BigInt gamma_cap(unsigned h, unsigned q);

/// n! / prod(parts!). Throws InvalidArgument if the parts do not sum to n.
BigInt multinomial(unsigned n, const std::vector<unsigned>& parts);

/// Every multiset of positive parts summing to s with at most max_len parts,
/// parts sorted descending, listed in descending lexicographic order.
std::vector<PartMultiset> enumerate_part_multisets(unsigned s, unsigned max_len);

}  // namespace mincodes

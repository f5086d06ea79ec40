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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mincodes/bigint.hpp"
#include "mincodes/pointset.hpp"

namespace mincodes {

/// Coefficients (alpha_1, ..., alpha_k) of the hyperplane sum alpha_i x_i = 0.
struct Functional {
  std::vector<ElemIndex> coeffs;
  friend bool operator==(const Functional&, const Functional&) = default;
};

struct Codeword {
  std::vector<ElemIndex> values;
  std::size_t weight = 0;
};

struct WeightEntry {
  BigInt weight;
  BigInt count;
  friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

/// Exact weight -> count map of a code, with equal weights merged.
class WeightDistribution {
 public:
  WeightDistribution() = default;
  WeightDistribution(unsigned q, BigInt n, unsigned dim) : q_(q), n_(std::move(n)), dim_(dim) {}

  /// Adds count codewords of the given weight, merging with an existing entry.
  void add(const BigInt& weight, const BigInt& count);

  std::vector<WeightEntry> entries() const;
  const std::map<BigInt, BigInt>& table() const noexcept { return table_; }
  BigInt count_of(const BigInt& weight) const;

  bool includes_zero_word() const noexcept { return table_.contains(BigInt(0)); }
  WeightDistribution without_zero_word() const;

  /// Sum of all counts.
  BigInt total() const;
  BigInt total_nonzero() const;

  /// Smallest and largest nonzero weight; InvalidArgument when there is none.
  BigInt min_nonzero() const;
  BigInt max_nonzero() const;

  unsigned q() const noexcept { return q_; }
  const BigInt& n() const noexcept { return n_; }
  unsigned dim() const noexcept { return dim_; }
  void set_dim(unsigned d) noexcept { dim_ = d; }

  friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  unsigned q_ = 0;
  BigInt n_ = 0;
  unsigned dim_ = 0;
  std::map<BigInt, BigInt> table_;
};

/// "weight,count" header then one row per weight, ascending.
std::string to_csv(const WeightDistribution& dist);
/// {"n":..,"dim":..,"weights":[{"w":..,"count":..},...]}
std::string to_json(const WeightDistribution& dist);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class EvalStrategy { automatic, table, direct };

struct EnumerationOptions {
  /// Upper bound on (hyperplane classes) x (code length).
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 1;
  EvalStrategy strategy = EvalStrategy::automatic;
};

/// Entry i is H(P_i) for the i-th point of d.
Codeword codeword(const DefiningSet& d, const Functional& f);

/// Rank over GF(q) of the matrix whose columns are the points of d.
unsigned dimension(const DefiningSet& d);

/// (q^k - 1) / (q - 1).
std::uint64_t hyperplane_classes(unsigned q, unsigned k);

/// Work an exhaustive enumeration over d costs in the budget model.
std::uint64_t enumeration_cost(const DefiningSet& d);
std::uint64_t minimality_cost(const DefiningSet& d);

/// Weight distribution over all q^k functionals, zero word included. One
/// functional per scalar class is evaluated and its weight counted q - 1
/// times. Throws BudgetExceeded when enumeration_cost exceeds the budget.
WeightDistribution weight_distribution_bruteforce(const DefiningSet& d, const EnumerationOptions& opts = {});

/// Sufficient minimality test q * w_min > (q - 1) * w_max.
bool ab_check(const WeightDistribution& dist);

struct MinimalityResult {
  bool minimal = true;
  /// On failure: a codeword and an independent codeword whose support lies
  /// inside the first one's, earliest in class order.
  std::optional<std::pair<Functional, Functional>> witness;
};

/// Exhaustive support-containment check over all pairs of hyperplane classes.
MinimalityResult is_minimal_direct(const DefiningSet& d, const EnumerationOptions& opts = {});

enum class MinimalityBasis { direct, ab_sufficient_only, undetermined };

struct CodeSummary {
  std::size_t n = 0;
  unsigned dim = 0;
  unsigned ambient_k = 0;
  BigInt d = 0;
  bool ab_holds = false;
  std::optional<bool> minimal;
  MinimalityBasis basis = MinimalityBasis::undetermined;
  std::optional<std::pair<Functional, Functional>> witness;

  /// dim < k: the hyperplane-to-codeword map is not injective.
  bool dim_deficient() const noexcept { return dim < ambient_k; }
};

CodeSummary summarize(const DefiningSet& d, const EnumerationOptions& opts = {});

std::string to_string(const Functional& f);

}  // namespace mincodes

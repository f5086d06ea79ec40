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

#include <string>
#include <vector>

#include "mincodes/bigint.hpp"
#include "mincodes/code.hpp"
#include "mincodes/combinat.hpp"
#include "mincodes/pointset.hpp"

namespace mincodes {

struct SpectrumParams {
  unsigned q = 0, k = 0, h = 0;
  Family family = Family::four;
  bool tilde = false;
};

/// Symbolic origin of a weight, e.g. "w_2" or "2w_3 ∪ n+w_3(q-2)/(q-1)" when
/// several formula terms land on the same integer.
struct Provenance {
  BigInt weight;
  std::string origin;
};

/// Closed-form weight distribution. The distribution includes the zero word;
/// provenance has one entry per distribution entry, in ascending weight.
struct SpectrumReport {
  SpectrumParams params;
  BigInt n;
  WeightDistribution distribution;
  std::vector<Provenance> provenance;
};

// Family 1: (x_1 + ... + x_h) x_1 ... x_h = 0.

BigInt family1_length(unsigned q, unsigned k, unsigned h);

/// Points of the family-1 defining set (plus the origin) on a hyperplane
/// with a nonzero coefficient beyond the first h coordinates. Needs k > h.
BigInt lambda_r_pos(unsigned q, unsigned k, unsigned h);

/// Points of the family-1 defining set (plus the origin) on a hyperplane
/// supported on s of the first h coordinates, whose coefficients split into
/// blocks of equal value with sizes given by parts.
BigInt lambda_r_zero(unsigned q, unsigned k, unsigned h, unsigned s, const Composition& parts);

/// Weights are n - Lambda + 1 over both hyperplane kinds; equal weights are
/// merged. relaxed admits 1 <= h < 4.
SpectrumReport family1_distribution(unsigned q, unsigned k, unsigned h, bool relaxed = false);

// Families 2 and 3: only the length and minimum weight have closed forms.

BigInt family2_length(unsigned q, unsigned k, unsigned h);
BigInt family3_length(unsigned q, unsigned k, unsigned h);

struct MinWeight {
  BigInt weight;
  /// Hyperplanes realizing the minimum, one functional per hyperplane.
  std::vector<Functional> witnesses;
};

/// n - q^(k-1) + 1, realized by x_i + x_j = 0. Requires q > 5 odd and
/// 3 <= h <= k.
MinWeight family2_min_weight(unsigned q, unsigned k, unsigned h);

/// n - q^(k-1) + 1, realized by x_i + x_j = 0 and x_i = 0. Same hypotheses.
MinWeight family3_min_weight(unsigned q, unsigned k, unsigned h);

// Family 4: x_1 ... x_h = 0.

BigInt family4_length(unsigned q, unsigned k, unsigned h);

/// w_s = n - q^(k-1) + q^(k-h) (q-1)^(h-s) psi_s + 1 for s = 1..h.
BigInt family4_weight_s(unsigned q, unsigned k, unsigned h, unsigned s);
/// w = n - q^(k-1) + q^(k-h-1) (q-1)^h + 1 (only realized when k > h).
BigInt family4_weight_w(unsigned q, unsigned k, unsigned h);

SpectrumReport family4_distribution(unsigned q, unsigned k, unsigned h, bool relaxed = false);

// Codes of [D, D]~ for a scale-invariant D.

/// Maps a base distribution (zero word included) to the distribution of
/// the code of [D, D]~: every base weight w contributes 2w with the same
/// count and n + (q-2) w / (q-1) with q - 1 times the count. Requires
/// (q - 1) to divide n and every base weight.
WeightDistribution tilde_transfer(const WeightDistribution& base, const BigInt& n, unsigned q);

/// tilde_transfer applied to a report, carrying provenance through.
SpectrumReport tilde_report(const SpectrumReport& base);

SpectrumReport family4_tilde_distribution(unsigned q, unsigned k, unsigned h, bool relaxed = false);
SpectrumReport family1_tilde_distribution(unsigned q, unsigned k, unsigned h, bool relaxed = false);

/// Dispatches on family and tilde flag; families 2 and 3 throw
/// InvalidArgument (no closed-form distribution).
SpectrumReport closed_form_report(const SpectrumParams& params, bool relaxed = false);

/// Weight distribution JSON with an added "provenance" array.
std::string to_json(const SpectrumReport& report);
/// "weight,count,origin" rows, ascending.
std::string to_csv(const SpectrumReport& report);
/// Two-column "Weight i | B_i" table with the symbolic row label.
std::string to_markdown(const SpectrumReport& report);

}  // namespace mincodes

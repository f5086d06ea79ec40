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

#include "mincodes/combinat.hpp"

#include <numeric>
#include <string>

#include "mincodes/errors.hpp"

namespace mincodes {

namespace {

void require_order(unsigned q) {
  if (q < 2) throw InvalidArgument("field order must be >= 2, got " + std::to_string(q));
}

void require_parts(const Composition& c) {
  if (c.parts.empty()) throw InvalidArgument("composition needs at least one part");
  for (unsigned r : c.parts)
    if (r == 0) throw InvalidArgument("composition parts must be >= 1");
}

void partitions(unsigned remaining, unsigned max_part, unsigned max_len, std::vector<unsigned>& prefix,
                std::vector<PartMultiset>& out) {
  if (remaining == 0) {
    PartMultiset pm;
    pm.parts.parts = prefix;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (i == 0 || prefix[i] != prefix[i - 1])
        pm.type.multiplicities.push_back(1);
      else
        ++pm.type.multiplicities.back();
    }
    out.push_back(std::move(pm));
    return;
  }
  if (prefix.size() == max_len) return;
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(remaining - part, part, max_len, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

unsigned Composition::total() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0u); }

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (std::int64_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

BigInt psi(unsigned s, unsigned q) {
  require_order(q);
  const BigInt qm1 = q - 1;
  BigInt num = ipow(qm1, s) + (s % 2 == 0 ? qm1 : BigInt(-qm1));
  BigInt value = exact_div(num, q, "psi");
#ifdef MINCODES_INJECT_PSI_FAULT
  if (s >= 2) value += 1;
#endif
  return value;
}

BigInt phi(unsigned s, unsigned q) {
  require_order(q);
  const BigInt qm1 = q - 1;
  return exact_div(ipow(qm1, s) - psi(s, q), qm1, "phi");
}

BigInt count_A(const Composition& c, unsigned q, bool gamma_is_zero) {
  require_order(q);
  require_parts(c);
  if (c.parts.size() > q - 1) {
    throw InvalidArgument("composition with " + std::to_string(c.parts.size()) +
                          " blocks needs that many distinct nonzero coefficients; GF(" + std::to_string(q) +
                          ") has only " + std::to_string(q - 1));
  }
  BigInt a = psi(c.parts[0], q);
  unsigned prefix = c.parts[0];
  for (std::size_t i = 1; i < c.parts.size(); ++i) {
    const unsigned r = c.parts[i];
    BigInt next = psi(prefix, q) * phi(r, q);
    if (r % 2 == 0)
      next += a;
    else
      next -= a;
    a = std::move(next);
    prefix += r;
  }
  if (gamma_is_zero) return a;
  // For l = 1 and gamma != 0 the block sum cannot be both gamma and 0.
  if (c.parts.size() == 1) return 0;
  return exact_div(psi(prefix, q) - a, q - 1, "count_A (gamma != 0)");
}

BigInt count_A_closed(const Composition& c, unsigned q) {
  require_order(q);
  require_parts(c);
  if (c.parts.size() > q - 1) {
    throw InvalidArgument("composition has more blocks than nonzero field elements");
  }
  const auto& r = c.parts;
  const std::size_t l = r.size();
  if (l == 1) return psi(r[0], q);

  // prefix[i] = r_1 + ... + r_i (1-based), suffix sums taken on the fly.
  std::vector<unsigned> prefix(l + 1, 0);
  for (std::size_t i = 0; i < l; ++i) prefix[i + 1] = prefix[i] + r[i];
  auto sign = [](unsigned e) { return e % 2 == 0 ? 1 : -1; };
  auto tail = [&](std::size_t from) {  // r_from + ... + r_l, 1-based
    return prefix[l] - prefix[from - 1];
  };

  BigInt a = psi(prefix[l - 1], q) * phi(r[l - 1], q);
  a += sign(tail(2)) * psi(r[0], q);
  for (std::size_t i = 1; i + 2 <= l; ++i) {
    a += sign(tail(l - i + 1)) * psi(prefix[l - i - 1], q) * phi(r[l - i - 1], q);
  }
  return a;
}

BigInt surjections(unsigned x, unsigned y) {
  if (y > x) return 0;
  BigInt total = 0;
  for (unsigned i = 0; i <= y; ++i) {
    BigInt term = binomial(y, i) * ipow(BigInt(y - i), x);
    if (i % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

BigInt gamma_cap(unsigned h, unsigned q) {
  require_order(q);
  if (q % 2 == 0) throw InvalidArgument("gamma_cap is defined for odd q only");
  BigInt total = 0;
  BigInt falling = 1;  // (q-1)(q-3)...(q-2s+1)
  const unsigned top = std::min(h, (q - 1) / 2);
  for (unsigned s = 1; s <= top; ++s) {
    falling *= q - 2 * s + 1;
    total += exact_div(falling, factorial(s), "gamma_cap") * surjections(h, s);
  }
  return total;
}

BigInt multinomial(unsigned n, const std::vector<unsigned>& parts) {
  if (std::accumulate(parts.begin(), parts.end(), 0u) != n) {
    throw InvalidArgument("multinomial parts do not sum to " + std::to_string(n));
  }
  BigInt denom = 1;
  for (unsigned r : parts) denom *= factorial(r);
  return exact_div(factorial(n), denom, "multinomial");
}

std::vector<PartMultiset> enumerate_part_multisets(unsigned s, unsigned max_len) {
  if (s < 1) throw InvalidArgument("enumerate_part_multisets needs s >= 1");
  std::vector<PartMultiset> out;
  std::vector<unsigned> prefix;
  partitions(s, s, max_len, prefix, out);
  return out;
}

}  // namespace mincodes

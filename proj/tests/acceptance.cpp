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

// Acceptance checks. Prints one PASS/FAIL line per criterion with its wall
// time and exits nonzero when a criterion fails that is not listed in
// kKnownFailures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "mincodes/code.hpp"
#include "mincodes/combinat.hpp"
#include "mincodes/spectra.hpp"
#include "oracles.hpp"

using namespace mincodes;

namespace {

// Criteria whose reference data disagrees with enumeration; see README.
const std::set<int> kKnownFailures = {7};

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!pass) note << "; ";
      pass = false;
      note << what;
    }
  }
};

using Hist = std::map<unsigned, unsigned>;

Hist hist(const WeightDistribution& d) { return oracle::to_histogram(d.table()); }

Hist oracle_hist(const DefiningSet& d) {
  return oracle::weight_histogram(oracle::Gf(d.field()), oracle::points_of(d), d.k());
}

std::string show(const Hist& h) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, c] : h) {
    if (w == 0) continue;
    os << (first ? "" : ", ") << w << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

// Exact minimum-weight hyperplanes of C_D, one functional per class.
std::vector<Functional> minimum_hyperplanes(const DefiningSet& d, std::size_t& min_weight) {
  const Field& f = d.field();
  std::vector<Functional> at;
  min_weight = d.size() + 1;
  for (PointIndex rep : detail::projective_representatives(f, d.k())) {
    const Functional a{decode_point(f, d.k(), rep).coords};
    const std::size_t w = codeword(d, a).weight;
    if (w < min_weight) {
      min_weight = w;
      at.clear();
    }
    if (w == min_weight) at.push_back(a);
  }
  return at;
}

Functional unit_sum(unsigned k, std::initializer_list<unsigned> idx) {
  Functional a{std::vector<ElemIndex>(k, 0)};
  for (unsigned i : idx) a.coeffs[i] = 1;
  return a;
}

bool same_set(std::vector<Functional> a, std::vector<Functional> b) {
  auto key = [](const Functional& x) { return x.coeffs; };
  auto cmp = [&](const Functional& x, const Functional& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  return a == b;
}

void criterion1(Outcome& o) {
  const SpectrumReport r = family4_distribution(3, 3, 3);
  const DefiningSet d = family4(Field::of_order(3), 3, 3);
  const Hist want{{0, 1}, {10, 6}, {12, 8}, {14, 12}};
  o.require(hist(r.distribution) == want, "closed form " + show(hist(r.distribution)));
  o.require(hist(weight_distribution_bruteforce(d)) == want, "enumeration differs");
  o.require(oracle_hist(d) == want, "naive oracle differs");
  o.require(r.distribution.min_nonzero() == r.n - 9 + 1 && r.n == 18, "d != n - q^(k-1) + 1");
  o.note << "n=18 " << show(want) << " d=10";
}

void criterion2(Outcome& o) {
  const DefiningSet d = family4(Field::of_order(5), 3, 3);
  const auto dist = weight_distribution_bruteforce(d);
  o.require(hist(dist) == hist(family4_distribution(5, 3, 3).distribution), "closed form differs");
  o.require(!ab_check(dist), "ab_check holds");
  o.require(hyperplane_classes(5, 3) == 31, "class count");
  o.require(is_minimal_direct(d).minimal, "not minimal");
  o.note << "wmin=36 wmax=52 5*36 <= 4*52, minimal over 31 classes";
}

void criterion3(Outcome& o) {
  bool flipped_matches = false;
  for (const auto& [k, n] : {std::pair{4u, 70u}, std::pair{5u, 212u}}) {
    const DefiningSet d = family1(Field::of_order(3), k, 4);
    o.require(d.size() == n && family1_length(3, k, 4) == n, "length at k=" + std::to_string(k));
    const SpectrumReport r = family1_distribution(3, k, 4);
    const Hist brute = hist(weight_distribution_bruteforce(d));
    o.require(hist(r.distribution) == brute, "n - Lambda + 1 differs from enumeration at k=" + std::to_string(k));
    o.require(oracle_hist(d) == brute, "naive oracle differs at k=" + std::to_string(k));

    // Variant with the X and Y signs flipped: n - q^(k-1) - X + Y + 1 where
    // Lambda = q^(k-1) - X + Y, i.e. n + 1 - 2 q^(k-1) + Lambda.
    const BigInt qk1 = ipow(BigInt(3), k - 1);
    bool all_in = true;
    for (unsigned s = 1; s <= 4; ++s) {
      for (const auto& pm : enumerate_part_multisets(s, 2)) {
        const BigInt flipped = BigInt(n) + 1 - 2 * qk1 + lambda_r_zero(3, k, 4, s, pm.parts);
        all_in = all_in && flipped >= 0 && brute.count(static_cast<unsigned>(flipped)) == 1;
      }
    }
    flipped_matches = flipped_matches || all_in;
  }
  o.require(!flipped_matches, "sign-flipped variant unexpectedly matches");
  o.note << "n=70,212; n-Lambda+1 matches enumeration, the sign-flipped variant does not";
}

void criterion4(Outcome& o) {
  for (const auto& [q, k, h, n] : {std::array{5u, 3u, 3u, 60u}, std::array{7u, 3u, 3u, 126u}, std::array{4u, 2u, 2u, 3u}}) {
    const Field f = Field::of_order(q);
    const DefiningSet d = family2(f, k, h, h < 3);
    const auto pts = oracle::family_points(oracle::Gf(f), Family::two, k, h);
    o.require(family2_length(q, k, h) == n && d.size() == n && pts.size() == n, "length q=" + std::to_string(q));
  }
  const DefiningSet d = family2(Field::of_order(7), 3, 3);
  std::size_t wmin = 0;
  const auto at = minimum_hyperplanes(d, wmin);
  const MinWeight mw = family2_min_weight(7, 3, 3);
  o.require(wmin == 78 && mw.weight == 78, "min weight " + std::to_string(wmin));
  o.require(same_set(at, {unit_sum(3, {0, 1}), unit_sum(3, {0, 2}), unit_sum(3, {1, 2})}), "minimum hyperplanes");
  o.require(same_set(at, mw.witnesses), "listed witnesses");
  o.note << "n=60,126,3; d=78 on exactly x_i+x_j=0 (3 hyperplanes)";
}

void criterion5(Outcome& o) {
  for (const auto& [q, n] : {std::pair{5u, 96u}, std::pair{7u, 216u}, std::pair{4u, 57u}}) {
    const Field f = Field::of_order(q);
    const DefiningSet d = family3(f, 3, 3);
    const auto pts = oracle::family_points(oracle::Gf(f), Family::three, 3, 3);
    o.require(family3_length(q, 3, 3) == n && d.size() == n && pts.size() == n, "length q=" + std::to_string(q));
  }
  const DefiningSet d = family3(Field::of_order(7), 3, 3);
  std::size_t wmin = 0;
  const auto at = minimum_hyperplanes(d, wmin);
  const MinWeight mw = family3_min_weight(7, 3, 3);
  o.require(wmin == 168 && mw.weight == 168, "min weight " + std::to_string(wmin));
  o.require(same_set(at, {unit_sum(3, {0, 1}), unit_sum(3, {0, 2}), unit_sum(3, {1, 2}), unit_sum(3, {0}),
                          unit_sum(3, {1}), unit_sum(3, {2})}),
            "minimum hyperplanes");
  o.require(same_set(at, mw.witnesses), "listed witnesses");
  o.note << "n=96,216,57; d=168 on exactly x_i+x_j=0 and x_i=0 (6 hyperplanes)";
}

void criterion6(Outcome& o) {
  const Field f3 = Field::of_order(3);
  const DefiningSet b = family4(f3, 3, 3);
  const DefiningSet t = tilde_join(b, b);
  const SpectrumReport r = family4_tilde_distribution(3, 3, 3);
  const Hist want{{0, 1}, {18, 2}, {20, 6}, {23, 12}, {24, 24}, {25, 24}, {28, 12}};
  o.require(t.size() == 36 && dimension(t) == 4 && r.distribution.min_nonzero() == 18, "[36,4,18]");
  o.require(hist(r.distribution) == want, "transfer " + show(hist(r.distribution)));
  o.require(hist(weight_distribution_bruteforce(t)) == want, "enumeration differs");
  o.require(oracle_hist(t) == want, "naive oracle differs");
  // 2 w_3 = n + w_3 / 2 = 24 with w_3 = 12.
  o.require(family4_weight_s(3, 3, 3, 3) == 12, "w_3");

  const DefiningSet b5 = family4(Field::of_order(5), 3, 3);
  const DefiningSet t5 = tilde_join(b5, b5);
  const SpectrumReport r5 = family4_tilde_distribution(5, 3, 3);
  const Hist brute5 = hist(weight_distribution_bruteforce(t5));
  o.require(r5.distribution.count_of(96) == 320 && brute5.at(96) == 320, "weight 96 count");
  o.require(hist(r5.distribution) == brute5, "(5,3,3) transfer differs");
  o.note << "[36,4,18] " << show(want) << "; (5,3,3) B_96=320";
}

// Reference row list for q=3, k=h+1, before any aggregation.
Hist table2_rows(unsigned k) {
  const unsigned h = k - 1;
  const BigInt n = family4_length(3, k, h);
  Hist rows;
  auto put = [&](const BigInt& w, const BigInt& c) { rows[static_cast<unsigned>(w)] += static_cast<unsigned>(c); };
  put(0, 1);
  put(n, 2);
  for (unsigned s = 1; s <= k - 1; ++s) put(2 * family4_weight_s(3, k, h, s), binomial(k - 1, s) * ipow(BigInt(2), s));
  for (unsigned s = 1; s <= k - 2; ++s)
    put(n + family4_weight_s(3, k, h, s) / 2, binomial(k - 1, s) * ipow(BigInt(2), s + 1));
  const BigInt w = family4_weight_w(3, k, h);
  put(2 * w, ipow(BigInt(3), k) - ipow(BigInt(3), k - 1));
  put(n + w / 2, 2 * (ipow(BigInt(3), k) - ipow(BigInt(3), k - 1)));
  return rows;
}

void criterion7(Outcome& o) {
  const DefiningSet b = family4(Field::of_order(3), 4, 3);
  const DefiningSet t = tilde_join(b, b);
  const SpectrumReport r = family4_tilde_distribution(3, 4, 3);
  const Hist got = hist(r.distribution);
  const Hist brute = hist(weight_distribution_bruteforce(t));
  const bool formula_ok = got == brute && oracle_hist(t) == brute;
  o.require(formula_ok, "transfer differs from enumeration");

  const Hist table = table2_rows(4);
  unsigned table_total = 0, actual_total = 0;
  for (const auto& [w, c] : table) table_total += c;
  for (const auto& [w, c] : brute) actual_total += c;
  Hist extra;
  for (const auto& [w, c] : brute) {
    auto it = table.find(w);
    if (it == table.end() || it->second != c) extra[w] = c - (it == table.end() ? 0 : it->second);
  }
  o.require(table == brute, "reference table has " + std::to_string(table.size()) + " rows summing to " +
                                std::to_string(table_total) + ", enumeration has " + std::to_string(brute.size()) +
                                " weights summing to " + std::to_string(actual_total) + "; unlisted " + show(extra) +
                                " is n+w_3/2, distinct from 2w=76");
  if (formula_ok) o.note << "; closed form matches enumeration " << show(got);

  // Even h does merge 2w with n + w_h/2, but the reference count omits 2^(h+1).
  const DefiningSet b5 = family4(Field::of_order(3), 5, 4);
  const Hist brute5 = hist(weight_distribution_bruteforce(tilde_join(b5, b5)));
  const Hist table5 = table2_rows(5);
  const unsigned w2 = static_cast<unsigned>(2 * family4_weight_w(3, 5, 4));
  o.note << "; at (3,5,4) B_" << w2 << " is " << brute5.at(w2) << ", reference " << table5.at(w2);
}

void criterion8(Outcome& o) {
  // The property suites live in the doctest binary; rerun them here.
  o.note << "see property_tests";
#ifdef MINCODES_PROPERTY_TESTS_PATH
  const std::string cmd = std::string(MINCODES_PROPERTY_TESTS_PATH) + " --minimal > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  o.require(rc == 0, "property suites failed");
  o.note.str("");
  o.note << "all property suites pass (200 cases each)";
#else
  o.require(false, "property test binary not configured");
#endif
}

void criterion9(Outcome& o) {
  EnumerationOptions opts;
  opts.budget = std::uint64_t{1} << 40;
  opts.threads = 0;
  unsigned instances = 0, cutting = 0, tilde_checked = 0;
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Field f = Field::of_order(q);
    for (int fam = 1; fam <= 4; ++fam) {
      for (unsigned k = 1; ambient_points(q, k) <= 10000; ++k) {
        for (unsigned h = 1; h <= k; ++h) {
          const DefiningSet d = make_family(static_cast<Family>(fam), f, k, h, true);
          if (d.empty()) continue;
          ++instances;
          const bool cut = is_cutting(d);
          const bool minimal = dimension(d) == k && is_minimal_direct(d, opts).minimal;
          if (cut != minimal) {
            o.require(false, "disagree at family " + std::to_string(fam) + " q=" + std::to_string(q) +
                                 " k=" + std::to_string(k) + " h=" + std::to_string(h));
          }
          if (cut) {
            ++cutting;
            if (ambient_points(q, k + 1) <= 10000) {
              ++tilde_checked;
              o.require(is_cutting(tilde_join(d, d)), "tilde join not cutting at family " + std::to_string(fam) +
                                                          " q=" + std::to_string(q) + " k=" + std::to_string(k) +
                                                          " h=" + std::to_string(h));
            }
          }
        }
      }
    }
  }
  if (o.pass)
    o.note << instances << " instances agree (" << cutting << " cutting), " << tilde_checked
           << " tilde joins cutting";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_s;  // 0 means no limit
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 1, criterion1}, {2, 1, criterion2}, {3, 5, criterion3}, {4, 5, criterion4}, {5, 5, criterion5},
      {6, 5, criterion6}, {7, 5, criterion7}, {8, 0, criterion8}, {9, 0, criterion9},
  };
  int unexpected = 0, passed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      std::ostringstream lim;
      lim << "took " << secs << " s, limit " << c.limit_s << " s";
      o.require(false, lim.str());
    }
    const bool known = kKnownFailures.count(c.id) == 1;
    std::printf("%s criterion %d (%.3f s): %s%s\n", o.pass ? "PASS" : "FAIL", c.id, secs, o.note.str().c_str(),
                !o.pass && known ? " [known]" : "");
    std::fflush(stdout);
    passed += o.pass;
    if (!o.pass && !known) ++unexpected;
    if (o.pass && known) std::printf("note: criterion %d is listed as a known failure but passed\n", c.id);
  }
  std::printf("%d/%zu criteria pass, %d unexpected failure(s)\n", passed, criteria.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}

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

#include "mincodes/code.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <sstream>
#include <thread>

#include "mincodes/errors.hpp"
#include "mincodes/linalg.hpp"

namespace mincodes {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

unsigned resolve_threads(unsigned requested, std::size_t work_items) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(t, work_items)));
}

// Runs fn(begin, end, worker) over contiguous chunks of [0, count).
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1) {
    fn(std::size_t{0}, count, 0u);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t b = std::min(count, t * chunk);
    const std::size_t e = std::min(count, b + chunk);
    pool.emplace_back([&fn, b, e, t] { fn(b, e, t); });
  }
  for (auto& th : pool) th.join();
}

// Evaluates hyperplane classes on the points of a defining set with one of
// two strategies: a full value table over AG(k,q), or point-by-point dot
// products.
class ClassEvaluator {
 public:
  ClassEvaluator(const DefiningSet& d, EvalStrategy strategy) : d_(d) {
    const std::uint64_t ambient = d.ambient_size();
    const bool table_fits = ambient <= kMaxAmbientPoints;
    switch (strategy) {
      case EvalStrategy::table:
        if (!table_fits) throw InvalidArgument("value table strategy: ambient space above the cap");
        use_table_ = true;
        break;
      case EvalStrategy::direct:
        use_table_ = false;
        break;
      case EvalStrategy::automatic:
        use_table_ = table_fits && ambient <= sat_mul(d.size(), d.k());
        break;
    }
    if (!use_table_) {
      coords_.reserve(d.size() * d.k());
      for (std::size_t i = 0; i < d.size(); ++i) {
        const Point p = d.point(i);
        coords_.insert(coords_.end(), p.coords.begin(), p.coords.end());
      }
    }
  }

  // Scratch for one worker.
  struct Scratch {
    std::vector<ElemIndex> table;
    Point coeffs;
  };

  Scratch make_scratch() const {
    Scratch s;
    if (use_table_) s.table.resize(d_.ambient_size());
    return s;
  }

  // Calls visit(i, value) for every point i.
  template <typename Visit>
  void evaluate(PointIndex functional_rank, Scratch& s, Visit&& visit) const {
    const Field& f = d_.field();
    s.coeffs = decode_point(f, d_.k(), functional_rank);
    if (use_table_) {
      detail::evaluate_functional(f, s.coeffs.coords, s.table);
      for (std::size_t i = 0; i < d_.size(); ++i) visit(i, s.table[d_[i]]);
    } else {
      const unsigned k = d_.k();
      for (std::size_t i = 0; i < d_.size(); ++i) {
        const ElemIndex* x = coords_.data() + i * k;
        ElemIndex acc = 0;
        for (unsigned j = 0; j < k; ++j) acc = f.add(acc, f.mul(s.coeffs.coords[j], x[j]));
        visit(i, acc);
      }
    }
  }

 private:
  const DefiningSet& d_;
  bool use_table_ = false;
  std::vector<ElemIndex> coords_;
};

Functional functional_of(const Field& f, unsigned k, PointIndex rank) {
  return Functional{decode_point(f, k, rank).coords};
}

bool proportional(const Codeword& a, const Codeword& b, const Field& f) {
  ElemIndex ratio = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] == 0) {
      if (b.values[i] != 0) return false;
      continue;
    }
    const ElemIndex r = f.mul(b.values[i], f.inv(a.values[i]));
    if (ratio == 0) ratio = r;
    if (r != ratio) return false;
  }
  return true;
}

}  // namespace

void WeightDistribution::add(const BigInt& weight, const BigInt& count) {
  if (weight < 0) throw InvalidArgument("negative weight " + weight.str());
  if (count < 0) throw InvalidArgument("negative count " + count.str());
  if (count == 0) return;
  table_[weight] += count;
}

std::vector<WeightEntry> WeightDistribution::entries() const {
  std::vector<WeightEntry> out;
  out.reserve(table_.size());
  for (const auto& [w, c] : table_) out.push_back({w, c});
  return out;
}

BigInt WeightDistribution::count_of(const BigInt& weight) const {
  auto it = table_.find(weight);
  return it == table_.end() ? BigInt(0) : it->second;
}

WeightDistribution WeightDistribution::without_zero_word() const {
  WeightDistribution out = *this;
  out.table_.erase(BigInt(0));
  return out;
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& [w, c] : table_) t += c;
  return t;
}

BigInt WeightDistribution::total_nonzero() const { return total() - count_of(0); }

BigInt WeightDistribution::min_nonzero() const {
  for (const auto& [w, c] : table_)
    if (w != 0) return w;
  throw InvalidArgument("distribution has no nonzero weight");
}

BigInt WeightDistribution::max_nonzero() const {
  if (table_.empty() || table_.rbegin()->first == 0) throw InvalidArgument("distribution has no nonzero weight");
  return table_.rbegin()->first;
}

std::string to_csv(const WeightDistribution& dist) {
  std::ostringstream os;
  os << "weight,count\n";
  for (const auto& [w, c] : dist.table()) os << w << ',' << c << '\n';
  return os.str();
}

std::string to_json(const WeightDistribution& dist) {
  std::ostringstream os;
  os << "{\"n\":" << dist.n() << ",\"dim\":" << dist.dim() << ",\"weights\":[";
  bool first = true;
  for (const auto& [w, c] : dist.table()) {
    os << (first ? "" : ",") << "{\"w\":" << w << ",\"count\":" << c << "}";
    first = false;
  }
  os << "]}";
  return os.str();
}

Codeword codeword(const DefiningSet& d, const Functional& f) {
  if (f.coeffs.size() != d.k()) throw InvalidArgument("functional length does not match the ambient dimension");
  const Field& field = d.field();
  Codeword c;
  c.values.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Point p = d.point(i);
    ElemIndex acc = 0;
    for (std::size_t j = 0; j < p.coords.size(); ++j) {
      if (f.coeffs[j] >= field.q()) throw InvalidArgument("functional coefficient out of range");
      acc = field.add(acc, field.mul(f.coeffs[j], p.coords[j]));
    }
    c.values[i] = acc;
    if (acc != 0) ++c.weight;
  }
  return c;
}

unsigned dimension(const DefiningSet& d) {
  RowEchelon ech(d.field(), d.k());
  for (std::size_t i = 0; i < d.size() && ech.rank() < d.k(); ++i) ech.insert(d.point(i).coords);
  return static_cast<unsigned>(ech.rank());
}

std::uint64_t hyperplane_classes(unsigned q, unsigned k) { return (ambient_points(q, k) - 1) / (q - 1); }

std::uint64_t enumeration_cost(const DefiningSet& d) {
  return sat_mul(hyperplane_classes(d.field().q(), d.k()), d.size());
}

std::uint64_t minimality_cost(const DefiningSet& d) {
  const std::uint64_t classes = hyperplane_classes(d.field().q(), d.k());
  return sat_add(enumeration_cost(d), sat_mul(classes, classes));
}

WeightDistribution weight_distribution_bruteforce(const DefiningSet& d, const EnumerationOptions& opts) {
  const std::uint64_t cost = enumeration_cost(d);
  if (cost > opts.budget) throw BudgetExceeded(cost, opts.budget);

  const Field& f = d.field();
  const auto reps = detail::projective_representatives(f, d.k());
  const ClassEvaluator eval(d, opts.strategy);
  const unsigned threads = resolve_threads(opts.threads, reps.size());

  std::vector<std::vector<std::uint64_t>> hist(threads, std::vector<std::uint64_t>(d.size() + 1, 0));
  parallel_chunks(reps.size(), threads, [&](std::size_t b, std::size_t e, unsigned t) {
    auto scratch = eval.make_scratch();
    auto& h = hist[t];
    for (std::size_t c = b; c < e; ++c) {
      std::size_t w = 0;
      eval.evaluate(reps[c], scratch, [&w](std::size_t, ElemIndex v) { w += (v != 0); });
      ++h[w];
    }
  });

  WeightDistribution dist(f.q(), d.size(), dimension(d));
  dist.add(0, 1);
  for (std::size_t w = 0; w <= d.size(); ++w) {
    std::uint64_t classes = 0;
    for (const auto& h : hist) classes += h[w];
    if (classes != 0) dist.add(w, BigInt(classes) * (f.q() - 1));
  }
  return dist;
}

bool ab_check(const WeightDistribution& dist) {
  const BigInt wmin = dist.min_nonzero();
  const BigInt wmax = dist.max_nonzero();
  return BigInt(dist.q()) * wmin > BigInt(dist.q() - 1) * wmax;
}

MinimalityResult is_minimal_direct(const DefiningSet& d, const EnumerationOptions& opts) {
  const std::uint64_t cost = minimality_cost(d);
  if (cost > opts.budget) throw BudgetExceeded(cost, opts.budget);

  const Field& f = d.field();
  const unsigned k = d.k();
  const auto reps = detail::projective_representatives(f, k);
  const std::size_t classes = reps.size();
  const std::size_t words = (d.size() + 63) / 64;
  const ClassEvaluator eval(d, opts.strategy);
  const unsigned threads = resolve_threads(opts.threads, classes);

  // Support bitsets, one row of `words` per hyperplane class.
  std::vector<std::uint64_t> supp(classes * words, 0);
  std::vector<std::size_t> weight(classes, 0);
  parallel_chunks(classes, threads, [&](std::size_t b, std::size_t e, unsigned) {
    auto scratch = eval.make_scratch();
    for (std::size_t c = b; c < e; ++c) {
      std::uint64_t* row = supp.data() + c * words;
      std::size_t w = 0;
      eval.evaluate(reps[c], scratch, [&](std::size_t i, ElemIndex v) {
        if (v != 0) {
          row[i / 64] |= std::uint64_t{1} << (i % 64);
          ++w;
        }
      });
      weight[c] = w;
    }
  });

  auto contained_in = [&](std::size_t inner, std::size_t outer) {
    const std::uint64_t* a = supp.data() + inner * words;
    const std::uint64_t* b = supp.data() + outer * words;
    for (std::size_t i = 0; i < words; ++i)
      if (a[i] & ~b[i]) return false;
    return true;
  };

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best_outer{kNone};
  std::vector<std::pair<std::size_t, std::size_t>> found(threads, {kNone, kNone});

  parallel_chunks(classes, threads, [&](std::size_t b, std::size_t e, unsigned t) {
    for (std::size_t outer = b; outer < e; ++outer) {
      if (outer > best_outer.load(std::memory_order_relaxed)) return;
      if (weight[outer] == 0) continue;
      for (std::size_t inner = 0; inner < classes; ++inner) {
        if (inner == outer || weight[inner] == 0 || weight[inner] > weight[outer]) continue;
        if (!contained_in(inner, outer)) continue;
        if (weight[inner] == weight[outer]) {
          const Codeword co = codeword(d, functional_of(f, k, reps[outer]));
          const Codeword ci = codeword(d, functional_of(f, k, reps[inner]));
          if (proportional(co, ci, f)) continue;
        }
        found[t] = {outer, inner};
        std::size_t cur = best_outer.load();
        while (outer < cur && !best_outer.compare_exchange_weak(cur, outer)) {
        }
        return;
      }
    }
  });

  MinimalityResult res;
  // Chunks are contiguous and ascending, so the first worker with a hit owns
  // the earliest witness.
  for (const auto& [outer, inner] : found) {
    if (outer == kNone) continue;
    res.minimal = false;
    res.witness = std::make_pair(functional_of(f, k, reps[outer]), functional_of(f, k, reps[inner]));
    break;
  }
  return res;
}

CodeSummary summarize(const DefiningSet& d, const EnumerationOptions& opts) {
  CodeSummary s;
  const WeightDistribution dist = weight_distribution_bruteforce(d, opts);
  s.n = d.size();
  s.dim = dist.dim();
  s.ambient_k = d.k();
  if (dist.total_nonzero() == 0) return s;
  s.d = dist.min_nonzero();
  s.ab_holds = ab_check(dist);
  if (minimality_cost(d) <= opts.budget) {
    const MinimalityResult m = is_minimal_direct(d, opts);
    s.minimal = m.minimal;
    s.witness = m.witness;
    s.basis = MinimalityBasis::direct;
  } else if (s.ab_holds) {
    s.minimal = true;
    s.basis = MinimalityBasis::ab_sufficient_only;
  }
  return s;
}

std::string to_string(const Functional& f) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) os << (i ? "," : "") << unsigned{f.coeffs[i]};
  os << ')';
  return os.str();
}

}  // namespace mincodes

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

#include "mincodes/pointset.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

#include "mincodes/errors.hpp"
#include "mincodes/linalg.hpp"

namespace mincodes {

namespace {

std::string family_name(Family f) { return "family " + std::to_string(static_cast<int>(f)); }

void check_family_params(Family fam, unsigned k, unsigned h, bool relaxed) {
  if (h < 1 || h > k) {
    throw InvalidArgument(family_name(fam) + ": need 1 <= h <= k, got h=" + std::to_string(h) +
                          " k=" + std::to_string(k));
  }
  if (!relaxed && h < family_min_h(fam)) {
    throw InvalidArgument(family_name(fam) + ": need h >= " + std::to_string(family_min_h(fam)) +
                          " (got " + std::to_string(h) + "); pass relaxed to go below");
  }
}

// Evaluates the family predicate on the first h coordinates of a point.
bool on_family(const Field& f, Family fam, std::span<const ElemIndex> x) {
  const std::size_t h = x.size();
  auto any_zero = [&] { return std::find(x.begin(), x.end(), ElemIndex{0}) != x.end(); };
  auto any_pair_cancels = [&] {
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = i + 1; j < h; ++j)
        if (f.add(x[i], x[j]) == 0) return true;
    return false;
  };
  switch (fam) {
    case Family::one: {
      ElemIndex sum = 0;
      for (ElemIndex v : x) sum = f.add(sum, v);
      return sum == 0 || any_zero();
    }
    case Family::two:
      return any_pair_cancels();
    case Family::three:
      return any_zero() || any_pair_cancels();
    case Family::four:
      return any_zero();
  }
  return false;
}

DefiningSet build_family(Family fam, const Field& field, unsigned k, unsigned h, bool relaxed) {
  check_family_params(fam, k, h, relaxed);
  const unsigned q = field.q();
  const std::uint64_t total = ambient_points(q, k);
  if (total > kMaxAmbientPoints) {
    throw InvalidArgument("AG(" + std::to_string(k) + "," + std::to_string(q) + ") has " + std::to_string(total) +
                          " points, above the construction cap " + std::to_string(kMaxAmbientPoints));
  }
  const std::uint64_t prefixes = ambient_points(q, h);
  const std::uint64_t suffixes = total / prefixes;

  std::vector<PointIndex> pts;
  std::vector<ElemIndex> digits(h, 0);
  for (std::uint64_t pre = 0; pre < prefixes; ++pre) {
    if (on_family(field, fam, digits)) {
      for (std::uint64_t suf = 0; suf < suffixes; ++suf) {
        const PointIndex p = pre * suffixes + suf;
        if (p != 0) pts.push_back(p);
      }
    }
    // Odometer over the prefix digits, last coordinate fastest.
    for (std::size_t i = h; i-- > 0;) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
  }
  return DefiningSet(field, k, std::move(pts), FamilyTag{fam, h, relaxed && h < family_min_h(fam), false});
}

}  // namespace

std::uint64_t ambient_points(unsigned q, unsigned k) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (total > (std::uint64_t{1} << 62) / q) throw InvalidArgument("q^k does not fit in 63 bits");
    total *= q;
  }
  return total;
}

DefiningSet::DefiningSet(Field field, unsigned k, std::vector<PointIndex> points, std::optional<FamilyTag> tag)
    : field_(std::move(field)), k_(k), ambient_(ambient_points(field_.q(), k)), points_(std::move(points)),
      tag_(tag) {
  if (k_ < 1) throw InvalidArgument("ambient dimension must be >= 1");
  sorted_ = points_;
  std::sort(sorted_.begin(), sorted_.end());
  if (!sorted_.empty() && sorted_.front() == 0) throw InvalidArgument("defining set contains the zero point");
  if (!sorted_.empty() && sorted_.back() >= ambient_) throw InvalidArgument("point rank outside AG(k,q)");
  if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end()) {
    throw InvalidArgument("defining set contains a duplicate point");
  }
}

Point DefiningSet::point(std::size_t i) const { return decode_point(field_, k_, points_.at(i)); }

bool DefiningSet::contains(PointIndex p) const { return std::binary_search(sorted_.begin(), sorted_.end(), p); }

PointIndex encode_point(const Field& field, std::span<const ElemIndex> coords) {
  PointIndex r = 0;
  for (ElemIndex c : coords) {
    if (c >= field.q()) throw InvalidArgument("coordinate out of range");
    r = r * field.q() + c;
  }
  return r;
}

Point decode_point(const Field& field, unsigned k, PointIndex index) {
  Point p;
  p.coords.assign(k, 0);
  for (unsigned i = k; i-- > 0;) {
    p.coords[i] = static_cast<ElemIndex>(index % field.q());
    index /= field.q();
  }
  return p;
}

unsigned family_min_h(Family family) noexcept { return family == Family::one ? 4 : 3; }

DefiningSet family1(const Field& field, unsigned k, unsigned h, bool relaxed) {
  return build_family(Family::one, field, k, h, relaxed);
}
DefiningSet family2(const Field& field, unsigned k, unsigned h, bool relaxed) {
  return build_family(Family::two, field, k, h, relaxed);
}
DefiningSet family3(const Field& field, unsigned k, unsigned h, bool relaxed) {
  return build_family(Family::three, field, k, h, relaxed);
}
DefiningSet family4(const Field& field, unsigned k, unsigned h, bool relaxed) {
  return build_family(Family::four, field, k, h, relaxed);
}
DefiningSet make_family(Family family, const Field& field, unsigned k, unsigned h, bool relaxed) {
  return build_family(family, field, k, h, relaxed);
}

DefiningSet tilde_join(const DefiningSet& d1, const DefiningSet& d2) {
  if (!(d1.field() == d2.field()) || d1.k() != d2.k()) {
    throw InvalidArgument("tilde_join needs both sets in the same AG(k,q)");
  }
  if (!is_scale_invariant(d1)) throw InvalidArgument("tilde_join: first set is not scale invariant");
  const unsigned q = d1.field().q();
  std::vector<PointIndex> pts;
  pts.reserve(d1.size() + d2.size());
  for (PointIndex x : d2.points()) pts.push_back(x * q);
  for (PointIndex x : d1.points()) pts.push_back(x * q + 1);
  std::optional<FamilyTag> tag;
  if (d1.tag() && d2.tag() && d1.tag()->family == d2.tag()->family && d1.tag()->h == d2.tag()->h) {
    tag = *d1.tag();
    tag->tilde = true;
  }
  return DefiningSet(d1.field(), d1.k() + 1, std::move(pts), tag);
}

bool is_scale_invariant(const DefiningSet& d) {
  const Field& f = d.field();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Point p = d.point(i);
    Point scaled = p;
    for (unsigned a = 2; a < f.q(); ++a) {
      for (std::size_t j = 0; j < p.coords.size(); ++j) scaled.coords[j] = f.mul(static_cast<ElemIndex>(a), p.coords[j]);
      if (!d.contains(encode_point(f, scaled.coords))) return false;
    }
  }
  return true;
}

bool is_cutting(const DefiningSet& d) {
  const Field& f = d.field();
  const unsigned k = d.k();
  if (d.ambient_size() > kMaxAmbientPoints) throw InvalidArgument("is_cutting: ambient space above the cap");
  // A hyperplane of AG(1,q) is the origin, which the empty set spans.
  if (k == 1) return true;
  std::vector<ElemIndex> values(d.ambient_size());
  // Lexicographic order fills the rank slowly (early points live in the last
  // coordinates), so scan in a fixed shuffled order instead.
  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), std::mt19937_64(0x5eed));
  std::vector<PointIndex> ranks;
  std::vector<Point> pts;
  ranks.reserve(d.size());
  pts.reserve(d.size());
  for (std::size_t i : order) {
    ranks.push_back(d[i]);
    pts.push_back(d.point(i));
  }
  for (PointIndex rep : detail::projective_representatives(f, k)) {
    const Point coeffs = decode_point(f, k, rep);
    detail::evaluate_functional(f, coeffs.coords, values);
    RowEchelon ech(f, k);
    for (std::size_t i = 0; i < ranks.size() && ech.rank() < k - 1; ++i) {
      if (values[ranks[i]] == 0) ech.insert(pts[i].coords);
    }
    if (ech.rank() < k - 1) return false;
  }
  return true;
}

std::string serialize(const DefiningSet& d) {
  std::ostringstream os;
  os << d.field().q() << ' ' << d.k() << ' ' << d.size() << '\n';
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Point p = d.point(i);
    for (std::size_t j = 0; j < p.coords.size(); ++j) os << (j ? " " : "") << unsigned{p.coords[j]};
    os << '\n';
  }
  return os.str();
}

DefiningSet parse_defining_set(std::string_view text) {
  std::istringstream is{std::string(text)};
  unsigned q = 0, k = 0;
  std::size_t n = 0;
  if (!(is >> q >> k >> n)) throw InvalidArgument("defining set: malformed header, expected \"q k n\"");
  const Field f = Field::of_order(q);
  std::vector<PointIndex> pts;
  pts.reserve(n);
  std::vector<ElemIndex> coords(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned j = 0; j < k; ++j) {
      unsigned v = 0;
      if (!(is >> v)) throw InvalidArgument("defining set: truncated point list");
      if (v >= q) throw InvalidArgument("defining set: coordinate out of range");
      coords[j] = static_cast<ElemIndex>(v);
    }
    pts.push_back(encode_point(f, coords));
  }
  std::string extra;
  if (is >> extra) throw InvalidArgument("defining set: trailing data after " + std::to_string(n) + " points");
  return DefiningSet(f, k, std::move(pts));
}

namespace detail {

void evaluate_functional(const Field& field, std::span<const ElemIndex> coeffs, std::span<ElemIndex> values) {
  const unsigned q = field.q();
  std::size_t len = 1;
  values[0] = 0;
  for (ElemIndex a : coeffs) {
    const ElemIndex* row = field.mul_row(a);
    for (std::size_t t = len; t-- > 0;) {
      const ElemIndex* plus = field.add_row(values[t]);
      ElemIndex* dst = values.data() + t * q;
      for (unsigned x = 0; x < q; ++x) dst[x] = plus[row[x]];
    }
    len *= q;
  }
}

std::vector<PointIndex> projective_representatives(const Field& field, unsigned k) {
  std::vector<PointIndex> reps;
  std::uint64_t block = 1;
  for (unsigned e = 0; e < k; ++e) {
    for (std::uint64_t r = block; r < 2 * block; ++r) reps.push_back(r);
    block *= field.q();
  }
  return reps;
}

}  // namespace detail

}  // namespace mincodes

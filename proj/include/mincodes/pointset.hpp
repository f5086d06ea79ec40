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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mincodes/field.hpp"

namespace mincodes {

/// Rank of a point of AG(k,q): its coordinates read as a base-q integer with
/// the first coordinate most significant, so rank order is lexicographic
/// order of coordinate vectors.
using PointIndex = std::uint64_t;

struct Point {
  std::vector<ElemIndex> coords;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Family { one = 1, two = 2, three = 3, four = 4 };

struct FamilyTag {
  Family family;
  unsigned h;
  bool relaxed = false;
  bool tilde = false;
};

/// Largest ambient space (q^k points) a constructor will enumerate.
inline constexpr std::uint64_t kMaxAmbientPoints = 1ull << 24;

/// A set of distinct nonzero points of AG(k,q). The point order fixes the
/// coordinate order of the code built from it.
class DefiningSet {
 public:
  /// Throws InvalidArgument on a zero point, a duplicate, or a rank >= q^k.
  DefiningSet(Field field, unsigned k, std::vector<PointIndex> points, std::optional<FamilyTag> tag = {});

  const Field& field() const noexcept { return field_; }
  unsigned k() const noexcept { return k_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::span<const PointIndex> points() const noexcept { return points_; }
  PointIndex operator[](std::size_t i) const noexcept { return points_[i]; }
  const std::optional<FamilyTag>& tag() const noexcept { return tag_; }

  /// q^k.
  std::uint64_t ambient_size() const noexcept { return ambient_; }

  Point point(std::size_t i) const;
  bool contains(PointIndex p) const;

 private:
  Field field_;
  unsigned k_;
  std::uint64_t ambient_;
  std::vector<PointIndex> points_;
  std::vector<PointIndex> sorted_;
  std::optional<FamilyTag> tag_;
};

/// q^k, throwing InvalidArgument if it does not fit in 63 bits.
std::uint64_t ambient_points(unsigned q, unsigned k);

PointIndex encode_point(const Field& field, std::span<const ElemIndex> coords);
Point decode_point(const Field& field, unsigned k, PointIndex index);

/// Defining sets of the four families, restricted to the first h coordinates:
///   one:   (x_1 + ... + x_h) x_1 ... x_h = 0,  4 <= h <= k
///   two:   prod_{i<j} (x_i + x_j) = 0,         3 <= h <= k
///   three: x_1 ... x_h prod_{i<j} (x_i + x_j) = 0,  3 <= h <= k
///   four:  x_1 ... x_h = 0,                    3 <= h <= k
/// With relaxed set, any 1 <= h <= k is accepted and the tag records it.
DefiningSet family1(const Field& field, unsigned k, unsigned h, bool relaxed = false);
DefiningSet family2(const Field& field, unsigned k, unsigned h, bool relaxed = false);
DefiningSet family3(const Field& field, unsigned k, unsigned h, bool relaxed = false);
DefiningSet family4(const Field& field, unsigned k, unsigned h, bool relaxed = false);
DefiningSet make_family(Family family, const Field& field, unsigned k, unsigned h, bool relaxed = false);

/// Smallest h the family accepts without the relaxed flag.
unsigned family_min_h(Family family) noexcept;

/// {(x,0) : x in d2} followed by {(x,1) : x in d1}, in AG(k+1,q).
/// d1 must be scale invariant.
DefiningSet tilde_join(const DefiningSet& d1, const DefiningSet& d2);

/// True iff a * D = D for every nonzero scalar a.
bool is_scale_invariant(const DefiningSet& d);

/// True iff for every hyperplane H through the origin the points of D on H
/// span H.
bool is_cutting(const DefiningSet& d);

/// Text form: "q k n" then one point per line as space-separated element
/// indices, every line newline-terminated.
std::string serialize(const DefiningSet& d);
DefiningSet parse_defining_set(std::string_view text);

namespace detail {

/// Fills values[x] = <coeffs, x> for every point rank x of AG(k,q).
/// values must hold q^k entries.
void evaluate_functional(const Field& field, std::span<const ElemIndex> coeffs, std::span<ElemIndex> values);

/// Ranks of the functionals whose first nonzero coefficient is 1, ascending;
/// one representative per hyperplane through the origin.
std::vector<PointIndex> projective_representatives(const Field& field, unsigned k);

}  // namespace detail

}  // namespace mincodes

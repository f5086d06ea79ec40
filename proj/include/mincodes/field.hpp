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
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace mincodes {

/// Element of GF(q) in index form: the coefficient vector of the
/// representative polynomial read as a base-p integer (constant term is the
/// least significant digit). 0 and 1 are the field identities.
using ElemIndex = std::uint8_t;

class FieldElem;

/// GF(p^m) with dense q x q addition and multiplication tables.
///
/// A Field is a cheap handle onto immutable shared tables; copies share the
/// same storage and are safe to use from several threads at once. Two fields
/// compare equal when they have the same (p, m), which by construction implies
/// the same modulus.
class Field {
 public:
  static constexpr unsigned kMaxOrder = 256;

  /// Builds GF(p^m) using the smallest monic irreducible of degree m, where
  /// candidates are ordered by the base-p integer of their low coefficients.
  /// Throws InvalidArgument for non-prime p, m < 1, or p^m > kMaxOrder.
  static Field make(unsigned p, unsigned m);

  /// Builds the field of order q, factoring q as p^m.
  static Field of_order(unsigned q);

  unsigned p() const noexcept;
  unsigned m() const noexcept;
  unsigned q() const noexcept;

  /// Coefficients of the modulus, low degree first; length m + 1.
  std::span<const unsigned> modulus() const noexcept;

  // Raw index arithmetic for enumeration loops. Operands must be < q.
  ElemIndex add(ElemIndex a, ElemIndex b) const noexcept { return add_[a * q_ + b]; }
  ElemIndex mul(ElemIndex a, ElemIndex b) const noexcept { return mul_[a * q_ + b]; }
  ElemIndex neg(ElemIndex a) const noexcept { return neg_[a]; }
  ElemIndex sub(ElemIndex a, ElemIndex b) const noexcept { return add(a, neg(b)); }
  /// Throws InvalidArgument for a == 0.
  ElemIndex inv(ElemIndex a) const;

  /// Row a of the multiplication table (q entries).
  const ElemIndex* mul_row(ElemIndex a) const noexcept { return mul_ + a * q_; }
  const ElemIndex* add_row(ElemIndex a) const noexcept { return add_ + a * q_; }

  FieldElem elem(unsigned index) const;
  FieldElem zero() const;
  FieldElem one() const;

  /// The q - 1 nonzero elements in index order.
  std::vector<FieldElem> nonzero_elements() const;

  /// "GF(p^m), modulus=[c0,c1,...,cm]".
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p() == b.p() && a.m() == b.m();
  }

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t);

  std::shared_ptr<const Tables> tables_;
  // Cached from tables_ for the inline accessors.
  unsigned q_ = 0;
  const ElemIndex* add_ = nullptr;
  const ElemIndex* mul_ = nullptr;
  const ElemIndex* neg_ = nullptr;
};

/// A field element bound to its field. Mixing elements of different fields
/// throws InvalidArgument.
class FieldElem {
 public:
  FieldElem(Field field, unsigned index);

  ElemIndex index() const noexcept { return index_; }
  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return index_ == 0; }

  FieldElem inv() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  Field field_;
  ElemIndex index_;
};

bool is_prime(unsigned n) noexcept;

}  // namespace mincodes

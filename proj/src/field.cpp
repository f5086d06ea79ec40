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

#include "mincodes/field.hpp"

#include <sstream>

#include "mincodes/errors.hpp"

namespace mincodes {

namespace {

using Poly = std::vector<unsigned>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients mod p.
Poly poly_mod(Poly a, const Poly& monic, unsigned p) {
  const std::size_t dd = monic.size() - 1;
  trim(a);
  while (a.size() > dd) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      a[shift + i] = (a[shift + i] + p * p - (lead * monic[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(unsigned index, unsigned p, unsigned m) {
  Poly d(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

unsigned undigits(const Poly& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Monic polynomial of degree deg whose low coefficients are the base-p digits
// of code.
Poly monic_from_code(unsigned code, unsigned p, unsigned deg) {
  Poly f = digits(code, p, deg);
  f.push_back(1);
  return f;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, p, d), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Field::Tables {
  unsigned p = 0, m = 0, q = 0;
  std::vector<unsigned> modulus;
  std::vector<ElemIndex> add, mul, neg, inv;
};

Field::Field(std::shared_ptr<const Tables> t)
    : tables_(std::move(t)),
      q_(tables_->q),
      add_(tables_->add.data()),
      mul_(tables_->mul.data()),
      neg_(tables_->neg.data()) {}

Field Field::make(unsigned p, unsigned m) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidArgument("field extension degree must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw InvalidArgument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                            " exceeds the supported maximum " + std::to_string(kMaxOrder));
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<unsigned>(q);

  for (unsigned code = 0;; ++code) {
    Poly f = monic_from_code(code, p, m);
    if (is_irreducible(f, p)) {
      t->modulus = f;
      break;
    }
  }

  const unsigned qq = t->q;
  t->add.resize(qq * qq);
  t->mul.resize(qq * qq);
  t->neg.resize(qq);
  t->inv.assign(qq, 0);
  for (unsigned a = 0; a < qq; ++a) {
    const Poly da = digits(a, p, m);
    for (unsigned b = 0; b < qq; ++b) {
      const Poly db = digits(b, p, m);
      Poly s(m);
      for (unsigned i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
      t->add[a * qq + b] = static_cast<ElemIndex>(undigits(s, p));

      Poly prod(2 * m, 0);
      for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      Poly r = poly_mod(prod, t->modulus, p);
      r.resize(m, 0);
      t->mul[a * qq + b] = static_cast<ElemIndex>(undigits(r, p));
    }
    Poly n(m);
    for (unsigned i = 0; i < m; ++i) n[i] = (p - da[i]) % p;
    t->neg[a] = static_cast<ElemIndex>(undigits(n, p));
  }
  for (unsigned a = 1; a < qq; ++a)
    for (unsigned b = 1; b < qq; ++b)
      if (t->mul[a * qq + b] == 1) {
        t->inv[a] = static_cast<ElemIndex>(b);
        break;
      }

  return Field(std::move(t));
}

Field Field::of_order(unsigned q) {
  if (q < 2) throw InvalidArgument("field order must be >= 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return make(p, m);
}

unsigned Field::p() const noexcept { return tables_->p; }
unsigned Field::m() const noexcept { return tables_->m; }
unsigned Field::q() const noexcept { return q_; }

std::span<const unsigned> Field::modulus() const noexcept { return tables_->modulus; }

ElemIndex Field::inv(ElemIndex a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return tables_->inv[a];
}

FieldElem Field::elem(unsigned index) const { return FieldElem(*this, index); }
FieldElem Field::zero() const { return FieldElem(*this, 0); }
FieldElem Field::one() const { return FieldElem(*this, 1); }

std::vector<FieldElem> Field::nonzero_elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_ - 1);
  for (unsigned i = 1; i < q_; ++i) out.emplace_back(*this, i);
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p() << "^" << m() << "), modulus=[";
  for (std::size_t i = 0; i < tables_->modulus.size(); ++i) os << (i ? "," : "") << tables_->modulus[i];
  os << "]";
  return os.str();
}

FieldElem::FieldElem(Field field, unsigned index) : field_(std::move(field)), index_(0) {
  if (index >= field_.q()) {
    throw InvalidArgument("element index " + std::to_string(index) + " out of range for GF(" +
                          std::to_string(field_.q()) + ")");
  }
  index_ = static_cast<ElemIndex>(index);
}

FieldElem FieldElem::inv() const { return FieldElem(field_, field_.inv(index_)); }

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
  if (!(a.field() == b.field())) throw InvalidArgument("operands belong to different fields");
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return FieldElem(a.field_, a.field_.add(a.index_, b.index_));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return FieldElem(a.field_, a.field_.sub(a.index_, b.index_));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return FieldElem(a.field_, a.field_.mul(a.index_, b.index_));
}

FieldElem operator-(const FieldElem& a) { return FieldElem(a.field_, a.field_.neg(a.index_)); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field() == b.field() && a.index_ == b.index_;
}

}  // namespace mincodes

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

#include "mincodes/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mincodes/errors.hpp"

namespace mincodes {

namespace {

std::string params_str(unsigned q, unsigned k, unsigned h) {
  return "(q=" + std::to_string(q) + ", k=" + std::to_string(k) + ", h=" + std::to_string(h) + ")";
}

unsigned characteristic(unsigned q) {
  if (q < 2) throw InvalidArgument("field order must be >= 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned rest = q;
  while (rest % p == 0) rest /= p;
  if (rest != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return p;
}

void check_range(const char* what, unsigned q, unsigned k, unsigned h, unsigned min_h, bool relaxed) {
  characteristic(q);
  if (h < 1 || h > k) throw InvalidArgument(std::string(what) + ": need 1 <= h <= k " + params_str(q, k, h));
  if (!relaxed && h < min_h) {
    throw InvalidArgument(std::string(what) + ": need h >= " + std::to_string(min_h) + " " + params_str(q, k, h));
  }
}

// q^(k-h) * x - 1
BigInt lift_length(unsigned q, unsigned k, unsigned h, const BigInt& prefix_count) {
  return ipow(BigInt(q), k - h) * prefix_count - 1;
}

// Collects formula terms and merges the ones that evaluate to the same weight.
class ReportBuilder {
 public:
  void add(const BigInt& weight, const BigInt& count, std::string label) {
    if (count == 0) return;
    auto& slot = rows_[weight];
    slot.count += count;
    slot.labels.push_back(std::move(label));
  }

  SpectrumReport build(SpectrumParams params, BigInt n, unsigned dim) const {
    SpectrumReport r;
    r.params = params;
    r.n = n;
    r.distribution = WeightDistribution(params.q, n, dim);
    for (const auto& [w, row] : rows_) {
      r.distribution.add(w, row.count);
      std::string origin;
      for (std::size_t i = 0; i < row.labels.size(); ++i) origin += (i ? " ∪ " : "") + row.labels[i];
      r.provenance.push_back({w, std::move(origin)});
    }
    return r;
  }

 private:
  struct Row {
    BigInt count = 0;
    std::vector<std::string> labels;
  };
  std::map<BigInt, Row> rows_;
};

std::string parts_label(const Composition& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.parts.size(); ++i) s += (i ? "," : "") + std::to_string(c.parts[i]);
  return s + "}";
}

bool is_simple_label(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

std::string wrap(const std::string& s) { return is_simple_label(s) ? s : "(" + s + ")"; }

BigInt tilde_weight(const BigInt& w, const BigInt& n, unsigned q) {
  return n + exact_div(BigInt(q - 2) * w, q - 1, "tilde weight");
}

void check_tilde_divisibility(const WeightDistribution& base, const BigInt& n, unsigned q) {
  if (q < 2) throw InvalidArgument("field order must be >= 2");
  if (n % (q - 1) != 0) {
    throw InvalidArgument("tilde_transfer: q-1 does not divide the base length " + n.str() +
                          "; the base set is not scale invariant");
  }
  for (const auto& [w, c] : base.table()) {
    if (w % (q - 1) != 0) {
      throw InvalidArgument("tilde_transfer: base weight " + w.str() + " is not divisible by q-1");
    }
  }
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

BigInt family1_length(unsigned q, unsigned k, unsigned h) {
  check_range("family1_length", q, k, h, 1, true);
  const BigInt qq = q, qm1 = q - 1;
  BigInt inner = ipow(qq, h + 1) - ipow(qm1, h + 1) + (h % 2 == 0 ? qm1 : BigInt(-qm1));
  return exact_div(ipow(qq, k - h) * inner, qq, "family1_length") - 1;
}

BigInt lambda_r_pos(unsigned q, unsigned k, unsigned h) {
  check_range("lambda_r_pos", q, k, h, 1, true);
  if (k <= h) throw InvalidArgument("lambda_r_pos: needs k > h " + params_str(q, k, h));
  const BigInt qq = q;
  return ipow(qq, k - h - 1) * (ipow(qq, h) + psi(h, q) - ipow(BigInt(q - 1), h));
}

BigInt lambda_r_zero(unsigned q, unsigned k, unsigned h, unsigned s, const Composition& parts) {
  check_range("lambda_r_zero", q, k, h, 1, true);
  if (s < 1 || s > h) throw InvalidArgument("lambda_r_zero: need 1 <= s <= h");
  if (parts.total() != s) throw InvalidArgument("lambda_r_zero: parts do not sum to s");
  const BigInt qq = q, qm1 = q - 1;
  // A_{r_1..r_l, h-s} via one more step of the block recursion; the extra
  // block carries coefficient 0. A_{r_1..r_l, 0} = A_{r_1..r_l}.
  const BigInt a_r = count_A(parts, q, true);
  const unsigned rest = h - s;
  const BigInt a_ext = rest == 0 ? a_r : psi(s, q) * phi(rest, q) + (rest % 2 == 0 ? a_r : BigInt(-a_r));
  return ipow(qq, k - 1) - ipow(qm1, h - s) * ipow(qq, k - h) * psi(s, q) + ipow(qq, k - h) * a_ext;
}

SpectrumReport family1_distribution(unsigned q, unsigned k, unsigned h, bool relaxed) {
  check_range("family1_distribution", q, k, h, 4, relaxed);
  const BigInt n = family1_length(q, k, h);
  ReportBuilder b;
  b.add(0, 1, "0");
  if (k > h) b.add(n - lambda_r_pos(q, k, h) + 1, ipow(BigInt(q), k) - ipow(BigInt(q), h), "r>=1");
  for (unsigned s = 1; s <= h; ++s) {
    for (const auto& pm : enumerate_part_multisets(s, q - 1)) {
      const unsigned l = static_cast<unsigned>(pm.parts.length());
      const BigInt count = binomial(h, s) * multinomial(s, pm.parts.parts) * multinomial(l, pm.type.multiplicities) *
                           binomial(q - 1, l);
      const BigInt w = n - lambda_r_zero(q, k, h, s, pm.parts) + 1;
      b.add(w, count, "r=0, s=" + std::to_string(s) + ", " + parts_label(pm.parts));
    }
  }
  return b.build({q, k, h, Family::one, false}, n, k);
}

BigInt family2_length(unsigned q, unsigned k, unsigned h) {
  check_range("family2_length", q, k, h, 1, true);
  const BigInt qq = q;
  if (characteristic(q) == 2) {
    if (h > q) return ipow(qq, k) - 1;
    BigInt falling = 1;
    for (unsigned i = 0; i < h; ++i) falling *= q - i;
    return lift_length(q, k, h, ipow(qq, h) - falling);
  }
  return lift_length(q, k, h, ipow(qq, h) - gamma_cap(h, q) - BigInt(h) * gamma_cap(h - 1, q));
}

BigInt family3_length(unsigned q, unsigned k, unsigned h) {
  check_range("family3_length", q, k, h, 1, true);
  const BigInt qq = q;
  if (characteristic(q) == 2) {
    if (h > q + 1) return ipow(qq, k) - 1;
    BigInt falling = 1;
    for (unsigned i = 1; i <= h; ++i) falling *= q - i;
    return lift_length(q, k, h, ipow(qq, h) - falling);
  }
  return lift_length(q, k, h, ipow(qq, h) - gamma_cap(h, q));
}

namespace {

void check_min_weight_hypotheses(const char* what, unsigned q, unsigned k, unsigned h) {
  if (q <= 5 || characteristic(q) == 2) {
    throw InvalidArgument(std::string(what) + ": only established for odd q > 5 " + params_str(q, k, h));
  }
  check_range(what, q, k, h, 3, false);
}

std::vector<Functional> pair_sum_witnesses(unsigned k, unsigned h) {
  std::vector<Functional> out;
  for (unsigned i = 0; i < h; ++i)
    for (unsigned j = i + 1; j < h; ++j) {
      Functional f{std::vector<ElemIndex>(k, 0)};
      f.coeffs[i] = f.coeffs[j] = 1;
      out.push_back(std::move(f));
    }
  return out;
}

}  // namespace

MinWeight family2_min_weight(unsigned q, unsigned k, unsigned h) {
  check_min_weight_hypotheses("family2_min_weight", q, k, h);
  return {family2_length(q, k, h) - ipow(BigInt(q), k - 1) + 1, pair_sum_witnesses(k, h)};
}

MinWeight family3_min_weight(unsigned q, unsigned k, unsigned h) {
  check_min_weight_hypotheses("family3_min_weight", q, k, h);
  MinWeight mw{family3_length(q, k, h) - ipow(BigInt(q), k - 1) + 1, pair_sum_witnesses(k, h)};
  for (unsigned i = 0; i < h; ++i) {
    Functional f{std::vector<ElemIndex>(k, 0)};
    f.coeffs[i] = 1;
    mw.witnesses.push_back(std::move(f));
  }
  return mw;
}

BigInt family4_length(unsigned q, unsigned k, unsigned h) {
  check_range("family4_length", q, k, h, 1, true);
  return lift_length(q, k, h, ipow(BigInt(q), h) - ipow(BigInt(q - 1), h));
}

BigInt family4_weight_s(unsigned q, unsigned k, unsigned h, unsigned s) {
  if (s < 1 || s > h) throw InvalidArgument("family4_weight_s: need 1 <= s <= h");
  const BigInt qq = q;
  return family4_length(q, k, h) - ipow(qq, k - 1) + ipow(qq, k - h) * ipow(BigInt(q - 1), h - s) * psi(s, q) + 1;
}

BigInt family4_weight_w(unsigned q, unsigned k, unsigned h) {
  if (k <= h) throw InvalidArgument("family4_weight_w needs k > h");
  const BigInt n = family4_length(q, k, h);
  const BigInt qq = q;
  // q^(k-h-1) (q-1)^h = (q-1)^h q^(k-h) / q
  const BigInt middle = exact_div(ipow(qq, k - h) * ipow(BigInt(q - 1), h), qq, "family4_weight_w");
  return n - ipow(qq, k - 1) + middle + 1;
}

SpectrumReport family4_distribution(unsigned q, unsigned k, unsigned h, bool relaxed) {
  check_range("family4_distribution", q, k, h, 3, relaxed);
  const BigInt n = family4_length(q, k, h);
  ReportBuilder b;
  b.add(0, 1, "0");
  if (k > h) b.add(family4_weight_w(q, k, h), ipow(BigInt(q), k) - ipow(BigInt(q), h), "w");
  for (unsigned s = 1; s <= h; ++s) {
    b.add(family4_weight_s(q, k, h, s), binomial(h, s) * ipow(BigInt(q - 1), s), "w_" + std::to_string(s));
  }
  return b.build({q, k, h, Family::four, false}, n, k);
}

WeightDistribution tilde_transfer(const WeightDistribution& base, const BigInt& n, unsigned q) {
  if (!base.includes_zero_word()) throw InvalidArgument("tilde_transfer: base distribution must include the zero word");
  check_tilde_divisibility(base, n, q);
  WeightDistribution out(q, 2 * n, base.dim() + 1);
  for (const auto& [w, c] : base.table()) {
    out.add(2 * w, c);
    out.add(tilde_weight(w, n, q), BigInt(q - 1) * c);
  }
  return out;
}

SpectrumReport tilde_report(const SpectrumReport& base) {
  const unsigned q = base.params.q;
  const BigInt& n = base.n;
  if (!base.distribution.includes_zero_word()) {
    throw InvalidArgument("tilde_report: base distribution must include the zero word");
  }
  check_tilde_divisibility(base.distribution, n, q);
  ReportBuilder b;
  for (const Provenance& row : base.provenance) {
    const BigInt c = base.distribution.count_of(row.weight);
    if (row.weight == 0) {
      b.add(0, c, "0");
      b.add(n, BigInt(q - 1) * c, "n");
      continue;
    }
    b.add(2 * row.weight, c, "2" + wrap(row.origin));
    b.add(tilde_weight(row.weight, n, q), BigInt(q - 1) * c, "n+" + wrap(row.origin) + "(q-2)/(q-1)");
  }
  SpectrumParams p = base.params;
  p.tilde = true;
  return b.build(p, 2 * n, base.distribution.dim() + 1);
}

SpectrumReport family4_tilde_distribution(unsigned q, unsigned k, unsigned h, bool relaxed) {
  return tilde_report(family4_distribution(q, k, h, relaxed));
}

SpectrumReport family1_tilde_distribution(unsigned q, unsigned k, unsigned h, bool relaxed) {
  return tilde_report(family1_distribution(q, k, h, relaxed));
}

SpectrumReport closed_form_report(const SpectrumParams& params, bool relaxed) {
  switch (params.family) {
    case Family::one:
      return params.tilde ? family1_tilde_distribution(params.q, params.k, params.h, relaxed)
                          : family1_distribution(params.q, params.k, params.h, relaxed);
    case Family::four:
      return params.tilde ? family4_tilde_distribution(params.q, params.k, params.h, relaxed)
                          : family4_distribution(params.q, params.k, params.h, relaxed);
    case Family::two:
    case Family::three:
      break;
  }
  throw InvalidArgument("family " + std::to_string(static_cast<int>(params.family)) +
                        " has no closed-form weight distribution; use enumeration");
}

std::string to_json(const SpectrumReport& report) {
  std::ostringstream os;
  const auto& p = report.params;
  os << "{\"family\":" << static_cast<int>(p.family) << ",\"tilde\":" << (p.tilde ? "true" : "false")
     << ",\"q\":" << p.q << ",\"k\":" << p.k << ",\"h\":" << p.h << ",\"n\":" << report.n
     << ",\"dim\":" << report.distribution.dim() << ",\"weights\":[";
  bool first = true;
  for (const auto& [w, c] : report.distribution.table()) {
    os << (first ? "" : ",") << "{\"w\":" << w << ",\"count\":" << c << "}";
    first = false;
  }
  os << "],\"provenance\":[";
  first = true;
  for (const auto& row : report.provenance) {
    os << (first ? "" : ",") << "{\"w\":" << row.weight << ",\"origin\":\"" << json_escape(row.origin) << "\"}";
    first = false;
  }
  os << "]}";
  return os.str();
}

std::string to_csv(const SpectrumReport& report) {
  std::ostringstream os;
  os << "weight,count,origin\n";
  for (const auto& row : report.provenance) {
    os << row.weight << ',' << report.distribution.count_of(row.weight) << ",\"" << row.origin << "\"\n";
  }
  return os.str();
}

std::string to_markdown(const SpectrumReport& report) {
  std::ostringstream os;
  const auto& p = report.params;
  os << "Weight distribution of family " << static_cast<int>(p.family) << (p.tilde ? " [D,D]~" : "")
     << ", q=" << p.q << " k=" << p.k << " h=" << p.h << ", length " << report.n << "\n\n";
  os << "| Weight i | B_i | Row |\n|---|---|---|\n";
  for (const auto& row : report.provenance) {
    os << "| " << row.weight << " | " << report.distribution.count_of(row.weight) << " | " << row.origin << " |\n";
  }
  return os.str();
}

}  // namespace mincodes

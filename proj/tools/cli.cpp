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

#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "mincodes/errors.hpp"
#include "mincodes/spectra.hpp"

namespace mincodes::cli {

namespace {

constexpr const char* kOutsideHypotheses = "outside paper hypotheses";

// Length and, where established, minimum weight of families 2 and 3.
struct ParameterFormula {
  BigInt n;
  std::optional<MinWeight> min_weight;
};

bool min_weight_applies(unsigned q) {
  unsigned p = 2;
  while (q % p != 0) ++p;
  return q > 5 && p != 2;
}

ParameterFormula parameter_formula(Family fam, unsigned q, unsigned k, unsigned h) {
  ParameterFormula pf;
  const bool in_range = h >= 3;
  if (fam == Family::two) {
    pf.n = family2_length(q, k, h);
    if (in_range && min_weight_applies(q)) pf.min_weight = family2_min_weight(q, k, h);
  } else {
    pf.n = family3_length(q, k, h);
    if (in_range && min_weight_applies(q)) pf.min_weight = family3_min_weight(q, k, h);
  }
  return pf;
}

void validate(const RunConfig& cfg) {
  if (cfg.budget == 0) throw InvalidArgument("budget must be positive");
  if (cfg.h < 1 || cfg.h > cfg.k) throw InvalidArgument("need 1 <= h <= k");
  if (!cfg.relaxed && cfg.h < family_min_h(cfg.family)) {
    throw InvalidArgument("family " + std::to_string(static_cast<int>(cfg.family)) + " needs h >= " +
                          std::to_string(family_min_h(cfg.family)) + "; pass --relaxed to go below");
  }
}

bool outside_hypotheses(const RunConfig& cfg) { return cfg.h < family_min_h(cfg.family); }

DefiningSet build_set(const RunConfig& cfg) {
  const Field f = Field::of_order(cfg.q);
  DefiningSet d = make_family(cfg.family, f, cfg.k, cfg.h, cfg.relaxed);
  if (cfg.tilde) return tilde_join(d, d);
  return d;
}

std::string json_coeffs(const Functional& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(f.coeffs[i]);
  return s + "]";
}

std::string params_json(const RunConfig& cfg) {
  std::ostringstream os;
  os << "\"family\":" << static_cast<int>(cfg.family) << ",\"tilde\":" << (cfg.tilde ? "true" : "false")
     << ",\"q\":" << cfg.q << ",\"k\":" << cfg.k << ",\"h\":" << cfg.h;
  return os.str();
}

std::string parameter_formula_json(const RunConfig& cfg, const ParameterFormula& pf) {
  std::ostringstream os;
  os << "{" << params_json(cfg) << ",\"n\":" << pf.n << ",\"min_weight\":";
  if (pf.min_weight)
    os << pf.min_weight->weight;
  else
    os << "null";
  os << "}";
  return os.str();
}

std::string markdown_distribution(const WeightDistribution& d, const std::string& title) {
  std::ostringstream os;
  os << title << "\n\n| Weight i | B_i |\n|---|---|\n";
  for (const auto& [w, c] : d.table()) os << "| " << w << " | " << c << " |\n";
  return os.str();
}

std::string render_single_enumerated(const RunConfig& cfg, const WeightDistribution& dist) {
  switch (cfg.format) {
    case Format::json:
      return to_json(dist) + "\n";
    case Format::csv:
      return to_csv(dist);
    case Format::md:
      break;
  }
  std::ostringstream title;
  title << "Enumerated weight distribution of family " << static_cast<int>(cfg.family) << (cfg.tilde ? " [D,D]~" : "")
        << ", q=" << cfg.q << " k=" << cfg.k << " h=" << cfg.h << ", length " << dist.n();
  return markdown_distribution(dist, title.str());
}

std::string render_parameter_formula(const RunConfig& cfg, const ParameterFormula& pf) {
  switch (cfg.format) {
    case Format::json:
      return parameter_formula_json(cfg, pf) + "\n";
    case Format::csv: {
      std::ostringstream os;
      os << "key,value\nn," << pf.n << "\nmin_weight,";
      if (pf.min_weight) os << pf.min_weight->weight;
      os << "\n";
      return os.str();
    }
    case Format::md:
      break;
  }
  std::ostringstream os;
  os << "| Parameter | Value |\n|---|---|\n| n | " << pf.n << " |\n| min weight | ";
  if (pf.min_weight)
    os << pf.min_weight->weight;
  else
    os << "n/a";
  os << " |\n";
  return os.str();
}

std::string render_both(const RunConfig& cfg, const std::optional<SpectrumReport>& report,
                        const std::optional<ParameterFormula>& pf, const WeightDistribution& dist, bool match) {
  const bool outside = outside_hypotheses(cfg);
  std::ostringstream os;
  switch (cfg.format) {
    case Format::json:
      os << "{\"formula\":" << (report ? to_json(*report) : parameter_formula_json(cfg, *pf))
         << ",\"enumerate\":" << to_json(dist) << ",\"match\":" << (match ? "true" : "false");
      if (outside) os << ",\"hypotheses\":\"" << kOutsideHypotheses << "\"";
      os << "}\n";
      return os.str();
    case Format::csv:
      if (report) {
        os << "weight,formula_count,enumerate_count\n";
        std::map<BigInt, std::pair<BigInt, BigInt>> rows;
        for (const auto& [w, c] : report->distribution.table()) rows[w].first = c;
        for (const auto& [w, c] : dist.table()) rows[w].second = c;
        for (const auto& [w, cc] : rows) os << w << ',' << cc.first << ',' << cc.second << '\n';
      } else {
        os << "key,formula,enumerate\nn," << pf->n << ',' << dist.n() << "\nmin_weight,";
        if (pf->min_weight) os << pf->min_weight->weight;
        os << ',' << dist.min_nonzero() << '\n';
      }
      os << "match," << (match ? "true" : "false") << '\n';
      if (outside) os << "hypotheses," << kOutsideHypotheses << '\n';
      return os.str();
    case Format::md:
      break;
  }
  if (report) {
    os << to_markdown(*report) << "\n";
  } else {
    os << render_parameter_formula(cfg, *pf) << "\n";
  }
  os << render_single_enumerated(cfg, dist) << "\nmatch: " << (match ? "true" : "false") << "\n";
  if (outside) os << "hypotheses: " << kOutsideHypotheses << "\n";
  return os.str();
}

bool parameters_match(const ParameterFormula& pf, const WeightDistribution& dist) {
  if (pf.n != dist.n()) return false;
  if (pf.min_weight && dist.total_nonzero() > 0 && pf.min_weight->weight != dist.min_nonzero()) return false;
  return true;
}

template <typename Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const InvalidArgument& e) {
    return {kInvalidParams, "", std::string("error: ") + e.what() + "\n"};
  } catch (const BudgetExceeded& e) {
    return {kBudgetExceeded, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("MINCODES_BUDGET")) {
    try {
      const unsigned long long v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultBudget;
}

CommandResult cmd_weights(const RunConfig& cfg) {
  return guarded([&]() -> CommandResult {
    validate(cfg);
    std::optional<SpectrumReport> report;
    std::optional<ParameterFormula> pf;
    if (cfg.method != Method::enumerate) {
      if (cfg.family == Family::one || cfg.family == Family::four) {
        report = closed_form_report({cfg.q, cfg.k, cfg.h, cfg.family, cfg.tilde}, cfg.relaxed);
      } else if (cfg.tilde) {
        throw InvalidArgument("no closed form for the [D,D]~ code of family " +
                              std::to_string(static_cast<int>(cfg.family)) + "; use --method enumerate");
      } else {
        pf = parameter_formula(cfg.family, cfg.q, cfg.k, cfg.h);
      }
    }
    if (cfg.method == Method::formula) {
      if (report) {
        switch (cfg.format) {
          case Format::json:
            return {kOk, to_json(*report) + "\n", ""};
          case Format::csv:
            return {kOk, to_csv(*report), ""};
          case Format::md:
            return {kOk, to_markdown(*report), ""};
        }
      }
      return {kOk, render_parameter_formula(cfg, *pf), ""};
    }

    const DefiningSet d = build_set(cfg);
    EnumerationOptions opts;
    opts.budget = cfg.budget;
    opts.threads = cfg.threads;
    const WeightDistribution dist = weight_distribution_bruteforce(d, opts);
    if (cfg.method == Method::enumerate) return {kOk, render_single_enumerated(cfg, dist), ""};

    const bool match = report ? report->distribution == dist : parameters_match(*pf, dist);
    CommandResult res{kOk, render_both(cfg, report, pf, dist, match), ""};
    if (!match) {
      if (outside_hypotheses(cfg)) {
        res.err = "note: formula and enumeration differ (" + std::string(kOutsideHypotheses) + ")\n";
      } else {
        res.exit_code = kMismatch;
        res.err = "error: formula and enumeration differ\n";
      }
    }
    return res;
  });
}

CommandResult cmd_minimal(const RunConfig& cfg) {
  return guarded([&]() -> CommandResult {
    validate(cfg);
    const DefiningSet d = build_set(cfg);
    EnumerationOptions opts;
    opts.budget = cfg.budget;
    opts.threads = cfg.threads;

    std::optional<WeightDistribution> dist;
    std::string note;
    if (enumeration_cost(d) <= cfg.budget) {
      dist = weight_distribution_bruteforce(d, opts);
    } else if (cfg.family == Family::one || cfg.family == Family::four) {
      dist = closed_form_report({cfg.q, cfg.k, cfg.h, cfg.family, cfg.tilde}, cfg.relaxed).distribution;
      note = "budget: weight distribution taken from the closed form";
    } else {
      throw BudgetExceeded(enumeration_cost(d), cfg.budget);
    }

    std::optional<MinimalityResult> direct;
    if (minimality_cost(d) <= cfg.budget) {
      direct = is_minimal_direct(d, opts);
    } else {
      if (!note.empty()) note += "; ";
      note += "budget: direct minimality check needs " + std::to_string(minimality_cost(d)) +
              " operations, budget is " + std::to_string(cfg.budget);
    }
    const bool ab = ab_check(*dist);

    std::ostringstream os;
    switch (cfg.format) {
      case Format::json:
        os << "{" << params_json(cfg) << ",\"n\":" << d.size() << ",\"dim\":" << dist->dim()
           << ",\"d\":" << dist->min_nonzero() << ",\"ab_holds\":" << (ab ? "true" : "false");
        if (direct) {
          os << ",\"minimal_direct\":" << (direct->minimal ? "true" : "false");
          if (direct->witness) {
            os << ",\"witness\":{\"outer\":" << json_coeffs(direct->witness->first)
               << ",\"inner\":" << json_coeffs(direct->witness->second) << "}";
          }
        }
        if (!note.empty()) os << ",\"note\":\"" << note << "\"";
        os << "}\n";
        break;
      case Format::csv:
        os << "key,value\nn," << d.size() << "\ndim," << dist->dim() << "\nd," << dist->min_nonzero()
           << "\nab_holds," << (ab ? "true" : "false") << "\n";
        if (direct) {
          os << "minimal_direct," << (direct->minimal ? "true" : "false") << "\n";
          if (direct->witness) {
            os << "witness_outer,\"" << to_string(direct->witness->first) << "\"\nwitness_inner,\""
               << to_string(direct->witness->second) << "\"\n";
          }
        }
        if (!note.empty()) os << "note,\"" << note << "\"\n";
        break;
      case Format::md:
        os << "| Property | Value |\n|---|---|\n| n | " << d.size() << " |\n| dim | " << dist->dim() << " |\n| d | "
           << dist->min_nonzero() << " |\n| ab_holds | " << (ab ? "true" : "false") << " |\n";
        if (direct) {
          os << "| minimal_direct | " << (direct->minimal ? "true" : "false") << " |\n";
          if (direct->witness) {
            os << "| witness | supp " << to_string(direct->witness->second) << " inside supp "
               << to_string(direct->witness->first) << " |\n";
          }
        }
        if (!note.empty()) os << "| note | " << note << " |\n";
        break;
    }
    return {kOk, os.str(), ""};
  });
}

CommandResult cmd_pointset(const RunConfig& cfg) {
  return guarded([&]() -> CommandResult {
    validate(cfg);
    return {kOk, serialize(build_set(cfg)), ""};
  });
}

namespace {

struct SweepTask {
  Family family;
  unsigned q, k, h;
  bool tilde;
  std::string check;
};

std::vector<SweepTask> sweep_tasks(const SweepConfig& cfg) {
  std::vector<SweepTask> tasks;
  for (int fam = 1; fam <= 4; ++fam) {
    const Family family = static_cast<Family>(fam);
    const bool has_formula = family == Family::one || family == Family::four;
    for (int tilde = 0; tilde <= (has_formula ? 1 : 0); ++tilde) {
      for (unsigned q : cfg.fields) {
        for (unsigned k = family_min_h(family);; ++k) {
          const unsigned code_k = k + static_cast<unsigned>(tilde);
          if (ambient_points(q, code_k) > cfg.max_ambient) break;
          for (unsigned h = family_min_h(family); h <= k; ++h) {
            if (has_formula) {
              tasks.push_back({family, q, k, h, tilde != 0, "distribution"});
            } else {
              tasks.push_back({family, q, k, h, false, "length"});
              if (min_weight_applies(q)) tasks.push_back({family, q, k, h, false, "min_weight"});
            }
          }
        }
      }
    }
  }
  return tasks;
}

SweepRow run_task(const SweepTask& t, std::uint64_t budget) {
  SweepRow row{t.family, t.q, t.k, t.h, t.tilde, t.check, RowStatus::skipped, ""};
  try {
    const Field f = Field::of_order(t.q);
    const unsigned code_k = t.k + (t.tilde ? 1 : 0);
    if (ambient_points(t.q, code_k) > budget) {
      row.detail = "construction over budget";
      return row;
    }
    DefiningSet d = make_family(t.family, f, t.k, t.h);
    if (t.tilde) d = tilde_join(d, d);

    if (t.check == "length") {
      const BigInt n = t.family == Family::two ? family2_length(t.q, t.k, t.h) : family3_length(t.q, t.k, t.h);
      const bool ok = n == d.size();
      row.status = ok ? RowStatus::pass : RowStatus::fail;
      row.detail = "n=" + n.str() + (ok ? "" : " enumerated=" + std::to_string(d.size()));
      return row;
    }
    if (enumeration_cost(d) > budget) {
      row.detail = "needs " + std::to_string(enumeration_cost(d));
      return row;
    }
    EnumerationOptions opts;
    opts.budget = budget;
    const WeightDistribution dist = weight_distribution_bruteforce(d, opts);
    if (t.check == "min_weight") {
      const MinWeight mw =
          t.family == Family::two ? family2_min_weight(t.q, t.k, t.h) : family3_min_weight(t.q, t.k, t.h);
      bool ok = mw.weight == dist.min_nonzero();
      for (const Functional& w : mw.witnesses) ok = ok && codeword(d, w).weight == mw.weight;
      row.status = ok ? RowStatus::pass : RowStatus::fail;
      row.detail = "d=" + mw.weight.str() + (ok ? "" : " enumerated=" + dist.min_nonzero().str());
      return row;
    }
    const SpectrumReport report = closed_form_report({t.q, t.k, t.h, t.family, t.tilde});
    const bool ok = report.distribution == dist;
    row.status = ok ? RowStatus::pass : RowStatus::fail;
    row.detail = std::to_string(report.distribution.table().size()) + " weights";
  } catch (const std::exception& e) {
    row.status = RowStatus::fail;
    row.detail = e.what();
  }
  return row;
}

const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::pass:
      return "PASS";
    case RowStatus::fail:
      return "FAIL";
    case RowStatus::skipped:
      return "SKIPPED";
  }
  return "?";
}

}  // namespace

std::vector<SweepRow> verify_sweep(const SweepConfig& cfg) {
  const std::vector<SweepTask> tasks = sweep_tasks(cfg);
  std::vector<SweepRow> rows(tasks.size());
  unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  threads = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, tasks.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) rows[i] = run_task(tasks[i], cfg.budget);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

CommandResult cmd_verify_all(const SweepConfig& cfg) {
  if (cfg.budget == 0) return {kInvalidParams, "", "error: budget must be positive\n"};
  const std::vector<SweepRow> rows = verify_sweep(cfg);
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, skipped = 0;
  os << "family  tilde  q  k   h   check         result   detail\n";
  for (const SweepRow& r : rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%-7d %-6s %-2u %-3u %-3u %-13s %-8s ", static_cast<int>(r.family),
                  r.tilde ? "yes" : "no", r.q, r.k, r.h, r.check.c_str(), status_name(r.status));
    os << line << r.detail << "\n";
    switch (r.status) {
      case RowStatus::pass:
        ++pass;
        break;
      case RowStatus::fail:
        ++fail;
        break;
      case RowStatus::skipped:
        ++skipped;
        break;
    }
  }
  os << "rows: " << rows.size() << "  PASS: " << pass << "  FAIL: " << fail << "  SKIPPED: " << skipped << "\n";
  return {fail == 0 ? kOk : kMismatch, os.str(), ""};
}

int run(int argc, char** argv) {
  CLI::App app{"Minimal codes from defining sets: closed-form and enumerated weight distributions"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");

  RunConfig cfg;
  cfg.budget = default_budget();
  std::string output;
  int family = 4;
  const std::map<std::string, Method> methods{
      {"formula", Method::formula}, {"enumerate", Method::enumerate}, {"both", Method::both}};
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"md", Format::md}};

  auto add_code_options = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--family", family, "Defining-set family (1-4)")->required()->check(CLI::Range(1, 4));
    sub->add_option("--q", cfg.q, "Field order")->required();
    sub->add_option("--k", cfg.k, "Ambient dimension")->required();
    sub->add_option("--h", cfg.h, "Number of constrained coordinates")->required();
    sub->add_flag("--tilde", cfg.tilde, "Use the [D,D]~ code");
    sub->add_flag("--relaxed", cfg.relaxed, "Accept h below the family's range");
    sub->add_option("--budget", cfg.budget, "Maximum enumeration work (env MINCODES_BUDGET)");
    sub->add_option("--threads", cfg.threads, "Worker threads, 0 = all cores");
    sub->add_option("--output,-o", output, "Write to this file instead of stdout");
  };

  auto* weights = app.add_subcommand("weights", "Weight distribution by closed form, enumeration, or both");
  add_code_options(weights);
  weights->add_option("--method", cfg.method, "formula | enumerate | both")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  weights->add_option("--format", cfg.format, "json | csv | md")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* minimal = app.add_subcommand("minimal", "Ashikhmin-Barg condition and exhaustive minimality check");
  add_code_options(minimal);
  cfg.format = Format::md;
  minimal->add_option("--format", cfg.format, "json | csv | md")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* pointset = app.add_subcommand("pointset", "Print the defining set in text form");
  add_code_options(pointset);

  SweepConfig sweep;
  sweep.budget = default_budget();
  auto* verify = app.add_subcommand("verify-all", "Sweep every family and compare formulas with enumeration");
  verify->add_option("--budget", sweep.budget, "Maximum enumeration work per row (env MINCODES_BUDGET)");
  verify->add_option("--max-ambient", sweep.max_ambient, "Largest q^k swept");
  verify->add_option("--threads", sweep.threads, "Worker threads, 0 = all cores");
  verify->add_option("--output,-o", output, "Write to this file instead of stdout");

  unsigned field_q = 0;
  auto* field = app.add_subcommand("field", "Describe GF(q)");
  field->add_option("--q", field_q, "Field order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidParams;
  }
  cfg.family = static_cast<Family>(family);

  CommandResult res;
  if (*weights) {
    res = cmd_weights(cfg);
  } else if (*minimal) {
    res = cmd_minimal(cfg);
  } else if (*pointset) {
    res = cmd_pointset(cfg);
  } else if (*verify) {
    res = cmd_verify_all(sweep);
  } else if (*field) {
    try {
      res.out = Field::of_order(field_q).describe() + "\n";
    } catch (const InvalidArgument& e) {
      res = {kInvalidParams, "", std::string("error: ") + e.what() + "\n"};
    }
  }

  if (!output.empty() && !res.out.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << output << "\n";
      return kInvalidParams;
    }
    f << res.out;
  } else {
    std::cout << res.out;
  }
  std::cerr << res.err;
  return res.exit_code;
}

}  // namespace mincodes::cli

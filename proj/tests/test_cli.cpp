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

#include <doctest.h>

#include <cstdlib>

#include "cli.hpp"

using namespace mincodes;
using namespace mincodes::cli;

namespace {

RunConfig make(Family fam, unsigned q, unsigned k, unsigned h) {
  RunConfig c;
  c.family = fam;
  c.q = q;
  c.k = k;
  c.h = h;
  c.threads = 1;
  return c;
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

int run_args(std::vector<std::string> args) {
  std::vector<char*> argv;
  static std::string prog = "mincodes";
  argv.push_back(prog.data());
  for (auto& a : args) argv.push_back(a.data());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("weights: formula against enumeration") {
  RunConfig c = make(Family::four, 3, 3, 3);
  c.format = Format::json;
  auto r = cmd_weights(c);
  CHECK(r.exit_code == kOk);
  CHECK(has(r.out, "\"match\":true"));
  CHECK(has(r.out, "{\"w\":10,\"count\":6},{\"w\":12,\"count\":8},{\"w\":14,\"count\":12}"));

  c = make(Family::four, 5, 3, 3);
  c.tilde = true;
  c.format = Format::csv;
  r = cmd_weights(c);
  CHECK(r.exit_code == kOk);
  CHECK(has(r.out, "96,320,320\n"));
  CHECK(has(r.out, "match,true"));

  c = make(Family::two, 7, 3, 3);
  c.format = Format::json;
  r = cmd_weights(c);
  CHECK(r.exit_code == kOk);
  CHECK(has(r.out, "\"min_weight\":78"));
}

TEST_CASE("weights: errors and exit codes") {
  auto r = cmd_weights(make(Family::one, 3, 4, 2));
  CHECK(r.exit_code == kInvalidParams);
  CHECK(has(r.err, "h >= 4"));
  CHECK(cmd_weights(make(Family::four, 6, 3, 3)).exit_code == kInvalidParams);
  CHECK(cmd_weights(make(Family::four, 3, 3, 4)).exit_code == kInvalidParams);
  RunConfig c = make(Family::four, 3, 3, 3);
  c.budget = 0;
  CHECK(cmd_weights(c).exit_code == kInvalidParams);
  c.budget = 10;
  CHECK(cmd_weights(c).exit_code == kBudgetExceeded);
  c.method = Method::formula;
  CHECK(cmd_weights(c).exit_code == kOk);
  c = make(Family::two, 7, 3, 3);
  c.tilde = true;
  CHECK(cmd_weights(c).exit_code == kInvalidParams);
  c.method = Method::enumerate;
  CHECK(cmd_weights(c).exit_code == kOk);
}

TEST_CASE("weights: relaxed mismatches are labeled, not failed") {
  RunConfig c = make(Family::one, 3, 4, 1);
  c.relaxed = true;
  c.format = Format::json;
  const auto r = cmd_weights(c);
  CHECK(r.exit_code == kOk);
  CHECK(has(r.out, "\"match\":false"));
  CHECK(has(r.out, "outside paper hypotheses"));
}

TEST_CASE("weights: output is deterministic") {
  for (auto fmt : {Format::json, Format::csv, Format::md}) {
    RunConfig c = make(Family::one, 3, 5, 4);
    c.tilde = true;
    c.format = fmt;
    const auto a = cmd_weights(c);
    c.threads = 3;
    const auto b = cmd_weights(c);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == kOk);
  }
  RunConfig c = make(Family::four, 3, 3, 3);
  c.method = Method::formula;
  CHECK(has(cmd_weights(c).out, "| Weight i | B_i | Row |"));
}

TEST_CASE("minimal") {
  RunConfig c = make(Family::four, 5, 3, 3);
  c.format = Format::json;
  auto r = cmd_minimal(c);
  CHECK(r.exit_code == kOk);
  CHECK(has(r.out, "\"ab_holds\":false,\"minimal_direct\":true"));

  c = make(Family::four, 3, 2, 2);
  c.relaxed = true;
  c.format = Format::json;
  r = cmd_minimal(c);
  CHECK(has(r.out, "\"minimal_direct\":false"));
  CHECK(has(r.out, "\"witness\":{\"outer\":[1,1],\"inner\":[0,1]}"));

  c = make(Family::one, 3, 4, 4);
  c.format = Format::json;
  CHECK(has(cmd_minimal(c).out, "\"minimal_direct\":true"));

  c = make(Family::four, 5, 3, 3);
  c.format = Format::json;
  c.budget = 31 * 60 + 100;
  r = cmd_minimal(c);
  CHECK(r.exit_code == kOk);
  CHECK_FALSE(has(r.out, "minimal_direct"));
  CHECK(has(r.out, "\"note\":\"budget"));

  c.budget = 100;
  r = cmd_minimal(c);
  CHECK(r.exit_code == kOk);
  CHECK(has(r.out, "closed form"));
  CHECK(has(r.out, "\"ab_holds\":false"));

  c = make(Family::two, 7, 3, 3);
  c.budget = 100;
  CHECK(cmd_minimal(c).exit_code == kBudgetExceeded);
}

TEST_CASE("pointset") {
  const auto r = cmd_pointset(make(Family::four, 3, 3, 3));
  CHECK(r.exit_code == kOk);
  CHECK(r.out.rfind("3 3 18\n", 0) == 0);
}

TEST_CASE("verify-all") {
  SweepConfig s;
  s.max_ambient = 2000;
  s.threads = 2;
  const auto r = cmd_verify_all(s);
  CHECK(r.exit_code == kOk);
  CHECK(has(r.out, "FAIL: 0"));
  CHECK_FALSE(has(r.out, " FAIL "));
  s.threads = 1;
  CHECK(cmd_verify_all(s).out == r.out);

  s.budget = 1000;
  const auto rows = verify_sweep(s);
  std::size_t skipped = 0;
  for (const auto& row : rows) skipped += row.status == RowStatus::skipped;
  CHECK(2 * skipped > rows.size());
}

TEST_CASE("argument parsing") {
  CHECK(run_args({"weights", "--family", "4", "--q", "3", "--k", "3", "--h", "3"}) == kOk);
  CHECK(run_args({"weights", "--family", "1", "--q", "3", "--k", "4", "--h", "2"}) == kInvalidParams);
  CHECK(run_args({"weights", "--family", "9", "--q", "3", "--k", "4", "--h", "2"}) == kInvalidParams);
  CHECK(run_args({"weights", "--family", "4", "--q", "3", "--k", "3", "--h", "3", "--method", "bogus"}) ==
        kInvalidParams);
  CHECK(run_args({"field", "--q", "9"}) == kOk);
  CHECK(run_args({}) == kInvalidParams);
}

TEST_CASE("budget from the environment") {
  setenv("MINCODES_BUDGET", "12345", 1);
  CHECK(default_budget() == 12345);
  setenv("MINCODES_BUDGET", "junk", 1);
  CHECK(default_budget() == kDefaultBudget);
  unsetenv("MINCODES_BUDGET");
  CHECK(default_budget() == kDefaultBudget);
}

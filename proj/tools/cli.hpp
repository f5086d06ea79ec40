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
#include <string>
#include <vector>

#include "mincodes/code.hpp"
#include "mincodes/pointset.hpp"

namespace mincodes::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidParams = 2, kBudgetExceeded = 3 };

enum class Method { formula, enumerate, both };
enum class Format { json, csv, md };

struct RunConfig {
  Family family = Family::four;
  unsigned q = 3, k = 3, h = 3;
  bool tilde = false;
  Method method = Method::both;
  Format format = Format::md;
  std::uint64_t budget = kDefaultBudget;
  bool relaxed = false;
  unsigned threads = 0;
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Budget from MINCODES_BUDGET, falling back to kDefaultBudget.
std::uint64_t default_budget();

CommandResult cmd_weights(const RunConfig& cfg);
CommandResult cmd_minimal(const RunConfig& cfg);
CommandResult cmd_pointset(const RunConfig& cfg);

struct SweepConfig {
  std::uint64_t budget = kDefaultBudget;
  std::vector<unsigned> fields = {2, 3, 4, 5, 7};
  /// Largest q^k of the code being enumerated.
  std::uint64_t max_ambient = 100'000;
  unsigned threads = 0;
};

enum class RowStatus { pass, fail, skipped };

struct SweepRow {
  Family family;
  unsigned q, k, h;
  bool tilde;
  std::string check;
  RowStatus status;
  std::string detail;
};

/// Formula-versus-enumeration rows in canonical parameter order.
std::vector<SweepRow> verify_sweep(const SweepConfig& cfg);
CommandResult cmd_verify_all(const SweepConfig& cfg);

/// Parses argv and dispatches; writes to stdout/stderr or --output.
int run(int argc, char** argv);

}  // namespace mincodes::cli

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESONANCE_CLI_H_
#define RESONANCE_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "resonance/guards.h"

namespace resonance {

enum class OutputFormat { kText, kJson };

// Everything a subcommand needs, filled in from the command line.
struct JobConfig {
  std::string command;
  int n = 0;
  int i = 0;
  int i_max = 0;  // 0: as deep as the command allows
  int k = 0;      // prototypes: 0 for every k
  std::string method;
  std::vector<uint64_t> primes;
  std::vector<std::string> values;  // fit-coeffs inputs, decimal
  bool verify = false;
  bool with_regions = false;
  Guards guards;
  int threads = 1;
  uint64_t seed = 1;
  uint64_t sample_budget = 4096;
  std::string input_path;
  std::string certificate_path;
  std::string output_path;
  OutputFormat format = OutputFormat::kText;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitGuard = 2;
inline constexpr int kExitInvariant = 3;

// `args` excludes the program name. Results go to `out` (or to --output),
// diagnostics to `err`. Returns one of the exit codes above.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Runs an already parsed job; throws the library's error types.
void RunJob(const JobConfig& job, std::ostream& out);

}  // namespace resonance

#endif  // RESONANCE_CLI_H_

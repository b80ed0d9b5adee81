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

#ifndef RESONANCE_GUARDS_H_
#define RESONANCE_GUARDS_H_

#include <string>

namespace resonance {

// Per-method size caps. These are configuration, not constants: the CLI
// exposes --guard-override to lift them for deliberately long runs.
struct Guards {
  int whitney_max_n = 4;
  int finite_field_max_n = 6;
  int nbc_full_max_n = 6;
  int nbc_depth_max_n = 7;
  int nbc_depth_max_i = 4;
  int chambers_max_n = 5;
  int prototypes_max_i = 3;
  bool override_all = false;

  static Guards Unlimited() {
    Guards g;
    g.override_all = true;
    return g;
  }
};

// Throws GuardError when `value > cap` unless the guards are overridden.
void EnforceGuard(const Guards& guards, const std::string& what, long value,
                  long cap);

}  // namespace resonance

#endif  // RESONANCE_GUARDS_H_

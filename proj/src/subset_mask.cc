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

#include "resonance/subset_mask.h"

#include <string>
#include <vector>

#include "resonance/errors.h"
#include "resonance/guards.h"

namespace resonance {

void EnforceGuard(const Guards& guards, const std::string& what, long value,
                  long cap) {
  if (guards.override_all || value <= cap) return;
  throw GuardError(what + " = " + std::to_string(value) +
                   " exceeds the configured cap " + std::to_string(cap) +
                   " (use --guard-override for deliberately long runs)");
}

SubsetMask::SubsetMask(uint64_t bits, int n) : bits_(bits), n_(n) {
  if (n < 1 || n > kMaxMaskDimension) {
    throw ValidationError("mask dimension must lie in [1, 63], got " +
                          std::to_string(n));
  }
  if (bits == 0) throw ValidationError("hyperplanes need a nonempty subset");
  if (bits >> n) {
    throw ValidationError("mask " + std::to_string(bits) +
                          " has elements outside [" + std::to_string(n) + "]");
  }
}

SubsetMask SubsetMask::FromElements(std::initializer_list<int> elements,
                                    int n) {
  return FromElements(std::span<const int>(elements.begin(), elements.size()),
                      n);
}

SubsetMask SubsetMask::FromElements(std::span<const int> elements, int n) {
  uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n || e > kMaxMaskDimension) {
      throw ValidationError("element " + std::to_string(e) +
                            " outside [" + std::to_string(n) + "]");
    }
    bits |= uint64_t{1} << (e - 1);
  }
  return SubsetMask(bits, n);
}

std::vector<int> SubsetMask::Elements() const {
  std::vector<int> out;
  for (uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string SubsetMask::ToString() const {
  std::string s = "{";
  bool first = true;
  for (int e : Elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

int SameDimension(std::span<const SubsetMask> masks, int fallback) {
  if (masks.empty()) return fallback;
  const int n = masks.front().n();
  for (const SubsetMask& m : masks) {
    if (m.n() != n) {
      throw ValidationError("dimension mismatch: masks over [" +
                            std::to_string(n) + "] and [" +
                            std::to_string(m.n()) + "]");
    }
  }
  return n;
}

}  // namespace resonance

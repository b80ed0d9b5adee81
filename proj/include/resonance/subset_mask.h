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

#ifndef RESONANCE_SUBSET_MASK_H_
#define RESONANCE_SUBSET_MASK_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace resonance {

inline constexpr int kMaxMaskDimension = 63;

// A nonempty subset I of [n] = {1, ..., n}, stored as the word whose bit
// (i - 1) is set iff i is in I. The same value names the hyperplane
// H_I = {sum_{i in I} x_i = 0} and its normal vector chi_I.
//
// Masks compare by integer value, which is the binary order on hyperplanes.
// Comparing masks of different ambient dimension is meaningless; callers
// validate with SameDimension().
class SubsetMask {
 public:
  // Throws ValidationError unless 1 <= n <= 63 and 0 < bits < 2^n.
  SubsetMask(uint64_t bits, int n);

  // Elements are 1-based.
  static SubsetMask FromElements(std::initializer_list<int> elements, int n);
  static SubsetMask FromElements(std::span<const int> elements, int n);

  uint64_t bits() const { return bits_; }
  int n() const { return n_; }
  int size() const { return std::popcount(bits_); }
  bool Contains(int element) const {
    return (bits_ >> (element - 1)) & uint64_t{1};
  }
  std::vector<int> Elements() const;

  // "{1,3}".
  std::string ToString() const;

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.bits_ == b.bits_ && a.n_ == b.n_;
  }
  friend std::strong_ordering operator<=>(const SubsetMask& a,
                                          const SubsetMask& b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  uint64_t bits_;
  int n_;
};

// Returns the common dimension of `masks`, or `fallback` when empty. Throws
// ValidationError on a mismatch.
int SameDimension(std::span<const SubsetMask> masks, int fallback = 0);

// Shorthand for characteristic vectors in tests and examples: Chi({1,2}, 3).
inline SubsetMask Chi(std::initializer_list<int> elements, int n) {
  return SubsetMask::FromElements(elements, n);
}

}  // namespace resonance

#endif  // RESONANCE_SUBSET_MASK_H_

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

#include <gmpxx.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

#include "resonance/arrangement.h"
#include "resonance/guards.h"
#include "resonance/nbc.h"

namespace resonance {
namespace {

// A few minutes on one core; set RESONANCE_LONG_TESTS=1 to run.
bool LongTestsEnabled() {
  const char* v = std::getenv("RESONANCE_LONG_TESTS");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

TEST(LongTest, FullCharPolyOfA7) {
  if (!LongTestsEnabled()) GTEST_SKIP() << "set RESONANCE_LONG_TESTS=1";
  const CharPoly p = CharPolyViaNbc(
      7, Guards::Unlimited(),
      static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
  const std::vector<mpz_class> want = {1,        127,       7035,     215439,
                                       3831835,  37769977,  169824305, 135677633};
  EXPECT_EQ(p.BettiNumbers(), want);
  EXPECT_EQ(RegionCount(p), 347326352);
}

}  // namespace
}  // namespace resonance

// Copyright 2026 The Ancilla Authors
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

#include "ancilla/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace ancilla {
namespace {

TEST(SplitMixTest, ReferenceValues) {
  // First outputs of the reference SplitMix64 generator seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(splitmix64(0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
}

TEST(RngTest, StreamsAreReproducibleAndDistinct) {
  Rng a(42, 3);
  Rng b(42, 3);
  Rng c(42, 4);
  for (int i = 0; i < 10; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_NE(x, c.uniform());
  }
}

TEST(RngTest, MomentsOfNormals) {
  Rng rng(1);
  const int n = 200000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex z = rng.complex_normal();
    sum += z.real();
    sq += std::norm(z);
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);
}

TEST(RngTest, UniformIntStaysInRange) {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.uniform_int(3, 5);
    EXPECT_GE(v, 3);
    EXPECT_LE(v, 5);
  }
}

TEST(RandomObjectsTest, Invariants) {
  Rng rng(3);
  EXPECT_NEAR(random_unit_vector(rng, 7).norm(), 1.0, 1e-14);
  EXPECT_TRUE(is_isometry(random_isometry(rng, 6, 3)));
  EXPECT_TRUE(is_isometry(random_unitary(rng, 4)));
  EXPECT_THROW((void)random_isometry(rng, 2, 3), DimensionError);
  const ComplexMatrix rho = random_density(rng, 5, 2);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-14);
  EXPECT_TRUE(is_psd(rho));
  EXPECT_EQ(svd(rho).rank(), 2);
  const RealVector p = random_probabilities(rng, 4);
  EXPECT_NEAR(p.sum(), 1.0, 1e-14);
  EXPECT_GT(p.minCoeff(), 0.0);
}

}  // namespace
}  // namespace ancilla

// Copyright 2026 The Affect Audit Authors.
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

#ifndef AFFECT_AUDIT_STAT_TESTS_H_
#define AFFECT_AUDIT_STAT_TESTS_H_

#include <span>

#include "absl/status/statusor.h"

namespace affect_audit {

// ln Gamma(x) for x > 0 via the Lanczos approximation (g = 7, 9 terms),
// with the reflection formula below 0.5.
double LogGamma(double x);

// ln B(a, b).
double LogBeta(double a, double b);

// Regularized incomplete beta I_x(a, b), continued fraction (modified
// Lentz). Uses I_x(a, b) = 1 - I_{1-x}(b, a) when x > (a + 1) / (a + b + 2).
absl::StatusOr<double> RegularizedIncompleteBeta(double a, double b, double x);

// Two-sided Student-t tail 2 * P(T >= |t|) = I_{df / (df + t^2)}(df / 2, 1/2).
absl::StatusOr<double> StudentTTwoSidedSf(double t, double df);

// P(T <= t).
absl::StatusOr<double> StudentTCdf(double t, double df);

// Neumaier-compensated sum.
double CompensatedSum(std::span<const double> xs);

struct SampleStats {
  double mean = 0.0;
  double stddev = 0.0;  // divisor N - 1
};

// Requires at least two values. The variance is accumulated from
// compensated sums of squared deviations around the compensated mean.
absl::StatusOr<SampleStats> ComputeSampleStats(std::span<const double> xs);

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_STAT_TESTS_H_

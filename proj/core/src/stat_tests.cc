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

#include "affect_audit/stat_tests.h"
#include "affect_audit/str_util.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "absl/status/status.h"

namespace affect_audit {
namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr int kMaxIterations = 100000;
constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

// Continued fraction for I_x(a, b) without the front factor.
double BetaContinuedFraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

class NeumaierSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double Total() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace

double LogGamma(double x) {
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
    return std::log(std::numbers::pi / std::fabs(std::sin(std::numbers::pi * x))) -
           LogGamma(1.0 - x);
  }
  x -= 1.0;
  double sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (x + i);
  const double t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t +
         std::log(sum);
}

double LogBeta(double a, double b) {
  return LogGamma(a) + LogGamma(b) - LogGamma(a + b);
}

absl::StatusOr<double> RegularizedIncompleteBeta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    return absl::InvalidArgumentError(
        StrCat("incomplete beta needs a, b > 0 (got ", a, ", ", b, ")"));
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    return absl::InvalidArgumentError(
        StrCat("incomplete beta needs x in [0, 1] (got ", x, ")"));
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front =
      a * std::log(x) + b * std::log1p(-x) - LogBeta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - std::exp(log_front) * BetaContinuedFraction(b, a, 1.0 - x) / b;
}

absl::StatusOr<double> StudentTTwoSidedSf(double t, double df) {
  if (!(df > 0.0) || !std::isfinite(df)) {
    return absl::InvalidArgumentError(
        StrCat("degrees of freedom must be positive and finite (got ", df, ")"));
  }
  if (std::isnan(t)) return absl::InvalidArgumentError("t is NaN");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  const double x = df / (df + t * t);
  return RegularizedIncompleteBeta(df / 2.0, 0.5, x);
}

absl::StatusOr<double> StudentTCdf(double t, double df) {
  absl::StatusOr<double> sf2 = StudentTTwoSidedSf(t, df);
  if (!sf2.ok()) return sf2.status();
  return t >= 0.0 ? 1.0 - *sf2 / 2.0 : *sf2 / 2.0;
}

double CompensatedSum(std::span<const double> xs) {
  NeumaierSum sum;
  for (double x : xs) sum.Add(x);
  return sum.Total();
}

absl::StatusOr<SampleStats> ComputeSampleStats(std::span<const double> xs) {
  if (xs.size() < 2) {
    return absl::InvalidArgumentError(
        StrCat("sample standard deviation needs at least 2 values, got ",
                     xs.size()));
  }
  const double n = static_cast<double>(xs.size());
  SampleStats stats;
  stats.mean = CompensatedSum(xs) / n;
  NeumaierSum squares;
  for (double x : xs) {
    const double d = x - stats.mean;
    squares.Add(d * d);
  }
  stats.stddev = std::sqrt(squares.Total() / (n - 1.0));
  return stats;
}

}  // namespace affect_audit

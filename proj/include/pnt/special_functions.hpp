// Copyright 2026 The pntomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PNT_SPECIAL_FUNCTIONS_HPP
#define PNT_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace pnt {

inline double log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

/// Associated Laguerre polynomial L_n^m(x) by upward three-term recurrence
/// in n.  Valid for any integer m with n + m >= 0; x may be real or complex
/// (the quantizer kernels need complex arguments for complex ordering
/// parameters).
template <typename T>
T laguerre_assoc(int n, int m, T x) {
  if (n < 0) throw std::domain_error("laguerre_assoc: n must be >= 0");
  if (n + m < 0) throw std::domain_error("laguerre_assoc: requires n + m >= 0");
  if (n == 0) return T(1);
  T lm1 = T(1);
  T l = T(1.0 + m) - x;
  for (int k = 1; k < n; ++k) {
    T next = ((T(2.0 * k + m + 1) - x) * l - T(static_cast<double>(k + m)) * lm1) / T(k + 1.0);
    lm1 = l;
    l = next;
  }
  return l;
}

namespace detail {

// Power series around 0; adequate up to |z| ~ 12 in double precision.
template <typename T>
T bessel_j0_series(T z) {
  const T q = z * z * T(0.25);
  T term = T(1);
  T sum = T(1);
  for (int k = 1; k < 80; ++k) {
    term *= -q / T(static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1.0)) break;
  }
  return sum;
}

// J0(z) = (1/pi) * \int_0^pi cos(z sin t) dt, evaluated by the M-panel
// trapezoidal rule.  The integrand is an entire periodic function, so the
// aliasing error is 2*sum_k J_{2kM}(z), superexponentially small once
// 2M exceeds |z|.
template <typename T>
T bessel_j0_integral(T z) {
  const double az = std::abs(z);
  const int M = 32 + static_cast<int>(std::ceil(0.75 * az));
  const double pi = 3.14159265358979323846;
  T sum = T(0.5) * (std::cos(z * std::sin(0.0)) + std::cos(z * std::sin(pi)));
  for (int k = 1; k < M; ++k) sum += std::cos(z * std::sin(pi * k / M));
  return sum / T(static_cast<double>(M));
}

}  // namespace detail

/// Bessel function of the first kind, order zero.  Absolute error below
/// 1e-12 for |x| <= 50 (and far beyond).
inline double bessel_j0(double x) {
  if (!std::isfinite(x)) throw std::domain_error("bessel_j0: non-finite argument");
  const double ax = std::abs(x);
  return ax <= 9.0 ? detail::bessel_j0_series(x) : detail::bessel_j0_integral(x);
}

/// Entire extension used by the fidelity-kernel transcription, where the
/// argument picks up a complex factor e^{-it}.
inline std::complex<double> bessel_j0(std::complex<double> z) {
  return std::abs(z) <= 9.0 ? detail::bessel_j0_series(z) : detail::bessel_j0_integral(z);
}

}  // namespace pnt

#endif  // PNT_SPECIAL_FUNCTIONS_HPP

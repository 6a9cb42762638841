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

#ifndef PNT_FOCK_HPP
#define PNT_FOCK_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "pnt/complex_matrix.hpp"
#include "pnt/special_functions.hpp"

namespace pnt {

/// Truncated Fock space with basis |0> ... |dim-1>.  The truncation is an
/// artifact parameter: operators built here agree with their
/// infinite-dimensional matrix elements entry by entry, but products of
/// truncated matrices are reliable only on a sub-block that shrinks with
/// the displacement amplitude (displaced states leak upward by roughly
/// |alpha|^2 + n levels plus a spread of order |alpha| sqrt(n)).
struct FockSpace {
  int dim;
  explicit FockSpace(int d) : dim(d) {
    if (d < 2) throw std::invalid_argument("FockSpace: dim must be >= 2");
  }
};

/// Ordering parameter s of the quantizer family, with
/// e^{it} = (s-1)/(s+1).  Reconstruction sums run over
/// (s+1)/(s-1) powers of the photon number, so |e^{it}| > 1 is required for
/// convergence; we therefore reject Re(s) >= 0.  (The paper states no
/// convergence domain; this constraint is our inference from the trace-class
/// behaviour of the quantizer.)
struct OrderingParameter {
  Complex s;
  Complex t;       // principal branch of -i Log((s-1)/(s+1))
  Complex lambda;  // e^{it} = (s-1)/(s+1)

  static OrderingParameter from_s(Complex s_value) {
    if (s_value.real() >= 0.0)
      throw std::invalid_argument("OrderingParameter: requires Re(s) < 0");
    if (std::abs(std::abs(s_value) - 1.0) < 1e-12)
      throw std::invalid_argument("OrderingParameter: |s| = 1 is excluded");
    OrderingParameter o;
    o.s = s_value;
    o.lambda = (s_value - 1.0) / (s_value + 1.0);
    o.t = Complex(0.0, -1.0) * std::log(o.lambda);
    return o;
  }

  /// 4 / (pi (1 - s^2)), the quantizer normalization.
  Complex prefactor() const {
    const double pi = 3.14159265358979323846;
    return 4.0 / (pi * (1.0 - s * s));
  }
};

inline CMatrix annihilation(const FockSpace& space) {
  CMatrix a(space.dim);
  for (int n = 1; n < space.dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline CMatrix creation(const FockSpace& space) { return mat_adjoint(annihilation(space)); }

inline CMatrix number_op(const FockSpace& space) {
  CMatrix n(space.dim);
  for (int k = 0; k < space.dim; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

inline CMatrix fock_projector(const FockSpace& space, int n) {
  if (n < 0 || n >= space.dim) throw std::invalid_argument("fock_projector: n out of range");
  CMatrix p(space.dim);
  p(n, n) = 1.0;
  return p;
}

/// <m|D(alpha)|n> of the Weyl displacement D(alpha) = exp(alpha a^dag -
/// alpha^* a), from the Laguerre closed form.  These are the exact
/// infinite-dimensional matrix elements; no Pade/exponential error.
inline Complex displacement_entry(int m, int n, Complex alpha) {
  const double x = std::norm(alpha);
  if (x == 0.0) return m == n ? Complex(1.0) : Complex(0.0);
  const int q = std::min(m, n);
  const int p = std::max(m, n);
  const int d = p - q;
  const double lag = laguerre_assoc(q, d, x);
  const double mag = 0.5 * (log_factorial(q) - log_factorial(p)) - 0.5 * x + d * 0.5 * std::log(x);
  // alpha^d for m >= n, (-conj(alpha))^d for m < n, with |.|^d folded into mag
  const Complex dir = (m >= n) ? alpha : -std::conj(alpha);
  const Complex phase = std::pow(dir / std::abs(dir), d);
  return std::exp(mag) * phase * lag;
}

inline CMatrix displacement(const FockSpace& space, Complex alpha) {
  CMatrix dmat(space.dim);
  const double x = std::norm(alpha);
  if (x == 0.0) return CMatrix::identity(space.dim);
  const double lx = std::log(x);
  // Walk each diagonal p - q = d, advancing the Laguerre recurrence in q.
  for (int d = 0; d < space.dim; ++d) {
    double lag_prev = 1.0;           // L_0^d(x)
    double lag_cur = 1.0 + d - x;    // L_1^d(x)
    const Complex dir_up = std::pow(alpha / std::abs(alpha), d);              // m >= n
    const Complex dir_dn = std::pow(-std::conj(alpha) / std::abs(alpha), d);  // m < n
    for (int q = 0; q + d < space.dim; ++q) {
      double lag;
      if (q == 0) {
        lag = lag_prev;
      } else if (q == 1) {
        lag = lag_cur;
      } else {
        const double next = ((2.0 * (q - 1) + d + 1 - x) * lag_cur - (q - 1 + d) * lag_prev) / q;
        lag_prev = lag_cur;
        lag_cur = next;
        lag = lag_cur;
      }
      const double mag = 0.5 * (log_factorial(q) - log_factorial(q + d)) - 0.5 * x + d * 0.5 * lx;
      const double amp = std::exp(mag) * lag;
      dmat(q + d, q) = amp * dir_up;
      dmat(q, q + d) = (d == 0) ? Complex(amp) : amp * dir_dn;
    }
  }
  return dmat;
}

/// D(alpha)|n>, the displaced Fock state as a coefficient vector (column n
/// of the displacement matrix).
inline std::vector<Complex> displaced_fock_state(const FockSpace& space, int n, Complex alpha) {
  if (n < 0 || n >= space.dim) throw std::invalid_argument("displaced_fock_state: n out of range");
  std::vector<Complex> v(space.dim);
  for (int m = 0; m < space.dim; ++m) v[m] = displacement_entry(m, n, alpha);
  return v;
}

/// diag(e^{i t (k - shift)}), the diagonal power ((s-1)/(s+1))^{N - shift}
/// written through t.
inline CMatrix lambda_power(const FockSpace& space, Complex t, Complex shift) {
  CMatrix m(space.dim);
  for (int k = 0; k < space.dim; ++k)
    m(k, k) = std::exp(Complex(0.0, 1.0) * t * (Complex(static_cast<double>(k)) - shift));
  return m;
}

/// max |(D D^dag - 1)_{ij}| over the top-left block x block corner; reports
/// how far truncation has eroded unitarity at this amplitude.
inline double unitarity_defect(const FockSpace& space, Complex alpha, int block) {
  const CMatrix d = displacement(space, alpha);
  const CMatrix p = mat_mul(d, mat_adjoint(d));
  double m = 0.0;
  const int b = std::min(block, space.dim);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      m = std::max(m, std::abs(p(i, j) - (i == j ? 1.0 : 0.0)));
  return m;
}

}  // namespace pnt

#endif  // PNT_FOCK_HPP

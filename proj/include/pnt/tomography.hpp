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

#ifndef PNT_TOMOGRAPHY_HPP
#define PNT_TOMOGRAPHY_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "pnt/complex_matrix.hpp"
#include "pnt/errors.hpp"
#include "pnt/fock.hpp"
#include "pnt/parallel.hpp"
#include "pnt/quadrature.hpp"
#include "pnt/special_functions.hpp"
#include "pnt/states.hpp"
#include "pnt/tolerances.hpp"

namespace pnt {

/// Tomography label x = (n, alpha): photon count plus displacement.
struct PhasePoint {
  int n = 0;
  Complex alpha = 0.0;
};

/// Sampled tomogram w(n, alpha) over a disk quadrature times the photon
/// range 0..n_max.  Values are stored n-major: values[n * nodes + node].
struct TomogramGrid {
  QuadratureScheme scheme;
  int n_max = 0;
  std::vector<double> values;

  std::size_t node_count() const { return scheme.nodes.size(); }
  double value(int n, std::size_t node) const { return values[static_cast<std::size_t>(n) * node_count() + node]; }
  double& value(int n, std::size_t node) { return values[static_cast<std::size_t>(n) * node_count() + node]; }
};

inline bool grids_compatible(const TomogramGrid& a, const TomogramGrid& b) {
  if (a.n_max != b.n_max || a.node_count() != b.node_count()) return false;
  for (std::size_t k = 0; k < a.node_count(); ++k) {
    if (std::abs(a.scheme.nodes[k].alpha - b.scheme.nodes[k].alpha) > 1e-9) return false;
    if (std::abs(a.scheme.nodes[k].weight - b.scheme.nodes[k].weight) > 1e-12) return false;
  }
  return true;
}

namespace detail {

inline Complex ipow(Complex z, int k) {
  if (k < 0) return Complex(1.0) / ipow(z, -k);
  Complex r = 1.0, b = z;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace detail

/// Dequantizer of photon-number tomography: the displaced Fock projector
/// U(x) = D(alpha) |n><n| D(-alpha).
inline CMatrix dequantizer(const FockSpace& space, const PhasePoint& x) {
  if (x.n < 0 || x.n >= space.dim) throw std::invalid_argument("dequantizer: n out of range");
  const auto u = displaced_fock_state(space, x.n, x.alpha);
  CMatrix m(space.dim);
  for (int i = 0; i < space.dim; ++i)
    for (int j = 0; j < space.dim; ++j) m(i, j) = u[i] * std::conj(u[j]);
  return m;
}

/// Conjugated diagonal power G(alpha; lambda) = D(alpha) lambda^{N}
/// D(-alpha), evaluated from its exact matrix elements
///
///   <m|G|n> = e^{(lambda-1)|a|^2} sqrt(n!/m!) ((1-lambda) a)^{m-n}
///             lambda^n L_n^{m-n}( -(lambda-1)^2 |a|^2 / lambda ),   m >= n
///
/// (mirror with a -> conj(a) for m < n).  This is the analytic form of the
/// k-sum  sum_k lambda^k D|k><k|D^{-1}; summing the truncated matrix product
/// instead diverges once |lambda^2/(2 lambda - 1)| > 1, which is exactly the
/// regime of the default ordering parameter.
inline CMatrix quantizer_core(const FockSpace& space, Complex alpha, const OrderingParameter& ord) {
  const int dim = space.dim;
  const Complex lam = ord.lambda;
  const double x = std::norm(alpha);
  CMatrix g(dim);
  if (x == 0.0) {
    Complex lp = 1.0;
    for (int k = 0; k < dim; ++k) {
      g(k, k) = lp;
      lp *= lam;
    }
    return g;
  }
  const Complex cfac = lam - 1.0;
  const Complex z = -(cfac * cfac) * x / lam;
  const Complex gauss = cfac * x;  // exponent of the Gaussian factor
  const Complex w_up = -cfac * alpha;               // (1 - lambda) alpha
  const Complex w_dn = -cfac * std::conj(alpha);    // (1 - lambda) conj(alpha)
  const double logw = std::log(std::abs(w_up));
  const Complex pu = w_up / std::abs(w_up);
  const Complex pd = w_dn / std::abs(w_dn);
  for (int d = 0; d < dim; ++d) {
    // L_q^d(z) recurrence along the diagonal
    Complex lag_prev = 1.0;
    Complex lag_cur = Complex(1.0 + d) - z;
    const Complex pu_d = detail::ipow(pu, d);
    const Complex pd_d = detail::ipow(pd, d);
    Complex lam_q = 1.0;
    for (int q = 0; q + d < dim; ++q) {
      Complex lag;
      if (q == 0) {
        lag = lag_prev;
      } else if (q == 1) {
        lag = lag_cur;
      } else {
        const Complex next =
            ((Complex(2.0 * (q - 1) + d + 1) - z) * lag_cur - Complex(static_cast<double>(q - 1 + d)) * lag_prev) /
            Complex(static_cast<double>(q));
        lag_prev = lag_cur;
        lag_cur = next;
        lag = lag_cur;
      }
      const double mag = 0.5 * (log_factorial(q) - log_factorial(q + d)) + d * logw;
      const Complex common = std::exp(gauss + mag) * lam_q * lag;
      g(q + d, q) = common * pu_d;
      g(q, q + d) = (d == 0) ? common : common * pd_d;
      lam_q *= lam;
    }
  }
  return g;
}

/// Quantizer of the scheme,
///   D(x) = 4/(pi (1-s^2)) e^{-i t n} D(alpha) e^{i t N} D(-alpha).
/// The conjugation orientation matches the dequantizer above, which makes
/// (U, D) a biorthogonal pair; see the README for the sign discussion.
inline CMatrix quantizer(const FockSpace& space, const PhasePoint& x, const OrderingParameter& ord) {
  if (x.n < 0 || x.n >= space.dim) throw std::invalid_argument("quantizer: n out of range");
  const Complex scale = ord.prefactor() * detail::ipow(ord.lambda, -x.n);
  CMatrix g = quantizer_core(space, x.alpha, ord);
  g *= scale;
  return g;
}

/// Forward map rho -> w: w(n, alpha) = Tr[rho U(n, alpha)] =
/// <n| D(-alpha) rho D(alpha) |n>, sampled over the quadrature nodes.
inline TomogramGrid forward_tomogram(const DensityMatrix& rho, const QuadratureScheme& scheme,
                                     int n_max, const ParallelOptions& opt = {}) {
  const int dim = rho.space.dim;
  if (n_max < 0 || n_max > dim - 1)
    throw std::invalid_argument("forward_tomogram: need 0 <= n_max <= dim - 1");
  TomogramGrid grid;
  grid.scheme = scheme;
  grid.n_max = n_max;
  grid.values.assign(static_cast<std::size_t>(n_max + 1) * scheme.nodes.size(), 0.0);
  const std::size_t nodes = scheme.nodes.size();
  parallel_for(
      nodes,
      [&](std::size_t k) {
        const CMatrix b = displacement(rho.space, -scheme.nodes[k].alpha);
        for (int n = 0; n <= n_max; ++n) {
          // row n of (B rho) times conj(row n of B)
          Complex w = 0.0;
          for (int l = 0; l < dim; ++l) {
            Complex brho = 0.0;
            for (int j = 0; j < dim; ++j) brho += b(n, j) * rho.mat(j, l);
            w += brho * std::conj(b(n, l));
          }
          grid.value(n, k) = w.real();
        }
      },
      opt);
  return grid;
}

struct ReconstructionResult {
  DensityMatrix rho;
  double trace_defect = 0.0;       // |Tr - 1| before normalisation
  double hermiticity_defect = 0.0; // before hermitization
  double min_eigenvalue = 0.0;     // of the returned (normalised) matrix
};

/// Inverse map w -> rho:
///   rho = sum_{n <= n_max} sum_nodes weight w(n, alpha) D(n, alpha),
/// evaluated with the photon sum folded first (fixed order), then an
/// ordered reduction over nodes.  The result is hermitized and
/// trace-normalised; defects are reported as diagnostics.
inline ReconstructionResult reconstruct(const TomogramGrid& tomo, const OrderingParameter& ord,
                                        const FockSpace& space, const ParallelOptions& opt = {}) {
  const int dim = space.dim;
  if (tomo.n_max > dim - 1)
    throw std::invalid_argument("reconstruct: grid n_max exceeds dim - 1");
  const std::size_t nodes = tomo.node_count();
  std::vector<Complex> lam_neg(tomo.n_max + 1);
  for (int n = 0; n <= tomo.n_max; ++n) lam_neg[n] = detail::ipow(ord.lambda, -n);

  auto acc = chunked_sum<CMatrix>(
      nodes, [&] { return CMatrix(dim); },
      [&](std::size_t k, CMatrix& into) {
        Complex g = 0.0;
        for (int n = 0; n <= tomo.n_max; ++n) g += tomo.value(n, k) * lam_neg[n];
        const Complex f = tomo.scheme.nodes[k].weight * g;
        CMatrix gm = quantizer_core(space, tomo.scheme.nodes[k].alpha, ord);
        gm *= f;
        into += gm;
      },
      [](CMatrix& into, const CMatrix& part) { into += part; }, opt);

  acc *= ord.prefactor();
  const Complex tr = mat_trace(acc);
  const double trace_defect = std::abs(tr - 1.0);
  if (trace_defect > tol::kReconstructDivergence)
    throw DivergenceError("reconstruct: trace defect " + std::to_string(trace_defect) +
                          " signals divergent parameters");
  const double herm_defect = hermiticity_defect(acc);
  CMatrix rho = hermitize(acc);
  rho *= Complex(1.0 / mat_trace(rho).real());
  const double min_eig = min_hermitian_eigenvalue(rho);
  return {DensityMatrix{space, rho, false}, trace_defect, herm_defect, min_eig};
}

/// Dual symbol f^{(d)}_A(x) = Tr[A D(x)] of an observable A.
inline Complex dual_symbol(const CMatrix& a, const PhasePoint& x, const OrderingParameter& ord) {
  const FockSpace space(static_cast<int>(a.dim()));
  return mat_trace(mat_mul(a, quantizer(space, x, ord)));
}

/// Mean value <A> = sum_n int w(n, alpha) f^{(d)}_A(n, alpha) d alpha,
/// the dual-scheme pairing of a tomogram with an observable.
inline Complex expectation_via_dual(const TomogramGrid& tomo, const CMatrix& a,
                                    const OrderingParameter& ord, const ParallelOptions& opt = {}) {
  const FockSpace space(static_cast<int>(a.dim()));
  if (tomo.n_max > space.dim - 1)
    throw std::invalid_argument("expectation_via_dual: grid n_max exceeds dim - 1");
  std::vector<Complex> lam_neg(tomo.n_max + 1);
  for (int n = 0; n <= tomo.n_max; ++n) lam_neg[n] = detail::ipow(ord.lambda, -n);
  auto total = chunked_sum<Complex>(
      tomo.node_count(), [] { return Complex(0.0); },
      [&](std::size_t k, Complex& into) {
        Complex g = 0.0;
        for (int n = 0; n <= tomo.n_max; ++n) g += tomo.value(n, k) * lam_neg[n];
        const CMatrix gm = quantizer_core(space, tomo.scheme.nodes[k].alpha, ord);
        Complex tr = 0.0;
        for (std::size_t i = 0; i < a.dim(); ++i)
          for (std::size_t j = 0; j < a.dim(); ++j) tr += a(i, j) * gm(j, i);
        into += tomo.scheme.nodes[k].weight * g * tr;
      },
      [](Complex& into, const Complex& part) { into += part; }, opt);
  return ord.prefactor() * total;
}

}  // namespace pnt

#endif  // PNT_TOMOGRAPHY_HPP

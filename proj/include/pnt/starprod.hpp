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

#ifndef PNT_STARPROD_HPP
#define PNT_STARPROD_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "pnt/complex_matrix.hpp"
#include "pnt/errors.hpp"
#include "pnt/fock.hpp"
#include "pnt/special_functions.hpp"
#include "pnt/tolerances.hpp"
#include "pnt/tomography.hpp"

namespace pnt {

// ---------------------------------------------------------------------------
// Operator-trace kernel oracles.  These are the ground truth the closed-form
// transcriptions are measured against; they are built from the same
// quantizer/dequantizer constructors the reconstruction pipeline uses.
// ---------------------------------------------------------------------------

/// K(x1, x2, x3) = Tr[ D(x1) D(x2) U(x3) ].
inline Complex kernel_oracle(const PhasePoint& x1, const PhasePoint& x2, const PhasePoint& x3,
                             const OrderingParameter& ord, const FockSpace& space) {
  const CMatrix g1 = quantizer_core(space, x1.alpha, ord);
  const CMatrix g2 = quantizer_core(space, x2.alpha, ord);
  const auto u = displaced_fock_state(space, x3.n, x3.alpha);
  const int dim = space.dim;
  std::vector<Complex> t(dim, 0.0), r(dim, 0.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t[i] += g2(i, j) * u[j];
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r[i] += g1(i, j) * t[j];
  Complex v = 0.0;
  for (int i = 0; i < dim; ++i) v += std::conj(u[i]) * r[i];
  const Complex pref = ord.prefactor();
  return pref * pref * detail::ipow(ord.lambda, -(x1.n + x2.n)) * v;
}

/// Dual kernel K^{(d)}(x1, x2, x3) = Tr[ U(x1) U(x2) D(x3) ].
inline Complex kernel_dual_oracle(const PhasePoint& x1, const PhasePoint& x2, const PhasePoint& x3,
                                  const OrderingParameter& ord, const FockSpace& space) {
  const auto u1 = displaced_fock_state(space, x1.n, x1.alpha);
  const auto u2 = displaced_fock_state(space, x2.n, x2.alpha);
  const CMatrix g3 = quantizer_core(space, x3.alpha, ord);
  const int dim = space.dim;
  Complex olap = 0.0;
  for (int i = 0; i < dim; ++i) olap += std::conj(u1[i]) * u2[i];
  std::vector<Complex> t(dim, 0.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t[i] += g3(i, j) * u1[j];
  Complex v = 0.0;
  for (int i = 0; i < dim; ++i) v += std::conj(u2[i]) * t[i];
  return ord.prefactor() * detail::ipow(ord.lambda, -x3.n) * olap * v;
}

/// Fidelity kernel oracle K(x1, x2) = Tr[ D(x1) D(x2) ].  Note this operator
/// trace grows like |lambda|^{2 dim}: the kernel exists only distributionally
/// and is enormous pointwise; integrated against two tomograms it collapses
/// to Tr[rho1 rho2].
inline Complex fidelity_kernel_oracle(int n1, int n2, Complex a1, Complex a2,
                                      const OrderingParameter& ord, const FockSpace& space) {
  const CMatrix g1 = quantizer_core(space, a1, ord);
  const CMatrix g2 = quantizer_core(space, a2, ord);
  Complex tr = 0.0;
  for (int i = 0; i < space.dim; ++i)
    for (int j = 0; j < space.dim; ++j) tr += g1(i, j) * g2(j, i);
  const Complex pref = ord.prefactor();
  return pref * pref * detail::ipow(ord.lambda, -(n1 + n2)) * tr;
}

// ---------------------------------------------------------------------------
// Closed-form transcriptions.  These are verbatim renderings of the
// published explicit kernels; they are *candidates*, validated against the
// oracles by KernelReport and never used as ground truth.
// ---------------------------------------------------------------------------

namespace detail {

struct PhaseTable {
  Complex e1s;     // e^{i t*}
  Complex em1;     // e^{-i t}
  Complex e2s;     // e^{2 i t*}
  Complex em2;     // e^{-2 i t}
  Complex em1p2s;  // e^{-i t + 2 i t*}
  Complex e1sm2;   // e^{i t* - 2 i t}
  Complex em2s;    // e^{-2 i t*}

  explicit PhaseTable(Complex t) {
    const Complex i(0.0, 1.0);
    const Complex ts = std::conj(t);
    e1s = std::exp(i * ts);
    em1 = std::exp(-i * t);
    e2s = std::exp(2.0 * i * ts);
    em2 = std::exp(-2.0 * i * t);
    em1p2s = std::exp(-i * t + 2.0 * i * ts);
    e1sm2 = std::exp(i * ts - 2.0 * i * t);
    em2s = std::exp(-2.0 * i * ts);
  }
};

}  // namespace detail

/// Explicit star-product kernel of photon-number tomograms, transcribed
/// verbatim (prefactor squared, phase e^{it(n1+n2-2n3)}, the printed
/// 30-term Gaussian exponent and the Laguerre factor).
inline Complex kernel_closed_form(const PhasePoint& x1, const PhasePoint& x2, const PhasePoint& x3,
                                  const OrderingParameter& ord) {
  const Complex a1 = x1.alpha, a2 = x2.alpha, a3 = x3.alpha;
  const detail::PhaseTable p(ord.t);
  const Complex i(0.0, 1.0);
  auto cj = [](Complex z) { return std::conj(z); };
  const Complex A = -a3 + a1 - a1 * p.em1 + a2 * p.em1 - a2 * p.em2 + a3 * p.em2;
  const double aa = std::norm(A);
  const Complex half_sum =
      -a3 * cj(a1) + cj(a3) * a1 - a1 * cj(a2) + cj(a1) * a2 - a2 * cj(a3) + cj(a2) * a3
      + a3 * cj(a1) * p.e1s - std::norm(a1) * p.e1s - a3 * cj(a2) * p.e1s + a1 * cj(a2) * p.e1s
      - cj(a3) * a1 * p.em1 + std::norm(a1) * p.em1 + cj(a3) * a2 * p.em1 - cj(a1) * a2 * p.em1
      + a3 * cj(a2) * p.e2s - a1 * cj(a2) * p.e2s + a1 * cj(a2) * p.em1p2s - std::norm(a2) * p.em1p2s
      - std::norm(a3) * p.e2s + a1 * cj(a3) * p.e2s - a1 * cj(a3) * p.em1p2s + a2 * cj(a3) * p.em1p2s
      - cj(a3) * a2 * p.em2 + cj(a1) * a2 * p.em2 - cj(a1) * a2 * p.e1sm2 - std::norm(a2) * p.e1sm2
      + std::norm(a3) * p.em2 - cj(a1) * a3 * p.em2 + cj(a1) * a3 * p.e1sm2 - cj(a2) * a3 * p.e1sm2;
  const Complex pref = ord.prefactor();
  return pref * pref * std::exp(i * ord.t * Complex(static_cast<double>(x1.n + x2.n - 2 * x3.n)))
         * std::exp(-aa + 0.5 * half_sum) * laguerre_assoc(x3.n, 0, Complex(aa));
}

/// Explicit dual kernel, transcribed verbatim with both printed branches.
/// The second branch condition is printed garbled ("if >= n2 > n1"); it is
/// parsed as n2 > n1.  With `amended` set, the second branch uses the
/// bracket exponent (n2 - n1) instead of the printed (n1 - n2).
inline Complex kernel_dual_closed_form(const PhasePoint& x1, const PhasePoint& x2,
                                       const PhasePoint& x3, const OrderingParameter& ord,
                                       bool amended = false) {
  const Complex a1 = x1.alpha, a2 = x2.alpha, a3 = x3.alpha;
  const int n1 = x1.n, n2 = x2.n, n3 = x3.n;
  const detail::PhaseTable p(ord.t);
  const Complex i(0.0, 1.0);
  auto cj = [](Complex z) { return std::conj(z); };
  const Complex B = a3 - a1 - a3 * p.em1 + a1 * p.em1;
  const Complex half_sum =
      -a1 * cj(a2) + cj(a1) * a2 - a2 * cj(a3) + cj(a2) * a3 - a3 * cj(a1) + cj(a3) * a1
      + a2 * cj(a3) * p.e1s - std::norm(a3) * p.e1s - a2 * cj(a1) * p.e1s + a3 * cj(a1) * p.e1s
      - a3 * cj(a2) * p.em1 + std::norm(a3) * p.em1 + a1 * cj(a2) * p.em1 - a1 * cj(a3) * p.em1
      - std::norm(a2 - a1) - std::norm(B);
  const Complex bracket = (a2 - a1) * (-cj(a3) + cj(a1) + cj(a3) * p.e1s - cj(a1) * p.e1s);
  const double xb = std::norm(a2 - a1);
  const double xB = std::norm(B);
  Complex pref;
  int power, deg, upper;
  if (n1 >= n2) {
    pref = ord.prefactor() * std::exp(log_factorial(n2) - log_factorial(n1));
    power = n1 - n2;
    deg = n2;
    upper = n1 - n2;
  } else {
    pref = ord.prefactor() * std::exp(log_factorial(n1) - log_factorial(n2));
    power = amended ? (n2 - n1) : (n1 - n2);
    deg = n1;
    upper = n2 - n1;
  }
  return pref * std::exp(i * ord.t * Complex(static_cast<double>(n3 - n1))) * std::exp(0.5 * half_sum)
         * detail::ipow(bracket, power) * laguerre_assoc(deg, upper, Complex(xb))
         * laguerre_assoc(deg, upper, Complex(xB));
}

/// Explicit fidelity/purity kernel, transcribed verbatim including the
/// stand-alone -e^{-2it} term in the exponent and the Bessel factor.
inline Complex fidelity_kernel_closed_form(int n1, int n2, Complex a1, Complex a2,
                                           const OrderingParameter& ord) {
  const detail::PhaseTable p(ord.t);
  const Complex i(0.0, 1.0);
  auto cj = [](Complex z) { return std::conj(z); };
  const Complex C = a1 - a1 * p.em1 + a2 * p.em1 - a2 * p.em2;
  const Complex half_sum = -std::norm(a1) * p.e1s + std::norm(a1) * p.em1
                           + a1 * cj(a2) * (1.0 - p.em1) * (p.e1s - p.em2s)
                           - cj(a1) * a2 * (1.0 - p.e1s) * (p.em1 - p.em2);
  return std::exp(i * ord.t * Complex(static_cast<double>(n1 + n2)))
         * std::exp(0.5 * half_sum - std::norm(C) - p.em2)
         * bessel_j0(2.0 * p.em1 * std::abs(C));
}

// ---------------------------------------------------------------------------
// Symbols and the star product.
// ---------------------------------------------------------------------------

enum class SymbolScheme { Standard, Dual };

/// An evaluable operator symbol: Standard means f_A(x) = Tr[A U(x)],
/// Dual means f^{(d)}_A(x) = Tr[A D(x)].
struct SymbolFn {
  std::function<Complex(const PhasePoint&)> eval;
  SymbolScheme scheme = SymbolScheme::Standard;
};

inline SymbolFn symbol_of_operator(const CMatrix& a, SymbolScheme scheme,
                                   const OrderingParameter& ord) {
  auto op = std::make_shared<CMatrix>(a);
  const FockSpace space(static_cast<int>(a.dim()));
  if (scheme == SymbolScheme::Standard) {
    return {[op, space](const PhasePoint& x) {
              const auto u = displaced_fock_state(space, x.n, x.alpha);
              Complex v = 0.0;
              for (int i = 0; i < space.dim; ++i) {
                Complex row = 0.0;
                for (int j = 0; j < space.dim; ++j) row += (*op)(i, j) * u[j];
                v += std::conj(u[i]) * row;
              }
              return v;
            },
            SymbolScheme::Standard};
  }
  return {[op, ord](const PhasePoint& x) { return dual_symbol(*op, x, ord); }, SymbolScheme::Dual};
}

/// Grid description for the star-product integrals.
struct StarGrid {
  QuadratureScheme scheme;
  int n_max = 0;
};

/// Recover the operator behind a symbol: A = sum_n int f(x) D(x) dalpha for
/// standard symbols, A = sum_n int f(x) U(x) dalpha for dual symbols.
/// Throws DivergenceError when the photon sums have not settled within
/// tol::kStarSettle by n_max.
inline CMatrix operator_from_symbol(const SymbolFn& f, const OrderingParameter& ord,
                                    const FockSpace& space, const StarGrid& grid) {
  const int dim = space.dim;
  const std::size_t nodes = grid.scheme.nodes.size();
  CMatrix acc(dim);
  double max_tail = 0.0, max_sum = 0.0;
  if (f.scheme == SymbolScheme::Standard) {
    std::vector<Complex> lam_neg(grid.n_max + 1);
    for (int n = 0; n <= grid.n_max; ++n) lam_neg[n] = detail::ipow(ord.lambda, -n);
    for (std::size_t k = 0; k < nodes; ++k) {
      const Complex alpha = grid.scheme.nodes[k].alpha;
      Complex g = 0.0, last = 0.0;
      for (int n = 0; n <= grid.n_max; ++n) {
        last = f.eval({n, alpha}) * lam_neg[n];
        g += last;
      }
      max_tail = std::max(max_tail, std::abs(last));
      max_sum = std::max(max_sum, std::abs(g));
      CMatrix gm = quantizer_core(space, alpha, ord);
      gm *= grid.scheme.nodes[k].weight * g;
      acc += gm;
    }
    acc *= ord.prefactor();
  } else {
    for (std::size_t k = 0; k < nodes; ++k) {
      const Complex alpha = grid.scheme.nodes[k].alpha;
      const double w = grid.scheme.nodes[k].weight;
      double col_tail = 0.0, col_sum = 0.0;
      for (int n = 0; n <= grid.n_max; ++n) {
        const Complex fv = f.eval({n, alpha});
        col_tail = std::abs(fv);
        col_sum = std::max(col_sum, col_tail);
        if (fv == Complex(0.0)) continue;
        const auto u = displaced_fock_state(space, n, alpha);
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) acc(i, j) += w * fv * u[i] * std::conj(u[j]);
      }
      max_tail = std::max(max_tail, col_tail);
      max_sum = std::max(max_sum, col_sum);
    }
  }
  if (max_tail > tol::kStarSettle * std::max(1.0, max_sum))
    throw DivergenceError("operator_from_symbol: photon sum did not settle by n_max");
  return acc;
}

/// Star product (f * g)(x).  The double kernel integral
/// sum int f(x'') g(x') K(x'', x', x) is evaluated in factored form: both
/// symbols are first resolved into operators (each a single kernel-weighted
/// quadrature pass), whose product is then traced against the (de)quantizer
/// at x.  This is the same finite sum reorganised by bilinearity; the
/// pointwise form is numerically unusable at |lambda| > 1.
inline Complex star_product(const SymbolFn& f, const SymbolFn& g, const PhasePoint& x,
                            const OrderingParameter& ord, const FockSpace& space,
                            const StarGrid& grid, SymbolScheme scheme = SymbolScheme::Standard) {
  if (f.scheme != scheme || g.scheme != scheme)
    throw std::invalid_argument("star_product: symbol scheme mismatch");
  const CMatrix af = operator_from_symbol(f, ord, space, grid);
  const CMatrix ag = operator_from_symbol(g, ord, space, grid);
  const CMatrix prod = mat_mul(af, ag);
  if (scheme == SymbolScheme::Standard) {
    const auto u = displaced_fock_state(space, x.n, x.alpha);
    Complex v = 0.0;
    for (int i = 0; i < space.dim; ++i) {
      Complex row = 0.0;
      for (int j = 0; j < space.dim; ++j) row += prod(i, j) * u[j];
      v += std::conj(u[i]) * row;
    }
    return v;
  }
  return mat_trace(mat_mul(prod, quantizer(space, x, ord)));
}

/// max_x |((f*g)*h)(x) - (f*(g*h))(x)| over the sample points; operator
/// associativity is exact, so the residual measures pure discretization.
inline double associativity_residual(const SymbolFn& f, const SymbolFn& g, const SymbolFn& h,
                                     const std::vector<PhasePoint>& sample_points,
                                     const OrderingParameter& ord, const FockSpace& space,
                                     const StarGrid& grid) {
  const CMatrix af = operator_from_symbol(f, ord, space, grid);
  const CMatrix ag = operator_from_symbol(g, ord, space, grid);
  const CMatrix ah = operator_from_symbol(h, ord, space, grid);
  const CMatrix fg = mat_mul(af, ag);
  const CMatrix gh = mat_mul(ag, ah);
  SymbolFn fg_sym = symbol_of_operator(fg, SymbolScheme::Standard, ord);
  SymbolFn gh_sym = symbol_of_operator(gh, SymbolScheme::Standard, ord);
  const CMatrix a_fg = operator_from_symbol(fg_sym, ord, space, grid);
  const CMatrix a_gh = operator_from_symbol(gh_sym, ord, space, grid);
  const CMatrix left = mat_mul(a_fg, ah);
  const CMatrix right = mat_mul(af, a_gh);
  double res = 0.0;
  for (const auto& x : sample_points) {
    const auto u = displaced_fock_state(space, x.n, x.alpha);
    Complex l = 0.0, r = 0.0;
    for (int i = 0; i < space.dim; ++i) {
      Complex lrow = 0.0, rrow = 0.0;
      for (int j = 0; j < space.dim; ++j) {
        lrow += left(i, j) * u[j];
        rrow += right(i, j) * u[j];
      }
      l += std::conj(u[i]) * lrow;
      r += std::conj(u[i]) * rrow;
    }
    res = std::max(res, std::abs(l - r));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Fidelity, purity, quantumness.
// ---------------------------------------------------------------------------

enum class FidelityKernel { Oracle, ClosedForm };

namespace detail {

struct MatrixPair {
  CMatrix a, b;
};

}  // namespace detail

/// Fidelity F = Tr(rho1 rho2) as the double tomogram integral
/// sum_{n1,n2} iint w1 w2 K(n1,n2,alpha1,alpha2).  With the oracle kernel
/// the double sum is evaluated in factored form (each grid is folded into
/// its reconstruction operator first); the opt-in closed form evaluates the
/// published kernel pointwise over node pairs.
inline double fidelity_via_tomograms(const TomogramGrid& t1, const TomogramGrid& t2,
                                     const OrderingParameter& ord, const FockSpace& space,
                                     FidelityKernel kernel = FidelityKernel::Oracle,
                                     const ParallelOptions& opt = {}) {
  if (!grids_compatible(t1, t2))
    throw std::invalid_argument("fidelity_via_tomograms: grid mismatch");
  if (kernel == FidelityKernel::Oracle) {
    std::vector<Complex> lam_neg(t1.n_max + 1);
    for (int n = 0; n <= t1.n_max; ++n) lam_neg[n] = detail::ipow(ord.lambda, -n);
    auto pair = chunked_sum<detail::MatrixPair>(
        t1.node_count(),
        [&] { return detail::MatrixPair{CMatrix(space.dim), CMatrix(space.dim)}; },
        [&](std::size_t k, detail::MatrixPair& into) {
          Complex g1 = 0.0, g2 = 0.0;
          for (int n = 0; n <= t1.n_max; ++n) {
            g1 += t1.value(n, k) * lam_neg[n];
            g2 += t2.value(n, k) * lam_neg[n];
          }
          CMatrix gm = quantizer_core(space, t1.scheme.nodes[k].alpha, ord);
          const double w = t1.scheme.nodes[k].weight;
          CMatrix gm2 = gm;
          gm *= w * g1;
          gm2 *= w * g2;
          into.a += gm;
          into.b += gm2;
        },
        [](detail::MatrixPair& into, const detail::MatrixPair& part) {
          into.a += part.a;
          into.b += part.b;
        },
        opt);
    Complex tr = 0.0;
    for (int i = 0; i < space.dim; ++i)
      for (int j = 0; j < space.dim; ++j) tr += pair.a(i, j) * pair.b(j, i);
    const Complex pref = ord.prefactor();
    const Complex value = pref * pref * tr;
    if (std::abs(value.imag()) > tol::kFidelityImag)
      throw DivergenceError("fidelity_via_tomograms: imaginary residue exceeds tolerance");
    return value.real();
  }
  // Closed-form route: the published kernel's photon dependence is the phase
  // e^{it(n1+n2)}, so the photon sums factor per node.
  const std::size_t nodes = t1.node_count();
  std::vector<Complex> h1(nodes, 0.0), h2(nodes, 0.0);
  std::vector<Complex> lam_pos(t1.n_max + 1);
  for (int n = 0; n <= t1.n_max; ++n) lam_pos[n] = detail::ipow(ord.lambda, n);
  for (std::size_t k = 0; k < nodes; ++k) {
    for (int n = 0; n <= t1.n_max; ++n) {
      h1[k] += t1.value(n, k) * lam_pos[n];
      h2[k] += t2.value(n, k) * lam_pos[n];
    }
  }
  auto value = chunked_sum<Complex>(
      nodes, [] { return Complex(0.0); },
      [&](std::size_t k1, Complex& into) {
        const Complex a1 = t1.scheme.nodes[k1].alpha;
        const double w1 = t1.scheme.nodes[k1].weight;
        for (std::size_t k2 = 0; k2 < nodes; ++k2) {
          const Complex kv =
              fidelity_kernel_closed_form(0, 0, a1, t2.scheme.nodes[k2].alpha, ord);
          into += w1 * t2.scheme.nodes[k2].weight * h1[k1] * h2[k2] * kv;
        }
      },
      [](Complex& into, const Complex& part) { into += part; }, opt);
  return value.real();
}

inline double purity_via_tomograms(const TomogramGrid& tomo, const OrderingParameter& ord,
                                   const FockSpace& space,
                                   FidelityKernel kernel = FidelityKernel::Oracle,
                                   const ParallelOptions& opt = {}) {
  return fidelity_via_tomograms(tomo, tomo, ord, space, kernel, opt);
}

struct QuantumnessReport {
  double min_eigenvalue = 0.0;
  bool passes = false;    // nonnegativity of the reconstructed operator
  double purity = 0.0;
  bool bounds_ok = false; // purity inside [0, 1] within tol::kBoundsSlack
  double trace_defect = 0.0;
};

/// Nonnegativity and bounds checks on a measured tomogram: the reconstructed
/// operator must be positive semidefinite (within tolerance) and the purity
/// must respect its [0, 1] window.  A violation is a report, not an error;
/// classical-field tomograms are expected to fail.
inline QuantumnessReport quantumness_check(const TomogramGrid& tomo, const OrderingParameter& ord,
                                           const FockSpace& space, const ParallelOptions& opt = {}) {
  QuantumnessReport rep;
  const auto rec = reconstruct(tomo, ord, space, opt);
  rep.min_eigenvalue = rec.min_eigenvalue;
  rep.trace_defect = rec.trace_defect;
  rep.passes = rec.min_eigenvalue >= tol::kQuantumnessEigenFloor;
  rep.purity = purity_via_tomograms(tomo, ord, space, FidelityKernel::Oracle, opt);
  rep.bounds_ok = rep.purity >= -tol::kBoundsSlack && rep.purity <= 1.0 + tol::kBoundsSlack;
  return rep;
}

// ---------------------------------------------------------------------------
// Kernel validation reports.
// ---------------------------------------------------------------------------

enum class KernelKind { Main, Dual, Fidelity };

struct KernelPointRecord {
  PhasePoint x1, x2, x3;  // x3 is unused for the fidelity kernel
  Complex transcription = 0.0;
  Complex amended = 0.0;  // dual kernel only
  Complex oracle = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  bool match = false;
  bool amended_match = false;
};

struct KernelReport {
  KernelKind kind = KernelKind::Main;
  int dim = 0;
  Complex s = 0.0;
  std::uint64_t seed = 0;
  double tolerance = tol::kKernelMatchRel;
  int matched = 0;
  int amended_matched = 0;
  // relative self-consistency defects of the oracle values over the sample
  double oracle_symmetry_defect = 0.0;
  double oracle_cyclicity_defect = 0.0;
  double oracle_realness_defect = 0.0;
  std::vector<KernelPointRecord> points;
};

namespace detail {

/// Deterministic 64-bit generator (splitmix64); the standard distributions
/// are implementation-defined, so the report draws its own uniforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9E3779B97f4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Complex unit_disk() {
    for (;;) {
      const double re = 2.0 * uniform() - 1.0;
      const double im = 2.0 * uniform() - 1.0;
      if (re * re + im * im <= 1.0) return {re, im};
    }
  }

 private:
  std::uint64_t state_;
};

inline double rel_defect(Complex a, Complex b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace detail

/// Compare a closed-form kernel against its operator-trace oracle on `count`
/// seeded random points (n <= 3, |alpha| <= 1; small enough that truncation
/// error at the oracle dimension stays below the comparison tolerance).
/// Mismatches are per-point records, never failures.
inline KernelReport make_kernel_report(KernelKind kind, const FockSpace& space,
                                       const OrderingParameter& ord, std::uint64_t seed,
                                       int count = 50) {
  KernelReport rep;
  rep.kind = kind;
  rep.dim = space.dim;
  rep.s = ord.s;
  rep.seed = seed;
  detail::SeededRng rng(seed);
  auto draw = [&]() -> PhasePoint { return {rng.uniform_int(0, 3), rng.unit_disk()}; };
  for (int idx = 0; idx < count; ++idx) {
    KernelPointRecord r;
    r.x1 = draw();
    r.x2 = draw();
    if (kind != KernelKind::Fidelity) r.x3 = draw();
    switch (kind) {
      case KernelKind::Main: {
        r.oracle = kernel_oracle(r.x1, r.x2, r.x3, ord, space);
        r.transcription = kernel_closed_form(r.x1, r.x2, r.x3, ord);
        const Complex swapped = kernel_oracle(r.x2, r.x1, r.x3, ord, space);
        rep.oracle_symmetry_defect =
            std::max(rep.oracle_symmetry_defect, detail::rel_defect(std::conj(r.oracle), swapped));
        // cyclicity: Tr[(D1 D2) U3] vs Tr[U3 (D1 D2)] through full products
        const CMatrix d1 = quantizer(space, r.x1, ord);
        const CMatrix d2 = quantizer(space, r.x2, ord);
        const CMatrix u3 = dequantizer(space, r.x3);
        const Complex c1 = mat_trace(mat_mul(mat_mul(d1, d2), u3));
        const Complex c2 = mat_trace(mat_mul(u3, mat_mul(d1, d2)));
        rep.oracle_cyclicity_defect =
            std::max(rep.oracle_cyclicity_defect, detail::rel_defect(c1, c2));
        break;
      }
      case KernelKind::Dual: {
        r.oracle = kernel_dual_oracle(r.x1, r.x2, r.x3, ord, space);
        r.transcription = kernel_dual_closed_form(r.x1, r.x2, r.x3, ord, false);
        r.amended = kernel_dual_closed_form(r.x1, r.x2, r.x3, ord, true);
        r.amended_match = detail::rel_defect(r.amended, r.oracle) <= rep.tolerance;
        if (r.amended_match) ++rep.amended_matched;
        const Complex swapped = kernel_dual_oracle(r.x2, r.x1, r.x3, ord, space);
        rep.oracle_symmetry_defect =
            std::max(rep.oracle_symmetry_defect, detail::rel_defect(std::conj(r.oracle), swapped));
        const CMatrix u1 = dequantizer(space, r.x1);
        const CMatrix u2 = dequantizer(space, r.x2);
        const CMatrix d3 = quantizer(space, r.x3, ord);
        const Complex c1 = mat_trace(mat_mul(mat_mul(u1, u2), d3));
        const Complex c2 = mat_trace(mat_mul(d3, mat_mul(u1, u2)));
        rep.oracle_cyclicity_defect =
            std::max(rep.oracle_cyclicity_defect, detail::rel_defect(c1, c2));
        break;
      }
      case KernelKind::Fidelity: {
        r.oracle = fidelity_kernel_oracle(r.x1.n, r.x2.n, r.x1.alpha, r.x2.alpha, ord, space);
        r.transcription = fidelity_kernel_closed_form(r.x1.n, r.x2.n, r.x1.alpha, r.x2.alpha, ord);
        const Complex swapped =
            fidelity_kernel_oracle(r.x2.n, r.x1.n, r.x2.alpha, r.x1.alpha, ord, space);
        rep.oracle_symmetry_defect =
            std::max(rep.oracle_symmetry_defect, detail::rel_defect(r.oracle, swapped));
        rep.oracle_cyclicity_defect =
            std::max(rep.oracle_cyclicity_defect, detail::rel_defect(std::conj(r.oracle), swapped));
        if (std::abs(ord.s.imag()) < 1e-14) {
          const double realness = std::abs(r.oracle.imag()) / std::max(std::abs(r.oracle), 1e-300);
          rep.oracle_realness_defect = std::max(rep.oracle_realness_defect, realness);
        }
        break;
      }
    }
    r.abs_diff = std::abs(r.transcription - r.oracle);
    r.rel_diff = r.abs_diff / std::max(std::abs(r.oracle), 1e-300);
    r.match = r.rel_diff <= rep.tolerance;
    if (r.match) ++rep.matched;
    rep.points.push_back(r);
  }
  return rep;
}

}  // namespace pnt

#endif  // PNT_STARPROD_HPP

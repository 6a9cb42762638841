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

#ifndef PNT_COMPLEX_MATRIX_HPP
#define PNT_COMPLEX_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pnt/tolerances.hpp"

namespace pnt {

using Complex = std::complex<double>;

/// Dense complex square matrix, row-major.  All operators of the toolkit
/// (density matrices, displacement operators, quantizers, ...) are carried by
/// this type; dimensions stay small (<= 64), so the plain O(N^3) algebra
/// below is deliberate.
class CMatrix {
 public:
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("CMatrix: dim must be >= 1");
  }

  static CMatrix identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static CMatrix diagonal(const std::vector<Complex>& entries) {
    CMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  CMatrix& operator+=(const CMatrix& o) {
    check_same_dim(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  CMatrix& operator*=(Complex z) {
    for (auto& v : data_) v *= z;
    return *this;
  }

  void check_same_dim(const CMatrix& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("CMatrix: dimension mismatch");
  }

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

inline CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
  a.check_same_dim(b);
  const std::size_t n = a.dim();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

inline CMatrix mat_add(const CMatrix& a, const CMatrix& b) {
  CMatrix c = a;
  c += b;
  return c;
}

inline CMatrix mat_scale(const CMatrix& a, Complex z) {
  CMatrix c = a;
  c *= z;
  return c;
}

inline CMatrix mat_adjoint(const CMatrix& a) {
  const std::size_t n = a.dim();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = std::conj(a(j, i));
  return c;
}

inline Complex mat_trace(const CMatrix& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mat_mul(a, b); }
inline CMatrix operator+(const CMatrix& a, const CMatrix& b) { return mat_add(a, b); }
inline CMatrix operator*(Complex z, const CMatrix& a) { return mat_scale(a, z); }

inline double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  a.check_same_dim(b);
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

inline double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

inline double hermiticity_defect(const CMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

inline CMatrix hermitize(const CMatrix& a) {
  const std::size_t n = a.dim();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return c;
}

/// Gauss-Jordan inverse with partial pivoting.  Small well-conditioned
/// systems only (test oracles, never a physics path).
inline CMatrix mat_inverse(const CMatrix& a) {
  const std::size_t n = a.dim();
  CMatrix w = a;
  CMatrix inv = CMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(w(r, col)) > std::abs(w(piv, col))) piv = r;
    if (std::abs(w(piv, col)) < 1e-300) throw std::invalid_argument("mat_inverse: singular matrix");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(piv, j), w(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Complex d = w(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      w(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = w(r, col);
      if (f == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        w(r, j) -= f * w(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// returned in ascending order.  Input must satisfy
/// ||a - a^dagger||_max <= tol::kHermitianInputMax.
inline std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
  if (hermiticity_defect(a) > tol::kHermitianInputMax)
    throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian");
  const std::size_t n = a.dim();
  CMatrix w = hermitize(a);
  const double scale = std::max(frobenius_norm(w), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(w(p, q));
    if (std::sqrt(2.0 * off) <= tol::kJacobiOffDiagonal * scale) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = w(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        const Complex phase = apq / r;  // a_pq = r * phase
        const double app = w(p, p).real();
        const double aqq = w(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // V = [[c, s], [-s*conj(phase), c*conj(phase)]] on the (p,q) plane
        const Complex vqp = -s * std::conj(phase);
        const Complex vqq = c * std::conj(phase);
        for (std::size_t i = 0; i < n; ++i) {
          const Complex wip = w(i, p), wiq = w(i, q);
          w(i, p) = wip * c + wiq * vqp;
          w(i, q) = wip * s + wiq * vqq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Complex wpj = w(p, j), wqj = w(q, j);
          w(p, j) = c * wpj + std::conj(vqp) * wqj;
          w(q, j) = s * wpj + std::conj(vqq) * wqj;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = w(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline double min_hermitian_eigenvalue(const CMatrix& a) {
  return hermitian_eigenvalues(a).front();
}

}  // namespace pnt

#endif  // PNT_COMPLEX_MATRIX_HPP

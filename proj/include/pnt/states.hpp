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

#ifndef PNT_STATES_HPP
#define PNT_STATES_HPP

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnt/complex_matrix.hpp"
#include "pnt/fock.hpp"
#include "pnt/special_functions.hpp"
#include "pnt/tolerances.hpp"

namespace pnt {

struct DensityMatrix {
  FockSpace space;
  CMatrix mat;
  // Set when truncating the requested state lost more than
  // tol::kTruncationWarning of its weight before renormalisation.
  bool truncation_warning = false;
};

struct StateSpec {
  enum class Kind { Ground, Fock, Coherent, Thermal, CatEven, CatOdd };
  Kind kind = Kind::Ground;
  int m = 0;           // Fock level
  Complex beta = 0.0;  // coherent / cat amplitude
  double nbar = 0.0;   // thermal occupation

  static StateSpec ground() { return {}; }
  static StateSpec fock(int m) {
    StateSpec s;
    s.kind = Kind::Fock;
    s.m = m;
    return s;
  }
  static StateSpec coherent(Complex beta) {
    StateSpec s;
    s.kind = Kind::Coherent;
    s.beta = beta;
    return s;
  }
  static StateSpec thermal(double nbar) {
    StateSpec s;
    s.kind = Kind::Thermal;
    s.nbar = nbar;
    return s;
  }
  static StateSpec cat(bool even, Complex beta) {
    StateSpec s;
    s.kind = even ? Kind::CatEven : Kind::CatOdd;
    s.beta = beta;
    return s;
  }

  static StateSpec parse(const std::string& text);
  std::string str() const;
};

namespace detail {

inline Complex parse_complex(const std::string& text) {
  // Accepts "1.2", "-0.5", "0.8+0.3i", "1.2-0.7i", "0.3i", "-1.5i".
  const std::string err = "cannot parse complex number: '" + text + "'";
  if (text.empty()) throw std::invalid_argument(err);
  std::size_t pos = 0;
  auto read_number = [&]() -> double {
    const char* start = text.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start) throw std::invalid_argument(err);
    pos += static_cast<std::size_t>(end - start);
    return v;
  };
  double first = read_number();
  if (pos == text.size()) return Complex(first, 0.0);
  if (text[pos] == 'i' && pos + 1 == text.size()) return Complex(0.0, first);
  if (text[pos] != '+' && text[pos] != '-') throw std::invalid_argument(err);
  double second = read_number();
  if (pos + 1 != text.size() || text[pos] != 'i') throw std::invalid_argument(err);
  return Complex(first, second);
}

inline std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(9);
  os << z.real();
  if (z.imag() >= 0.0) os << "+";
  os << z.imag() << "i";
  return os.str();
}

}  // namespace detail

/// Mini-language used by the CLI: `ground`, `fock:3`, `coherent:0.8+0.3i`,
/// `thermal:0.5`, `cat:even:1.2+0i`.
inline StateSpec StateSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  const std::string err = "cannot parse state spec: '" + text + "'";
  if (parts[0] == "ground") {
    if (parts.size() != 1) throw std::invalid_argument(err);
    return ground();
  }
  if (parts[0] == "fock") {
    if (parts.size() != 2) throw std::invalid_argument(err);
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(parts[1], &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(err);
    }
    if (used != parts[1].size() || m < 0) throw std::invalid_argument(err);
    return fock(m);
  }
  if (parts[0] == "coherent") {
    if (parts.size() != 2) throw std::invalid_argument(err);
    return coherent(detail::parse_complex(parts[1]));
  }
  if (parts[0] == "thermal") {
    if (parts.size() != 2) throw std::invalid_argument(err);
    const Complex v = detail::parse_complex(parts[1]);
    if (v.imag() != 0.0 || v.real() <= 0.0) throw std::invalid_argument(err);
    return thermal(v.real());
  }
  if (parts[0] == "cat") {
    if (parts.size() != 3 || (parts[1] != "even" && parts[1] != "odd"))
      throw std::invalid_argument(err);
    return cat(parts[1] == "even", detail::parse_complex(parts[2]));
  }
  throw std::invalid_argument(err);
}

inline std::string StateSpec::str() const {
  switch (kind) {
    case Kind::Ground:
      return "ground";
    case Kind::Fock:
      return "fock:" + std::to_string(m);
    case Kind::Coherent:
      return "coherent:" + detail::format_complex(beta);
    case Kind::Thermal: {
      std::ostringstream os;
      os.precision(9);
      os << "thermal:" << nbar;
      return os.str();
    }
    case Kind::CatEven:
      return "cat:even:" + detail::format_complex(beta);
    case Kind::CatOdd:
      return "cat:odd:" + detail::format_complex(beta);
  }
  return "ground";
}

namespace detail {

inline std::vector<Complex> coherent_vector(const FockSpace& space, Complex beta) {
  std::vector<Complex> v(space.dim);
  const double x = std::norm(beta);
  if (x == 0.0) {
    v[0] = 1.0;
    return v;
  }
  const Complex phase = beta / std::abs(beta);
  for (int n = 0; n < space.dim; ++n)
    v[n] = std::exp(-0.5 * x + 0.5 * n * std::log(x) - 0.5 * log_factorial(n)) * std::pow(phase, n);
  return v;
}

inline DensityMatrix pure_state(const FockSpace& space, std::vector<Complex> v, double lost_weight) {
  double norm2 = 0.0;
  for (const auto& z : v) norm2 += std::norm(z);
  const double inv = 1.0 / std::sqrt(norm2);
  CMatrix rho(space.dim);
  for (int i = 0; i < space.dim; ++i)
    for (int j = 0; j < space.dim; ++j) rho(i, j) = v[i] * inv * std::conj(v[j] * inv);
  return {space, rho, lost_weight > tol::kTruncationWarning};
}

}  // namespace detail

inline DensityMatrix make_state(const FockSpace& space, const StateSpec& spec) {
  switch (spec.kind) {
    case StateSpec::Kind::Ground: {
      CMatrix rho(space.dim);
      rho(0, 0) = 1.0;
      return {space, rho, false};
    }
    case StateSpec::Kind::Fock: {
      if (spec.m >= space.dim) throw std::invalid_argument("make_state: fock level >= dim");
      CMatrix rho(space.dim);
      rho(spec.m, spec.m) = 1.0;
      return {space, rho, false};
    }
    case StateSpec::Kind::Coherent: {
      auto v = detail::coherent_vector(space, spec.beta);
      double norm2 = 0.0;
      for (const auto& z : v) norm2 += std::norm(z);
      return detail::pure_state(space, std::move(v), 1.0 - norm2);
    }
    case StateSpec::Kind::Thermal: {
      if (!(spec.nbar > 0.0)) throw std::invalid_argument("make_state: thermal nbar must be > 0");
      const double q = spec.nbar / (1.0 + spec.nbar);
      std::vector<double> p(space.dim);
      double sum = 0.0;
      for (int n = 0; n < space.dim; ++n) {
        p[n] = std::pow(q, n);
        sum += p[n];
      }
      CMatrix rho(space.dim);
      for (int n = 0; n < space.dim; ++n) rho(n, n) = p[n] / sum;
      const double full = 1.0 / (1.0 - q);  // geometric series, untruncated
      return {space, rho, std::abs(1.0 - sum / full) > tol::kTruncationWarning};
    }
    case StateSpec::Kind::CatEven:
    case StateSpec::Kind::CatOdd: {
      const double sign = spec.kind == StateSpec::Kind::CatEven ? 1.0 : -1.0;
      auto v = detail::coherent_vector(space, spec.beta);
      auto w = detail::coherent_vector(space, -spec.beta);
      double norm2 = 0.0;
      for (int n = 0; n < space.dim; ++n) {
        v[n] += sign * w[n];
        norm2 += std::norm(v[n]);
      }
      if (norm2 < 1e-30) throw std::invalid_argument("make_state: cat state has zero norm");
      const double x = std::norm(spec.beta);
      const double full = 2.0 * (1.0 + sign * std::exp(-2.0 * x));  // untruncated norm^2
      return detail::pure_state(space, std::move(v), std::abs(1.0 - norm2 / full));
    }
  }
  throw std::invalid_argument("make_state: unknown spec");
}

/// Ground-state photon-number tomogram w_0(n, alpha) =
/// e^{-|alpha|^2} |alpha|^{2n} / n!  (Poisson with mean |alpha|^2; the
/// 0^0 = 1 convention applies at alpha = 0, n = 0).
inline double tomogram_ground(int n, Complex alpha) {
  if (n < 0) throw std::domain_error("tomogram_ground: n must be >= 0");
  const double x = std::norm(alpha);
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(-x + n * std::log(x) - log_factorial(n));
}

/// Photon-number tomogram of the Fock state |m><m|:
///   (n!/m!) |alpha|^{2(m-n)} e^{-|alpha|^2} (L_n^{m-n}(|alpha|^2))^2   m >= n
/// and the mirror expression with m and n exchanged for m <= n.
inline double tomogram_fock(int m, int n, Complex alpha) {
  if (m < 0 || n < 0) throw std::domain_error("tomogram_fock: indices must be >= 0");
  const double x = std::norm(alpha);
  if (x == 0.0) return m == n ? 1.0 : 0.0;
  const int q = std::min(m, n);
  const int p = std::max(m, n);
  const double lag = laguerre_assoc(q, p - q, x);
  return std::exp(log_factorial(q) - log_factorial(p) - x + (p - q) * std::log(x)) * lag * lag;
}

}  // namespace pnt

#endif  // PNT_STATES_HPP

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

#ifndef PNT_QUADRATURE_HPP
#define PNT_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pnt {

struct QuadratureNode {
  std::complex<double> alpha;
  double weight;  // includes the polar Jacobian r and the angular step
};

/// Product rule over the disk |alpha| <= radius: Gauss-Legendre in the
/// radius (against the measure r dr) times the uniform trapezoidal rule in
/// the angle.  Realizes the integral d(Re alpha) d(Im alpha).
struct QuadratureScheme {
  double radius = 0.0;
  int radial_nodes = 0;
  int angular_nodes = 0;
  std::vector<QuadratureNode> nodes;  // radial-major, fixed order
};

/// Gauss-Legendre nodes/weights on [a, b], Newton iteration on the Legendre
/// recurrence.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  std::vector<double> x(n), w(n);
  const double pi = 3.14159265358979323846;
  const int m = (n + 1) / 2;
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  for (int i = 0; i < m; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::abs(z - z1) > 1e-15);
    x[i] = xm - xl * z;
    x[n - 1 - i] = xm + xl * z;
    w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return {x, w};
}

inline QuadratureScheme disk_quadrature(double radius, int radial_nodes, int angular_nodes) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk_quadrature: radius must be positive");
  if (radial_nodes < 4 || angular_nodes < 4)
    throw std::invalid_argument("disk_quadrature: node counts must be >= 4");
  QuadratureScheme q;
  q.radius = radius;
  q.radial_nodes = radial_nodes;
  q.angular_nodes = angular_nodes;
  q.nodes.reserve(static_cast<std::size_t>(radial_nodes) * angular_nodes);
  auto [r, wr] = gauss_legendre(radial_nodes, 0.0, radius);
  const double pi = 3.14159265358979323846;
  const double dth = 2.0 * pi / angular_nodes;
  for (int i = 0; i < radial_nodes; ++i) {
    const double ring_weight = wr[i] * r[i] * dth;  // r dr dtheta
    for (int j = 0; j < angular_nodes; ++j) {
      const double th = dth * j;
      q.nodes.push_back({std::complex<double>(r[i] * std::cos(th), r[i] * std::sin(th)), ring_weight});
    }
  }
  return q;
}

}  // namespace pnt

#endif  // PNT_QUADRATURE_HPP

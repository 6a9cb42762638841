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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "pnt/states.hpp"
#include "test_helpers.hpp"

using pnt::Complex;
using pnt::DensityMatrix;
using pnt::FockSpace;
using pnt::StateSpec;

namespace {

double purity(const DensityMatrix& rho) {
  return pnt::mat_trace(pnt::mat_mul(rho.mat, rho.mat)).real();
}

}  // namespace

TEST_CASE("fock and ground states", "[states]") {
  const FockSpace space(4);
  const auto rho = pnt::make_state(space, StateSpec::fock(1));
  CHECK(pnt::max_abs_diff(rho.mat, pnt::CMatrix::diagonal({0.0, 1.0, 0.0, 0.0})) == 0.0);
  const auto g = pnt::make_state(space, StateSpec::ground());
  CHECK(g.mat(0, 0) == Complex(1.0));
  CHECK_THROWS_AS(pnt::make_state(space, StateSpec::fock(4)), std::invalid_argument);
}

TEST_CASE("coherent state is pure and normalized", "[states]") {
  const FockSpace space(32);
  const auto rho = pnt::make_state(space, StateSpec::coherent({0.8, 0.3}));
  CHECK(std::abs(pnt::mat_trace(rho.mat) - Complex(1.0)) <= 1e-12);
  CHECK(purity(rho) == Catch::Approx(1.0).margin(1e-9));
  CHECK_FALSE(rho.truncation_warning);
  CHECK(pnt::hermiticity_defect(rho.mat) <= 1e-15);
  CHECK(pnt::min_hermitian_eigenvalue(rho.mat) >= -1e-12);
}

TEST_CASE("thermal purity against the geometric series", "[states]") {
  const FockSpace space(32);
  const auto rho = pnt::make_state(space, StateSpec::thermal(0.5));
  // oracle: sum p_n^2 with p_n = nbar^n/(1+nbar)^{n+1}
  double oracle = 0.0;
  for (int n = 0; n < 200; ++n) oracle += std::pow(0.5, 2 * n) / std::pow(1.5, 2 * n + 2);
  CHECK(purity(rho) == Catch::Approx(oracle).margin(1e-6));
  CHECK(purity(rho) == Catch::Approx(0.5).margin(1e-6));
  CHECK_THROWS_AS(pnt::make_state(space, StateSpec::thermal(0.0)), std::invalid_argument);
}

TEST_CASE("cat states", "[states]") {
  const FockSpace space(32);
  const auto even = pnt::make_state(space, StateSpec::cat(true, 1.2));
  const auto odd = pnt::make_state(space, StateSpec::cat(false, 1.2));
  CHECK(purity(even) == Catch::Approx(1.0).margin(1e-9));
  CHECK(purity(odd) == Catch::Approx(1.0).margin(1e-9));
  // even cat has no odd-photon support
  CHECK(std::abs(even.mat(1, 1)) <= 1e-14);
  CHECK(std::abs(odd.mat(0, 0)) <= 1e-14);
}

TEST_CASE("truncation warning fires for leaky states", "[states]") {
  const FockSpace space(8);
  const auto rho = pnt::make_state(space, StateSpec::coherent(3.5));
  CHECK(rho.truncation_warning);
  CHECK(std::abs(pnt::mat_trace(rho.mat) - Complex(1.0)) <= 1e-12);  // still renormalized
}

TEST_CASE("ground tomogram formula", "[states]") {
  CHECK(pnt::tomogram_ground(0, 0.0) == 1.0);
  CHECK(pnt::tomogram_ground(3, 0.0) == 0.0);
  CHECK(pnt::tomogram_ground(1, 1.0) == Catch::Approx(std::exp(-1.0)).epsilon(1e-13));
  double sum = 0.0;
  for (int n = 0; n <= 60; ++n) sum += pnt::tomogram_ground(n, 1.3);
  CHECK(sum == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("fock tomogram formula", "[states]") {
  // m <= n branch with L_0 = 1 reproduces the ground-state formula
  CHECK(pnt::tomogram_fock(0, 2, 1.0) == Catch::Approx(std::exp(-1.0) / 2.0).epsilon(1e-13));
  // m >= n branch with L_0^1 = 1
  CHECK(pnt::tomogram_fock(1, 0, 1.0) == Catch::Approx(std::exp(-1.0)).epsilon(1e-13));
  CHECK(pnt::tomogram_fock(1, 0, Complex(0.0, 0.7)) ==
        Catch::Approx(0.49 * std::exp(-0.49)).epsilon(1e-13));
  // reduces to the ground tomogram at m = 0
  for (int n = 0; n < 8; ++n)
    CHECK(pnt::tomogram_fock(0, n, 1.4) == Catch::Approx(pnt::tomogram_ground(n, 1.4)).margin(1e-15));
  // alpha = 0 convention
  CHECK(pnt::tomogram_fock(2, 2, 0.0) == 1.0);
  CHECK(pnt::tomogram_fock(2, 1, 0.0) == 0.0);
}

TEST_CASE("fock tomogram against the displacement-operator oracle", "[states]") {
  // w^{(m)}(n, alpha) = <n|D(-a)|m><m|D(a)|n>
  const FockSpace space(40);
  const Complex alpha(0.7, 0.0);
  const auto dm = pnt::displacement(space, -alpha);
  const auto dp = pnt::displacement(space, alpha);
  const Complex oracle = dm(2, 3) * dp(3, 2);
  CHECK(std::abs(oracle.imag()) <= 1e-15);
  CHECK(pnt::tomogram_fock(3, 2, alpha) == Catch::Approx(oracle.real()).margin(1e-9));
  // a denser sweep
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex a = pnt_test::random_in_disk(rng, 2.0);
    const auto dmi = pnt::displacement(space, -a);
    const auto dpl = pnt::displacement(space, a);
    const int m = static_cast<int>(rng() % 7), n = static_cast<int>(rng() % 7);
    const Complex o = dmi(n, m) * dpl(m, n);
    CHECK(pnt::tomogram_fock(m, n, a) == Catch::Approx(o.real()).margin(1e-9));
  }
}

TEST_CASE("tomograms depend only on |alpha|", "[states]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uphi(0.0, 6.283185307179586);
  for (int trial = 0; trial < 20; ++trial) {
    const double phi = uphi(rng);
    const Complex a(0.9, -0.4);
    const Complex rotated = a * std::exp(Complex(0.0, phi));
    CHECK(pnt::tomogram_ground(2, rotated) == Catch::Approx(pnt::tomogram_ground(2, a)).epsilon(1e-12));
    CHECK(pnt::tomogram_fock(3, 1, rotated) == Catch::Approx(pnt::tomogram_fock(3, 1, a)).epsilon(1e-12));
  }
}

TEST_CASE("state spec mini-language", "[states]") {
  CHECK(StateSpec::parse("ground").kind == StateSpec::Kind::Ground);
  const auto f = StateSpec::parse("fock:3");
  CHECK(f.kind == StateSpec::Kind::Fock);
  CHECK(f.m == 3);
  const auto c = StateSpec::parse("coherent:0.8+0.3i");
  CHECK(c.kind == StateSpec::Kind::Coherent);
  CHECK(c.beta == Complex(0.8, 0.3));
  const auto t = StateSpec::parse("thermal:0.5");
  CHECK(t.kind == StateSpec::Kind::Thermal);
  CHECK(t.nbar == 0.5);
  const auto k = StateSpec::parse("cat:even:1.2+0i");
  CHECK(k.kind == StateSpec::Kind::CatEven);
  CHECK(k.beta == Complex(1.2, 0.0));
  CHECK(StateSpec::parse("cat:odd:-0.5i").beta == Complex(0.0, -0.5));
  for (const char* bad : {"", "fock", "fock:x", "fock:-1", "coherent:z", "thermal:-1",
                          "cat:flat:1", "wigner", "ground:0"})
    CHECK_THROWS_AS(StateSpec::parse(bad), std::invalid_argument);
  // round trip through str()
  for (const char* s : {"ground", "fock:3", "thermal:0.5", "cat:odd:1.2+0i"}) {
    const auto spec = StateSpec::parse(s);
    const auto again = StateSpec::parse(spec.str());
    CHECK(again.kind == spec.kind);
  }
}

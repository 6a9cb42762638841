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

#include "pnt/starprod.hpp"
#include "test_helpers.hpp"

using pnt::CMatrix;
using pnt::Complex;
using pnt::FockSpace;
using pnt::KernelKind;
using pnt::OrderingParameter;
using pnt::PhasePoint;
using pnt::StateSpec;

namespace {

const OrderingParameter kOrd = OrderingParameter::from_s(-0.5);
constexpr double kPi = 3.14159265358979323846;

Complex trace3(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
  return pnt::mat_trace(pnt::mat_mul(a, pnt::mat_mul(b, c)));
}

}  // namespace

TEST_CASE("kernel oracle matches the definition and its anchors", "[star]") {
  const FockSpace space(40);
  const PhasePoint x1{1, Complex(0.3, -0.2)}, x2{0, Complex(-0.1, 0.4)}, x3{2, Complex(0.2, 0.1)};
  const Complex fast = pnt::kernel_oracle(x1, x2, x3, kOrd, space);
  const Complex full = trace3(pnt::quantizer(space, x1, kOrd), pnt::quantizer(space, x2, kOrd),
                              pnt::dequantizer(space, x3));
  CHECK(std::abs(fast - full) <= 1e-12 * std::max(1.0, std::abs(full)));
  // cyclic-trace consistency
  const Complex cyc = trace3(pnt::dequantizer(space, x3), pnt::quantizer(space, x1, kOrd),
                             pnt::quantizer(space, x2, kOrd));
  CHECK(std::abs(full - cyc) <= 1e-12 * std::max(1.0, std::abs(full)));
  // all-zero regression anchor: prefactor squared
  const double c2 = std::pow(16.0 / (3.0 * kPi), 2);
  const Complex zero = pnt::kernel_oracle({0, 0.0}, {0, 0.0}, {0, 0.0}, kOrd, space);
  CHECK(zero.real() == Catch::Approx(c2).epsilon(1e-12));
  CHECK(std::abs(zero.imag()) <= 1e-12);
}

TEST_CASE("main closed form reduces to the printed prefactor at the origin", "[star]") {
  // all alpha = 0: kernel = (4/(pi(1-s^2)))^2 e^{it(n1+n2-2n3)} L_{n3}(0)
  const double c2 = std::pow(16.0 / (3.0 * kPi), 2);
  for (const auto& [n1, n2, n3] : {std::tuple{0, 0, 0}, {1, 0, 0}, {2, 1, 1}, {0, 3, 2}}) {
    const Complex got = pnt::kernel_closed_form({n1, 0.0}, {n2, 0.0}, {n3, 0.0}, kOrd);
    const Complex expect =
        c2 * std::exp(Complex(0.0, 1.0) * kOrd.t * Complex(static_cast<double>(n1 + n2 - 2 * n3)));
    CHECK(std::abs(got - expect) <= 1e-10 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("main closed form stays finite on the test domain", "[star]") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    const PhasePoint x1{static_cast<int>(rng() % 4), pnt_test::random_in_disk(rng)};
    const PhasePoint x2{static_cast<int>(rng() % 4), pnt_test::random_in_disk(rng)};
    const PhasePoint x3{static_cast<int>(rng() % 4), pnt_test::random_in_disk(rng)};
    const Complex v = pnt::kernel_closed_form(x1, x2, x3, kOrd);
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
  }
}

TEST_CASE("dual kernel oracle: projector idempotence and scheme asymmetry", "[star]") {
  const FockSpace space(40);
  const PhasePoint x{1, Complex(0.5, 0.2)}, x3{0, Complex(-0.3, 0.1)};
  // coincident dequantizers: U^2 = U, so the kernel collapses to Tr[U D]
  const Complex lhs = pnt::kernel_dual_oracle(x, x, x3, kOrd, space);
  const Complex rhs = pnt::mat_trace(pnt::mat_mul(pnt::dequantizer(space, x), pnt::quantizer(space, x3, kOrd)));
  CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  // dual differs from primal at generic points
  const PhasePoint y1{0, Complex(0.4, 0.0)}, y2{1, Complex(0.0, -0.6)}, y3{2, Complex(0.2, 0.3)};
  const Complex primal = pnt::kernel_oracle(y1, y2, y3, kOrd, space);
  const Complex dual = pnt::kernel_dual_oracle(y1, y2, y3, kOrd, space);
  CHECK(std::abs(primal - dual) > 1e-3);
}

TEST_CASE("dual oracle equals the generic trace with swapped constructors", "[star]") {
  const FockSpace space(30);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const PhasePoint x1{static_cast<int>(rng() % 3), pnt_test::random_in_disk(rng)};
    const PhasePoint x2{static_cast<int>(rng() % 3), pnt_test::random_in_disk(rng)};
    const PhasePoint x3{static_cast<int>(rng() % 3), pnt_test::random_in_disk(rng)};
    const Complex fast = pnt::kernel_dual_oracle(x1, x2, x3, kOrd, space);
    const Complex swapped = trace3(pnt::dequantizer(space, x1), pnt::dequantizer(space, x2),
                                   pnt::quantizer(space, x3, kOrd));
    CHECK(std::abs(fast - swapped) <= 1e-12 * std::max(1.0, std::abs(swapped)));
  }
}

TEST_CASE("dual closed form: branch continuity and amendment", "[star]") {
  const PhasePoint a{1, Complex(0.3, 0.1)}, b{1, Complex(-0.2, 0.4)}, c{0, Complex(0.1, 0.0)};
  // n1 = n2: both printed branches coincide, amended changes nothing
  CHECK(pnt::kernel_dual_closed_form(a, b, c, kOrd, false) ==
        pnt::kernel_dual_closed_form(a, b, c, kOrd, true));
  // n2 > n1 with distinct alphas: the amendment flips the bracket power
  const PhasePoint lo{0, Complex(0.3, 0.1)}, hi{2, Complex(-0.2, 0.4)};
  const Complex verbatim = pnt::kernel_dual_closed_form(lo, hi, c, kOrd, false);
  const Complex amended = pnt::kernel_dual_closed_form(lo, hi, c, kOrd, true);
  CHECK(std::abs(verbatim - amended) > 1e-12);
  // all alpha = 0 at n1 = n2 = n3 = 0 equals the single prefactor
  const Complex zero = pnt::kernel_dual_closed_form({0, 0.0}, {0, 0.0}, {0, 0.0}, kOrd, false);
  CHECK(zero.real() == Catch::Approx(16.0 / (3.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("fidelity kernel oracle: symmetry, realness, spectral anchor", "[star]") {
  const FockSpace space(40);
  const Complex a1(0.3, 0.1), a2(-0.2, 0.4);
  const Complex k12 = pnt::fidelity_kernel_oracle(1, 2, a1, a2, kOrd, space);
  const Complex k21 = pnt::fidelity_kernel_oracle(2, 1, a2, a1, kOrd, space);
  CHECK(std::abs(k12 - k21) <= 1e-9 * std::abs(k12));
  CHECK(std::abs(k12.imag()) <= 1e-9 * std::abs(k12));
  // (0,0,0,0) anchor against the closed geometric sum
  //   Tr[G(0)^2] = sum_k lambda^{2k} = (lambda^{2 dim} - 1)/(lambda^2 - 1)
  const double lam2 = 9.0;
  const double geom = (std::pow(lam2, 40) - 1.0) / (lam2 - 1.0);
  const double c2 = std::pow(16.0 / (3.0 * kPi), 2);
  const Complex anchor = pnt::fidelity_kernel_oracle(0, 0, 0.0, 0.0, kOrd, space);
  CHECK(anchor.real() == Catch::Approx(c2 * geom).epsilon(1e-11));
}

TEST_CASE("fidelity closed form: origin reduction and finiteness", "[star]") {
  // alpha1 = alpha2 = 0: C = 0, so the printed formula collapses to
  // e^{it(n1+n2)} e^{-e^{-2it}} J0(0)
  const Complex em2 = std::exp(Complex(0.0, -2.0) * kOrd.t);
  for (const auto& [n1, n2] : {std::pair{0, 0}, {1, 2}}) {
    const Complex got = pnt::fidelity_kernel_closed_form(n1, n2, 0.0, 0.0, kOrd);
    const Complex expect =
        std::exp(Complex(0.0, 1.0) * kOrd.t * Complex(static_cast<double>(n1 + n2))) * std::exp(-em2);
    CHECK(std::abs(got - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
  }
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex v = pnt::fidelity_kernel_closed_form(
        static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), pnt_test::random_in_disk(rng),
        pnt_test::random_in_disk(rng), kOrd);
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
  }
}

TEST_CASE("star product absorbs the identity and projectors", "[star]") {
  const FockSpace space(16);
  const pnt::StarGrid grid{pnt::disk_quadrature(6.0, 64, 64), 15};
  const auto id_sym = pnt::symbol_of_operator(CMatrix::identity(16), pnt::SymbolScheme::Standard, kOrd);
  const PhasePoint x{0, Complex(0.3, 0.2)};
  const Complex one = pnt::star_product(id_sym, id_sym, x, kOrd, space, grid);
  CHECK(one.real() == Catch::Approx(1.0).margin(5e-3));
  CHECK(std::abs(one.imag()) <= 1e-6);
  // ground * |0><0| = ground (projector absorption)
  const auto rho = pnt::make_state(space, StateSpec::ground());
  const auto g_sym = pnt::symbol_of_operator(rho.mat, pnt::SymbolScheme::Standard, kOrd);
  const PhasePoint y{1, Complex(0.5, 0.0)};
  const Complex got = pnt::star_product(g_sym, g_sym, y, kOrd, space, grid);
  const Complex expect = g_sym.eval(y);
  CHECK(std::abs(got - expect) <= 5e-3);
  // scheme mismatch is rejected
  const auto dual_sym = pnt::symbol_of_operator(rho.mat, pnt::SymbolScheme::Dual, kOrd);
  CHECK_THROWS_AS(pnt::star_product(g_sym, dual_sym, x, kOrd, space, grid), std::invalid_argument);
}

TEST_CASE("dual-scheme star product composes operators", "[star]") {
  const FockSpace space(16);
  const pnt::StarGrid grid{pnt::disk_quadrature(6.0, 64, 64), 15};
  const auto rho = pnt::make_state(space, StateSpec::coherent(0.5));
  const CMatrix n_op = pnt::number_op(space);
  const auto f = pnt::symbol_of_operator(rho.mat, pnt::SymbolScheme::Dual, kOrd);
  const auto g = pnt::symbol_of_operator(n_op, pnt::SymbolScheme::Dual, kOrd);
  const PhasePoint x{1, Complex(0.2, -0.4)};
  const Complex got = pnt::star_product(f, g, x, kOrd, space, grid, pnt::SymbolScheme::Dual);
  const Complex expect = pnt::dual_symbol(pnt::mat_mul(rho.mat, n_op), x, kOrd);
  CHECK(std::abs(got - expect) <= 5e-3 * std::max(1.0, std::abs(expect)));
}

TEST_CASE("associativity residual at compact scale", "[star]") {
  const FockSpace space(16);
  const pnt::StarGrid grid{pnt::disk_quadrature(5.0, 48, 48), 15};
  std::mt19937_64 rng(6);
  auto projector_symbol = [&]() {
    std::vector<Complex> v(16, 0.0);
    std::normal_distribution<double> gau(0.0, 1.0);
    double norm = 0.0;
    for (int i = 0; i < 4; ++i) {
      v[i] = Complex(gau(rng), gau(rng));
      norm += std::norm(v[i]);
    }
    CMatrix p(16);
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) p(i, j) = v[i] * std::conj(v[j]) / norm;
    return pnt::symbol_of_operator(p, pnt::SymbolScheme::Standard, kOrd);
  };
  const auto f = projector_symbol(), g = projector_symbol(), h = projector_symbol();
  std::vector<PhasePoint> pts;
  for (int i = 0; i < 6; ++i)
    pts.push_back({static_cast<int>(rng() % 4), pnt_test::random_in_disk(rng)});
  const double res = pnt::associativity_residual(f, g, h, pts, kOrd, space, grid);
  CHECK(res <= 5e-3);
  const auto id_sym = pnt::symbol_of_operator(CMatrix::identity(16), pnt::SymbolScheme::Standard, kOrd);
  CHECK(pnt::associativity_residual(id_sym, id_sym, id_sym, pts, kOrd, space, grid) <= 1e-3);
}

TEST_CASE("dual kernel satisfies the composition equation", "[star]") {
  // The dual kernel's composition integral converges absolutely (dual
  // symbols carry lambda^{-n} decay), so the associativity equation can be
  // checked in raw kernel form.
  const FockSpace space(16);
  const auto scheme = pnt::disk_quadrature(6.0, 48, 48);
  const int n_max = 15;
  std::mt19937_64 rng(7);
  std::vector<Complex> lam_neg(n_max + 1);
  for (int n = 0; n <= n_max; ++n) lam_neg[n] = pnt::detail::ipow(kOrd.lambda, -n);
  for (int tuple = 0; tuple < 3; ++tuple) {
    PhasePoint x1{static_cast<int>(rng() % 4), pnt_test::random_in_disk(rng)};
    PhasePoint x2{static_cast<int>(rng() % 4), pnt_test::random_in_disk(rng)};
    PhasePoint x3{static_cast<int>(rng() % 4), pnt_test::random_in_disk(rng)};
    PhasePoint x4{static_cast<int>(rng() % 4), pnt_test::random_in_disk(rng)};
    Complex lhs = 0.0, rhs = 0.0;
    for (const auto& node : scheme.nodes) {
      for (int ny = 0; ny <= n_max; ++ny) {
        const PhasePoint y{ny, node.alpha};
        lhs += node.weight * pnt::kernel_dual_oracle(x1, x2, y, kOrd, space) *
               pnt::kernel_dual_oracle(y, x3, x4, kOrd, space);
        rhs += node.weight * pnt::kernel_dual_oracle(x1, y, x4, kOrd, space) *
               pnt::kernel_dual_oracle(x2, x3, y, kOrd, space);
      }
    }
    CHECK(std::abs(lhs - rhs) <= 5e-3);
  }
}

TEST_CASE("fidelity and purity via tomograms", "[star]") {
  const FockSpace space(16);
  const auto scheme = pnt::disk_quadrature(6.0, 64, 64);
  const int n_max = 15;
  auto tomo = [&](const StateSpec& spec) {
    return pnt::forward_tomogram(pnt::make_state(space, spec), scheme, n_max);
  };
  const auto t_f0 = tomo(StateSpec::fock(0));
  const auto t_f1 = tomo(StateSpec::fock(1));
  CHECK(pnt::fidelity_via_tomograms(t_f0, t_f0, kOrd, space) == Catch::Approx(1.0).margin(1e-3));
  CHECK(pnt::fidelity_via_tomograms(t_f0, t_f1, kOrd, space) == Catch::Approx(0.0).margin(1e-3));
  // coherent overlap anchor |<0|1>|^2 = e^{-1}
  const auto t_c0 = tomo(StateSpec::coherent(0.0));
  const auto t_c1 = tomo(StateSpec::coherent(1.0));
  CHECK(pnt::fidelity_via_tomograms(t_c0, t_c1, kOrd, space) ==
        Catch::Approx(std::exp(-1.0)).margin(2e-3));
  // symmetry
  CHECK(std::abs(pnt::fidelity_via_tomograms(t_c0, t_c1, kOrd, space) -
                 pnt::fidelity_via_tomograms(t_c1, t_c0, kOrd, space)) <= 1e-6);
  // purities
  CHECK(pnt::purity_via_tomograms(tomo(StateSpec::thermal(0.5)), kOrd, space) ==
        Catch::Approx(0.5).margin(2e-3));
  CHECK(pnt::purity_via_tomograms(tomo(StateSpec::cat(true, 1.2)), kOrd, space) ==
        Catch::Approx(1.0).margin(2e-3));
  // equal-mixture purity
  pnt::TomogramGrid mix = t_f0;
  for (std::size_t i = 0; i < mix.values.size(); ++i)
    mix.values[i] = 0.5 * (t_f0.values[i] + t_f1.values[i]);
  CHECK(pnt::purity_via_tomograms(mix, kOrd, space) == Catch::Approx(0.5).margin(2e-3));
  // incompatible grids are rejected
  const auto other = pnt::forward_tomogram(pnt::make_state(space, StateSpec::fock(0)),
                                           pnt::disk_quadrature(6.0, 32, 32), n_max);
  CHECK_THROWS_AS(pnt::fidelity_via_tomograms(t_f0, other, kOrd, space), std::invalid_argument);
  // the closed-form route evaluates to something finite (its agreement is
  // the kernel report's business, not presumed here)
  const auto small = pnt::disk_quadrature(4.0, 16, 16);
  const auto ts = pnt::forward_tomogram(pnt::make_state(space, StateSpec::ground()), small, 10);
  const double closed = pnt::fidelity_via_tomograms(ts, ts, kOrd, space, pnt::FidelityKernel::ClosedForm);
  CHECK(std::isfinite(closed));
}

TEST_CASE("quantumness check", "[star]") {
  const FockSpace space(16);
  const auto scheme = pnt::disk_quadrature(6.0, 64, 64);
  const auto good = pnt::forward_tomogram(pnt::make_state(space, StateSpec::fock(1)), scheme, 15);
  const auto ok = pnt::quantumness_check(good, kOrd, space);
  CHECK(ok.passes);
  CHECK(ok.bounds_ok);
  CHECK(ok.min_eigenvalue >= pnt::tol::kQuantumnessEigenFloor);
  // deliberate corruption: scale the n = 0 slice by 1.5 and renormalize
  // each node column
  auto bad = pnt::forward_tomogram(pnt::make_state(space, StateSpec::ground()), scheme, 15);
  for (std::size_t k = 0; k < bad.node_count(); ++k) {
    double before = 0.0;
    for (int n = 0; n <= bad.n_max; ++n) before += bad.value(n, k);
    bad.value(0, k) *= 1.5;
    double after = 0.0;
    for (int n = 0; n <= bad.n_max; ++n) after += bad.value(n, k);
    const double fix = before / after;
    for (int n = 0; n <= bad.n_max; ++n) bad.value(n, k) *= fix;
  }
  const auto rep = pnt::quantumness_check(bad, kOrd, space);
  CHECK_FALSE(rep.passes);
  CHECK(rep.min_eigenvalue < pnt::tol::kQuantumnessEigenFloor);
  CHECK(rep.purity > 1.0 + pnt::tol::kBoundsSlack);
  CHECK_FALSE(rep.bounds_ok);
}

TEST_CASE("kernel reports are deterministic and self-consistent", "[star]") {
  const FockSpace space(40);
  const auto rep1 = pnt::make_kernel_report(KernelKind::Dual, space, kOrd, 7, 10);
  const auto rep2 = pnt::make_kernel_report(KernelKind::Dual, space, kOrd, 7, 10);
  REQUIRE(rep1.points.size() == 10);
  for (std::size_t i = 0; i < rep1.points.size(); ++i) {
    CHECK(rep1.points[i].oracle == rep2.points[i].oracle);
    CHECK(rep1.points[i].transcription == rep2.points[i].transcription);
  }
  CHECK(rep1.oracle_symmetry_defect <= 1e-9);
  CHECK(rep1.oracle_cyclicity_defect <= 1e-9);
  const auto repf = pnt::make_kernel_report(KernelKind::Fidelity, space, kOrd, 3, 10);
  CHECK(repf.oracle_symmetry_defect <= 1e-9);
  CHECK(repf.oracle_realness_defect <= 1e-9);
  for (const auto& r : repf.points) {
    CHECK(std::isfinite(r.oracle.real()));
    CHECK(std::isfinite(r.transcription.real()));
  }
}

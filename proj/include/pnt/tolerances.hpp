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

#ifndef PNT_TOLERANCES_HPP
#define PNT_TOLERANCES_HPP

// Every numerical tolerance used by the library lives here, so the contract
// of each module can be read (and adjusted) in one place.

namespace pnt::tol {

// numerics
inline constexpr double kQuadratureWeightSumRel = 1e-10;
inline constexpr double kBesselAbs = 1e-12;
inline constexpr double kHermitianInputMax = 1e-9;   // gate for the eigensolver
inline constexpr double kJacobiOffDiagonal = 1e-14;  // sweep convergence, relative

// states
inline constexpr double kTruncationWarning = 1e-6;   // renormalisation excess
inline constexpr double kDensityTrace = 1e-9;
inline constexpr double kDensityHermitian = 1e-10;

// tomography
inline constexpr double kTomogramValueSlack = 1e-9;  // values live in [-eps, 1+eps]
inline constexpr double kTomogramImag = 1e-12;
inline constexpr double kReconstructDivergence = 0.05;  // trace defect => error
inline constexpr double kExpectationImag = 1e-6;

// star products
inline constexpr double kKernelMatchRel = 1e-6;      // KernelReport verdict
inline constexpr double kStarSettle = 1e-4;          // n-sum settling diagnostic
inline constexpr double kFidelityImag = 1e-5;
inline constexpr double kQuantumnessEigenFloor = -5e-3;
inline constexpr double kBoundsSlack = 5e-3;         // on the [0,1] windows

}  // namespace pnt::tol

#endif  // PNT_TOLERANCES_HPP

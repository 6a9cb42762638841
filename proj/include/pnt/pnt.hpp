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

#ifndef PNT_PNT_HPP
#define PNT_PNT_HPP

#include "pnt/complex_matrix.hpp"
#include "pnt/errors.hpp"
#include "pnt/fock.hpp"
#include "pnt/io.hpp"
#include "pnt/parallel.hpp"
#include "pnt/quadrature.hpp"
#include "pnt/special_functions.hpp"
#include "pnt/starprod.hpp"
#include "pnt/states.hpp"
#include "pnt/tolerances.hpp"
#include "pnt/tomography.hpp"

#endif  // PNT_PNT_HPP

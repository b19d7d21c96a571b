// Copyright 2026 The waveqls authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "waveqls/linalg.hpp"

namespace waveqls::polyapprox {

/// Truncated Chebyshev-T series for 1/(2x) on [1/c, 1] through the shift
/// x' = 2x - z0, z0 = 1 + 2/c. Coefficients decay geometrically with ratio
/// 1/(z0 + sqrt(z0^2 - 1)).
struct ChebySeries {
  std::vector<double> coeffs;  // T_0..T_{ell_max} in x' = 2x - z0
  double z0 = 0.0;
  double c = 1.0;
  int ell_max = 0;
  double target = 0.0;         // declared sup-norm target on [1/c, 1]
  double grid_error = 0.0;     // measured on a 10^4-point grid

  double eval(double x) const;  // value of the series at x in [0, 1]
};

/// Series for 1/(2x) with sup error <= eps/2 on [1/c, 1].
/// ell_max = ceil(2 + 2 log2(1/eps)) for c <= 32; larger c uses the
/// geometric tail with the actual ratio.
ChebySeries inverse_series(double c, double eps);

/// Polynomial in the Chebyshev basis on [-1, 1].
struct ChebyPoly {
  std::vector<double> coeffs;  // T_0..T_deg in x

  double eval(double x) const;
  Mat eval_matrix(const Mat& x) const;  // three-term recurrence on matrices
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// P_step = (1 + P_sign)/2 with a smoothed-sign Chebyshev approximant;
/// within eps of the unit step on [-1,-1/c] u [1/c,1] and bounded by 1
/// on [-1, 1] (grid verified; degree grows until verification passes).
ChebyPoly step_polynomial(double c, double eps);

/// The odd combined polynomial (eps/c)-close to 1/(2cx) on
/// [-1,-1/c] u [1/c,1] with |P_mi| <= 1 on [-1,1].
ChebyPoly combined_inverse_polynomial(double c, double eps);

struct MatrixInverseResult {
  Mat value;            // P_mi(A_p)
  double op_error = 0.0;  // || P_mi(A_p) - (1/2c) A_p^{-1} ||
  double grid_max_abs = 0.0;  // max |P_mi| on [-1, 1]
  int degree = 0;
};

/// Evaluates P_mi(A_p) by the Chebyshev recurrence; requires symmetric A_p
/// with spectrum inside [1/c, 1] (verified).
MatrixInverseResult matrix_inverse_polynomial(const Mat& a_p, double c,
                                              double eps);

/// Smallest series length whose measured grid error meets eps/2 (used for
/// the degree-vs-accuracy scaling report).
int minimal_inverse_degree(double c, double eps);

}  // namespace waveqls::polyapprox

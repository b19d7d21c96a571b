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

#include <string>
#include <vector>

#include "waveqls/linalg.hpp"

namespace waveqls::dwt {

enum class Family { Daubechies, Symlet, Coiflet, CDF97, CDF53 };

std::string to_string(Family f);

/// Filter bank for one wavelet. Orthogonal families satisfy sum(h) = sqrt2
/// and double-shift orthonormality; biorthogonal families carry distinct
/// analysis/synthesis pairs satisfying perfect reconstruction.
struct WaveletSpec {
  Family family = Family::Daubechies;
  int index = 1;  // dbK/symK/coifK; ignored for CDF families
  std::vector<double> dec_lo, dec_hi, rec_lo, rec_hi;
  bool orthogonal = true;

  std::string name() const;
};

/// Returns the standard published filters. Supported: db1-db8, sym2-sym8,
/// coif1-coif5, CDF97, CDF53. Parse "db3"-style names with from_name.
WaveletSpec filter_coefficients(Family family, int index = 0);
WaveletSpec wavelet_from_name(const std::string& name);

/// Explicit periodized multi-level DWT matrix. Row 0 holds the coarsest
/// scaling coefficient; rows [2^s, 2^{s+1}) the scale-s details, finest
/// details in the last N/2 rows.
struct TransformMatrix {
  Mat W;
  Mat inverse;
  int levels = 0;
  int n = 0;
  WaveletSpec spec;
};

/// Composes `levels` single-level periodized analysis steps on 2^n points.
/// levels defaults to n (full pyramid). Circular convolution throughout;
/// filters longer than the current block wrap and accumulate.
TransformMatrix build_transform_matrix(const WaveletSpec& spec, int n,
                                       int levels = -1);

/// W^{(x)d} with index ordering (j1,...,jd), j1 most significant.
Mat transform_dD(const TransformMatrix& w, int d);

/// Single analysis level on a block of even length m: [approx; detail].
Mat analysis_step_matrix(const WaveletSpec& spec, Eigen::Index m);
/// Single synthesis level, inverse of analysis_step_matrix.
Mat synthesis_step_matrix(const WaveletSpec& spec, Eigen::Index m);

}  // namespace waveqls::dwt

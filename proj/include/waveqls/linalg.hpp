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

#include <complex>
#include <Eigen/Dense>

namespace waveqls {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

/// Operator 2-norm (largest singular value).
double spectral_norm(const Mat& a);

/// Singular values in decreasing order.
Vec singular_values(const Mat& a);

/// Checked power-of-two log: returns n with 2^n == value.
int log2_exact(Eigen::Index value);

}  // namespace waveqls

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

#include <functional>
#include <string>

#include "waveqls/linalg.hpp"

namespace waveqls::fdm {

enum class OperatorKind { L1, L2, L3, Laplace2D, SturmLiouville1D };

std::string to_string(OperatorKind k);
OperatorKind operator_kind_from_string(const std::string& s);

/// Differential operator to discretize. SturmLiouville1D carries the
/// coefficient functions -d/dx(p du/dx) + q u with 0 < c <= p and 0 <= q.
struct OperatorSpec {
  OperatorKind kind = OperatorKind::L1;
  std::function<double(double)> p;  // SturmLiouville1D only
  std::function<double(double)> q;  // SturmLiouville1D only

  static OperatorSpec make(OperatorKind k);
  static OperatorSpec sturm_liouville(std::function<double(double)> p,
                                      std::function<double(double)> q);
};

/// A discretized periodic system A u = b on [0,1)^d with N = 2^{n d} points.
struct DiscretizedSystem {
  Mat A;
  Vec b;
  int n = 0;           // qubits per dimension
  int d = 1;           // spatial dimension
  double norm_scale = 1.0;
  int kernel_dim = 0;  // 1 when the constant vector spans the null space
  OperatorKind kind = OperatorKind::L1;

  Eigen::Index size() const { return A.rows(); }
};

enum class RhsProfile { Delta, GaussianSamples, ConstantFree };

std::string to_string(RhsProfile p);
RhsProfile rhs_profile_from_string(const std::string& s);

/// Finite-difference discretization of a 1D operator on 2^n periodic points.
DiscretizedSystem discretize_1d(const OperatorSpec& spec, int n);

/// Five-point 2D Laplacian T (x) I + I (x) T on a 2^n x 2^n periodic grid.
DiscretizedSystem discretize_2d_laplacian(int n);

/// Divides A and b by ||A||_2; records the factor in norm_scale.
DiscretizedSystem rescale_to_unit_norm(const DiscretizedSystem& sys);

/// Flips the sign of A (used to make L1/Laplace2D positive semidefinite
/// before entering the quantum pipeline).
DiscretizedSystem negate(const DiscretizedSystem& sys);

Vec build_rhs(RhsProfile profile, Eigen::Index n_points);

}  // namespace waveqls::fdm

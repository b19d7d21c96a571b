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

#include <optional>
#include <string>
#include <vector>

#include "waveqls/dwt.hpp"
#include "waveqls/fdm.hpp"
#include "waveqls/linalg.hpp"

namespace waveqls::precond {

/// Diagonal wavelet preconditioner. In 1D, diag[j] = 2^{-floor(log2 j)}
/// (diag[0] = 1); in d dimensions the exponent uses j_max over the d
/// per-dimension indices.
struct Preconditioner {
  Vec diag;
  int n = 0;
  int d = 1;

  Mat matrix() const { return diag.asDiagonal(); }
};

Preconditioner build_preconditioner(int n, int d);

/// How to treat a known null direction when reading off sigma_min.
struct KernelPolicy {
  enum class Kind { None, DeflateConstant, Threshold };
  Kind kind = Kind::None;
  double tau = 0.0;  // Threshold only

  static KernelPolicy none() { return {}; }
  static KernelPolicy deflate_constant() {
    return {Kind::DeflateConstant, 0.0};
  }
  static KernelPolicy threshold(double tau) { return {Kind::Threshold, tau}; }
};

/// sigma_max / sigma_min via dense SVD. DeflateConstant removes the singular
/// direction aligned with `kernel_direction` (the transformed constant
/// vector; defaults to the all-ones direction) before taking sigma_min.
double condition_number(const Mat& a, const KernelPolicy& policy,
                        std::optional<Vec> kernel_direction = std::nullopt);

struct PreconditionedSystem {
  Mat A_p;
  Vec b_p;
  double alpha = 0.0;    // 1 / sigma_min(A_p) after deflation
  double kappa_p = 0.0;
  double sigma_max = 0.0;
  fdm::DiscretizedSystem sys;
  dwt::TransformMatrix W;
  Preconditioner P;
  KernelPolicy policy;
  Vec kernel_direction_Ap;  // null direction of A_p when sys.kernel_dim = 1
};

/// A_p = P (W A W^T) P, b_p = P W b.
PreconditionedSystem precondition(const fdm::DiscretizedSystem& sys,
                                  const dwt::TransformMatrix& w,
                                  const Preconditioner& p,
                                  const KernelPolicy& policy =
                                      KernelPolicy::none());

struct SweepRow {
  std::string op;
  std::string wavelet;
  int n = 0;
  Eigen::Index N = 0;
  int d = 1;
  double kappa_raw = 0.0;
  double kappa_precond = 0.0;
};

/// Condition numbers with and without preconditioning over a parameter grid.
/// Rows are deterministic and ordered (operator, wavelet, n); cells may be
/// evaluated on `jobs` worker threads.
std::vector<SweepRow> sweep_condition_numbers(
    const std::vector<fdm::OperatorKind>& operators,
    const std::vector<dwt::WaveletSpec>& wavelets,
    const std::vector<int>& n_range, int d, int jobs = 1);

}  // namespace waveqls::precond

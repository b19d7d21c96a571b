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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waveqls/observable.hpp"
#include "waveqls/precond.hpp"
#include "waveqls/qmi.hpp"
#include "waveqls/qsim.hpp"

namespace waveqls::solver {

enum class Mode { Ideal, Faithful };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

/// Exact amplitude-loading oracle for |b> = b / ||b||.
qsim::StateVector prepare_b_state(const Vec& b);

/// The assembled state-generation circuit U_Psi together with the finishing
/// stage and the bookkeeping needed to interpret the output.
///
/// Qubit layout: [flag, sel_a, sel_b, data(n d), qmi ancillas...]. U_Psi
/// prepares (1/alpha sqrt2) sum_b |0>_flag |b> A_p^{-1} U^b W |bhat> + bad;
/// the finishing stage (H on sel_a, controlled-U^a, W^dagger) completes the
/// four-branch structure. The preconditioned matrix is normalized to unit
/// spectral norm internally so that alpha = kappa_p exactly.
struct Pipeline {
  qsim::Circuit u_psi;
  qsim::Circuit finish;
  int n_data = 0;
  int total_qubits = 0;
  double alpha = 0.0;     // = kappa_p of the normalized system
  double sigma_max = 0.0; // norm of A_p before internal normalization
  Mat a_p_normalized;     // deflated pseudo-inverse target of the QMI
  precond::PreconditionedSystem pre;
  qmi::QmiConfig qmi_cfg;
  std::vector<std::pair<int, int>> good_pattern;  // flag + qmi ancillas at 0
  double p_floor = 1e-14;
};

Pipeline build_solution_pipeline(const fdm::DiscretizedSystem& sys,
                                 const dwt::TransformMatrix& w,
                                 const precond::Preconditioner& p,
                                 const qmi::QmiConfig& cfg,
                                 const precond::KernelPolicy& policy =
                                     precond::KernelPolicy::none());

struct PipelineResult {
  qsim::StateVector psi;   // post-selected (sel_a, sel_b, data) state
  double xi = 0.0;         // recovered norm, alpha * sqrt(p_succ)
  double p_succ = 0.0;     // pre-amplification flag probability
  double p_amplified = 0.0;
  int rounds = 0;
  Mode mode = Mode::Ideal;
  std::uint64_t seed = 0;
};

/// Runs U_Psi, amplitude-amplifies the flag-0 subspace, applies the
/// finishing stage and post-selects. Ideal mode reads p exactly and applies
/// the Grover round count; faithful mode runs the exponential-schedule
/// search with seeded measurement sampling.
PipelineResult amplify(const Pipeline& pipe, Mode mode,
                       std::uint64_t seed = 0);

/// xi = kappa_p sqrt(p_succ).
double recover_norm(double p_succ, double kappa_p);

struct NormEstimate {
  double xi_hat = 0.0;
  double std_error = 0.0;
  long repetitions = 0;
};

/// Seeded Bernoulli estimate of p_succ from `repetitions` shots.
NormEstimate recover_norm_sampled(double p_succ, double kappa_p,
                                  long repetitions, std::uint64_t seed);

/// Flag-0 probability || P b_w ||^2 of applying the U_P block encoding to
/// the wavelet-transformed right-hand side.
double direct_approach_probability(const fdm::DiscretizedSystem& sys,
                                   const dwt::TransformMatrix& w);

struct DirectProbeRow {
  int n = 0;
  Eigen::Index N = 0;
  double prob_uniform = 0.0;   // b_w uniform: ~ 3/N (slope -1)
  double prob_finest = 0.0;    // b_w = e_{N-1}: exactly (2/N)^2 (slope -2)
};

std::vector<DirectProbeRow> direct_probe_sweep(const std::vector<int>& ns);

struct ExpectationReport {
  double quantum_value = 0.0;
  double classical_value = 0.0;
  double abs_error = 0.0;
  double xi = 0.0;
  double p_succ = 0.0;
  int rounds = 0;
  std::string observable;
  Mode mode = Mode::Ideal;
  std::uint64_t seed = 0;
};

/// Runs the pipeline and returns <u|M|u> = (xi^2/4) <psi|M'|psi> next to the
/// classical reference b^T A^{-T} M A^{-1} b / ||b||^2 (dense solve). |u> is
/// relative to the normalized right-hand side.
ExpectationReport end_to_end_expectation(
    const fdm::DiscretizedSystem& sys, const dwt::TransformMatrix& w,
    const precond::Preconditioner& p, const qmi::QmiConfig& cfg,
    const observable::SparseObservable& m,
    const precond::KernelPolicy& policy = precond::KernelPolicy::none(),
    Mode mode = Mode::Ideal, std::uint64_t seed = 0);

/// Branch states psi_ab = W^dagger U^a pinv(A_p) U^b W bhat computed by
/// dense linear algebra (test oracle for the circuit route).
std::vector<CVec> classical_branches(const Pipeline& pipe);

}  // namespace waveqls::solver

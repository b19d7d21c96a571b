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

#include "waveqls/blockenc.hpp"
#include "waveqls/linalg.hpp"
#include "waveqls/qsim.hpp"

namespace waveqls::qmi {

enum class Route { QpeCrot, OracleDilation };

std::string to_string(Route r);
Route route_from_string(const std::string& s);

struct QmiConfig {
  Route route = Route::OracleDilation;
  int t = 8;           // QPE bits (QpeCrot only)
  double eps = 1e-2;   // target error (QpeCrot declares 2 kappa_p 2^{-t})
  double alpha = 0.0;  // scale >= ||A_p^{-1}||; 0 = exact 1/sigma_min

  /// Smallest t honoring eps_QPE <= eps / (2 kappa_p).
  static int min_t(double kappa_p, double eps);
};

/// Standard phase estimation with t phase bits; U and its powers applied as
/// unitary oracles. Layout: [phase(t), data(n)]; phase register reads the
/// t-bit eigenphase most significant bit first.
qsim::Circuit qpe_circuit(const CMat& u, int t);

/// Uniformly controlled rotation imprinting flag amplitude 1/(alpha lam~)
/// for the eigenvalue estimate lam~ encoded in the phase register; phase
/// pattern 0 is treated as lam~ = 1. Amplitudes are clamped at 1 for
/// leakage-reachable patterns below 1/alpha. Layout: [flag, phase(t)].
qsim::Circuit crot_circuit(int t, double alpha);

/// Block encoding of A_p^{-1} (pseudo-inverse on the deflated complement
/// when a null direction is supplied). QpeCrot follows
/// (1 (x) QPE^dagger)(CROT (x) 1)(1 (x) QPE) with U = exp(i 2 pi A_p) and
/// requires symmetric positive definite input with spectrum in (0, 1];
/// OracleDilation is the exact dilation of A_p^{-1}/alpha.
BlockEncoding build_qmi(const Mat& a_p, const QmiConfig& cfg);
BlockEncoding build_qmi_deflated(const Mat& a_p, const QmiConfig& cfg,
                                 const Vec& null_direction);

struct QmiReportRow {
  Route route;
  int t = 0;
  double alpha = 0.0;
  double declared_eps = 0.0;
  double measured_err = 0.0;
};

/// Builds the encoding and measures extraction error against the dense
/// (pseudo-)inverse.
QmiReportRow measure_qmi(const Mat& a_p, const QmiConfig& cfg);

using blockenc::BlockEncoding;

}  // namespace waveqls::qmi

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

#include "waveqls/dwt.hpp"
#include "waveqls/linalg.hpp"
#include "waveqls/qsim.hpp"

namespace waveqls::blockenc {

/// An (alpha, a, eps) block encoding: the first `a` qubits of the circuit
/// are the encoding ancillas, the remaining n are data. The encoded matrix
/// is alpha * (<0^a| (x) 1) U (|0^a> (x) 1) up to eps.
struct BlockEncoding {
  qsim::Circuit circuit;
  int a = 0;
  int n = 0;
  double alpha = 1.0;
  double eps = 0.0;
  std::optional<Mat> encoded;  // kept at small n for self-verification

  /// The 2^n x 2^n block (<0^a| (x) 1) U (|0^a> (x) 1), by running the
  /// circuit on the 2^n data basis states.
  CMat extract() const;

  /// || encoded - alpha * extract() || when `encoded` is known.
  double verify_error() const;
};

enum class Sign { Plus, Minus };

/// Diagonal unitary U+- with U|j> = e^{+-i theta_j}|j>,
/// cos theta_j = 2^{-floor(log2 j)}. Realized with zero-controlled phase
/// gates on the leading-one position; exact, no global phase freedom.
qsim::Circuit u_pm_circuit(int n, Sign sign);

/// Adds one control qubit (qubit 0): |0>-control selects U+ and |1>-control
/// selects U-. Prefix-ANDs of the control bits are computed into ancillas
/// through a Toffoli ladder and uncomputed; Toffoli count is 2(n-2).
/// Layout: [control, data(n), ancillas(n-2)].
qsim::Circuit controlled_u_pm(int n, Sign sign);

/// (1,1,0) encoding of the preconditioner P via
/// (H (x) 1) L0(U+) L1(U-) (H (x) 1). Layout: [ancilla, data(n)].
BlockEncoding u_p_block_encoding(int n);

/// COMP |x>|y>|0...> -> flag = [x >= y]; ripple-borrow subtract-compare.
/// Layout: [x(n), y(n), flag, borrow(n)]; borrow ancillas returned clean.
qsim::Circuit comparator_circuit(int n);

/// CADD |x>|y>|f>|0^n> -> out = x if f=1 else y (out starts at |0^n>).
/// Layout: [x(n), y(n), flag, out(n)].
qsim::Circuit cadd_circuit(int n);

/// Tournament of COMP+CADD pairs writing max(j_1..j_d) into the output
/// register; all flags and temporaries uncomputed.
/// Layout: [reg1..regd (d*n), out(n), workspace...]. Requires d >= 2.
qsim::Circuit max_circuit(int n, int d);

/// U+-_dD: MAX into an ancilla register, U+- on it, then MAX^dagger.
/// Layout: [reg1..regd (d*n), max(n), workspace...]; d = 1 reduces to
/// u_pm_circuit on the data register.
qsim::Circuit u_pm_dD(int n, int d, Sign sign);

/// Exact one-ancilla unitary dilation of A/alpha (needs ||A/alpha|| <= 1).
/// Layout: [ancilla, data(n)].
BlockEncoding dilation_block_encoding(const Mat& a, double alpha);

/// Composes U_P . (1 (x) W) . U_A . (1 (x) W^T) . U_P into an encoding of
/// A_p = P W A W^T P with alpha = alpha_A; the single U_A use is tagged for
/// query counting. Each U_P application carries its own fresh ancilla.
BlockEncoding u_ap_block_encoding(const BlockEncoding& u_a, const Mat& w,
                                  int n);

}  // namespace waveqls::blockenc

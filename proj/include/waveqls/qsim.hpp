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

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "waveqls/linalg.hpp"

namespace waveqls::qsim {

/// Dense statevector over q qubits. Qubit 0 is the most significant bit of
/// the basis index.
struct StateVector {
  CVec amps;
  int q = 0;

  static StateVector zero_state(int q);
  static StateVector basis_state(int q, Eigen::Index index);

  double norm() const { return amps.norm(); }
  int bit(Eigen::Index index, int qubit) const {
    return static_cast<int>((index >> (q - 1 - qubit)) & 1);
  }
};

enum class GateKind { H, X, Z, Phase, RotZ, RotY, Swap, Toffoli, UnitaryBlock };

std::string to_string(GateKind k);

/// One gate: kind + targets + optional (qubit, polarity) controls. Phase is
/// diag(1, e^{i theta}); RotZ is exp(i theta Z); RotY the usual Y rotation.
/// A Phase with controls is the multi-controlled phase. UnitaryBlock applies
/// an arbitrary unitary over the listed target qubits (used for oracles such
/// as W and block-encoding dilations).
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  std::vector<std::pair<int, bool>> controls;  // (qubit, required value)
  double theta = 0.0;
  std::shared_ptr<const CMat> matrix;  // UnitaryBlock only
  std::string label;                   // census / query-count tag

  Gate inverse() const;
};

Gate make_h(int q);
Gate make_x(int q);
Gate make_z(int q);
Gate make_phase(int q, double theta);
Gate make_rotz(int q, double theta);
Gate make_roty(int q, double theta);
Gate make_swap(int a, int b);
Gate make_cnot(int control, int target);
Gate make_toffoli(int c1, int c2, int target);
Gate make_unitary(std::vector<int> targets, CMat u, std::string label = "");

Gate with_controls(Gate g, std::vector<std::pair<int, bool>> controls);

enum class QubitRole { Data, Flag, Select, Qpe, Ancilla };

/// Ordered gate list over a fixed qubit count, with declared roles. Qubits
/// listed in clean_ancillas must return to |0> on every basis input.
struct Circuit {
  int q = 0;
  std::vector<Gate> gates;
  std::vector<QubitRole> roles;
  std::vector<int> clean_ancillas;

  explicit Circuit(int qubits = 0)
      : q(qubits), roles(qubits, QubitRole::Data) {}

  void add(Gate g);
  void append(const Circuit& other);  // same qubit count
  Circuit inverse() const;

  std::map<std::string, int> gate_census() const;
  int toffoli_count() const;
  int count_label(const std::string& label) const;
};

/// Applies one gate in place. Cost is linear in 2^q.
void apply(StateVector& state, const Gate& g);

/// Left-to-right application of all gates.
StateVector run(const Circuit& c, StateVector state);

/// Columns are run(c, |j>). Guarded by a qubit cap (default 14).
CMat circuit_to_matrix(const Circuit& c, int cap = 14);

/// Exact probability that the listed qubits hold the given bit values.
double success_probability(const StateVector& state,
                           const std::vector<std::pair<int, int>>& pattern);

/// Projects onto the pattern, drops those qubits, renormalizes.
/// Returns the reduced state and the projection probability.
std::pair<StateVector, double> post_select(
    const StateVector& state, const std::vector<std::pair<int, int>>& pattern);

/// Verifies that every declared clean ancilla returns to |0> for all basis
/// inputs on the remaining qubits (exhaustive; intended for small circuits).
bool ancillas_clean(const Circuit& c, double tol = 1e-10);

}  // namespace waveqls::qsim

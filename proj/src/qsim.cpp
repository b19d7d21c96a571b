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

#include "waveqls/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace waveqls::qsim {

StateVector StateVector::zero_state(int q) { return basis_state(q, 0); }

StateVector StateVector::basis_state(int q, Eigen::Index index) {
  StateVector s;
  s.q = q;
  s.amps = CVec::Zero(Eigen::Index(1) << q);
  s.amps(index) = 1.0;
  return s;
}

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::Phase: return "Phase";
    case GateKind::RotZ: return "RotZ";
    case GateKind::RotY: return "RotY";
    case GateKind::Swap: return "Swap";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::UnitaryBlock: return "UnitaryBlock";
  }
  throw std::logic_error("bad GateKind");
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Z:
    case GateKind::Swap:
    case GateKind::Toffoli:
      break;  // self-inverse
    case GateKind::Phase:
    case GateKind::RotZ:
    case GateKind::RotY:
      g.theta = -theta;
      break;
    case GateKind::UnitaryBlock:
      g.matrix = std::make_shared<const CMat>(matrix->adjoint());
      break;
  }
  return g;
}

Gate make_h(int q) { return Gate{GateKind::H, {q}, {}, 0.0, nullptr, ""}; }
Gate make_x(int q) { return Gate{GateKind::X, {q}, {}, 0.0, nullptr, ""}; }
Gate make_z(int q) { return Gate{GateKind::Z, {q}, {}, 0.0, nullptr, ""}; }

Gate make_phase(int q, double theta) {
  return Gate{GateKind::Phase, {q}, {}, theta, nullptr, ""};
}

Gate make_rotz(int q, double theta) {
  return Gate{GateKind::RotZ, {q}, {}, theta, nullptr, ""};
}

Gate make_roty(int q, double theta) {
  return Gate{GateKind::RotY, {q}, {}, theta, nullptr, ""};
}

Gate make_swap(int a, int b) {
  return Gate{GateKind::Swap, {a, b}, {}, 0.0, nullptr, ""};
}

Gate make_cnot(int control, int target) {
  return Gate{GateKind::X, {target}, {{control, true}}, 0.0, nullptr, ""};
}

Gate make_toffoli(int c1, int c2, int target) {
  return Gate{GateKind::Toffoli,
              {target},
              {{c1, true}, {c2, true}},
              0.0,
              nullptr,
              ""};
}

Gate make_unitary(std::vector<int> targets, CMat u, std::string label) {
  const Eigen::Index dim = Eigen::Index(1) << targets.size();
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("make_unitary: matrix size mismatch");
  }
  if ((u * u.adjoint() - CMat::Identity(dim, dim)).norm() > 1e-10 * dim) {
    throw std::invalid_argument("make_unitary: matrix is not unitary");
  }
  Gate g;
  g.kind = GateKind::UnitaryBlock;
  g.targets = std::move(targets);
  g.matrix = std::make_shared<const CMat>(std::move(u));
  g.label = std::move(label);
  return g;
}

Gate with_controls(Gate g, std::vector<std::pair<int, bool>> controls) {
  for (auto& c : controls) g.controls.push_back(c);
  return g;
}

void Circuit::add(Gate g) {
  for (int t : g.targets) {
    if (t < 0 || t >= q) throw std::out_of_range("gate target out of range");
  }
  for (auto& [c, pol] : g.controls) {
    if (c < 0 || c >= q) throw std::out_of_range("gate control out of range");
    for (int t : g.targets) {
      if (t == c) throw std::invalid_argument("control overlaps target");
    }
  }
  gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.q != q) throw std::invalid_argument("append: qubit count differs");
  for (const auto& g : other.gates) gates.push_back(g);
}

Circuit Circuit::inverse() const {
  Circuit inv(q);
  inv.roles = roles;
  inv.clean_ancillas = clean_ancillas;
  inv.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    inv.gates.push_back(it->inverse());
  }
  return inv;
}

std::map<std::string, int> Circuit::gate_census() const {
  std::map<std::string, int> census;
  for (const auto& g : gates) {
    std::string key = to_string(g.kind);
    if (g.kind != GateKind::Toffoli && !g.controls.empty()) {
      key = "C" + std::to_string(g.controls.size()) + "-" + key;
    }
    ++census[key];
  }
  return census;
}

int Circuit::toffoli_count() const {
  int n = 0;
  for (const auto& g : gates) {
    if (g.kind == GateKind::Toffoli) ++n;
  }
  return n;
}

int Circuit::count_label(const std::string& label) const {
  int n = 0;
  for (const auto& g : gates) {
    if (g.label == label) ++n;
  }
  return n;
}

namespace {

inline bool controls_satisfied(Eigen::Index idx, int q,
                               const std::vector<std::pair<int, bool>>& cs) {
  for (const auto& [c, pol] : cs) {
    const int bit = static_cast<int>((idx >> (q - 1 - c)) & 1);
    if (bit != static_cast<int>(pol)) return false;
  }
  return true;
}

}  // namespace

void apply(StateVector& state, const Gate& g) {
  const int q = state.q;
  const Eigen::Index dim = state.amps.size();
  auto mask_of = [q](int qubit) { return Eigen::Index(1) << (q - 1 - qubit); };

  switch (g.kind) {
    case GateKind::H: {
      const Eigen::Index m = mask_of(g.targets[0]);
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i & m) || !controls_satisfied(i, q, g.controls)) continue;
        const cplx a = state.amps(i);
        const cplx b = state.amps(i | m);
        state.amps(i) = (a + b) * inv_sqrt2;
        state.amps(i | m) = (a - b) * inv_sqrt2;
      }
      break;
    }
    case GateKind::X:
    case GateKind::Toffoli: {
      const Eigen::Index m = mask_of(g.targets[0]);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i & m) || !controls_satisfied(i, q, g.controls)) continue;
        if (g.kind == GateKind::Toffoli &&
            !controls_satisfied(i, q, g.controls)) {
          continue;
        }
        std::swap(state.amps(i), state.amps(i | m));
      }
      break;
    }
    case GateKind::Z: {
      const Eigen::Index m = mask_of(g.targets[0]);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i & m) && controls_satisfied(i, q, g.controls)) {
          state.amps(i) = -state.amps(i);
        }
      }
      break;
    }
    case GateKind::Phase: {
      const Eigen::Index m = mask_of(g.targets[0]);
      const cplx f = std::polar(1.0, g.theta);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i & m) && controls_satisfied(i, q, g.controls)) {
          state.amps(i) *= f;
        }
      }
      break;
    }
    case GateKind::RotZ: {
      // exp(i theta Z) = diag(e^{i theta}, e^{-i theta})
      const Eigen::Index m = mask_of(g.targets[0]);
      const cplx f0 = std::polar(1.0, g.theta);
      const cplx f1 = std::polar(1.0, -g.theta);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if (!controls_satisfied(i, q, g.controls)) continue;
        state.amps(i) *= (i & m) ? f1 : f0;
      }
      break;
    }
    case GateKind::RotY: {
      const Eigen::Index m = mask_of(g.targets[0]);
      const double c = std::cos(g.theta / 2.0);
      const double s = std::sin(g.theta / 2.0);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i & m) || !controls_satisfied(i, q, g.controls)) continue;
        const cplx a0 = state.amps(i);
        const cplx a1 = state.amps(i | m);
        state.amps(i) = c * a0 - s * a1;
        state.amps(i | m) = s * a0 + c * a1;
      }
      break;
    }
    case GateKind::Swap: {
      const Eigen::Index ma = mask_of(g.targets[0]);
      const Eigen::Index mb = mask_of(g.targets[1]);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i & ma) && !(i & mb) && controls_satisfied(i, q, g.controls)) {
          std::swap(state.amps(i), state.amps((i & ~ma) | mb));
        }
      }
      break;
    }
    case GateKind::UnitaryBlock: {
      const int k = static_cast<int>(g.targets.size());
      const Eigen::Index sub = Eigen::Index(1) << k;
      std::vector<Eigen::Index> masks(k);
      for (int t = 0; t < k; ++t) masks[t] = mask_of(g.targets[t]);
      Eigen::Index all = 0;
      for (auto m : masks) all |= m;
      CVec scratch(sub);
      for (Eigen::Index base = 0; base < dim; ++base) {
        if ((base & all) || !controls_satisfied(base, q, g.controls)) {
          continue;
        }
        // gather, multiply, scatter; target 0 is the most significant
        for (Eigen::Index r = 0; r < sub; ++r) {
          Eigen::Index idx = base;
          for (int t = 0; t < k; ++t) {
            if ((r >> (k - 1 - t)) & 1) idx |= masks[t];
          }
          scratch(r) = state.amps(idx);
        }
        const CVec out = (*g.matrix) * scratch;
        for (Eigen::Index r = 0; r < sub; ++r) {
          Eigen::Index idx = base;
          for (int t = 0; t < k; ++t) {
            if ((r >> (k - 1 - t)) & 1) idx |= masks[t];
          }
          state.amps(idx) = out(r);
        }
      }
      break;
    }
  }
}

StateVector run(const Circuit& c, StateVector state) {
  if (state.q != c.q) throw std::invalid_argument("run: qubit count mismatch");
  for (const auto& g : c.gates) apply(state, g);
  return state;
}

CMat circuit_to_matrix(const Circuit& c, int cap) {
  if (c.q > cap) throw std::invalid_argument("circuit_to_matrix: qubit cap");
  const Eigen::Index dim = Eigen::Index(1) << c.q;
  CMat m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    m.col(j) = run(c, StateVector::basis_state(c.q, j)).amps;
  }
  return m;
}

double success_probability(const StateVector& state,
                           const std::vector<std::pair<int, int>>& pattern) {
  const Eigen::Index dim = state.amps.size();
  double p = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    bool match = true;
    for (const auto& [qubit, bit] : pattern) {
      if (state.bit(i, qubit) != bit) {
        match = false;
        break;
      }
    }
    if (match) p += std::norm(state.amps(i));
  }
  return p;
}

std::pair<StateVector, double> post_select(
    const StateVector& state,
    const std::vector<std::pair<int, int>>& pattern) {
  const int q = state.q;
  const int kept = q - static_cast<int>(pattern.size());
  std::vector<bool> is_fixed(q, false);
  for (const auto& [qubit, bit] : pattern) is_fixed[qubit] = true;
  std::vector<int> kept_qubits;
  for (int i = 0; i < q; ++i) {
    if (!is_fixed[i]) kept_qubits.push_back(i);
  }

  StateVector out;
  out.q = kept;
  out.amps = CVec::Zero(Eigen::Index(1) << kept);
  const Eigen::Index dim = state.amps.size();
  double p = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    bool match = true;
    for (const auto& [qubit, bit] : pattern) {
      if (state.bit(i, qubit) != bit) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    p += std::norm(state.amps(i));
    Eigen::Index r = 0;
    for (int t = 0; t < kept; ++t) {
      r = (r << 1) | state.bit(i, kept_qubits[t]);
    }
    out.amps(r) = state.amps(i);
  }
  if (p > 0.0) out.amps /= std::sqrt(p);
  return {out, p};
}

bool ancillas_clean(const Circuit& c, double tol) {
  std::vector<bool> is_anc(c.q, false);
  for (int a : c.clean_ancillas) is_anc[a] = true;
  std::vector<int> data;
  for (int i = 0; i < c.q; ++i) {
    if (!is_anc[i]) data.push_back(i);
  }
  const Eigen::Index inputs = Eigen::Index(1) << data.size();
  for (Eigen::Index j = 0; j < inputs; ++j) {
    Eigen::Index idx = 0;
    for (size_t t = 0; t < data.size(); ++t) {
      if ((j >> (data.size() - 1 - t)) & 1) {
        idx |= Eigen::Index(1) << (c.q - 1 - data[t]);
      }
    }
    const StateVector out = run(c, StateVector::basis_state(c.q, idx));
    for (Eigen::Index i = 0; i < out.amps.size(); ++i) {
      if (std::norm(out.amps(i)) < tol * tol) continue;
      for (int a : c.clean_ancillas) {
        if (out.bit(i, a) != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace waveqls::qsim

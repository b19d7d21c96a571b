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
#include <vector>

#include "waveqls/linalg.hpp"
#include "waveqls/qsim.hpp"

namespace waveqls::observable {

/// Real symmetric observable given by sparse location/value oracles.
/// loc(j, l) returns the column of the l-th nonzero in row j; val(j, k) the
/// entry. Oracle calls are counted per instance.
class SparseObservable {
 public:
  SparseObservable(int n, int sparsity,
                   std::function<Eigen::Index(Eigen::Index, int)> loc,
                   std::function<double(Eigen::Index, Eigen::Index)> val,
                   std::string name = "");

  int n() const { return n_; }
  Eigen::Index dim() const { return Eigen::Index(1) << n_; }
  int sparsity() const { return s_; }
  const std::string& name() const { return name_; }

  Eigen::Index loc(Eigen::Index row, int l) const;
  double val(Eigen::Index row, Eigen::Index col) const;

  long loc_queries() const { return loc_queries_; }
  long val_queries() const { return val_queries_; }
  void reset_counters() const { loc_queries_ = val_queries_ = 0; }

  Mat dense() const;

 private:
  int n_;
  int s_;
  std::function<Eigen::Index(Eigen::Index, int)> loc_;
  std::function<double(Eigen::Index, Eigen::Index)> val_;
  std::string name_;
  mutable long loc_queries_ = 0;
  mutable long val_queries_ = 0;
};

/// M' = sum_{abcd} |ab><cd| (x) M over two select qubits plus the data
/// register; every extended oracle query consumes exactly one base query.
class ExtendedObservable {
 public:
  explicit ExtendedObservable(const SparseObservable& base);

  const SparseObservable& base() const { return base_; }
  /// Column index of the (c,d,l)-th nonzero in row (a,b,j): (2c+d) N + loc.
  Eigen::Index loc(int a, int b, Eigen::Index j, int c, int d, int l) const;
  double val(Eigen::Index j, Eigen::Index k) const;

  Mat dense() const;

 private:
  const SparseObservable& base_;
};

ExtendedObservable extend(const SparseObservable& m);

/// <psi| M' |psi> for a normalized state over (2 select + n data) qubits,
/// evaluated by oracle traversal. Throws when the imaginary part exceeds
/// 1e-10 (asymmetric M).
double expectation(const qsim::StateVector& state,
                   const ExtendedObservable& mprime);

// Built-in observable library (plumbing for the CLI and tests).
SparseObservable identity_observable(int n);
/// diag(g(x_0), ..., g(x_{N-1})) with x_i = i / N.
SparseObservable diagonal_grid_observable(int n,
                                          std::function<double(double)> g);
/// (S + S^T)/2 for the cyclic shift S: couples nearest-neighbor grid points.
SparseObservable nearest_neighbor_observable(int n);

SparseObservable library_observable(const std::string& name, int n);

}  // namespace waveqls::observable

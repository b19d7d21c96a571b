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

#include "waveqls/precond.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace waveqls::precond {

namespace {

int floor_log2(Eigen::Index j) {
  int s = 0;
  while (j > 1) {
    j >>= 1;
    ++s;
  }
  return s;
}

}  // namespace

Preconditioner build_preconditioner(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("preconditioner: n,d >= 1");
  if (static_cast<long>(n) * d > 24) {
    throw std::invalid_argument("preconditioner: size cap exceeded");
  }
  const Eigen::Index N1 = Eigen::Index(1) << n;
  Eigen::Index N = 1;
  for (int k = 0; k < d; ++k) N *= N1;
  Preconditioner p;
  p.n = n;
  p.d = d;
  p.diag.resize(N);
  for (Eigen::Index idx = 0; idx < N; ++idx) {
    Eigen::Index rest = idx;
    Eigen::Index jmax = 0;
    for (int k = 0; k < d; ++k) {
      const Eigen::Index jk = rest % N1;
      rest /= N1;
      jmax = std::max(jmax, jk);
    }
    p.diag(idx) = (jmax == 0) ? 1.0 : std::pow(2.0, -floor_log2(jmax));
  }
  return p;
}

double condition_number(const Mat& a, const KernelPolicy& policy,
                        std::optional<Vec> kernel_direction) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw std::invalid_argument("condition_number: square matrix expected");
  }
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinV);
  const Vec& sigma = svd.singularValues();
  const double smax = sigma(0);
  if (smax == 0.0) throw std::invalid_argument("condition_number: zero matrix");

  switch (policy.kind) {
    case KernelPolicy::Kind::None:
      return smax / sigma(sigma.size() - 1);
    case KernelPolicy::Kind::Threshold: {
      double smin = -1.0;
      for (Eigen::Index i = sigma.size() - 1; i >= 0; --i) {
        if (sigma(i) >= policy.tau * smax) {
          smin = sigma(i);
          break;
        }
      }
      if (smin <= 0.0) {
        throw std::invalid_argument(
            "condition_number: all singular values below threshold");
      }
      return smax / smin;
    }
    case KernelPolicy::Kind::DeflateConstant: {
      Vec dir;
      if (kernel_direction) {
        dir = kernel_direction->normalized();
      } else {
        dir = Vec::Ones(a.rows()).normalized();
      }
      // drop the singular direction best aligned with the kernel direction
      Eigen::Index drop = 0;
      double best = -1.0;
      for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        const double align = std::abs(svd.matrixV().col(i).dot(dir));
        if (align > best) {
          best = align;
          drop = i;
        }
      }
      double smin = -1.0;
      for (Eigen::Index i = sigma.size() - 1; i >= 0; --i) {
        if (i == drop) continue;
        smin = sigma(i);
        break;
      }
      if (smin <= 0.0) {
        throw std::invalid_argument("condition_number: nothing left");
      }
      double smax_kept = (drop == 0) ? sigma(1) : smax;
      return smax_kept / smin;
    }
  }
  throw std::logic_error("bad KernelPolicy");
}

PreconditionedSystem precondition(const fdm::DiscretizedSystem& sys,
                                  const dwt::TransformMatrix& w,
                                  const Preconditioner& p,
                                  const KernelPolicy& policy) {
  const Mat wd = (sys.d == 1) ? w.W : dwt::transform_dD(w, sys.d);
  if (wd.rows() != sys.A.rows() || p.diag.size() != sys.A.rows()) {
    throw std::invalid_argument("precondition: dimension mismatch");
  }
  PreconditionedSystem out;
  out.sys = sys;
  out.W = w;
  out.P = p;
  out.policy = policy;
  const Mat aw = wd * sys.A * wd.transpose();
  out.A_p = p.diag.asDiagonal() * aw * p.diag.asDiagonal();
  out.b_p = p.diag.cwiseProduct(wd * sys.b);

  // null direction of A_p when the original kernel is the constant vector:
  // A_p x = 0 iff W^T P x is constant, so x ~ P^{-1} W^{-T} 1.
  std::optional<Vec> dir;
  if (sys.kernel_dim == 1) {
    Vec ones = Vec::Ones(sys.A.rows());
    Vec wt_inv_ones;
    if (w.spec.orthogonal) {
      wt_inv_ones = wd * ones;  // W^{-T} = W
    } else {
      wt_inv_ones = wd.transpose().partialPivLu().solve(ones);
    }
    Vec v = wt_inv_ones.cwiseQuotient(p.diag);
    out.kernel_direction_Ap = v.normalized();
    dir = out.kernel_direction_Ap;
  }

  out.kappa_p = condition_number(out.A_p, policy, dir);

  Eigen::BDCSVD<Mat> svd(out.A_p, Eigen::ComputeThinV);
  const Vec& sigma = svd.singularValues();
  out.sigma_max = sigma(0);
  double smin = sigma(sigma.size() - 1);
  if (policy.kind == KernelPolicy::Kind::DeflateConstant && dir) {
    Eigen::Index drop = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      const double align = std::abs(svd.matrixV().col(i).dot(*dir));
      if (align > best) {
        best = align;
        drop = i;
      }
    }
    smin = (drop == sigma.size() - 1) ? sigma(sigma.size() - 2)
                                      : sigma(sigma.size() - 1);
  } else if (policy.kind == KernelPolicy::Kind::Threshold) {
    for (Eigen::Index i = sigma.size() - 1; i >= 0; --i) {
      if (sigma(i) >= policy.tau * sigma(0)) {
        smin = sigma(i);
        break;
      }
    }
  }
  out.alpha = 1.0 / smin;
  return out;
}

std::vector<SweepRow> sweep_condition_numbers(
    const std::vector<fdm::OperatorKind>& operators,
    const std::vector<dwt::WaveletSpec>& wavelets,
    const std::vector<int>& n_range, int d, int jobs) {
  struct Cell {
    fdm::OperatorKind op;
    dwt::WaveletSpec wavelet;
    int n;
  };
  std::vector<Cell> cells;
  for (const auto& op : operators) {
    for (const auto& wl : wavelets) {
      for (int n : n_range) cells.push_back({op, wl, n});
    }
  }

  auto eval = [d](const Cell& cell) {
    fdm::DiscretizedSystem sys;
    if (cell.op == fdm::OperatorKind::Laplace2D || d == 2) {
      sys = fdm::discretize_2d_laplacian(cell.n);
    } else {
      sys = fdm::discretize_1d(fdm::OperatorSpec::make(cell.op), cell.n);
    }
    const auto policy = sys.kernel_dim == 1 ? KernelPolicy::deflate_constant()
                                            : KernelPolicy::none();
    SweepRow row;
    row.op = fdm::to_string(cell.op);
    row.wavelet = cell.wavelet.name();
    row.n = cell.n;
    row.N = sys.size();
    row.d = sys.d;
    row.kappa_raw = condition_number(sys.A, policy);
    const auto w = dwt::build_transform_matrix(cell.wavelet, cell.n);
    const auto p = build_preconditioner(cell.n, sys.d);
    const auto pre = precondition(sys, w, p, policy);
    row.kappa_precond = pre.kappa_p;
    return row;
  };

  std::vector<SweepRow> rows(cells.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < cells.size(); ++i) rows[i] = eval(cells[i]);
    return rows;
  }
  std::vector<std::future<SweepRow>> futs;
  futs.reserve(cells.size());
  size_t next = 0;
  while (next < cells.size()) {
    const size_t batch =
        std::min(static_cast<size_t>(jobs), cells.size() - next);
    for (size_t k = 0; k < batch; ++k) {
      futs.push_back(std::async(std::launch::async, eval, cells[next + k]));
    }
    for (size_t k = 0; k < batch; ++k) {
      rows[next + k] = futs[futs.size() - batch + k].get();
    }
    next += batch;
  }
  return rows;
}

}  // namespace waveqls::precond

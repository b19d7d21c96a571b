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

#include "waveqls/fdm.hpp"

#include <cmath>
#include <stdexcept>

namespace waveqls::fdm {

std::string to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::L1: return "L1";
    case OperatorKind::L2: return "L2";
    case OperatorKind::L3: return "L3";
    case OperatorKind::Laplace2D: return "Laplace2D";
    case OperatorKind::SturmLiouville1D: return "SturmLiouville1D";
  }
  throw std::logic_error("bad OperatorKind");
}

OperatorKind operator_kind_from_string(const std::string& s) {
  if (s == "L1") return OperatorKind::L1;
  if (s == "L2") return OperatorKind::L2;
  if (s == "L3") return OperatorKind::L3;
  if (s == "Laplace2D" || s == "laplace2d") return OperatorKind::Laplace2D;
  if (s == "SturmLiouville1D") return OperatorKind::SturmLiouville1D;
  throw std::invalid_argument("unknown operator: " + s);
}

OperatorSpec OperatorSpec::make(OperatorKind k) {
  OperatorSpec spec;
  spec.kind = k;
  if (k == OperatorKind::L3) {
    // L3 = -d/dx(cosh(x/4) d/dx) + e^x, the paper's variable-coefficient
    // Sturm-Liouville instance.
    spec.p = [](double x) { return std::cosh(x / 4.0); };
    spec.q = [](double x) { return std::exp(x); };
  }
  return spec;
}

OperatorSpec OperatorSpec::sturm_liouville(std::function<double(double)> p,
                                           std::function<double(double)> q) {
  OperatorSpec spec;
  spec.kind = OperatorKind::SturmLiouville1D;
  spec.p = std::move(p);
  spec.q = std::move(q);
  return spec;
}

namespace {

// Periodic 1D second-difference matrix, rows (1, -2, 1)/h^2.
Mat second_difference(Eigen::Index N, double h) {
  Mat t = Mat::Zero(N, N);
  const double w = 1.0 / (h * h);
  for (Eigen::Index i = 0; i < N; ++i) {
    t(i, i) = -2.0 * w;
    t(i, (i + 1) % N) += w;
    t(i, (i + N - 1) % N) += w;
  }
  return t;
}

// Periodic central first difference, rows (-1/2h, 0, 1/2h).
Mat first_difference(Eigen::Index N, double h) {
  Mat d = Mat::Zero(N, N);
  const double w = 1.0 / (2.0 * h);
  for (Eigen::Index i = 0; i < N; ++i) {
    d(i, (i + 1) % N) += w;
    d(i, (i + N - 1) % N) -= w;
  }
  return d;
}

// Conservative flux form -D^-(p_{i+1/2} D^+) + q_i with midpoint-sampled p.
Mat sturm_liouville_matrix(const OperatorSpec& spec, Eigen::Index N,
                           double h) {
  if (!spec.p || !spec.q) {
    throw std::invalid_argument("SturmLiouville1D needs p and q");
  }
  Vec p_half(N), q(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    const double x = static_cast<double>(i) * h;
    p_half(i) = spec.p(x + 0.5 * h);
    q(i) = spec.q(x);
    if (p_half(i) <= 0.0) {
      throw std::invalid_argument("Sturm-Liouville p(x) must be positive");
    }
    if (q(i) < 0.0) {
      throw std::invalid_argument("Sturm-Liouville q(x) must be nonnegative");
    }
  }
  Mat a = Mat::Zero(N, N);
  const double w = 1.0 / (h * h);
  for (Eigen::Index i = 0; i < N; ++i) {
    const Eigen::Index im = (i + N - 1) % N;
    a(i, i) = (p_half(i) + p_half(im)) * w + q(i);
    a(i, (i + 1) % N) -= p_half(i) * w;
    a(i, im) -= p_half(im) * w;
  }
  return a;
}

}  // namespace

DiscretizedSystem discretize_1d(const OperatorSpec& spec, int n) {
  if (n < 2) throw std::invalid_argument("discretize_1d: n must be >= 2");
  if (spec.kind == OperatorKind::Laplace2D) {
    throw std::invalid_argument("discretize_1d: not a 1D operator");
  }
  const Eigen::Index N = Eigen::Index(1) << n;
  const double h = 1.0 / static_cast<double>(N);

  DiscretizedSystem sys;
  sys.n = n;
  sys.d = 1;
  sys.kind = spec.kind;
  switch (spec.kind) {
    case OperatorKind::L1:
      sys.A = second_difference(N, h);
      sys.kernel_dim = 1;
      break;
    case OperatorKind::L2:
      sys.A = second_difference(N, h) - first_difference(N, h)
              + Mat::Identity(N, N);
      sys.kernel_dim = 0;
      break;
    case OperatorKind::L3:
    case OperatorKind::SturmLiouville1D: {
      OperatorSpec s = spec;
      if (!s.p) s = OperatorSpec::make(OperatorKind::L3);
      sys.A = sturm_liouville_matrix(s, N, h);
      sys.kernel_dim = 0;
      break;
    }
    default:
      throw std::logic_error("unreachable");
  }
  sys.b = build_rhs(sys.kernel_dim == 1 ? RhsProfile::ConstantFree
                                        : RhsProfile::GaussianSamples,
                    N);
  return sys;
}

DiscretizedSystem discretize_2d_laplacian(int n) {
  if (n < 2) {
    throw std::invalid_argument("discretize_2d_laplacian: n must be >= 2");
  }
  const Eigen::Index N1 = Eigen::Index(1) << n;
  const double h = 1.0 / static_cast<double>(N1);
  const Mat t = second_difference(N1, h);
  const Mat id = Mat::Identity(N1, N1);
  const Eigen::Index N = N1 * N1;

  DiscretizedSystem sys;
  sys.n = n;
  sys.d = 2;
  sys.kind = OperatorKind::Laplace2D;
  sys.kernel_dim = 1;
  sys.A = Mat::Zero(N, N);
  // Kronecker sum T (x) I + I (x) T
  for (Eigen::Index i = 0; i < N1; ++i) {
    for (Eigen::Index j = 0; j < N1; ++j) {
      if (t(i, j) != 0.0) {
        sys.A.block(i * N1, j * N1, N1, N1) += t(i, j) * id;
      }
    }
  }
  for (Eigen::Index blk = 0; blk < N1; ++blk) {
    sys.A.block(blk * N1, blk * N1, N1, N1) += t;
  }
  sys.b = build_rhs(RhsProfile::ConstantFree, N);
  return sys;
}

DiscretizedSystem rescale_to_unit_norm(const DiscretizedSystem& sys) {
  const double s = spectral_norm(sys.A);
  if (s == 0.0) throw std::invalid_argument("rescale: zero matrix");
  DiscretizedSystem out = sys;
  out.A /= s;
  out.b /= s;
  out.norm_scale = sys.norm_scale * s;
  return out;
}

DiscretizedSystem negate(const DiscretizedSystem& sys) {
  DiscretizedSystem out = sys;
  out.A = -sys.A;
  return out;
}

std::string to_string(RhsProfile p) {
  switch (p) {
    case RhsProfile::Delta: return "delta";
    case RhsProfile::GaussianSamples: return "gaussian";
    case RhsProfile::ConstantFree: return "constant_free";
  }
  throw std::logic_error("bad RhsProfile");
}

RhsProfile rhs_profile_from_string(const std::string& s) {
  if (s == "delta") return RhsProfile::Delta;
  if (s == "gaussian" || s == "gaussian_samples") {
    return RhsProfile::GaussianSamples;
  }
  if (s == "constant_free") return RhsProfile::ConstantFree;
  throw std::invalid_argument("unknown rhs profile: " + s);
}

Vec build_rhs(RhsProfile profile, Eigen::Index n_points) {
  if (n_points < 2) throw std::invalid_argument("build_rhs: N must be >= 2");
  Vec b(n_points);
  switch (profile) {
    case RhsProfile::Delta:
      b.setZero();
      b(0) = 1.0;
      break;
    case RhsProfile::GaussianSamples:
    case RhsProfile::ConstantFree: {
      for (Eigen::Index i = 0; i < n_points; ++i) {
        const double x = static_cast<double>(i) / n_points;
        b(i) = std::exp(-(x - 0.5) * (x - 0.5) / 0.02);
      }
      if (profile == RhsProfile::ConstantFree) {
        b.array() -= b.mean();
        if (b.norm() < 1e-14) {
          throw std::invalid_argument("build_rhs: zero after mean removal");
        }
      }
      break;
    }
  }
  return b;
}

}  // namespace waveqls::fdm

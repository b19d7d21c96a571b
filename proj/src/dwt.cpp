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

#include "waveqls/dwt.hpp"

#include <cctype>
#include <span>
#include <stdexcept>

#include "waveqls/wavelet_tables.hpp"

namespace waveqls::dwt {

std::string to_string(Family f) {
  switch (f) {
    case Family::Daubechies: return "db";
    case Family::Symlet: return "sym";
    case Family::Coiflet: return "coif";
    case Family::CDF97: return "cdf97";
    case Family::CDF53: return "cdf53";
  }
  throw std::logic_error("bad Family");
}

std::string WaveletSpec::name() const {
  if (family == Family::CDF97 || family == Family::CDF53) {
    return to_string(family);
  }
  return to_string(family) + std::to_string(index);
}

namespace {

std::vector<double> to_vec(std::span<const double> s) {
  return {s.begin(), s.end()};
}

struct TableEntry {
  std::span<const double> dec_lo, dec_hi, rec_lo, rec_hi;
};

#define WAVEQLS_TABLE(name)                                       \
  TableEntry{tables::name##_dec_lo, tables::name##_dec_hi,        \
             tables::name##_rec_lo, tables::name##_rec_hi}

TableEntry lookup(Family family, int index) {
  switch (family) {
    case Family::Daubechies:
      switch (index) {
        case 1: return WAVEQLS_TABLE(db1);
        case 2: return WAVEQLS_TABLE(db2);
        case 3: return WAVEQLS_TABLE(db3);
        case 4: return WAVEQLS_TABLE(db4);
        case 5: return WAVEQLS_TABLE(db5);
        case 6: return WAVEQLS_TABLE(db6);
        case 7: return WAVEQLS_TABLE(db7);
        case 8: return WAVEQLS_TABLE(db8);
        default: break;
      }
      break;
    case Family::Symlet:
      switch (index) {
        case 2: return WAVEQLS_TABLE(sym2);
        case 3: return WAVEQLS_TABLE(sym3);
        case 4: return WAVEQLS_TABLE(sym4);
        case 5: return WAVEQLS_TABLE(sym5);
        case 6: return WAVEQLS_TABLE(sym6);
        case 7: return WAVEQLS_TABLE(sym7);
        case 8: return WAVEQLS_TABLE(sym8);
        default: break;
      }
      break;
    case Family::Coiflet:
      switch (index) {
        case 1: return WAVEQLS_TABLE(coif1);
        case 2: return WAVEQLS_TABLE(coif2);
        case 3: return WAVEQLS_TABLE(coif3);
        case 4: return WAVEQLS_TABLE(coif4);
        case 5: return WAVEQLS_TABLE(coif5);
        default: break;
      }
      break;
    case Family::CDF97:
      return WAVEQLS_TABLE(cdf97);
    case Family::CDF53:
      return WAVEQLS_TABLE(cdf53);
  }
  throw std::invalid_argument("unsupported wavelet " + to_string(family) +
                              std::to_string(index));
}

#undef WAVEQLS_TABLE

}  // namespace

WaveletSpec filter_coefficients(Family family, int index) {
  const TableEntry e = lookup(family, index);
  WaveletSpec spec;
  spec.family = family;
  spec.index = index;
  spec.dec_lo = to_vec(e.dec_lo);
  spec.dec_hi = to_vec(e.dec_hi);
  spec.rec_lo = to_vec(e.rec_lo);
  spec.rec_hi = to_vec(e.rec_hi);
  spec.orthogonal =
      family != Family::CDF97 && family != Family::CDF53;
  return spec;
}

WaveletSpec wavelet_from_name(const std::string& name) {
  if (name == "cdf97" || name == "CDF97" || name == "bior4.4") {
    return filter_coefficients(Family::CDF97);
  }
  if (name == "cdf53" || name == "CDF53" || name == "bior2.2") {
    return filter_coefficients(Family::CDF53);
  }
  size_t i = 0;
  while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) {
    ++i;
  }
  const std::string fam = name.substr(0, i);
  const int index = (i < name.size()) ? std::stoi(name.substr(i)) : 0;
  if (fam == "db" || fam == "haar") {
    return filter_coefficients(Family::Daubechies, fam == "haar" ? 1 : index);
  }
  if (fam == "sym") return filter_coefficients(Family::Symlet, index);
  if (fam == "coif") return filter_coefficients(Family::Coiflet, index);
  throw std::invalid_argument("unknown wavelet name: " + name);
}

Mat analysis_step_matrix(const WaveletSpec& spec, Eigen::Index m) {
  if (m < 2 || (m % 2) != 0) {
    throw std::invalid_argument("analysis step needs even block length");
  }
  Mat a = Mat::Zero(m, m);
  const auto& lo = spec.dec_lo;
  const auto& hi = spec.dec_hi;
  for (Eigen::Index k = 0; k < m / 2; ++k) {
    for (size_t i = 0; i < lo.size(); ++i) {
      a(k, (2 * k + static_cast<Eigen::Index>(i)) % m) += lo[i];
    }
    for (size_t i = 0; i < hi.size(); ++i) {
      a(m / 2 + k, (2 * k + static_cast<Eigen::Index>(i)) % m) += hi[i];
    }
  }
  return a;
}

Mat synthesis_step_matrix(const WaveletSpec& spec, Eigen::Index m) {
  if (m < 2 || (m % 2) != 0) {
    throw std::invalid_argument("synthesis step needs even block length");
  }
  Mat s = Mat::Zero(m, m);
  const auto& lo = spec.rec_lo;
  const auto& hi = spec.rec_hi;
  for (Eigen::Index k = 0; k < m / 2; ++k) {
    for (size_t i = 0; i < lo.size(); ++i) {
      s((2 * k + static_cast<Eigen::Index>(i)) % m, k) += lo[i];
    }
    for (size_t i = 0; i < hi.size(); ++i) {
      s((2 * k + static_cast<Eigen::Index>(i)) % m, m / 2 + k) += hi[i];
    }
  }
  return s;
}

TransformMatrix build_transform_matrix(const WaveletSpec& spec, int n,
                                       int levels) {
  if (levels < 0) levels = n;
  if (levels < 1 || levels > n) {
    throw std::invalid_argument("levels must be in [1, n]");
  }
  const Eigen::Index N = Eigen::Index(1) << n;
  TransformMatrix tm;
  tm.spec = spec;
  tm.n = n;
  tm.levels = levels;
  tm.W = Mat::Identity(N, N);
  tm.inverse = Mat::Identity(N, N);
  Eigen::Index m = N;
  for (int level = 0; level < levels; ++level, m /= 2) {
    Mat step = Mat::Identity(N, N);
    step.topLeftCorner(m, m) = analysis_step_matrix(spec, m);
    tm.W = step * tm.W;
    Mat istep = Mat::Identity(N, N);
    istep.topLeftCorner(m, m) = synthesis_step_matrix(spec, m);
    tm.inverse = tm.inverse * istep;
  }
  return tm;
}

Mat transform_dD(const TransformMatrix& w, int d) {
  if (d < 1) throw std::invalid_argument("transform_dD: d must be >= 1");
  const Eigen::Index N = w.W.rows();
  double total = 1.0;
  for (int k = 0; k < d; ++k) total *= static_cast<double>(N);
  if (total > (1 << 14)) {
    throw std::invalid_argument("transform_dD: N^d exceeds the dense cap");
  }
  Mat out = w.W;
  for (int k = 1; k < d; ++k) {
    const Mat prev = out;
    const Eigen::Index P = prev.rows();
    Mat next(P * N, P * N);
    for (Eigen::Index i = 0; i < P; ++i) {
      for (Eigen::Index j = 0; j < P; ++j) {
        next.block(i * N, j * N, N, N) = prev(i, j) * w.W;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace waveqls::dwt

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

#include "waveqls/linalg.hpp"

#include <stdexcept>

namespace waveqls {

double spectral_norm(const Mat& a) {
  if (a.rows() <= 32) {
    return Eigen::JacobiSVD<Mat>(a).singularValues()(0);
  }
  return Eigen::BDCSVD<Mat>(a).singularValues()(0);
}

Vec singular_values(const Mat& a) {
  if (a.rows() <= 32) {
    return Eigen::JacobiSVD<Mat>(a).singularValues();
  }
  return Eigen::BDCSVD<Mat>(a).singularValues();
}

int log2_exact(Eigen::Index value) {
  int n = 0;
  Eigen::Index v = value;
  while (v > 1) {
    if (v & 1) throw std::invalid_argument("size is not a power of two");
    v >>= 1;
    ++n;
  }
  if (value < 1) throw std::invalid_argument("size must be positive");
  return n;
}

}  // namespace waveqls

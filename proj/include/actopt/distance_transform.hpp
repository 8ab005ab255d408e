// Copyright (c) 2026 The actopt Authors. All rights reserved.
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

#ifndef ACTOPT__DISTANCE_TRANSFORM_HPP_
#define ACTOPT__DISTANCE_TRANSFORM_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace actopt::detail
{

inline constexpr double kInfDistance = std::numeric_limits<double>::infinity();

/// Lower envelope of parabolas (Felzenszwalb & Huttenlocher) over one line.
/// `f` holds 0 at feature sites and +inf elsewhere on the first pass, squared
/// column distances on the second. All finite values stay integral, so the
/// output is exact.
inline void edt_1d(
  std::span<const double> f, std::span<double> out,
  std::vector<int> & v, std::vector<double> & z)
{
  const int n = static_cast<int>(f.size());
  v.assign(n, 0);
  z.assign(n + 1, 0.0);

  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (f[q] == kInfDistance) {
      continue;
    }
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -kInfDistance;
      z[1] = kInfDistance;
      continue;
    }
    double s = 0.0;
    // terminates: z[0] is -inf
    while (true) {
      const int p = v[k];
      s = ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
      if (s > z[k]) {
        break;
      }
      --k;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInfDistance;
  }

  if (k < 0) {
    for (int q = 0; q < n; ++q) {
      out[q] = kInfDistance;
    }
    return;
  }

  int j = 0;
  for (int q = 0; q < n; ++q) {
    while (z[j + 1] < q) {
      ++j;
    }
    const double d = double(q - v[j]);
    out[q] = d * d + f[v[j]];
  }
}

/// Squared Euclidean distance, in cell units, from every cell to the nearest
/// cell with `sites[i] != 0`. Cells get +inf when there are no sites.
inline std::vector<double> squared_distance_to_sites(
  std::span<const std::uint8_t> sites, int width, int height)
{
  const std::size_t n = static_cast<std::size_t>(width) * height;
  std::vector<double> d2(n);
  std::vector<int> v;
  std::vector<double> z;

  // columns
  std::vector<double> f(height);
  std::vector<double> g(height);
  for (int c = 0; c < width; ++c) {
    for (int r = 0; r < height; ++r) {
      f[r] = sites[static_cast<std::size_t>(r) * width + c] ? 0.0 : kInfDistance;
    }
    edt_1d(f, g, v, z);
    for (int r = 0; r < height; ++r) {
      d2[static_cast<std::size_t>(r) * width + c] = g[r];
    }
  }

  // rows
  f.resize(width);
  g.resize(width);
  for (int r = 0; r < height; ++r) {
    const std::size_t base = static_cast<std::size_t>(r) * width;
    for (int c = 0; c < width; ++c) {
      f[c] = d2[base + c];
    }
    edt_1d(f, g, v, z);
    for (int c = 0; c < width; ++c) {
      d2[base + c] = g[c];
    }
  }
  return d2;
}

}  // namespace actopt::detail

#endif  // ACTOPT__DISTANCE_TRANSFORM_HPP_

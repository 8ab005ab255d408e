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

#ifndef ACTOPT__POSE_HPP_
#define ACTOPT__POSE_HPP_

#include <cmath>
#include <numbers>

namespace actopt
{

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a)
{
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (a > -std::numbers::pi && a <= std::numbers::pi) {
    return a;
  }
  double r = std::remainder(a, two_pi);  // [-pi, pi]
  if (r <= -std::numbers::pi) {
    r += two_pi;
  }
  return r;
}

struct WorldPose
{
  double x{0.0};
  double y{0.0};
  double theta{0.0};

  bool operator==(const WorldPose &) const = default;
};

}  // namespace actopt

#endif  // ACTOPT__POSE_HPP_

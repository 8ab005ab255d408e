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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "actopt/actuator_path.hpp"
#include "oracles.hpp"

using namespace actopt;
using std::numbers::pi;

namespace
{

std::vector<Point2> random_walk(std::mt19937_64 & rng, std::size_t n)
{
  std::uniform_real_distribution<double> turn(-0.8, 0.8), len(0.05, 2.0), start(-50.0, 50.0);
  std::vector<Point2> pts{{start(rng), start(rng)}};
  double th = std::uniform_real_distribution<double>(-pi, pi)(rng);
  for (std::size_t i = 1; i < n; ++i) {
    th += turn(rng);
    const double d = len(rng);
    pts.push_back({pts.back().x + d * std::cos(th), pts.back().y + d * std::sin(th)});
  }
  return pts;
}

}  // namespace

TEST(WrapAngle, Interval)
{
  EXPECT_DOUBLE_EQ(wrap_angle(pi), pi);
  EXPECT_DOUBLE_EQ(wrap_angle(-pi), pi);
  EXPECT_NEAR(wrap_angle(3 * pi), pi, 1e-12);
  EXPECT_NEAR(wrap_angle(-6.2), -6.2 + 2 * pi, 1e-15);
  EXPECT_EQ(wrap_angle(0.5), 0.5);
}

TEST(Headings, AlongX)
{
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {2.5, 0}};
  for (double th : headings_from_positions(pts)) {
    EXPECT_EQ(th, 0.0);
  }
}

TEST(Headings, FinalCopiesPrevious)
{
  const std::vector<Point2> pts{{0, 0}, {1, 1}};
  const auto th = headings_from_positions(pts);
  EXPECT_DOUBLE_EQ(th[0], pi / 4);
  EXPECT_DOUBLE_EQ(th[1], pi / 4);
}

TEST(Headings, SquareCorner)
{
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}};
  const auto th = headings_from_positions(pts);
  EXPECT_DOUBLE_EQ(th[0], 0.0);
  EXPECT_DOUBLE_EQ(th[1], pi / 2);
  EXPECT_DOUBLE_EQ(th[2], pi / 2);
}

TEST(Headings, Errors)
{
  const std::vector<Point2> dup{{0, 0}, {1, 0}, {1, 0}};
  EXPECT_THROW(headings_from_positions(dup), PathError);
  const std::vector<Point2> one{{0, 0}};
  EXPECT_THROW(headings_from_positions(one), PathError);
}

TEST(WorldToActuator, Straight)
{
  const WorldPath w{{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}};
  const ActuatorPath a = world_to_actuator(w);
  ASSERT_EQ(a.steps.size(), 2u);
  EXPECT_EQ(a.steps[0], (ActuatorStep{0.0, 1.0}));
  EXPECT_EQ(a.steps[1], (ActuatorStep{0.0, 1.0}));
}

TEST(WorldToActuator, ArcHasConstantPhi)
{
  // chords of a circle with heading set to each chord's direction
  const int n = 24;
  const double dth = (pi / 2) / n;
  std::vector<Point2> pts;
  for (int i = 0; i <= n; ++i) {
    pts.push_back({10 * std::sin(i * dth), 10 * (1 - std::cos(i * dth))});
  }
  const ActuatorPath a = world_to_actuator(with_headings(pts));
  const double chord = 2 * 10 * std::sin(dth / 2);
  for (int i = 0; i + 1 < n; ++i) {
    EXPECT_NEAR(a.steps[i].phi, dth, 1e-12);
    EXPECT_NEAR(a.steps[i].dr, chord, 1e-12);
  }
  EXPECT_NEAR(a.steps[n - 1].phi, 0.0, 1e-15);
}

TEST(WorldToActuator, WrapsAcrossPi)
{
  const WorldPath w{{{0, 0, 3.1}, {1, 0, -3.1}}};
  const ActuatorPath a = world_to_actuator(w);
  EXPECT_NEAR(a.steps[0].phi, 2 * pi - 6.2, 1e-12);
}

TEST(WorldToActuator, Errors)
{
  EXPECT_THROW(world_to_actuator(WorldPath{{{0, 0, 0}}}), PathError);
  EXPECT_THROW(world_to_actuator(WorldPath{{{0, 0, 0}, {0, 0, 1}}}), PathError);
}

TEST(ActuatorToWorld, Straight)
{
  const ActuatorPath a{{0, 0, 0}, {{0, 1}, {0, 1}}};
  const WorldPath w = actuator_to_world(a);
  ASSERT_EQ(w.poses.size(), 3u);
  EXPECT_EQ(w.poses[1].x, 1.0);
  EXPECT_EQ(w.poses[2].x, 2.0);
  EXPECT_EQ(w.poses[2].y, 0.0);
}

TEST(ActuatorToWorld, HeadingUpdatesAfterTranslation)
{
  const ActuatorPath a{{0, 0, 0}, {{pi / 2, 1}}};
  const WorldPath w = actuator_to_world(a);
  EXPECT_EQ(w.poses[1].x, 1.0);
  EXPECT_EQ(w.poses[1].y, 0.0);
  EXPECT_DOUBLE_EQ(w.poses[1].theta, pi / 2);
}

TEST(ActuatorToWorld, CircleCloses)
{
  const int n = 360;
  const double dr = 0.1;
  ActuatorPath a{{0, 0, 0}, std::vector<ActuatorStep>(n, {2 * pi / n, dr})};
  const WorldPath w = actuator_to_world(a);
  // n equal chords of a regular polygon return to the start
  EXPECT_NEAR(w.poses.back().x, 0.0, 1e-9);
  EXPECT_NEAR(w.poses.back().y, 0.0, 1e-9);
  // the farthest vertex sits a polygon diameter away
  const double circumradius = dr / (2 * std::sin(pi / n));
  EXPECT_NEAR(std::hypot(w.poses[n / 2].x, w.poses[n / 2].y), 2 * circumradius, 1e-9);
  for (const auto & p : w.poses) {
    EXPECT_GT(p.theta, -pi);
    EXPECT_LE(p.theta, pi);
  }
}

TEST(RoundTrip, WorldActuatorWorld)
{
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto pts = random_walk(rng, 2 + t % 150);
    const WorldPath w = with_headings(pts);
    const WorldPath back = actuator_to_world(world_to_actuator(w));
    ASSERT_EQ(back.poses.size(), w.poses.size());
    for (std::size_t i = 0; i < w.poses.size(); ++i) {
      ASSERT_NEAR(back.poses[i].x, w.poses[i].x, 1e-9);
      ASSERT_NEAR(back.poses[i].y, w.poses[i].y, 1e-9);
      ASSERT_NEAR(wrap_angle(back.poses[i].theta - w.poses[i].theta), 0.0, 1e-9);
    }
  }
}

TEST(RoundTrip, ActuatorWorldActuator)
{
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> phi(-3.0, 3.0), dr(0.01, 3.0), th(-pi, pi);
  for (int t = 0; t < 200; ++t) {
    ActuatorPath a{{1.0, -2.0, th(rng)}, {}};
    for (int i = 0; i < 1 + t % 100; ++i) {
      a.steps.push_back({phi(rng), dr(rng)});
    }
    const ActuatorPath back = world_to_actuator(actuator_to_world(a));
    ASSERT_EQ(back.steps.size(), a.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
      ASSERT_NEAR(back.steps[i].phi, a.steps[i].phi, 1e-9);
      ASSERT_NEAR(back.steps[i].dr, a.steps[i].dr, 1e-9);
    }
  }
}

TEST(RoundTrip, LengthConservation)
{
  std::mt19937_64 rng(43);
  for (int t = 0; t < 50; ++t) {
    const auto pts = random_walk(rng, 50);
    EXPECT_NEAR(world_to_actuator(with_headings(pts)).length(), polyline_length(pts), 1e-9);
  }
}

TEST(Resample, StraightIntegerStations)
{
  const std::vector<Point2> pts{{0, 0}, {10, 0}};
  const auto out = resample_polyline(pts, 1.0);
  ASSERT_EQ(out.size(), 11u);
  for (int i = 0; i <= 10; ++i) {
    EXPECT_NEAR(out[i].x, i, 1e-12);
    EXPECT_EQ(out[i].y, 0.0);
  }
}

TEST(Resample, LShape)
{
  const std::vector<Point2> pts{{0, 0}, {3, 0}, {3, 4}};
  const auto out = resample_polyline(pts, 1.0);
  ASSERT_EQ(out.size(), 8u);
  for (int k = 0; k < 8; ++k) {
    const Point2 want = oracle::arc_point(pts, k);
    EXPECT_NEAR(out[k].x, want.x, 1e-9);
    EXPECT_NEAR(out[k].y, want.y, 1e-9);
  }
  EXPECT_NEAR(polyline_length(out), 7.0, 1e-9);
}

TEST(Resample, LongStepGivesEndpoints)
{
  const std::vector<Point2> pts{{0, 0}, {1, 1}, {2, 0}};
  const auto out = resample_polyline(pts, 10.0);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.front().x, 0.0);
  EXPECT_EQ(out.back().x, 2.0);
  EXPECT_EQ(out.back().y, 0.0);
}

TEST(Resample, EqualChordsEndExactly)
{
  std::mt19937_64 rng(44);
  for (int t = 0; t < 100; ++t) {
    auto pts = random_walk(rng, 3 + t % 40);
    const double dr = 0.2 + 0.05 * (t % 9);
    const auto out = resample_polyline(pts, dr);
    EXPECT_EQ(out.back().x, pts.back().x);
    EXPECT_EQ(out.back().y, pts.back().y);
    const ActuatorPath a = world_to_actuator(with_headings(out));
    ASSERT_TRUE(a.uniform_dr(1e-6).has_value()) << "trial " << t;
    // n = ceil(L / dr) chords, each no longer than the arc it spans
    EXPECT_LE(*a.uniform_dr(1e-6), dr * (1 + 1e-9));
  }
}

TEST(Resample, Errors)
{
  const std::vector<Point2> same{{1, 1}, {1, 1}, {1, 1}};
  EXPECT_THROW(resample_polyline(same, 1.0), PathError);
  const std::vector<Point2> pts{{0, 0}, {1, 0}};
  EXPECT_THROW(resample_polyline(pts, 0.0), std::invalid_argument);
}

TEST(ResampleCellPath, UsesCellCenters)
{
  const GridGeometry g{20, 20, 0.2, 1.0, 2.0};
  CellPath cells;
  for (int c = 0; c <= 10; ++c) {
    cells.cells.push_back({c, 3});
  }
  const WorldPath w = resample_cell_path(cells, g, 0.4);
  ASSERT_EQ(w.poses.size(), 6u);
  EXPECT_NEAR(w.poses.back().x, 3.0, 1e-12);
  EXPECT_NEAR(w.poses.back().y, 2.6, 1e-12);
  for (const auto & p : w.poses) {
    EXPECT_EQ(p.theta, 0.0);
  }
  EXPECT_THROW(resample_cell_path(CellPath{{{1, 1}}}, g, 0.4), PathError);
  EXPECT_THROW(resample_cell_path(CellPath{{{1, 1}, {1, 1}}}, g, 0.4), PathError);
}

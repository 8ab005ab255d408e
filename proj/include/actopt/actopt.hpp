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

#ifndef ACTOPT__ACTOPT_HPP_
#define ACTOPT__ACTOPT_HPP_

#include "actopt/actuator_path.hpp"
#include "actopt/base_planner.hpp"
#include "actopt/cost_model.hpp"
#include "actopt/costmap.hpp"
#include "actopt/errors.hpp"
#include "actopt/grid.hpp"
#include "actopt/optimizer.hpp"
#include "actopt/pose.hpp"
#include "actopt/scenario.hpp"
#include "actopt/speed_planner.hpp"
#include "actopt/suite.hpp"
#include "actopt/svg.hpp"

#endif  // ACTOPT__ACTOPT_HPP_

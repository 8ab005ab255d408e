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

#ifndef ACTOPT__ERRORS_HPP_
#define ACTOPT__ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace actopt
{

struct Error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Malformed grid or scenario text. Line and column are 1-based; column 0
/// means the whole line.
struct ParseError : Error
{
  ParseError(std::size_t line, std::size_t column, const std::string & what)
  : Error("line " + std::to_string(line) +
      (column > 0 ? ", column " + std::to_string(column) : std::string()) + ": " + what),
    line(line), column(column)
  {
  }

  std::size_t line;
  std::size_t column;
};

/// Zero-length segment or an otherwise unusable path.
struct PathError : Error
{
  using Error::Error;
};

/// Planner endpoint lies on a lethal cell or outside the map.
struct InvalidEndpointError : Error
{
  using Error::Error;
};

struct NoPathError : Error
{
  using Error::Error;
};

}  // namespace actopt

#endif  // ACTOPT__ERRORS_HPP_

/*
 * Copyright (C) 2026 The goalline Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GOALLINE_ERRORS_HPP
#define GOALLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace goalline {

/// Base class for every error raised by the solver library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two construction points coincide where distinct points are required.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A speed ratio lies outside the open interval (0, 1).
class InvalidRatio : public Error {
 public:
  using Error::Error;
};

/// The two reference points share an abscissa, so their orthogonal bisector
/// never meets the goal axis.
class VerticalBisector : public Error {
 public:
  using Error::Error;
};

/// The configured speeds match neither supported regime (all speeds equal, or
/// both pursuers strictly faster than the evader).
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// A player position lies outside the closed field domain.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// A cross-section segment fails its own implicit equation inside its declared
/// interval; signals an internal breakpoint bug rather than bad user input.
class SectionInconsistency : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: bad scenario files, bad argument values, bad ranges.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace goalline

#endif  // GOALLINE_ERRORS_HPP

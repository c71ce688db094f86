// Copyright 2026 The wwpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace wwpi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A value lies outside the domain an operation is defined on (e.g. theta > pi).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Dimensions of two operands do not agree.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// A requested size exceeds a configured cap.
class SizeError : public Error {
  public:
    using Error::Error;
};

/// Input is not normalized where normalization is required.
class NormalizationError : public Error {
  public:
    using Error::Error;
};

/// The circuit graph is malformed: cycles, dangling segments, bad port maps.
class TopologyError : public Error {
  public:
    using Error::Error;
};

/// No retained history carries amplitude, so no distribution exists.
class DegenerateDistributionError : public Error {
  public:
    using Error::Error;
};

/// The general Schmidt-angle formulas are singular for this state.
class MaxEntangledError : public Error {
  public:
    using Error::Error;
};

/// The (gamma, chi1, chi2) form does not reproduce the state within tolerance.
class ParametrizationError : public Error {
  public:
    using Error::Error;
};

/// Scenario configuration could not be loaded or validated.
class ConfigError : public Error {
  public:
    using Error::Error;
};

}  // namespace wwpi

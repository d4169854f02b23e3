// Copyright 2026 The qgp Authors
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

namespace qgp {

// Every library error derives from Error. The three direct subclasses line up
// with the CLI exit-code taxonomy: 1 usage/config, 2 data, 3 numeric.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

class DataError : public Error {
  public:
    using Error::Error;
};

class NumericError : public Error {
  public:
    using Error::Error;
};

class DimensionError : public DataError {
  public:
    using DataError::DataError;
};

class SymmetryError : public DataError {
  public:
    using DataError::DataError;
};

class DefinitenessError : public NumericError {
  public:
    using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
  public:
    using NumericError::NumericError;
};

/// A value outside the domain an operation is defined on (eigenvalue beyond
/// the spectral bound, interval violation, divergent series, ...).
class DomainError : public NumericError {
  public:
    using NumericError::NumericError;
};

} // namespace qgp

// Copyright 2026 The cvtele Authors
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

#ifndef CVTELE_ERRORS_HPP
#define CVTELE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvtele {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input from a caller (bad flags, syntax errors in state text).
class UsageError : public Error {
   public:
    using Error::Error;
};

/// Arguments outside the physical or mathematical domain of an operation.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A state has no exact phase-space sampler on the requested path.
class UnsupportedSamplerError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Failure of a numerical procedure: non-finite integrands, lost precision,
/// non-convergence, collapsed rejection rates.
class NumericalError : public Error {
   public:
    using Error::Error;
};

}  // namespace cvtele

#endif

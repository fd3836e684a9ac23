// Copyright 2026 The qladder Authors
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

namespace qladder {

/// Invalid argument: out-of-range index, malformed parameter list, mismatched dimensions.
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The requested register or matrix exceeds the fixed size caps.
class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Base class for failures of an otherwise well-posed numerical procedure.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

/// Truncated-basis computations whose truncation is not converged.
class AccuracyError : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

/// Time propagation failed; carries the time at which the step size underflowed.
class PropagationError : public NumericalError {
   public:
    PropagationError(const std::string &what, double failing_time);
    double failing_time() const noexcept {
        return failing_time_;
    }

   private:
    double failing_time_;
};

}  // namespace qladder

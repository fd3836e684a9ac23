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

#include "qladder/errors.h"

#include <sstream>

namespace qladder {

namespace {

std::string with_time(const std::string &what, double t) {
    std::ostringstream out;
    out.precision(17);
    out << what << " (at t=" << t << ")";
    return out.str();
}

}  // namespace

PropagationError::PropagationError(const std::string &what, double failing_time)
    : NumericalError(with_time(what, failing_time)), failing_time_(failing_time) {
}

}  // namespace qladder

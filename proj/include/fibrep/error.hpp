/* Copyright 2026 The fibrep Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef FIBREP_ERROR_HPP
#define FIBREP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fibrep {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic precondition violated (division by zero, field mismatch, ...).
class math_error : public error {
public:
    using error::error;
};

/// Shapes of matrices or vectors do not fit together.
class dimension_error : public error {
public:
    using error::error;
};

/// Malformed user input: words, polynomials, spec files.
class parse_error : public error {
public:
    using error::error;
};

/// A group-theoretic consistency check failed (relator not satisfied, bad monodromy).
class relator_error : public error {
public:
    using error::error;
};

/// Numeric refinement could not decide a question within its iteration cap.
class indeterminate_error : public error {
public:
    using error::error;
};

} // namespace fibrep

#endif

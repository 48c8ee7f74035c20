// Copyright 2026 The qpbc Authors
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

#ifndef QPBC_ERRORS_H
#define QPBC_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpbc {

/// Base class for every error raised by the toolkit. `kind()` is a stable
/// machine-readable name (used in CLI error JSON).
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string &message);
    const std::string &kind() const noexcept {
        return kind_;
    }

   private:
    std::string kind_;
};

#define QPBC_DECLARE_ERROR(Name)                                    \
    class Name : public Error {                                     \
       public:                                                      \
        explicit Name(const std::string &message) : Error(#Name, message) { \
        }                                                           \
    };

QPBC_DECLARE_ERROR(InverseOfZero)
QPBC_DECLARE_ERROR(InvalidModulus)
QPBC_DECLARE_ERROR(ShapeError)
QPBC_DECLARE_ERROR(IndexError)
QPBC_DECLARE_ERROR(OracleTooLarge)
QPBC_DECLARE_ERROR(EnumerationTooLarge)
QPBC_DECLARE_ERROR(NotAStabilizerGroup)
QPBC_DECLARE_ERROR(NotMagic)
QPBC_DECLARE_ERROR(NoOpObservable)
QPBC_DECLARE_ERROR(NormalizationError)
QPBC_DECLARE_ERROR(BackendError)
QPBC_DECLARE_ERROR(InternalInvariantViolation)
QPBC_DECLARE_ERROR(NumericalFailure)
QPBC_DECLARE_ERROR(FormatError)

#undef QPBC_DECLARE_ERROR

/// Parse failure with a 1-based source location.
class ParseError : public Error {
   public:
    ParseError(const std::string &message, size_t line, size_t column);
    size_t line() const noexcept {
        return line_;
    }
    size_t column() const noexcept {
        return column_;
    }
    const std::string &bare_message() const noexcept {
        return bare_;
    }

   private:
    std::string bare_;
    size_t line_;
    size_t column_;
};

}  // namespace qpbc

#endif

/*
   Copyright 2026 The ncred Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NCRED_ERROR_HPP
#define NCRED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ncred {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different generator sets, degree assignments or fields.
class StructuralError : public Error {
   public:
    using Error::Error;
};

/// An argument is outside the domain of an operation (zero polynomial, bad step, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A rational with negative p-adic valuation was handed to an O_v-only operation.
class NotIntegralError : public Error {
   public:
    using Error::Error;
};

/// Graded-only operation called on a filtered presentation, or the other way round.
class ModeError : public Error {
   public:
    using Error::Error;
};

/// A generalized Weyl algebra does not reduce at the requested prime.
class BadReductionError : public Error {
   public:
    using Error::Error;
};

}  // namespace ncred

#endif  // NCRED_ERROR_HPP

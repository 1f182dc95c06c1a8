/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */
/*                                                                           */
/*               This file is part of the program and library                */
/*    mipcert --- certificates for mixed-integer programs                    */
/*                                                                           */
/*  Licensed under the Apache License, Version 2.0 (the "License");          */
/*  you may not use this file except in compliance with the License.         */
/*  You may obtain a copy of the License at                                  */
/*                                                                           */
/*      http://www.apache.org/licenses/LICENSE-2.0                           */
/*                                                                           */
/*  Unless required by applicable law or agreed to in writing, software      */
/*  distributed under the License is distributed on an "AS IS" BASIS,        */
/*  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. */
/*  See the License for the specific language governing permissions and      */
/*  limitations under the License.                                           */
/*                                                                           */
/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */

#ifndef MIPCERT_ERROR_HPP_
#define MIPCERT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mipcert {

enum class ErrorKind
{
   // exact arithmetic
   NegativeMultiplierOnInequality,
   DimensionMismatch,
   NonIntegralCoefficient,
   NonIntegralVariable,
   // model
   MalformedProblem,
   NotNegatable,
   // rules
   SubproofFailed,
   UnknownPremiseId,
   StrictBoundUsedWithInfiniteZ,
   NotImplications,
   CoverCheckFailed,
   ConsequentsDiffer,
   InfeasibleSolution,
   NotImproving,
   IdentityCheckFailed,
   NonEqualityPremise,
   MissingSubproof,
   WitnessNotIntegral,
   OrderUndetermined,
   StrictOrderUndetermined,
   NotShrinking,
   UnknownId,
   VariantPreconditionFailed,
   DerivedSetNonEmpty,
   ConsistencyViolation,
   NoContradictionPresent,
   DuplicateId,
   // certificate
   Syntax,
   ForwardReference,
   Io,
   // certifier / oracle
   UnboundedVariable,
   NonIntegralProblem,
   TooLarge,
   NotACover,
   MalformedDisjunction,
   MultiplierSignError,
   UnboundedSigmaVariable,
   InvalidArgument
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported as a CertError carrying a kind
/// that tests and the driver can dispatch on.
class CertError : public std::runtime_error
{
 public:
   CertError(ErrorKind kind, const std::string& message)
       : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
   {
   }

   ErrorKind kind() const noexcept { return kind_; }

 private:
   ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
   throw CertError(kind, message);
}

}   // namespace mipcert

#endif

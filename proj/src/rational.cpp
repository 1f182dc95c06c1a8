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

#include "mipcert/rational.hpp"

#include "mipcert/error.hpp"

#include <cctype>

namespace mipcert {

std::string_view to_string(ErrorKind kind)
{
   switch( kind )
   {
   case ErrorKind::NegativeMultiplierOnInequality: return "NegativeMultiplierOnInequality";
   case ErrorKind::DimensionMismatch: return "DimensionMismatch";
   case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
   case ErrorKind::NonIntegralVariable: return "NonIntegralVariable";
   case ErrorKind::MalformedProblem: return "MalformedProblem";
   case ErrorKind::NotNegatable: return "NotNegatable";
   case ErrorKind::SubproofFailed: return "SubproofFailed";
   case ErrorKind::UnknownPremiseId: return "UnknownPremiseId";
   case ErrorKind::StrictBoundUsedWithInfiniteZ: return "StrictBoundUsedWithInfiniteZ";
   case ErrorKind::NotImplications: return "NotImplications";
   case ErrorKind::CoverCheckFailed: return "CoverCheckFailed";
   case ErrorKind::ConsequentsDiffer: return "ConsequentsDiffer";
   case ErrorKind::InfeasibleSolution: return "InfeasibleSolution";
   case ErrorKind::NotImproving: return "NotImproving";
   case ErrorKind::IdentityCheckFailed: return "IdentityCheckFailed";
   case ErrorKind::NonEqualityPremise: return "NonEqualityPremise";
   case ErrorKind::MissingSubproof: return "MissingSubproof";
   case ErrorKind::WitnessNotIntegral: return "WitnessNotIntegral";
   case ErrorKind::OrderUndetermined: return "OrderUndetermined";
   case ErrorKind::StrictOrderUndetermined: return "StrictOrderUndetermined";
   case ErrorKind::NotShrinking: return "NotShrinking";
   case ErrorKind::UnknownId: return "UnknownId";
   case ErrorKind::VariantPreconditionFailed: return "VariantPreconditionFailed";
   case ErrorKind::DerivedSetNonEmpty: return "DerivedSetNonEmpty";
   case ErrorKind::ConsistencyViolation: return "ConsistencyViolation";
   case ErrorKind::NoContradictionPresent: return "NoContradictionPresent";
   case ErrorKind::DuplicateId: return "DuplicateId";
   case ErrorKind::Syntax: return "Syntax";
   case ErrorKind::ForwardReference: return "ForwardReference";
   case ErrorKind::Io: return "Io";
   case ErrorKind::UnboundedVariable: return "UnboundedVariable";
   case ErrorKind::NonIntegralProblem: return "NonIntegralProblem";
   case ErrorKind::TooLarge: return "TooLarge";
   case ErrorKind::NotACover: return "NotACover";
   case ErrorKind::MalformedDisjunction: return "MalformedDisjunction";
   case ErrorKind::MultiplierSignError: return "MultiplierSignError";
   case ErrorKind::UnboundedSigmaVariable: return "UnboundedSigmaVariable";
   case ErrorKind::InvalidArgument: return "InvalidArgument";
   }
   return "Unknown";
}

namespace {

bool is_digits(std::string_view s)
{
   if( s.empty() )
      return false;
   for( char c : s )
      if( !std::isdigit(static_cast<unsigned char>(c)) )
         return false;
   return true;
}

}   // namespace

Rat parse_rat(std::string_view text)
{
   std::string_view body = text;
   if( !body.empty() && (body.front() == '-' || body.front() == '+') )
      body.remove_prefix(1);

   auto slash = body.find('/');
   std::string_view num = body.substr(0, slash);
   std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
   if( !is_digits(num) || (slash != std::string_view::npos && !is_digits(den)) )
      fail(ErrorKind::Syntax, "malformed rational '" + std::string(text) + "'");

   mpz_class n(std::string(num), 10);
   mpz_class d = 1;
   if( slash != std::string_view::npos )
   {
      d = mpz_class(std::string(den), 10);
      if( d == 0 )
         fail(ErrorKind::Syntax, "zero denominator in '" + std::string(text) + "'");
   }
   if( text.front() == '-' )
      n = -n;
   Rat r(n, d);
   r.canonicalize();
   return r;
}

std::string to_string(const Rat& value)
{
   return value.get_str();
}

bool is_integer(const Rat& value)
{
   return value.get_den() == 1;
}

Rat floor(const Rat& value)
{
   mpz_class q;
   mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
   return Rat(q);
}

Rat ceil(const Rat& value)
{
   mpz_class q;
   mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
   return Rat(q);
}

}   // namespace mipcert

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

#ifndef MIPCERT_RATIONAL_HPP_
#define MIPCERT_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mipcert {

/// Exact rational number. GMP keeps results of arithmetic in lowest terms;
/// values built from text go through parse_rat, which canonicalizes.
using Rat = mpq_class;

/// Parses "p", "-p", "p/q". Throws CertError(Syntax) on malformed input or a
/// zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

bool is_integer(const Rat& value);
Rat floor(const Rat& value);
Rat ceil(const Rat& value);

}   // namespace mipcert

#endif

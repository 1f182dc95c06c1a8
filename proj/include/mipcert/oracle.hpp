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

#ifndef MIPCERT_ORACLE_HPP_
#define MIPCERT_ORACLE_HPP_

#include "mipcert/rules.hpp"

#include <cstdint>
#include <optional>

namespace mipcert {

struct OracleResult
{
   Verdict verdict;
   std::optional<Solution> argmin;
};

/// Exhaustive enumeration of the integer box given by the single-variable
/// constraints of `p`. x_1 varies fastest; the first minimizer is returned.
OracleResult brute_force_optimum(const Problem& p, std::uint64_t max_points = 10'000'000);

}   // namespace mipcert

#endif

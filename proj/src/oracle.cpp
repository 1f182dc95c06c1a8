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

#include "mipcert/oracle.hpp"

#include "mipcert/error.hpp"
#include "mipcert/order.hpp"

namespace mipcert {

OracleResult brute_force_optimum(const Problem& p, std::uint64_t max_points)
{
   p.validate();
   for( int j = 1; j <= p.n; ++j )
      if( !p.integral.contains(j) )
         fail(ErrorKind::NonIntegralProblem, "x" + std::to_string(j) + " is continuous");

   Configuration cfg = initial_configuration(p);
   std::vector<Rat> lo(static_cast<std::size_t>(p.n));
   std::vector<Rat> hi(static_cast<std::size_t>(p.n));
   mpz_class points = 1;
   for( int j = 1; j <= p.n; ++j )
   {
      Interval iv = core_bounds(cfg, j).round_integral();
      if( !iv.lo || !iv.hi )
         fail(ErrorKind::TooLarge, "x" + std::to_string(j) + " is unbounded");
      if( *iv.lo > *iv.hi )
         return OracleResult{Verdict{Verdict::Kind::Infeasible, std::nullopt}, std::nullopt};
      lo[static_cast<std::size_t>(j - 1)] = *iv.lo;
      hi[static_cast<std::size_t>(j - 1)] = *iv.hi;
      points *= mpz_class(Rat(*iv.hi - *iv.lo + 1).get_num());
      if( points > mpz_class(std::to_string(max_points)) )
         fail(ErrorKind::TooLarge, "more than " + std::to_string(max_points) + " lattice points");
   }

   OracleResult best{Verdict{Verdict::Kind::Infeasible, std::nullopt}, std::nullopt};
   Solution x = lo;
   for( ;; )
   {
      bool feasible = true;
      for( const auto& [id, c] : p.constraints )
         if( !evaluate(x, c) )
         {
            feasible = false;
            break;
         }
      if( feasible )
      {
         Rat value = p.objective.evaluate(x);
         if( !best.argmin || value < *best.verdict.value )
            best = OracleResult{Verdict{Verdict::Kind::Optimal, value}, x};
      }
      int j = 0;
      for( ; j < p.n; ++j )
      {
         auto k = static_cast<std::size_t>(j);
         if( x[k] < hi[k] )
         {
            x[k] += 1;
            break;
         }
         x[k] = lo[k];
      }
      if( j == p.n )
         break;
   }
   return best;
}

}   // namespace mipcert

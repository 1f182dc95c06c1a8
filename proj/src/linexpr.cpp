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

#include "mipcert/linexpr.hpp"

#include "mipcert/error.hpp"

namespace mipcert {

LinExpr LinExpr::variable(int j, const Rat& coef)
{
   LinExpr e;
   e.add_term(j, coef);
   return e;
}

Rat LinExpr::coefficient(int j) const
{
   auto it = terms_.find(j);
   return it == terms_.end() ? Rat(0) : it->second;
}

void LinExpr::add_term(int j, const Rat& coef)
{
   if( j < 1 )
      fail(ErrorKind::InvalidArgument, "variable index must be positive");
   if( coef == 0 )
      return;
   auto [it, inserted] = terms_.try_emplace(j, coef);
   if( !inserted )
   {
      it->second += coef;
      if( it->second == 0 )
         terms_.erase(it);
   }
}

void LinExpr::add_scaled(const LinExpr& other, const Rat& factor)
{
   if( factor == 0 )
      return;
   for( const auto& [j, a] : other.terms_ )
      add_term(j, a * factor);
   constant_ += other.constant_ * factor;
}

Rat LinExpr::evaluate(std::span<const Rat> values) const
{
   Rat sum = constant_;
   for( const auto& [j, a] : terms_ )
   {
      if( static_cast<std::size_t>(j) > values.size() )
         fail(ErrorKind::DimensionMismatch, "expression references x" + std::to_string(j));
      sum += a * values[j - 1];
   }
   return sum;
}

LinExpr& LinExpr::operator+=(const LinExpr& other)
{
   add_scaled(other, 1);
   return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& other)
{
   add_scaled(other, -1);
   return *this;
}

LinExpr& LinExpr::operator*=(const Rat& factor)
{
   if( factor == 0 )
   {
      terms_.clear();
      constant_ = 0;
      return *this;
   }
   for( auto& [j, a] : terms_ )
      a *= factor;
   constant_ *= factor;
   return *this;
}

LinExpr operator+(LinExpr a, const LinExpr& b)
{
   return a += b;
}

LinExpr operator-(LinExpr a, const LinExpr& b)
{
   return a -= b;
}

LinExpr operator*(LinExpr a, const Rat& factor)
{
   return a *= factor;
}

LinExpr operator*(const Rat& factor, LinExpr a)
{
   return a *= factor;
}

LinExpr operator-(LinExpr a)
{
   return a *= Rat(-1);
}

std::string to_string(const LinExpr& e)
{
   std::string out;
   for( const auto& [j, a] : e.terms() )
   {
      if( !out.empty() )
         out += a < 0 ? " - " : " + ";
      else if( a < 0 )
         out += "-";
      Rat mag = abs(a);
      if( mag != 1 )
         out += to_string(mag) + " ";
      out += "x" + std::to_string(j);
   }
   if( e.constant() != 0 || out.empty() )
   {
      if( out.empty() )
         out = to_string(e.constant());
      else
         out += (e.constant() < 0 ? " - " : " + ") + to_string(Rat(abs(e.constant())));
   }
   return out;
}

}   // namespace mipcert

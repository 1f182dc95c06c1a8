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

#ifndef MIPCERT_LINEXPR_HPP_
#define MIPCERT_LINEXPR_HPP_

#include "mipcert/rational.hpp"

#include <map>
#include <span>
#include <string>

namespace mipcert {

/// Sparse affine expression sum_j a_j x_j + constant over 1-based variable
/// indices. Zero coefficients are never stored, so == is structural.
class LinExpr
{
 public:
   using Terms = std::map<int, Rat>;

   LinExpr() = default;
   explicit LinExpr(Rat constant) : constant_(std::move(constant)) {}

   static LinExpr variable(int j, const Rat& coef = 1);

   const Terms& terms() const { return terms_; }
   const Rat& constant() const { return constant_; }
   void set_constant(Rat c) { constant_ = std::move(c); }

   Rat coefficient(int j) const;
   void add_term(int j, const Rat& coef);
   void add_scaled(const LinExpr& other, const Rat& factor);

   bool is_constant() const { return terms_.empty(); }
   int max_var() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

   /// Values are indexed 0-based: x_j is values[j-1].
   Rat evaluate(std::span<const Rat> values) const;

   LinExpr& operator+=(const LinExpr& other);
   LinExpr& operator-=(const LinExpr& other);
   LinExpr& operator*=(const Rat& factor);

   bool operator==(const LinExpr& other) const = default;

 private:
   Terms terms_;
   Rat constant_;
};

LinExpr operator+(LinExpr a, const LinExpr& b);
LinExpr operator-(LinExpr a, const LinExpr& b);
LinExpr operator*(LinExpr a, const Rat& factor);
LinExpr operator*(const Rat& factor, LinExpr a);
LinExpr operator-(LinExpr a);

std::string to_string(const LinExpr& e);

}   // namespace mipcert

#endif

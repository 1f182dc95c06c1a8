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

#include "mipcert/model.hpp"

#include "mipcert/error.hpp"

#include <algorithm>

namespace mipcert {

namespace {

template <class... Ts>
struct Overloaded : Ts...
{
   using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}   // namespace

Constraint make_implication(std::vector<Inequality> assumptions, Inequality consequent)
{
   if( assumptions.empty() )
      return consequent;
   return Implication{std::move(assumptions), std::move(consequent)};
}

int max_var(const Constraint& c)
{
   return std::visit(Overloaded{[](const Inequality& i) { return i.max_var(); },
                                [](const Integral& i) { return i.var; },
                                [](const Implication& i) {
                                   int m = i.consequent.max_var();
                                   for( const auto& a : i.assumptions )
                                      m = std::max(m, a.max_var());
                                   return m;
                                }},
                     c);
}

std::string to_string(const Constraint& c)
{
   return std::visit(Overloaded{[](const Inequality& i) { return to_string(i); },
                                [](const Integral& i) { return "x" + std::to_string(i.var) + " integral"; },
                                [](const Implication& i) {
                                   std::string out = "[";
                                   for( std::size_t k = 0; k < i.assumptions.size(); ++k )
                                      out += (k ? ", " : "") + to_string(i.assumptions[k]);
                                   return out + " => " + to_string(i.consequent) + "]";
                                }},
                     c);
}

void Problem::validate() const
{
   if( n < 0 )
      fail(ErrorKind::MalformedProblem, "negative dimension");
   for( int j : integral )
      if( j < 1 || j > n )
         fail(ErrorKind::MalformedProblem, "integral variable x" + std::to_string(j) + " out of range");
   if( objective.max_var() > n )
      fail(ErrorKind::MalformedProblem, "objective references x" + std::to_string(objective.max_var()));
   std::set<ConstraintId> seen;
   for( const auto& [id, c] : constraints )
   {
      if( id <= 0 )
         fail(ErrorKind::MalformedProblem, "constraint ids must be positive, got " + std::to_string(id));
      if( !seen.insert(id).second )
         fail(ErrorKind::MalformedProblem, "duplicate constraint id " + std::to_string(id));
      if( std::holds_alternative<Integral>(c) )
         fail(ErrorKind::MalformedProblem, "integrality is declared with INT, not as constraint " + std::to_string(id));
      if( max_var(c) > n )
         fail(ErrorKind::MalformedProblem, "constraint " + std::to_string(id) + " references x" + std::to_string(max_var(c)));
   }
   for( const auto& gen : symmetries )
   {
      if( static_cast<int>(gen.size()) != n )
         fail(ErrorKind::MalformedProblem, "symmetry generator has wrong length");
      std::vector<int> sorted = gen;
      std::sort(sorted.begin(), sorted.end());
      for( int j = 1; j <= n; ++j )
         if( sorted[static_cast<std::size_t>(j - 1)] != j )
            fail(ErrorKind::MalformedProblem, "symmetry generator is not a permutation");
   }
}

const Constraint* Configuration::find(ConstraintId id) const
{
   if( auto it = core.find(id); it != core.end() )
      return &it->second;
   if( auto it = derived.find(id); it != derived.end() )
      return &it->second;
   return nullptr;
}

std::set<int> Configuration::integral_vars() const
{
   std::set<int> out;
   for( auto it = core.begin(); it != core.end() && it->first < 0; ++it )
      if( const auto* m = std::get_if<Integral>(&it->second) )
         out.insert(m->var);
   return out;
}

Configuration initial_configuration(const Problem& p)
{
   p.validate();
   Configuration cfg;
   cfg.dim = p.n;
   cfg.objective = p.objective;
   for( const auto& [id, c] : p.constraints )
   {
      cfg.core.emplace(id, c);
      cfg.max_id = std::max(cfg.max_id, id);
   }
   for( int j : p.integral )
      cfg.core.emplace(integrality_id(j), Integral{j});
   return cfg;
}

std::vector<Inequality> negate(const Constraint& c)
{
   return std::visit(Overloaded{[](const Inequality& i) { return std::vector<Inequality>{negate(i)}; },
                                [](const Integral& i) -> std::vector<Inequality> {
                                   fail(ErrorKind::NotNegatable, "integrality of x" + std::to_string(i.var));
                                },
                                [](const Implication& i) {
                                   std::vector<Inequality> out = i.assumptions;
                                   out.push_back(negate(i.consequent));
                                   return out;
                                }},
                     c);
}

bool evaluate(const Solution& s, const Constraint& c)
{
   if( max_var(c) > static_cast<int>(s.size()) )
      fail(ErrorKind::DimensionMismatch, "solution too short for " + to_string(c));
   return std::visit(Overloaded{[&](const Inequality& i) { return i.holds(s); },
                                [&](const Integral& i) { return is_integer(s[static_cast<std::size_t>(i.var - 1)]); },
                                [&](const Implication& i) {
                                   for( const auto& a : i.assumptions )
                                      if( !a.holds(s) )
                                         return true;
                                   return i.consequent.holds(s);
                                }},
                     c);
}

Constraint compose(const AffineMap& w, const Constraint& c)
{
   return std::visit(Overloaded{[&](const Inequality& i) -> Constraint { return w.compose(i); },
                                [&](const Integral& i) -> Constraint { return i; },
                                [&](const Implication& i) -> Constraint {
                                   Implication out;
                                   for( const auto& a : i.assumptions )
                                      out.assumptions.push_back(w.compose(a));
                                   out.consequent = w.compose(i.consequent);
                                   return out;
                                }},
                     c);
}

}   // namespace mipcert

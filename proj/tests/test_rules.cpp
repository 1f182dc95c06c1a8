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

#include "fixtures.hpp"
#include "mipcert/error.hpp"

#include <doctest.h>

using namespace mipcert;

namespace {

Inequality ineq(std::initializer_list<std::pair<int, Rat>> terms, Relation rel, const Rat& rhs, bool strict = false)
{
   LinExpr e;
   for( const auto& [j, a] : terms )
      e.add_term(j, a);
   return Inequality::make(e, rel, rhs, strict);
}

const Inequality kFalsity = Inequality::make(LinExpr(), Relation::Le, -1);

ErrorKind rejected(Configuration& cfg, const ProofStep& step)
{
   Configuration before = cfg;
   try
   {
      apply_step(cfg, step);
   }
   catch( const CertError& e )
   {
      // a rejected step leaves the configuration untouched
      CHECK(cfg.core == before.core);
      CHECK(cfg.derived == before.derived);
      CHECK(cfg.max_id == before.max_id);
      return e.kind();
   }
   FAIL("step was accepted: " << rule_name(step));
   return ErrorKind::InvalidArgument;
}

Subproof proof(std::vector<SubproofStep> steps, Inequality target)
{
   return Subproof{std::move(steps), std::move(target)};
}

// Two binaries with x1 + x2 <= 1 and a symmetric objective.
// ids: 1 row, 2 x1 >= 0, 3 x1 <= 1, 4 x2 >= 0, 5 x2 <= 1.
Problem pair_problem()
{
   Problem p;
   p.n = 2;
   p.integral = {1, 2};
   p.objective = LinExpr::variable(1, -1) + LinExpr::variable(2, -1);
   p.constraints.emplace_back(1, ineq({{1, 1}, {2, 1}}, Relation::Le, 1));
   p.constraints.emplace_back(2, ineq({{1, 1}}, Relation::Ge, 0));
   p.constraints.emplace_back(3, ineq({{1, 1}}, Relation::Le, 1));
   p.constraints.emplace_back(4, ineq({{2, 1}}, Relation::Ge, 0));
   p.constraints.emplace_back(5, ineq({{2, 1}}, Relation::Le, 1));
   return p;
}

BranchTree root_sigma(std::vector<int> sigma, std::vector<ConstraintId> refs)
{
   BranchTree t;
   t.nodes[0] = TreeNode{std::nullopt, std::nullopt, std::move(sigma), std::move(refs), {}};
   return t;
}

AffineMap swap12()
{
   return AffineMap{2, {{1, LinExpr::variable(2)}, {2, LinExpr::variable(1)}}};
}

}   // namespace

TEST_CASE("IMPLIC")
{
   Problem p;
   p.n = 2;
   p.constraints.emplace_back(1, ineq({{1, 2}, {2, 3}}, Relation::Le, 7));
   p.constraints.emplace_back(2, ineq({{1, 1}}, Relation::Ge, 0));
   Configuration cfg = initial_configuration(p);
   auto combo = lin({{id_ref(1), Rat(1, 3)}, {id_ref(2), Rat(2, 3)}});

   SUBCASE("fractional bound on a continuous variable")
   {
      apply_step(cfg, ImplicStep{3, {}, ineq({{2, 1}}, Relation::Le, Rat(7, 3)), proof({combo}, ineq({{2, 1}}, Relation::Le, Rat(7, 3)))});
      CHECK(cfg.derived.contains(3));
      CHECK(cfg.max_id == 3);
   }
   SUBCASE("claim stronger than the combination")
   {
      CHECK(rejected(cfg, ImplicStep{3, {}, ineq({{2, 1}}, Relation::Le, 2), proof({combo}, ineq({{2, 1}}, Relation::Le, 2))}) ==
            ErrorKind::SubproofFailed);
   }
   SUBCASE("stated target weaker than the consequent")
   {
      CHECK(rejected(cfg, ImplicStep{3, {}, ineq({{2, 1}}, Relation::Le, 2), proof({combo}, ineq({{2, 1}}, Relation::Le, 3))}) ==
            ErrorKind::SubproofFailed);
   }
   SUBCASE("rounding needs integral variables")
   {
      CHECK(rejected(cfg, ImplicStep{3, {}, ineq({{2, 1}}, Relation::Le, 2),
                                     proof({combo, RoundStep{}}, ineq({{2, 1}}, Relation::Le, 2))}) == ErrorKind::NonIntegralVariable);
   }
   SUBCASE("premise and id errors")
   {
      auto t = ineq({{2, 1}}, Relation::Le, 9);
      CHECK(rejected(cfg, ImplicStep{3, {}, t, proof({lin({{id_ref(42), 1}})}, t)}) == ErrorKind::UnknownPremiseId);
      CHECK(rejected(cfg, ImplicStep{3, {}, t, proof({lin({{objective_ref(), 1}})}, t)}) ==
            ErrorKind::StrictBoundUsedWithInfiniteZ);
      CHECK(rejected(cfg, ImplicStep{3, {}, t, proof({lin({{id_ref(2), -1}})}, t)}) == ErrorKind::NegativeMultiplierOnInequality);
      CHECK(rejected(cfg, ImplicStep{2, {}, t, proof({combo}, ineq({{2, 1}}, Relation::Le, Rat(7, 3)))}) == ErrorKind::DuplicateId);
   }
}

TEST_CASE("IMPLIC prunes a branch under an assumption")
{
   Configuration cfg = initial_configuration(fixtures::knapsack());
   // x1 >= 1 leaves x1 + x2 <= 3/2 - 1, which rounds to x2 <= 0
   ImplicStep s{6, {ineq({{1, 1}}, Relation::Ge, 1)}, ineq({{2, 1}}, Relation::Le, 0),
                proof({lin({{id_ref(1), Rat(1, 2)}, {local_ref(1), 1}}), RoundStep{}}, ineq({{2, 1}}, Relation::Le, 0))};
   apply_step(cfg, s);
   const auto* imp = std::get_if<Implication>(&cfg.derived.at(6));
   REQUIRE(imp);
   CHECK(imp->assumptions.size() == 1);

   // without the assumption the same combination is not enough
   ImplicStep bare{7, {}, s.consequent, proof({lin({{id_ref(1), Rat(1, 2)}}), RoundStep{}}, s.consequent)};
   CHECK(rejected(cfg, bare) == ErrorKind::SubproofFailed);
}

TEST_CASE("RESOLVE")
{
   Configuration cfg = initial_configuration(fixtures::knapsack());
   auto x2_le_1 = ineq({{2, 1}}, Relation::Le, 1);
   auto implic = [&](ConstraintId id, Inequality assumption, Inequality consequent, ConstraintId premise) {
      apply_step(cfg, ImplicStep{id, {assumption}, consequent, proof({lin({{id_ref(premise), 1}})}, consequent)});
   };

   SUBCASE("integral cover")
   {
      implic(6, ineq({{1, 1}}, Relation::Le, 0), x2_le_1, 5);
      implic(7, ineq({{1, 1}}, Relation::Ge, 1), x2_le_1, 5);
      apply_step(cfg, ResolveStep{8, 6, 1, 7, 1});
      CHECK(cfg.derived.at(8) == Constraint(x2_le_1));
   }
   SUBCASE("gap between the assumptions")
   {
      implic(6, ineq({{1, 1}}, Relation::Le, 0), x2_le_1, 5);
      implic(7, ineq({{1, 1}}, Relation::Ge, 2), x2_le_1, 5);
      CHECK(rejected(cfg, ResolveStep{8, 6, 1, 7, 1}) == ErrorKind::CoverCheckFailed);
   }
   SUBCASE("weaker consequent is kept")
   {
      implic(6, ineq({{1, 1}}, Relation::Le, 0), x2_le_1, 5);
      implic(7, ineq({{1, 1}}, Relation::Ge, 1), ineq({{1, 1}}, Relation::Le, 1), 3);
      CHECK(rejected(cfg, ResolveStep{8, 6, 1, 7, 1}) == ErrorKind::ConsequentsDiffer);
   }
   SUBCASE("premises must be implications")
   {
      implic(6, ineq({{1, 1}}, Relation::Le, 0), x2_le_1, 5);
      CHECK(rejected(cfg, ResolveStep{8, 6, 1, 1, 1}) == ErrorKind::NotImplications);
      CHECK(rejected(cfg, ResolveStep{8, 6, 2, 6, 1}) == ErrorKind::NotImplications);
      CHECK(rejected(cfg, ResolveStep{8, 6, 1, 77, 1}) == ErrorKind::UnknownId);
   }
}

TEST_CASE("RESOLVE on a continuous variable")
{
   Problem p;
   p.n = 1;
   p.constraints.emplace_back(1, ineq({{1, 1}}, Relation::Le, 5));
   Configuration cfg = initial_configuration(p);
   auto c = ineq({{1, 1}}, Relation::Le, 5);
   apply_step(cfg, ImplicStep{2, {ineq({{1, 1}}, Relation::Le, 1)}, c, proof({lin({{id_ref(1), 1}})}, c)});
   apply_step(cfg, ImplicStep{3, {ineq({{1, 1}}, Relation::Ge, 1)}, c, proof({lin({{id_ref(1), 1}})}, c)});
   apply_step(cfg, ImplicStep{4, {ineq({{1, 1}}, Relation::Ge, 2)}, c, proof({lin({{id_ref(1), 1}})}, c)});
   apply_step(cfg, ResolveStep{5, 2, 1, 3, 1});
   CHECK(std::holds_alternative<Inequality>(cfg.derived.at(5)));
   // rounding the gap (1, 2) away is only allowed for integral expressions
   CHECK(rejected(cfg, ResolveStep{6, 2, 1, 4, 1}) == ErrorKind::CoverCheckFailed);
}

TEST_CASE("SOL")
{
   Configuration cfg = initial_configuration(fixtures::knapsack());
   CHECK(rejected(cfg, SolutionStep{{1, 1}}) == ErrorKind::InfeasibleSolution);
   CHECK(rejected(cfg, SolutionStep{{Rat(1, 2), 0}}) == ErrorKind::InfeasibleSolution);
   CHECK(rejected(cfg, SolutionStep{{1}}) == ErrorKind::DimensionMismatch);
   apply_step(cfg, SolutionStep{{1, 0}});
   REQUIRE(cfg.bound);
   CHECK(*cfg.bound == -1);
   CHECK_THROWS_AS(apply_step(cfg, SolutionStep{{1, 0}}), CertError);
   try
   {
      apply_step(cfg, SolutionStep{{0, 1}});
   }
   catch( const CertError& e )
   {
      CHECK(e.kind() == ErrorKind::NotImproving);
   }
   CHECK(*cfg.bound == -1);
}

TEST_CASE("OBJSWAP")
{
   Problem p;
   p.n = 2;
   p.objective = LinExpr::variable(1);
   p.constraints.emplace_back(1, ineq({{1, 1}, {2, 1}}, Relation::Eq, 1));
   p.constraints.emplace_back(2, ineq({{1, 1}}, Relation::Le, 1));
   Configuration cfg = initial_configuration(p);

   // x1 - (x1 + x2 - 1) = 1 - x2
   LinExpr swapped = LinExpr::variable(2, -1);
   swapped.set_constant(1);
   SUBCASE("accepted")
   {
      apply_step(cfg, ObjectiveStep{swapped, {{1, -1}}});
      CHECK(cfg.objective == swapped);
   }
   SUBCASE("wrong constant")
   {
      LinExpr off = LinExpr::variable(2, -1);
      CHECK(rejected(cfg, ObjectiveStep{off, {{1, -1}}}) == ErrorKind::IdentityCheckFailed);
   }
   SUBCASE("inequality premise")
   {
      CHECK(rejected(cfg, ObjectiveStep{LinExpr(), {{2, -1}}}) == ErrorKind::NonEqualityPremise);
   }
}

TEST_CASE("RED")
{
   SUBCASE("dominated column")
   {
      // min x1 + x2 s.t. x1 + 2x2 >= 2: moving x1 onto x2 never hurts
      Problem p;
      p.n = 2;
      p.integral = {1, 2};
      p.objective = LinExpr::variable(1) + LinExpr::variable(2);
      p.constraints.emplace_back(1, ineq({{1, -1}, {2, -2}}, Relation::Le, -2));
      p.constraints.emplace_back(2, ineq({{1, 1}}, Relation::Ge, 0));
      p.constraints.emplace_back(3, ineq({{2, 1}}, Relation::Ge, 0));
      Configuration cfg = initial_configuration(p);

      Witness w;
      w.map = AffineMap{2, {{1, LinExpr()}, {2, LinExpr::variable(2) + LinExpr::variable(1)}}};
      w.proofs.push_back(WitnessProof{WitnessProof::Kind::Id, 1,
                                      proof({lin({{id_ref(1), 1}, {id_ref(2), 1}})}, ineq({{1, -2}, {2, -2}}, Relation::Le, -2))});
      w.proofs.push_back(WitnessProof{WitnessProof::Kind::Id, 3,
                                      proof({lin({{id_ref(2), 1}, {id_ref(3), 1}})}, ineq({{1, 1}, {2, 1}}, Relation::Ge, 0))});
      StrengthenStep s{false, 4, ineq({{1, 1}}, Relation::Le, 0), w};
      apply_step(cfg, s);
      CHECK(cfg.derived.contains(4));

      SUBCASE("missing proof for a touched constraint")
      {
         Configuration fresh = initial_configuration(p);
         s.witness.proofs.pop_back();
         CHECK(rejected(fresh, s) == ErrorKind::MissingSubproof);
      }
   }
   SUBCASE("identity witness")
   {
      Configuration cfg = initial_configuration(fixtures::knapsack());
      StrengthenStep s{false, 6, ineq({{1, 1}, {2, 1}}, Relation::Le, 2), Witness{AffineMap::identity(2), {}, {}}};
      // half the row already implies the image, so no subproof is needed
      apply_step(cfg, s);
      CHECK(cfg.derived.contains(6));

      // the identity cannot establish a constraint the pool does not imply
      StrengthenStep bad{false, 7, ineq({{1, 1}}, Relation::Le, 0), Witness{AffineMap::identity(2), {}, {}}};
      CHECK(rejected(cfg, bad) == ErrorKind::MissingSubproof);
   }
   SUBCASE("witness leaves the integers")
   {
      Configuration cfg = initial_configuration(fixtures::knapsack());
      Witness w{AffineMap{2, {{1, LinExpr(Rat(1, 2))}}}, {}, {}};
      CHECK(rejected(cfg, StrengthenStep{false, 6, ineq({{1, 1}}, Relation::Le, 0), w}) == ErrorKind::WitnessNotIntegral);
   }
}

TEST_CASE("DOM")
{
   Configuration cfg = initial_configuration(pair_problem());
   apply_step(cfg, TreeStep{root_sigma({1, 2}, {3, 5})});

   auto gap = OrderEvidence{std::nullopt, 1, Evidence::Gap,
                            {proof({lin({{local_ref(1), 1}}), RoundStep{}}, ineq({{1, -1}, {2, 1}}, Relation::Ge, 1))}};
   StrengthenStep s{true, 6, ineq({{1, 1}, {2, -1}}, Relation::Ge, 0), Witness{swap12(), {}, {gap}}};

   SUBCASE("symmetry breaking pair")
   {
      apply_step(cfg, s);
      CHECK(cfg.derived.contains(6));
   }
   SUBCASE("no evidence for the strict improvement")
   {
      s.witness.evidence.clear();
      CHECK(rejected(cfg, s) == ErrorKind::StrictOrderUndetermined);
   }
   SUBCASE("objective is not invariant")
   {
      Problem p = pair_problem();
      p.objective = LinExpr::variable(1, -1) + LinExpr::variable(2, -2);
      Configuration other = initial_configuration(p);
      apply_step(other, TreeStep{root_sigma({1, 2}, {3, 5})});
      CHECK(rejected(other, s) == ErrorKind::MissingSubproof);
   }
   SUBCASE("empty sigma lists admit no strict improvement")
   {
      Configuration flat = initial_configuration(pair_problem());
      CHECK(rejected(flat, s) == ErrorKind::StrictOrderUndetermined);
   }
}

TEST_CASE("EPS")
{
   Configuration cfg = initial_configuration(fixtures::knapsack());
   apply_step(cfg, EpsilonStep{Rat(1, 2)});
   CHECK(cfg.eps == Rat(1, 2));
   CHECK(rejected(cfg, EpsilonStep{1}) == ErrorKind::NotShrinking);
   CHECK(rejected(cfg, EpsilonStep{Rat(1, 2)}) == ErrorKind::NotShrinking);
   CHECK(rejected(cfg, EpsilonStep{0}) == ErrorKind::NotShrinking);
   CHECK(cfg.eps == Rat(1, 2));
}

TEST_CASE("XFER")
{
   Configuration cfg = initial_configuration(fixtures::knapsack());
   auto c = ineq({{1, 1}, {2, 1}}, Relation::Le, 1);
   apply_step(cfg, ImplicStep{6, {}, c, proof({lin({{id_ref(1), Rat(1, 2)}}), RoundStep{}}, c)});
   apply_step(cfg, TransferStep{6});
   CHECK(cfg.core.contains(6));
   CHECK(!cfg.derived.contains(6));
   CHECK(rejected(cfg, TransferStep{6}) == ErrorKind::UnknownId);
   CHECK(rejected(cfg, TransferStep{99}) == ErrorKind::UnknownId);
   // transfer does not free the id
   CHECK(rejected(cfg, ImplicStep{6, {}, c, proof({lin({{id_ref(6), 1}})}, c)}) == ErrorKind::DuplicateId);
}

TEST_CASE("DEL")
{
   Problem p;
   p.n = 1;
   p.integral = {1};
   p.constraints.emplace_back(1, ineq({{1, 1}}, Relation::Le, 2));
   p.constraints.emplace_back(2, ineq({{1, 1}}, Relation::Le, 5));
   p.constraints.emplace_back(3, ineq({{1, 1}}, Relation::Ge, 0));
   Configuration cfg = initial_configuration(p);

   SUBCASE("B: implied core constraint")
   {
      apply_step(cfg, DeleteStep{DeleteStep::Variant::B, {2}, proof({lin({{id_ref(1), 1}})}, ineq({{1, 1}}, Relation::Le, 5)), {}});
      CHECK(!cfg.core.contains(2));
      // the remaining bound cannot be derived from what is left
      CHECK(rejected(cfg, DeleteStep{DeleteStep::Variant::B, {1}, proof({lin({{id_ref(3), 1}})}, ineq({{1, 1}}, Relation::Le, 2)),
                                     {}}) == ErrorKind::SubproofFailed);
   }
   SUBCASE("B: the deleted constraint cannot cite itself")
   {
      CHECK(rejected(cfg, DeleteStep{DeleteStep::Variant::B, {1}, proof({lin({{id_ref(1), 1}})}, ineq({{1, 1}}, Relation::Le, 2)),
                                     {}}) == ErrorKind::UnknownPremiseId);
   }
   SUBCASE("B: a bound cited by the tree stays")
   {
      apply_step(cfg, TreeStep{root_sigma({1}, {2})});
      CHECK(rejected(cfg, DeleteStep{DeleteStep::Variant::B, {2}, proof({lin({{id_ref(1), 1}})}, ineq({{1, 1}}, Relation::Le, 5)),
                                     {}}) == ErrorKind::VariantPreconditionFailed);
   }
   SUBCASE("A: derived constraints only")
   {
      auto c = ineq({{1, 1}}, Relation::Le, 3);
      apply_step(cfg, ImplicStep{4, {}, c, proof({lin({{id_ref(1), 1}})}, c)});
      CHECK(rejected(cfg, DeleteStep{DeleteStep::Variant::A, {1}, {}, {}}) == ErrorKind::VariantPreconditionFailed);
      apply_step(cfg, DeleteStep{DeleteStep::Variant::A, {4, 4}, {}, {}});
      CHECK(cfg.derived.empty());
   }
   SUBCASE("C: needs empty sigma lists")
   {
      Witness id{AffineMap::identity(1), {}, {}};
      apply_step(cfg, DeleteStep{DeleteStep::Variant::C, {2}, {}, id});
      CHECK(!cfg.core.contains(2));
      apply_step(cfg, TreeStep{root_sigma({1}, {1})});
      CHECK(rejected(cfg, DeleteStep{DeleteStep::Variant::C, {3}, {}, id}) == ErrorKind::VariantPreconditionFailed);
   }
}

TEST_CASE("TREE")
{
   Configuration cfg = initial_configuration(fixtures::knapsack());
   auto c = ineq({{2, 1}}, Relation::Le, 1);
   apply_step(cfg, ImplicStep{6, {}, c, proof({lin({{id_ref(5), 1}})}, c)});
   CHECK(rejected(cfg, TreeStep{root_sigma({2}, {6})}) == ErrorKind::DerivedSetNonEmpty);
   apply_step(cfg, TransferStep{6});
   apply_step(cfg, TreeStep{root_sigma({2}, {6})});
   CHECK(cfg.tree.nodes.at(0).sigma == std::vector<int>{2});
   // x1 >= 0 is not an upper bound on x1
   CHECK(rejected(cfg, TreeStep{root_sigma({1}, {2})}) == ErrorKind::ConsistencyViolation);
   CHECK(rejected(cfg, TreeStep{root_sigma({1}, {})}) == ErrorKind::ConsistencyViolation);
}

TEST_CASE("EXT")
{
   Configuration cfg = initial_configuration(fixtures::knapsack());
   apply_step(cfg, ExtendStep{});
   CHECK(cfg.dim == 3);
   CHECK(rejected(cfg, SolutionStep{{1, 0}}) == ErrorKind::DimensionMismatch);
   apply_step(cfg, SolutionStep{{1, 0, 7}});
   auto c = ineq({{3, 1}}, Relation::Le, 4);
   CHECK(rejected(cfg, ImplicStep{6, {}, c, proof({}, c)}) == ErrorKind::SubproofFailed);
}

TEST_CASE("GOAL")
{
   SUBCASE("optimal")
   {
      Configuration cfg = initial_configuration(fixtures::knapsack());
      CHECK_THROWS_AS(check_goal(cfg), CertError);
      apply_step(cfg, SolutionStep{{1, 0}});
      // g < -1 rounds to x1 + x2 >= 2, which contradicts half the row
      apply_step(cfg, ImplicStep{6, {}, kFalsity,
                                 proof({lin({{objective_ref(), 1}}), RoundStep{}, lin({{previous_ref(), 1}, {id_ref(1), Rat(1, 2)}})},
                                       kFalsity)});
      auto v = apply_step(cfg, GoalStep{});
      REQUIRE(v);
      CHECK(*v == Verdict{Verdict::Kind::Optimal, Rat(-1)});
   }
   SUBCASE("infeasible")
   {
      Configuration cfg = initial_configuration(fixtures::infeasible_pair());
      try
      {
         check_goal(cfg);
         FAIL("goal without contradiction");
      }
      catch( const CertError& e )
      {
         CHECK(e.kind() == ErrorKind::NoContradictionPresent);
      }
      std::vector<ConstraintId> ids;
      for( const auto& [id, c] : cfg.core )
         if( std::holds_alternative<Inequality>(c) )
            ids.push_back(id);
      REQUIRE(ids.size() == 2);
      apply_step(cfg, ImplicStep{cfg.max_id + 1, {}, kFalsity,
                                 proof({lin({{id_ref(ids[0]), 1}, {id_ref(ids[1]), 1}})}, kFalsity)});
      CHECK(check_goal(cfg) == Verdict{Verdict::Kind::Infeasible, std::nullopt});
   }
}

TEST_CASE("ids are never reused")
{
   std::mt19937_64 rng(3);
   for( int trial = 0; trial < 200; ++trial )
   {
      Configuration cfg = initial_configuration(fixtures::knapsack());
      std::set<ConstraintId> used;
      for( const auto& [id, c] : cfg.core )
         used.insert(id);
      for( int k = 0; k < 20; ++k )
      {
         ConstraintId id = std::uniform_int_distribution<ConstraintId>(1, 30)(rng);
         auto c = ineq({{1, 1}}, Relation::Le, 1 + k);
         Configuration before = cfg;
         bool ok = true;
         try
         {
            switch( rng() % 3 )
            {
            case 0: apply_step(cfg, ImplicStep{id, {}, c, proof({lin({{id_ref(3), 1}})}, c)}); break;
            case 1: apply_step(cfg, TransferStep{id}); break;
            default: apply_step(cfg, DeleteStep{DeleteStep::Variant::A, {id}, {}, {}}); break;
            }
         }
         catch( const CertError& )
         {
            ok = false;
         }
         bool created = cfg.max_id > before.max_id;
         if( created )
         {
            CHECK(ok);
            CHECK(!used.contains(id));
            used.insert(id);
         }
         if( !ok )
            CHECK(cfg.live_constraints() == before.live_constraints());
      }
   }
}

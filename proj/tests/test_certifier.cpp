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
#include "mipcert/oracle.hpp"
#include "mipcert/verifier.hpp"

#include <doctest.h>

using namespace mipcert;
using fixtures::ProblemBuilder;

namespace {

template <class F>
ErrorKind kind_of(F fn)
{
   try
   {
      fn();
   }
   catch( const CertError& e )
   {
      return e.kind();
   }
   FAIL("no error raised");
   return ErrorKind::InvalidArgument;
}

Verdict verified(const CertificateFile& f)
{
   VerifyReport r = verify_steps(f.problem, f.steps);
   INFO(r.format(false));
   REQUIRE(r.exit_code() == 0);
   return *r.verdict;
}

bool equivalent(const Inequality& a, const Inequality& b)
{
   return dominates(a, b) && dominates(b, a);
}

}   // namespace

TEST_CASE("knapsack")
{
   CertifyResult r = solve_and_certify(fixtures::knapsack());
   CHECK(r.verdict == Verdict{Verdict::Kind::Optimal, Rat(-1)});
   CHECK(r.certificate.steps.size() <= 40);
   CHECK(verified(r.certificate) == r.verdict);
   CHECK(std::holds_alternative<GoalStep>(r.certificate.steps.back()));
}

TEST_CASE("infeasible pair closes at the root")
{
   CertifyResult r = solve_and_certify(fixtures::infeasible_pair());
   CHECK(r.verdict.kind == Verdict::Kind::Infeasible);
   REQUIRE(r.certificate.steps.size() == 2);
   CHECK(std::holds_alternative<ImplicStep>(r.certificate.steps[0]));
   CHECK(verified(r.certificate).kind == Verdict::Kind::Infeasible);
}

TEST_CASE("set packing with symmetry handling")
{
   Problem p = fixtures::set_packing(6);
   CertifyResult plain = solve_and_certify(p);
   CertifyResult sst = solve_and_certify(p, {true, false, false, false});
   CertifyResult lex = solve_and_certify(p, {false, true, false, false});
   CHECK(sst.nodes < plain.nodes);
   CHECK(lex.nodes <= plain.nodes);
   Verdict expected = brute_force_optimum(p).verdict;
   CHECK(plain.verdict == expected);
   CHECK(verified(plain.certificate) == expected);
   CHECK(verified(sst.certificate) == expected);
   CHECK(verified(lex.certificate) == expected);
}

TEST_CASE("lexicographic constraint")
{
   SUBCASE("one position")
   {
      auto c = fixtures::lex_case(1, 1);
      CHECK(c.result.weights == std::vector<Rat>{1});
      auto want = Inequality::make(LinExpr::variable(1) - LinExpr::variable(2), Relation::Ge, 0);
      CHECK(equivalent(c.result.constraint, want));
      verified(c.certificate);
   }
   SUBCASE("two positions over binaries")
   {
      auto c = fixtures::lex_case(2, 1);
      CHECK(c.result.weights == std::vector<Rat>{2, 1});
      auto want = Inequality::make(fixtures::dense({2, 1, -2, -1}), Relation::Ge, 0);
      CHECK(equivalent(c.result.constraint, want));
      verified(c.certificate);
   }
   SUBCASE("invalid inputs")
   {
      Problem p = fixtures::symmetric_pair();
      CertBuilder b(p);
      b.install_sigma_tree({1, 2});
      CHECK(kind_of([&] { emit_lex_constraint(b, {1}, {1, 1}, 0, 1); }) == ErrorKind::InvalidArgument);
      CHECK(kind_of([&] { emit_lex_constraint(b, {}, {2, 1}, 0, 1); }) == ErrorKind::InvalidArgument);
      CHECK(kind_of([&] { emit_lex_constraint(b, {1}, {2, 1}, 0, Rat(1, 2)); }) == ErrorKind::InvalidArgument);
      CHECK(kind_of([&] { emit_lex_constraint(b, {1}, {2, 1}, 1, 1); }) == ErrorKind::UnboundedSigmaVariable);
   }
}

TEST_CASE("cut certificates")
{
   CHECK(verified(fixtures::cg_certificate()) == Verdict{Verdict::Kind::Optimal, Rat(-1)});
   CHECK(verified(fixtures::cover_certificate()) == Verdict{Verdict::Kind::Optimal, Rat(-1)});
   CHECK(verified(fixtures::flowcover_certificate()).kind == Verdict::Kind::Infeasible);
   CHECK(verified(fixtures::reduced_cost_certificate()) == Verdict{Verdict::Kind::Optimal, Rat(-1)});

   CertifyResult cuts = solve_and_certify(fixtures::knapsack(), {false, false, true, true});
   CHECK(verified(cuts.certificate) == Verdict{Verdict::Kind::Optimal, Rat(-1)});
}

TEST_CASE("cut emitter errors")
{
   SUBCASE("not a cover")
   {
      CertBuilder b(fixtures::knapsack());
      CHECK(kind_of([&] { emit_cover_cut(b, 1, {1}); }) == ErrorKind::NotACover);
      CHECK(b.steps().empty());
   }
   SUBCASE("flow cover without excess")
   {
      CertBuilder b(fixtures::flowcover_certificate().problem);
      FlowSet set{{1, 2}, {3, 4}, {2, 2}, 3, 1, {2, 3}};
      CHECK(kind_of([&] { emit_flowcover_cut(b, set, {0}); }) == ErrorKind::NotACover);
   }
   SUBCASE("reduced cost of the wrong sign")
   {
      // min -x1 s.t. x1 <= 3/2: y = 1 prices x1 at zero
      Problem p = ProblemBuilder(1).all_integral().objective({-1}).row({1}, Relation::Le, Rat(3, 2)).bounds(1, 0, 1).build();
      CertBuilder b(p);
      CHECK(kind_of([&] { emit_reduced_cost_fixing(b, ReducedCostData{{{1, 1}}, Rat(-3, 2), 1}); }) ==
            ErrorKind::InvalidArgument);   // no incumbent
      b.solution({1});
      CHECK(kind_of([&] { emit_reduced_cost_fixing(b, ReducedCostData{{{1, 1}}, Rat(-3, 2), 1}); }) ==
            ErrorKind::MultiplierSignError);
      CHECK(kind_of([&] { emit_reduced_cost_fixing(b, ReducedCostData{{{1, -1}}, Rat(-3, 2), 1}); }) ==
            ErrorKind::MultiplierSignError);
   }
   SUBCASE("reduced cost on a continuous variable is not rounded")
   {
      Problem p = ProblemBuilder(2)
                     .integral({1})
                     .objective({-1, Rat(-1, 2)})
                     .row({1, 1}, Relation::Le, Rat(3, 2))
                     .bounds(1, 0, 1)
                     .bounds(2, 0, 1)
                     .build();
      CertBuilder b(p);
      b.solution({1, 0});
      ConstraintId id = emit_reduced_cost_fixing(b, ReducedCostData{{{1, 1}}, Rat(-3, 2), 2});
      const auto& step = std::get<ImplicStep>(b.steps().back());
      CHECK(step.id == id);
      for( const auto& s : step.proof.steps )
         CHECK(!std::holds_alternative<RoundStep>(s));
      // (z - z_LP) / cbar = (-1 + 3/2) / (1/2)
      CHECK(equivalent(step.consequent, Inequality::make(LinExpr::variable(2), Relation::Le, 1, true)));
      b.implic({}, Inequality::make(LinExpr::variable(2), Relation::Le, 1, true), {lin({{id_ref(id), 1}})});
      CHECK(verify_steps(p, b.steps()).status == VerifyReport::Status::Rejected);   // no GOAL yet
   }
}

TEST_CASE("certifier preconditions")
{
   Problem unbounded = ProblemBuilder(1).all_integral().objective({1}).row({1}, Relation::Ge, 0).build();
   CHECK(kind_of([&] { solve_and_certify(unbounded); }) == ErrorKind::UnboundedVariable);

   Problem continuous = ProblemBuilder(1).objective({1}).bounds(1, 0, 1).build();
   CHECK(kind_of([&] { solve_and_certify(continuous); }) == ErrorKind::NonIntegralProblem);

   Problem broken = fixtures::knapsack();
   broken.symmetries.push_back({2, 1, 3});
   CHECK_THROWS_AS(solve_and_certify(broken, {true, false, false, false}), CertError);
}

TEST_CASE("symmetry groups")
{
   Problem p = fixtures::set_packing(5);
   CHECK(enumerate_group(p.symmetries).size() == 120);
   CHECK(kind_of([&] { enumerate_group(p.symmetries, 10); }) == ErrorKind::TooLarge);
   CHECK(enumerate_group({{1, 2, 3}}).size() == 1);

   CHECK(is_formulation_symmetry(p, {3, 1, 2, 5, 4}));
   CHECK(is_formulation_symmetry(fixtures::knapsack(), {2, 1}));
   Problem lex = fixtures::lex_case(2, 1).certificate.problem;
   CHECK(is_formulation_symmetry(lex, {3, 4, 1, 2}));
   CHECK(!is_formulation_symmetry(lex, {2, 1, 3, 4}));
}

TEST_CASE("certificates are reproducible")
{
   Problem p = fixtures::set_packing(5);
   CertifyOptions opts{true, true, false, false};
   CHECK(serialize(solve_and_certify(p, opts).certificate) == serialize(solve_and_certify(p, opts).certificate));
}

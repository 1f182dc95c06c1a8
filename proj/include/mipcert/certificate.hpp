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

#ifndef MIPCERT_CERTIFICATE_HPP_
#define MIPCERT_CERTIFICATE_HPP_

#include "mipcert/rules.hpp"

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mipcert {

struct CertificateFile
{
   Problem problem;
   std::vector<ProofStep> steps;
};

/// Line-oriented reader. Holds one line of state plus the current dimension
/// and the largest id defined so far, so arbitrarily long certificates are
/// read in constant memory.
class CertificateReader
{
 public:
   explicit CertificateReader(std::istream& in) : in_(in) {}

   /// Reads the problem section up to PROOF (or end of input). Returns
   /// nullopt if the input starts directly with PROOF.
   std::optional<Problem> read_problem();

   /// Use a problem supplied separately (dimension and id watermark).
   void set_problem(const Problem& p);

   /// Next proof step, or nullopt at end of input.
   std::optional<ProofStep> next();

   /// Line number where the last returned step started.
   std::size_t step_line() const { return step_line_; }
   int dim() const { return dim_; }

 private:
   struct Line
   {
      std::vector<std::string> tokens;
      std::size_t number = 0;
   };

   bool fetch(Line& line);
   Line expect_line(const char* context);
   void push_back(Line line) { pending_ = std::move(line); }

   Inequality parse_ineq(const Line& l, std::size_t& pos) const;
   Constraint parse_constraint(const Line& l, std::size_t& pos) const;
   LinExpr parse_dense(const Line& l, std::size_t& pos, bool allow_const) const;
   ConstraintId parse_cited(const Line& l, const std::string& tok) const;
   Subproof parse_subproof();
   Witness parse_witness();
   BranchTree parse_tree();
   [[noreturn]] void error(const Line& l, const std::string& msg) const;

   std::istream& in_;
   std::optional<Line> pending_;
   std::size_t line_no_ = 0;
   std::size_t step_line_ = 0;
   int dim_ = 0;
   ConstraintId watermark_ = 0;
   bool in_proof_ = false;
};

CertificateFile parse(std::string_view text);
Problem parse_problem(std::string_view text);

std::string serialize_problem(const Problem& p);
/// Steps are written densely in dimension `dim`; EXT increments it.
std::string serialize_steps(const std::vector<ProofStep>& steps, int dim);
std::string serialize(const CertificateFile& file);

}   // namespace mipcert

#endif

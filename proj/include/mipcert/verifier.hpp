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

#ifndef MIPCERT_VERIFIER_HPP_
#define MIPCERT_VERIFIER_HPP_

#include "mipcert/certificate.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace mipcert {

struct VerifyOptions
{
   /// When set, one line per accepted step is written here.
   std::ostream* trace = nullptr;
};

struct VerifyStats
{
   std::map<std::string, std::size_t> rule_counts;
   std::size_t steps = 0;
   std::size_t max_live = 0;
   double seconds = 0;
};

struct VerifyReport
{
   enum class Status
   {
      Verified,
      Rejected,
      Error
   };
   Status status = Status::Error;
   std::optional<Verdict> verdict;
   std::size_t failed_step = 0;   // 1-based
   std::size_t failed_line = 0;
   std::string rule;
   std::string message;
   VerifyStats stats;

   /// 0 verified, 1 rejected, 2 input error.
   int exit_code() const;
   /// Deterministic summary; timing is only included with `with_stats`, on
   /// its own line.
   std::string format(bool with_stats) const;
};

/// Verifies a certificate read from `cert`. If `problem` is null the
/// certificate must embed its problem section.
VerifyReport verify_stream(std::istream& cert, const Problem* problem, const VerifyOptions& options = {});

/// As verify_stream, reading from files. An empty problem_path means the
/// problem is embedded in the certificate.
VerifyReport verify_file(const std::string& problem_path, const std::string& cert_path, const VerifyOptions& options = {});

/// Verifies in-memory steps.
VerifyReport verify_steps(const Problem& problem, const std::vector<ProofStep>& steps, const VerifyOptions& options = {});

}   // namespace mipcert

#endif

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

#include "mipcert/verifier.hpp"

#include "mipcert/error.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mipcert {

int VerifyReport::exit_code() const
{
   switch( status )
   {
   case Status::Verified: return 0;
   case Status::Rejected: return 1;
   case Status::Error: return 2;
   }
   return 2;
}

std::string VerifyReport::format(bool with_stats) const
{
   std::ostringstream out;
   switch( status )
   {
   case Status::Verified: out << "VERIFIED " << to_string(*verdict) << "\n"; break;
   case Status::Rejected:
      out << "REJECTED at step " << failed_step;
      if( failed_line )
         out << " (line " << failed_line << ")";
      if( !rule.empty() )
         out << " " << rule;
      out << ": " << message << "\n";
      break;
   case Status::Error:
      out << "ERROR";
      if( failed_line )
         out << " at line " << failed_line;
      out << ": " << message << "\n";
      break;
   }
   if( with_stats )
   {
      out << "steps " << stats.steps << "\n";
      out << "max live constraints " << stats.max_live << "\n";
      for( const auto& [name, count] : stats.rule_counts )
         out << "rule " << name << " " << count << "\n";
      out << "time " << stats.seconds << " s\n";
   }
   return out.str();
}

namespace {

class Driver
{
 public:
   Driver(const Problem& problem, const VerifyOptions& options)
       : cfg_(initial_configuration(problem)), options_(options), start_(std::chrono::steady_clock::now())
   {
      report_.stats.max_live = cfg_.live_constraints();
      report_.status = VerifyReport::Status::Verified;   // until something fails
   }

   /// Returns false once the run is decided.
   bool apply(const ProofStep& step, std::size_t line)
   {
      std::size_t number = report_.stats.steps + 1;
      std::string name = rule_name(step);
      if( done_ )
         return reject(number, line, name, "steps after GOAL");
      try
      {
         auto verdict = apply_step(cfg_, step);
         ++report_.stats.steps;
         ++report_.stats.rule_counts[name];
         report_.stats.max_live = std::max(report_.stats.max_live, cfg_.live_constraints());
         if( options_.trace )
            *options_.trace << "step " << number << " " << name << " ok, live " << cfg_.live_constraints() << "\n";
         if( verdict )
         {
            report_.verdict = verdict;
            done_ = true;
         }
         return true;
      }
      catch( const CertError& e )
      {
         return reject(number, line, name, e.what());
      }
   }

   VerifyReport finish()
   {
      if( !failed() && !done_ )
      {
         {
            report_.status = VerifyReport::Status::Rejected;
            report_.failed_step = report_.stats.steps + 1;
            report_.message = "certificate ends without GOAL";
         }
      }
      report_.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      return std::move(report_);
   }

   void error(std::size_t line, const std::string& message)
   {
      report_.status = VerifyReport::Status::Error;
      report_.failed_line = line;
      report_.failed_step = report_.stats.steps + 1;
      report_.message = message;
   }

   bool failed() const { return report_.status == VerifyReport::Status::Rejected || report_.status == VerifyReport::Status::Error; }

 private:
   bool reject(std::size_t number, std::size_t line, const std::string& name, const std::string& message)
   {
      report_.status = VerifyReport::Status::Rejected;
      report_.failed_step = number;
      report_.failed_line = line;
      report_.rule = name;
      report_.message = message;
      if( options_.trace )
         *options_.trace << "step " << number << " " << name << " rejected: " << message << "\n";
      return false;
   }

   Configuration cfg_;
   const VerifyOptions& options_;
   VerifyReport report_;
   bool done_ = false;
   std::chrono::steady_clock::time_point start_;
};

VerifyReport input_error(const std::string& message, std::size_t line = 0)
{
   VerifyReport r;
   r.status = VerifyReport::Status::Error;
   r.message = message;
   r.failed_line = line;
   return r;
}

}   // namespace

VerifyReport verify_stream(std::istream& cert, const Problem* problem, const VerifyOptions& options)
{
   CertificateReader reader(cert);
   std::optional<Problem> embedded;
   try
   {
      if( problem )
         reader.set_problem(*problem);
      embedded = reader.read_problem();
      if( problem && embedded )
         return input_error("problem given both separately and in the certificate");
      if( !problem && !embedded )
         return input_error("certificate has no problem section");
   }
   catch( const CertError& e )
   {
      return input_error(e.what());
   }
   const Problem& p = problem ? *problem : *embedded;

   std::optional<Driver> driver;
   try
   {
      driver.emplace(p, options);
   }
   catch( const CertError& e )
   {
      return input_error(e.what());
   }
   for( ;; )
   {
      std::optional<ProofStep> step;
      try
      {
         step = reader.next();
      }
      catch( const CertError& e )
      {
         driver->error(reader.step_line(), e.what());
         break;
      }
      if( !step )
         break;
      if( !driver->apply(*step, reader.step_line()) )
         break;
   }
   return driver->finish();
}

VerifyReport verify_file(const std::string& problem_path, const std::string& cert_path, const VerifyOptions& options)
{
   std::optional<Problem> problem;
   if( !problem_path.empty() )
   {
      std::ifstream in(problem_path);
      if( !in )
         return input_error("cannot open " + problem_path);
      std::stringstream text;
      text << in.rdbuf();
      try
      {
         problem = parse_problem(text.str());
      }
      catch( const CertError& e )
      {
         return input_error(problem_path + ": " + e.what());
      }
   }
   std::ifstream in(cert_path);
   if( !in )
      return input_error("cannot open " + cert_path);
   return verify_stream(in, problem ? &*problem : nullptr, options);
}

VerifyReport verify_steps(const Problem& problem, const std::vector<ProofStep>& steps, const VerifyOptions& options)
{
   std::optional<Driver> driver;
   try
   {
      driver.emplace(problem, options);
   }
   catch( const CertError& e )
   {
      return input_error(e.what());
   }
   for( const auto& s : steps )
      if( !driver->apply(s, 0) )
         break;
   return driver->finish();
}

}   // namespace mipcert

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

#include "mipcert/certifier.hpp"
#include "mipcert/error.hpp"
#include "mipcert/oracle.hpp"
#include "mipcert/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace mipcert;

std::string slurp(const std::string& path)
{
   std::ifstream in(path);
   if( !in )
      fail(ErrorKind::Io, "cannot open " + path);
   std::ostringstream ss;
   ss << in.rdbuf();
   return ss.str();
}

bool has_proof_section(const std::string& path)
{
   std::ifstream in(path);
   std::string line;
   while( std::getline(in, line) )
      if( line.rfind("PROOF", 0) == 0 )
         return true;
   return false;
}

int run_verify(const std::vector<std::string>& files, bool stats, bool trace, unsigned jobs)
{
   // Two files where the first has no proof section: problem + certificate.
   if( files.size() == 2 && !has_proof_section(files[0]) )
   {
      VerifyOptions opt;
      if( trace )
         opt.trace = &std::cerr;
      VerifyReport r = verify_file(files[0], files[1], opt);
      std::cout << r.format(stats);
      return r.exit_code();
   }
   if( files.size() == 1 )
   {
      VerifyOptions opt;
      if( trace )
         opt.trace = &std::cerr;
      VerifyReport r = verify_file("", files[0], opt);
      std::cout << r.format(stats);
      return r.exit_code();
   }

   // Batch of self-contained certificates; reports keep input order.
   std::vector<VerifyReport> reports(files.size());
   std::atomic<std::size_t> next{0};
   auto worker = [&]() {
      for( std::size_t i = next++; i < files.size(); i = next++ )
         reports[i] = verify_file("", files[i]);
   };
   std::vector<std::thread> pool;
   for( unsigned t = 1; t < std::max(1u, jobs); ++t )
      pool.emplace_back(worker);
   worker();
   for( auto& t : pool )
      t.join();
   int code = 0;
   for( std::size_t i = 0; i < files.size(); ++i )
   {
      std::cout << files[i] << ": " << reports[i].format(stats);
      code = std::max(code, reports[i].exit_code());
   }
   return code;
}

int run_certify(const std::string& problem_path, const std::string& out_path, const CertifyOptions& opt)
{
   Problem p = parse_problem(slurp(problem_path));
   CertifyResult r = solve_and_certify(p, opt);
   std::ofstream out(out_path);
   if( !out )
      fail(ErrorKind::Io, "cannot write " + out_path);
   out << serialize(r.certificate);
   std::cout << to_string(r.verdict) << "\nnodes " << r.nodes << "\nsteps " << r.certificate.steps.size() << '\n';
   return 0;
}

int run_oracle(const std::string& problem_path)
{
   Problem p = parse_problem(slurp(problem_path));
   OracleResult r = brute_force_optimum(p);
   std::cout << to_string(r.verdict) << '\n';
   if( r.argmin )
   {
      std::cout << "argmin";
      for( const auto& v : *r.argmin )
         std::cout << ' ' << to_string(v);
      std::cout << '\n';
   }
   return 0;
}

}   // namespace

int main(int argc, char** argv)
{
   CLI::App app{"Exact verifier and reference certifier for MIP certificates"};
   app.require_subcommand(1);

   auto* verify = app.add_subcommand("verify", "Check a certificate; exit 0 verified, 1 rejected, 2 input error");
   std::vector<std::string> files;
   bool stats = false;
   bool trace = false;
   unsigned jobs = 1;
   verify->add_option("files", files, "[problem] certificate, or several self-contained certificates")->required();
   verify->add_flag("--stats", stats, "Print rule counts, peak live constraints and time");
   verify->add_flag("--trace", trace, "Log every accepted step to stderr");
   verify->add_option("--jobs", jobs, "Verify a batch of certificates in parallel")->check(CLI::PositiveNumber);

   auto* certify = app.add_subcommand("certify", "Solve a bounded pure-integer problem and write a certificate");
   std::string problem_path;
   std::string out_path;
   CertifyOptions copt;
   std::vector<std::string> cuts;
   certify->add_option("problem", problem_path)->required()->check(CLI::ExistingFile);
   certify->add_option("-o,--output", out_path, "Certificate file")->required();
   certify->add_flag("--sst", copt.sst, "Derive SST cuts from the problem's SYM generators");
   certify->add_flag("--lex", copt.lex, "Derive one lexicographic constraint per generator");
   certify->add_option("--cuts", cuts, "Root cuts")->delimiter(',')->check(CLI::IsMember({"cg", "cover"}));

   auto* oracle = app.add_subcommand("oracle", "Brute-force optimum of a bounded pure-integer problem");
   std::string oracle_path;
   oracle->add_option("problem", oracle_path)->required()->check(CLI::ExistingFile);

   CLI11_PARSE(app, argc, argv);

   try
   {
      if( *verify )
         return run_verify(files, stats, trace, jobs);
      if( *certify )
      {
         copt.cg = std::find(cuts.begin(), cuts.end(), "cg") != cuts.end();
         copt.cover = std::find(cuts.begin(), cuts.end(), "cover") != cuts.end();
         return run_certify(problem_path, out_path, copt);
      }
      return run_oracle(oracle_path);
   }
   catch( const CertError& e )
   {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
   }
}

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

// Thin bindings: problems and certificates cross the boundary as text,
// rationals as strings.
#include "mipcert/certifier.hpp"
#include "mipcert/error.hpp"
#include "mipcert/oracle.hpp"
#include "mipcert/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mipcert;

namespace {

py::dict verdict_dict(const Verdict& v)
{
   py::dict d;
   d["kind"] = v.kind == Verdict::Kind::Optimal ? "optimal" : "infeasible";
   d["value"] = v.value ? py::object(py::str(to_string(*v.value))) : py::object(py::none());
   return d;
}

const char* status_name(VerifyReport::Status s)
{
   switch( s )
   {
   case VerifyReport::Status::Verified:
      return "verified";
   case VerifyReport::Status::Rejected:
      return "rejected";
   case VerifyReport::Status::Error:
      break;
   }
   return "error";
}

py::dict report_dict(const VerifyReport& r)
{
   py::dict d;
   d["status"] = status_name(r.status);
   d["exit_code"] = r.exit_code();
   d["verdict"] = r.verdict ? py::object(verdict_dict(*r.verdict)) : py::object(py::none());
   d["failed_step"] = r.failed_step;
   d["failed_line"] = r.failed_line;
   d["rule"] = r.rule;
   d["message"] = r.message;
   d["steps"] = r.stats.steps;
   d["max_live"] = r.stats.max_live;
   d["summary"] = r.format(false);
   return d;
}

py::dict verify(const std::string& certificate, std::optional<std::string> problem)
{
   std::istringstream in(certificate);
   if( !problem )
      return report_dict(verify_stream(in, nullptr));
   Problem p;
   try
   {
      p = parse_problem(*problem);
   }
   catch( const CertError& e )
   {
      VerifyReport r;
      r.status = VerifyReport::Status::Error;
      r.message = e.what();
      return report_dict(r);
   }
   return report_dict(verify_stream(in, &p));
}

py::dict certify(const std::string& problem, bool sst, bool lex, bool cg, bool cover)
{
   CertifyResult r = solve_and_certify(parse_problem(problem), {sst, lex, cg, cover});
   py::dict d;
   d["verdict"] = verdict_dict(r.verdict);
   d["nodes"] = r.nodes;
   d["certificate"] = serialize(r.certificate);
   return d;
}

py::dict oracle(const std::string& problem, std::uint64_t max_points)
{
   OracleResult r = brute_force_optimum(parse_problem(problem), max_points);
   py::dict d;
   d["verdict"] = verdict_dict(r.verdict);
   if( r.argmin )
   {
      py::list xs;
      for( const auto& x : *r.argmin )
         xs.append(to_string(x));
      d["argmin"] = xs;
   }
   else
      d["argmin"] = py::none();
   return d;
}

py::dict parse_problem_text(const std::string& problem)
{
   Problem p = parse_problem(problem);
   py::dict d;
   d["n"] = p.n;
   d["integral"] = std::vector<int>(p.integral.begin(), p.integral.end());
   d["constraints"] = p.constraints.size();
   d["symmetries"] = p.symmetries;
   d["text"] = serialize_problem(p);
   return d;
}

}   // namespace

PYBIND11_MODULE(_core, m)
{
   auto error = py::register_exception<CertError>(m, "CertError", PyExc_ValueError);
   (void)error;
   m.def("verify", &verify, py::arg("certificate"), py::arg("problem") = py::none());
   m.def("certify", &certify, py::arg("problem"), py::arg("sst") = false, py::arg("lex") = false, py::arg("cg") = false,
         py::arg("cover") = false);
   m.def("oracle", &oracle, py::arg("problem"), py::arg("max_points") = 10'000'000);
   m.def("parse_problem", &parse_problem_text, py::arg("problem"));
}

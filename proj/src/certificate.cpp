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

#include "mipcert/certificate.hpp"

#include "mipcert/error.hpp"

#include <sstream>

namespace mipcert {

namespace {

template <class... Ts>
struct Overloaded : Ts...
{
   using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool parse_relation(const std::string& tok, Relation& rel, bool& strict)
{
   strict = false;
   if( tok == "<=" )
      rel = Relation::Le;
   else if( tok == ">=" )
      rel = Relation::Ge;
   else if( tok == "=" )
      rel = Relation::Eq;
   else if( tok == "<" )
   {
      rel = Relation::Le;
      strict = true;
   }
   else if( tok == ">" )
   {
      rel = Relation::Ge;
      strict = true;
   }
   else
      return false;
   return true;
}

const char* relation_token(const Inequality& i)
{
   switch( i.rel )
   {
   case Relation::Le: return i.strict ? "<" : "<=";
   case Relation::Ge: return i.strict ? ">" : ">=";
   case Relation::Eq: return "=";
   }
   return "?";
}

}   // namespace

void CertificateReader::error(const Line& l, const std::string& msg) const
{
   fail(ErrorKind::Syntax, "line " + std::to_string(l.number) + ": " + msg);
}

bool CertificateReader::fetch(Line& line)
{
   if( pending_ )
   {
      line = std::move(*pending_);
      pending_.reset();
      return true;
   }
   std::string text;
   while( std::getline(in_, text) )
   {
      ++line_no_;
      if( auto hash = text.find('#'); hash != std::string::npos )
         text.resize(hash);
      std::istringstream ss(text);
      line.tokens.clear();
      for( std::string tok; ss >> tok; )
         line.tokens.push_back(std::move(tok));
      if( line.tokens.empty() )
         continue;
      line.number = line_no_;
      return true;
   }
   if( in_.bad() )
      fail(ErrorKind::Io, "read error at line " + std::to_string(line_no_));
   return false;
}

CertificateReader::Line CertificateReader::expect_line(const char* context)
{
   Line l;
   if( !fetch(l) )
      fail(ErrorKind::Syntax, "line " + std::to_string(line_no_) + ": unexpected end of input in " + context);
   return l;
}

LinExpr CertificateReader::parse_dense(const Line& l, std::size_t& pos, bool allow_const) const
{
   LinExpr e;
   for( int j = 1; j <= dim_; ++j, ++pos )
   {
      if( pos >= l.tokens.size() )
         error(l, "expected " + std::to_string(dim_) + " coefficients");
      e.add_term(j, parse_rat(l.tokens[pos]));
   }
   if( allow_const && pos + 1 < l.tokens.size() && l.tokens[pos] == "CONST" )
   {
      e.set_constant(parse_rat(l.tokens[pos + 1]));
      pos += 2;
   }
   return e;
}

Inequality CertificateReader::parse_ineq(const Line& l, std::size_t& pos) const
{
   LinExpr lhs = parse_dense(l, pos, false);
   Relation rel;
   bool strict;
   if( pos + 1 >= l.tokens.size() || !parse_relation(l.tokens[pos], rel, strict) )
      error(l, "expected relation and right-hand side");
   Rat rhs = parse_rat(l.tokens[pos + 1]);
   pos += 2;
   return Inequality::make(std::move(lhs), rel, std::move(rhs), strict);
}

Constraint CertificateReader::parse_constraint(const Line& l, std::size_t& pos) const
{
   if( pos < l.tokens.size() && l.tokens[pos] == "IF" )
   {
      ++pos;
      std::vector<Inequality> assumptions;
      for( ;; )
      {
         assumptions.push_back(parse_ineq(l, pos));
         if( pos < l.tokens.size() && l.tokens[pos] == "AND" )
         {
            ++pos;
            continue;
         }
         if( pos < l.tokens.size() && l.tokens[pos] == "THEN" )
         {
            ++pos;
            break;
         }
         error(l, "expected AND or THEN");
      }
      return make_implication(std::move(assumptions), parse_ineq(l, pos));
   }
   return parse_ineq(l, pos);
}

ConstraintId CertificateReader::parse_cited(const Line& l, const std::string& tok) const
{
   ConstraintId id = 0;
   try
   {
      std::size_t used = 0;
      id = std::stoll(tok, &used);
      if( used != tok.size() )
         throw std::invalid_argument(tok);
   }
   catch( const std::exception& )
   {
      error(l, "malformed id '" + tok + "'");
   }
   if( id > watermark_ )
      fail(ErrorKind::ForwardReference, "line " + std::to_string(l.number) + ": id " + tok + " is cited before it is defined");
   return id;
}

namespace {

long long parse_int(const std::string& tok, std::size_t line)
{
   try
   {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if( used == tok.size() )
         return v;
   }
   catch( const std::exception& )
   {
   }
   fail(ErrorKind::Syntax, "line " + std::to_string(line) + ": expected integer, got '" + tok + "'");
}

}   // namespace

Subproof CertificateReader::parse_subproof()
{
   Subproof sub;
   for( ;; )
   {
      Line l = expect_line("subproof");
      const std::string& kw = l.tokens[0];
      if( kw == "->" )
      {
         std::size_t pos = 1;
         sub.target = parse_ineq(l, pos);
         if( pos != l.tokens.size() )
            error(l, "trailing tokens after target");
         return sub;
      }
      if( kw == "ROUND" )
      {
         sub.steps.emplace_back(RoundStep{});
         continue;
      }
      if( kw != "LIN" )
         error(l, "expected LIN, ROUND or ->, got '" + kw + "'");
      LinStep step;
      for( std::size_t k = 1; k < l.tokens.size(); ++k )
      {
         const std::string& tok = l.tokens[k];
         auto colon = tok.rfind(':');
         if( colon == std::string::npos || colon == 0 )
            error(l, "premise '" + tok + "' needs the form ref:multiplier");
         std::string ref = tok.substr(0, colon);
         PremiseRef pr;
         if( ref == "G" )
            pr.kind = PremiseRef::Kind::Objective;
         else if( ref == "@" )
            pr.kind = PremiseRef::Kind::Previous;
         else if( ref[0] == 'A' || ref[0] == 'H' )
         {
            pr.kind = ref[0] == 'A' ? PremiseRef::Kind::Local : PremiseRef::Kind::Hyp;
            pr.id = parse_int(ref.substr(1), l.number);
         }
         else
            pr.id = parse_cited(l, ref);
         step.terms.emplace_back(pr, parse_rat(tok.substr(colon + 1)));
      }
      sub.steps.emplace_back(std::move(step));
   }
}

Witness CertificateReader::parse_witness()
{
   Witness w;
   w.map.dim = dim_;
   for( ;; )
   {
      Line l = expect_line("witness");
      const std::string& kw = l.tokens[0];
      if( kw == "END" )
         return w;
      if( kw == "W" )
      {
         if( l.tokens.size() < 2 )
            error(l, "W needs a variable index");
         long long j = parse_int(l.tokens[1], l.number);
         if( j < 1 || j > dim_ )
            error(l, "witness row index out of range");
         std::size_t pos = 2;
         LinExpr row = parse_dense(l, pos, true);
         if( pos != l.tokens.size() )
            error(l, "trailing tokens in witness row");
         if( !w.map.rows.emplace(static_cast<int>(j), std::move(row)).second )
            error(l, "duplicate witness row");
      }
      else if( kw == "SUB" )
      {
         if( l.tokens.size() != 2 )
            error(l, "SUB needs one target");
         WitnessProof p;
         if( l.tokens[1] == "SELF" )
            p.kind = WitnessProof::Kind::Self;
         else if( l.tokens[1] == "OBJ" )
            p.kind = WitnessProof::Kind::Objective;
         else
            p.id = parse_cited(l, l.tokens[1]);
         p.proof = parse_subproof();
         w.proofs.push_back(std::move(p));
      }
      else if( kw == "EQ" || kw == "GAP" )
      {
         if( l.tokens.size() != 3 )
            error(l, kw + " needs a node and a position");
         OrderEvidence ev;
         ev.kind = kw == "EQ" ? Evidence::Equal : Evidence::Gap;
         if( l.tokens[1] != "*" )
            ev.node = parse_int(l.tokens[1], l.number);
         long long pos = parse_int(l.tokens[2], l.number);
         if( pos < 1 )
            error(l, "positions are 1-based");
         ev.position = static_cast<std::size_t>(pos);
         ev.proofs.push_back(parse_subproof());
         if( ev.kind == Evidence::Equal )
            ev.proofs.push_back(parse_subproof());
         w.evidence.push_back(std::move(ev));
      }
      else
         error(l, "unexpected '" + kw + "' in witness block");
   }
}

BranchTree CertificateReader::parse_tree()
{
   BranchTree t;
   for( ;; )
   {
      Line l = expect_line("tree");
      if( l.tokens[0] == "END" )
         return t;
      if( l.tokens[0] != "NODE" || l.tokens.size() < 3 )
         error(l, "expected NODE id parent ...");
      NodeId id = parse_int(l.tokens[1], l.number);
      TreeNode node;
      if( l.tokens[2] != "-" )
         node.parent = parse_int(l.tokens[2], l.number);
      std::size_t pos = 3;
      if( pos < l.tokens.size() && l.tokens[pos] == "BR" )
      {
         if( pos + 3 >= l.tokens.size() )
            error(l, "BR needs a variable and two bounds");
         Branch b;
         b.var = static_cast<int>(parse_int(l.tokens[pos + 1], l.number));
         if( l.tokens[pos + 2] != "*" )
            b.lo = parse_rat(l.tokens[pos + 2]);
         if( l.tokens[pos + 3] != "*" )
            b.hi = parse_rat(l.tokens[pos + 3]);
         node.branch = b;
         pos += 4;
      }
      if( pos >= l.tokens.size() || l.tokens[pos] != "SIGMA" )
         error(l, "expected SIGMA");
      for( ++pos; pos < l.tokens.size() && l.tokens[pos] != "REFS"; ++pos )
         node.sigma.push_back(static_cast<int>(parse_int(l.tokens[pos], l.number)));
      if( pos >= l.tokens.size() )
         error(l, "expected REFS");
      for( ++pos; pos < l.tokens.size(); ++pos )
         node.bound_refs.push_back(parse_cited(l, l.tokens[pos]));
      if( !t.nodes.emplace(id, std::move(node)).second )
         error(l, "duplicate node id");
   }
}

std::optional<Problem> CertificateReader::read_problem()
{
   Problem p;
   bool have_var = false;
   bool any = false;
   Line l;
   while( fetch(l) )
   {
      const std::string& kw = l.tokens[0];
      if( kw == "MIPCERT" )
      {
         if( l.tokens.size() != 2 || l.tokens[1] != "1" )
            error(l, "unsupported format version");
         continue;
      }
      if( kw == "PROOF" )
      {
         in_proof_ = true;
         break;
      }
      if( !any && kw != "VAR" )
      {
         // a bare step list: the problem comes from elsewhere
         push_back(std::move(l));
         return std::nullopt;
      }
      any = true;
      if( kw == "VAR" )
      {
         if( have_var || l.tokens.size() != 2 )
            error(l, "VAR must appear once with one argument");
         long long n = parse_int(l.tokens[1], l.number);
         if( n < 0 )
            error(l, "negative dimension");
         p.n = static_cast<int>(n);
         dim_ = p.n;
         have_var = true;
         continue;
      }
      if( !have_var )
         error(l, "VAR must come first");
      if( kw == "INT" )
      {
         for( std::size_t k = 1; k < l.tokens.size(); ++k )
            p.integral.insert(static_cast<int>(parse_int(l.tokens[k], l.number)));
      }
      else if( kw == "OBJ" )
      {
         std::size_t pos = 1;
         p.objective = parse_dense(l, pos, true);
         if( pos != l.tokens.size() )
            error(l, "trailing tokens in OBJ");
      }
      else if( kw == "CON" )
      {
         if( l.tokens.size() < 2 )
            error(l, "CON needs an id");
         ConstraintId id = parse_int(l.tokens[1], l.number);
         std::size_t pos = 2;
         Constraint c = parse_constraint(l, pos);
         if( pos != l.tokens.size() )
            error(l, "trailing tokens in CON");
         p.constraints.emplace_back(id, std::move(c));
         watermark_ = std::max(watermark_, id);
      }
      else if( kw == "SYM" )
      {
         std::vector<int> gen;
         for( std::size_t k = 1; k < l.tokens.size(); ++k )
            gen.push_back(static_cast<int>(parse_int(l.tokens[k], l.number)));
         p.symmetries.push_back(std::move(gen));
      }
      else
         error(l, "unexpected '" + kw + "' in problem section");
   }
   if( !any )
      return std::nullopt;
   if( !have_var )
      fail(ErrorKind::Syntax, "problem section lacks VAR");
   try
   {
      p.validate();
   }
   catch( const CertError& e )
   {
      fail(ErrorKind::Syntax, e.what());
   }
   return p;
}

void CertificateReader::set_problem(const Problem& p)
{
   dim_ = p.n;
   watermark_ = 0;
   for( const auto& [id, c] : p.constraints )
      watermark_ = std::max(watermark_, id);
}

std::optional<ProofStep> CertificateReader::next()
{
   Line l;
   for( ;; )
   {
      if( !fetch(l) )
         return std::nullopt;
      if( l.tokens[0] == "PROOF" && !in_proof_ )
      {
         in_proof_ = true;
         continue;
      }
      if( l.tokens[0] == "MIPCERT" && !in_proof_ )
         continue;
      break;
   }
   in_proof_ = true;
   step_line_ = l.number;
   const std::string& kw = l.tokens[0];
   const auto& t = l.tokens;
   auto need = [&](std::size_t n) {
      if( t.size() != n )
         error(l, kw + " expects " + std::to_string(n - 1) + " arguments");
   };
   auto new_id = [&](const std::string& tok) {
      ConstraintId id = parse_int(tok, l.number);
      return id;
   };

   if( kw == "IMPLIC" )
   {
      if( t.size() < 2 )
         error(l, "IMPLIC needs an id");
      ImplicStep s;
      s.id = new_id(t[1]);
      std::size_t pos = 2;
      Constraint c = parse_constraint(l, pos);
      if( pos != t.size() )
         error(l, "trailing tokens after IMPLIC constraint");
      if( auto* imp = std::get_if<Implication>(&c) )
      {
         s.assumptions = std::move(imp->assumptions);
         s.consequent = std::move(imp->consequent);
      }
      else
         s.consequent = std::get<Inequality>(c);
      s.proof = parse_subproof();
      watermark_ = std::max(watermark_, s.id);
      return s;
   }
   if( kw == "RESOLVE" )
   {
      need(6);
      ResolveStep s;
      s.id = new_id(t[1]);
      s.first = parse_cited(l, t[2]);
      s.first_index = static_cast<std::size_t>(parse_int(t[3], l.number));
      s.second = parse_cited(l, t[4]);
      s.second_index = static_cast<std::size_t>(parse_int(t[5], l.number));
      watermark_ = std::max(watermark_, s.id);
      return s;
   }
   if( kw == "SOL" )
   {
      need(static_cast<std::size_t>(dim_) + 1);
      SolutionStep s;
      for( std::size_t k = 1; k < t.size(); ++k )
         s.values.push_back(parse_rat(t[k]));
      return s;
   }
   if( kw == "OBJSWAP" )
   {
      ObjectiveStep s;
      std::size_t pos = 1;
      s.objective = parse_dense(l, pos, true);
      if( pos < t.size() )
      {
         if( t[pos] != "USING" )
            error(l, "expected USING");
         for( ++pos; pos < t.size(); ++pos )
         {
            auto colon = t[pos].rfind(':');
            if( colon == std::string::npos )
               error(l, "expected id:multiplier");
            s.multipliers.emplace_back(parse_cited(l, t[pos].substr(0, colon)), parse_rat(t[pos].substr(colon + 1)));
         }
      }
      return s;
   }
   if( kw == "RED" || kw == "DOM" )
   {
      if( t.size() < 2 )
         error(l, kw + " needs an id");
      StrengthenStep s;
      s.dominance = kw == "DOM";
      s.id = new_id(t[1]);
      std::size_t pos = 2;
      s.constraint = parse_constraint(l, pos);
      if( pos != t.size() )
         error(l, "trailing tokens after constraint");
      s.witness = parse_witness();
      watermark_ = std::max(watermark_, s.id);
      return s;
   }
   if( kw == "EPS" )
   {
      need(2);
      return EpsilonStep{parse_rat(t[1])};
   }
   if( kw == "XFER" )
   {
      need(2);
      return TransferStep{parse_cited(l, t[1])};
   }
   if( kw == "DEL" )
   {
      if( t.size() < 3 )
         error(l, "DEL needs a variant and ids");
      DeleteStep s;
      if( t[1] == "A" )
         s.variant = DeleteStep::Variant::A;
      else if( t[1] == "B" )
         s.variant = DeleteStep::Variant::B;
      else if( t[1] == "C" )
         s.variant = DeleteStep::Variant::C;
      else
         error(l, "DEL variant must be A, B or C");
      for( std::size_t k = 2; k < t.size(); ++k )
         s.ids.push_back(parse_cited(l, t[k]));
      if( s.variant != DeleteStep::Variant::A && s.ids.size() != 1 )
         error(l, "DEL B and DEL C take exactly one id");
      if( s.variant == DeleteStep::Variant::B )
         s.proof = parse_subproof();
      else if( s.variant == DeleteStep::Variant::C )
         s.witness = parse_witness();
      return s;
   }
   if( kw == "TREE" )
   {
      need(1);
      return TreeStep{parse_tree()};
   }
   if( kw == "EXT" )
   {
      need(1);
      ++dim_;
      return ExtendStep{};
   }
   if( kw == "GOAL" )
   {
      need(1);
      return GoalStep{};
   }
   error(l, "unknown step '" + kw + "'");
}

CertificateFile parse(std::string_view text)
{
   std::istringstream in{std::string(text)};
   CertificateReader reader(in);
   auto problem = reader.read_problem();
   if( !problem )
      fail(ErrorKind::Syntax, "certificate has no problem section");
   CertificateFile file{std::move(*problem), {}};
   while( auto step = reader.next() )
      file.steps.push_back(std::move(*step));
   return file;
}

Problem parse_problem(std::string_view text)
{
   std::istringstream in{std::string(text)};
   CertificateReader reader(in);
   auto problem = reader.read_problem();
   if( !problem )
      fail(ErrorKind::Syntax, "no problem section");
   return *problem;
}

namespace {

class Writer
{
 public:
   explicit Writer(int dim) : dim_(dim) {}

   std::string out;

   void dense(const LinExpr& e, bool with_const)
   {
      for( int j = 1; j <= dim_; ++j )
         out += (j > 1 ? " " : "") + to_string(e.coefficient(j));
      if( with_const && e.constant() != 0 )
         out += " CONST " + to_string(e.constant());
   }

   void ineq(const Inequality& i)
   {
      dense(i.lhs, false);
      out += std::string(dim_ > 0 ? " " : "") + relation_token(i) + " " + to_string(i.rhs);
   }

   void constraint(const Constraint& c)
   {
      if( const auto* imp = std::get_if<Implication>(&c) )
      {
         out += "IF ";
         for( std::size_t k = 0; k < imp->assumptions.size(); ++k )
         {
            if( k )
               out += " AND ";
            ineq(imp->assumptions[k]);
         }
         out += " THEN ";
         ineq(imp->consequent);
      }
      else if( const auto* i = std::get_if<Inequality>(&c) )
         ineq(*i);
      else
         fail(ErrorKind::InvalidArgument, "integrality markers have no textual constraint form");
   }

   void subproof(const Subproof& s, const std::string& indent)
   {
      for( const auto& st : s.steps )
      {
         if( std::holds_alternative<RoundStep>(st) )
         {
            out += indent + "ROUND\n";
            continue;
         }
         out += indent + "LIN";
         for( const auto& [ref, mult] : std::get<LinStep>(st).terms )
         {
            out += " ";
            switch( ref.kind )
            {
            case PremiseRef::Kind::Id: out += std::to_string(ref.id); break;
            case PremiseRef::Kind::Local: out += "A" + std::to_string(ref.id); break;
            case PremiseRef::Kind::Hyp: out += "H" + std::to_string(ref.id); break;
            case PremiseRef::Kind::Objective: out += "G"; break;
            case PremiseRef::Kind::Previous: out += "@"; break;
            }
            out += ":" + to_string(mult);
         }
         out += "\n";
      }
      out += indent + "-> ";
      ineq(s.target);
      out += "\n";
   }

   void witness(const Witness& w)
   {
      for( const auto& [j, row] : w.map.rows )
      {
         out += "  W " + std::to_string(j) + " ";
         dense(row, true);
         out += "\n";
      }
      for( const auto& p : w.proofs )
      {
         out += "  SUB ";
         switch( p.kind )
         {
         case WitnessProof::Kind::Id: out += std::to_string(p.id); break;
         case WitnessProof::Kind::Self: out += "SELF"; break;
         case WitnessProof::Kind::Objective: out += "OBJ"; break;
         }
         out += "\n";
         subproof(p.proof, "    ");
      }
      for( const auto& ev : w.evidence )
      {
         out += ev.kind == Evidence::Equal ? "  EQ " : "  GAP ";
         out += (ev.node ? std::to_string(*ev.node) : std::string("*")) + " " + std::to_string(ev.position) + "\n";
         for( const auto& p : ev.proofs )
            subproof(p, "    ");
      }
      out += "END\n";
   }

   void step(const ProofStep& step)
   {
      std::visit(Overloaded{[&](const ImplicStep& s) {
                               out += "IMPLIC " + std::to_string(s.id) + " ";
                               constraint(make_implication(s.assumptions, s.consequent));
                               out += "\n";
                               subproof(s.proof, "  ");
                            },
                            [&](const ResolveStep& s) {
                               out += "RESOLVE " + std::to_string(s.id) + " " + std::to_string(s.first) + " " +
                                      std::to_string(s.first_index) + " " + std::to_string(s.second) + " " +
                                      std::to_string(s.second_index) + "\n";
                            },
                            [&](const SolutionStep& s) {
                               out += "SOL";
                               for( const auto& v : s.values )
                                  out += " " + to_string(v);
                               out += "\n";
                            },
                            [&](const ObjectiveStep& s) {
                               out += "OBJSWAP ";
                               dense(s.objective, true);
                               if( !s.multipliers.empty() )
                               {
                                  out += " USING";
                                  for( const auto& [id, m] : s.multipliers )
                                     out += " " + std::to_string(id) + ":" + to_string(m);
                               }
                               out += "\n";
                            },
                            [&](const StrengthenStep& s) {
                               out += std::string(s.dominance ? "DOM " : "RED ") + std::to_string(s.id) + " ";
                               constraint(s.constraint);
                               out += "\n";
                               witness(s.witness);
                            },
                            [&](const EpsilonStep& s) { out += "EPS " + to_string(s.eps) + "\n"; },
                            [&](const TransferStep& s) { out += "XFER " + std::to_string(s.id) + "\n"; },
                            [&](const DeleteStep& s) {
                               out += "DEL ";
                               out += s.variant == DeleteStep::Variant::A ? "A" : s.variant == DeleteStep::Variant::B ? "B" : "C";
                               for( ConstraintId id : s.ids )
                                  out += " " + std::to_string(id);
                               out += "\n";
                               if( s.proof )
                                  subproof(*s.proof, "  ");
                               if( s.witness )
                                  witness(*s.witness);
                            },
                            [&](const TreeStep& s) {
                               out += "TREE\n";
                               for( const auto& [id, node] : s.tree.nodes )
                               {
                                  out += "  NODE " + std::to_string(id) + " " +
                                         (node.parent ? std::to_string(*node.parent) : std::string("-"));
                                  if( node.branch )
                                     out += " BR " + std::to_string(node.branch->var) + " " +
                                            (node.branch->lo ? to_string(*node.branch->lo) : std::string("*")) + " " +
                                            (node.branch->hi ? to_string(*node.branch->hi) : std::string("*"));
                                  out += " SIGMA";
                                  for( int sg : node.sigma )
                                     out += " " + std::to_string(sg);
                                  out += " REFS";
                                  for( ConstraintId r : node.bound_refs )
                                     out += " " + std::to_string(r);
                                  out += "\n";
                               }
                               out += "END\n";
                            },
                            [&](const ExtendStep&) {
                               out += "EXT\n";
                               ++dim_;
                            },
                            [&](const GoalStep&) { out += "GOAL\n"; }},
                 step);
   }

 private:
   int dim_;
};

}   // namespace

std::string serialize_problem(const Problem& p)
{
   Writer w(p.n);
   w.out = "MIPCERT 1\nVAR " + std::to_string(p.n) + "\n";
   if( !p.integral.empty() )
   {
      w.out += "INT";
      for( int j : p.integral )
         w.out += " " + std::to_string(j);
      w.out += "\n";
   }
   w.out += "OBJ ";
   w.dense(p.objective, true);
   w.out += "\n";
   for( const auto& [id, c] : p.constraints )
   {
      w.out += "CON " + std::to_string(id) + " ";
      w.constraint(c);
      w.out += "\n";
   }
   for( const auto& gen : p.symmetries )
   {
      w.out += "SYM";
      for( int j : gen )
         w.out += " " + std::to_string(j);
      w.out += "\n";
   }
   return w.out;
}

std::string serialize_steps(const std::vector<ProofStep>& steps, int dim)
{
   Writer w(dim);
   for( const auto& s : steps )
      w.step(s);
   return w.out;
}

std::string serialize(const CertificateFile& file)
{
   return serialize_problem(file.problem) + "PROOF\n" + serialize_steps(file.steps, file.problem.n);
}

}   // namespace mipcert

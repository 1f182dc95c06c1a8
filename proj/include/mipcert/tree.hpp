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

#ifndef MIPCERT_TREE_HPP_
#define MIPCERT_TREE_HPP_

#include "mipcert/inequality.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace mipcert {

using ConstraintId = std::int64_t;
using NodeId = std::int64_t;

/// Rational interval with optional (infinite when absent) endpoints.
struct Interval
{
   std::optional<Rat> lo;
   std::optional<Rat> hi;
   bool lo_strict = false;
   bool hi_strict = false;

   static Interval point(const Rat& v) { return Interval{v, v, false, false}; }

   bool empty() const;
   bool contains(const Rat& v) const;
   bool subset_of(const Interval& other) const;
   bool intersects(const Interval& other) const;
   Interval intersect(const Interval& other) const;
   /// Tightens to the smallest interval with integer endpoints holding the
   /// same integers.
   Interval round_integral() const;
   bool is_point(const Rat& v) const { return lo && hi && *lo == v && *hi == v && !lo_strict && !hi_strict; }

   bool operator==(const Interval& other) const = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Rat& factor, const Interval& a);

/// Per-variable intervals, 1-based access.
class Box
{
 public:
   explicit Box(int dim = 0) : iv_(static_cast<std::size_t>(dim)) {}

   int dim() const { return static_cast<int>(iv_.size()); }
   const Interval& operator[](int j) const { return iv_[static_cast<std::size_t>(j - 1)]; }
   Interval& operator[](int j) { return iv_[static_cast<std::size_t>(j - 1)]; }
   bool empty() const;
   Interval range(const LinExpr& e) const;

 private:
   std::vector<Interval> iv_;
};

/// x -> Qx + q with rows stored only where they differ from the identity.
struct AffineMap
{
   int dim = 0;
   std::map<int, LinExpr> rows;

   static AffineMap identity(int dim) { return AffineMap{dim, {}}; }

   LinExpr row(int j) const;
   bool touches(const LinExpr& e) const;
   LinExpr compose(const LinExpr& e) const;
   Inequality compose(const Inequality& ineq) const;
   std::vector<Rat> apply(const std::vector<Rat>& x) const;

   bool operator==(const AffineMap& other) const = default;
};

/// Branching constraint lo <= x_var <= hi (missing ends are infinite).
struct Branch
{
   int var = 0;
   std::optional<Rat> lo;
   std::optional<Rat> hi;

   Interval interval() const { return Interval{lo, hi, false, false}; }
   bool operator==(const Branch& other) const = default;
};

struct TreeNode
{
   std::optional<NodeId> parent;
   std::optional<Branch> branch;   // nullopt is the whole space
   std::vector<int> sigma;
   std::vector<ConstraintId> bound_refs;   // parallel to sigma
   std::vector<NodeId> children;

   bool operator==(const TreeNode& other) const = default;
};

struct BranchTree
{
   std::map<NodeId, TreeNode> nodes;
   NodeId root = 0;

   static BranchTree trivial();
   /// Recomputes children lists from parent pointers; returns false when
   /// some parent is unknown or there is not exactly one root.
   bool link();
   bool all_sigma_empty() const;

   bool operator==(const BranchTree& other) const = default;
};

}   // namespace mipcert

#endif

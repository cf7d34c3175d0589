#pragma once

// Hypothesis checker for the block-matrix sufficient criterion: given an edge
// matrix M and a shape (m_1 <= ... <= m_q, q >= 2), decides each hypothesis
// separately and reports the route under which Symm_N(delta(z, M)) != 0
// follows. A failed check says nothing about zero-ness.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symgraph/edge_matrix.hpp"
#include "symgraph/symmetrize.hpp"

namespace symgraph {

enum class CondStatus { kHolds, kFails, kInconclusive };
std::string to_string(CondStatus s);

// Indices are 0-based; blocks are (r, s) block indices, entries are matrix positions.
struct ConditionResult {
  CondStatus status = CondStatus::kHolds;
  std::string detail;
  std::optional<std::pair<std::size_t, std::size_t>> block;
  std::optional<std::pair<std::size_t, std::size_t>> entry;

  bool holds() const { return status == CondStatus::kHolds; }
};

enum class Route { kOneTwo, kOneThree, kFail };
std::string to_string(Route r);

struct Thm1Certificate {
  Shape shape;
  ConditionResult cond1;     // off-diagonal blocks strictly positive
  ConditionResult cond2;     // ||M_rs|| a function of (m_r, m_s), even when m_r = m_s
  ConditionResult cond3;     // every ||M_rs|| even
  ConditionResult cond_i;    // parts strictly increasing, or M* = 0
  ConditionResult cond_ii;   // product of block symmetrizations nonzero
  ConditionResult cond_iii;  // every entry of M* even
  ConditionResult cond_iv;   // least nonzero of M** > greatest entry of M*
  bool route_1_2 = false;
  bool route_1_3 = false;
  Route route = Route::kFail;
  // (m_r, m_s) -> ||M_rs||, first value seen for r < s.
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> b_table;
  std::optional<std::int64_t> min_offdiag;
  std::int64_t max_diagblock = 0;
  // Repeated parts with M* = 0: evenness of b(m, m) is then required as read.
  bool repeated_parts_branch = false;

  bool passes() const { return route != Route::kFail; }
  // "CERTIFIED-NONZERO" or "UNDECIDED-BY-THM1".
  std::string conclusion() const;
};

struct CheckOptions {
  SymmetrizeOptions block_symmetrize;  // budget for the block symmetrizations
};

// Throws DomainError when q < 2 or the shape does not total M's size.
Thm1Certificate check_theorem1(const EdgeMatrix& m, const Shape& shape, const CheckOptions& opts = {});

struct ShapeSearchResult {
  std::optional<Thm1Certificate> certificate;  // first passing shape
  std::size_t shapes_tried = 0;
};

// Tries every partition with at least two parts, lexicographically; N <= 12.
ShapeSearchResult search_shape(const EdgeMatrix& m, const CheckOptions& opts = {});

struct WeightDegree {
  std::int64_t weight = 0;      // ||M|| / 2
  std::int64_t max_degree = 0;  // max row sum
  bool regular = false;
};

WeightDegree weight_degree(const EdgeMatrix& m);

}  // namespace symgraph

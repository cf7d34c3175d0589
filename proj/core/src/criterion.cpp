#include "symgraph/criterion.hpp"

#include <algorithm>

#include "symgraph/errors.hpp"

namespace symgraph {

namespace {

ConditionResult fails(std::string detail) {
  ConditionResult c;
  c.status = CondStatus::kFails;
  c.detail = std::move(detail);
  return c;
}

ConditionResult holds(std::string detail = {}) {
  ConditionResult c;
  c.detail = std::move(detail);
  return c;
}

std::string block_name(std::size_t r, std::size_t s) {
  return "M_" + std::to_string(r + 1) + std::to_string(s + 1);
}

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

std::string to_string(CondStatus s) {
  switch (s) {
    case CondStatus::kHolds: return "HOLDS";
    case CondStatus::kFails: return "FAILS";
    case CondStatus::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(Route r) {
  switch (r) {
    case Route::kOneTwo: return "1&2";
    case Route::kOneThree: return "1&3";
    case Route::kFail: return "FAIL";
  }
  return "?";
}

std::string Thm1Certificate::conclusion() const { return passes() ? "CERTIFIED-NONZERO" : "UNDECIDED-BY-THM1"; }

Thm1Certificate check_theorem1(const EdgeMatrix& m, const Shape& shape, const CheckOptions& opts) {
  if (shape.blocks() < 2) throw DomainError("the criterion needs a shape with at least two parts");
  const BlockView view = block_decompose(m, shape);
  const std::size_t q = shape.blocks();
  Thm1Certificate c;
  c.shape = shape;

  // (1)
  c.cond1 = holds();
  for (std::size_t r = 0; r < q && c.cond1.holds(); ++r) {
    for (std::size_t s = r + 1; s < q && c.cond1.holds(); ++s) {
      const IntMatrix& b = view.block(r, s);
      for (std::size_t i = 0; i < b.rows() && c.cond1.holds(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
          if (b(i, j) <= 0) {
            const std::size_t gi = shape.offset(r) + i, gj = shape.offset(s) + j;
            c.cond1 = fails(block_name(r, s) + " has a zero entry at " + entry_name(gi, gj));
            c.cond1.block = {{r, s}};
            c.cond1.entry = {{gi, gj}};
            break;
          }
        }
      }
    }
  }

  // (2) and (3)
  c.cond2 = holds();
  c.cond3 = holds();
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t s = r + 1; s < q; ++s) {
      const std::int64_t b = view.block(r, s).norm();
      const auto key = std::make_pair(shape.part(r), shape.part(s));
      auto [it, inserted] = c.b_table.try_emplace(key, b);
      if (c.cond2.holds()) {
        if (!inserted && it->second != b) {
          c.cond2 = fails("||" + block_name(r, s) + "|| = " + std::to_string(b) + " but an earlier block with parts (" +
                          std::to_string(key.first) + "," + std::to_string(key.second) + ") has norm " +
                          std::to_string(it->second));
          c.cond2.block = {{r, s}};
        } else if (key.first == key.second && b % 2 != 0) {
          c.cond2 = fails("||" + block_name(r, s) + "|| = " + std::to_string(b) + " is odd for equal parts");
          c.cond2.block = {{r, s}};
        }
      }
      if (c.cond3.holds() && b % 2 != 0) {
        c.cond3 = fails("||" + block_name(r, s) + "|| = " + std::to_string(b) + " is odd");
        c.cond3.block = {{r, s}};
      }
    }
  }

  // (i)
  const bool star_zero = view.star.is_zero();
  if (shape.strictly_increasing()) c.cond_i = holds("parts strictly increasing");
  else if (star_zero) c.cond_i = holds("M* = 0");
  else c.cond_i = fails("repeated parts and M* != 0");
  c.repeated_parts_branch = shape.has_repeated_parts() && star_zero;

  // (ii)
  c.cond_ii = holds();
  for (std::size_t r = 0; r < q; ++r) {
    const IntMatrix& local = view.block(r, r);
    if (local.is_zero() || local.all_even()) continue;
    try {
      const ExactPoly f = symmetrize_full(graph_monomial(EdgeMatrix::validate(local)), opts.block_symmetrize);
      if (f.is_zero()) {
        c.cond_ii = fails("the symmetrization over block " + std::to_string(r + 1) + " vanishes");
        c.cond_ii.block = {{r, r}};
        break;
      }
    } catch (const BudgetExceeded& e) {
      c.cond_ii.status = CondStatus::kInconclusive;
      c.cond_ii.detail = "block " + std::to_string(r + 1) + ": " + e.what();
      c.cond_ii.block = {{r, r}};
    }
  }

  // (iii)
  c.cond_iii = holds();
  for (std::size_t i = 0; i < m.size() && c.cond_iii.holds(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (view.star(i, j) % 2 != 0) {
        c.cond_iii = fails("M* has the odd entry " + std::to_string(view.star(i, j)) + " at " + entry_name(i, j));
        c.cond_iii.entry = {{i, j}};
        break;
      }
    }
  }

  // (iv)
  c.max_diagblock = view.star.max_entry();
  c.min_offdiag = view.off_diag.matrix().min_positive_entry();
  if (!c.min_offdiag) {
    c.cond_iv = fails("M** has no nonzero entry");
  } else if (*c.min_offdiag > c.max_diagblock) {
    c.cond_iv = holds();
  } else {
    std::optional<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t i = 0; i < m.size() && !where; ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (view.off_diag(i, j) == *c.min_offdiag) {
          where = {{i, j}};
          break;
        }
    c.cond_iv = fails("least nonzero entry of M** is " + std::to_string(*c.min_offdiag) +
                      ", not above the greatest entry " + std::to_string(c.max_diagblock) + " of M*");
    c.cond_iv.entry = where;
  }

  c.route_1_2 = c.cond1.holds() && c.cond2.holds() && c.cond_i.holds() && c.cond_ii.holds() && c.cond_iv.holds();
  c.route_1_3 = c.cond1.holds() && c.cond3.holds() && c.cond_i.holds() && c.cond_iii.holds() && c.cond_iv.holds();
  c.route = c.route_1_2 ? Route::kOneTwo : c.route_1_3 ? Route::kOneThree : Route::kFail;
  return c;
}

ShapeSearchResult search_shape(const EdgeMatrix& m, const CheckOptions& opts) {
  if (m.size() > 12) throw BudgetExceeded("shape search is limited to N <= 12");
  ShapeSearchResult out;
  for (const Shape& s : enumerate_shapes(m.size(), 2)) {
    ++out.shapes_tried;
    Thm1Certificate c = check_theorem1(m, s, opts);
    if (c.passes()) {
      out.certificate = std::move(c);
      break;
    }
  }
  return out;
}

WeightDegree weight_degree(const EdgeMatrix& m) {
  WeightDegree wd;
  wd.weight = m.norm() / 2;
  const auto rows = m.row_sums();
  wd.max_degree = rows.empty() ? 0 : *std::max_element(rows.begin(), rows.end());
  wd.regular = m.regular_degree().has_value();
  return wd;
}

}  // namespace symgraph

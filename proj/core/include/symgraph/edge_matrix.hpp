#pragma once

// Edge matrices of loopless multigraphs, block decomposition against an
// ordered partition of the vertex set, and the graph-monomial map
//   delta(z, M) = prod_{i<j} (z_i - z_j)^{M_ij}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "symgraph/exact_poly.hpp"

namespace symgraph {

// Dense rectangular matrix of 64-bit integers; arithmetic is overflow-checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  std::int64_t row_sum(std::size_t i) const;
  std::int64_t col_sum(std::size_t j) const;
  std::vector<std::int64_t> row_sums() const;
  std::vector<std::int64_t> col_sums() const;
  // Sum of all entries (the norm ||A||).
  std::int64_t norm() const;
  std::int64_t max_entry() const;
  // Smallest strictly positive entry, if any.
  std::optional<std::int64_t> min_positive_entry() const;
  bool is_zero() const;
  bool all_positive() const;
  bool all_even() const;

  IntMatrix transposed() const;
  IntMatrix scaled(std::int64_t k) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  const std::vector<std::int64_t>& data() const { return a_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> a_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Why a candidate edge matrix was rejected.
enum class MatrixDefect { kNotSquare, kTooSmall, kAsymmetric, kNonzeroDiagonal, kNegativeEntry };

class MatrixError : public DomainError {
 public:
  MatrixError(MatrixDefect defect, std::size_t i, std::size_t j, const std::string& what)
      : DomainError(what), defect_(defect), i_(i), j_(j) {}
  MatrixDefect defect() const { return defect_; }
  std::size_t row() const { return i_; }
  std::size_t col() const { return j_; }

 private:
  MatrixDefect defect_;
  std::size_t i_, j_;
};

// Symmetric n x n matrix (n >= 2) of nonnegative integers with zero diagonal.
class EdgeMatrix {
 public:
  // Throws MatrixError naming the first defect found.
  static EdgeMatrix validate(const IntMatrix& raw);
  static EdgeMatrix validate(std::size_t n, const std::vector<std::int64_t>& row_major);
  // Strict upper triangle, row-major: a_12, a_13, ..., a_{n-1,n}.
  static EdgeMatrix from_upper(std::size_t n, const std::vector<std::int64_t>& upper);
  // Multigraph edge list with 1-based vertices; repeated pairs accumulate.
  static EdgeMatrix from_edges(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& edges);
  static EdgeMatrix zero(std::size_t n);

  std::size_t size() const { return m_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const { return m_; }

  std::vector<std::int64_t> upper() const;
  std::vector<std::int64_t> row_sums() const { return m_.row_sums(); }
  std::int64_t norm() const { return m_.norm(); }
  // Common row sum d when the matrix lies in E(n, d).
  std::optional<std::int64_t> regular_degree() const;
  std::int64_t max_entry() const { return m_.max_entry(); }
  bool is_zero() const { return m_.is_zero(); }
  bool all_even() const { return m_.all_even(); }

  EdgeMatrix scaled(std::int64_t k) const;
  // sigma M sigma^{-1}: vertex i is renamed sigma[i].
  EdgeMatrix relabeled(std::span<const std::size_t> sigma) const;
  // Principal submatrix on the given vertices (kept in the given order).
  IntMatrix principal(std::span<const std::size_t> vertices) const;
  // Removes vertex v; requires size() >= 3.
  EdgeMatrix without_vertex(std::size_t v) const;

  friend EdgeMatrix operator+(const EdgeMatrix& a, const EdgeMatrix& b);
  friend bool operator==(const EdgeMatrix&, const EdgeMatrix&) = default;

 private:
  explicit EdgeMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

// Ordered partition m_1 <= ... <= m_q of n.
class Shape {
 public:
  // Sorts the parts; permutation()[k] is the input position of sorted part k.
  static Shape from_parts(std::vector<std::size_t> parts);
  // Parses "3,3" style lists.
  static Shape parse(const std::string& text);

  const std::vector<std::size_t>& parts() const { return parts_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }
  std::size_t blocks() const { return parts_.size(); }
  std::size_t total() const { return total_; }
  std::size_t part(std::size_t r) const { return parts_[r]; }
  // 0-based first vertex of block r.
  std::size_t offset(std::size_t r) const { return offsets_[r]; }
  // 0-based vertex indices of block r (the index set A_r).
  std::vector<std::size_t> index_set(std::size_t r) const;
  std::size_t block_of(std::size_t vertex) const;
  bool strictly_increasing() const;
  bool has_repeated_parts() const { return !strictly_increasing(); }
  std::string to_string() const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> permutation_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

// All partitions of n into at least min_blocks parts, as nondecreasing shapes
// in lexicographic order.
std::vector<Shape> enumerate_shapes(std::size_t n, std::size_t min_blocks);

struct BlockView {
  Shape shape;
  EdgeMatrix star;        // block-diagonal part M*
  EdgeMatrix off_diag;    // M** (diagonal blocks zero)
  std::vector<std::vector<IntMatrix>> blocks;  // blocks[r][s] is m_r x m_s

  const IntMatrix& block(std::size_t r, std::size_t s) const { return blocks[r][s]; }
};

BlockView block_decompose(const EdgeMatrix& m, const Shape& shape);

// Assembles a symmetric block matrix from its upper blocks; blocks[r][s] for
// r < s must be m_r x m_s, diagonal blocks m_r x m_r. Lower blocks are ignored.
EdgeMatrix assemble_blocks(const Shape& shape, const std::vector<std::vector<IntMatrix>>& blocks);

// Standard matrices.
IntMatrix difference_pattern(std::size_t m, std::size_t n);  // D_(m,n): 0 where i == j, else 1
IntMatrix ones(std::size_t m, std::size_t n);
IntMatrix identity(std::size_t n);
EdgeMatrix complete_pattern(std::size_t n);                  // D_n

ExactPoly graph_monomial(const EdgeMatrix& m);

}  // namespace symgraph

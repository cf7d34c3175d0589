#include "symgraph/edge_matrix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace symgraph {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in matrix arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in matrix arithmetic");
  return r;
}

// ---- IntMatrix -------------------------------------------------------------

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::int64_t IntMatrix::row_sum(std::size_t i) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < cols_; ++j) s = checked_add(s, (*this)(i, j));
  return s;
}

std::int64_t IntMatrix::col_sum(std::size_t j) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s = checked_add(s, (*this)(i, j));
  return s;
}

std::vector<std::int64_t> IntMatrix::row_sums() const {
  std::vector<std::int64_t> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r[i] = row_sum(i);
  return r;
}

std::vector<std::int64_t> IntMatrix::col_sums() const {
  std::vector<std::int64_t> c(cols_);
  for (std::size_t j = 0; j < cols_; ++j) c[j] = col_sum(j);
  return c;
}

std::int64_t IntMatrix::norm() const {
  std::int64_t s = 0;
  for (auto x : a_) s = checked_add(s, x);
  return s;
}

std::int64_t IntMatrix::max_entry() const {
  if (a_.empty()) return 0;
  return *std::max_element(a_.begin(), a_.end());
}

std::optional<std::int64_t> IntMatrix::min_positive_entry() const {
  std::optional<std::int64_t> best;
  for (auto x : a_) {
    if (x > 0 && (!best || x < *best)) best = x;
  }
  return best;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::int64_t x) { return x == 0; });
}

bool IntMatrix::all_positive() const {
  return std::all_of(a_.begin(), a_.end(), [](std::int64_t x) { return x > 0; });
}

bool IntMatrix::all_even() const {
  return std::all_of(a_.begin(), a_.end(), [](std::int64_t x) { return x % 2 == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::scaled(std::int64_t k) const {
  IntMatrix r = *this;
  for (auto& x : r.a_) x = checked_mul(x, k);
  return r;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
  if (r0 + h > rows_ || c0 + w > cols_) throw DomainError("block exceeds matrix bounds");
  IntMatrix b(h, w);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < w; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DomainError("block exceeds matrix bounds");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix size mismatch in addition");
  IntMatrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = checked_add(a.a_[k], b.a_[k]);
  return r;
}

// ---- EdgeMatrix ------------------------------------------------------------

EdgeMatrix EdgeMatrix::validate(const IntMatrix& raw) {
  const std::size_t n = raw.rows();
  if (raw.cols() != n) {
    throw MatrixError(MatrixDefect::kNotSquare, 0, 0,
                      "edge matrix must be square, got " + std::to_string(n) + "x" + std::to_string(raw.cols()));
  }
  if (n < 1) throw MatrixError(MatrixDefect::kTooSmall, 0, 0, "edge matrix must have at least one vertex");
  for (std::size_t i = 0; i < n; ++i) {
    if (raw(i, i) != 0) {
      throw MatrixError(MatrixDefect::kNonzeroDiagonal, i, i,
                        "nonzero diagonal entry at (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (raw(i, j) < 0) {
        throw MatrixError(MatrixDefect::kNegativeEntry, i, j,
                          "negative entry at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (raw(i, j) != raw(j, i)) {
        throw MatrixError(MatrixDefect::kAsymmetric, i, j,
                          "asymmetric entries at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  return EdgeMatrix(raw);
}

EdgeMatrix EdgeMatrix::validate(std::size_t n, const std::vector<std::int64_t>& row_major) {
  if (row_major.size() != n * n) {
    throw MatrixError(MatrixDefect::kNotSquare, 0, 0, "expected " + std::to_string(n * n) + " entries");
  }
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row_major[i * n + j];
  return validate(m);
}

EdgeMatrix EdgeMatrix::from_upper(std::size_t n, const std::vector<std::int64_t>& upper) {
  if (upper.size() != n * (n - 1) / 2) {
    throw DomainError("upper triangle of a " + std::to_string(n) + "x" + std::to_string(n) + " matrix needs " +
                      std::to_string(n * (n - 1) / 2) + " entries, got " + std::to_string(upper.size()));
  }
  IntMatrix m(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = upper[k];
      m(j, i) = upper[k];
      ++k;
    }
  }
  return validate(m);
}

EdgeMatrix EdgeMatrix::from_edges(std::size_t n,
                                  const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& edges) {
  IntMatrix m(n, n);
  for (const auto& [i, j, mult] : edges) {
    if (i < 1 || j < 1 || i > n || j > n) throw DomainError("edge endpoint out of range");
    if (i >= j) throw DomainError("edge list entries need 1-based vertices with i < j");
    if (mult < 0) throw MatrixError(MatrixDefect::kNegativeEntry, i - 1, j - 1, "negative edge multiplicity");
    m(i - 1, j - 1) = checked_add(m(i - 1, j - 1), mult);
    m(j - 1, i - 1) = m(i - 1, j - 1);
  }
  return validate(m);
}

EdgeMatrix EdgeMatrix::zero(std::size_t n) { return validate(IntMatrix(n, n)); }

std::vector<std::int64_t> EdgeMatrix::upper() const {
  std::vector<std::int64_t> u;
  const std::size_t n = size();
  u.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) u.push_back(m_(i, j));
  return u;
}

std::optional<std::int64_t> EdgeMatrix::regular_degree() const {
  const auto r = row_sums();
  if (std::adjacent_find(r.begin(), r.end(), std::not_equal_to<>()) != r.end()) return std::nullopt;
  return r.front();
}

EdgeMatrix EdgeMatrix::scaled(std::int64_t k) const {
  if (k < 0) throw DomainError("edge matrices only scale by nonnegative integers");
  return EdgeMatrix(m_.scaled(k));
}

EdgeMatrix EdgeMatrix::relabeled(std::span<const std::size_t> sigma) const {
  const std::size_t n = size();
  if (sigma.size() != n) throw DomainError("relabeling permutation has the wrong length");
  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(sigma[i], sigma[j]) = m_(i, j);
  return EdgeMatrix(r);
}

IntMatrix EdgeMatrix::principal(std::span<const std::size_t> vertices) const {
  IntMatrix r(vertices.size(), vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = 0; b < vertices.size(); ++b) r(a, b) = m_(vertices[a], vertices[b]);
  return r;
}

EdgeMatrix EdgeMatrix::without_vertex(std::size_t v) const {
  if (size() < 2 || v >= size()) throw DomainError("cannot delete that vertex");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (i != v) keep.push_back(i);
  return EdgeMatrix(principal(keep));
}

EdgeMatrix operator+(const EdgeMatrix& a, const EdgeMatrix& b) { return EdgeMatrix(a.m_ + b.m_); }

// ---- Shape -----------------------------------------------------------------

Shape Shape::from_parts(std::vector<std::size_t> parts) {
  if (parts.empty()) throw DomainError("shape needs at least one part");
  if (std::any_of(parts.begin(), parts.end(), [](std::size_t p) { return p == 0; })) {
    throw DomainError("shape parts must be positive");
  }
  Shape s;
  s.permutation_.resize(parts.size());
  std::iota(s.permutation_.begin(), s.permutation_.end(), std::size_t{0});
  std::stable_sort(s.permutation_.begin(), s.permutation_.end(),
                   [&](std::size_t a, std::size_t b) { return parts[a] < parts[b]; });
  for (auto k : s.permutation_) s.parts_.push_back(parts[k]);
  std::size_t acc = 0;
  for (auto p : s.parts_) {
    s.offsets_.push_back(acc);
    acc += p;
  }
  s.total_ = acc;
  return s;
}

Shape Shape::parse(const std::string& text) {
  std::vector<std::size_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    if (b == std::string::npos) throw DomainError("empty part in shape '" + text + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item.substr(b), &used);
    } catch (const std::exception&) {
      throw DomainError("bad shape '" + text + "'");
    }
    if (v <= 0 || item.substr(b).find_first_not_of(' ', used) != std::string::npos) {
      throw DomainError("bad shape '" + text + "'");
    }
    parts.push_back(static_cast<std::size_t>(v));
  }
  return from_parts(std::move(parts));
}

std::vector<std::size_t> Shape::index_set(std::size_t r) const {
  std::vector<std::size_t> idx(parts_[r]);
  std::iota(idx.begin(), idx.end(), offsets_[r]);
  return idx;
}

std::size_t Shape::block_of(std::size_t vertex) const {
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (vertex < offsets_[r] + parts_[r]) return r;
  }
  throw DomainError("vertex outside the shape");
}

bool Shape::strictly_increasing() const {
  return std::adjacent_find(parts_.begin(), parts_.end(), std::greater_equal<>()) == parts_.end();
}

std::string Shape::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (r) s += ',';
    s += std::to_string(parts_[r]);
  }
  return s;
}

namespace {

void shapes_rec(std::size_t remaining, std::size_t min_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = min_part; p <= remaining; ++p) {
    cur.push_back(p);
    shapes_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Shape> enumerate_shapes(std::size_t n, std::size_t min_blocks) {
  std::vector<std::vector<std::size_t>> raw;
  std::vector<std::size_t> cur;
  shapes_rec(n, 1, cur, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<Shape> out;
  for (auto& p : raw) {
    if (p.size() >= min_blocks) out.push_back(Shape::from_parts(p));
  }
  return out;
}

// ---- Blocks ----------------------------------------------------------------

BlockView block_decompose(const EdgeMatrix& m, const Shape& shape) {
  if (shape.total() != m.size()) {
    throw DomainError("shape " + shape.to_string() + " does not partition " + std::to_string(m.size()) + " vertices");
  }
  const std::size_t n = m.size();
  const std::size_t q = shape.blocks();
  IntMatrix star(n, n), off(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (shape.block_of(i) == shape.block_of(j)) star(i, j) = m(i, j);
      else off(i, j) = m(i, j);
    }
  }
  std::vector<std::vector<IntMatrix>> blocks(q, std::vector<IntMatrix>(q));
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t s = 0; s < q; ++s)
      blocks[r][s] = m.matrix().block(shape.offset(r), shape.offset(s), shape.part(r), shape.part(s));
  return BlockView{shape, EdgeMatrix::validate(star), EdgeMatrix::validate(off), std::move(blocks)};
}

EdgeMatrix assemble_blocks(const Shape& shape, const std::vector<std::vector<IntMatrix>>& blocks) {
  const std::size_t q = shape.blocks();
  if (blocks.size() != q) throw DomainError("block grid does not match the shape");
  IntMatrix m(shape.total(), shape.total());
  for (std::size_t r = 0; r < q; ++r) {
    if (blocks[r].size() != q) throw DomainError("block grid does not match the shape");
    for (std::size_t s = r; s < q; ++s) {
      const IntMatrix& b = blocks[r][s];
      if (b.rows() != shape.part(r) || b.cols() != shape.part(s)) {
        throw DomainError("block (" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ") has the wrong size");
      }
      m.set_block(shape.offset(r), shape.offset(s), b);
      if (s != r) m.set_block(shape.offset(s), shape.offset(r), b.transposed());
    }
  }
  return EdgeMatrix::validate(m);
}

IntMatrix difference_pattern(std::size_t m, std::size_t n) {
  IntMatrix d(m, n, 1);
  for (std::size_t i = 0; i < std::min(m, n); ++i) d(i, i) = 0;
  return d;
}

IntMatrix ones(std::size_t m, std::size_t n) { return IntMatrix(m, n, 1); }

IntMatrix identity(std::size_t n) {
  IntMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 1;
  return d;
}

EdgeMatrix complete_pattern(std::size_t n) { return EdgeMatrix::validate(difference_pattern(n, n)); }

ExactPoly graph_monomial(const EdgeMatrix& m) {
  const std::size_t n = m.size();
  ExactPoly p = ExactPoly::one(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto a = m(i, j);
      if (a == 0) continue;
      if (a > std::numeric_limits<std::uint32_t>::max()) throw DomainError("edge multiplicity too large");
      p *= difference_power(n, i, j, static_cast<std::uint32_t>(a));
    }
  }
  return p;
}

}  // namespace symgraph

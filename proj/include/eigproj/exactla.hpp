#pragma once

// Exact dense linear algebra over prime fields F_p, 2 <= p < 2^16.
//
// Row reduction always picks the leftmost column that still has a nonzero
// entry below the current row, and within it the topmost such row. There is
// no pivoting heuristic, so every result is a deterministic function of the
// input bits.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace eigproj {

using Residue = std::uint32_t;
using Vector = std::vector<Residue>;

class FieldSpec {
 public:
  /// Throws eigproj::Error(Malformed) unless p is a prime in [2, 2^16).
  explicit FieldSpec(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Residue reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Multiplicative inverse; a must be nonzero.
  Residue inv(Residue a) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

class FpMatrix {
 public:
  FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Entries row-major; throws Malformed on size mismatch or entries >= p.
  FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
           std::vector<Residue> entries);

  static FpMatrix identity(FieldSpec field, std::size_t n);
  /// Reduces arbitrary integers mod p. Rows must have equal length.
  static FpMatrix from_rows(FieldSpec field,
                            const std::vector<std::vector<std::int64_t>>& rows);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Residue& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  const std::vector<Residue>& entries() const { return data_; }

  FpMatrix transpose() const;
  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix scaled(Residue s) const;
  Vector apply(std::span<const Residue> v) const;

  /// Columns listed in `cols`, in that order.
  FpMatrix select_columns(std::span<const std::size_t> cols) const;
  /// Rows listed in `rows`, in that order.
  FpMatrix select_rows(std::span<const std::size_t> rows) const;

  bool is_zero() const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

struct RowEchelon {
  FpMatrix reduced;                 // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row of `reduced`
};

RowEchelon rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);
/// Rows form a basis of {x : m x = 0}. The basis vector for the k-th free
/// column of rref(m) has a 1 there and 0 at every other free column.
FpMatrix kernel(const FpMatrix& m);
/// Some x with a x = b when b lies in the column space; free variables are 0.
std::optional<Vector> solve(const FpMatrix& a, std::span<const Residue> b);
/// (a ⊗ b)[(i1,i2),(j1,j2)] = a[i1,j1] * b[i2,j2], first factor outermost.
FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);
/// Direct sum diag(a, b).
FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b);

/// Sparse row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Residue>>;

SparseRow to_sparse(std::span<const Residue> dense);

/// Incremental row echelon basis over sparse rows. Each stored row has
/// leading coefficient 1 at a column no other stored row leads at.
class SparseEchelon {
 public:
  SparseEchelon(FieldSpec field, std::size_t cols);

  /// Reduces `row` against the basis; stores it if independent.
  /// Returns the leading column of the stored row, or nullopt if dependent.
  std::optional<std::size_t> insert(SparseRow row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] != kNone; }

  /// Fully reduced rows (every pivot column cleared from other rows),
  /// sorted by leading column.
  std::vector<SparseRow> reduced_rows() const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  SparseRow reduce(SparseRow row) const;

  FieldSpec field_;
  std::size_t cols_;
  std::vector<std::size_t> pivot_row_;
  std::vector<SparseRow> rows_;
};

/// Feasibility of A x = b assembled one equation at a time.
class LinearSystem {
 public:
  LinearSystem(FieldSpec field, std::size_t unknowns);

  void add_equation(SparseRow coefficients, Residue rhs);
  void add_equation(std::span<const Residue> coefficients, Residue rhs);

  bool consistent() const { return consistent_; }
  std::size_t unknowns() const { return unknowns_; }
  /// Deterministic solution with free variables 0, or nullopt.
  std::optional<Vector> solution() const;

 private:
  std::size_t unknowns_;
  SparseEchelon echelon_;
  bool consistent_ = true;
};

/// V / W for a subspace W of F_p^ambient_dim. Relations are kept sparse;
/// the dense views are built on request.
class QuotientSpace {
 public:
  QuotientSpace(FieldSpec field, std::size_t ambient_dim, std::vector<SparseRow> relations,
                std::vector<std::size_t> free_columns);

  FieldSpec field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t quotient_dim() const { return free_columns_.size(); }
  /// Fully reduced echelon rows spanning the relation subspace.
  const std::vector<SparseRow>& relation_rows() const { return relations_; }
  /// Ambient basis vectors whose classes form the quotient basis.
  const std::vector<std::size_t>& free_columns() const { return free_columns_; }

  /// Dense relation_rows(), rank x ambient_dim.
  FpMatrix relation_basis() const;
  /// quotient_dim x ambient_dim.
  FpMatrix projection() const;
  /// ambient_dim x quotient_dim; projection() * section() = identity.
  FpMatrix section() const;

  Vector project(std::span<const Residue> v) const;

 private:
  FieldSpec field_;
  std::size_t ambient_dim_;
  std::vector<SparseRow> relations_;
  std::vector<std::size_t> free_columns_;
  std::vector<std::size_t> free_index_;  // ambient column -> quotient index or npos
  std::vector<std::size_t> lead_row_;    // ambient column -> relation row it leads, or npos
};

QuotientSpace quotient_by(FieldSpec field, std::size_t ambient_dim,
                          const FpMatrix& relations);
QuotientSpace quotient_by(const SparseEchelon& relations);

}  // namespace eigproj

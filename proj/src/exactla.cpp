#include "eigproj/exactla.hpp"

#include <algorithm>
#include <string>

#include "eigproj/error.hpp"

namespace eigproj {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "malformed";
    case ErrorKind::InvalidCategory: return "invalid-category";
    case ErrorKind::InvalidModule: return "invalid-module";
    case ErrorKind::NotGorenstein: return "not-gorenstein";
    case ErrorKind::NotFree: return "not-free";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::CapExceeded: return "cap-exceeded";
  }
  return "unknown";
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p)) {
    throw Error(ErrorKind::Malformed,
                "field characteristic must be a prime below 65536, got " +
                    std::to_string(p));
  }
}

Residue FieldSpec::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorKind::Precondition, "inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return reduce(t);
}

// --- FpMatrix ---------------------------------------------------------------

FpMatrix::FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
                   std::vector<Residue> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::Malformed, "matrix entry count does not match shape");
  }
  for (Residue v : data_) {
    if (v >= field.p()) throw Error(ErrorKind::Malformed, "matrix entry not reduced mod p");
  }
}

FpMatrix FpMatrix::identity(FieldSpec field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(FieldSpec field,
                             const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::Malformed, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

Vector FpMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw Error(ErrorKind::Malformed, "matrix product shape or field mismatch");
  }
  const std::uint64_t p = field_.p();
  FpMatrix out(field_, rows_, rhs.cols_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      auto brow = rhs.row(k);
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        acc[c] = (acc[c] + a * brow[c]) % p;
      }
    }
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) = static_cast<Residue>(acc[c]);
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorKind::Malformed, "matrix sum shape mismatch");
  }
  FpMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorKind::Malformed, "matrix difference shape mismatch");
  }
  FpMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

FpMatrix FpMatrix::scaled(Residue s) const {
  FpMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], s);
  return out;
}

Vector FpMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::Malformed, "vector length mismatch");
  const std::uint64_t p = field_.p();
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    auto row_r = row(r);
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{row_r[c]} * v[c]) % p;
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

FpMatrix FpMatrix::select_columns(std::span<const std::size_t> cols) const {
  FpMatrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = (*this)(r, cols[k]);
  return out;
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> rows) const {
  FpMatrix out(field_, rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto src = row(rows[k]);
    std::copy(src.begin(), src.end(), out.row(k).begin());
  }
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

// --- dense elimination ------------------------------------------------------

namespace {

// In-place reduced row echelon form. Returns pivot columns; rows beyond the
// rank are left zero.
std::vector<std::size_t> reduce_in_place(FpMatrix& m) {
  const FieldSpec f = m.field();
  const std::uint64_t p = f.p();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      auto a = m.row(sel);
      auto b = m.row(row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(row);
    Residue inv = f.inv(prow[col]);
    for (std::size_t c = col; c < m.cols(); ++c) prow[c] = f.mul(prow[c], inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      auto target = m.row(r);
      std::uint64_t factor = target[col];
      if (factor == 0) continue;
      std::uint64_t neg = p - factor;
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (prow[c] != 0) target[c] = static_cast<Residue>((target[c] + neg * prow[c]) % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RowEchelon rref(const FpMatrix& m) {
  FpMatrix work = m;
  auto pivots = reduce_in_place(work);
  std::vector<std::size_t> keep(pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return {work.select_rows(keep), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) {
  FpMatrix work = m;
  return reduce_in_place(work).size();
}

FpMatrix kernel(const FpMatrix& m) {
  const FieldSpec f = m.field();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMatrix basis(f, free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(k, fc) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(k, e.pivots[r]) = f.neg(e.reduced(r, fc));
    }
  }
  return basis;
}

std::optional<Vector> solve(const FpMatrix& a, std::span<const Residue> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::Malformed, "solve: rhs length mismatch");
  FpMatrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto src = a.row(r);
    std::copy(src.begin(), src.end(), aug.row(r).begin());
    aug(r, a.cols()) = b[r] % a.field().p();
  }
  auto pivots = reduce_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::Malformed, "kronecker: field mismatch");
  const FieldSpec f = a.field();
  FpMatrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      Residue s = a(i1, j1);
      if (s == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = f.mul(s, b(i2, j2));
    }
  return out;
}

FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

// --- sparse elimination -----------------------------------------------------

SparseRow to_sparse(std::span<const Residue> dense) {
  SparseRow row;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (dense[c] != 0) row.emplace_back(c, dense[c]);
  return row;
}

namespace {

// a - s*b over F_p, both sorted by column.
SparseRow axpy(const FieldSpec& f, const SparseRow& a, Residue s, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.neg(f.mul(s, b[j].second)));
      ++j;
    } else {
      Residue v = f.sub(a[i].second, f.mul(s, b[j].second));
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize(const FieldSpec& f, SparseRow& row) {
  std::sort(row.begin(), row.end());
  SparseRow merged;
  merged.reserve(row.size());
  for (auto [c, v] : row) {
    v %= f.p();
    if (!merged.empty() && merged.back().first == c) {
      merged.back().second = f.add(merged.back().second, v);
    } else {
      merged.emplace_back(c, v);
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  row = std::move(merged);
}

}  // namespace

SparseEchelon::SparseEchelon(FieldSpec field, std::size_t cols)
    : field_(field), cols_(cols), pivot_row_(cols, kNone) {}

SparseRow SparseEchelon::reduce(SparseRow row) const {
  while (!row.empty()) {
    std::size_t lead = row.front().first;
    std::size_t idx = pivot_row_[lead];
    if (idx == kNone) break;
    row = axpy(field_, row, row.front().second, rows_[idx]);
  }
  return row;
}

std::optional<std::size_t> SparseEchelon::insert(SparseRow row) {
  normalize(field_, row);
  if (!row.empty() && row.back().first >= cols_) {
    throw Error(ErrorKind::Malformed, "sparse row column out of range");
  }
  row = reduce(std::move(row));
  if (row.empty()) return std::nullopt;
  Residue inv = field_.inv(row.front().second);
  for (auto& e : row) e.second = field_.mul(e.second, inv);
  std::size_t lead = row.front().first;
  pivot_row_[lead] = rows_.size();
  rows_.push_back(std::move(row));
  return lead;
}

std::vector<SparseRow> SparseEchelon::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows_[a].front().first < rows_[b].front().first;
  });
  // Back substitution from the rightmost pivot: every non-leading entry of a
  // row lies right of its lead, so rows processed earlier are already final.
  std::vector<SparseRow> done(rows_.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    SparseRow row = rows_[*it];
    SparseRow out{row.front()};
    SparseRow tail(row.begin() + 1, row.end());
    while (!tail.empty()) {
      auto [c, v] = tail.front();
      std::size_t idx = pivot_row_[c];
      if (idx == kNone) {
        out.push_back(tail.front());
        tail.erase(tail.begin());
      } else {
        tail = axpy(field_, tail, v, done[idx]);
      }
    }
    done[*it] = std::move(out);
  }
  std::vector<SparseRow> sorted;
  sorted.reserve(order.size());
  for (std::size_t i : order) sorted.push_back(std::move(done[i]));
  return sorted;
}

LinearSystem::LinearSystem(FieldSpec field, std::size_t unknowns)
    : unknowns_(unknowns), echelon_(field, unknowns + 1) {}

void LinearSystem::add_equation(SparseRow coefficients, Residue rhs) {
  rhs %= echelon_.field().p();
  if (rhs != 0) coefficients.emplace_back(unknowns_, rhs);
  auto lead = echelon_.insert(std::move(coefficients));
  if (lead && *lead == unknowns_) consistent_ = false;
}

void LinearSystem::add_equation(std::span<const Residue> coefficients, Residue rhs) {
  add_equation(to_sparse(coefficients), rhs);
}

std::optional<Vector> LinearSystem::solution() const {
  if (!consistent_) return std::nullopt;
  Vector x(unknowns_, 0);
  for (const SparseRow& row : echelon_.reduced_rows()) {
    // Reduced rows contain only their lead, free unknowns, and the rhs.
    if (row.back().first == unknowns_) x[row.front().first] = row.back().second;
  }
  return x;
}

// --- quotients --------------------------------------------------------------

QuotientSpace::QuotientSpace(FieldSpec field, std::size_t ambient_dim,
                             std::vector<SparseRow> relations,
                             std::vector<std::size_t> free_columns)
    : field_(field),
      ambient_dim_(ambient_dim),
      relations_(std::move(relations)),
      free_columns_(std::move(free_columns)),
      free_index_(ambient_dim, static_cast<std::size_t>(-1)),
      lead_row_(ambient_dim, static_cast<std::size_t>(-1)) {
  for (std::size_t k = 0; k < free_columns_.size(); ++k) free_index_[free_columns_[k]] = k;
  for (std::size_t r = 0; r < relations_.size(); ++r) lead_row_[relations_[r].front().first] = r;
}

FpMatrix QuotientSpace::relation_basis() const {
  FpMatrix m(field_, relations_.size(), ambient_dim_);
  for (std::size_t r = 0; r < relations_.size(); ++r)
    for (auto [c, v] : relations_[r]) m(r, c) = v;
  return m;
}

FpMatrix QuotientSpace::projection() const {
  FpMatrix m(field_, free_columns_.size(), ambient_dim_);
  for (std::size_t k = 0; k < free_columns_.size(); ++k) m(k, free_columns_[k]) = 1;
  for (const SparseRow& row : relations_) {
    std::size_t lead = row.front().first;
    // e_lead = relation - (the other terms), which are all free.
    for (std::size_t i = 1; i < row.size(); ++i) {
      m(free_index_[row[i].first], lead) = field_.neg(row[i].second);
    }
  }
  return m;
}

FpMatrix QuotientSpace::section() const {
  FpMatrix s(field_, ambient_dim_, free_columns_.size());
  for (std::size_t k = 0; k < free_columns_.size(); ++k) s(free_columns_[k], k) = 1;
  return s;
}

Vector QuotientSpace::project(std::span<const Residue> v) const {
  Vector out(free_columns_.size(), 0);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    if (free_index_[c] != static_cast<std::size_t>(-1)) {
      out[free_index_[c]] = field_.add(out[free_index_[c]], v[c]);
      continue;
    }
    const SparseRow& row = relations_[lead_row_[c]];
    for (std::size_t i = 1; i < row.size(); ++i) {
      std::size_t k = free_index_[row[i].first];
      out[k] = field_.sub(out[k], field_.mul(v[c], row[i].second));
    }
  }
  return out;
}

QuotientSpace quotient_by(const SparseEchelon& relations) {
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < relations.cols(); ++c)
    if (!relations.is_pivot(c)) free_cols.push_back(c);
  return QuotientSpace(relations.field(), relations.cols(), relations.reduced_rows(),
                       std::move(free_cols));
}

QuotientSpace quotient_by(FieldSpec field, std::size_t ambient_dim, const FpMatrix& relations) {
  if (relations.cols() != ambient_dim && !(relations.rows() == 0)) {
    throw Error(ErrorKind::Malformed, "quotient_by: relation width differs from ambient dimension");
  }
  SparseEchelon ech(field, ambient_dim);
  for (std::size_t r = 0; r < relations.rows(); ++r) ech.insert(to_sparse(relations.row(r)));
  return quotient_by(ech);
}

}  // namespace eigproj

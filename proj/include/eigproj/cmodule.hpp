#pragma once

// Modules over a category algebra, stored as functors into vector spaces:
// a dimension per object and a matrix per morphism. Matrices act on column
// vectors, so action(g∘f) = action(g) * action(f).

#include <memory>
#include <utility>
#include <vector>

#include "eigproj/category.hpp"
#include "eigproj/exactla.hpp"
#include "eigproj/grouprep.hpp"

namespace eigproj {

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

struct CModule {
  CategoryPtr category;
  FieldSpec field;
  std::vector<std::size_t> dims;  // by ObjectId
  std::vector<FpMatrix> action;   // by MorphismId, dims[tgt] x dims[src]

  std::size_t dim(ObjectId x) const { return dims[x]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

/// "shape", "identity" and "functoriality" violations; empty iff the
/// module is a functor.
std::vector<Violation> validate_module(const CModule& m);

CModule zero_module(CategoryPtr cat, FieldSpec field);
/// Dimension 1 everywhere, every morphism acts by 1.
CModule constant_module(CategoryPtr cat, FieldSpec field);
CModule direct_sum(const CModule& a, const CModule& b);

/// Pointwise tensor product with the diagonal action.
CModule tensor_hat(const CModule& x, const CModule& y);

/// Permutation matrix taking x(obj) ⊗ y(obj) to y(obj) ⊗ x(obj).
FpMatrix tensor_swap(std::size_t dim_x, std::size_t dim_y, FieldSpec field);

/// x ↦ kHom(x_q, x), q a 1-based position. The basis at y is hom(x_q, y) in
/// input order and f acts by post-composition.
CModule column_module(CategoryPtr cat, FieldSpec field, std::size_t q);

/// X(x) as a module over kAut(x); element k of the group is hom(x, x)[k].
GroupAlgebraModule restrict_to_automorphisms(const CModule& m, ObjectId x);

/// kM ⊗_{kG} V for the right G-action of m and the left module v, as a
/// quotient of kM ⊗_k V by the relations (b·g)⊗e − b⊗(g·e). The ambient
/// basis is (b, e) at b * dim V + e.
QuotientSpace tensor_over_group_algebra(const BisetData& m, const GroupAlgebraModule& v);
/// kX ⊗_{kG} kY for a right G-set x and a left G-set y.
QuotientSpace tensor_over_group_algebra(const BisetData& x, const BisetData& y, FieldSpec field);

/// The domain of the map into X_t built from everything above position t,
/// together with that map.
struct TailRow {
  std::size_t t = 0;
  /// Ambient basis: (α in Hom(x_j, x_t) for some j > t, basis index in X_j).
  std::vector<std::pair<MorphismId, std::size_t>> basis;
  QuotientSpace quotient;
  /// dim X_t x ambient; α⊗e ↦ action(α)e.
  FpMatrix ambient_map;
  /// dim X_t x quotient_dim; the ambient map on the quotient basis.
  FpMatrix induced_map;

  std::size_t quotient_dim() const { return quotient.quotient_dim(); }
  std::size_t map_rank() const { return rank(induced_map); }
  bool injective() const { return map_rank() == quotient_dim(); }
};

/// Throws OutOfRange unless 1 <= t <= n-1.
TailRow tensor_over_tail(const CModule& x, std::size_t t);

struct FreeCover {
  CModule cover;
  std::vector<FpMatrix> epi;  // by ObjectId, dims[x] x cover.dims[x]
  /// (position i, vector of X(x_i)) generating each column summand, in
  /// summand order.
  std::vector<std::pair<std::size_t, Vector>> generators;
};

/// ⊕_i C_i^{dim X(x_i)}, one summand per basis vector, positions ascending.
FreeCover free_cover(const CModule& x);

/// A smaller cover: generators picked greedily from the top position down,
/// skipping basis vectors already reached by earlier generators and their
/// automorphism translates.
FreeCover reduced_cover(const CModule& x);

/// Whether the kernel of the cover's epimorphism admits a natural
/// retraction, i.e. whether the cover splits.
bool cover_splits(const CModule& x, const FreeCover& cover);

/// Projectivity by splitting of the reduced cover.
bool is_projective(const CModule& x);

}  // namespace eigproj

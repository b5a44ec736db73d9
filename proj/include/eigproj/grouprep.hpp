#pragma once

// Group algebras, hom-set bisets and projectivity over kG.

#include <optional>
#include <string>
#include <vector>

#include "eigproj/category.hpp"
#include "eigproj/exactla.hpp"

namespace eigproj {

/// A finite set with a left action of one group and a right action of
/// another. For a hom set Hom(x_j, x_i) the left group is Aut(x_i) acting by
/// post-composition and the right group is Aut(x_j) acting by
/// pre-composition.
struct BisetData {
  std::vector<std::string> basis;
  GroupTable left_group;
  GroupTable right_group;
  std::vector<std::size_t> left;   // left[h * |basis| + b] = h·b
  std::vector<std::size_t> right;  // right[b * |right_group| + g] = b·g

  std::size_t size() const { return basis.size(); }
  std::size_t act_left(std::size_t h, std::size_t b) const { return left[h * size() + b]; }
  std::size_t act_right(std::size_t b, std::size_t g) const {
    return right[b * right_group.order() + g];
  }

  /// Left G-set with trivial right action.
  static BisetData left_set(GroupTable g, std::vector<std::size_t> action, std::size_t size);
  /// Right G-set with trivial left action.
  static BisetData right_set(GroupTable g, std::vector<std::size_t> action, std::size_t size);
  /// G acting on itself from both sides.
  static BisetData regular(const GroupTable& g);
};

/// Empty when both actions are well-defined actions that commute.
std::vector<std::string> validate_biset(const BisetData& b);

/// Hom(from, to) with Aut(to) on the left and Aut(from) on the right.
BisetData hom_biset(const FiniteCategory& cat, ObjectId from, ObjectId to);

enum class Side { Left, Right };
const char* to_string(Side side);

struct GroupAlgebraModule {
  GroupTable group;
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<FpMatrix> action;  // indexed by group element
};

/// Empty iff action is a homomorphism with act(unit) = identity.
std::vector<std::string> validate_group_module(const GroupAlgebraModule& m);

/// Linearization of one side's action. A right action is turned into a left
/// action of the same group by letting g act as b ↦ b·g⁻¹.
GroupAlgebraModule permutation_module(const BisetData& b, Side side, FieldSpec field);

GroupAlgebraModule regular_module(const GroupTable& g, FieldSpec field);
GroupAlgebraModule trivial_module(const GroupTable& g, FieldSpec field);
GroupAlgebraModule direct_sum(const GroupAlgebraModule& a, const GroupAlgebraModule& b);

/// Some F with Σ_g act(g)·F·act(g⁻¹) = identity, if one exists.
std::optional<FpMatrix> higman_certificate(const GroupAlgebraModule& m);
bool is_projective_kG(const GroupAlgebraModule& m);

/// The permutation module of one side, decided orbit by orbit: a
/// permutation module is the direct sum of its orbit submodules.
bool is_permutation_projective(const BisetData& b, Side side, FieldSpec field);

struct ProjectivityWitness {
  std::size_t i = 0, j = 0;  // positions, i < j; the hom set is Hom(x_j, x_i)
  Side side = Side::Left;
};

struct CategoryProjectivity {
  bool projective = true;
  std::optional<ProjectivityWitness> witness;  // first failure, (i, j) lexicographic, left first
};

CategoryProjectivity is_category_projective(const FiniteCategory& cat, FieldSpec field);
inline bool is_gorenstein(const FiniteCategory& cat, FieldSpec field) {
  return is_category_projective(cat, field).projective;
}

}  // namespace eigproj

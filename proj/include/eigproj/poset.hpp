#pragma once

// Finite posets as categories, the upper-bound criterion for closure under
// ⊗̂, and exhaustive enumeration of labeled posets.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eigproj/cmodule.hpp"
#include "eigproj/gorenstein.hpp"

namespace eigproj {

class FinitePoset {
 public:
  /// Reflexive-transitive closure of the listed pairs (a <= b). Throws
  /// Malformed on unknown or duplicate elements and when the closure is not
  /// antisymmetric.
  static FinitePoset from_relations(std::vector<std::string> elements,
                                    const std::vector<std::pair<std::string, std::string>>& relations);
  /// leq[a * n + b]; must already be a partial order (throws Malformed).
  static FinitePoset from_matrix(std::vector<std::string> elements, std::vector<std::uint8_t> leq);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(std::size_t a) const { return elements_[a]; }
  std::optional<std::size_t> find(const std::string& name) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  /// a < b with nothing strictly between.
  bool covers(std::size_t a, std::size_t b) const;
  /// Strict relations (a, b), a < b, in lexicographic index order.
  std::vector<std::pair<std::size_t, std::size_t>> strict_relations() const;
  const std::vector<std::uint8_t>& matrix() const { return leq_; }

 private:
  std::vector<std::string> elements_;
  std::vector<std::uint8_t> leq_;
};

/// Objects ordered by a reversed linear extension (earliest available
/// maximal element first), which is already admissible. Identities are
/// named "id_a", the morphism for a < b is "a->b".
FiniteCategory poset_to_category(const FinitePoset& p);

/// Element index of each object position: object_of_position[i-1].
std::vector<std::size_t> poset_positions(const FinitePoset& p);

struct UpperLocus {
  std::vector<std::size_t> locus;    // common strict upper bounds
  std::vector<std::size_t> minimal;  // minimal elements of the locus
};

/// Throws Precondition if a and b are comparable.
UpperLocus common_upper_locus(const FinitePoset& p, std::size_t a, std::size_t b);

/// For every incomparable pair, distinct minimal common upper bounds must
/// have no common upper bound (non-strict: x may equal either).
GptVerdict poset_gpt(const FinitePoset& p);

struct ColumnDecomposition {
  /// Multiplicity of each column C_s in C_t ⊗̂ C_j, index s-1; negative
  /// entries mean the dimension vector is no sum of columns.
  std::vector<long> coefficients;
  std::vector<std::size_t> columns;  // positions with multiplicity, when nonnegative
  bool nonnegative = true;
  bool splits = true;                // is_projective on the tensor
  bool projective() const { return nonnegative && splits; }
};

/// t and j are positions in poset_to_category's object order.
ColumnDecomposition decompose_tensor_columns(const FinitePoset& p, std::size_t t, std::size_t j,
                                             FieldSpec field = FieldSpec(2));

/// For all a < b exactly one d with a <= d and d covered by b.
bool poset_unique_covers(const FinitePoset& p);

/// Every labeled partial order on n <= 6 elements named "a", "b", ...,
/// each exactly once. Throws OutOfRange for larger n.
void for_each_poset(std::size_t n, const std::function<void(const FinitePoset&)>& visit);
std::vector<FinitePoset> enumerate_posets(std::size_t n);

}  // namespace eigproj

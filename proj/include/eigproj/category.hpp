#pragma once

// Finite categories with a fully materialized composition table, plus the
// purely combinatorial checks: validation, EI, skeletality, the admissible
// ordering, monomorphisms, unfactorizable morphisms and freeness.
//
// Positions. Every operation that talks about x_1, ..., x_n uses 1-based
// positions in the admissible order, where Hom(x_i, x_j) is empty for i < j.
// Morphisms therefore run from larger positions to smaller ones.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eigproj {

using ObjectId = std::size_t;    // dense index in input order
using MorphismId = std::size_t;  // dense index in input order

/// Category as read from a file, ids still symbolic.
struct CategoryData {
  struct Morphism {
    std::string id, src, tgt;
  };
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::map<std::string, std::string> identities;
  std::vector<std::array<std::string, 3>> compose;  // (g, f, g∘f)
};

class FiniteCategory {
 public:
  /// Resolves ids. Throws Error(Malformed) on duplicate or unknown ids,
  /// objects without an identity, or conflicting duplicate composites.
  /// Law violations are kept as data; see validate().
  static FiniteCategory from_data(const CategoryData& data);

  /// Same as from_data for a description without compose entries, taking
  /// every composite from `compose(g, f)` for composable pairs instead.
  static FiniteCategory from_function(const CategoryData& data,
                                      const std::function<MorphismId(MorphismId, MorphismId)>& compose);

  CategoryData to_data() const;

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return names_.size(); }
  const std::string& object_name(ObjectId x) const { return objects_[x]; }
  const std::string& morphism_name(MorphismId f) const { return names_[f]; }
  std::optional<ObjectId> find_object(const std::string& name) const;
  std::optional<MorphismId> find_morphism(const std::string& name) const;

  ObjectId source(MorphismId f) const { return src_[f]; }
  ObjectId target(MorphismId f) const { return tgt_[f]; }
  MorphismId identity(ObjectId x) const { return identity_[x]; }
  bool composable(MorphismId g, MorphismId f) const { return tgt_[f] == src_[g]; }

  /// The table entry for g∘f, if one was listed.
  std::optional<MorphismId> compose(MorphismId g, MorphismId f) const {
    auto v = table_[g * names_.size() + f];
    if (v < 0) return std::nullopt;
    return static_cast<MorphismId>(v);
  }
  /// g∘f for a validated category; the pair must be composable.
  MorphismId compose_unchecked(MorphismId g, MorphismId f) const {
    return static_cast<MorphismId>(table_[g * names_.size() + f]);
  }

  /// Hom(from, to) in input morphism order.
  std::span<const MorphismId> hom(ObjectId from, ObjectId to) const {
    return homs_[from * objects_.size() + to];
  }

  /// Entries listed for pairs that are not composable.
  const std::vector<std::pair<MorphismId, MorphismId>>& stray_entries() const {
    return stray_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> names_;
  std::vector<ObjectId> src_, tgt_;
  std::vector<MorphismId> identity_;
  std::vector<std::int64_t> table_;
  std::vector<std::vector<MorphismId>> homs_;
  std::vector<std::pair<MorphismId, MorphismId>> stray_;
  std::map<std::string, ObjectId> object_index_;
  std::map<std::string, MorphismId> morphism_index_;
};

struct Violation {
  std::string kind;                    // e.g. "endpoint mismatch"
  std::vector<std::string> morphisms;  // offending tuple, outermost first
  std::string message() const;         // "endpoint mismatch at (g,f)"
  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const FiniteCategory& cat);

bool is_iso(const FiniteCategory& cat, MorphismId f);
bool is_ei(const FiniteCategory& cat);
bool is_skeletal(const FiniteCategory& cat);

class AdmissibleOrder {
 public:
  explicit AdmissibleOrder(std::vector<ObjectId> objects);

  std::size_t size() const { return objects_.size(); }
  /// Object at 1-based position.
  ObjectId at(std::size_t position) const { return objects_.at(position - 1); }
  /// 1-based position of an object.
  std::size_t position_of(ObjectId x) const { return positions_.at(x); }
  const std::vector<ObjectId>& objects() const { return objects_; }

 private:
  std::vector<ObjectId> objects_;
  std::vector<std::size_t> positions_;
};

/// Stable topological sort placing targets before sources; ties go to the
/// earlier input object. Throws InvalidCategory if distinct objects admit
/// morphisms both ways.
AdmissibleOrder admissible_order(const FiniteCategory& cat);

bool is_mono(const FiniteCategory& cat, MorphismId f);
/// First morphism (input order) that is not a monomorphism.
std::optional<MorphismId> first_non_mono(const FiniteCategory& cat);
inline bool all_mono(const FiniteCategory& cat) { return !first_non_mono(cat); }

struct Unfactorizables {
  std::vector<bool> member;  // indexed by MorphismId
  /// Members grouped by (source, target), each list in input order.
  std::map<std::pair<ObjectId, ObjectId>, std::vector<MorphismId>> by_endpoints;

  std::span<const MorphismId> between(ObjectId from, ObjectId to) const;
};

Unfactorizables unfactorizables(const FiniteCategory& cat);

/// Two peeling preimages of one morphism, or a morphism with none.
struct FreenessCounterexample {
  std::size_t t = 0, q = 0;  // positions
  MorphismId morphism = 0;
  /// (unfactorizable u, remainder β) orbit representatives with u∘β = morphism.
  std::vector<std::pair<MorphismId, MorphismId>> preimages;
};

struct FreenessResult {
  bool free = true;
  std::optional<FreenessCounterexample> counterexample;
};

/// Peeling criterion for the unique factorization property. Requires a
/// valid, EI, skeletal category.
FreenessResult is_free(const FiniteCategory& cat);

/// Finite group given by a multiplication table.
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::size_t> mult;  // mult[a * order + b] = a∘b
  std::size_t unit = 0;
  std::vector<std::size_t> inverse;

  std::size_t order() const { return names.size(); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return mult[a * order() + b]; }

  /// Checks closure, associativity, unit and inverses; throws Malformed.
  static GroupTable from_table(std::vector<std::string> names, std::vector<std::size_t> mult);
  static GroupTable trivial();
  static GroupTable cyclic(std::size_t n);
  static GroupTable symmetric3();
  /// Multiplication table of a direct product, element (a, b) at a*|h| + b.
  static GroupTable product(const GroupTable& g, const GroupTable& h);

  /// Same order and multiplication table.
  bool same_table(const GroupTable& other) const {
    return mult == other.mult && unit == other.unit;
  }
};

/// Aut(x) for an EI category; element k is hom(x, x)[k].
GroupTable automorphism_group(const FiniteCategory& cat, ObjectId x);

}  // namespace eigproj

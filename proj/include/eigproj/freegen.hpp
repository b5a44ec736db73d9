#pragma once

// Free EI categories generated from acyclic quivers whose vertices carry
// finite groups and whose arrows carry bisets.
//
// Object x_i is named "x<i>". Automorphism k of x_i is "a<i>_<k>"; the
// morphisms x_j -> x_i are "f<j>_<i>_<k>", numbered in generation order.

#include <cstdint>
#include <optional>
#include <vector>

#include "eigproj/category.hpp"
#include "eigproj/grouprep.hpp"

namespace eigproj {

struct GroupSpec {
  enum class Kind { Trivial, Cyclic, Symmetric3, Table };
  Kind kind = Kind::Trivial;
  std::size_t order = 1;  // Cyclic only
  GroupTable table;       // Table only

  static GroupSpec trivial() { return {}; }
  static GroupSpec cyclic(std::size_t n) { return {Kind::Cyclic, n, {}}; }
  static GroupSpec symmetric3() { return {Kind::Symmetric3, 6, {}}; }
  static GroupSpec explicit_table(GroupTable t) { return {Kind::Table, t.order(), std::move(t)}; }

  GroupTable build() const;
};

struct BisetSpec {
  enum class Kind { Free, Explicit };
  Kind kind = Kind::Free;
  std::size_t rank = 1;  // Free: G_target x {1..rank} x G_source
  BisetData biset;       // Explicit: left group G_target, right group G_source

  static BisetSpec free(std::size_t rank) { return {Kind::Free, rank, {}}; }
  static BisetSpec explicit_biset(BisetData b) { return {Kind::Explicit, 0, std::move(b)}; }
};

struct ArrowSpec {
  std::size_t source = 0, target = 0;  // 1-based positions, source > target
  BisetSpec biset;
};

struct FreeEISpec {
  std::vector<GroupSpec> groups;  // one per object, position order
  std::vector<ArrowSpec> arrows;
};

/// EIGPROJ_CAP if set to a positive integer, else 2000.
std::size_t default_morphism_cap();

/// Throws Malformed for inconsistent specs and CapExceeded when the
/// category would have more than `cap` morphisms.
FiniteCategory generate_category(const FreeEISpec& spec, std::optional<std::size_t> cap = std::nullopt);

/// Biset of the given spec over the given groups.
BisetData build_biset(const BisetSpec& spec, const GroupTable& target, const GroupTable& source);

struct RandomBounds {
  std::size_t max_objects = 4;
  std::size_t max_biset = 12;      // generator biset size
  std::size_t max_hom = 12;        // any Hom(x_j, x_i), j > i
  std::size_t max_morphisms = 80;  // whole category
  unsigned explicit_percent = 50;  // chance an arrow gets a transitive coset biset
};

/// Deterministic in (seed, bounds). Groups are drawn from 1, C_2, C_3, S_3.
FreeEISpec random_spec(std::uint64_t seed, const RandomBounds& bounds = {});

/// Transitive biset (G_target x G_source)/H with h·[k] = [(h,1)k] and
/// [k]·g = [(1,g⁻¹)k], for the subgroup H generated by `gens`.
BisetData coset_biset(const GroupTable& target, const GroupTable& source,
                      const std::vector<std::size_t>& gens);

}  // namespace eigproj

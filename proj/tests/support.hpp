#pragma once

// Fixtures, generators and brute-force oracles shared by the test suites.
// Oracles here never call the library routine they are meant to check.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eigproj/analysis.hpp"
#include "eigproj/error.hpp"

namespace eigproj::testing {

using Rng = std::mt19937_64;

inline std::size_t draw(Rng& rng, std::size_t bound) { return bound == 0 ? 0 : rng() % bound; }

inline FpMatrix random_matrix(Rng& rng, FieldSpec k, std::size_t rows, std::size_t cols) {
  std::vector<Residue> e(rows * cols);
  for (auto& v : e) v = static_cast<Residue>(draw(rng, k.p()));
  return FpMatrix(k, rows, cols, std::move(e));
}

/// Random matrix of prescribed rank: product of random full-rank factors.
inline FpMatrix random_matrix_of_rank(Rng& rng, FieldSpec k, std::size_t rows, std::size_t cols,
                                      std::size_t r) {
  for (;;) {
    FpMatrix a = random_matrix(rng, k, rows, r);
    FpMatrix b = random_matrix(rng, k, r, cols);
    FpMatrix m = a * b;
    if (rank(m) == r) return m;
  }
}

inline std::optional<FpMatrix> inverse(const FpMatrix& a) {
  const std::size_t n = a.rows();
  FpMatrix inv(a.field(), n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector e(n, 0);
    e[c] = 1;
    auto x = solve(a, e);
    if (!x) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = (*x)[r];
  }
  return inv;
}

inline FpMatrix random_invertible(Rng& rng, FieldSpec k, std::size_t n) {
  for (;;) {
    FpMatrix m = random_matrix(rng, k, n, n);
    if (rank(m) == n) return m;
  }
}

/// Every x in F_p^cols with m x = 0, by enumeration.
inline std::vector<Vector> brute_nullspace(const FpMatrix& m) {
  const FieldSpec k = m.field();
  std::vector<Vector> out;
  Vector x(m.cols(), 0);
  for (;;) {
    bool zero = true;
    for (std::size_t r = 0; r < m.rows() && zero; ++r) {
      Residue s = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) s = k.add(s, k.mul(m(r, c), x[c]));
      zero = s == 0;
    }
    if (zero) out.push_back(x);
    std::size_t c = 0;
    while (c < x.size() && ++x[c] == k.p()) x[c++] = 0;
    if (c == x.size()) break;
  }
  return out;
}

// ---- categories -----------------------------------------------------------

inline CategoryPtr share(FiniteCategory c) { return std::make_shared<const FiniteCategory>(std::move(c)); }

inline BisetData point_biset(const GroupTable& right) {
  return BisetData::right_set(right, std::vector<std::size_t>(right.order(), 0), 1);
}

/// x_1 with trivial group, x_2 with C_2, Hom(x_2, x_1) a single point.
inline FreeEISpec point_biset_spec() {
  FreeEISpec s;
  s.groups = {GroupSpec::trivial(), GroupSpec::cyclic(2)};
  s.arrows = {{2, 1, BisetSpec::explicit_biset(point_biset(GroupTable::cyclic(2)))}};
  return s;
}

/// Same groups, Hom(x_2, x_1) = C_2 with the right regular action.
inline FreeEISpec free_biset_spec() {
  FreeEISpec s;
  s.groups = {GroupSpec::trivial(), GroupSpec::cyclic(2)};
  s.arrows = {{2, 1, BisetSpec::free(1)}};
  return s;
}

inline FiniteCategory point_biset_category() { return generate_category(point_biset_spec()); }
inline FiniteCategory free_biset_category() { return generate_category(free_biset_spec()); }

inline FinitePoset poset(std::vector<std::string> elements,
                         std::vector<std::pair<std::string, std::string>> relations) {
  return FinitePoset::from_relations(std::move(elements), relations);
}
inline FinitePoset chain(std::size_t n) {
  std::vector<std::string> e;
  std::vector<std::pair<std::string, std::string>> r;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(std::string(1, static_cast<char>('a' + i)));
    if (i > 0) r.emplace_back(e[i - 1], e[i]);
  }
  return poset(e, r);
}
inline FinitePoset antichain(std::size_t n) {
  std::vector<std::string> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(std::string(1, static_cast<char>('a' + i)));
  return poset(e, {});
}
inline FinitePoset diamond() {
  return poset({"a", "c", "d", "e"}, {{"a", "c"}, {"a", "d"}, {"c", "e"}, {"d", "e"}});
}
inline FinitePoset bowtie() {
  return poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}
inline FinitePoset bowtie_top() {
  return poset({"a", "b", "c", "d", "e"},
               {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "e"}, {"d", "e"}});
}
inline FinitePoset vee() { return poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}); }

/// Dimension 1 at x, zero elsewhere; every non-identity acts by 0.
inline CModule simple_module(CategoryPtr cat, FieldSpec k, ObjectId x) {
  CModule m{cat, k, std::vector<std::size_t>(cat->object_count(), 0), {}};
  m.dims[x] = 1;
  for (MorphismId f = 0; f < cat->morphism_count(); ++f) {
    FpMatrix a(k, m.dims[cat->target(f)], m.dims[cat->source(f)]);
    if (cat->source(f) == x && cat->target(f) == x) a(0, 0) = 1;
    m.action.push_back(a);
  }
  return m;
}

/// Position of an object of a poset category by element name.
inline std::size_t position_of(const FiniteCategory& cat, const std::string& name) {
  return admissible_order(cat).position_of(*cat.find_object(name));
}

// ---- brute-force oracles ---------------------------------------------------

/// Naive labeled poset census: every subset of the off-diagonal pairs,
/// filtered by antisymmetry and transitivity.
inline std::size_t naive_poset_count(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<bool> r(n * n, false);
    for (std::size_t a = 0; a < n; ++a) r[a * n + a] = true;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) r[pairs[k].first * n + pairs[k].second] = true;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && r[a * n + b] && r[b * n + a]) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c)
          if (r[a * n + b] && r[b * n + c] && !r[a * n + c]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

/// Non-isomorphisms that admit no factorization through two non-isos, by
/// trying every composable pair.
inline std::set<MorphismId> brute_unfactorizables(const FiniteCategory& cat) {
  std::set<MorphismId> out;
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    if (is_iso(cat, f)) continue;
    bool factors = false;
    for (MorphismId b = 0; b < cat.morphism_count() && !factors; ++b) {
      if (cat.source(b) != cat.source(f) || is_iso(cat, b)) continue;
      for (MorphismId g : cat.hom(cat.target(b), cat.target(f)))
        if (!is_iso(cat, g) && cat.compose_unchecked(g, b) == f) {
          factors = true;
          break;
        }
    }
    if (!factors) out.insert(f);
  }
  return out;
}

/// Number of classes of X x Y under (x·g, y) ~ (x, g·y), by union-find.
inline std::size_t orbit_count(const BisetData& x, const BisetData& y) {
  const std::size_t nx = x.size(), ny = y.size();
  std::vector<std::size_t> parent(nx * ny);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = root(parent[a]);
  };
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      for (std::size_t g = 0; g < x.right_group.order(); ++g) {
        std::size_t u = root(x.act_right(a, g) * ny + b), v = root(a * ny + y.act_left(g, b));
        parent[u] = v;
      }
  std::size_t classes = 0;
  for (std::size_t a = 0; a < parent.size(); ++a) classes += root(a) == a;
  return classes;
}

// ---- random group data -----------------------------------------------------

inline std::vector<GroupTable> small_groups() {
  return {GroupTable::trivial(),
          GroupTable::cyclic(2),
          GroupTable::cyclic(3),
          GroupTable::cyclic(4),
          GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2)),
          GroupTable::cyclic(5),
          GroupTable::cyclic(6),
          GroupTable::symmetric3()};
}

inline std::vector<std::size_t> subgroup(const GroupTable& g, const std::vector<std::size_t>& gens) {
  std::set<std::size_t> h{g.unit};
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a : std::vector<std::size_t>(h.begin(), h.end()))
      for (std::size_t s : gens)
        if (h.insert(g.multiply(a, s)).second) grew = true;
  }
  return {h.begin(), h.end()};
}

/// Random left G-set: a disjoint union of coset spaces G/H.
inline BisetData random_left_set(Rng& rng, const GroupTable& g, std::size_t max_size) {
  std::vector<std::size_t> action;  // filled after the size is known
  std::vector<std::vector<std::size_t>> pieces;  // per piece: table h*m+c
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  std::size_t parts = 1 + draw(rng, 3);
  for (std::size_t p = 0; p < parts; ++p) {
    std::vector<std::size_t> gens;
    for (std::size_t k = draw(rng, 3); k > 0; --k) gens.push_back(draw(rng, g.order()));
    auto h = subgroup(g, gens);
    std::vector<std::size_t> coset_of(g.order(), SIZE_MAX), reps;
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (coset_of[a] != SIZE_MAX) continue;
      for (std::size_t x : h) coset_of[g.multiply(a, x)] = reps.size();
      reps.push_back(a);
    }
    if (total + reps.size() > max_size) continue;
    std::vector<std::size_t> t(g.order() * reps.size());
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t c = 0; c < reps.size(); ++c) t[a * reps.size() + c] = coset_of[g.multiply(a, reps[c])];
    pieces.push_back(std::move(t));
    sizes.push_back(reps.size());
    total += reps.size();
  }
  action.assign(g.order() * total, 0);
  std::size_t offset = 0;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t c = 0; c < sizes[p]; ++c) action[a * total + offset + c] = offset + pieces[p][a * sizes[p] + c];
    offset += sizes[p];
  }
  return BisetData::left_set(g, std::move(action), total);
}

/// Right G-set from a left one via x·g = g⁻¹·x.
inline BisetData as_right_set(const BisetData& left) {
  const GroupTable& g = left.left_group;
  std::vector<std::size_t> action(left.size() * g.order());
  for (std::size_t b = 0; b < left.size(); ++b)
    for (std::size_t a = 0; a < g.order(); ++a) action[b * g.order() + a] = left.act_left(g.inverse[a], b);
  return BisetData::right_set(g, std::move(action), left.size());
}

/// Random kG-module of dimension <= max_dim: a permutation module of a random
/// G-set, conjugated by a random invertible matrix.
inline GroupAlgebraModule random_group_module(Rng& rng, const GroupTable& g, FieldSpec k, std::size_t max_dim) {
  GroupAlgebraModule m{g, k, 0, {}};
  while (m.dim == 0) {
    BisetData x = random_left_set(rng, g, max_dim);
    if (x.size() == 0) continue;
    m = permutation_module(x, Side::Left, k);
  }
  FpMatrix t = random_invertible(rng, k, m.dim);
  FpMatrix ti = *inverse(t);
  for (auto& a : m.action) a = t * a * ti;
  return m;
}

// ---- random modules over a category ---------------------------------------

/// Module built from columns and the constant module by sums and ⊗̂.
inline CModule random_module(Rng& rng, const CategoryPtr& cat, FieldSpec k, std::size_t max_total = 24) {
  const std::size_t n = cat->object_count();
  auto atom = [&]() -> CModule {
    std::size_t r = draw(rng, n + 1);
    if (r == n) return constant_module(cat, k);
    return column_module(cat, k, r + 1);
  };
  CModule m = atom();
  for (std::size_t steps = draw(rng, 3); steps > 0; --steps) {
    CModule next = draw(rng, 2) ? direct_sum(m, atom()) : tensor_hat(m, atom());
    if (next.total_dim() > max_total) break;
    m = std::move(next);
  }
  return m;
}

}  // namespace eigproj::testing

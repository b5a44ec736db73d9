#include "eigproj/grouprep.hpp"

#include <algorithm>
#include <map>

#include "eigproj/error.hpp"

namespace eigproj {

BisetData BisetData::left_set(GroupTable g, std::vector<std::size_t> action, std::size_t size) {
  BisetData b;
  for (std::size_t k = 0; k < size; ++k) b.basis.push_back(std::to_string(k));
  b.left_group = std::move(g);
  b.right_group = GroupTable::trivial();
  b.left = std::move(action);
  b.right.resize(size);
  for (std::size_t k = 0; k < size; ++k) b.right[k] = k;
  return b;
}

BisetData BisetData::right_set(GroupTable g, std::vector<std::size_t> action, std::size_t size) {
  BisetData b;
  for (std::size_t k = 0; k < size; ++k) b.basis.push_back(std::to_string(k));
  b.left_group = GroupTable::trivial();
  b.right_group = std::move(g);
  b.right = std::move(action);
  b.left.resize(size);
  for (std::size_t k = 0; k < size; ++k) b.left[k] = k;
  return b;
}

BisetData BisetData::regular(const GroupTable& g) {
  BisetData b;
  b.basis = g.names;
  b.left_group = g;
  b.right_group = g;
  const std::size_t n = g.order();
  b.left.resize(n * n);
  b.right.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      b.left[x * n + y] = g.multiply(x, y);
      b.right[x * n + y] = g.multiply(x, y);
    }
  return b;
}

std::vector<std::string> validate_biset(const BisetData& b) {
  std::vector<std::string> out;
  const std::size_t n = b.size(), gl = b.left_group.order(), gr = b.right_group.order();
  if (b.left.size() != gl * n || b.right.size() != n * gr) {
    out.push_back("action table has wrong size");
    return out;
  }
  for (std::size_t v : b.left)
    if (v >= n) {
      out.push_back("left action leaves the basis");
      return out;
    }
  for (std::size_t v : b.right)
    if (v >= n) {
      out.push_back("right action leaves the basis");
      return out;
    }
  for (std::size_t x = 0; x < n; ++x) {
    if (b.act_left(b.left_group.unit, x) != x) out.push_back("left unit moves " + b.basis[x]);
    if (b.act_right(x, b.right_group.unit) != x) out.push_back("right unit moves " + b.basis[x]);
    for (std::size_t h = 0; h < gl; ++h)
      for (std::size_t k = 0; k < gl; ++k)
        if (b.act_left(b.left_group.multiply(h, k), x) != b.act_left(h, b.act_left(k, x))) {
          out.push_back("left action not associative at " + b.basis[x]);
        }
    for (std::size_t g = 0; g < gr; ++g)
      for (std::size_t k = 0; k < gr; ++k)
        if (b.act_right(x, b.right_group.multiply(g, k)) != b.act_right(b.act_right(x, g), k)) {
          out.push_back("right action not associative at " + b.basis[x]);
        }
    for (std::size_t h = 0; h < gl; ++h)
      for (std::size_t g = 0; g < gr; ++g)
        if (b.act_right(b.act_left(h, x), g) != b.act_left(h, b.act_right(x, g))) {
          out.push_back("actions do not commute at " + b.basis[x]);
        }
  }
  return out;
}

BisetData hom_biset(const FiniteCategory& cat, ObjectId from, ObjectId to) {
  BisetData b;
  auto elems = cat.hom(from, to);
  auto index = [&](MorphismId f) {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), f) - elems.begin());
  };
  for (MorphismId f : elems) b.basis.push_back(cat.morphism_name(f));
  b.left_group = automorphism_group(cat, to);
  b.right_group = automorphism_group(cat, from);
  auto left_auts = cat.hom(to, to);
  auto right_auts = cat.hom(from, from);
  b.left.resize(left_auts.size() * elems.size());
  b.right.resize(elems.size() * right_auts.size());
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t h = 0; h < left_auts.size(); ++h)
      b.left[h * elems.size() + x] = index(cat.compose_unchecked(left_auts[h], elems[x]));
    for (std::size_t g = 0; g < right_auts.size(); ++g)
      b.right[x * right_auts.size() + g] = index(cat.compose_unchecked(elems[x], right_auts[g]));
  }
  return b;
}

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

std::vector<std::string> validate_group_module(const GroupAlgebraModule& m) {
  std::vector<std::string> out;
  const auto& g = m.group;
  if (m.action.size() != g.order()) {
    out.push_back("one matrix per group element expected");
    return out;
  }
  for (const auto& a : m.action)
    if (a.rows() != m.dim || a.cols() != m.dim || !(a.field() == m.field)) {
      out.push_back("action matrix has wrong shape");
      return out;
    }
  if (!(m.action[g.unit] == FpMatrix::identity(m.field, m.dim))) out.push_back("unit acts nontrivially");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (!(m.action[a] * m.action[b] == m.action[g.multiply(a, b)])) {
        out.push_back("not a homomorphism at (" + g.names[a] + "," + g.names[b] + ")");
      }
  return out;
}

GroupAlgebraModule permutation_module(const BisetData& b, Side side, FieldSpec field) {
  const GroupTable& g = side == Side::Left ? b.left_group : b.right_group;
  GroupAlgebraModule m{g, field, b.size(), {}};
  for (std::size_t e = 0; e < g.order(); ++e) {
    FpMatrix a(field, b.size(), b.size());
    for (std::size_t x = 0; x < b.size(); ++x) {
      std::size_t y = side == Side::Left ? b.act_left(e, x) : b.act_right(x, g.inverse[e]);
      a(y, x) = 1;
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

GroupAlgebraModule regular_module(const GroupTable& g, FieldSpec field) {
  return permutation_module(BisetData::regular(g), Side::Left, field);
}

GroupAlgebraModule trivial_module(const GroupTable& g, FieldSpec field) {
  GroupAlgebraModule m{g, field, 1, {}};
  for (std::size_t e = 0; e < g.order(); ++e) m.action.push_back(FpMatrix::identity(field, 1));
  return m;
}

GroupAlgebraModule direct_sum(const GroupAlgebraModule& a, const GroupAlgebraModule& b) {
  if (!a.group.same_table(b.group) || !(a.field == b.field)) {
    throw Error(ErrorKind::Precondition, "direct sum of modules over different algebras");
  }
  GroupAlgebraModule m{a.group, a.field, a.dim + b.dim, {}};
  for (std::size_t e = 0; e < a.group.order(); ++e) {
    m.action.push_back(block_diagonal(a.action[e], b.action[e]));
  }
  return m;
}

std::optional<FpMatrix> higman_certificate(const GroupAlgebraModule& m) {
  const std::size_t d = m.dim;
  const FieldSpec& k = m.field;
  if (d == 0) return FpMatrix(k, 0, 0);
  // Unknown F[a][b] sits at a*d + b; equation (r, c) reads
  // Σ_g Σ_{a,b} act(g)[r][a] · F[a][b] · act(g⁻¹)[b][c] = δ_rc.
  LinearSystem system(k, d * d);
  Vector row(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t g = 0; g < m.group.order(); ++g) {
        const FpMatrix& left = m.action[g];
        const FpMatrix& right = m.action[m.group.inverse[g]];
        for (std::size_t a = 0; a < d; ++a) {
          Residue x = left(r, a);
          if (!x) continue;
          for (std::size_t b = 0; b < d; ++b) {
            Residue y = right(b, c);
            if (y) row[a * d + b] = k.add(row[a * d + b], k.mul(x, y));
          }
        }
      }
      system.add_equation(std::span<const Residue>(row), r == c ? 1 : 0);
      if (!system.consistent()) return std::nullopt;
    }
  }
  auto sol = system.solution();
  if (!sol) return std::nullopt;
  return FpMatrix(k, d, d, std::move(*sol));
}

bool is_projective_kG(const GroupAlgebraModule& m) { return higman_certificate(m).has_value(); }

bool is_permutation_projective(const BisetData& b, Side side, FieldSpec field) {
  const GroupTable& g = side == Side::Left ? b.left_group : b.right_group;
  auto act = [&](std::size_t e, std::size_t x) {
    return side == Side::Left ? b.act_left(e, x) : b.act_right(x, g.inverse[e]);
  };
  std::vector<bool> seen(b.size(), false);
  for (std::size_t start = 0; start < b.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t e = 0; e < g.order(); ++e) {
      std::size_t y = act(e, start);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    GroupAlgebraModule m{g, field, orbit.size(), {}};
    for (std::size_t e = 0; e < g.order(); ++e) {
      FpMatrix a(field, orbit.size(), orbit.size());
      for (std::size_t x = 0; x < orbit.size(); ++x) {
        std::size_t y = act(e, orbit[x]);
        a(std::lower_bound(orbit.begin(), orbit.end(), y) - orbit.begin(), x) = 1;
      }
      m.action.push_back(std::move(a));
    }
    if (!is_projective_kG(m)) return false;
  }
  return true;
}

CategoryProjectivity is_category_projective(const FiniteCategory& cat, FieldSpec field) {
  AdmissibleOrder order = admissible_order(cat);
  for (std::size_t i = 1; i <= order.size(); ++i) {
    for (std::size_t j = i + 1; j <= order.size(); ++j) {
      BisetData b = hom_biset(cat, order.at(j), order.at(i));
      if (b.size() == 0) continue;
      for (Side side : {Side::Left, Side::Right}) {
        if (!is_permutation_projective(b, side, field)) {
          return {false, ProjectivityWitness{i, j, side}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace eigproj

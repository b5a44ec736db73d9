#include "eigproj/cmodule.hpp"

#include <algorithm>
#include <numeric>

#include "eigproj/error.hpp"

namespace eigproj {

std::size_t CModule::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

std::vector<Violation> validate_module(const CModule& m) {
  const FiniteCategory& cat = *m.category;
  std::vector<Violation> out;
  if (m.dims.size() != cat.object_count() || m.action.size() != cat.morphism_count()) {
    out.push_back({"shape", {}});
    return out;
  }
  bool shapes_ok = true;
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const FpMatrix& a = m.action[f];
    if (!(a.field() == m.field) || a.rows() != m.dims[cat.target(f)] ||
        a.cols() != m.dims[cat.source(f)]) {
      out.push_back({"shape", {cat.morphism_name(f)}});
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;
  for (ObjectId x = 0; x < cat.object_count(); ++x) {
    MorphismId id = cat.identity(x);
    if (!(m.action[id] == FpMatrix::identity(m.field, m.dims[x]))) {
      out.push_back({"identity", {cat.morphism_name(id)}});
    }
  }
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    for (ObjectId z = 0; z < cat.object_count(); ++z) {
      for (MorphismId g : cat.hom(cat.target(f), z)) {
        MorphismId gf = cat.compose_unchecked(g, f);
        if (!(m.action[gf] == m.action[g] * m.action[f])) {
          out.push_back({"functoriality", {cat.morphism_name(g), cat.morphism_name(f)}});
        }
      }
    }
  }
  return out;
}

CModule zero_module(CategoryPtr cat, FieldSpec field) {
  CModule m{cat, field, std::vector<std::size_t>(cat->object_count(), 0), {}};
  for (MorphismId f = 0; f < cat->morphism_count(); ++f) m.action.emplace_back(field, 0, 0);
  return m;
}

CModule constant_module(CategoryPtr cat, FieldSpec field) {
  CModule m{cat, field, std::vector<std::size_t>(cat->object_count(), 1), {}};
  for (MorphismId f = 0; f < cat->morphism_count(); ++f) m.action.push_back(FpMatrix::identity(field, 1));
  return m;
}

namespace {

void require_same_algebra(const CModule& a, const CModule& b) {
  if (a.category != b.category || !(a.field == b.field)) {
    throw Error(ErrorKind::Precondition, "modules over different categories or fields");
  }
}

}  // namespace

CModule direct_sum(const CModule& a, const CModule& b) {
  require_same_algebra(a, b);
  CModule m{a.category, a.field, {}, {}};
  for (std::size_t x = 0; x < a.dims.size(); ++x) m.dims.push_back(a.dims[x] + b.dims[x]);
  for (std::size_t f = 0; f < a.action.size(); ++f) m.action.push_back(block_diagonal(a.action[f], b.action[f]));
  return m;
}

CModule tensor_hat(const CModule& x, const CModule& y) {
  require_same_algebra(x, y);
  CModule m{x.category, x.field, {}, {}};
  for (std::size_t o = 0; o < x.dims.size(); ++o) m.dims.push_back(x.dims[o] * y.dims[o]);
  for (std::size_t f = 0; f < x.action.size(); ++f) m.action.push_back(kronecker(x.action[f], y.action[f]));
  return m;
}

FpMatrix tensor_swap(std::size_t dim_x, std::size_t dim_y, FieldSpec field) {
  FpMatrix p(field, dim_x * dim_y, dim_x * dim_y);
  for (std::size_t a = 0; a < dim_x; ++a)
    for (std::size_t b = 0; b < dim_y; ++b) p(b * dim_x + a, a * dim_y + b) = 1;
  return p;
}

CModule column_module(CategoryPtr cat, FieldSpec field, std::size_t q) {
  AdmissibleOrder order = admissible_order(*cat);
  if (q < 1 || q > order.size()) {
    throw Error(ErrorKind::OutOfRange, "column index " + std::to_string(q) + " out of range");
  }
  ObjectId xq = order.at(q);
  CModule m{cat, field, {}, {}};
  for (ObjectId y = 0; y < cat->object_count(); ++y) m.dims.push_back(cat->hom(xq, y).size());
  for (MorphismId f = 0; f < cat->morphism_count(); ++f) {
    auto from = cat->hom(xq, cat->source(f));
    auto to = cat->hom(xq, cat->target(f));
    FpMatrix a(field, to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      MorphismId image = cat->compose_unchecked(f, from[c]);
      a(std::find(to.begin(), to.end(), image) - to.begin(), c) = 1;
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

GroupAlgebraModule restrict_to_automorphisms(const CModule& m, ObjectId x) {
  GroupAlgebraModule out{automorphism_group(*m.category, x), m.field, m.dims[x], {}};
  for (MorphismId g : m.category->hom(x, x)) out.action.push_back(m.action[g]);
  return out;
}

QuotientSpace tensor_over_group_algebra(const BisetData& m, const GroupAlgebraModule& v) {
  if (!m.right_group.same_table(v.group)) {
    throw Error(ErrorKind::Precondition, "biset and module are over different groups");
  }
  const FieldSpec k = v.field;
  const std::size_t d = v.dim;
  SparseEchelon relations(k, m.size() * d);
  for (std::size_t b = 0; b < m.size(); ++b) {
    for (std::size_t g = 0; g < v.group.order(); ++g) {
      const FpMatrix& act = v.action[g];
      for (std::size_t e = 0; e < d; ++e) {
        // (b·g)⊗e − b⊗(g·e)
        SparseRow row{{m.act_right(b, g) * d + e, 1}};
        for (std::size_t w = 0; w < d; ++w)
          if (act(w, e)) row.emplace_back(b * d + w, k.neg(act(w, e)));
        relations.insert(std::move(row));
      }
    }
  }
  return quotient_by(relations);
}

QuotientSpace tensor_over_group_algebra(const BisetData& x, const BisetData& y, FieldSpec field) {
  return tensor_over_group_algebra(x, permutation_module(y, Side::Left, field));
}

TailRow tensor_over_tail(const CModule& x, std::size_t t) {
  const FiniteCategory& cat = *x.category;
  AdmissibleOrder order = admissible_order(cat);
  const std::size_t n = order.size();
  if (t < 1 || t + 1 > n) {
    throw Error(ErrorKind::OutOfRange, "cut index " + std::to_string(t) + " out of range");
  }
  const FieldSpec k = x.field;
  ObjectId xt = order.at(t);

  // offset[α] = first ambient index of α ⊗ X_j
  std::vector<std::size_t> offset(cat.morphism_count(), 0);
  std::vector<std::pair<MorphismId, std::size_t>> basis;
  for (std::size_t j = t + 1; j <= n; ++j) {
    ObjectId xj = order.at(j);
    for (MorphismId alpha : cat.hom(xj, xt)) {
      offset[alpha] = basis.size();
      for (std::size_t e = 0; e < x.dims[xj]; ++e) basis.emplace_back(alpha, e);
    }
  }
  const std::size_t ambient = basis.size();

  SparseEchelon relations(k, ambient);
  for (std::size_t l = t + 1; l <= n; ++l) {
    ObjectId xl = order.at(l);
    for (std::size_t j = l; j <= n; ++j) {
      ObjectId xj = order.at(j);
      for (MorphismId alpha : cat.hom(xl, xt)) {
        for (MorphismId beta : cat.hom(xj, xl)) {
          MorphismId ab = cat.compose_unchecked(alpha, beta);
          const FpMatrix& act = x.action[beta];
          for (std::size_t e = 0; e < x.dims[xj]; ++e) {
            // (α∘β)⊗e − α⊗(β·e)
            SparseRow r{{offset[ab] + e, 1}};
            for (std::size_t w = 0; w < x.dims[xl]; ++w)
              if (act(w, e)) r.emplace_back(offset[alpha] + w, k.neg(act(w, e)));
            relations.insert(std::move(r));
          }
        }
      }
    }
  }

  FpMatrix ambient_map(k, x.dims[xt], ambient);
  for (std::size_t c = 0; c < ambient; ++c) {
    auto [alpha, e] = basis[c];
    const FpMatrix& act = x.action[alpha];
    for (std::size_t r = 0; r < act.rows(); ++r) ambient_map(r, c) = act(r, e);
  }
  QuotientSpace quotient = quotient_by(relations);
  FpMatrix induced = ambient_map.select_columns(quotient.free_columns());
  return TailRow{t, std::move(basis), std::move(quotient), std::move(ambient_map),
                 std::move(induced)};
}

namespace {

FreeCover cover_from_generators(const CModule& x, const AdmissibleOrder& order,
                                std::vector<std::pair<std::size_t, Vector>> generators) {
  const FiniteCategory& cat = *x.category;
  const FieldSpec k = x.field;
  FreeCover out{CModule{x.category, k, {}, {}}, {}, std::move(generators)};

  // Basis at y: for each generator g at x_i, the morphisms hom(x_i, y).
  std::vector<std::vector<std::size_t>> offsets(cat.object_count());
  for (ObjectId y = 0; y < cat.object_count(); ++y) {
    std::size_t d = 0;
    for (const auto& [pos, v] : out.generators) {
      offsets[y].push_back(d);
      d += cat.hom(order.at(pos), y).size();
    }
    out.cover.dims.push_back(d);
  }
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    ObjectId s = cat.source(f), t = cat.target(f);
    FpMatrix a(k, out.cover.dims[t], out.cover.dims[s]);
    for (std::size_t g = 0; g < out.generators.size(); ++g) {
      ObjectId xi = order.at(out.generators[g].first);
      auto from = cat.hom(xi, s);
      auto to = cat.hom(xi, t);
      for (std::size_t c = 0; c < from.size(); ++c) {
        MorphismId image = cat.compose_unchecked(f, from[c]);
        std::size_t r = std::find(to.begin(), to.end(), image) - to.begin();
        a(offsets[t][g] + r, offsets[s][g] + c) = 1;
      }
    }
    out.cover.action.push_back(std::move(a));
  }
  for (ObjectId y = 0; y < cat.object_count(); ++y) {
    FpMatrix e(k, x.dims[y], out.cover.dims[y]);
    for (std::size_t g = 0; g < out.generators.size(); ++g) {
      const auto& [pos, v] = out.generators[g];
      auto homs = cat.hom(order.at(pos), y);
      for (std::size_t c = 0; c < homs.size(); ++c) {
        Vector image = x.action[homs[c]].apply(v);
        for (std::size_t r = 0; r < image.size(); ++r) e(r, offsets[y][g] + c) = image[r];
      }
    }
    out.epi.push_back(std::move(e));
  }
  return out;
}

Vector unit_vector(std::size_t dim, std::size_t k) {
  Vector v(dim, 0);
  v[k] = 1;
  return v;
}

}  // namespace

FreeCover free_cover(const CModule& x) {
  AdmissibleOrder order = admissible_order(*x.category);
  std::vector<std::pair<std::size_t, Vector>> gens;
  for (std::size_t i = 1; i <= order.size(); ++i) {
    std::size_t d = x.dims[order.at(i)];
    for (std::size_t e = 0; e < d; ++e) gens.emplace_back(i, unit_vector(d, e));
  }
  return cover_from_generators(x, order, std::move(gens));
}

FreeCover reduced_cover(const CModule& x) {
  const FiniteCategory& cat = *x.category;
  AdmissibleOrder order = admissible_order(cat);
  std::vector<std::pair<std::size_t, Vector>> gens;
  for (std::size_t i = order.size(); i >= 1; --i) {
    ObjectId xi = order.at(i);
    const std::size_t d = x.dims[xi];
    if (d == 0) continue;
    SparseEchelon span(x.field, d);
    for (const auto& [pos, v] : gens) {
      for (MorphismId alpha : cat.hom(order.at(pos), xi)) span.insert(to_sparse(x.action[alpha].apply(v)));
    }
    for (std::size_t e = 0; e < d && span.rank() < d; ++e) {
      Vector v = unit_vector(d, e);
      if (!span.insert(to_sparse(v))) continue;
      for (MorphismId g : cat.hom(xi, xi)) span.insert(to_sparse(x.action[g].apply(v)));
      gens.emplace_back(i, std::move(v));
    }
  }
  std::reverse(gens.begin(), gens.end());
  return cover_from_generators(x, order, std::move(gens));
}

bool cover_splits(const CModule& x, const FreeCover& fc) {
  const FiniteCategory& cat = *x.category;
  const FieldSpec k = x.field;
  AdmissibleOrder order = admissible_order(cat);
  const std::size_t n_obj = cat.object_count();

  // Kernel K(y) of the epi. Its basis rows carry an identity block at the
  // free columns, so a kernel vector is determined by those entries.
  std::vector<FpMatrix> basis;
  std::vector<std::vector<std::size_t>> free_cols(n_obj);
  for (ObjectId y = 0; y < n_obj; ++y) {
    const FpMatrix& e = fc.epi[y];
    basis.push_back(kernel(e));
    RowEchelon ech = rref(e);
    std::vector<bool> pivot(e.cols(), false);
    for (std::size_t p : ech.pivots) pivot[p] = true;
    for (std::size_t c = 0; c < e.cols(); ++c)
      if (!pivot[c]) free_cols[y].push_back(c);
  }

  // Unknowns: c_g in K(x_{i_g}) for each generator g, the image of the
  // generator's identity morphism under the retraction.
  std::vector<std::size_t> unknown_offset;
  std::size_t unknowns = 0;
  for (const auto& [pos, v] : fc.generators) {
    unknown_offset.push_back(unknowns);
    unknowns += basis[order.at(pos)].rows();
  }

  LinearSystem system(k, unknowns);
  for (ObjectId y = 0; y < n_obj; ++y) {
    const FpMatrix& ky = basis[y];
    const std::size_t dk = ky.rows();
    if (dk == 0) continue;

    // push[g][c]: the matrix K(x_{i_g}) -> K(y) of pushing forward along
    // the c-th morphism of hom(x_{i_g}, y).
    std::vector<std::vector<FpMatrix>> push(fc.generators.size());
    for (std::size_t g = 0; g < fc.generators.size(); ++g) {
      ObjectId xi = order.at(fc.generators[g].first);
      for (MorphismId alpha : cat.hom(xi, y)) {
        FpMatrix moved = fc.cover.action[alpha] * basis[xi].transpose();
        push[g].push_back(moved.select_rows(free_cols[y]));
      }
    }

    for (std::size_t m = 0; m < dk; ++m) {
      // Σ_{(g,α)} b_m[(g,α)] · K(α) c_g = b_m, read in K(y) coordinates.
      std::vector<Vector> coeffs(dk, Vector(unknowns, 0));
      std::size_t col = 0;
      for (std::size_t g = 0; g < fc.generators.size(); ++g) {
        for (std::size_t c = 0; c < push[g].size(); ++c, ++col) {
          Residue w = ky(m, col);
          if (!w) continue;
          const FpMatrix& a = push[g][c];
          for (std::size_t r = 0; r < dk; ++r)
            for (std::size_t s = 0; s < a.cols(); ++s)
              if (a(r, s)) {
                auto& slot = coeffs[r][unknown_offset[g] + s];
                slot = k.add(slot, k.mul(w, a(r, s)));
              }
        }
      }
      for (std::size_t r = 0; r < dk; ++r) {
        system.add_equation(std::span<const Residue>(coeffs[r]), r == m ? 1 : 0);
        if (!system.consistent()) return false;
      }
    }
  }
  return system.consistent();
}

bool is_projective(const CModule& x) { return cover_splits(x, reduced_cover(x)); }

}  // namespace eigproj

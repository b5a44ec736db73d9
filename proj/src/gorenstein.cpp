#include "eigproj/gorenstein.hpp"

#include <algorithm>

#include "eigproj/error.hpp"

namespace eigproj {

namespace {

void require_gorenstein(const FiniteCategory& cat, FieldSpec field) {
  auto res = is_category_projective(cat, field);
  if (!res.projective) {
    const auto& w = *res.witness;
    throw Error(ErrorKind::NotGorenstein,
                "category is not projective over F_" + std::to_string(field.p()) + ": hom set (" +
                    std::to_string(w.i) + "," + std::to_string(w.j) + ") fails on the " +
                    to_string(w.side) + " side");
  }
}

void require_valid_module(const CModule& x) {
  auto v = validate_module(x);
  if (!v.empty()) throw Error(ErrorKind::InvalidModule, "module is not a functor: " + v.front().message());
}

}  // namespace

GprojVerdict gproj_test_unchecked(const CModule& x) {
  GprojVerdict out;
  const std::size_t n = x.category->object_count();
  for (std::size_t t = 1; t < n; ++t) {
    TailRow row = tensor_over_tail(x, t);
    TailVerdict tv{t, row.quotient_dim(), row.map_rank(), false};
    tv.injective = tv.rank == tv.quotient_dim;
    out.overall = out.overall && tv.injective;
    out.tails.push_back(tv);
  }
  return out;
}

GprojVerdict gproj_test(const CModule& x) {
  require_gorenstein(*x.category, x.field);
  require_valid_module(x);
  return gproj_test_unchecked(x);
}

std::vector<GpnEntry> gpn_check(const CModule& x, std::size_t s) {
  const FiniteCategory& cat = *x.category;
  AdmissibleOrder order = admissible_order(cat);
  if (s < 1 || s > order.size()) throw Error(ErrorKind::OutOfRange, "support index out of range");
  for (std::size_t j = s + 1; j <= order.size(); ++j) {
    if (x.dims[order.at(j)] != 0) {
      throw Error(ErrorKind::Precondition, "module does not vanish above position " + std::to_string(s));
    }
  }
  if (!gproj_test(x).overall) throw Error(ErrorKind::Precondition, "module is not Gorenstein-projective");

  ObjectId xs = order.at(s);
  GroupAlgebraModule top = restrict_to_automorphisms(x, xs);
  std::vector<GpnEntry> out;
  for (std::size_t i = 1; i < s; ++i) {
    ObjectId xi = order.at(i);
    BisetData m = hom_biset(cat, xs, xi);
    QuotientSpace q = tensor_over_group_algebra(m, top);
    auto homs = cat.hom(xs, xi);
    FpMatrix induced(x.field, x.dims[xi], q.quotient_dim());
    for (std::size_t c = 0; c < q.quotient_dim(); ++c) {
      std::size_t amb = q.free_columns()[c];
      const FpMatrix& act = x.action[homs[amb / top.dim]];
      for (std::size_t r = 0; r < act.rows(); ++r) induced(r, c) = act(r, amb % top.dim);
    }
    GpnEntry e{i, s, q.quotient_dim(), rank(induced), false};
    e.injective = e.rank == e.domain_dim;
    out.push_back(e);
  }
  return out;
}

TailRow free_phi_star(const CModule& x, std::size_t t) {
  const FiniteCategory& cat = *x.category;
  if (!is_free(cat).free) throw Error(ErrorKind::NotFree, "category does not have unique factorization");
  AdmissibleOrder order = admissible_order(cat);
  const std::size_t n = order.size();
  if (t < 1 || t + 1 > n) throw Error(ErrorKind::OutOfRange, "cut index out of range");
  Unfactorizables unf = unfactorizables(cat);
  const FieldSpec k = x.field;
  ObjectId xt = order.at(t);

  std::vector<std::size_t> offset(cat.morphism_count(), 0);
  std::vector<std::pair<MorphismId, std::size_t>> basis;
  for (std::size_t j = t + 1; j <= n; ++j) {
    ObjectId xj = order.at(j);
    for (MorphismId u : unf.between(xj, xt)) {
      offset[u] = basis.size();
      for (std::size_t e = 0; e < x.dims[xj]; ++e) basis.emplace_back(u, e);
    }
  }
  SparseEchelon relations(k, basis.size());
  for (std::size_t j = t + 1; j <= n; ++j) {
    ObjectId xj = order.at(j);
    for (MorphismId u : unf.between(xj, xt)) {
      for (MorphismId g : cat.hom(xj, xj)) {
        MorphismId ug = cat.compose_unchecked(u, g);
        const FpMatrix& act = x.action[g];
        for (std::size_t e = 0; e < x.dims[xj]; ++e) {
          SparseRow r{{offset[ug] + e, 1}};
          for (std::size_t w = 0; w < x.dims[xj]; ++w)
            if (act(w, e)) r.emplace_back(offset[u] + w, k.neg(act(w, e)));
          relations.insert(std::move(r));
        }
      }
    }
  }
  FpMatrix ambient_map(k, x.dims[xt], basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto [u, e] = basis[c];
    const FpMatrix& act = x.action[u];
    for (std::size_t r = 0; r < act.rows(); ++r) ambient_map(r, c) = act(r, e);
  }
  QuotientSpace quotient = quotient_by(relations);
  FpMatrix induced = ambient_map.select_columns(quotient.free_columns());
  return TailRow{t, std::move(basis), std::move(quotient), std::move(ambient_map), std::move(induced)};
}

const char* to_string(GptMethod m) {
  switch (m) {
    case GptMethod::ColumnCriterion: return "column-criterion";
    case GptMethod::MonoCriterion: return "mono-criterion";
    case GptMethod::PosetCriterion: return "poset-criterion";
  }
  return "?";
}

const char* to_string(GptOutcome o) {
  switch (o) {
    case GptOutcome::Closed: return "closed";
    case GptOutcome::NotClosed: return "not-closed";
    case GptOutcome::Abstain: return "abstain";
  }
  return "?";
}

GptVerdict gpt_closed(const CategoryPtr& cat, FieldSpec field, GptOptions options) {
  require_gorenstein(*cat, field);
  GptVerdict out;
  out.method = GptMethod::ColumnCriterion;
  out.field = field.p();
  const std::size_t n = cat->object_count();
  std::vector<CModule> columns;
  for (std::size_t q = 1; q <= n; ++q) columns.push_back(column_module(cat, field, q));

  for (std::size_t p = 1; p <= n; ++p) {
    for (std::size_t q = p; q <= n; ++q) {
      CModule x = tensor_hat(columns[p - 1], columns[q - 1]);
      ColumnPair pair{p, q, gproj_test_unchecked(x), std::nullopt};
      if (options.check_projective) {
        pair.projective = is_projective(x);
        if (*pair.projective != pair.gproj.overall) {
          out.consistency.push_back("C_" + std::to_string(p) + " (x) C_" + std::to_string(q) +
                                    ": gproj " + (pair.gproj.overall ? "passes" : "fails") +
                                    " but projectivity " + (*pair.projective ? "holds" : "fails"));
        }
      }
      if (!pair.gproj.overall) {
        auto bad = std::find_if(pair.gproj.tails.begin(), pair.gproj.tails.end(),
                                [](const TailVerdict& v) { return !v.injective; });
        ColumnWitness w{p, q, bad->t};
        out.failures.push_back(w);
        if (out.outcome == GptOutcome::Closed) {
          out.outcome = GptOutcome::NotClosed;
          out.witness = w;
        }
      }
      out.pairs.push_back(std::move(pair));
      if (!options.audit && out.outcome == GptOutcome::NotClosed) return out;
    }
  }
  return out;
}

GptVerdict gpt_closed(const FiniteCategory& cat, FieldSpec field, GptOptions options) {
  return gpt_closed(std::make_shared<const FiniteCategory>(cat), field, options);
}

GptVerdict gpt_closed_via_mono(const FiniteCategory& cat, FieldSpec field) {
  require_gorenstein(cat, field);
  GptVerdict out;
  out.method = GptMethod::MonoCriterion;
  out.field = field.p();
  if (auto f = first_non_mono(cat)) {
    out.outcome = GptOutcome::NotClosed;
    out.witness = MonoWitness{cat.morphism_name(*f)};
  } else if (is_free(cat).free) {
    out.outcome = GptOutcome::Closed;
  } else {
    out.outcome = GptOutcome::Abstain;
  }
  return out;
}

}  // namespace eigproj

#include "eigproj/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "eigproj/error.hpp"

namespace eigproj {

// --- FiniteCategory ---------------------------------------------------------

FiniteCategory FiniteCategory::from_data(const CategoryData& data) {
  FiniteCategory cat;
  cat.objects_ = data.objects;
  for (ObjectId x = 0; x < data.objects.size(); ++x) {
    if (!cat.object_index_.emplace(data.objects[x], x).second) {
      throw Error(ErrorKind::Malformed, "duplicate object id '" + data.objects[x] + "'");
    }
  }
  auto object = [&](const std::string& id) {
    auto it = cat.object_index_.find(id);
    if (it == cat.object_index_.end()) {
      throw Error(ErrorKind::Malformed, "unknown object id '" + id + "'");
    }
    return it->second;
  };
  for (MorphismId f = 0; f < data.morphisms.size(); ++f) {
    const auto& m = data.morphisms[f];
    if (!cat.morphism_index_.emplace(m.id, f).second) {
      throw Error(ErrorKind::Malformed, "duplicate morphism id '" + m.id + "'");
    }
    cat.names_.push_back(m.id);
    cat.src_.push_back(object(m.src));
    cat.tgt_.push_back(object(m.tgt));
  }
  auto morphism = [&](const std::string& id) {
    auto it = cat.morphism_index_.find(id);
    if (it == cat.morphism_index_.end()) {
      throw Error(ErrorKind::Malformed, "unknown morphism id '" + id + "'");
    }
    return it->second;
  };

  cat.identity_.assign(cat.objects_.size(), 0);
  std::vector<bool> has_identity(cat.objects_.size(), false);
  for (const auto& [obj, mor] : data.identities) {
    ObjectId x = object(obj);
    cat.identity_[x] = morphism(mor);
    has_identity[x] = true;
  }
  for (ObjectId x = 0; x < cat.objects_.size(); ++x) {
    if (!has_identity[x]) {
      throw Error(ErrorKind::Malformed, "object '" + cat.objects_[x] + "' has no identity");
    }
  }

  const std::size_t n = cat.names_.size();
  cat.table_.assign(n * n, -1);
  for (const auto& [g_id, f_id, gf_id] : data.compose) {
    MorphismId g = morphism(g_id), f = morphism(f_id), gf = morphism(gf_id);
    if (!cat.composable(g, f)) {
      cat.stray_.emplace_back(g, f);
      continue;
    }
    auto& slot = cat.table_[g * n + f];
    if (slot >= 0 && static_cast<MorphismId>(slot) != gf) {
      throw Error(ErrorKind::Malformed,
                  "conflicting composites listed for (" + g_id + "," + f_id + ")");
    }
    slot = static_cast<std::int64_t>(gf);
  }

  cat.homs_.assign(cat.objects_.size() * cat.objects_.size(), {});
  for (MorphismId f = 0; f < n; ++f) {
    cat.homs_[cat.src_[f] * cat.objects_.size() + cat.tgt_[f]].push_back(f);
  }
  return cat;
}

FiniteCategory FiniteCategory::from_function(
    const CategoryData& data, const std::function<MorphismId(MorphismId, MorphismId)>& compose) {
  CategoryData bare = data;
  bare.compose.clear();
  FiniteCategory cat = from_data(bare);
  const std::size_t n = cat.names_.size();
  for (MorphismId f = 0; f < n; ++f)
    for (MorphismId g = 0; g < n; ++g)
      if (cat.composable(g, f)) cat.table_[g * n + f] = static_cast<std::int64_t>(compose(g, f));
  return cat;
}

CategoryData FiniteCategory::to_data() const {
  CategoryData data;
  data.objects = objects_;
  for (MorphismId f = 0; f < names_.size(); ++f) {
    data.morphisms.push_back({names_[f], objects_[src_[f]], objects_[tgt_[f]]});
  }
  for (ObjectId x = 0; x < objects_.size(); ++x) {
    data.identities[objects_[x]] = names_[identity_[x]];
  }
  const std::size_t n = names_.size();
  for (MorphismId g = 0; g < n; ++g)
    for (MorphismId f = 0; f < n; ++f)
      if (table_[g * n + f] >= 0)
        data.compose.push_back({names_[g], names_[f], names_[table_[g * n + f]]});
  return data;
}

std::optional<ObjectId> FiniteCategory::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> FiniteCategory::find_morphism(const std::string& name) const {
  auto it = morphism_index_.find(name);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

// --- validation -------------------------------------------------------------

std::string Violation::message() const {
  std::string out = kind + " at (";
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    if (i) out += ",";
    out += morphisms[i];
  }
  return out + ")";
}

std::vector<Violation> validate(const FiniteCategory& cat) {
  std::vector<Violation> out;
  const std::size_t n = cat.morphism_count();
  auto name = [&](MorphismId f) { return cat.morphism_name(f); };

  for (ObjectId x = 0; x < cat.object_count(); ++x) {
    MorphismId id = cat.identity(x);
    if (cat.source(id) != x || cat.target(id) != x) {
      out.push_back({"identity endpoints", {name(id)}});
    }
  }
  for (auto [g, f] : cat.stray_entries()) {
    out.push_back({"non-composable entry", {name(g), name(f)}});
  }

  std::vector<std::vector<MorphismId>> outgoing(cat.object_count());
  for (MorphismId f = 0; f < n; ++f) outgoing[cat.source(f)].push_back(f);

  for (MorphismId f = 0; f < n; ++f) {
    for (MorphismId g : outgoing[cat.target(f)]) {
      auto gf = cat.compose(g, f);
      if (!gf) {
        out.push_back({"missing composite", {name(g), name(f)}});
      } else if (cat.source(*gf) != cat.source(f) || cat.target(*gf) != cat.target(g)) {
        out.push_back({"endpoint mismatch", {name(g), name(f)}});
      }
    }
  }

  for (MorphismId f = 0; f < n; ++f) {
    auto left = cat.compose(cat.identity(cat.target(f)), f);
    auto right = cat.compose(f, cat.identity(cat.source(f)));
    bool ok = left && right && *left == f && *right == f;
    if (!ok) out.push_back({"identity law", {name(f)}});
  }

  for (MorphismId f = 0; f < n; ++f) {
    for (MorphismId g : outgoing[cat.target(f)]) {
      auto gf = cat.compose(g, f);
      if (!gf) continue;
      for (MorphismId h : outgoing[cat.target(g)]) {
        auto hg = cat.compose(h, g);
        if (!hg) continue;
        std::optional<MorphismId> lhs, rhs;
        if (cat.composable(h, *gf)) lhs = cat.compose(h, *gf);
        if (cat.composable(*hg, f)) rhs = cat.compose(*hg, f);
        if (!lhs || !rhs) continue;  // reported as endpoint/missing above
        if (*lhs != *rhs) out.push_back({"associativity", {name(h), name(g), name(f)}});
      }
    }
  }
  return out;
}

// --- structural predicates --------------------------------------------------

bool is_iso(const FiniteCategory& cat, MorphismId f) {
  ObjectId x = cat.source(f), y = cat.target(f);
  for (MorphismId g : cat.hom(y, x)) {
    if (cat.compose(g, f) == cat.identity(x) && cat.compose(f, g) == cat.identity(y)) {
      return true;
    }
  }
  return false;
}

bool is_ei(const FiniteCategory& cat) {
  for (ObjectId x = 0; x < cat.object_count(); ++x)
    for (MorphismId f : cat.hom(x, x))
      if (!is_iso(cat, f)) return false;
  return true;
}

bool is_skeletal(const FiniteCategory& cat) {
  for (MorphismId f = 0; f < cat.morphism_count(); ++f)
    if (cat.source(f) != cat.target(f) && is_iso(cat, f)) return false;
  return true;
}

AdmissibleOrder::AdmissibleOrder(std::vector<ObjectId> objects)
    : objects_(std::move(objects)), positions_(objects_.size(), 0) {
  for (std::size_t i = 0; i < objects_.size(); ++i) positions_.at(objects_[i]) = i + 1;
}

AdmissibleOrder admissible_order(const FiniteCategory& cat) {
  const std::size_t n = cat.object_count();
  // A source may be placed only after every target it maps to.
  std::vector<std::set<ObjectId>> waits_for(n);
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    if (cat.source(f) != cat.target(f)) waits_for[cat.source(f)].insert(cat.target(f));
  }
  std::vector<bool> placed(n, false);
  std::vector<ObjectId> order;
  while (order.size() < n) {
    std::optional<ObjectId> next;
    for (ObjectId x = 0; x < n && !next; ++x) {
      if (placed[x]) continue;
      bool ready = std::all_of(waits_for[x].begin(), waits_for[x].end(),
                               [&](ObjectId y) { return placed[y]; });
      if (ready) next = x;
    }
    if (!next) {
      throw Error(ErrorKind::InvalidCategory,
                  "no admissible order: distinct objects have morphisms in both directions");
    }
    placed[*next] = true;
    order.push_back(*next);
  }
  return AdmissibleOrder(std::move(order));
}

bool is_mono(const FiniteCategory& cat, MorphismId f) {
  ObjectId x = cat.source(f);
  for (ObjectId y = 0; y < cat.object_count(); ++y) {
    std::set<MorphismId> seen;
    for (MorphismId g : cat.hom(y, x)) {
      if (!seen.insert(cat.compose_unchecked(f, g)).second) return false;
    }
  }
  return true;
}

std::optional<MorphismId> first_non_mono(const FiniteCategory& cat) {
  for (MorphismId f = 0; f < cat.morphism_count(); ++f)
    if (!is_mono(cat, f)) return f;
  return std::nullopt;
}

std::span<const MorphismId> Unfactorizables::between(ObjectId from, ObjectId to) const {
  auto it = by_endpoints.find({from, to});
  if (it == by_endpoints.end()) return {};
  return it->second;
}

Unfactorizables unfactorizables(const FiniteCategory& cat) {
  const std::size_t n = cat.morphism_count();
  std::vector<bool> iso(n);
  for (MorphismId f = 0; f < n; ++f) iso[f] = is_iso(cat, f);
  std::vector<bool> factorizable(n, false);
  for (MorphismId beta = 0; beta < n; ++beta) {
    if (iso[beta]) continue;
    for (ObjectId z = 0; z < cat.object_count(); ++z) {
      for (MorphismId gamma : cat.hom(cat.target(beta), z)) {
        if (!iso[gamma]) factorizable[cat.compose_unchecked(gamma, beta)] = true;
      }
    }
  }
  Unfactorizables out;
  out.member.assign(n, false);
  for (MorphismId f = 0; f < n; ++f) {
    if (!iso[f] && !factorizable[f]) {
      out.member[f] = true;
      out.by_endpoints[{cat.source(f), cat.target(f)}].push_back(f);
    }
  }
  return out;
}

namespace {

MorphismId inverse_of(const FiniteCategory& cat, MorphismId g) {
  ObjectId x = cat.source(g);
  for (MorphismId h : cat.hom(x, x))
    if (cat.compose_unchecked(g, h) == cat.identity(x)) return h;
  throw Error(ErrorKind::InvalidCategory, "automorphism without inverse");
}

}  // namespace

FreenessResult is_free(const FiniteCategory& cat) {
  AdmissibleOrder order = admissible_order(cat);
  Unfactorizables unf = unfactorizables(cat);
  const std::size_t n = order.size();
  for (std::size_t t = 1; t <= n; ++t) {
    ObjectId xt = order.at(t);
    for (std::size_t q = t + 1; q <= n; ++q) {
      ObjectId xq = order.at(q);
      auto targets = cat.hom(xq, xt);
      if (targets.empty()) continue;
      std::map<MorphismId, std::vector<std::pair<MorphismId, MorphismId>>> preimages;
      for (std::size_t j = t + 1; j <= q; ++j) {
        ObjectId xj = order.at(j);
        auto auts = cat.hom(xj, xj);
        std::set<std::pair<MorphismId, MorphismId>> orbits;
        for (MorphismId u : unf.between(xj, xt)) {
          for (MorphismId beta : cat.hom(xq, xj)) {
            // (u, β) ~ (u∘g, g⁻¹∘β); the least pair names the orbit.
            std::pair<MorphismId, MorphismId> rep{u, beta};
            for (MorphismId g : auts) {
              std::pair<MorphismId, MorphismId> cand{
                  cat.compose_unchecked(u, g),
                  cat.compose_unchecked(inverse_of(cat, g), beta)};
              rep = std::min(rep, cand);
            }
            orbits.insert(rep);
          }
        }
        for (auto [u, beta] : orbits) {
          preimages[cat.compose_unchecked(u, beta)].emplace_back(u, beta);
        }
      }
      for (MorphismId f : targets) {
        auto it = preimages.find(f);
        std::size_t count = it == preimages.end() ? 0 : it->second.size();
        if (count != 1) {
          FreenessCounterexample cx{t, q, f, {}};
          if (it != preimages.end()) cx.preimages = it->second;
          return {false, cx};
        }
      }
    }
  }
  return {true, std::nullopt};
}

// --- groups -----------------------------------------------------------------

GroupTable GroupTable::from_table(std::vector<std::string> names, std::vector<std::size_t> mult) {
  const std::size_t n = names.size();
  if (n == 0 || mult.size() != n * n) {
    throw Error(ErrorKind::Malformed, "group table has wrong size");
  }
  for (std::size_t v : mult)
    if (v >= n) throw Error(ErrorKind::Malformed, "group table not closed");
  GroupTable g;
  g.names = std::move(names);
  g.mult = std::move(mult);
  std::optional<std::size_t> unit;
  for (std::size_t e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.multiply(e, a) == a && g.multiply(a, e) == a;
    if (ok) unit = e;
  }
  if (!unit) throw Error(ErrorKind::Malformed, "group table has no unit");
  g.unit = *unit;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) {
          throw Error(ErrorKind::Malformed, "group table not associative");
        }
  g.inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (g.multiply(a, b) == g.unit && g.multiply(b, a) == g.unit) {
        g.inverse[a] = b;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::Malformed, "group element without inverse");
  }
  return g;
}

GroupTable GroupTable::trivial() { return from_table({"e"}, {0}); }

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Malformed, "cyclic group of order 0");
  std::vector<std::string> names;
  std::vector<std::size_t> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = (a + b) % n;
  }
  return from_table(std::move(names), std::move(mult));
}

GroupTable GroupTable::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back({char('0' + q[0]), char('0' + q[1]), char('0' + q[2])});
  std::vector<std::size_t> mult(36);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[a][perms[b][k]];
      mult[a * 6 + b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
    }
  return from_table(std::move(names), std::move(mult));
}

GroupTable GroupTable::product(const GroupTable& g, const GroupTable& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::string> names;
  std::vector<std::size_t> mult(n * n);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < h.order(); ++b) names.push_back("(" + g.names[a] + "," + h.names[b] + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t a = g.multiply(x / h.order(), y / h.order());
      std::size_t b = h.multiply(x % h.order(), y % h.order());
      mult[x * n + y] = a * h.order() + b;
    }
  return from_table(std::move(names), std::move(mult));
}

GroupTable automorphism_group(const FiniteCategory& cat, ObjectId x) {
  auto elems = cat.hom(x, x);
  std::vector<std::string> names;
  std::vector<std::size_t> mult(elems.size() * elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a) {
    names.push_back(cat.morphism_name(elems[a]));
    for (std::size_t b = 0; b < elems.size(); ++b) {
      MorphismId ab = cat.compose_unchecked(elems[a], elems[b]);
      auto it = std::find(elems.begin(), elems.end(), ab);
      mult[a * elems.size() + b] = static_cast<std::size_t>(it - elems.begin());
    }
  }
  try {
    return GroupTable::from_table(std::move(names), std::move(mult));
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidCategory,
                "endomorphisms of '" + cat.object_name(x) + "' do not form a group: " + e.what());
  }
}

}  // namespace eigproj

#include "eigproj/freegen.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>

#include "eigproj/error.hpp"

namespace eigproj {

GroupTable GroupSpec::build() const {
  switch (kind) {
    case Kind::Trivial: return GroupTable::trivial();
    case Kind::Cyclic: return GroupTable::cyclic(order);
    case Kind::Symmetric3: return GroupTable::symmetric3();
    case Kind::Table: return table;
  }
  return GroupTable::trivial();
}

std::size_t default_morphism_cap() {
  if (const char* env = std::getenv("EIGPROJ_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2000;
}

BisetData build_biset(const BisetSpec& spec, const GroupTable& target, const GroupTable& source) {
  if (spec.kind == BisetSpec::Kind::Explicit) {
    const BisetData& b = spec.biset;
    if (!b.left_group.same_table(target) || !b.right_group.same_table(source)) {
      throw Error(ErrorKind::Malformed, "biset groups do not match the arrow's endpoints");
    }
    auto problems = validate_biset(b);
    if (!problems.empty()) throw Error(ErrorKind::Malformed, "invalid biset: " + problems.front());
    return b;
  }
  if (spec.rank == 0) throw Error(ErrorKind::Malformed, "free biset of rank 0");
  const std::size_t nt = target.order(), ns = source.order(), r = spec.rank;
  BisetData b;
  b.left_group = target;
  b.right_group = source;
  auto index = [&](std::size_t h, std::size_t k, std::size_t g) { return (h * r + k) * ns + g; };
  for (std::size_t h = 0; h < nt; ++h)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t g = 0; g < ns; ++g)
        b.basis.push_back(target.names[h] + "." + std::to_string(k) + "." + source.names[g]);
  b.left.resize(nt * b.size());
  b.right.resize(b.size() * ns);
  for (std::size_t h = 0; h < nt; ++h)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t g = 0; g < ns; ++g) {
        std::size_t x = index(h, k, g);
        for (std::size_t a = 0; a < nt; ++a) b.left[a * b.size() + x] = index(target.multiply(a, h), k, g);
        for (std::size_t a = 0; a < ns; ++a) b.right[x * ns + a] = index(h, k, source.multiply(g, a));
      }
  return b;
}

BisetData coset_biset(const GroupTable& target, const GroupTable& source,
                      const std::vector<std::size_t>& gens) {
  GroupTable p = GroupTable::product(target, source);
  const std::size_t ns = source.order();
  std::set<std::size_t> h{p.unit};
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t x : std::vector<std::size_t>(h.begin(), h.end()))
      for (std::size_t g : gens)
        if (h.insert(p.multiply(x, g)).second) grew = true;
  }
  // Left cosets kH, numbered by their least element.
  std::vector<std::size_t> coset_of(p.order(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> reps;
  for (std::size_t k = 0; k < p.order(); ++k) {
    if (coset_of[k] != static_cast<std::size_t>(-1)) continue;
    for (std::size_t x : h) coset_of[p.multiply(k, x)] = reps.size();
    reps.push_back(k);
  }
  BisetData b;
  b.left_group = target;
  b.right_group = source;
  for (std::size_t k : reps) b.basis.push_back("[" + p.names[k] + "]");
  b.left.resize(target.order() * reps.size());
  b.right.resize(reps.size() * ns);
  for (std::size_t c = 0; c < reps.size(); ++c) {
    std::size_t k = reps[c];
    for (std::size_t a = 0; a < target.order(); ++a)
      b.left[a * reps.size() + c] = coset_of[p.multiply(a * ns + source.unit, k)];
    for (std::size_t g = 0; g < ns; ++g)
      b.right[c * ns + g] = coset_of[p.multiply(target.unit * ns + source.inverse[g], k)];
  }
  return b;
}

namespace {

struct Generator {
  std::vector<GroupTable> groups;   // by position - 1
  std::vector<ArrowSpec> arrows;
  std::vector<BisetData> bisets;    // by arrow

  // Interior group elements act on a tuple along a path: the k-th interior
  // vertex's g sends b_{k-1} to g·b_{k-1} and b_k to b_k·g⁻¹.
  std::vector<std::size_t> canonical(const std::vector<std::size_t>& path,
                                     const std::vector<std::size_t>& tuple) const {
    const std::size_t m = path.size();
    std::vector<std::size_t> radix;
    for (std::size_t k = 1; k < m; ++k) radix.push_back(groups[arrows[path[k - 1]].target - 1].order());
    std::vector<std::size_t> g(radix.size(), 0);
    std::vector<std::size_t> best = tuple;
    std::vector<std::size_t> cand(m);
    while (true) {
      for (std::size_t k = 0; k < m; ++k) {
        std::size_t b = tuple[k];
        const BisetData& bs = bisets[path[k]];
        if (k + 1 < m) b = bs.act_left(g[k], b);
        if (k > 0) b = bs.act_right(b, bs.right_group.inverse[g[k - 1]]);
        cand[k] = b;
      }
      best = std::min(best, cand);
      std::size_t pos = 0;
      while (pos < g.size() && ++g[pos] == radix[pos]) g[pos++] = 0;
      if (pos == g.size()) break;
    }
    return best;
  }

  void paths_from(std::size_t v, std::size_t to, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) const {
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (arrows[a].source != v || arrows[a].target < to) continue;
      cur.push_back(a);
      if (arrows[a].target == to) out.push_back(cur);
      else paths_from(arrows[a].target, to, cur, out);
      cur.pop_back();
    }
  }
};

struct PathMorphism {
  std::vector<std::size_t> path;
  std::vector<std::size_t> tuple;
  auto operator<=>(const PathMorphism&) const = default;
};

}  // namespace

FiniteCategory generate_category(const FreeEISpec& spec, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(default_morphism_cap());
  const std::size_t n = spec.groups.size();
  if (n == 0) throw Error(ErrorKind::Malformed, "spec has no objects");
  Generator gen;
  for (const auto& g : spec.groups) gen.groups.push_back(g.build());
  gen.arrows = spec.arrows;
  for (const auto& a : spec.arrows) {
    if (a.target < 1 || a.source > n || a.source <= a.target) {
      throw Error(ErrorKind::Malformed, "arrow must run from a larger to a smaller position");
    }
    gen.bisets.push_back(build_biset(a.biset, gen.groups[a.target - 1], gen.groups[a.source - 1]));
  }

  CategoryData data;
  // kind: automorphism (position, element) or path morphism
  struct Entry {
    std::size_t src, tgt;  // positions
    std::size_t element = 0;
    std::optional<PathMorphism> path;
  };
  std::vector<Entry> entries;
  std::map<PathMorphism, MorphismId> path_index;
  std::vector<MorphismId> aut_offset(n);

  for (std::size_t i = 1; i <= n; ++i) {
    const std::string obj = "x" + std::to_string(i);
    data.objects.push_back(obj);
    aut_offset[i - 1] = entries.size();
    for (std::size_t g = 0; g < gen.groups[i - 1].order(); ++g) {
      std::string id = "a" + std::to_string(i) + "_" + std::to_string(g);
      data.morphisms.push_back({id, obj, obj});
      if (g == gen.groups[i - 1].unit) data.identities[obj] = id;
      entries.push_back({i, i, g, std::nullopt});
    }
  }
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      std::vector<std::vector<std::size_t>> paths;
      std::vector<std::size_t> cur;
      gen.paths_from(j, i, cur, paths);
      std::set<PathMorphism> hom;
      for (const auto& path : paths) {
        std::vector<std::size_t> radix;
        for (std::size_t a : path) radix.push_back(gen.bisets[a].size());
        std::vector<std::size_t> tuple(path.size(), 0);
        if (std::find(radix.begin(), radix.end(), 0) != radix.end()) continue;
        while (true) {
          hom.insert({path, gen.canonical(path, tuple)});
          if (entries.size() + hom.size() > limit) {
            throw Error(ErrorKind::CapExceeded,
                        "category exceeds the cap of " + std::to_string(limit) + " morphisms");
          }
          std::size_t pos = 0;
          while (pos < tuple.size() && ++tuple[pos] == radix[pos]) tuple[pos++] = 0;
          if (pos == tuple.size()) break;
        }
      }
      std::size_t k = 0;
      for (const auto& pm : hom) {
        std::string id = "f" + std::to_string(j) + "_" + std::to_string(i) + "_" + std::to_string(k++);
        data.morphisms.push_back({id, data.objects[j - 1], data.objects[i - 1]});
        path_index[pm] = entries.size();
        entries.push_back({j, i, 0, pm});
      }
    }
  }

  auto lookup = [&](const std::vector<std::size_t>& path, const std::vector<std::size_t>& tuple) {
    return path_index.at(PathMorphism{path, gen.canonical(path, tuple)});
  };
  auto compose = [&](MorphismId g, MorphismId f) -> MorphismId {
    const Entry& eg = entries[g];
    const Entry& ef = entries[f];
    if (!eg.path && !ef.path) {
      return aut_offset[eg.src - 1] + gen.groups[eg.src - 1].multiply(eg.element, ef.element);
    }
    if (!eg.path) {
      auto tuple = ef.path->tuple;
      const BisetData& last = gen.bisets[ef.path->path.back()];
      tuple.back() = last.act_left(eg.element, tuple.back());
      return lookup(ef.path->path, tuple);
    }
    if (!ef.path) {
      auto tuple = eg.path->tuple;
      const BisetData& first = gen.bisets[eg.path->path.front()];
      tuple.front() = first.act_right(tuple.front(), ef.element);
      return lookup(eg.path->path, tuple);
    }
    auto path = ef.path->path;
    auto tuple = ef.path->tuple;
    path.insert(path.end(), eg.path->path.begin(), eg.path->path.end());
    tuple.insert(tuple.end(), eg.path->tuple.begin(), eg.path->tuple.end());
    return lookup(path, tuple);
  };
  return FiniteCategory::from_function(data, compose);
}

namespace {

// Deterministic across standard libraries, unlike the distributions.
std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

GroupSpec random_group(std::mt19937_64& rng) {
  switch (draw(rng, 4)) {
    case 0: return GroupSpec::trivial();
    case 1: return GroupSpec::cyclic(2);
    case 2: return GroupSpec::cyclic(3);
    default: return GroupSpec::symmetric3();
  }
}

std::optional<BisetSpec> random_biset(std::mt19937_64& rng, const GroupTable& target,
                                      const GroupTable& source, const RandomBounds& bounds) {
  const std::size_t free_size = target.order() * source.order();
  bool want_explicit = draw(rng, 100) < bounds.explicit_percent;
  if (!want_explicit && free_size <= bounds.max_biset) {
    std::size_t rank = (2 * free_size <= bounds.max_biset && draw(rng, 4) == 0) ? 2 : 1;
    return BisetSpec::free(rank);
  }
  const std::size_t order = free_size;
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<std::size_t> gens;
    std::size_t count = 1 + draw(rng, 2);
    for (std::size_t c = 0; c < count; ++c) gens.push_back(draw(rng, order));
    BisetData b = coset_biset(target, source, gens);
    if (b.size() <= bounds.max_biset) return BisetSpec::explicit_biset(std::move(b));
  }
  return std::nullopt;
}

bool within_bounds(const FreeEISpec& spec, const RandomBounds& bounds) {
  try {
    FiniteCategory cat = generate_category(spec, bounds.max_morphisms);
    for (ObjectId x = 0; x < cat.object_count(); ++x)
      for (ObjectId y = 0; y < cat.object_count(); ++y)
        if (x != y && cat.hom(x, y).size() > bounds.max_hom) return false;
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CapExceeded) return false;
    throw;
  }
}

}  // namespace

FreeEISpec random_spec(std::uint64_t seed, const RandomBounds& bounds) {
  std::mt19937_64 rng(seed);
  FreeEISpec spec;
  const std::size_t max_objects = std::max<std::size_t>(bounds.max_objects, 1);
  const std::size_t n = max_objects == 1 ? 1 : 2 + draw(rng, max_objects - 1);
  for (std::size_t i = 0; i < n; ++i) spec.groups.push_back(random_group(rng));
  std::vector<GroupTable> groups;
  for (const auto& g : spec.groups) groups.push_back(g.build());

  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      if (draw(rng, 3) == 0) continue;
      auto b = random_biset(rng, groups[i - 1], groups[j - 1], bounds);
      if (!b) continue;
      spec.arrows.push_back({j, i, std::move(*b)});
      if (!within_bounds(spec, bounds)) spec.arrows.pop_back();
    }
  }
  return spec;
}

}  // namespace eigproj

#include "eigproj/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "eigproj/error.hpp"

namespace eigproj {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Malformed, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t as_count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    malformed(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> as_counts(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(as_count(v, what));
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    malformed("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& value) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Precondition, "cannot write '" + path.string() + "'");
  out << value.dump(2) << "\n";
}

// --- categories -------------------------------------------------------------

CategoryData category_data_from_json(const Json& j) {
  CategoryData data;
  const Json& objects = field(j, "objects");
  if (!objects.is_array()) malformed("'objects' must be an array");
  for (const auto& o : objects) data.objects.push_back(as_string(o, "object id"));
  const Json& morphisms = field(j, "morphisms");
  if (!morphisms.is_array()) malformed("'morphisms' must be an array");
  for (const auto& m : morphisms) {
    data.morphisms.push_back({as_string(field(m, "id"), "morphism id"), as_string(field(m, "src"), "src"),
                              as_string(field(m, "tgt"), "tgt")});
  }
  const Json& ids = field(j, "identities");
  if (!ids.is_object()) malformed("'identities' must be an object");
  for (const auto& [obj, mor] : ids.items()) data.identities[obj] = as_string(mor, "identity");
  const Json& compose = field(j, "compose");
  if (!compose.is_array()) malformed("'compose' must be an array");
  for (const auto& c : compose) {
    if (!c.is_array() || c.size() != 3) malformed("compose entries must be [g, f, gf]");
    data.compose.push_back({as_string(c[0], "g"), as_string(c[1], "f"), as_string(c[2], "gf")});
  }
  return data;
}

FiniteCategory category_from_json(const Json& j) { return FiniteCategory::from_data(category_data_from_json(j)); }

Json category_to_json(const FiniteCategory& cat) {
  CategoryData data = cat.to_data();
  Json j;
  j["objects"] = data.objects;
  Json morphisms = Json::array();
  for (const auto& m : data.morphisms) morphisms.push_back({{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
  j["morphisms"] = std::move(morphisms);
  Json ids = Json::object();
  for (ObjectId x = 0; x < cat.object_count(); ++x) ids[cat.object_name(x)] = cat.morphism_name(cat.identity(x));
  j["identities"] = std::move(ids);
  Json compose = Json::array();
  for (const auto& c : data.compose) compose.push_back({c[0], c[1], c[2]});
  j["compose"] = std::move(compose);
  return j;
}

std::string category_digest(const FiniteCategory& cat) {
  Json j = category_to_json(cat);
  std::vector<Json> entries(j["compose"].begin(), j["compose"].end());
  std::sort(entries.begin(), entries.end());
  j["compose"] = entries;
  return "sha256:" + sha256_hex(j.dump());
}

// --- modules ----------------------------------------------------------------

CModule module_from_json(const Json& j, CategoryPtr cat) {
  std::string digest = as_string(field(j, "category_digest"), "category_digest");
  if (digest != category_digest(*cat)) {
    throw Error(ErrorKind::Precondition, "module was written for a different category (digest mismatch)");
  }
  const Json& fj = field(j, "field");
  std::size_t p = as_count(field(fj, "p"), "field.p");
  if (p >= (1u << 16)) malformed("field characteristic out of range");
  FieldSpec k(static_cast<std::uint32_t>(p));

  CModule m{cat, k, std::vector<std::size_t>(cat->object_count(), 0), {}};
  const Json& dims = field(j, "dims");
  if (!dims.is_object()) malformed("'dims' must be an object");
  for (const auto& [obj, d] : dims.items()) {
    auto x = cat->find_object(obj);
    if (!x) malformed("dims mention unknown object '" + obj + "'");
    m.dims[*x] = as_count(d, "dimension");
  }
  for (ObjectId x = 0; x < cat->object_count(); ++x)
    if (!dims.contains(cat->object_name(x))) malformed("no dimension for object '" + cat->object_name(x) + "'");

  const Json& action = field(j, "action");
  if (!action.is_object()) malformed("'action' must be an object");
  for (MorphismId f = 0; f < cat->morphism_count(); ++f) {
    const std::string& name = cat->morphism_name(f);
    if (!action.contains(name)) malformed("no matrix for morphism '" + name + "'");
    const Json& rows = action.at(name);
    std::size_t r = m.dims[cat->target(f)], c = m.dims[cat->source(f)];
    if (!rows.is_array() || rows.size() != r) malformed("matrix for '" + name + "' has the wrong number of rows");
    std::vector<Residue> entries;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != c) malformed("matrix for '" + name + "' has the wrong number of columns");
      for (const auto& v : row) entries.push_back(static_cast<Residue>(as_count(v, "matrix entry")));
    }
    m.action.emplace_back(k, r, c, std::move(entries));
  }
  for (const auto& [name, v] : action.items()) {
    if (!cat->find_morphism(name)) malformed("action mentions unknown morphism '" + name + "'");
  }
  return m;
}

Json module_to_json(const CModule& m) {
  const FiniteCategory& cat = *m.category;
  Json j;
  j["category_digest"] = category_digest(cat);
  j["field"] = {{"p", m.field.p()}};
  Json dims = Json::object();
  for (ObjectId x = 0; x < cat.object_count(); ++x) dims[cat.object_name(x)] = m.dims[x];
  j["dims"] = std::move(dims);
  Json action = Json::object();
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    Json rows = Json::array();
    const FpMatrix& a = m.action[f];
    for (std::size_t r = 0; r < a.rows(); ++r) {
      auto row = a.row(r);
      rows.push_back(std::vector<Residue>(row.begin(), row.end()));
    }
    action[cat.morphism_name(f)] = std::move(rows);
  }
  j["action"] = std::move(action);
  return j;
}

// --- posets -----------------------------------------------------------------

FinitePoset poset_from_json(const Json& j) {
  const Json& elements = field(j, "elements");
  if (!elements.is_array()) malformed("'elements' must be an array");
  std::vector<std::string> names;
  for (const auto& e : elements) names.push_back(as_string(e, "element"));
  const Json& relations = field(j, "relations");
  if (!relations.is_array()) malformed("'relations' must be an array");
  std::vector<std::pair<std::string, std::string>> rel;
  for (const auto& r : relations) {
    if (!r.is_array() || r.size() != 2) malformed("relations must be [a, b] pairs");
    rel.emplace_back(as_string(r[0], "element"), as_string(r[1], "element"));
  }
  return FinitePoset::from_relations(std::move(names), rel);
}

Json poset_to_json(const FinitePoset& p) {
  Json rel = Json::array();
  for (auto [a, b] : p.strict_relations())
    if (p.covers(a, b)) rel.push_back({p.name(a), p.name(b)});
  return {{"elements", p.elements()}, {"relations", std::move(rel)}};
}

// --- generator specs --------------------------------------------------------

namespace {

GroupSpec group_from_json(const Json& j) {
  std::string kind = as_string(field(j, "kind"), "group kind");
  if (kind == "trivial") return GroupSpec::trivial();
  if (kind == "cyclic") {
    std::size_t n = as_count(field(j, "order"), "group order");
    if (n == 0) malformed("cyclic group of order 0");
    return GroupSpec::cyclic(n);
  }
  if (kind == "symmetric3") return GroupSpec::symmetric3();
  if (kind == "table") {
    std::vector<std::string> names;
    for (const auto& e : field(j, "elements")) names.push_back(as_string(e, "group element"));
    std::vector<std::size_t> mult;
    for (const auto& row : field(j, "mult")) {
      auto r = as_counts(row, "multiplication row");
      if (r.size() != names.size()) malformed("multiplication row has the wrong length");
      mult.insert(mult.end(), r.begin(), r.end());
    }
    return GroupSpec::explicit_table(GroupTable::from_table(std::move(names), std::move(mult)));
  }
  malformed("unknown group kind '" + kind + "'");
}

Json group_to_json(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::Trivial: return {{"kind", "trivial"}};
    case GroupSpec::Kind::Cyclic: return {{"kind", "cyclic"}, {"order", g.order}};
    case GroupSpec::Kind::Symmetric3: return {{"kind", "symmetric3"}};
    case GroupSpec::Kind::Table: {
      Json mult = Json::array();
      for (std::size_t a = 0; a < g.table.order(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < g.table.order(); ++b) row.push_back(g.table.multiply(a, b));
        mult.push_back(std::move(row));
      }
      return {{"kind", "table"}, {"elements", g.table.names}, {"mult", std::move(mult)}};
    }
  }
  return {};
}

}  // namespace

FreeEISpec spec_from_json(const Json& j) {
  FreeEISpec spec;
  const Json& groups = field(j, "groups");
  if (!groups.is_array()) malformed("'groups' must be an array");
  for (const auto& g : groups) spec.groups.push_back(group_from_json(g));
  const Json& arrows = field(j, "arrows");
  if (!arrows.is_array()) malformed("'arrows' must be an array");
  for (const auto& a : arrows) {
    ArrowSpec arrow;
    arrow.source = as_count(field(a, "source"), "arrow source");
    arrow.target = as_count(field(a, "target"), "arrow target");
    if (arrow.target < 1 || arrow.source > spec.groups.size() || arrow.source <= arrow.target) {
      malformed("arrow must run from a larger to a smaller position");
    }
    const Json& b = field(a, "biset");
    std::string kind = as_string(field(b, "kind"), "biset kind");
    if (kind == "free") {
      arrow.biset = BisetSpec::free(as_count(field(b, "rank"), "rank"));
    } else if (kind == "explicit") {
      BisetData d;
      for (const auto& e : field(b, "basis")) d.basis.push_back(as_string(e, "basis element"));
      d.left_group = spec.groups[arrow.target - 1].build();
      d.right_group = spec.groups[arrow.source - 1].build();
      const Json& left = field(b, "left");
      if (!left.is_array() || left.size() != d.left_group.order()) malformed("'left' needs one row per group element");
      for (const auto& row : left) {
        auto r = as_counts(row, "left action");
        if (r.size() != d.size()) malformed("left action row has the wrong length");
        d.left.insert(d.left.end(), r.begin(), r.end());
      }
      const Json& right = field(b, "right");
      if (!right.is_array() || right.size() != d.size()) malformed("'right' needs one row per basis element");
      for (const auto& row : right) {
        auto r = as_counts(row, "right action");
        if (r.size() != d.right_group.order()) malformed("right action row has the wrong length");
        d.right.insert(d.right.end(), r.begin(), r.end());
      }
      arrow.biset = BisetSpec::explicit_biset(std::move(d));
    } else {
      malformed("unknown biset kind '" + kind + "'");
    }
    spec.arrows.push_back(std::move(arrow));
  }
  return spec;
}

Json spec_to_json(const FreeEISpec& spec) {
  Json groups = Json::array();
  for (const auto& g : spec.groups) groups.push_back(group_to_json(g));
  Json arrows = Json::array();
  for (const auto& a : spec.arrows) {
    Json b;
    if (a.biset.kind == BisetSpec::Kind::Free) {
      b = {{"kind", "free"}, {"rank", a.biset.rank}};
    } else {
      const BisetData& d = a.biset.biset;
      Json left = Json::array(), right = Json::array();
      for (std::size_t h = 0; h < d.left_group.order(); ++h)
        left.push_back(std::vector<std::size_t>(d.left.begin() + h * d.size(), d.left.begin() + (h + 1) * d.size()));
      const std::size_t g = d.right_group.order();
      for (std::size_t x = 0; x < d.size(); ++x)
        right.push_back(std::vector<std::size_t>(d.right.begin() + x * g, d.right.begin() + (x + 1) * g));
      b = {{"kind", "explicit"}, {"basis", d.basis}, {"left", std::move(left)}, {"right", std::move(right)}};
    }
    arrows.push_back({{"source", a.source}, {"target", a.target}, {"biset", std::move(b)}});
  }
  return {{"groups", std::move(groups)}, {"arrows", std::move(arrows)}};
}

// --- verdicts ---------------------------------------------------------------

Json to_json(const GprojVerdict& v) {
  Json tails = Json::array();
  for (const auto& t : v.tails) {
    tails.push_back({{"t", t.t}, {"quotient_dim", t.quotient_dim}, {"rank", t.rank}, {"injective", t.injective}});
  }
  return {{"gproj", v.overall}, {"tails", std::move(tails)}};
}

Json to_json(const GptVerdict& v) {
  Json j;
  j["method"] = to_string(v.method);
  if (v.field) j["field"] = *v.field;
  j["outcome"] = to_string(v.outcome);
  if (const auto* w = std::get_if<ColumnWitness>(&v.witness)) {
    j["witness"] = {{"p", w->p}, {"q", w->q}, {"t", w->t}};
  } else if (const auto* w = std::get_if<MonoWitness>(&v.witness)) {
    j["witness"] = {{"non_mono", w->morphism}};
  } else if (const auto* w = std::get_if<PosetWitness>(&v.witness)) {
    j["witness"] = {{"a", w->a}, {"b", w->b}, {"s1", w->s1}, {"s2", w->s2}, {"upper", w->upper}};
  }
  if (v.failures.size() > 1) {
    Json f = Json::array();
    for (const auto& w : v.failures) f.push_back({w.p, w.q, w.t});
    j["failures"] = std::move(f);
  }
  if (!v.consistency.empty()) j["consistency"] = v.consistency;
  return j;
}

Json to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) out.push_back(v.message());
  return out;
}

}  // namespace eigproj

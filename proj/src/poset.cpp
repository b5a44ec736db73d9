#include "eigproj/poset.hpp"

#include <algorithm>
#include <map>

#include "eigproj/error.hpp"

namespace eigproj {

namespace {

void check_partial_order(std::size_t n, const std::vector<std::uint8_t>& leq) {
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a * n + a]) throw Error(ErrorKind::Malformed, "relation is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a * n + b] && leq[b * n + a]) {
        throw Error(ErrorKind::Malformed, "relation is not antisymmetric");
      }
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c]) {
          throw Error(ErrorKind::Malformed, "relation is not transitive");
        }
    }
  }
}

}  // namespace

FinitePoset FinitePoset::from_relations(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  const std::size_t n = elements.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(elements[i], i).second) {
      throw Error(ErrorKind::Malformed, "duplicate element '" + elements[i] + "'");
    }
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw Error(ErrorKind::Malformed, "relation mentions unknown element");
    }
    leq[ia->second * n + ib->second] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (leq[a * n + k])
        for (std::size_t b = 0; b < n; ++b)
          if (leq[k * n + b]) leq[a * n + b] = 1;
  return from_matrix(std::move(elements), std::move(leq));
}

FinitePoset FinitePoset::from_matrix(std::vector<std::string> elements, std::vector<std::uint8_t> leq) {
  const std::size_t n = elements.size();
  if (leq.size() != n * n) throw Error(ErrorKind::Malformed, "order matrix has wrong size");
  for (auto& v : leq) v = v ? 1 : 0;
  check_partial_order(n, leq);
  FinitePoset p;
  p.elements_ = std::move(elements);
  p.leq_ = std::move(leq);
  return p;
}

std::optional<std::size_t> FinitePoset::find(const std::string& name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FinitePoset::covers(std::size_t a, std::size_t b) const {
  if (!less(a, b)) return false;
  for (std::size_t c = 0; c < size(); ++c)
    if (less(a, c) && less(c, b)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::strict_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::size_t> poset_positions(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> order;
  while (order.size() < n) {
    for (std::size_t a = 0; a < n; ++a) {
      if (placed[a]) continue;
      bool maximal = true;
      for (std::size_t b = 0; b < n && maximal; ++b)
        if (!placed[b] && p.less(a, b)) maximal = false;
      if (maximal) {
        placed[a] = true;
        order.push_back(a);
        break;
      }
    }
  }
  return order;
}

FiniteCategory poset_to_category(const FinitePoset& p) {
  std::vector<std::size_t> order = poset_positions(p);
  CategoryData data;
  std::map<std::pair<std::size_t, std::size_t>, std::string> mor;
  for (std::size_t a : order) {
    data.objects.push_back(p.name(a));
    std::string id = "id_" + p.name(a);
    data.morphisms.push_back({id, p.name(a), p.name(a)});
    data.identities[p.name(a)] = id;
    mor[{a, a}] = id;
  }
  for (std::size_t a : order)
    for (std::size_t b : order)
      if (p.less(a, b)) {
        std::string id = p.name(a) + "->" + p.name(b);
        data.morphisms.push_back({id, p.name(a), p.name(b)});
        mor[{a, b}] = id;
      }
  for (const auto& [f, f_id] : mor)
    for (const auto& [g, g_id] : mor)
      if (f.second == g.first) data.compose.push_back({g_id, f_id, mor.at({f.first, g.second})});
  return FiniteCategory::from_data(data);
}

UpperLocus common_upper_locus(const FinitePoset& p, std::size_t a, std::size_t b) {
  if (p.comparable(a, b)) {
    throw Error(ErrorKind::Precondition, "'" + p.name(a) + "' and '" + p.name(b) + "' are comparable");
  }
  UpperLocus out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.less(a, x) && p.less(b, x)) out.locus.push_back(x);
  for (std::size_t x : out.locus) {
    bool minimal = std::none_of(out.locus.begin(), out.locus.end(),
                                [&](std::size_t y) { return p.less(y, x); });
    if (minimal) out.minimal.push_back(x);
  }
  return out;
}

GptVerdict poset_gpt(const FinitePoset& p) {
  GptVerdict out;
  out.method = GptMethod::PosetCriterion;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (p.comparable(a, b)) continue;
      UpperLocus l = common_upper_locus(p, a, b);
      for (std::size_t i = 0; i < l.minimal.size(); ++i) {
        for (std::size_t k = i + 1; k < l.minimal.size(); ++k) {
          std::size_t s1 = l.minimal[i], s2 = l.minimal[k];
          for (std::size_t x = 0; x < n; ++x) {
            if (p.leq(s1, x) && p.leq(s2, x)) {
              out.outcome = GptOutcome::NotClosed;
              out.witness = PosetWitness{p.name(a), p.name(b), p.name(s1), p.name(s2), p.name(x)};
              return out;
            }
          }
        }
      }
    }
  }
  return out;
}

ColumnDecomposition decompose_tensor_columns(const FinitePoset& p, std::size_t t, std::size_t j,
                                             FieldSpec field) {
  auto cat = std::make_shared<const FiniteCategory>(poset_to_category(p));
  const std::size_t n = p.size();
  if (t < 1 || t > n || j < 1 || j > n) throw Error(ErrorKind::OutOfRange, "column index out of range");
  std::vector<std::size_t> elem = poset_positions(p);
  // Objects of cat are in position order, so ObjectId = position - 1.
  CModule x = tensor_hat(column_module(cat, field, t), column_module(cat, field, j));

  ColumnDecomposition out;
  out.coefficients.assign(n, 0);
  // C_s has dimension 1 at position i exactly when x_s <= x_i, which forces
  // i <= s; solve from the last position upward.
  for (std::size_t s = n; s >= 1; --s) {
    long c = static_cast<long>(x.dims[s - 1]);
    for (std::size_t u = s + 1; u <= n; ++u)
      if (p.leq(elem[u - 1], elem[s - 1])) c -= out.coefficients[u - 1];
    out.coefficients[s - 1] = c;
    if (c < 0) out.nonnegative = false;
  }
  if (out.nonnegative) {
    for (std::size_t s = 1; s <= n; ++s)
      for (long k = 0; k < out.coefficients[s - 1]; ++k) out.columns.push_back(s);
  }
  out.splits = is_projective(x);
  return out;
}

bool poset_unique_covers(const FinitePoset& p) {
  for (auto [a, b] : p.strict_relations()) {
    std::size_t count = 0;
    for (std::size_t d = 0; d < p.size(); ++d)
      if (p.leq(a, d) && p.covers(d, b)) ++count;
    if (count != 1) return false;
  }
  return true;
}

void for_each_poset(std::size_t n, const std::function<void(const FinitePoset&)>& visit) {
  if (n > 6) throw Error(ErrorKind::OutOfRange, "poset enumeration supports at most 6 elements");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));

  // Extend an order on the first k elements by one new element placed above
  // a down-closed set and below an up-closed set.
  std::function<void(std::size_t, std::vector<std::uint8_t>&)> extend =
      [&](std::size_t k, std::vector<std::uint8_t>& leq) {
        if (k == n) {
          visit(FinitePoset::from_matrix(names, leq));
          return;
        }
        auto at = [&](std::size_t a, std::size_t b) -> std::uint8_t& { return leq[a * n + b]; };
        for (std::uint32_t down = 0; down < (1u << k); ++down) {
          bool ideal = true;
          for (std::size_t d = 0; d < k && ideal; ++d)
            if (down >> d & 1)
              for (std::size_t e = 0; e < k; ++e)
                if (at(e, d) && !(down >> e & 1)) ideal = false;
          if (!ideal) continue;
          for (std::uint32_t up = 0; up < (1u << k); ++up) {
            if (up & down) continue;
            bool filter = true;
            for (std::size_t u = 0; u < k && filter; ++u)
              if (up >> u & 1)
                for (std::size_t e = 0; e < k; ++e)
                  if (at(u, e) && !(up >> e & 1)) filter = false;
            if (!filter) continue;
            bool below = true;
            for (std::size_t d = 0; d < k && below; ++d)
              if (down >> d & 1)
                for (std::size_t u = 0; u < k; ++u)
                  if ((up >> u & 1) && !at(d, u)) below = false;
            if (!below) continue;
            for (std::size_t e = 0; e < k; ++e) {
              at(e, k) = down >> e & 1;
              at(k, e) = up >> e & 1;
            }
            at(k, k) = 1;
            extend(k + 1, leq);
            for (std::size_t e = 0; e <= k; ++e) at(e, k) = at(k, e) = 0;
          }
        }
      };
  std::vector<std::uint8_t> leq(n * n, 0);
  extend(0, leq);
}

std::vector<FinitePoset> enumerate_posets(std::size_t n) {
  std::vector<FinitePoset> out;
  for_each_poset(n, [&](const FinitePoset& p) { out.push_back(p); });
  return out;
}

}  // namespace eigproj

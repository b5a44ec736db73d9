#include <gtest/gtest.h>

#include "support.hpp"

namespace eigproj {
namespace {

using testing::share;

std::size_t element(const FinitePoset& p, const std::string& name) { return *p.find(name); }

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Poset, ConstructionErrors) {
  EXPECT_THROW(testing::poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  EXPECT_THROW(testing::poset({"a", "b"}, {{"a", "z"}}), Error);
  EXPECT_THROW(testing::poset({"a", "a"}, {}), Error);
  EXPECT_THROW(FinitePoset::from_matrix({"a", "b", "c"}, {1, 1, 0, 0, 1, 1, 0, 0, 1}), Error);  // not transitive
  EXPECT_NO_THROW(FinitePoset::from_matrix({"a", "b"}, {1, 1, 0, 1}));
}

TEST(Poset, TransitiveClosure) {
  FinitePoset p = testing::chain(4);
  EXPECT_TRUE(p.leq(element(p, "a"), element(p, "d")));
  EXPECT_TRUE(p.covers(element(p, "a"), element(p, "b")));
  EXPECT_FALSE(p.covers(element(p, "a"), element(p, "c")));
  EXPECT_EQ(p.strict_relations().size(), 6u);
}

TEST(PosetCategory, Examples) {
  FiniteCategory anti = poset_to_category(testing::antichain(3));
  EXPECT_EQ(anti.morphism_count(), 3u);
  FiniteCategory two = poset_to_category(testing::chain(2));
  EXPECT_EQ(two.morphism_count(), 3u);
  FiniteCategory d = poset_to_category(testing::diamond());
  EXPECT_EQ(d.morphism_count(), 9u);
  EXPECT_TRUE(validate(d).empty());
  ASSERT_TRUE(d.find_morphism("a->e").has_value());
  ASSERT_TRUE(d.find_morphism("id_c").has_value());
}

TEST(PosetCategory, ObjectOrderIsAdmissible) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      FiniteCategory c = poset_to_category(p);
      AdmissibleOrder order = admissible_order(c);
      auto positions = poset_positions(p);
      for (std::size_t i = 1; i <= n; ++i) {
        // The category's object order already is the admissible order.
        EXPECT_EQ(order.at(i), i - 1);
        EXPECT_EQ(c.object_name(i - 1), p.name(positions[i - 1]));
      }
    }
}

TEST(PosetCategory, StructuralFlags) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      FiniteCategory c = poset_to_category(p);
      EXPECT_TRUE(validate(c).empty());
      EXPECT_TRUE(is_ei(c));
      EXPECT_TRUE(is_skeletal(c));
      EXPECT_TRUE(all_mono(c));
      for (std::uint32_t q : {2u, 3u, 5u}) EXPECT_TRUE(is_gorenstein(c, FieldSpec(q)));
    }
}

TEST(UpperLocus, Examples) {
  FinitePoset b = testing::bowtie();
  UpperLocus l = common_upper_locus(b, element(b, "a"), element(b, "b"));
  EXPECT_EQ(sorted(l.locus), sorted({element(b, "c"), element(b, "d")}));
  EXPECT_EQ(sorted(l.minimal), sorted({element(b, "c"), element(b, "d")}));

  FinitePoset t = testing::bowtie_top();
  UpperLocus lt = common_upper_locus(t, element(t, "a"), element(t, "b"));
  EXPECT_EQ(sorted(lt.locus), sorted({element(t, "c"), element(t, "d"), element(t, "e")}));
  EXPECT_EQ(sorted(lt.minimal), sorted({element(t, "c"), element(t, "d")}));

  FinitePoset anti = testing::antichain(2);
  EXPECT_TRUE(common_upper_locus(anti, 0, 1).locus.empty());

  FinitePoset c = testing::chain(2);
  try {
    common_upper_locus(c, 0, 1);
    FAIL() << "expected Precondition";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(PosetGpt, Examples) {
  GptVerdict bowtie = poset_gpt(testing::bowtie());
  EXPECT_TRUE(bowtie.closed());
  EXPECT_EQ(bowtie.method, GptMethod::PosetCriterion);
  EXPECT_FALSE(bowtie.field.has_value());

  GptVerdict top = poset_gpt(testing::bowtie_top());
  EXPECT_FALSE(top.closed());
  ASSERT_TRUE(std::holds_alternative<PosetWitness>(top.witness));
  const auto& w = std::get<PosetWitness>(top.witness);
  EXPECT_EQ(w.a, "a");
  EXPECT_EQ(w.b, "b");
  EXPECT_EQ(w.s1, "c");
  EXPECT_EQ(w.s2, "d");
  EXPECT_EQ(w.upper, "e");

  EXPECT_TRUE(poset_gpt(testing::diamond()).closed());
}

TEST(Decompose, Examples) {
  FinitePoset c = testing::chain(3);
  FiniteCategory cc = poset_to_category(c);
  std::size_t pa = testing::position_of(cc, "a"), pc = testing::position_of(cc, "c");
  ColumnDecomposition absorb = decompose_tensor_columns(c, pa, pc);
  EXPECT_TRUE(absorb.projective());
  EXPECT_EQ(absorb.columns, std::vector<std::size_t>{pc});

  FinitePoset b = testing::bowtie();
  FiniteCategory bc = poset_to_category(b);
  ColumnDecomposition two =
      decompose_tensor_columns(b, testing::position_of(bc, "a"), testing::position_of(bc, "b"));
  EXPECT_TRUE(two.projective());
  EXPECT_EQ(sorted(two.columns), sorted({testing::position_of(bc, "c"), testing::position_of(bc, "d")}));

  FinitePoset t = testing::bowtie_top();
  FiniteCategory tc = poset_to_category(t);
  ColumnDecomposition bad =
      decompose_tensor_columns(t, testing::position_of(tc, "a"), testing::position_of(tc, "b"));
  EXPECT_FALSE(bad.projective());
  EXPECT_FALSE(bad.nonnegative);
}

TEST(Decompose, ClosedPosetsSplitIntoMinimalUpperBounds) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      FiniteCategory cat = poset_to_category(p);
      auto positions = poset_positions(p);
      bool closed = poset_gpt(p).closed();
      bool all_projective = true;
      for (std::size_t t = 1; t <= n; ++t)
        for (std::size_t j = t; j <= n; ++j) {
          ColumnDecomposition d = decompose_tensor_columns(p, t, j, FieldSpec(3));
          all_projective &= d.projective();
          std::size_t a = positions[t - 1], b = positions[j - 1];
          std::vector<std::size_t> expected;
          if (p.leq(a, b)) {
            expected = {j};
          } else if (p.leq(b, a)) {
            expected = {t};
          } else {
            for (std::size_t m : common_upper_locus(p, a, b).minimal)
              expected.push_back(std::size_t(std::find(positions.begin(), positions.end(), m) - positions.begin()) + 1);
          }
          if (closed) EXPECT_EQ(sorted(d.columns), sorted(expected));
        }
      EXPECT_EQ(all_projective, closed);
    }
}

TEST(Enumerate, Counts) {
  const std::vector<std::size_t> known{0, 1, 3, 19, 219, 4231};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for_each_poset(n, [&](const FinitePoset&) { ++count; });
    EXPECT_EQ(count, known[n]) << n;
    EXPECT_EQ(count, testing::naive_poset_count(n)) << n;
  }
  EXPECT_THROW(enumerate_posets(7), Error);
}

TEST(Enumerate, DistinctValidOrders) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& p : enumerate_posets(n)) {
      EXPECT_TRUE(seen.insert(p.matrix()).second);
      EXPECT_NO_THROW(FinitePoset::from_matrix(p.elements(), p.matrix()));
    }
  }
}

TEST(Enumerate, Deterministic) {
  auto a = enumerate_posets(4), b = enumerate_posets(4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].matrix(), b[i].matrix());
}

TEST(PosetGpt, AgreesWithColumnCriterion) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      CategoryPtr cat = share(poset_to_category(p));
      GptOutcome expected = poset_gpt(p).outcome;
      for (std::uint32_t q : {2u, 3u}) EXPECT_EQ(gpt_closed(cat, FieldSpec(q)).outcome, expected);
    }
}

TEST(PosetFree, PeelingMatchesUniqueCovers) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) EXPECT_EQ(is_free(poset_to_category(p)).free, poset_unique_covers(p));
}

}  // namespace
}  // namespace eigproj

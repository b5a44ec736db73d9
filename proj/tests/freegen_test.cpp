#include <gtest/gtest.h>

#include <cstdlib>

#include "support.hpp"

namespace eigproj {
namespace {

using testing::share;

std::vector<std::size_t> hom_profile(const FiniteCategory& cat) {
  AdmissibleOrder order = admissible_order(cat);
  std::vector<std::size_t> profile;
  for (std::size_t i = 1; i <= order.size(); ++i)
    for (std::size_t j = 1; j <= order.size(); ++j) profile.push_back(cat.hom(order.at(j), order.at(i)).size());
  return profile;
}

TEST(Generate, TrivialGroupsGiveTheTwoChain) {
  FreeEISpec s;
  s.groups = {GroupSpec::trivial(), GroupSpec::trivial()};
  s.arrows = {{2, 1, BisetSpec::free(1)}};
  FiniteCategory c = generate_category(s);
  FiniteCategory chain = poset_to_category(testing::chain(2));
  EXPECT_TRUE(validate(c).empty());
  EXPECT_EQ(c.morphism_count(), chain.morphism_count());
  EXPECT_EQ(hom_profile(c), hom_profile(chain));
}

TEST(Generate, PointAndFreeBisets) {
  FiniteCategory point = testing::point_biset_category();
  EXPECT_EQ(point.hom(*point.find_object("x2"), *point.find_object("x1")).size(), 1u);
  EXPECT_EQ(point.morphism_count(), 4u);

  FiniteCategory free = testing::free_biset_category();
  EXPECT_EQ(free.hom(*free.find_object("x2"), *free.find_object("x1")).size(), 2u);
  EXPECT_TRUE(all_mono(free));
  // The hom set is C_2 with the right regular action.
  BisetData b = hom_biset(free, *free.find_object("x2"), *free.find_object("x1"));
  EXPECT_EQ(b.act_right(0, 1), 1u);
  EXPECT_EQ(b.act_right(1, 1), 0u);
}

TEST(Generate, Naming) {
  FiniteCategory c = testing::free_biset_category();
  EXPECT_EQ(c.object_name(0), "x1");
  EXPECT_TRUE(c.find_morphism("a2_1").has_value());
  EXPECT_TRUE(c.find_morphism("f2_1_1").has_value());
}

TEST(Generate, PathsComposeThroughMiddleGroups) {
  // x_3 -> x_2 -> x_1 with free bisets: the composite set is the
  // product over the middle group, 2 * 6 / 2.
  FreeEISpec s;
  s.groups = {GroupSpec::trivial(), GroupSpec::cyclic(2), GroupSpec::cyclic(3)};
  s.arrows = {{2, 1, BisetSpec::free(1)}, {3, 2, BisetSpec::free(1)}};
  FiniteCategory c = generate_category(s);
  EXPECT_TRUE(validate(c).empty());
  EXPECT_EQ(c.hom(*c.find_object("x3"), *c.find_object("x1")).size(), 6u);
  EXPECT_EQ(c.hom(*c.find_object("x3"), *c.find_object("x2")).size(), 6u);
  EXPECT_TRUE(is_free(c).free);
  EXPECT_TRUE(all_mono(c));
}

TEST(Generate, Errors) {
  FreeEISpec s = testing::free_biset_spec();
  s.arrows[0].source = 1;
  s.arrows[0].target = 2;
  EXPECT_THROW(generate_category(s), Error);

  FreeEISpec wrong = testing::point_biset_spec();
  wrong.groups[1] = GroupSpec::cyclic(3);  // biset still over C_2
  EXPECT_THROW(generate_category(wrong), Error);

  FreeEISpec big;
  big.groups = {GroupSpec::symmetric3(), GroupSpec::symmetric3()};
  big.arrows = {{2, 1, BisetSpec::free(2)}};
  try {
    generate_category(big, 20);
    FAIL() << "expected CapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Generate, CapFromEnvironment) {
  ASSERT_EQ(setenv("EIGPROJ_CAP", "4", 1), 0);
  EXPECT_EQ(default_morphism_cap(), 4u);
  EXPECT_THROW(generate_category(testing::free_biset_spec()), Error);
  ASSERT_EQ(unsetenv("EIGPROJ_CAP"), 0);
  EXPECT_EQ(default_morphism_cap(), 2000u);
  EXPECT_NO_THROW(generate_category(testing::free_biset_spec()));
}

TEST(RandomSpec, Deterministic) {
  for (std::uint64_t seed : {0u, 1u, 17u, 12345u}) {
    EXPECT_EQ(spec_to_json(random_spec(seed)), spec_to_json(random_spec(seed)));
    EXPECT_EQ(category_digest(generate_category(random_spec(seed))),
              category_digest(generate_category(random_spec(seed))));
  }
}

TEST(RandomSpec, Diversity) {
  std::set<std::vector<std::size_t>> profiles;
  for (std::uint64_t seed = 0; seed < 100; ++seed) profiles.insert(hom_profile(generate_category(random_spec(seed))));
  EXPECT_GE(profiles.size(), 30u);
}

TEST(RandomSpec, RevalidationAndBounds) {
  RandomBounds bounds;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    FreeEISpec spec = random_spec(seed, bounds);
    FiniteCategory c = generate_category(spec);
    ASSERT_TRUE(validate(c).empty()) << seed;
    EXPECT_TRUE(is_ei(c));
    EXPECT_TRUE(is_skeletal(c));
    EXPECT_TRUE(is_free(c).free) << seed;
    EXPECT_LE(c.object_count(), bounds.max_objects);
    EXPECT_LE(c.morphism_count(), bounds.max_morphisms);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& a : spec.arrows) {
      EXPECT_TRUE(pairs.insert({a.source, a.target}).second);
      EXPECT_LE(build_biset(a.biset, spec.groups[a.target - 1].build(), spec.groups[a.source - 1].build()).size(),
                bounds.max_biset);
    }
    for (const auto& g : spec.groups) EXPECT_TRUE(g.build().order() == 1 || g.build().order() == 2 ||
                                                  g.build().order() == 3 || g.build().order() == 6);
  }
}

TEST(RandomSpec, UnfactorizablesAreTheGeneratorBisets) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FreeEISpec spec = random_spec(seed);
    FiniteCategory c = generate_category(spec);
    Unfactorizables u = unfactorizables(c);
    AdmissibleOrder order = admissible_order(c);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> expected;
    for (const auto& a : spec.arrows)
      expected[{a.source, a.target}] =
          build_biset(a.biset, spec.groups[a.target - 1].build(), spec.groups[a.source - 1].build()).size();
    for (std::size_t j = 1; j <= order.size(); ++j)
      for (std::size_t i = 1; i < j; ++i) {
        auto it = expected.find({j, i});
        EXPECT_EQ(u.between(order.at(j), order.at(i)).size(), it == expected.end() ? 0u : it->second) << seed;
      }
  }
}

TEST(RandomSpec, FreeBisetsGiveMonoAndClosedCategories) {
  RandomBounds bounds;
  bounds.explicit_percent = 0;
  std::size_t closed = 0;
  std::size_t used = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    FreeEISpec spec = random_spec(seed, bounds);
    // Oversized free bisets fall back to coset bisets; skip those.
    if (std::any_of(spec.arrows.begin(), spec.arrows.end(),
                    [](const auto& a) { return a.biset.kind != BisetSpec::Kind::Free; }))
      continue;
    ++used;
    CategoryPtr c = share(generate_category(spec));
    EXPECT_TRUE(all_mono(*c)) << seed;
    for (std::uint32_t p : {2u, 3u, 5u}) {
      if (!is_gorenstein(*c, FieldSpec(p))) continue;
      EXPECT_TRUE(gpt_closed(c, FieldSpec(p)).closed()) << seed;
      ++closed;
    }
  }
  EXPECT_GE(used, 40u);
  EXPECT_GT(closed, used);
}

TEST(CosetBiset, ValidAndOfExpectedSize) {
  for (const auto& g : {GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric3()})
    for (const auto& h : {GroupTable::trivial(), GroupTable::cyclic(2)}) {
      GroupTable p = GroupTable::product(g, h);
      for (std::size_t gen = 0; gen < p.order(); ++gen) {
        BisetData b = coset_biset(g, h, {gen});
        EXPECT_TRUE(validate_biset(b).empty());
        EXPECT_EQ(b.size() * testing::subgroup(p, {gen}).size(), p.order());
      }
    }
}

}  // namespace
}  // namespace eigproj

#include <gtest/gtest.h>

#include <fstream>

#include "support.hpp"

namespace eigproj {
namespace {

using testing::share;

const std::filesystem::path kData = EIGPROJ_TEST_DATA;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Precondition;
}

TEST(CategoryJson, RoundTrip) {
  std::vector<FiniteCategory> cats{testing::point_biset_category(), testing::free_biset_category(),
                                   poset_to_category(testing::diamond())};
  for (std::uint64_t seed = 0; seed < 30; ++seed) cats.push_back(generate_category(random_spec(seed)));
  for (const auto& c : cats) {
    Json j = category_to_json(c);
    FiniteCategory back = category_from_json(j);
    EXPECT_EQ(category_to_json(back), j);
    EXPECT_EQ(category_digest(back), category_digest(c));
    EXPECT_EQ(category_from_json(Json::parse(j.dump())).morphism_count(), c.morphism_count());
  }
}

TEST(CategoryJson, DigestFormat) {
  std::string d = category_digest(testing::point_biset_category());
  ASSERT_EQ(d.size(), 7u + 64u);
  EXPECT_EQ(d.substr(0, 7), "sha256:");
  EXPECT_EQ(d.find_first_not_of("0123456789abcdef", 7), std::string::npos);
  EXPECT_NE(d, category_digest(testing::free_biset_category()));
}

TEST(CategoryJson, DigestIgnoresComposeOrder) {
  Json j = category_to_json(testing::free_biset_category());
  Json shuffled = j;
  auto& compose = shuffled["compose"];
  std::reverse(compose.begin(), compose.end());
  EXPECT_EQ(category_digest(category_from_json(shuffled)), category_digest(category_from_json(j)));
}

TEST(CategoryJson, Fixtures) {
  FiniteCategory point = category_from_json(read_json_file(kData / "point_biset.json"));
  EXPECT_EQ(category_digest(point), category_digest(testing::point_biset_category()));
  FiniteCategory free = category_from_json(read_json_file(kData / "free_biset.json"));
  EXPECT_EQ(category_digest(free), category_digest(testing::free_biset_category()));

  // Parses, but composition lands in the wrong hom set.
  FiniteCategory broken = category_from_json(read_json_file(kData / "broken.json"));
  EXPECT_FALSE(validate(broken).empty());

  EXPECT_EQ(kind_of([] { read_json_file(kData / "truncated.json"); }), ErrorKind::Malformed);
  EXPECT_EQ(kind_of([] { read_json_file(kData / "does_not_exist.json"); }), ErrorKind::Malformed);
}

TEST(CategoryJson, MalformedInputs) {
  Json good = category_to_json(testing::point_biset_category());
  std::vector<Json> bad;
  for (const char* key : {"objects", "morphisms", "identities", "compose"}) {
    Json j = good;
    j.erase(key);
    bad.push_back(j);
  }
  Json unknown = good;
  unknown["morphisms"][0]["src"] = "nowhere";
  bad.push_back(unknown);
  Json dup = good;
  dup["objects"].push_back("x1");
  bad.push_back(dup);
  Json short_triple = good;
  short_triple["compose"][0].erase(2);
  bad.push_back(short_triple);
  bad.push_back(Json::array());
  for (const auto& j : bad) EXPECT_EQ(kind_of([&] { category_from_json(j); }), ErrorKind::Malformed) << j.dump();
}

TEST(ModuleJson, RoundTrip) {
  testing::Rng rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CategoryPtr cat = share(generate_category(random_spec(seed)));
    for (std::uint32_t p : {2u, 3u, 5u}) {
      CModule m = testing::random_module(rng, cat, FieldSpec(p), 16);
      Json j = module_to_json(m);
      CModule back = module_from_json(Json::parse(j.dump()), cat);
      EXPECT_EQ(back.field.p(), p);
      EXPECT_EQ(back.dims, m.dims);
      ASSERT_EQ(back.action.size(), m.action.size());
      for (std::size_t f = 0; f < m.action.size(); ++f) EXPECT_EQ(back.action[f], m.action[f]);
    }
  }
}

TEST(ModuleJson, DigestMismatchAndMalformed) {
  CategoryPtr point = share(testing::point_biset_category());
  CategoryPtr free = share(testing::free_biset_category());
  Json j = module_to_json(constant_module(point, FieldSpec(3)));
  EXPECT_EQ(kind_of([&] { module_from_json(j, free); }), ErrorKind::Precondition);

  Json no_dims = j;
  no_dims.erase("dims");
  EXPECT_EQ(kind_of([&] { module_from_json(no_dims, point); }), ErrorKind::Malformed);
  Json wrong_shape = j;
  wrong_shape["action"]["f2_1_0"] = Json::array({Json::array({1, 1})});
  EXPECT_EQ(kind_of([&] { module_from_json(wrong_shape, point); }), ErrorKind::Malformed);
  Json missing = j;
  missing["action"].erase("a2_1");
  EXPECT_EQ(kind_of([&] { module_from_json(missing, point); }), ErrorKind::Malformed);
}

TEST(PosetJson, RoundTripKeepsCovers) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      Json j = poset_to_json(p);
      FinitePoset back = poset_from_json(j);
      EXPECT_EQ(back.matrix(), p.matrix());
      EXPECT_EQ(j["relations"].size(), [&] {
        std::size_t covers = 0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) covers += p.covers(a, b);
        return covers;
      }());
    }
  FinitePoset bowtie = poset_from_json(read_json_file(kData / "bowtie.poset.json"));
  EXPECT_TRUE(poset_gpt(bowtie).closed());
  EXPECT_FALSE(poset_gpt(poset_from_json(read_json_file(kData / "bowtie_top.poset.json"))).closed());
  EXPECT_EQ(kind_of([] { poset_from_json(Json{{"elements", {"a"}}, {"relations", {{"a", "b"}}}}); }),
            ErrorKind::Malformed);
}

TEST(SpecJson, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FreeEISpec s = random_spec(seed);
    Json j = spec_to_json(s);
    FreeEISpec back = spec_from_json(Json::parse(j.dump()));
    EXPECT_EQ(spec_to_json(back), j);
    EXPECT_EQ(category_digest(generate_category(back)), category_digest(generate_category(s)));
  }
  FreeEISpec point = spec_from_json(read_json_file(kData / "point_biset.spec.json"));
  EXPECT_EQ(category_digest(generate_category(point)), category_digest(testing::point_biset_category()));
  FreeEISpec free = spec_from_json(read_json_file(kData / "free_biset.spec.json"));
  EXPECT_EQ(category_digest(generate_category(free)), category_digest(testing::free_biset_category()));
}

TEST(VerdictJson, Fields) {
  CategoryPtr point = share(testing::point_biset_category());
  Json v = to_json(gpt_closed(point, FieldSpec(3)));
  EXPECT_TRUE(v.contains("method"));
  EXPECT_TRUE(v.contains("outcome"));
  Json top = to_json(poset_gpt(testing::bowtie_top()));
  EXPECT_TRUE(top.contains("witness"));
  Json g = to_json(gproj_test(constant_module(point, FieldSpec(3))));
  EXPECT_TRUE(g.contains("tails"));
}

}  // namespace
}  // namespace eigproj

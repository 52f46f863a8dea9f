#include <doctest.h>

#include "steinobd/error.hpp"
#include "steinobd/sweep.hpp"

using namespace steinobd;

TEST_SUITE("sweep") {

TEST_CASE("parallel kernel matches the serial reference") {
  std::vector<FamilyParams> batch;
  for (auto v : {Variant::A, Variant::B})
    for (int64_t m1 = 1; m1 <= 5; ++m1) {
      if (v == Variant::A && m1 % 2 == 0) continue;
      for (int64_t p = 1; p <= 25; ++p) batch.push_back({v, 3, m1, 2, p, p % 4});
    }
  auto par = classify_batch(batch);
  auto ser = classify_batch_serial(batch);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].params == batch[i]);
    CHECK(par[i].params == ser[i].params);
    CHECK(par[i].c1 == ser[i].c1);
    CHECK(par[i].label == ser[i].label);
  }
}

TEST_CASE("errors inside the parallel loop propagate") {
  std::vector<FamilyParams> batch(10, FamilyParams{Variant::B, 3, 2, 1, 1, 0});
  batch[7].m0 = 1;
  CHECK_THROWS_AS(classify_batch(batch), ParamError);
}

TEST_CASE("p_range and label patterns") {
  FamilyParams a{Variant::A, 5, 3, 1, 1, 0};
  auto rows = classify_batch(p_range(a, 1, 10));
  CHECK(rows.size() == 10);
  CHECK(label_pattern(rows) == LabelPattern::AllEqual);

  FamilyParams b{Variant::B, 2, 3, 1, 1, 0};
  auto rb = classify_batch(p_range(b, 1, 5));
  CHECK(label_pattern(rb) == LabelPattern::PairwiseDistinct);
  std::vector<int64_t> rs;
  for (const auto& r : rb) rs.push_back(r.label.r());
  CHECK(rs == std::vector<int64_t>{2, 4, 6, 8, 10});

  std::vector<SweepRow> mixed{rb[0], rb[1], rb[0]};
  CHECK(label_pattern(mixed) == LabelPattern::Mixed);

  CHECK_THROWS_AS(p_range(a, 0, 3), ParamError);
  CHECK_THROWS_AS(p_range(a, 4, 3), ParamError);
}

} // TEST_SUITE

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "steinobd/error.hpp"
#include "steinobd/handlebody.hpp"
#include "support/generators.hpp"
#include "support/lattice_oracle.hpp"

using namespace steinobd;

namespace {

SteinHandlebody from_rots(std::vector<int64_t> rots) {
  std::vector<SteinHandle> hs;
  for (auto r : rots) hs.emplace_back(-1 - (r < 0 ? -r : r), r);
  return SteinHandlebody(std::move(hs));
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("steinobd_hb_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST_SUITE("stein_handlebody") {

TEST_CASE("framing is tb - 1") {
  SteinHandle h(-3, 2);
  CHECK(h.framing() == -4);
  auto src = std::make_shared<const OrientedFront>(OrientedFront::trace(parse_front("L1 L2 X1 X1 X1 R2 R1")));
  SteinHandle t(HandleSource{src, 0, {}});
  CHECK(t.tb() == 1);
  CHECK(t.rot() == 0);
  CHECK(t.framing() == 0);
  CHECK_THROWS_AS(SteinHandle(0, 0, HandleSource{src, 0, {}}), ValidationError);
  CHECK_THROWS_AS(SteinHandle(HandleSource{src, 1, {}}), ValidationError);
}

TEST_CASE("unknot realizability") {
  CHECK(realizable_by_unknot(-1, 0));
  CHECK(realizable_by_unknot(-4, 3));
  CHECK(realizable_by_unknot(-3, 0));
  CHECK_FALSE(realizable_by_unknot(0, 1));
  CHECK_FALSE(realizable_by_unknot(-2, 0));
  CHECK_FALSE(realizable_by_unknot(-3, 4));
}

TEST_CASE("rotation_divisor") {
  CHECK(rotation_divisor(from_rots({0, 4 - 2})) == 2);
  CHECK(rotation_divisor(from_rots({0, 0, 0, 0})) == 0);
  // r(p, m) with p = 2, m = (2, 3, 1): 2 * 2 + 0.
  CHECK(rotation_divisor(from_rots({0, 4})) == 4);
  CHECK(rotation_divisor(from_rots({6, -4, 10})) == 2);
}

TEST_CASE("c1_cochain is the rotation vector") {
  auto x = from_rots({0, 3});
  CHECK(c1_cochain(x) == IntVector{0, 3});
  CHECK(gcd_nonneg(c1_cochain(x)) == rotation_divisor(x));
}

TEST_CASE("boundary_connected_sum") {
  auto x = from_rots({0, 3});
  auto y = from_rots({0, 0, 0});
  auto s = boundary_connected_sum(x, y);
  CHECK(s.b2() == 5);
  CHECK(c1_cochain(s) == concat(c1_cochain(x), c1_cochain(y)));
  CHECK(rotation_divisor(s) == 3);
}

TEST_CASE("intersection_form") {
  SUBCASE("single unknot") {
    auto x = canonical_model(0, 1);
    CHECK(intersection_form(x) == IntMatrix{{-2}});
  }
  SUBCASE("two unlinked unknots") {
    auto x = canonical_model(0, 2);
    CHECK(intersection_form(x) == IntMatrix{{-2, 0}, {0, -2}});
  }
  SUBCASE("Hopf-linked pair from a shared front") {
    auto f = std::make_shared<const OrientedFront>(OrientedFront::trace(parse_front("L1 L2 X1 X1 R2 R1")));
    SteinHandlebody x({SteinHandle(HandleSource{f, 0, {}}), SteinHandle(HandleSource{f, 1, {}})});
    CHECK(intersection_form(x) == IntMatrix{{-2, 1}, {1, -2}});
    auto g = std::make_shared<const OrientedFront>(f->reversed(1));
    SteinHandlebody xr({SteinHandle(HandleSource{g, 0, {}}), SteinHandle(HandleSource{g, 1, {}})});
    CHECK(intersection_form(xr) == IntMatrix{{-2, -1}, {-1, -2}});
  }
  SUBCASE("missing linking data") {
    CHECK_THROWS_AS(intersection_form(from_rots({0, 1})), ValidationError);
  }
  SUBCASE("explicit linking, block diagonal under boundary sum") {
    SteinHandlebody a({SteinHandle(-1, 0), SteinHandle(-2, 1)}, LinkingMatrix{{0, 3}, {3, 0}});
    auto s = boundary_connected_sum(a, canonical_model(0, 1));
    CHECK(intersection_form(s) == IntMatrix{{-2, 3, 0}, {3, -3, 0}, {0, 0, -2}});
  }
  CHECK_THROWS_AS(SteinHandlebody({SteinHandle(-1, 0), SteinHandle(-1, 0)},
                                  LinkingMatrix{{0, 1}, {2, 0}}),
                  ValidationError);
  CHECK_THROWS_AS(SteinHandlebody(std::vector<SteinHandle>{}), ValidationError);
}

TEST_CASE("canonical_model fixtures") {
  SUBCASE("r = 0, n = 3") {
    auto x = canonical_model(0, 3);
    REQUIRE(x.b2() == 3);
    for (const auto& h : x.handles()) {
      CHECK(h.tb() == -1);
      CHECK(h.rot() == 0);
    }
  }
  SUBCASE("r = 3, n = 2") {
    auto x = canonical_model(3, 2);
    CHECK(c1_cochain(x) == IntVector{3, 3});
    CHECK(x.handles()[0].tb() == -4);
    CHECK(x.handles()[1].tb() == -4);
  }
  SUBCASE("r = 2, n = 2") {
    auto x = canonical_model(2, 2);
    CHECK(c1_cochain(x) == IntVector{2, 0});
    CHECK(x.handles()[0].tb() == -3);
    CHECK(x.handles()[1].tb() == -1);
  }
  CHECK_THROWS_AS(canonical_model(-1, 2), ValidationError);
  CHECK_THROWS_AS(canonical_model(1, 0), ValidationError);
}

TEST_CASE("property: canonical_model round trip and realizability") {
  for (int64_t r = 0; r <= 30; ++r)
    for (int64_t n = 1; n <= 10; ++n) {
      auto x = canonical_model(r, n);
      CHECK(x.b2() == static_cast<std::size_t>(n));
      CHECK(rotation_divisor(x) == r);
      for (const auto& h : x.handles()) {
        CHECK(realizable_by_unknot(h.tb(), h.rot()));
        CHECK((h.rot() - r) % 2 == 0);
        CHECK(h.framing() == h.tb() - 1);
        REQUIRE(h.source());
        CHECK(thurston_bennequin(*h.source()->front, h.source()->component) == h.tb());
        CHECK(rotation_number(*h.source()->front, h.source()->component) == h.rot());
      }
    }
}

TEST_CASE("property: boundary sum composes c1 and gcd") {
  gen::Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = gen::random_vector(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 5)), 30);
    auto b = gen::random_vector(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 5)), 30);
    auto x = from_rots(a.values()), y = from_rots(b.values());
    auto s = boundary_connected_sum(x, y);
    CHECK(c1_cochain(s) == concat(a, b));
    CHECK(rotation_divisor(s) == oracle::euclid_gcd({rotation_divisor(x), rotation_divisor(y)}));
  }
}

TEST_CASE("handlebody file parsing") {
  auto dir = scratch_dir("parse");
  {
    std::ofstream(dir / "hopf.front") << "L1 L2 X1 X1 R2 R1\n";
  }
  SUBCASE("invariant-only records") {
    auto x = parse_handlebody("# comment\nhandle tb=-7 rot=6\nhandle tb=-5 rot=-4\n\nhandle tb=-11 rot=10\n");
    CHECK(c1_cochain(x) == IntVector{6, -4, 10});
    CHECK_FALSE(x.linking());
  }
  SUBCASE("front records share one front") {
    auto x = parse_handlebody("handle front=hopf.front component=0\nhandle front=hopf.front component=1\n",
                              dir.string());
    CHECK(x.handles()[0].source()->front == x.handles()[1].source()->front);
    CHECK(intersection_form(x) == IntMatrix{{-2, 1}, {1, -2}});
  }
  SUBCASE("combined record is cross-checked") {
    CHECK_NOTHROW(parse_handlebody("handle tb=-1 rot=0 front=hopf.front component=1\n", dir.string()));
    try {
      parse_handlebody("handle tb=-1 rot=0\nhandle tb=-2 rot=1 front=hopf.front\n", dir.string());
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("link lines") {
    auto x = parse_handlebody("handle tb=-1 rot=0\nhandle tb=-1 rot=0\nlink 0 1 -2\n");
    CHECK(intersection_form(x) == IntMatrix{{-2, -2}, {-2, -2}});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_handlebody(""), ParseError);
    CHECK_THROWS_AS(parse_handlebody("handle tb=-1\n"), ParseError);
    CHECK_THROWS_AS(parse_handlebody("handle tb=x rot=0\n"), ParseError);
    CHECK_THROWS_AS(parse_handlebody("handle tb=-1 rot=0 color=red\n"), ParseError);
    CHECK_THROWS_AS(parse_handlebody("handle tb=-1 rot=0\nlink 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_handlebody("handle tb=-1 rot=0\nlink 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_handlebody("handles tb=-1 rot=0\n"), ParseError);
    CHECK_THROWS_AS(parse_handlebody("handle front=missing.front\n", dir.string()), Error);
  }
}

} // TEST_SUITE

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "shifted/enumerate.hpp"
#include "shifted/shifted_order.hpp"
#include "shifted/simplicial_complex.hpp"

using namespace shifted;

namespace {

SimplicialComplex cx(const std::vector<std::vector<VertexId>>& faces, int n) {
  std::vector<FaceSet> fs;
  for (const auto& f : faces) fs.push_back(FaceSet::of(f));
  return SimplicialComplex::from_facets(fs, n);
}

SimplicialComplex relabel(const SimplicialComplex& k, const VertexLabeling& to) {
  std::vector<FaceSet> fs;
  for (FaceSet f : k.facets()) {
    FaceSet g;
    for (VertexId v : f.vertices()) g = g.with(to[static_cast<std::size_t>(v)]);
    fs.push_back(g);
  }
  return SimplicialComplex::from_antichain(std::move(fs), k.vertex_count());
}

}  // namespace

TEST_CASE("identity labeling") {
  CHECK(identity_labeling(4) == VertexLabeling{0, 1, 2, 3, 4});
  CHECK(identity_labeling(0) == VertexLabeling{0});
}

TEST_CASE("padded componentwise order") {
  CHECK(padded_less_or_equal(FaceSet{}, FaceSet{}));
  CHECK(padded_less_or_equal(FaceSet{}, FaceSet::of({1})));
  CHECK(padded_less_or_equal(FaceSet::of({1, 3}), FaceSet::of({1, 3})));
  CHECK(padded_less_or_equal(FaceSet::of({2, 4}), FaceSet::of({1, 3, 5, 6})));
  CHECK(padded_less_or_equal(FaceSet::of({3}), FaceSet::of({1, 3})));
  CHECK(padded_less_or_equal(FaceSet::of({1, 4}), FaceSet::of({2, 4})));
  CHECK(!padded_less_or_equal(FaceSet::of({2}), FaceSet::of({1})));
  CHECK(!padded_less_or_equal(FaceSet::of({1, 4}), FaceSet::of({2, 3})));
  CHECK(!padded_less_or_equal(FaceSet::of({2, 3}), FaceSet::of({1, 4})));
  // A strictly larger set never compares below a smaller one.
  CHECK(!padded_less_or_equal(FaceSet::of({1, 2}), FaceSet::of({2})));
  CHECK(!padded_less_or_equal(FaceSet::of({1, 2, 3}), FaceSet::of({5, 6})));

  // Subsets are always below their supersets.
  for (std::uint64_t y = 0; y < 16; ++y)
    for (std::uint64_t x = 0; x < 16; ++x)
      if ((x & ~y) == 0)
        CHECK(padded_less_or_equal(FaceSet::from_mask(x), FaceSet::from_mask(y)));
}

TEST_CASE("order ideal detection") {
  CHECK(is_order_ideal(cx({{1, 2, 3}, {1, 4}, {2, 4}}, 4)));
  CHECK(!is_order_ideal(cx({{2, 4}}, 4)));
  CHECK(!is_order_ideal(cx({{2}}, 2)));
  CHECK(is_order_ideal(cx({{1}}, 2)));
  CHECK(is_order_ideal(SimplicialComplex::void_complex(3)));
  CHECK(is_order_ideal(SimplicialComplex::empty_face_only(3)));
  CHECK_THROWS_AS(is_order_ideal(cx({{1}}, 17)), std::invalid_argument);
}

TEST_CASE("swap closure under an explicit labeling") {
  SimplicialComplex running = cx({{1, 2, 3}, {1, 4}, {2, 4}}, 4);
  CHECK(is_shifted_under(running, identity_labeling(4)));

  // {2,3} alone is not shifted as labeled, but relabeling 1 to the bottom
  // rank makes every swap target vacuous.
  SimplicialComplex pair = cx({{2, 3}}, 3);
  CHECK(!is_shifted_under(pair, identity_labeling(3)));
  CHECK(is_shifted_under(pair, VertexLabeling{0, 3, 1, 2}));

  CHECK_THROWS_AS(is_shifted_under(pair, VertexLabeling{0, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_shifted_under(pair, VertexLabeling{0, 1, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_shifted_under(pair, VertexLabeling{0, 1, 2, 4}),
                  std::invalid_argument);
}

TEST_CASE("order ideals are exactly the complexes shifted under the identity") {
  for (int n = 1; n <= 4; ++n) {
    enumerate_complexes(n, false, [&](const SimplicialComplex& k) {
      CHECK(is_order_ideal(k) == is_shifted_under(k, identity_labeling(n)));
    });
  }
}

TEST_CASE("labeling search finds witnesses and respects impossibility") {
  CHECK(!find_shifted_labeling(cx({{1, 2}, {2, 3}, {3, 4}}, 4)).has_value());
  CHECK(!find_shifted_labeling(cx({{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 4)).has_value());

  SimplicialComplex pairs4 =
      cx({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, 4);
  auto found = find_shifted_labeling(pairs4);
  REQUIRE(found.has_value());
  CHECK(is_shifted_under(pairs4, *found));

  SimplicialComplex mixed =
      cx({{4, 5}, {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}}, 5);
  auto witness = find_shifted_labeling(mixed);
  REQUIRE(witness.has_value());
  CHECK(is_shifted_under(mixed, *witness));

  CHECK_THROWS_AS(find_shifted_labeling(cx({{1}}, 11)), std::invalid_argument);
}

TEST_CASE("relabeled order ideals stay findable") {
  std::mt19937 rng(20240923);
  for (int n = 3; n <= 4; ++n) {
    VertexLabeling perm = identity_labeling(n);
    enumerate_complexes(n, false, [&](const SimplicialComplex& k) {
      if (!is_order_ideal(k)) return;
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      SimplicialComplex scrambled = relabel(k, perm);
      auto found = find_shifted_labeling(scrambled);
      REQUIRE(found.has_value());
      CHECK(is_shifted_under(scrambled, *found));
    });
  }
}

TEST_CASE("starring joins a fresh vertex to the small faces") {
  CHECK(star_d(cx({{1, 2}}, 2), 3, 1) == cx({{1, 2}, {1, 3}, {2, 3}}, 3));
  CHECK(star_d(cx({{1, 2, 3}}, 3), 4, 2) ==
        cx({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, 4));
  CHECK(star_d(cx({{1, 2, 3}}, 3), 4, 3) == cx({{1, 2, 3, 4}}, 4));
  CHECK(star_d(SimplicialComplex::empty_face_only(0), 1, 1) == cx({{1}}, 1));

  // Starring joins actual faces only; a tracked but faceless vertex is skipped.
  SimplicialComplex ghost = cx({{2}}, 2);
  CHECK(star_d(ghost, 3, 1) == cx({{2, 3}}, 3));

  SimplicialComplex v = star_d(SimplicialComplex::void_complex(3), 5, 2);
  CHECK(v.is_void());
  CHECK(v.vertex_count() == 5);

  CHECK_THROWS_AS(star_d(cx({{1, 2}}, 2), 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(star_d(cx({{1, 2}}, 2), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(star_d(cx({{1, 2}}, 2), 0, 1), std::invalid_argument);
}

TEST_CASE("ideals generated from top faces") {
  CHECK(padded_order_ideal({FaceSet::of({1, 3})}, 3) == cx({{1, 2}, {1, 3}}, 3));
  CHECK(padded_order_ideal({}, 3) == SimplicialComplex::void_complex(3));
  CHECK(padded_order_ideal({FaceSet{}}, 2) == SimplicialComplex::empty_face_only(2));
  CHECK(padded_order_ideal({FaceSet::of({2, 6})}, 6).f_vector() == FVector{6, 9});
  CHECK_THROWS_AS(padded_order_ideal({FaceSet::of({4})}, 3), std::invalid_argument);
  CHECK_THROWS_AS(padded_order_ideal({}, 0), std::invalid_argument);
  CHECK_THROWS_AS(padded_order_ideal({}, 17), std::invalid_argument);

  // The generated complex is downward closed by construction.
  for (int n = 2; n <= 4; ++n) {
    SimplicialComplex ideal = padded_order_ideal({FaceSet::of({2, n})}, n);
    CHECK(is_order_ideal(ideal));
    CHECK(is_shifted_under(ideal, identity_labeling(n)));
  }
}

TEST_SUITE("slow") {
  TEST_CASE("ideal equivalence holds across the five vertex census") {
    enumerate_complexes(5, false, [&](const SimplicialComplex& k) {
      CHECK(is_order_ideal(k) == is_shifted_under(k, identity_labeling(5)));
    });
  }

  TEST_CASE("every pure six vertex ideal admits its identity labeling") {
    std::uint64_t ideals = 0;
    enumerate_complexes(6, true, [&](const SimplicialComplex& k) {
      if (!is_shifted_under(k, identity_labeling(6))) return;
      ++ideals;
      CHECK(is_order_ideal(k));
    });
    CHECK(ideals > 0);
  }
}

// Copyright 2026 The ksctx developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <doctest.h>

#include "ksctx/errors.hpp"
#include "ksctx/ray.hpp"
#include "test_util.hpp"

using namespace ksctx;

namespace {

Ray sq(std::vector<long long> t) { return Ray::from_sqmag(t); }

Ray rad(const std::string& x, const std::string& y, const std::string& z) {
  return Ray({RadScalar::parse(x), RadScalar::parse(y), RadScalar::parse(z)});
}

}  // namespace

TEST_CASE("sqmag decoding") {
  CHECK(sq({0, 0, 1}).canonical_key() == "0, 0, 1");
  CHECK(sq({1, -1, 4}).canonical_key() == "1, -1, 2");

  // (4,1,-1) decodes to (2,1,-1); its squared cosines are (2/3, 1/6, 1/6)
  Ray r = sq({4, 1, -1});
  CHECK(r.canonical_key() == "2, 1, -1");
  RadScalar norm;
  for (const auto& c : r.components()) norm += c * c;
  REQUIRE(norm.is_rational());
  std::vector<Rational> cosines;
  for (const auto& c : r.components()) {
    RadScalar s = c * c;
    cosines.push_back((s.is_zero() ? Rational(0) : s.coefficient()) /
                      norm.coefficient());
  }
  CHECK(cosines == std::vector<Rational>{Rational(2, 3), Rational(1, 6), Rational(1, 6)});

  CHECK_THROWS_AS(sq({0, 0, 0}), InvalidRay);
}

TEST_CASE("dot products") {
  CHECK(dot(sq({1, 0, 0}), sq({0, 1, 0})).is_zero());
  CHECK(dot(sq({1, 1, 0}), sq({1, -1, 0})).is_zero());
  // (1,2,-1).(-1,1,1) = -1 + 2 - 1
  CHECK(dot(rad("1", "2", "-1"), rad("-1", "1", "1")).is_zero());
  CHECK(dot(sq({1, 1, 0}), sq({1, 1, 0})) == RadScalar(2));
  CHECK_THROWS_AS(dot(sq({1, 0, 0}), Ray::from_sqmag({1, 0, 0, 0})), DimError);
}

TEST_CASE("proportionality") {
  CHECK(proportional(rad("1", "1", "1"), rad("-1", "-1", "-1")));
  CHECK_FALSE(proportional(rad("1", "1", "1"), rad("1", "1", "-1")));
  // (r2, r2, -2) is (1, 1, -r2) scaled by r2
  Ray a = rad("1 r2", "1 r2", "-2");
  Ray b = rad("1", "1", "-1 r2");
  CHECK(proportional(a, b));
  CHECK(a == b);
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK_THROWS_AS(proportional(sq({1, 0, 0}), Ray::from_sqmag({1, 0, 0, 0})), DimError);
}

TEST_CASE("canonicalization is projective") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coord(-4, 4);
  static const std::uint64_t square_free[] = {1, 2, 3, 5, 6, 10};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(square_free) - 1);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<RadScalar> comps;
    for (int i = 0; i < 3; ++i)
      comps.push_back(RadScalar(Rational(coord(rng)), square_free[pick(rng)]));
    bool all_zero = true;
    for (const auto& c : comps) all_zero = all_zero && c.is_zero();
    if (all_zero) continue;

    RadScalar lambda;
    while (lambda.is_zero())
      lambda = RadScalar(Rational(coord(rng), 1 + std::abs(coord(rng))),
                         square_free[pick(rng)]);
    std::vector<RadScalar> scaled;
    for (const auto& c : comps) scaled.push_back(c * lambda);

    Ray original{std::vector<RadScalar>(comps)};
    Ray rescaled{std::move(scaled)};
    CHECK(original.canonical_key() == rescaled.canonical_key());
    CHECK(original == rescaled);
  }
}

TEST_CASE("triad completion") {
  CHECK(complete(sq({1, 0, 0}), sq({0, 1, 0})).canonical_key() == "0, 0, 1");
  // cross((1,0,1), (-1,1,1)) = (-1,-2,1), canonically (1, 2, -1)
  CHECK(complete(rad("1", "0", "1"), rad("-1", "1", "1")).canonical_key() ==
        "1, 2, -1");
  CHECK(complete(sq({0, 1, -1}), sq({1, 0, 0})).canonical_key() == "0, 1, 1");

  Ray x = sq({1, 0, 0});
  CHECK_THROWS_AS(complete(x, sq({1, 1, 0})), NotAPair);       // not orthogonal
  CHECK_THROWS_AS(complete(x, rad("-2", "0", "0")), NotAPair);  // proportional
  CHECK_THROWS_AS(complete(Ray::from_sqmag({1, 0, 0, 0}), Ray::from_sqmag({0, 1, 0, 0})),
                  DimError);

  SUBCASE("completion is orthogonal to both inputs") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> coord(-3, 3);
    int done = 0;
    while (done < 100) {
      std::vector<long long> ta{coord(rng), coord(rng), coord(rng)};
      std::vector<long long> tb{coord(rng), coord(rng), coord(rng)};
      bool za = ta[0] == 0 && ta[1] == 0 && ta[2] == 0;
      bool zb = tb[0] == 0 && tb[1] == 0 && tb[2] == 0;
      if (za || zb) continue;
      Ray a = sq(ta);
      Ray b = sq(tb);
      if (!dot(a, b).is_zero() || proportional(a, b)) continue;
      Ray c = complete(a, b);
      CHECK(dot(a, c).is_zero());
      CHECK(dot(b, c).is_zero());
      ++done;
    }
  }
}

TEST_CASE("ray set deduplication") {
  RaySet s(3);
  CHECK(s.insert(sq({1, 1, 0})).second);
  auto [idx, inserted] = s.insert(sq({-1, -1, 0}));
  CHECK_FALSE(inserted);
  CHECK(idx == 0);
  CHECK(s.size() == 1);
  CHECK(s.duplicates_dropped() == 1);

  SUBCASE("multi-term components fall back to proportionality scans") {
    // (1+r2, 0, 0) is (1,0,0) scaled by the two-term factor 1+r2
    Ray multi = rad("1 + 1 r2", "0", "0");
    CHECK_FALSE(multi.all_single_term());
    s.insert(sq({1, 0, 0}));
    auto [i2, fresh] = s.insert(multi);
    CHECK_FALSE(fresh);
    CHECK(i2 == 1);

    // and single-term inserts are checked against stored multi-term rays
    RaySet t(3);
    t.insert(rad("1 + 1 r2", "1 + 1 r2", "0"));
    CHECK_FALSE(t.insert(sq({1, 1, 0})).second);
    CHECK(t.size() == 1);
  }
}

TEST_CASE("triad closure") {
  SUBCASE("single triad is a fixpoint") {
    RaySet s(3);
    s.insert(sq({1, 0, 0}));
    s.insert(sq({0, 1, 0}));
    s.insert(sq({0, 0, 1}));
    RaySet c = triad_closure(s);
    CHECK(c.size() == 3);
  }

  SUBCASE("one orthogonal pair closes to its triad") {
    RaySet s(3);
    s.insert(sq({1, 0, 0}));
    s.insert(sq({0, 1, 1}));
    RaySet c = triad_closure(s);
    REQUIRE(c.size() == 3);
    CHECK(c[2].canonical_key() == "0, 1, -1");
    CHECK(c.contains(sq({0, -1, 1})));
  }

  SUBCASE("monotone, idempotent, deterministic") {
    RaySet s(3);
    s.insert(sq({0, 0, 1}));
    s.insert(sq({1, 1, 0}));
    s.insert(sq({1, 0, 1}));
    s.insert(sq({0, 1, 1}));
    RaySet c1 = triad_closure(s);
    for (const Ray& r : s) CHECK(c1.contains(r));
    // input order is preserved as a prefix
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(c1[i].canonical_key() == s[i].canonical_key());
    RaySet c2 = triad_closure(c1);
    REQUIRE(c2.size() == c1.size());
    for (std::size_t i = 0; i < c1.size(); ++i)
      CHECK(c1[i].canonical_key() == c2[i].canonical_key());
  }

  SUBCASE("multi-term components close correctly") {
    // (1, 1+r2, 0) and (1+r2, -1, 0) are orthogonal; their completion is
    // proportional to (0,0,1) with the multi-term factor 4+2r2, so the
    // linear-scan dedup has to recognise it
    RaySet s(3);
    s.insert(rad("1", "1 + 1 r2", "0"));
    s.insert(rad("1 r2 + 1", "-1", "0"));
    s.insert(sq({0, 0, 1}));
    Ray third = complete(s[0], s[1]);
    CHECK_FALSE(third.all_single_term());
    CHECK(third.canonical_key() == "0, 0, 1 r2 + 2");
    CHECK(proportional(third, sq({0, 0, 1})));
    RaySet c = triad_closure(s);
    CHECK(c.size() == 3);
  }

  SUBCASE("dimension and size guards") {
    CHECK_THROWS_AS(triad_closure(RaySet(4)), DimError);
    RaySet s(3);
    s.insert(sq({1, 0, 0}));
    s.insert(sq({0, 1, 1}));
    CHECK_THROWS_AS(triad_closure(s, 2), TooLarge);
  }
}

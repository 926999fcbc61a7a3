/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include <doctest.h>

#include "pdta/bounds.hpp"

using namespace pdta;

TEST_CASE("bound total order: (<,c) < (<=,c) < (<,c+1), infinity is maximum") {
  for (std::int64_t c : {-5, -1, 0, 1, 7}) {
    CHECK(Bound::strict(c) < Bound::weak(c));
    CHECK(Bound::weak(c) < Bound::strict(c + 1));
    CHECK(Bound::weak(c) < Bound::infinity());
    CHECK(Bound::strict(c) < Bound::infinity());
  }
  CHECK(Bound::infinity() == Bound::infinity());
}

TEST_CASE("bound addition takes the stricter comparator and sums constants") {
  CHECK(Bound::weak(2) + Bound::weak(3) == Bound::weak(5));
  CHECK(Bound::strict(2) + Bound::weak(3) == Bound::strict(5));
  CHECK(Bound::weak(-2) + Bound::strict(3) == Bound::strict(1));
  CHECK(Bound::strict(-2) + Bound::strict(-3) == Bound::strict(-5));
  CHECK(Bound::infinity() + Bound::weak(1) == Bound::infinity());
  CHECK(Bound::weak(-100) + Bound::infinity() == Bound::infinity());
}

TEST_CASE("bound accessors and negation") {
  CHECK(Bound::weak(4).value() == 4);
  CHECK_FALSE(Bound::weak(4).is_strict());
  CHECK(Bound::strict(-3).value() == -3);
  CHECK(Bound::strict(-3).is_strict());
  CHECK(Bound::weak(4).negated() == Bound::strict(-4));
  CHECK(Bound::strict(4).negated() == Bound::weak(-4));
  CHECK(Bound::weak(0).to_string() == "<=0");
  CHECK(Bound::infinity().to_string() == "inf");
}

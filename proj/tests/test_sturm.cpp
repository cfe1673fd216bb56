#include <doctest.h>

#include <algorithm>

#include "gwbez/sturm.hpp"

using namespace gwbez;

namespace {

UPoly<Rat> ux(std::initializer_list<long> lowfirst) {
  UPoly<Rat> f;
  for (long c : lowfirst) f.emplace_back(c);
  up::normalize(f);
  return f;
}

// x^5 - 5x^3 + 6x = x(x^2 - 2)(x^2 - 3): roots 0, +-sqrt(2), +-sqrt(3).
const UPoly<Rat> quintic = ux({0, 6, 0, -5, 0, 1});

}  // namespace

TEST_CASE("counting real roots") {
  SturmChain c(quintic);
  CHECK(c.count_all() == 5);
  CHECK(c.count(Rat(0), Rat(2)) == 2);    // sqrt(2), sqrt(3) in (0, 2]
  CHECK(c.count(Rat(-2), Rat(0)) == 3);   // -sqrt(3), -sqrt(2), 0
  CHECK(c.count(Rat(3), Rat(10)) == 0);
  CHECK(c.root_bound() > Rat(1));

  // repeated roots collapse to the squarefree part
  SturmChain d(ux({0, 0, 1}));  // x^2
  CHECK(d.count_all() == 1);
  CHECK(d.degree() == 1);

  CHECK(SturmChain(ux({1, 0, 1})).count_all() == 0);  // x^2 + 1
  CHECK(SturmChain(ux({7})).count_all() == 0);
  CHECK_THROWS_AS(SturmChain(UPoly<Rat>{}), ZeroInput);
}

TEST_CASE("isolation separates all five roots") {
  SturmChain c(quintic);
  auto ivs = c.isolate();
  REQUIRE(ivs.size() == 5);
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    CHECK(ivs[i].first <= ivs[i].second);
    if (i > 0) CHECK(ivs[i - 1].second <= ivs[i].first);
    if (ivs[i].first == ivs[i].second) {
      CHECK(up::eval(c.squarefree(), ivs[i].first) == Rat(0));
    } else {
      CHECK(c.count(ivs[i].first, ivs[i].second) == 1);
      CHECK(up::eval(c.squarefree(), ivs[i].first) != Rat(0));
      CHECK(up::eval(c.squarefree(), ivs[i].second) != Rat(0));
    }
  }
  // middle root is rational and returned exactly
  CHECK(ivs[2].first == Rat(0));
  CHECK(ivs[2].second == Rat(0));
}

TEST_CASE("refinement narrows an interval around its root") {
  SturmChain c(quintic);
  auto ivs = c.isolate();
  // sqrt(2) lives in ivs[3]
  RootInterval iv = c.refine(ivs[3], Rat(1, 1000));
  CHECK(iv.second - iv.first < Rat(1, 1000));
  CHECK(c.count(iv.first, iv.second) == 1);
  CHECK(iv.first < iv.second);
  CHECK(Rat(1414, 1000) < iv.second);
  CHECK(iv.first < Rat(1415, 1000));
  // exact roots pass through unchanged
  RootInterval z = c.refine(ivs[2], Rat(1, 1000000));
  CHECK(z.first == z.second);
}

TEST_CASE("signs of a second polynomial at isolated roots") {
  SturmChain c(quintic);
  auto ivs = c.isolate();
  REQUIRE(ivs.size() == 5);
  // g = x is negative at the two negative roots, zero at 0, positive after
  UPoly<Rat> g = ux({0, 1});
  std::vector<int> signs;
  for (const auto& iv : ivs) signs.push_back(sign_at_root(c, iv, g));
  CHECK(signs == std::vector<int>{-1, -1, 0, 1, 1});

  // g = x^2 - 5/2 separates sqrt(2) from sqrt(3)
  UPoly<Rat> h{Rat(-5, 2), Rat(0), Rat(1)};
  std::vector<int> hsigns;
  for (const auto& iv : ivs) hsigns.push_back(sign_at_root(c, iv, h));
  CHECK(hsigns == std::vector<int>{1, -1, -1, -1, 1});
}

TEST_CASE("sign evaluation helper") {
  CHECK(upoly_sign_at(ux({-1, 1}), Rat(2)) == 1);
  CHECK(upoly_sign_at(ux({-1, 1}), Rat(1)) == 0);
  CHECK(upoly_sign_at(ux({-1, 1}), Rat(0)) == -1);
}

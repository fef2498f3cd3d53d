#include "doctest.h"

#include "cocenter/newton.hpp"

using namespace cocenter;

namespace {

IwahoriWeyl make(const std::string& g, const std::string& lattice = "sc") {
  return IwahoriWeyl(RootDatum::build(GroupDescriptor::parse(g, lattice)));
}

RatVec rv(std::initializer_list<Rational> xs) {
  RatVec v{};
  int i = 0;
  for (auto x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("GL5 Newton point") {
  auto g = make("GL5");
  const auto& w0 = g.datum().weyl();
  auto expected = rv({Rational(2, 3), Rational(2, 3), Rational(2, 3), Rational(1, 2), Rational(1, 2)});
  Element w{IntVec{1, 1, 0, 1, 0}, w0.from_word({2, 1, 4})};
  CHECK(newton_point(g, w) == expected);
  CHECK(newton_index(g, w).nu_bar == expected);
  // s1 s3 s2 s4 is a 5-cycle, so its average is constant
  Element c{IntVec{1, 1, 0, 1, 0}, w0.from_word({1, 3, 2, 4})};
  CHECK(newton_point(g, c) == rv({Rational(3, 5), Rational(3, 5), Rational(3, 5), Rational(3, 5), Rational(3, 5)}));
}

TEST_CASE("small Newton indices") {
  auto a1 = make("A1");
  CHECK(newton_point(a1, a1.translation(IntVec{3})) == rv({Rational(3)}));
  CHECK(newton_point(a1, a1.simple(0)) == RatVec{});
  auto t = a1.translation(IntVec{-1});
  CHECK(newton_index(a1, t).nu_bar == rv({Rational(1)}));
  CHECK(newton_index(a1, a1.identity()) == NewtonIndex{{}, RatVec{}});

  auto gl2 = make("GL2");
  Element w{IntVec{1, 0}, gl2.datum().weyl().simple(1)};
  auto idx = newton_index(gl2, w);
  CHECK(idx.nu_bar == rv({Rational(1, 2), Rational(1, 2)}));
  CHECK(idx.omega == gl2.kappa(w));
}

TEST_CASE("straightness") {
  auto a1 = make("A1");
  CHECK(!is_straight(a1, a1.simple(0)));
  CHECK(!is_straight_by_powers(a1, a1.simple(0)));
  CHECK(is_straight(a1, a1.translation(IntVec{1})));
  CHECK(is_straight(a1, a1.translation(IntVec{-1})));
  auto c2 = make("C2");
  CHECK(is_straight(c2, c2.translation(IntVec{2, 1})));
}

TEST_CASE("SL2 strata") {
  auto g = make("A1");
  auto s = strata(g, 4, {{}});
  REQUIRE(s.size() == 3);
  CHECK(s[NewtonIndex{{}, RatVec{}}].size() == 5);
  CHECK(s[NewtonIndex{{}, rv({Rational(1)})}].size() == 2);
  CHECK(s[NewtonIndex{{}, rv({Rational(2)})}].size() == 2);
  auto zero = strata(g, 0, {{}});
  CHECK(zero.size() == 1);
}

TEST_CASE("Newton invariants on balls") {
  for (auto grp : {"A1", "A2", "C2", "G2"}) {
    CAPTURE(grp);
    auto g = make(grp);
    std::vector<Element> omegas;
    for (const auto& l : g.default_labels()) omegas.push_back(g.omega_rep(l));
    for (const auto& w : g.ball(5, g.default_labels())) {
      auto idx = newton_index(g, w);
      CHECK(is_dominant_in(g, idx.nu_bar));
      for (int i = 0; i < g.num_simple(); ++i) CHECK(newton_index(g, g.conjugate(g.simple(i), w)) == idx);
      for (const auto& om : omegas) CHECK(newton_index(g, g.conjugate(om, w)) == idx);
      CHECK(is_straight(g, w) == is_straight_by_powers(g, w));
      // twice the exponent gives the same average
      const int n = g.datum().weyl().order(w.finite);
      Element p = g.power(w, 2 * n);
      RatVec nu = newton_point(g, w);
      for (int k = 0; k < g.dim(); ++k) CHECK(Rational(p.translation[k], 2 * n) == nu[k]);
      if (is_straight(g, w))
        for (int k = 1; k <= 6; ++k) {
          Element wk = g.power(w, k);
          CHECK(g.length(wk) == k * g.length(w));
          RatVec scaled = idx.nu_bar;
          for (int j = 0; j < g.dim(); ++j) scaled[j] *= k;
          CHECK(newton_index(g, wk).nu_bar == scaled);
        }
    }
  }
}

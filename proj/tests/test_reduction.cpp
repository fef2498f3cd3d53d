#include "doctest.h"

#include "cocenter/reduction.hpp"

using namespace cocenter;

namespace {

IwahoriWeyl make(const std::string& g, const std::string& lattice = "sc") {
  return IwahoriWeyl(RootDatum::build(GroupDescriptor::parse(g, lattice)));
}

// Minimal length among the conjugates of w found in a ball, by the lattice conjugacy test.
int brute_min_length(const IwahoriWeyl& g, const std::vector<Element>& ball, const Element& w) {
  int best = g.length(w);
  for (const auto& x : ball)
    if (g.length(x) < best && g.are_conjugate(w, x)) best = g.length(x);
  return best;
}

}  // namespace

TEST_CASE("conj_step classification") {
  auto g = make("A1");
  Element w = g.from_word({1, 0, 1}, {});
  auto [move, x] = conj_step(g, w, 1);
  CHECK(move == ConjMove::Down);
  CHECK(x == g.simple(0));
  CHECK(conj_step(g, g.simple(0), 0).first == ConjMove::Equal);
  CHECK(conj_step(g, g.simple(0), 0).second == g.simple(0));
  auto a2 = make("A2");
  // s1 and the translation t^{(1,1)}... commuting case: s1 commutes with itself
  CHECK(conj_step(a2, a2.simple(1), 1).first == ConjMove::Equal);
}

TEST_CASE("SL2 reduction of s1 s0 s1") {
  auto g = make("A1");
  Element w = g.from_word({1, 0, 1}, {});
  auto path = reduce_to_min(g, w);
  REQUIRE(path.steps.size() == 1);
  CHECK(path.steps[0].kind == StepKind::ConjDown);
  CHECK(path.end == g.simple(0));
  CHECK(replay(g, path));
  CHECK(!is_min_in_class(g, w));
  CHECK(is_min_in_class(g, g.simple(0)));
  auto empty = reduce_to_min(g, g.simple(1));
  CHECK(empty.steps.empty());
}

TEST_CASE("standard triples of small examples") {
  auto g = make("A1");
  auto t = standard_triple(g, g.simple(0));
  CHECK(t.x == g.identity());
  CHECK(t.K == std::vector<int>{0});
  CHECK(t.u == g.simple(0));
  auto tr = g.translation(IntVec{2});
  auto tt = standard_triple(g, tr);
  CHECK(tt.K.empty());
  CHECK(tt.x == tr);
  auto gl2 = make("GL2");
  Element om{IntVec{1, 0}, gl2.datum().weyl().simple(1)};
  auto to = standard_triple(gl2, om);
  CHECK(to.x == om);
  CHECK(to.K.empty());
  CHECK(to.u == gl2.identity());
}

TEST_CASE("exhaustive reduction on rank two balls") {
  for (auto grp : {"A1", "A2", "C2", "G2"}) {
    CAPTURE(grp);
    auto g = make(grp);
    const int L = 8;
    auto ball = g.ball(L, g.default_labels());
    for (const auto& w : ball) {
      auto path = reduce_to_min(g, w);
      CHECK(replay(g, path));
      CHECK(path.steps.size() <= path_bound(g, w));
      auto pi = newton_index(g, w);
      int prev = g.length(w);
      for (const auto& st : path.steps) {
        CHECK(newton_index(g, st.result) == pi);
        CHECK(st.length <= prev);
        prev = st.length;
      }
      CHECK(is_min_in_class(g, path.end));
      CHECK(brute_min_length(g, ball, w) == g.length(path.end));
      auto t = standard_triple(g, path.end);
      CHECK(check_triple(g, t) == "");
      if (is_straight(g, w)) CHECK(is_min_in_class(g, w));
    }
  }
}

TEST_CASE("GL5 example reduces with pi preserved") {
  auto g = make("GL5");
  Element w{IntVec{1, 1, 0, 1, 0}, g.datum().weyl().from_word({2, 1, 4})};
  auto path = reduce_to_min(g, w);
  CHECK(replay(g, path));
  CHECK(newton_index(g, path.end) == newton_index(g, w));
  CHECK(is_min_in_class(g, path.end));
  CHECK(check_triple(g, standard_triple(g, path.end)) == "");
}

TEST_CASE("canonical keys are class invariants") {
  auto g = make("A2");
  for (const auto& w : g.ball(5, g.default_labels())) {
    auto m = reduce_to_min(g, w).end;
    auto key = canonical_key(g, m);
    CHECK(g.are_conjugate(key, w));
    CHECK(g.length(key) == g.length(m));
    for (const auto& y : equal_class(g, m)) CHECK(canonical_key(g, y) == key);
  }
}

#include "doctest.h"

#include "cocenter/errors.hpp"
#include "cocenter/newton.hpp"
#include "cocenter/syntax.hpp"

using namespace cocenter;

namespace {

IwahoriWeyl make(const std::string& g, const std::string& lattice = "sc") {
  return IwahoriWeyl(RootDatum::build(GroupDescriptor::parse(g, lattice)));
}

std::string production_of(const IwahoriWeyl& g, const std::string& text) {
  try {
    parse_element(g, text);
  } catch (const ParseError& e) {
    return e.production();
  }
  return "";
}

}  // namespace

TEST_CASE("element round trips") {
  auto g = make("A2");
  CHECK(format_element(g, parse_element(g, "E")) == "t[0,0]");
  CHECK(format_element(g, parse_element(g, "t[0,0]*e")) == "t[0,0]");
  CHECK(format_element(g, parse_element(g, " t[ 1, -1 ] * s1 ")) == "t[1,-1]*s1");
  CHECK(parse_element(g, "S1") == g.simple(1));
  CHECK(parse_element(g, "S0") == g.simple(0));
  for (const auto& w : g.ball(5, g.default_labels())) {
    CHECK(parse_element(g, format_element(g, w)) == w);
    CHECK(parse_element(g, format_affine_word(g, w)) == w);
    auto canon = format_element(g, w);
    CHECK(format_element(g, parse_element(g, canon)) == canon);
  }
  auto ad = make("A2", "adjoint");
  for (const auto& w : ad.ball(3, ad.default_labels())) {
    CHECK(parse_element(ad, format_affine_word(ad, w)) == w);
    CHECK(parse_element(ad, format_element(ad, w)) == w);
  }
  auto gl = make("GL2");
  Element w = parse_element(gl, "E#1");
  CHECK(gl.length(w) == 0);
  CHECK(format_affine_word(gl, w) == "E#1");
}

TEST_CASE("GL5 element text") {
  auto g = make("GL5");
  Element w = parse_element(g, "t[1,1,0,1,0]*s2*s1*s4");
  CHECK(format_coweight(newton_point(g, w), 5) == "(2/3,2/3,2/3,1/2,1/2)");
  // fractional entries are accepted when integral
  CHECK(parse_element(g, "t[2/2,1,0,1,0]*s2*s1*s4") == w);
}

TEST_CASE("element errors") {
  auto g = make("A2");
  CHECK(production_of(g, "") == "elem");
  CHECK(production_of(g, "x") == "elem");
  CHECK(production_of(g, "t[1,0") == "elem");
  CHECK(production_of(g, "t[1,a]") == "rational");
  CHECK(production_of(g, "t[1,0]*x1") == "finite_word");
  CHECK(production_of(g, "S1*T0") == "affine_word");
  CHECK(production_of(g, "S1#") == "omega_label");
  CHECK_THROWS_AS(parse_element(g, "t[1,0,0]"), InputError);
  CHECK_THROWS_AS(parse_element(g, "t[1/2,0]"), InputError);
  CHECK_THROWS_AS(parse_element(g, "t[0,0]*s3"), InputError);
  CHECK_THROWS_AS(parse_element(g, "S3"), InputError);
  CHECK_THROWS_AS(parse_element(g, "S1#1"), InputError);
}

TEST_CASE("Hecke expressions") {
  auto g = make("A1");
  auto f = parse_hecke(g, "(q^2-1)*T[S1*S0*S1] + q*T[t[1]] - T[E]");
  CHECK(f.size() == 3);
  CHECK(f.at(g.from_word({1, 0, 1}, {})) == Poly::parse("q^2-1"));
  CHECK(f.at(g.translation(IntVec{1})) == Poly::q(1));
  CHECK(f.at(g.identity()) == Poly(-1));
  CHECK(parse_hecke(g, "q^2-1*T[E]") == hecke_basis(g.identity(), Poly::parse("q^2-1")));
  CHECK(parse_hecke(g, "T[S0]-T[S0]").empty());
  CHECK(parse_hecke(g, format_hecke(g, f)) == f);
  CHECK_THROWS_AS(parse_hecke(g, "q*S0"), ParseError);
  CHECK_THROWS_AS(parse_hecke(g, "qT[S0]"), ParseError);
  CHECK_THROWS_AS(parse_hecke(g, "T[S0"), ParseError);
  CHECK_THROWS_AS(parse_hecke(g, ""), ParseError);
}

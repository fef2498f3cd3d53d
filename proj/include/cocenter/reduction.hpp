#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cocenter/affine_weyl.hpp"
#include "cocenter/newton.hpp"

namespace cocenter {

enum class StepKind { ConjEqual, ConjDown, LeftMult };
enum class ConjMove { Down, Equal, Up };

std::string step_kind_name(StepKind k);  // "conj-equal", "conj-down", "left-mult"

struct Step {
  int s = 0;
  StepKind kind = StepKind::ConjEqual;
  Element result;
  int length = 0;
};

struct ReductionPath {
  Element start;
  std::vector<Step> steps;
  Element end;
};

struct StandardTriple {
  Element x;
  std::vector<int> K;
  Element u;
  Element y;  // u * x, a member of the equal-length class of the input
};

// Classifies s w s against w.
std::pair<ConjMove, Element> conj_step(const IwahoriWeyl& g, const Element& w, int s);

// Closure of w under length-preserving simple conjugations, sorted. Throws ResourceError past `cap`.
std::vector<Element> equal_class(const IwahoriWeyl& g, const Element& w, std::size_t cap = 200000);

// No element of the equal class admits a length-decreasing simple conjugation.
bool is_min_in_class(const IwahoriWeyl& g, const Element& w);

// First element of the equal class (breadth-first, s in index order) with a length-decreasing
// simple conjugation, and the conj-equal steps leading to it.
struct DownMove {
  std::vector<Step> equal_steps;
  Element at;
  int s = 0;
};
std::optional<DownMove> first_down_move(const IwahoriWeyl& g, const Element& w);

ReductionPath reduce_to_min(const IwahoriWeyl& g, const Element& w);

// Replays the steps from path.start; true when every step matches its recorded kind and result.
bool replay(const IwahoriWeyl& g, const ReductionPath& path);

// |{x in W_a : l(x) <= l(w)}|
std::size_t path_bound(const IwahoriWeyl& g, const Element& w);

StandardTriple standard_triple(const IwahoriWeyl& g, const Element& w_min);
// Checks every invariant of a standard triple; returns an empty string or the first failure.
std::string check_triple(const IwahoriWeyl& g, const StandardTriple& t);

// Elements of minimal length in the conjugacy class of a minimal w (same length, exact conjugacy test).
std::vector<Element> minimal_conjugates(const IwahoriWeyl& g, const Element& w_min);

// Order used for canonical keys: lexicographically least affine word, then Omega label.
bool word_less(const IwahoriWeyl& g, const Element& a, const Element& b);

// Least element of minimal_conjugates under word_less.
Element canonical_key(const IwahoriWeyl& g, const Element& w_min);

}  // namespace cocenter

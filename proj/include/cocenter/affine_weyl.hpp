#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cocenter/lattice.hpp"
#include "cocenter/root_datum.hpp"

namespace cocenter {

// w = t^translation * finite, with `finite` a W0 index.
struct Element {
  IntVec translation{};
  int finite = 0;

  bool operator==(const Element&) const = default;
  auto operator<=>(const Element&) const = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    return IntVecHash{}(e.translation) * 31u + static_cast<std::size_t>(e.finite);
  }
};

// The affine function x -> <root, x> + level.
struct AffineRoot {
  int root = -1;
  std::int64_t level = 0;

  bool operator==(const AffineRoot&) const = default;
};

// Result of splitting w = s_{i1} ... s_{ik} * omega.
struct OmegaSplit {
  std::vector<int> word;  // simple reflection indices, leftmost first
  LatticeQuotient::Label omega;
  Element omega_element;
};

// The extended affine Weyl group X_* x| W_M of a root subsystem Phi_M (the full Phi for W~ itself).
//
// Simple reflections are numbered with the affine ones first: S0 .. S(c-1) for the c irreducible
// components (one each), then the finite simple reflections in root order. For a simple G this is
// S0 = t^{theta^vee} s_theta followed by S1..Sr = s_1..s_r.
class IwahoriWeyl {
 public:
  explicit IwahoriWeyl(std::shared_ptr<const RootDatum> datum);
  // `system` must be a closed, symmetric root subsystem (e.g. Phi_{v,0}).
  IwahoriWeyl(std::shared_ptr<const RootDatum> datum, std::vector<int> system);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
  int dim() const { return datum_->dim(); }
  bool is_full() const { return full_; }

  const std::vector<int>& system_roots() const { return system_; }
  const std::vector<int>& positive_system() const { return positive_; }
  const std::vector<int>& simple_system() const { return simple_; }
  const std::vector<int>& finite_elements() const { return finite_elements_; }  // W_M, sorted
  bool in_system(int root) const { return in_system_[root]; }

  Element identity() const { return Element{}; }
  Element translation(const IntVec& lambda) const { return Element{lambda, 0}; }
  Element finite(int u) const { return Element{IntVec{}, u}; }
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& w) const;
  Element power(const Element& w, std::int64_t n) const;
  Element conjugate(const Element& x, const Element& w) const;  // x w x^{-1}
  bool is_member(const Element& w) const;

  AffineRoot act(const Element& w, const AffineRoot& a) const;
  bool positive(const AffineRoot& a) const;

  // Number of positive affine roots (vector part in the system) sent to negative ones. Closed form.
  int length(const Element& w) const;
  // The same set, enumerated over the finite level window.
  std::vector<AffineRoot> inversions(const Element& w) const;
  // max over system roots of |<alpha, lambda>| + 1
  std::int64_t level_window(const Element& w) const;

  int num_simple() const { return static_cast<int>(simple_elements_.size()); }
  const Element& simple(int i) const { return simple_elements_.at(i); }
  const AffineRoot& simple_root(int i) const { return simple_roots_.at(i); }
  // Simple reflection indices of each irreducible affine component.
  const std::vector<std::vector<int>>& components() const { return components_; }
  // W_K finite iff K leaves out at least one node of every component.
  bool parabolic_is_finite(const std::vector<int>& subset) const;
  // Order of the subgroup generated by the given simple reflections; ResourceError beyond cap.
  std::size_t parabolic_size(const std::vector<int>& subset, std::size_t cap = 100000) const;
  // Index i with simple(i) == s, or -1.
  int simple_index(const Element& s) const;

  const LatticeQuotient& omega_group() const { return quotient_; }
  LatticeQuotient::Label kappa(const Element& w) const { return quotient_.label(w.translation); }
  Element omega_rep(const LatticeQuotient::Label& label) const;
  OmegaSplit wa_omega_split(const Element& w) const;
  Element from_word(const std::vector<int>& word, const LatticeQuotient::Label& omega) const;

  // Ball of radius L in the given Omega cosets, sorted by (length, element). Cap applies.
  std::vector<Element> ball(int max_length, const std::vector<LatticeQuotient::Label>& labels) const;
  // Elements of exact length L in one coset (no cap, bounded by `element_limit`).
  std::vector<Element> sphere(int length, const LatticeQuotient::Label& label) const;
  // |{x in W_a : l(x) <= L}|.
  std::size_t wa_ball_count(int max_length) const;
  // Default Omega labels for exhaustive work: all of them when Omega is finite, else the trivial one.
  std::vector<LatticeQuotient::Label> default_labels() const;

  int ball_cap() const { return cap_; }
  void set_ball_cap(int cap) { cap_ = cap; }
  static int default_cap(int semisimple_rank);
  void set_element_limit(std::size_t n) { element_limit_ = n; }

  // True iff x w x^{-1} = w' for some x in this group.
  bool are_conjugate(const Element& w, const Element& w2) const;

  std::string describe() const;

 private:
  void setup();
  const std::vector<std::vector<Element>>& levels(const LatticeQuotient::Label& label, int max_length) const;

  std::shared_ptr<const RootDatum> datum_;
  bool full_ = true;
  std::vector<int> system_;
  std::vector<bool> in_system_;
  std::vector<int> positive_;
  std::vector<int> simple_;
  std::vector<int> finite_elements_;
  std::vector<bool> finite_member_;
  std::vector<Element> simple_elements_;
  std::vector<AffineRoot> simple_roots_;
  std::vector<std::vector<int>> components_;
  LatticeQuotient quotient_;
  int cap_ = 12;
  std::size_t element_limit_ = 4000000;

  mutable std::mutex cache_mutex_;
  mutable std::map<LatticeQuotient::Label, std::vector<std::vector<Element>>> level_cache_;
  mutable std::unordered_map<int, SmithForm> snf_cache_;
};

// Checks w(e4 - e3) = e5 - e2 - 1 for w = t^{(1,1,0,1,0)}(132)(45) in GL5; throws InvariantViolation.
void check_affine_anchor();

}  // namespace cocenter

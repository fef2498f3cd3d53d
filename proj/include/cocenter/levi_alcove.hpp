#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cocenter/affine_weyl.hpp"
#include "cocenter/newton.hpp"

namespace cocenter {

// W~(M_v) = X_* x| W_M with its own length, Omega_M and pi_M.
class LeviWeylGroup {
 public:
  LeviWeylGroup(std::shared_ptr<const RootDatum> datum, const RatVec& v);

  const LeviDatum& levi() const { return levi_; }
  const IwahoriWeyl& group() const { return *group_; }
  const RatVec& v() const { return levi_.v; }
  bool is_member(const Element& w) const { return group_->is_member(w); }
  int length(const Element& w) const { return group_->length(w); }
  NewtonIndex pi(const Element& w) const { return newton_index(*group_, w); }

  // "G", "T", "L{1,3}" (1-based simple indices of G when standard), or "L<...>" listing M's simple roots.
  std::string label() const;
  // max |W_K| over K in the simple reflections of W~(M) with W_K finite.
  std::size_t max_finite_parabolic() const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  LeviDatum levi_;
  std::shared_ptr<IwahoriWeyl> group_;
};

// (tau, v) over M to (tau', v_bar) over G.
NewtonIndex newton_index_map(const IwahoriWeyl& g, const LeviWeylGroup& m, const NewtonIndex& idx);

// pi(w) in G equals the image of pi_M(w).
bool m_in_g_stratum_check(const IwahoriWeyl& g, const LeviWeylGroup& m, const Element& w);

// M' = M_{u0 v} together with the induced map on Newton indices.
struct ConjugateLevi {
  std::shared_ptr<LeviWeylGroup> levi;
  int u0 = 0;
  NewtonIndex map(const LeviWeylGroup& from, const NewtonIndex& idx) const;
};
ConjugateLevi conjugate_levi(std::shared_ptr<const RootDatum> datum, int u0, const LeviWeylGroup& m);

// p(w) v = v, and w^{-1}(b) positive implies b positive for affine roots b over Phi_{v,+}
// inside the flip window (scaled by window_factor for oracle runs).
bool is_v_alcove(const IwahoriWeyl& g, const Element& w, const RatVec& v, int window_factor = 1);

struct PositivityCertificate {
  std::int64_t exponent = 0;
  std::int64_t exponent_bound = 0;
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  std::int64_t i_frak = 0;
  bool first_power_positive = false;
  // For exponent 1 failures: a root beta in +-Phi_{v,+} whose level shift under w is too small.
  int witness_root = -1;
  std::int64_t witness_shift = 0;
};

// Level-shift condition for w^i = t^mu u': every affine root over Phi_{v,+} moves up by at least one
// filtration step, every one over -Phi_{v,+} moves down under the inverse.
bool strictly_positive(const IwahoriWeyl& g, const LeviDatum& levi, const Element& w, int* witness = nullptr,
                       std::int64_t* shift = nullptr);

PositivityCertificate positivity_exponent(const IwahoriWeyl& g, const LeviWeylGroup& m, const Element& w);

}  // namespace cocenter

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cocenter/affine_weyl.hpp"
#include "cocenter/levi_alcove.hpp"
#include "cocenter/newton.hpp"
#include "cocenter/poly.hpp"

namespace cocenter {

// sum of c_w T_w; no zero coefficients are stored.
using HeckeElement = std::map<Element, Poly>;

void hecke_accumulate(HeckeElement& f, const Element& w, const Poly& c);
HeckeElement hecke_basis(const Element& w, const Poly& c = Poly(1));
HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_sub(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_scale(const HeckeElement& a, const Poly& c);

// f * T_s for a simple reflection index s.
HeckeElement hecke_mul_simple(const IwahoriWeyl& g, const HeckeElement& f, int s);
HeckeElement hecke_mul(const IwahoriWeyl& g, const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_commutator(const IwahoriWeyl& g, const HeckeElement& a, const HeckeElement& b);

// q -> value, as an element of the group algebra.
std::map<Element, std::int64_t> specialize(const HeckeElement& f, std::int64_t value);

using Components = std::map<NewtonIndex, HeckeElement>;

struct CocenterNormalForm {
  HeckeElement terms;  // supported on canonical minimal representatives
  Components components;
};

Components component_split(const IwahoriWeyl& g, const HeckeElement& f);
HeckeElement newton_component(const CocenterNormalForm& nf, const NewtonIndex& idx);

// Normal forms in the cocenter H / [H, H]. The per-element memo is shared across threads.
class Cocenter {
 public:
  explicit Cocenter(const IwahoriWeyl& g) : g_(g) {}

  const IwahoriWeyl& group() const { return g_; }

  // Canonical representative of the class of a minimal element.
  Element canonical(const Element& w_min) const;
  // Normal form of T_w, following the deterministic reduction path.
  HeckeElement reduce_basis(const Element& w) const;
  HeckeElement reduce(const HeckeElement& f) const;
  CocenterNormalForm normal_form(const HeckeElement& f) const;

  // Same rewriting with the equal-class element and the down move drawn at random; no memo.
  HeckeElement reduce_random(const HeckeElement& f, std::uint64_t seed) const;

  std::vector<std::pair<Element, HeckeElement>> snapshot() const;
  void preload(const std::vector<std::pair<Element, HeckeElement>>& entries) const;
  std::size_t memo_size() const;

 private:
  const IwahoriWeyl& g_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Element, HeckeElement, ElementHash> memo_;
  mutable std::unordered_map<Element, Element, ElementHash> canonical_memo_;
};

// Sends T^M_w (w M-minimal, pi_M(w) = nu_M) to the normal form of T_w in the cocenter of G.
CocenterNormalForm induce(const Cocenter& g, const LeviWeylGroup& m, const HeckeElement& f, const NewtonIndex& nu_m);

struct RigidRow {
  NewtonIndex index;
  std::string levi;
  std::size_t count = 0;
  bool central = false;
  bool covered = false;
  std::string method;  // "alcove" when every class has an alcove witness, else "span"
};

std::vector<RigidRow> rigid_decomposition(const Cocenter& g, int max_length);

// Exact rank over Q(q) by fraction-free elimination.
std::size_t hecke_rank(const std::vector<HeckeElement>& rows);
bool in_span(const std::vector<HeckeElement>& rows, const HeckeElement& v);

// Refutation oracle: rank of the canonical minimal representatives of the ball modulo the commutators
// [T_x, T_s], [T_x, T_omega] whose support stays inside the ball. Returns the number of lost dimensions
// (nonzero means the normal form cannot be well defined).
std::size_t truncated_commutator_defect(const Cocenter& g, int max_length);

}  // namespace cocenter

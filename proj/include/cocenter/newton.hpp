#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cocenter/affine_weyl.hpp"

namespace cocenter {

// pi(w) = (kappa(w), nu_bar_w).
struct NewtonIndex {
  LatticeQuotient::Label omega;
  RatVec nu_bar{};

  bool operator==(const NewtonIndex&) const = default;
  bool operator<(const NewtonIndex& o) const {
    if (omega != o.omega) return omega < o.omega;
    return nu_bar < o.nu_bar;
  }
};

// nu_w = (1/n) sum_{i<n} u^i(lambda), n the order of u.
RatVec newton_point(const IwahoriWeyl& g, const Element& w);

// Dominant representative with respect to the simple roots of g's root system: (v_bar, u), u(v) = v_bar.
std::pair<RatVec, int> dominant_in(const IwahoriWeyl& g, const RatVec& v);
bool is_dominant_in(const IwahoriWeyl& g, const RatVec& v);

NewtonIndex newton_index(const IwahoriWeyl& g, const Element& w);

// <v, 2 rho> for the positive roots of g's system.
Rational pair_two_rho(const IwahoriWeyl& g, const RatVec& v);

// l(w) = <nu_bar_w, 2 rho>.
bool is_straight(const IwahoriWeyl& g, const Element& w);
// l(w^n) = n l(w) for n = 1 .. order(u) * den(nu_w); the defining condition.
bool is_straight_by_powers(const IwahoriWeyl& g, const Element& w);

using Strata = std::map<NewtonIndex, std::vector<Element>>;
Strata strata(const IwahoriWeyl& g, int max_length, const std::vector<LatticeQuotient::Label>& labels);

std::string format_coweight(const RatVec& v, int dim);  // "(2/3,2/3,1/2)"
std::string format_index(const NewtonIndex& idx, int dim);  // "kappa=0 nu=(1)"

}  // namespace cocenter

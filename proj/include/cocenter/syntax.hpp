#pragma once

#include <string>

#include "cocenter/affine_weyl.hpp"
#include "cocenter/hecke.hpp"

namespace cocenter {

// elem := "t[" rational ("," rational)* "]" ("*" finite_word)? | affine_word ("#" omega_label)?
// finite_word := "s" index ("*s" index)* | "e"      (1-based finite simple reflections)
// affine_word := "S" index ("*S" index)* | "E"      (S0 affine, then the finite ones)
// Malformed text raises ParseError naming the production; well-formed text that does not denote an
// element of g (wrong rank, fractional translation, index out of range) raises InputError.
Element parse_element(const IwahoriWeyl& g, const std::string& text);

// Canonical form: "t[l1,...,ln]" followed by the lex-least reduced finite word, if any.
std::string format_element(const IwahoriWeyl& g, const Element& w);
// "S1*S0#label" with the reduced affine word of the W_a part ("E" when empty); "#label" only when nontrivial.
std::string format_affine_word(const IwahoriWeyl& g, const Element& w);

// "(2/3,2/3,1/2)", with or without the parentheses; ParseError("coweight"), InputError on a rank mismatch.
RatVec parse_coweight(int dim, const std::string& text);

// expr := term (("+"|"-") term)*, term := poly "*" "T[" elem "]"; the coefficient may be
// parenthesized, and a bare "T[...]" has coefficient 1.
HeckeElement parse_hecke(const IwahoriWeyl& g, const std::string& text);
std::string format_hecke(const IwahoriWeyl& g, const HeckeElement& f);

}  // namespace cocenter

#pragma once

#include <map>
#include <set>
#include <string>

namespace pathobj {

// Every anchor each suite can report. A full run of a suite reports exactly its set.
inline const std::map<std::string, std::set<std::string>>& suite_anchors() {
  static const std::map<std::string, std::set<std::string>> table{
      {"axioms",
       {"contraction/identity", "contraction/naturality", "contraction/path-source", "contraction/path-target",
        "contraction/source", "contraction/strength", "contraction/target", "functor/composition",
        "functor/identity", "internal-category/associativity", "internal-category/source-of-composite",
        "internal-category/source-of-identity", "internal-category/target-of-composite",
        "internal-category/target-of-identity", "internal-category/unit-at-source",
        "internal-category/unit-at-target", "involution/anti-composition", "involution/identity",
        "involution/source", "involution/target", "involution/twice", "naturality/composition",
        "naturality/identity", "naturality/involution", "naturality/source", "naturality/target",
        "pullback-preservation/pairing", "pullback-preservation/uniqueness", "simplicial/structure-maps",
        "strength/components", "strength/composition", "strength/identity", "strength/involution",
        "strength/naturality", "strength/retraction", "strength/source", "strength/target"}},
      {"wfs",
       {"factorization/composite", "fill/functorial", "fill/identity", "fill/lambda", "fill/rho",
        "homotopy/composite-endpoints", "homotopy/involution", "homotopy/reverse-endpoints",
        "homotopy/unit-at-source", "homotopy/unit-at-target", "homotopy/whisker-coherence",
        "homotopy/whisker-identity", "l-structure/homotopy-source", "l-structure/homotopy-target",
        "l-structure/morphism", "l-structure/retraction", "l-structure/trivial-on-domain",
        "lift/lower-triangle", "lift/natural-in-l", "lift/natural-in-r", "lift/upper-triangle",
        "path-lift/covers", "path-lift/endpoints", "path-lift/identity", "r-structure/lift",
        "r-structure/morphism", "r-structure/unit"}},
      {"id-model",
       {"diagonal/factorization", "diagonal/homotopy-source", "diagonal/homotopy-target",
        "diagonal/retraction", "diagonal/trivial-on-domain", "fiberwise/composite-constant",
        "fiberwise/identity-constant", "fiberwise/membership", "frobenius/homotopy-source",
        "frobenius/homotopy-target", "frobenius/retraction", "frobenius/trivial-on-domain", "id-lift/lift",
        "id-lift/unit", "j/computation", "j/section", "precart/identity", "precart/source", "precart/target",
        "strong-j/computation", "strong-j/section", "transport/endpoints", "transport/identity",
        "transport/refl"}},
      {"stability",
       {"stability/iso-endpoints", "stability/iso-inverse", "stability/iso-section", "stability/j-square",
        "stability/r-structure", "stability/refl-square", "subst/r-lift", "subst/r-morphism", "subst/r-unit"}}
  };
  return table;
}

}  // namespace pathobj

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latql/lattice.hpp"

namespace latql {

/// A user-asserted pair (X, Y) of objects and attributes.
struct PresumedConcept {
  ObjectSet objects;        // X
  AttributeSet attributes;  // Y
};

enum class PresumedKind { FormalConcept, Preconcept, Degenerated };

std::string to_string(PresumedKind kind);

struct ApproxResult {
  PresumedKind kind = PresumedKind::Degenerated;
  Concept lower;          // L(c) = (X'', X')
  Concept upper;          // H(c) = (Y', Y'')
  ConceptRegion interval; // [L(c), H(c)]; empty when degenerated
};

/// Formal concept iff X' = Y and Y' = X; preconcept iff X × Y ⊆ I; otherwise
/// degenerated. Throws DomainError if X or Y is not over the lattice's context.
PresumedKind classify(const ConceptLattice& lat, const PresumedConcept& c);

/// The smallest concept whose extent contains X.
const Concept& lower_approx(const ConceptLattice& lat, const PresumedConcept& c);
/// The largest concept whose intent contains Y.
const Concept& upper_approx(const ConceptLattice& lat, const PresumedConcept& c);

ApproxResult approx_interval(const ConceptLattice& lat, const PresumedConcept& c);

/// π_c(A, B) = ((B ∩ Y)', B ∩ Y).
std::pair<ObjectSet, AttributeSet> projective_repr(const ConceptLattice& lat,
                                                   const PresumedConcept& c, const Concept& target);
/// ξ_c(A, B) = (A ∩ X, (A ∩ X)').
std::pair<ObjectSet, AttributeSet> selective_repr(const ConceptLattice& lat,
                                                  const PresumedConcept& c, const Concept& target);

/// Concepts whose projective representation keeps all of Y, i.e. int ⊇ Y.
std::vector<ConceptId> projective_preimage(const ConceptLattice& lat, const PresumedConcept& c);
/// Concepts whose selective representation keeps all of X, i.e. ext ⊇ X.
std::vector<ConceptId> selective_preimage(const ConceptLattice& lat, const PresumedConcept& c);

}  // namespace latql

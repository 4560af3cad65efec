#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latql/context.hpp"
#include "latql/lattice.hpp"

namespace latql {

// ---------------------------------------------------------------------------
// Selection conditions

/// Boolean condition over attributes. An atom names a binary attribute, or
/// `attribute=value` for a nominally scaled many-valued attribute (resolved as
/// the scaled attribute "attribute:value"). Negation wraps atoms only.
struct Condition {
  enum class Kind { Atom, Not, And, Or };

  Kind kind = Kind::Atom;
  std::string attribute;
  std::optional<std::string> value;
  std::vector<Condition> children;

  static Condition atom(std::string attribute, std::optional<std::string> value = std::nullopt);
  static Condition negate(Condition atom);
  static Condition all_of(std::vector<Condition> children);
  static Condition any_of(std::vector<Condition> children);

  /// The attribute name an atom refers to in a binary context.
  std::string target() const { return value ? attribute + ":" + *value : attribute; }

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// Throws DomainError for a negated compound or an empty connective, and
/// UnknownNameError for atoms missing from ctx.
void validate(const Condition& cond, const FormalContext& ctx);

/// The definition-level reading of a condition on one concept: an atom holds
/// when its attribute is in the intent, a negated atom when the extent avoids
/// the atom's objects.
bool condition_holds(const FormalContext& ctx, const Condition& cond, const Concept& c);

enum class SelectionShape { OrderIdeal, SubHierarchy };

std::string to_string(SelectionShape shape);

struct SelectionResult {
  struct NegatedAtom {
    std::string attribute;
    bool complement_closed = false;  // is G \ a' closed?
  };

  std::vector<ConceptId> members;  // ascending
  SelectionShape shape = SelectionShape::OrderIdeal;
  std::vector<NegatedAtom> negations;

  ConceptRegion region() const {
    return {shape == SelectionShape::OrderIdeal ? RegionShape::OrderIdeal : RegionShape::Arbitrary,
            members};
  }
};

/// Select(B, φ). Atom: ↓μa. Conjunction of atoms: ↓⋀μa_j. Disjunction of
/// atoms: ⋃↓μa_j. Negated atom: {c | ext(c) ∩ a' = ∅}, flagged order-ideal iff
/// G \ a' is closed. Other shapes are evaluated concept by concept.
SelectionResult select(const ConceptLattice& lat, const Condition& cond);

/// ((G \ A)'', (G \ A)').
const Concept& weak_negation(const ConceptLattice& lat, const Concept& c);
/// ((M \ B)', (M \ B)'').
const Concept& weak_opposition(const ConceptLattice& lat, const Concept& c);

// ---------------------------------------------------------------------------
// Projection

struct ProjectionResult {
  AttributeSet kept;          // Y, in the parent's attribute universe
  ConceptLattice projected;   // B(G, Y, I ∩ (G × Y))
  std::vector<ConceptId> representative;  // parent id -> greatest Y-equivalent parent id
  std::vector<ConceptId> image;           // parent id -> projected id
  std::vector<ConceptId> representatives; // R_Y, ascending
};

/// Project(B, Y). Throws DomainError when Y is not over the lattice's
/// attributes and InvariantError if the two routes to B(G, Y, J) disagree.
ProjectionResult project(const ConceptLattice& lat, const AttributeSet& kept);

// ---------------------------------------------------------------------------
// Combining contexts

/// K1 | K2. Objects must match name for name. Attribute names present on
/// both sides are suffixed "#1" / "#2". Throws AlignmentError.
FormalContext apposition(const FormalContext& left, const FormalContext& right);

/// K1 over K2, the dual of apposition on objects.
FormalContext subposition(const FormalContext& top, const FormalContext& bottom);

/// (G1 ∪ G2, M1 ∪ M2, I1 ∪ I2) for contexts that agree on their common
/// rectangle; cells outside both contexts are empty. Throws ConflictError
/// naming the first disagreeing cell.
FormalContext glue(const FormalContext& first, const FormalContext& second);

/// r ⋈ s over R ∪ (S \ R). Tuples are joinable when they agree (as partial
/// maps) on R ∩ S. The result keeps r's key when s's key lies inside R,
/// s's key when r's key lies inside S, and the union of both otherwise.
Relation natural_join(const Relation& r, const Relation& s);

// ---------------------------------------------------------------------------
// Sub-contexts

struct RestrictionReport {
  struct Entry {
    ConceptId parent = 0;
    ObjectSet extent;     // A ∩ H, indexed in the sub-context
    AttributeSet intent;  // B ∩ N, indexed in the sub-context
    std::optional<ConceptId> sub_concept;  // set iff the pair is a concept of the sub-context
  };

  ConceptLattice sub;
  std::vector<Entry> entries;  // one per parent concept, by id
  bool compatible = false;
  // Checked only when compatible.
  std::optional<bool> surjective;
  std::optional<bool> preserves_joins;
  std::optional<bool> preserves_meets;
};

/// Π_H : (A, B) -> (A ∩ H, B ∩ N), with the compatibility verdict and, when
/// compatible, the homomorphism checks.
RestrictionReport restrict_concepts(const ConceptLattice& lat, const ObjectSet& objects,
                                    const AttributeSet& attributes);

/// (φ1 u, φ2 u) = ((U'', U'), (V', V'')) computed in the parent, for a concept
/// u = (U, V) of a sub-context lattice. Throws DomainError when `sub` is not
/// built on a sub-context of `parent` or u is foreign to it.
std::pair<Concept, Concept> embed_subconcept(const ConceptLattice& parent, const ConceptLattice& sub,
                                             const Concept& u);

}  // namespace latql

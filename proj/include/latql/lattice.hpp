#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latql/context.hpp"

namespace latql {

using ConceptId = std::size_t;

struct ConceptTag {};
using ConceptSet = IndexSet<ConceptTag>;

/// A formal concept (A, B) with A = B' and B = A'. `id` indexes the owning
/// lattice; ids follow the lectic order of intents, so id 0 is the top.
struct Concept {
  ConceptId id = 0;
  ObjectSet extent;
  AttributeSet intent;

  friend bool operator==(const Concept& a, const Concept& b) {
    return a.id == b.id && a.extent == b.extent && a.intent == b.intent;
  }
};

/// B(K) with its order, covering relation, and an extent index. Immutable
/// once built.
class ConceptLattice {
 public:
  ConceptLattice() = default;
  explicit ConceptLattice(FormalContext ctx);

  const FormalContext& context() const { return context_; }
  std::size_t size() const { return concepts_.size(); }
  const std::vector<Concept>& concepts() const { return concepts_; }
  const Concept& concept_at(ConceptId id) const { return concepts_.at(id); }

  ConceptId top() const { return top_; }
  ConceptId bottom() const { return bottom_; }

  /// c <= d iff ext(c) ⊆ ext(d).
  bool leq(ConceptId c, ConceptId d) const { return up_[c].contains(d); }

  /// Concepts d with c <= d (including c), as a set over concept ids.
  const ConceptSet& up_set(ConceptId c) const { return up_[c]; }
  const ConceptSet& down_set(ConceptId c) const { return down_[c]; }

  /// Upper covers of c: d > c with nothing strictly between.
  const std::vector<ConceptId>& upper_covers(ConceptId c) const { return upper_covers_[c]; }
  const std::vector<ConceptId>& lower_covers(ConceptId c) const { return lower_covers_[c]; }
  /// All covering pairs (lower, upper), sorted.
  std::vector<std::pair<ConceptId, ConceptId>> cover_edges() const;

  /// Concept whose extent is exactly `extent`, if any.
  std::optional<ConceptId> find_by_extent(const ObjectSet& extent) const;
  std::optional<ConceptId> find_by_intent(const AttributeSet& intent) const;

  /// The concept generated by an arbitrary object (attribute) set: (A'', A')
  /// or (B', B'').
  const Concept& concept_of_objects(const ObjectSet& objects) const;
  const Concept& concept_of_attributes(const AttributeSet& attributes) const;

  /// True iff c is, value for value, the stored concept with its id.
  bool owns(const Concept& c) const {
    return c.id < concepts_.size() && concepts_[c.id] == c;
  }
  /// Throws DomainError unless owns(c).
  void require_owned(const Concept& c) const;

 private:
  FormalContext context_;
  std::vector<Concept> concepts_;
  std::vector<ConceptSet> up_;
  std::vector<ConceptSet> down_;
  std::vector<std::vector<ConceptId>> upper_covers_;
  std::vector<std::vector<ConceptId>> lower_covers_;
  std::map<ObjectSet, ConceptId> by_extent_;
  ConceptId top_ = 0;
  ConceptId bottom_ = 0;
};

/// All intents of ctx in lectic order (NextClosure).
std::vector<AttributeSet> lectic_intents(const FormalContext& ctx);

ConceptLattice build_lattice(const FormalContext& ctx);

/// Closed sets by exhaustive enumeration of the smaller side's powerset.
/// Used by the CLI's --oracle cross-check; throws DomainError when both sides
/// exceed 24 elements.
std::vector<std::pair<ObjectSet, AttributeSet>> naive_concepts(const FormalContext& ctx);

/// Compares a lattice against naive_concepts; returns human-readable
/// differences (empty when they agree).
std::vector<std::string> diff_against_naive(const ConceptLattice& lat);

/// γg = (g'', g'). Throws UnknownNameError for an unknown object.
const Concept& gamma(const ConceptLattice& lat, const std::string& object);
const Concept& gamma(const ConceptLattice& lat, std::size_t object);
/// μm = (m', m'').
const Concept& mu(const ConceptLattice& lat, const std::string& attribute);
const Concept& mu(const ConceptLattice& lat, std::size_t attribute);

/// ((A ∪ C)'', B ∩ D). Throws DomainError when an argument is foreign.
const Concept& join_concepts(const ConceptLattice& lat, const Concept& c, const Concept& d);
/// (A ∩ C, (B ∪ D)'').
const Concept& meet_concepts(const ConceptLattice& lat, const Concept& c, const Concept& d);

enum class RegionShape { OrderIdeal, OrderFilter, LatticeIdeal, Interval, Arbitrary };

std::string to_string(RegionShape shape);

/// A set of concepts of one lattice, tagged with how it was generated.
struct ConceptRegion {
  RegionShape shape = RegionShape::Arbitrary;
  std::vector<ConceptId> members;  // ascending

  bool contains(ConceptId id) const;
  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
};

/// ↓X: every concept below some seed.
ConceptRegion order_ideal(const ConceptLattice& lat, const std::vector<Concept>& seeds);
/// ↑X.
ConceptRegion order_filter(const ConceptLattice& lat, const std::vector<Concept>& seeds);
/// Smallest down-closed, join-closed set containing the seeds. Empty for no seeds.
ConceptRegion lattice_ideal(const ConceptLattice& lat, const std::vector<Concept>& seeds);
/// [lo, hi] = ↑lo ∩ ↓hi; empty when lo is not below hi.
ConceptRegion interval(const ConceptLattice& lat, const Concept& lo, const Concept& hi);

bool is_down_closed(const ConceptLattice& lat, const std::vector<ConceptId>& members);
bool is_up_closed(const ConceptLattice& lat, const std::vector<ConceptId>& members);

}  // namespace latql

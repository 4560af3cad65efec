#include "latql/approximation.hpp"

#include "latql/error.hpp"

namespace latql {

std::string to_string(PresumedKind kind) {
  switch (kind) {
    case PresumedKind::FormalConcept: return "formal-concept";
    case PresumedKind::Preconcept: return "preconcept";
    case PresumedKind::Degenerated: return "degenerated";
  }
  return "degenerated";
}

namespace {

void check(const ConceptLattice& lat, const PresumedConcept& c) {
  const auto& ctx = lat.context();
  if (c.objects.universe() != ctx.num_objects() || c.attributes.universe() != ctx.num_attributes())
    throw DomainError("presumed concept is not over the lattice's context");
}

}  // namespace

PresumedKind classify(const ConceptLattice& lat, const PresumedConcept& c) {
  check(lat, c);
  const auto& ctx = lat.context();
  const AttributeSet common = derive_objects(ctx, c.objects);
  if (common == c.attributes && derive_attributes(ctx, c.attributes) == c.objects)
    return PresumedKind::FormalConcept;
  if (c.attributes.is_subset_of(common)) return PresumedKind::Preconcept;
  return PresumedKind::Degenerated;
}

const Concept& lower_approx(const ConceptLattice& lat, const PresumedConcept& c) {
  check(lat, c);
  return lat.concept_of_objects(c.objects);
}

const Concept& upper_approx(const ConceptLattice& lat, const PresumedConcept& c) {
  check(lat, c);
  return lat.concept_of_attributes(c.attributes);
}

ApproxResult approx_interval(const ConceptLattice& lat, const PresumedConcept& c) {
  ApproxResult r;
  r.kind = classify(lat, c);
  r.lower = lower_approx(lat, c);
  r.upper = upper_approx(lat, c);
  r.interval = interval(lat, r.lower, r.upper);
  if ((r.kind == PresumedKind::Degenerated) != r.interval.empty())
    throw InvariantError("interval emptiness disagrees with the classification");
  return r;
}

std::pair<ObjectSet, AttributeSet> projective_repr(const ConceptLattice& lat,
                                                   const PresumedConcept& c, const Concept& target) {
  check(lat, c);
  lat.require_owned(target);
  AttributeSet kept = target.intent & c.attributes;
  return {derive_attributes(lat.context(), kept), std::move(kept)};
}

std::pair<ObjectSet, AttributeSet> selective_repr(const ConceptLattice& lat,
                                                  const PresumedConcept& c, const Concept& target) {
  check(lat, c);
  lat.require_owned(target);
  ObjectSet kept = target.extent & c.objects;
  AttributeSet common = derive_objects(lat.context(), kept);
  return {std::move(kept), std::move(common)};
}

std::vector<ConceptId> projective_preimage(const ConceptLattice& lat, const PresumedConcept& c) {
  std::vector<ConceptId> out;
  for (const auto& d : lat.concepts())
    if (projective_repr(lat, c, d).second == c.attributes) out.push_back(d.id);
  return out;
}

std::vector<ConceptId> selective_preimage(const ConceptLattice& lat, const PresumedConcept& c) {
  std::vector<ConceptId> out;
  for (const auto& d : lat.concepts())
    if (selective_repr(lat, c, d).first == c.objects) out.push_back(d.id);
  return out;
}

}  // namespace latql

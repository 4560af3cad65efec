#include "latql/lattice.hpp"

#include <algorithm>
#include <set>

#include "latql/error.hpp"

namespace latql {

std::vector<AttributeSet> lectic_intents(const FormalContext& ctx) {
  const std::size_t n = ctx.num_attributes();
  std::vector<AttributeSet> out;
  AttributeSet current = closure_attributes(ctx, AttributeSet(n));
  out.push_back(current);

  // NextClosure: the lectically next closed set after `current`.
  for (;;) {
    AttributeSet probe = current;
    bool advanced = false;
    for (std::size_t k = n; k-- > 0;) {
      if (probe.contains(k)) {
        probe.erase(k);
        continue;
      }
      AttributeSet candidate = probe;
      candidate.insert(k);
      candidate = closure_attributes(ctx, candidate);
      // Canonicity: the closure adds nothing below k.
      if ((candidate - probe).prefix(k).empty()) {
        current = std::move(candidate);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    out.push_back(current);
  }
  return out;
}

ConceptLattice::ConceptLattice(FormalContext ctx) : context_(std::move(ctx)) {
  auto intents = lectic_intents(context_);
  concepts_.reserve(intents.size());
  for (std::size_t i = 0; i < intents.size(); ++i) {
    ObjectSet extent = derive_attributes(context_, intents[i]);
    by_extent_.emplace(extent, i);
    concepts_.push_back(Concept{i, std::move(extent), std::move(intents[i])});
  }

  const std::size_t n = concepts_.size();
  up_.assign(n, ConceptSet(n));
  down_.assign(n, ConceptSet(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d)
      if (concepts_[c].extent.is_subset_of(concepts_[d].extent)) {
        up_[c].insert(d);
        down_[d].insert(c);
      }

  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  for (std::size_t c = 0; c < n; ++c) {
    ConceptSet strict = up_[c];
    strict.erase(c);
    ConceptSet covers = strict;
    for (auto e : strict.indices()) {
      ConceptSet above_e = up_[e];
      above_e.erase(e);
      covers -= above_e;
    }
    for (auto d : covers.indices()) {
      upper_covers_[c].push_back(d);
      lower_covers_[d].push_back(c);
    }
  }
  for (auto& v : lower_covers_) std::sort(v.begin(), v.end());

  for (std::size_t c = 0; c < n; ++c) {
    if (concepts_[c].extent.count() == context_.num_objects() && up_[c].count() == 1) top_ = c;
    if (down_[c].count() == 1) bottom_ = c;
  }
}

std::vector<std::pair<ConceptId, ConceptId>> ConceptLattice::cover_edges() const {
  std::vector<std::pair<ConceptId, ConceptId>> out;
  for (ConceptId c = 0; c < concepts_.size(); ++c)
    for (auto d : upper_covers_[c]) out.emplace_back(c, d);
  return out;
}

std::optional<ConceptId> ConceptLattice::find_by_extent(const ObjectSet& extent) const {
  if (auto it = by_extent_.find(extent); it != by_extent_.end()) return it->second;
  return std::nullopt;
}

std::optional<ConceptId> ConceptLattice::find_by_intent(const AttributeSet& intent) const {
  if (intent.universe() != context_.num_attributes()) return std::nullopt;
  auto id = find_by_extent(derive_attributes(context_, intent));
  if (id && concepts_[*id].intent == intent) return id;
  return std::nullopt;
}

const Concept& ConceptLattice::concept_of_objects(const ObjectSet& objects) const {
  auto id = find_by_extent(closure_objects(context_, objects));
  if (!id) throw InvariantError("closed object set missing from the lattice");
  return concepts_[*id];
}

const Concept& ConceptLattice::concept_of_attributes(const AttributeSet& attributes) const {
  auto id = find_by_extent(derive_attributes(context_, attributes));
  if (!id) throw InvariantError("closed object set missing from the lattice");
  return concepts_[*id];
}

void ConceptLattice::require_owned(const Concept& c) const {
  if (!owns(c))
    throw DomainError("concept #" + std::to_string(c.id) + " does not belong to this lattice");
}

ConceptLattice build_lattice(const FormalContext& ctx) { return ConceptLattice(ctx); }

std::vector<std::pair<ObjectSet, AttributeSet>> naive_concepts(const FormalContext& ctx) {
  constexpr std::size_t kLimit = 24;
  const std::size_t g = ctx.num_objects(), m = ctx.num_attributes();
  std::set<std::pair<ObjectSet, AttributeSet>> found;
  if (m <= kLimit && (m <= g || g > kLimit)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      AttributeSet b(m);
      for (std::size_t j = 0; j < m; ++j)
        if (mask >> j & 1) b.insert(j);
      ObjectSet ext = derive_attributes(ctx, b);
      found.emplace(ext, derive_objects(ctx, ext));
    }
  } else if (g <= kLimit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
      ObjectSet a(g);
      for (std::size_t i = 0; i < g; ++i)
        if (mask >> i & 1) a.insert(i);
      AttributeSet in = derive_objects(ctx, a);
      found.emplace(derive_attributes(ctx, in), in);
    }
  } else {
    throw DomainError("context too large for exhaustive enumeration");
  }
  return {found.begin(), found.end()};
}

std::vector<std::string> diff_against_naive(const ConceptLattice& lat) {
  const auto& ctx = lat.context();
  std::vector<std::string> out;
  auto describe = [&](const ObjectSet& a, const AttributeSet& b) {
    std::string s = "({";
    auto on = ctx.object_names(a);
    for (std::size_t i = 0; i < on.size(); ++i) s += (i ? ", " : "") + on[i];
    s += "}, {";
    auto an = ctx.attribute_names(b);
    for (std::size_t i = 0; i < an.size(); ++i) s += (i ? ", " : "") + an[i];
    return s + "})";
  };
  std::set<std::pair<ObjectSet, AttributeSet>> built;
  for (const auto& c : lat.concepts()) built.emplace(c.extent, c.intent);
  if (built.size() != lat.size()) out.push_back("lattice contains duplicate concepts");
  std::set<std::pair<ObjectSet, AttributeSet>> naive;
  for (auto& p : naive_concepts(ctx)) naive.insert(std::move(p));
  for (const auto& p : naive)
    if (!built.count(p)) out.push_back("missing concept " + describe(p.first, p.second));
  for (const auto& p : built)
    if (!naive.count(p)) out.push_back("spurious concept " + describe(p.first, p.second));
  for (const auto& c : lat.concepts())
    for (const auto& d : lat.concepts())
      if (lat.leq(c.id, d.id) != c.extent.is_subset_of(d.extent))
        out.push_back("order disagrees with extent inclusion at #" + std::to_string(c.id) +
                      " <= #" + std::to_string(d.id));
  return out;
}

const Concept& gamma(const ConceptLattice& lat, std::size_t object) {
  const auto& ctx = lat.context();
  if (object >= ctx.num_objects()) throw DomainError("object index out of range");
  return lat.concept_of_objects(ObjectSet::of(ctx.num_objects(), {object}));
}

const Concept& gamma(const ConceptLattice& lat, const std::string& object) {
  return gamma(lat, lat.context().resolve_object(object));
}

const Concept& mu(const ConceptLattice& lat, std::size_t attribute) {
  const auto& ctx = lat.context();
  if (attribute >= ctx.num_attributes()) throw DomainError("attribute index out of range");
  return lat.concept_of_attributes(AttributeSet::of(ctx.num_attributes(), {attribute}));
}

const Concept& mu(const ConceptLattice& lat, const std::string& attribute) {
  return mu(lat, lat.context().resolve_attribute(attribute));
}

const Concept& join_concepts(const ConceptLattice& lat, const Concept& c, const Concept& d) {
  lat.require_owned(c);
  lat.require_owned(d);
  const Concept& j = lat.concept_of_objects(c.extent | d.extent);
  if (j.intent != (c.intent & d.intent)) throw InvariantError("join intent is not B ∩ D");
  if (!lat.leq(c.id, j.id) || !lat.leq(d.id, j.id))
    throw InvariantError("join is not an upper bound");
  return j;
}

const Concept& meet_concepts(const ConceptLattice& lat, const Concept& c, const Concept& d) {
  lat.require_owned(c);
  lat.require_owned(d);
  const Concept& m = lat.concept_of_attributes(c.intent | d.intent);
  if (m.extent != (c.extent & d.extent)) throw InvariantError("meet extent is not A ∩ C");
  if (!lat.leq(m.id, c.id) || !lat.leq(m.id, d.id))
    throw InvariantError("meet is not a lower bound");
  return m;
}

std::string to_string(RegionShape shape) {
  switch (shape) {
    case RegionShape::OrderIdeal: return "order-ideal";
    case RegionShape::OrderFilter: return "order-filter";
    case RegionShape::LatticeIdeal: return "lattice-ideal";
    case RegionShape::Interval: return "interval";
    case RegionShape::Arbitrary: return "arbitrary";
  }
  return "arbitrary";
}

bool ConceptRegion::contains(ConceptId id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

namespace {

ConceptRegion region_of(RegionShape shape, const ConceptSet& set) {
  return ConceptRegion{shape, set.indices()};
}

}  // namespace

ConceptRegion order_ideal(const ConceptLattice& lat, const std::vector<Concept>& seeds) {
  ConceptSet s(lat.size());
  for (const auto& c : seeds) {
    lat.require_owned(c);
    s |= lat.down_set(c.id);
  }
  return region_of(RegionShape::OrderIdeal, s);
}

ConceptRegion order_filter(const ConceptLattice& lat, const std::vector<Concept>& seeds) {
  ConceptSet s(lat.size());
  for (const auto& c : seeds) {
    lat.require_owned(c);
    s |= lat.up_set(c.id);
  }
  return region_of(RegionShape::OrderFilter, s);
}

ConceptRegion lattice_ideal(const ConceptLattice& lat, const std::vector<Concept>& seeds) {
  ConceptSet s(lat.size());
  for (const auto& c : seeds) {
    lat.require_owned(c);
    s |= lat.down_set(c.id);
  }
  for (bool changed = true; changed;) {
    changed = false;
    const auto members = s.indices();
    for (std::size_t i = 0; i < members.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Concept& joined =
            join_concepts(lat, lat.concept_at(members[i]), lat.concept_at(members[j]));
        if (!s.contains(joined.id)) {
          s |= lat.down_set(joined.id);
          changed = true;
          break;
        }
      }
  }
  return region_of(RegionShape::LatticeIdeal, s);
}

ConceptRegion interval(const ConceptLattice& lat, const Concept& lo, const Concept& hi) {
  lat.require_owned(lo);
  lat.require_owned(hi);
  return region_of(RegionShape::Interval, lat.up_set(lo.id) & lat.down_set(hi.id));
}

bool is_down_closed(const ConceptLattice& lat, const std::vector<ConceptId>& members) {
  ConceptSet s = ConceptSet::of(lat.size(), members);
  for (auto c : members)
    if (!lat.down_set(c).is_subset_of(s)) return false;
  return true;
}

bool is_up_closed(const ConceptLattice& lat, const std::vector<ConceptId>& members) {
  ConceptSet s = ConceptSet::of(lat.size(), members);
  for (auto c : members)
    if (!lat.up_set(c).is_subset_of(s)) return false;
  return true;
}

}  // namespace latql

#include "latql/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latql/error.hpp"

namespace latql {

Condition Condition::atom(std::string attribute, std::optional<std::string> value) {
  Condition c;
  c.kind = Kind::Atom;
  c.attribute = std::move(attribute);
  c.value = std::move(value);
  return c;
}

Condition Condition::negate(Condition atom) {
  Condition c;
  c.kind = Kind::Not;
  c.children.push_back(std::move(atom));
  return c;
}

Condition Condition::all_of(std::vector<Condition> children) {
  Condition c;
  c.kind = Kind::And;
  c.children = std::move(children);
  return c;
}

Condition Condition::any_of(std::vector<Condition> children) {
  Condition c;
  c.kind = Kind::Or;
  c.children = std::move(children);
  return c;
}

void validate(const Condition& cond, const FormalContext& ctx) {
  switch (cond.kind) {
    case Condition::Kind::Atom:
      ctx.resolve_attribute(cond.target());
      return;
    case Condition::Kind::Not:
      if (cond.children.size() != 1 || cond.children[0].kind != Condition::Kind::Atom)
        throw DomainError("negation applies to atoms only");
      validate(cond.children[0], ctx);
      return;
    case Condition::Kind::And:
    case Condition::Kind::Or:
      if (cond.children.empty()) throw DomainError("empty connective in condition");
      for (const auto& c : cond.children) validate(c, ctx);
      return;
  }
}

bool condition_holds(const FormalContext& ctx, const Condition& cond, const Concept& c) {
  switch (cond.kind) {
    case Condition::Kind::Atom:
      return c.intent.contains(ctx.resolve_attribute(cond.target()));
    case Condition::Kind::Not: {
      const auto m = ctx.resolve_attribute(cond.children.at(0).target());
      return !c.extent.intersects(ctx.column(m));
    }
    case Condition::Kind::And:
      return std::all_of(cond.children.begin(), cond.children.end(),
                         [&](const Condition& k) { return condition_holds(ctx, k, c); });
    case Condition::Kind::Or:
      return std::any_of(cond.children.begin(), cond.children.end(),
                         [&](const Condition& k) { return condition_holds(ctx, k, c); });
  }
  return false;
}

std::string to_string(SelectionShape shape) {
  return shape == SelectionShape::OrderIdeal ? "order-ideal" : "sub-hierarchy";
}

namespace {

bool all_atoms(const Condition& cond) {
  return std::all_of(cond.children.begin(), cond.children.end(),
                     [](const Condition& c) { return c.kind == Condition::Kind::Atom; });
}

void collect_negations(const FormalContext& ctx, const Condition& cond,
                       std::vector<SelectionResult::NegatedAtom>& out) {
  if (cond.kind == Condition::Kind::Not) {
    const auto& atom = cond.children[0];
    const auto m = ctx.resolve_attribute(atom.target());
    const ObjectSet rest = ctx.column(m).complement();
    out.push_back({atom.target(), closure_objects(ctx, rest) == rest});
    return;
  }
  for (const auto& c : cond.children) collect_negations(ctx, c, out);
}

}  // namespace

SelectionResult select(const ConceptLattice& lat, const Condition& cond) {
  const auto& ctx = lat.context();
  validate(cond, ctx);

  SelectionResult result;
  collect_negations(ctx, cond, result.negations);

  using Kind = Condition::Kind;
  if (cond.kind == Kind::Atom) {
    result.members = order_ideal(lat, {mu(lat, cond.target())}).members;
  } else if (cond.kind == Kind::And && all_atoms(cond)) {
    const Concept* meet = &mu(lat, cond.children[0].target());
    for (std::size_t i = 1; i < cond.children.size(); ++i)
      meet = &meet_concepts(lat, *meet, mu(lat, cond.children[i].target()));
    result.members = order_ideal(lat, {*meet}).members;
  } else if (cond.kind == Kind::Or && all_atoms(cond)) {
    std::vector<Concept> seeds;
    for (const auto& a : cond.children) seeds.push_back(mu(lat, a.target()));
    result.members = order_ideal(lat, seeds).members;
  } else {
    for (const auto& c : lat.concepts())
      if (condition_holds(ctx, cond, c)) result.members.push_back(c.id);
  }

  if (cond.kind == Kind::Not) {
    result.shape = result.negations[0].complement_closed ? SelectionShape::OrderIdeal
                                                         : SelectionShape::SubHierarchy;
  } else if (!result.negations.empty() || cond.kind == Kind::And || cond.kind == Kind::Or) {
    result.shape = is_down_closed(lat, result.members) ? SelectionShape::OrderIdeal
                                                       : SelectionShape::SubHierarchy;
  }
  return result;
}

const Concept& weak_negation(const ConceptLattice& lat, const Concept& c) {
  lat.require_owned(c);
  return lat.concept_of_objects(c.extent.complement());
}

const Concept& weak_opposition(const ConceptLattice& lat, const Concept& c) {
  lat.require_owned(c);
  return lat.concept_of_attributes(c.intent.complement());
}

// ---------------------------------------------------------------------------

ProjectionResult project(const ConceptLattice& lat, const AttributeSet& kept) {
  const auto& ctx = lat.context();
  if (kept.universe() != ctx.num_attributes())
    throw DomainError("projection attributes do not belong to the lattice's context");

  ProjectionResult result;
  result.kept = kept;
  result.projected = build_lattice(subcontext(ctx, ctx.all_objects(), kept));
  const auto& sub = result.projected;

  result.representative.resize(lat.size());
  result.image.resize(lat.size());
  std::set<ConceptId> reps;
  std::set<ConceptId> hit;
  for (const auto& c : lat.concepts()) {
    const AttributeSet restricted = c.intent & kept;
    // The greatest concept whose intent meets Y in exactly `restricted`.
    const Concept& rep = lat.concept_of_attributes(restricted);
    if ((rep.intent & kept) != restricted || !lat.leq(c.id, rep.id))
      throw InvariantError("Y-class of concept #" + std::to_string(c.id) + " has no greatest element");
    result.representative[c.id] = rep.id;
    reps.insert(rep.id);

    const AttributeSet sub_intent = compress(restricted, kept);
    auto id = sub.find_by_intent(sub_intent);
    if (!id || sub.concept_at(*id).extent != derive_attributes(ctx, restricted))
      throw InvariantError("projected pair of concept #" + std::to_string(c.id) +
                           " is not a concept of the projected context");
    result.image[c.id] = *id;
    hit.insert(*id);
  }
  if (hit.size() != sub.size())
    throw InvariantError("representatives do not cover the projected lattice");
  result.representatives.assign(reps.begin(), reps.end());
  return result;
}

// ---------------------------------------------------------------------------

namespace {

std::pair<std::vector<std::string>, std::vector<std::string>> disjoint_names(
    const std::vector<std::string>& left, const std::vector<std::string>& right) {
  const std::set<std::string> l(left.begin(), left.end());
  const std::set<std::string> r(right.begin(), right.end());
  auto rename = [](const std::vector<std::string>& names, const std::set<std::string>& other,
                   const char* tag) {
    std::vector<std::string> out;
    for (const auto& n : names) out.push_back(other.count(n) ? n + tag : n);
    return out;
  };
  return {rename(left, r, "#1"), rename(right, l, "#2")};
}

}  // namespace

FormalContext apposition(const FormalContext& left, const FormalContext& right) {
  if (left.objects() != right.objects())
    throw AlignmentError("apposition needs identical object lists");
  auto [lnames, rnames] = disjoint_names(left.attributes(), right.attributes());
  std::vector<std::string> names = lnames;
  names.insert(names.end(), rnames.begin(), rnames.end());

  const std::size_t offset = left.num_attributes();
  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < left.num_objects(); ++g) {
    AttributeSet row(names.size());
    for (auto m : left.row(g).indices()) row.insert(m);
    for (auto m : right.row(g).indices()) row.insert(offset + m);
    rows.push_back(std::move(row));
  }
  return FormalContext(left.objects(), std::move(names), std::move(rows), left.name());
}

FormalContext subposition(const FormalContext& top, const FormalContext& bottom) {
  if (top.attributes() != bottom.attributes())
    throw AlignmentError("subposition needs identical attribute lists");
  auto [tnames, bnames] = disjoint_names(top.objects(), bottom.objects());
  std::vector<std::string> names = tnames;
  names.insert(names.end(), bnames.begin(), bnames.end());

  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < top.num_objects(); ++g) rows.push_back(top.row(g));
  for (std::size_t g = 0; g < bottom.num_objects(); ++g) rows.push_back(bottom.row(g));
  return FormalContext(std::move(names), top.attributes(), std::move(rows), top.name());
}

FormalContext glue(const FormalContext& first, const FormalContext& second) {
  for (std::size_t g = 0; g < first.num_objects(); ++g) {
    auto g2 = second.find_object(first.objects()[g]);
    if (!g2) continue;
    for (std::size_t m = 0; m < first.num_attributes(); ++m) {
      auto m2 = second.find_attribute(first.attributes()[m]);
      if (m2 && first.incident(g, m) != second.incident(*g2, *m2))
        throw ConflictError("contexts disagree at (" + first.objects()[g] + ", " +
                            first.attributes()[m] + ")");
    }
  }

  std::vector<std::string> objects = first.objects();
  for (const auto& g : second.objects())
    if (!first.find_object(g)) objects.push_back(g);
  std::vector<std::string> attributes = first.attributes();
  for (const auto& m : second.attributes())
    if (!first.find_attribute(m)) attributes.push_back(m);

  std::vector<AttributeSet> rows(objects.size(), AttributeSet(attributes.size()));
  for (std::size_t g = 0; g < first.num_objects(); ++g)
    for (auto m : first.row(g).indices()) rows[g].insert(m);
  for (std::size_t g2 = 0; g2 < second.num_objects(); ++g2) {
    const auto g = std::find(objects.begin(), objects.end(), second.objects()[g2]) - objects.begin();
    for (auto m2 : second.row(g2).indices()) {
      const auto m =
          std::find(attributes.begin(), attributes.end(), second.attributes()[m2]) - attributes.begin();
      rows[g].insert(static_cast<std::size_t>(m));
    }
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows), first.name());
}

Relation natural_join(const Relation& r, const Relation& s) {
  r.validate();
  s.validate();

  Relation out;
  out.scheme = r.scheme;
  std::vector<std::pair<std::size_t, std::size_t>> shared;  // (col in r, col in s)
  std::vector<std::size_t> s_only;
  for (std::size_t c = 0; c < s.scheme.size(); ++c) {
    if (auto rc = r.column(s.scheme[c])) {
      shared.emplace_back(*rc, c);
    } else {
      s_only.push_back(c);
      out.scheme.push_back(s.scheme[c]);
    }
  }

  auto inside = [](const std::vector<std::string>& key, const std::vector<std::string>& scheme) {
    return std::all_of(key.begin(), key.end(), [&](const std::string& k) {
      return std::find(scheme.begin(), scheme.end(), k) != scheme.end();
    });
  };
  if (inside(s.key, r.scheme)) {
    out.key = r.key;
  } else if (inside(r.key, s.scheme)) {
    out.key = s.key;
  } else {
    out.key = r.key;
    for (const auto& k : s.key)
      if (std::find(out.key.begin(), out.key.end(), k) == out.key.end()) out.key.push_back(k);
  }

  for (const auto& t1 : r.tuples)
    for (const auto& t2 : s.tuples) {
      bool joinable = std::all_of(shared.begin(), shared.end(), [&](const auto& p) {
        return t1[p.first] == t2[p.second];
      });
      if (!joinable) continue;
      auto t = t1;
      for (auto c : s_only) t.push_back(t2[c]);
      out.tuples.push_back(std::move(t));
    }
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------

RestrictionReport restrict_concepts(const ConceptLattice& lat, const ObjectSet& objects,
                                    const AttributeSet& attributes) {
  const auto& ctx = lat.context();
  RestrictionReport report;
  report.sub = build_lattice(subcontext(ctx, objects, attributes));
  const auto& sub = report.sub;

  report.compatible = true;
  for (const auto& c : lat.concepts()) {
    RestrictionReport::Entry e;
    e.parent = c.id;
    e.extent = compress(c.extent, objects);
    e.intent = compress(c.intent, attributes);
    if (auto id = sub.find_by_extent(e.extent); id && sub.concept_at(*id).intent == e.intent)
      e.sub_concept = id;
    report.compatible = report.compatible && e.sub_concept.has_value();
    report.entries.push_back(std::move(e));
  }
  if (!report.compatible) return report;

  std::vector<bool> hit(sub.size(), false);
  for (const auto& e : report.entries) hit[*e.sub_concept] = true;
  report.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

  auto image = [&](ConceptId id) { return *report.entries[id].sub_concept; };
  bool joins = image(lat.top()) == sub.top();
  bool meets = image(lat.bottom()) == sub.bottom();
  for (const auto& c : lat.concepts())
    for (const auto& d : lat.concepts()) {
      if (d.id < c.id) continue;
      const auto& ic = sub.concept_at(image(c.id));
      const auto& id = sub.concept_at(image(d.id));
      joins = joins && image(join_concepts(lat, c, d).id) == join_concepts(sub, ic, id).id;
      meets = meets && image(meet_concepts(lat, c, d).id) == meet_concepts(sub, ic, id).id;
    }
  report.preserves_joins = joins;
  report.preserves_meets = meets;
  return report;
}

std::pair<Concept, Concept> embed_subconcept(const ConceptLattice& parent, const ConceptLattice& sub,
                                             const Concept& u) {
  sub.require_owned(u);
  const auto& big = parent.context();
  const auto& small = sub.context();

  std::vector<std::size_t> object_map, attribute_map;
  for (const auto& g : small.objects()) {
    auto i = big.find_object(g);
    if (!i) throw DomainError("object '" + g + "' is not in the parent context");
    object_map.push_back(*i);
  }
  for (const auto& m : small.attributes()) {
    auto j = big.find_attribute(m);
    if (!j) throw DomainError("attribute '" + m + "' is not in the parent context");
    attribute_map.push_back(*j);
  }
  for (std::size_t g = 0; g < object_map.size(); ++g)
    for (std::size_t m = 0; m < attribute_map.size(); ++m)
      if (small.incident(g, m) != big.incident(object_map[g], attribute_map[m]))
        throw DomainError("lattice is not built on a sub-context of the parent");

  ObjectSet extent(big.num_objects());
  for (auto g : u.extent.indices()) extent.insert(object_map[g]);
  AttributeSet intent(big.num_attributes());
  for (auto m : u.intent.indices()) intent.insert(attribute_map[m]);

  const Concept& lower = parent.concept_of_objects(extent);
  const Concept& upper = parent.concept_of_attributes(intent);
  if (!parent.leq(lower.id, upper.id)) throw InvariantError("φ1 u is not below φ2 u");
  return {lower, upper};
}

}  // namespace latql

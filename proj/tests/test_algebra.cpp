#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "latql/algebra.hpp"
#include "latql/error.hpp"
#include "oracle.hpp"

using namespace latql;

namespace {

using Names = std::vector<std::string>;

std::set<ConceptId> as_set(const std::vector<ConceptId>& v) { return {v.begin(), v.end()}; }

// Reads a condition straight off masks: atoms test the intent, a negated atom
// tests that the extent avoids the attribute's column.
bool holds(const oracle::Table& t, const FormalContext& ctx, const Condition& c,
           const oracle::Pair& p) {
  switch (c.kind) {
    case Condition::Kind::Atom:
      return oracle::has(p.intent, static_cast<int>(*ctx.find_attribute(c.target())));
    case Condition::Kind::Not: {
      const int m = static_cast<int>(*ctx.find_attribute(c.children[0].target()));
      return (p.extent & oracle::down(t, oracle::Mask{1} << m)) == 0;
    }
    case Condition::Kind::And:
      for (const auto& k : c.children)
        if (!holds(t, ctx, k, p)) return false;
      return true;
    case Condition::Kind::Or:
      for (const auto& k : c.children)
        if (holds(t, ctx, k, p)) return true;
      return false;
  }
  return false;
}

std::set<oracle::Pair> select_oracle(const FormalContext& ctx, const Condition& c) {
  const auto t = oracle::table_of(ctx);
  std::set<oracle::Pair> out;
  for (const auto& p : oracle::concepts(t))
    if (holds(t, ctx, c, p)) out.insert(p);
  return out;
}

Condition random_condition(std::mt19937& rng, const FormalContext& ctx, int depth) {
  std::uniform_int_distribution<std::size_t> attr(0, ctx.num_attributes() - 1);
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 1);
  switch (kind(rng)) {
    case 0: return Condition::atom(ctx.attributes()[attr(rng)]);
    case 1: return Condition::negate(Condition::atom(ctx.attributes()[attr(rng)]));
    default: {
      std::vector<Condition> kids;
      const int n = 2 + static_cast<int>(rng() % 2);
      for (int i = 0; i < n; ++i) kids.push_back(random_condition(rng, ctx, depth - 1));
      return rng() % 2 ? Condition::all_of(std::move(kids)) : Condition::any_of(std::move(kids));
    }
  }
}

}  // namespace

TEST(Select, Kf6Examples) {
  const ConceptLattice lat(fixtures::kf6());
  const auto m4 = select(lat, Condition::atom("m4"));
  EXPECT_EQ(as_set(m4.members), (std::set<ConceptId>{mu(lat, "m4").id, gamma(lat, "g1").id,
                                                      gamma(lat, "g2").id, lat.bottom()}));
  EXPECT_EQ(m4.shape, SelectionShape::OrderIdeal);

  const auto both = select(lat, Condition::all_of({Condition::atom("m3"), Condition::atom("m4")}));
  EXPECT_EQ(as_set(both.members), (std::set<ConceptId>{gamma(lat, "g1").id, lat.bottom()}));

  const auto neg = select(lat, Condition::negate(Condition::atom("m4")));
  EXPECT_EQ(as_set(neg.members), (std::set<ConceptId>{gamma(lat, "g3").id, lat.bottom()}));
  ASSERT_EQ(neg.negations.size(), 1u);
  EXPECT_TRUE(neg.negations[0].complement_closed);
  EXPECT_EQ(neg.shape, SelectionShape::OrderIdeal);
}

TEST(Select, NegationFlagFollowsComplementClosure) {
  // G \ a' = {g1, g2} here, whose closure adds g3.
  const FormalContext k({"g1", "g2", "g3"}, {"a", "b"},
                        std::vector<std::vector<bool>>{{false, true}, {false, true}, {true, true}});
  const ConceptLattice lat(k);
  const auto sel = select(lat, Condition::negate(Condition::atom("a")));
  ASSERT_EQ(sel.negations.size(), 1u);
  EXPECT_FALSE(sel.negations[0].complement_closed);
  EXPECT_EQ(sel.shape, SelectionShape::SubHierarchy);
  EXPECT_EQ(oracle::pairs_of(lat, sel.members), select_oracle(k, Condition::negate(Condition::atom("a"))));
}

TEST(Select, StarAllianceCanadaAndAsiaPacific) {
  const ConceptLattice lat(fixtures::star_alliance());
  const auto& ctx = lat.context();
  const auto sel =
      select(lat, Condition::all_of({Condition::atom("Canada"), Condition::atom("AsiaPacific")}));
  const auto flying_both = derive_attributes(ctx, ctx.attribute_set({"Canada", "Asia Pacific"}));
  EXPECT_EQ(ctx.object_names(flying_both),
            (Names{"Air Canada", "The Austrian Airlines Group", "Lufthansa", "Singapore Airlines",
                   "United Airlines"}));
  const auto top_of_class = lat.find_by_extent(flying_both);
  ASSERT_TRUE(top_of_class);
  EXPECT_EQ(sel.members, order_ideal(lat, {lat.concept_at(*top_of_class)}).members);
}

TEST(Select, ClosedFormsAgreeWithDefinition) {
  std::mt19937 rng(17);
  for (int round = 0; round < 60; ++round) {
    const auto k = oracle::random_context(rng, 6, 5, 0.5);
    const ConceptLattice lat(k);
    const auto a = Condition::atom(k.attributes()[rng() % 5]);
    const auto b = Condition::atom(k.attributes()[rng() % 5]);
    const auto c = Condition::atom(k.attributes()[rng() % 5]);
    for (const auto& cond : {a, Condition::all_of({a, b, c}), Condition::any_of({a, b}),
                             Condition::negate(a), random_condition(rng, k, 2)}) {
      const auto sel = select(lat, cond);
      EXPECT_EQ(oracle::pairs_of(lat, sel.members), select_oracle(k, cond));
      if (sel.shape == SelectionShape::OrderIdeal) EXPECT_TRUE(is_down_closed(lat, sel.members));
    }
    EXPECT_EQ(select(lat, a).members, order_ideal(lat, {mu(lat, a.attribute)}).members);
  }
}

TEST(Select, RejectsMalformedConditions) {
  const ConceptLattice lat(fixtures::kf6());
  EXPECT_THROW(select(lat, Condition::atom("m9")), UnknownNameError);
  Condition bad = Condition::negate(Condition::atom("m1"));
  bad.children[0] = Condition::all_of({Condition::atom("m1"), Condition::atom("m2")});
  EXPECT_THROW(select(lat, bad), DomainError);
}

TEST(WeakNegation, Kf6) {
  const ConceptLattice lat(fixtures::kf6());
  EXPECT_EQ(weak_negation(lat, gamma(lat, "g3")), mu(lat, "m4"));
  EXPECT_EQ(weak_negation(lat, lat.concept_at(lat.bottom())).id, lat.top());
  EXPECT_EQ(weak_negation(lat, lat.concept_at(lat.top())).id, lat.bottom());
}

TEST(WeakOpposition, Kf6) {
  const ConceptLattice lat(fixtures::kf6());
  EXPECT_EQ(weak_opposition(lat, lat.concept_at(lat.top())).id, lat.bottom());
  const auto& opp = weak_opposition(lat, mu(lat, "m4"));
  EXPECT_TRUE(opp.extent.empty());
  EXPECT_TRUE(opp.intent.is_full());
  EXPECT_EQ(weak_opposition(lat, lat.concept_at(lat.bottom())).id, lat.top());
}

// ---------------------------------------------------------------------------

TEST(Project, StarAllianceFourClasses) {
  const ConceptLattice lat(fixtures::star_alliance());
  const auto proj = project(lat, lat.context().attribute_set({"Canada", "AsiaPacific"}));
  EXPECT_EQ(proj.projected.size(), 4u);
  EXPECT_EQ(proj.representatives.size(), 4u);
}

TEST(Project, Kf6OntoM3M4) {
  const ConceptLattice lat(fixtures::kf6());
  const auto proj = project(lat, lat.context().attribute_set({"m3", "m4"}));
  const auto& p = proj.projected;
  ASSERT_EQ(p.size(), 4u);
  const auto& pc = p.context();
  std::set<std::pair<Names, Names>> got;
  for (const auto& c : p.concepts()) got.insert({pc.object_names(c.extent), pc.attribute_names(c.intent)});
  EXPECT_EQ(got, (std::set<std::pair<Names, Names>>{{{"g1", "g2", "g3"}, {}},
                                                     {{"g1", "g3"}, {"m3"}},
                                                     {{"g1", "g2"}, {"m4"}},
                                                     {{"g1"}, {"m3", "m4"}}}));
}

TEST(Project, FullProjectionIsIdentity) {
  const ConceptLattice lat(fixtures::fig4());
  const auto proj = project(lat, lat.context().all_attributes());
  EXPECT_EQ(oracle::pairs_of(proj.projected), oracle::pairs_of(lat));
  for (const auto& c : lat.concepts()) EXPECT_EQ(proj.representative[c.id], c.id);
}

TEST(Project, EquivalenceClassesMatchOracle) {
  std::mt19937 rng(23);
  for (int round = 0; round < 40; ++round) {
    const auto k = oracle::random_context(rng, 6, 6, 0.5);
    const ConceptLattice lat(k);
    const auto t = oracle::table_of(k);
    const oracle::Mask y = static_cast<oracle::Mask>(rng() % 64);
    AttributeSet kept(6);
    for (int m : oracle::bits(y, 6)) kept.insert(m);
    const auto proj = project(lat, kept);
    // Projected lattice against brute force over the column-restricted table.
    const auto sub = oracle::columns(t, oracle::bits(y, 6));
    EXPECT_EQ(oracle::pairs_of(proj.projected), oracle::concepts(sub));
    // Representatives: greatest member of each class of intents agreeing on Y.
    for (const auto& c : lat.concepts()) {
      const auto& r = lat.concept_at(proj.representative[c.id]);
      EXPECT_EQ(oracle::mask_of(r.intent) & y, oracle::mask_of(c.intent) & y);
      for (const auto& d : lat.concepts())
        if ((oracle::mask_of(d.intent) & y) == (oracle::mask_of(c.intent) & y))
          EXPECT_TRUE(oracle::subset(oracle::mask_of(d.extent), oracle::mask_of(r.extent)));
    }
  }
}

// ---------------------------------------------------------------------------

TEST(Apposition, SplitAndRejoin) {
  const auto k = fixtures::kf6();
  const auto left = subcontext(k, k.all_objects(), k.attribute_set({"m1", "m2"}));
  const auto right = subcontext(k, k.all_objects(), k.attribute_set({"m3", "m4"}));
  EXPECT_EQ(apposition(left, right), k);
  const FormalContext nothing(k.objects(), {}, std::vector<AttributeSet>(3, AttributeSet(0)));
  EXPECT_EQ(apposition(k, nothing), k);
}

TEST(Apposition, ExtentsArePairwiseIntersections) {
  const auto k = fixtures::kf6();
  const auto left = subcontext(k, k.all_objects(), k.attribute_set({"m1", "m2"}));
  const auto right = subcontext(k, k.all_objects(), k.attribute_set({"m3", "m4"}));
  std::set<oracle::Mask> expected;
  for (const auto& a : oracle::concepts(oracle::table_of(left)))
    for (const auto& b : oracle::concepts(oracle::table_of(right))) expected.insert(a.extent & b.extent);
  std::set<oracle::Mask> got;
  const ConceptLattice lat(apposition(left, right));
  for (const auto& c : lat.concepts())
    got.insert(oracle::mask_of(c.extent));
  EXPECT_EQ(got, expected);
}

TEST(Apposition, MismatchAndCollisions) {
  const auto k = fixtures::kf6();
  const auto rows = subcontext(k, k.object_set({"g1", "g2"}), k.all_attributes());
  EXPECT_THROW(apposition(k, rows), AlignmentError);
  const auto twice = apposition(k, k);
  EXPECT_EQ(twice.attributes(), (Names{"m1#1", "m2#1", "m3#1", "m4#1", "m1#2", "m2#2", "m3#2", "m4#2"}));
}

TEST(Subposition, SplitAndRestack) {
  const auto k = fixtures::kf6();
  const auto top = subcontext(k, k.object_set({"g1", "g2"}), k.all_attributes());
  const auto bottom = subcontext(k, k.object_set({"g3"}), k.all_attributes());
  const auto stacked = subposition(top, bottom);
  EXPECT_EQ(stacked, k);
  const FormalContext nothing({}, k.attributes(), std::vector<AttributeSet>{});
  EXPECT_EQ(subposition(k, nothing), k);
  EXPECT_EQ(oracle::pairs_of(ConceptLattice(stacked)), oracle::concepts(oracle::table_of(k)));
  const auto cols = subcontext(k, k.all_objects(), k.attribute_set({"m1"}));
  EXPECT_THROW(subposition(k, cols), AlignmentError);
}

TEST(Glue, DisjointSelfAndOverlap) {
  const FormalContext a({"x"}, {"p"}, std::vector<std::vector<bool>>{{true}});
  const FormalContext b({"y"}, {"q"}, std::vector<std::vector<bool>>{{true}});
  const auto ab = glue(a, b);
  EXPECT_EQ(ab, FormalContext({"x", "y"}, {"p", "q"},
                              std::vector<std::vector<bool>>{{true, false}, {false, true}}));

  const auto k = fixtures::kf6();
  EXPECT_EQ(glue(k, k), k);

  // Two fragments of KF6 that share row g1 and column m3.
  const auto f1 = subcontext(k, k.object_set({"g1", "g2"}), k.attribute_set({"m3", "m4"}));
  const auto f2 = subcontext(k, k.object_set({"g1", "g3"}), k.attribute_set({"m1", "m3"}));
  const auto glued = glue(f1, f2);
  EXPECT_EQ(glued.objects(), (Names{"g1", "g2", "g3"}));
  EXPECT_EQ(glued.attributes(), (Names{"m3", "m4", "m1"}));
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t m = 0; m < 3; ++m) {
      const auto kg = *k.find_object(glued.objects()[g]);
      const auto km = *k.find_attribute(glued.attributes()[m]);
      const bool covered = (g < 2 && m < 2) || (g != 1 && m != 1);
      EXPECT_EQ(glued.incident(g, m), covered && k.incident(kg, km));
    }

  const FormalContext clash({"g1"}, {"m3"}, std::vector<std::vector<bool>>{{false}});
  try {
    glue(k, clash);
    FAIL() << "expected a conflict";
  } catch (const ConflictError& e) {
    EXPECT_NE(std::string(e.what()).find("g1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("m3"), std::string::npos);
  }
}

// ---------------------------------------------------------------------------

TEST(NaturalJoin, SharedKeyOnly) {
  Relation r{{"id", "a"}, {"id"}, {{"1", "x"}, {"2", "y"}, {"3", "x"}}};
  Relation s{{"id", "b"}, {"id"}, {{"1", "p"}, {"2", "q"}, {"3", "p"}}};
  const auto j = natural_join(r, s);
  EXPECT_EQ(j.scheme, (Names{"id", "a", "b"}));
  EXPECT_EQ(j.tuples.size(), 3u);
  EXPECT_EQ(j.key, (Names{"id"}));

  // Joining on the object key is apposition of the derived contexts.
  const auto joined = from_relation(j);
  const auto mr = from_relation(r);
  const auto ms = from_relation(s);
  EXPECT_EQ(derive_context(joined, default_scales(joined)),
            apposition(derive_context(mr, default_scales(mr)), derive_context(ms, default_scales(ms))));
}

TEST(NaturalJoin, DisjointSchemesGiveProduct) {
  Relation r{{"k", "a"}, {"k"}, {{"1", "x"}, {"2", "y"}}};
  Relation s{{"l", "b"}, {"l"}, {{"u", "p"}, {"v", "q"}, {"w", "r"}}};
  const auto j = natural_join(r, s);
  EXPECT_EQ(j.tuples.size(), 6u);
  EXPECT_EQ(j.key, (Names{"k", "l"}));
  EXPECT_NO_THROW(j.validate());
}

TEST(NaturalJoin, ForeignKeyKeepsLeftKey) {
  Relation r{{"airline", "country"}, {"airline"}, {{"A", "CA"}, {"B", "DE"}, {"C", "CA"}}};
  Relation s{{"country", "continent"}, {"country"}, {{"CA", "NA"}, {"DE", "EU"}}};
  const auto j = natural_join(r, s);
  EXPECT_EQ(j.key, (Names{"airline"}));
  ASSERT_EQ(j.tuples.size(), 3u);
  EXPECT_EQ(j.tuples[2][2], std::optional<std::string>("NA"));
}

// ---------------------------------------------------------------------------

TEST(Restriction, Fig4Walkthrough) {
  const ConceptLattice lat(fixtures::fig4());
  const auto& k = lat.context();
  const auto h = k.object_set({"2", "3", "5", "6"});
  const auto n = k.attribute_set({"a", "b", "d", "f"});
  const auto report = restrict_concepts(lat, h, n);
  const auto id45 = lat.find_by_extent(k.object_set({"4", "5"}));
  ASSERT_TRUE(id45);
  const auto& e = report.entries[*id45];
  EXPECT_EQ(report.sub.context().object_names(e.extent), (Names{"5"}));
  EXPECT_TRUE(e.sub_concept.has_value());
}

TEST(Restriction, IdentityIsCompatible) {
  const ConceptLattice lat(fixtures::kf6());
  const auto report = restrict_concepts(lat, lat.context().all_objects(), lat.context().all_attributes());
  EXPECT_TRUE(report.compatible);
  EXPECT_EQ(report.surjective, std::optional<bool>(true));
  EXPECT_EQ(report.preserves_joins, std::optional<bool>(true));
  EXPECT_EQ(report.preserves_meets, std::optional<bool>(true));
  for (const auto& entry : report.entries) {
    ASSERT_TRUE(entry.sub_concept);
    EXPECT_EQ(oracle::pair_of(report.sub.concept_at(*entry.sub_concept)),
              oracle::pair_of(lat.concept_at(entry.parent)));
  }
}

TEST(Restriction, VerdictMatchesOracle) {
  auto check = [](const FormalContext& k, oracle::Mask hm, oracle::Mask nm) {
    const ConceptLattice lat(k);
    ObjectSet h(k.num_objects());
    AttributeSet n(k.num_attributes());
    for (int i : oracle::bits(hm, static_cast<int>(k.num_objects()))) h.insert(i);
    for (int i : oracle::bits(nm, static_cast<int>(k.num_attributes()))) n.insert(i);
    const auto report = restrict_concepts(lat, h, n);
    const auto sub_concepts = oracle::concepts(oracle::table_of(subcontext(k, h, n)));
    bool all = true;
    for (const auto& e : report.entries) {
      const bool is_concept = sub_concepts.count({oracle::mask_of(e.extent), oracle::mask_of(e.intent)}) > 0;
      EXPECT_EQ(e.sub_concept.has_value(), is_concept);
      all = all && is_concept;
    }
    EXPECT_EQ(report.compatible, all);
  };
  const auto kf6 = fixtures::kf6();
  check(kf6, 0b011, 0b1100);
  std::mt19937 rng(31);
  for (int round = 0; round < 40; ++round)
    check(oracle::random_context(rng, 5, 5, 0.5), static_cast<oracle::Mask>(rng() % 32),
          static_cast<oracle::Mask>(rng() % 32));
}

TEST(Embedding, Fig4SubconceptOfTwoThree) {
  const ConceptLattice parent(fixtures::fig4());
  const auto& k = parent.context();
  const ConceptLattice sub(subcontext(k, k.object_set({"2", "3", "5", "6"}), k.attribute_set({"a", "b", "d", "f"})));
  const auto& u = sub.concept_of_objects(sub.context().object_set({"2", "3"}));
  EXPECT_EQ(sub.context().object_names(u.extent), (Names{"2", "3", "5"}));
  const auto [phi1, phi2] = embed_subconcept(parent, sub, u);
  // φ1 closes the sub-extent {2, 3, 5} in the parent.
  const auto t = oracle::table_of(k);
  const oracle::Mask u_parent = oracle::mask_of(k.object_set({"2", "3", "5"}));
  EXPECT_EQ(oracle::mask_of(phi1.extent), oracle::down(t, oracle::up(t, u_parent)));
  EXPECT_EQ(k.object_names(phi1.extent), (Names{"2", "3", "4", "5"}));
  EXPECT_TRUE(parent.leq(phi1.id, phi2.id));
}

TEST(Embedding, TrivialAndKf6) {
  const ConceptLattice parent(fixtures::kf6());
  const auto& k = parent.context();
  const ConceptLattice same(k);
  const auto [t1, t2] = embed_subconcept(parent, same, same.concept_at(same.top()));
  EXPECT_EQ(t1.id, parent.top());
  EXPECT_EQ(t2.id, parent.top());

  const ConceptLattice sub(subcontext(k, k.object_set({"g1", "g2"}), k.attribute_set({"m3", "m4"})));
  const auto id = sub.find_by_extent(sub.context().object_set({"g1"}));
  ASSERT_TRUE(id);
  const auto [p1, p2] = embed_subconcept(parent, sub, sub.concept_at(*id));
  EXPECT_EQ(p1, gamma(parent, "g1"));
  EXPECT_EQ(p2, gamma(parent, "g1"));
}

TEST(Embedding, OrderEmbeddingsAndIntervalRestricts) {
  std::mt19937 rng(41);
  for (int round = 0; round < 30; ++round) {
    const auto k = oracle::random_context(rng, 6, 6, 0.5);
    const ConceptLattice parent(k);
    ObjectSet h(6);
    AttributeSet n(6);
    for (int i : oracle::bits(static_cast<oracle::Mask>(rng() % 64), 6)) h.insert(i);
    for (int i : oracle::bits(static_cast<oracle::Mask>(rng() % 64), 6)) n.insert(i);
    const ConceptLattice sub(subcontext(k, h, n));
    std::vector<std::pair<Concept, Concept>> images;
    for (const auto& u : sub.concepts()) images.push_back(embed_subconcept(parent, sub, u));
    for (const auto& u : sub.concepts()) {
      const auto& [a1, a2] = images[u.id];
      EXPECT_TRUE(parent.leq(a1.id, a2.id));
      for (auto x : interval(parent, a1, a2).members) {
        const auto& c = parent.concept_at(x);
        EXPECT_EQ(compress(c.extent & h, h), u.extent);
        EXPECT_EQ(compress(c.intent & n, n), u.intent);
      }
      for (const auto& v : sub.concepts()) {
        const auto& [b1, b2] = images[v.id];
        EXPECT_EQ(sub.leq(u.id, v.id), parent.leq(a1.id, b1.id));
        EXPECT_EQ(sub.leq(u.id, v.id), parent.leq(a2.id, b2.id));
      }
    }
  }
}

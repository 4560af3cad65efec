#pragma once

// Brute-force reference implementations for tests.
//
// Everything here works on plain bit masks over the raw incidence table and
// shares no code with the library beyond reading `incident(g, m)`.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latql/context.hpp"
#include "latql/lattice.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Table {
  int n_objects = 0;
  int n_attributes = 0;
  std::vector<std::vector<bool>> cross;  // [g][m]
};

inline Table table_of(const latql::FormalContext& ctx) {
  Table t;
  t.n_objects = static_cast<int>(ctx.num_objects());
  t.n_attributes = static_cast<int>(ctx.num_attributes());
  t.cross.assign(t.n_objects, std::vector<bool>(t.n_attributes, false));
  for (int g = 0; g < t.n_objects; ++g)
    for (int m = 0; m < t.n_attributes; ++m) t.cross[g][m] = ctx.incident(g, m);
  return t;
}

inline Mask all(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool has(Mask s, int i) { return (s >> i) & 1u; }

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask up(const Table& t, Mask objects) {
  Mask out = 0;
  for (int m = 0; m < t.n_attributes; ++m) {
    bool shared = true;
    for (int g = 0; g < t.n_objects; ++g)
      if (has(objects, g) && !t.cross[g][m]) shared = false;
    if (shared) out |= Mask{1} << m;
  }
  return out;
}

inline Mask down(const Table& t, Mask attributes) {
  Mask out = 0;
  for (int g = 0; g < t.n_objects; ++g) {
    bool shared = true;
    for (int m = 0; m < t.n_attributes; ++m)
      if (has(attributes, m) && !t.cross[g][m]) shared = false;
    if (shared) out |= Mask{1} << g;
  }
  return out;
}

struct Pair {
  Mask extent = 0;
  Mask intent = 0;
  friend bool operator<(const Pair& a, const Pair& b) {
    return std::pair(a.extent, a.intent) < std::pair(b.extent, b.intent);
  }
  friend bool operator==(const Pair& a, const Pair& b) {
    return a.extent == b.extent && a.intent == b.intent;
  }
};

/// Every concept, found by closing every attribute subset.
inline std::set<Pair> concepts(const Table& t) {
  std::set<Pair> out;
  for (Mask b = 0; b <= all(t.n_attributes); ++b) {
    const Mask e = down(t, b);
    out.insert({e, up(t, e)});
    if (b == all(t.n_attributes)) break;
  }
  return out;
}

template <class Set>
Mask mask_of(const Set& s) {
  Mask out = 0;
  for (auto i : s.indices()) out |= Mask{1} << i;
  return out;
}

inline Pair pair_of(const latql::Concept& c) { return {mask_of(c.extent), mask_of(c.intent)}; }

inline std::set<Pair> pairs_of(const latql::ConceptLattice& lat) {
  std::set<Pair> out;
  for (const auto& c : lat.concepts()) out.insert(pair_of(c));
  return out;
}

template <class Ids>
std::set<Pair> pairs_of(const latql::ConceptLattice& lat, const Ids& ids) {
  std::set<Pair> out;
  for (auto id : ids) out.insert(pair_of(lat.concept_at(id)));
  return out;
}

/// Covering pairs (lower, upper) by extent inclusion with nothing between.
inline std::set<std::pair<Pair, Pair>> covers(const std::set<Pair>& all_concepts) {
  std::set<std::pair<Pair, Pair>> out;
  for (const auto& lo : all_concepts)
    for (const auto& hi : all_concepts) {
      if (lo == hi || !subset(lo.extent, hi.extent)) continue;
      bool between = false;
      for (const auto& mid : all_concepts)
        if (!(mid == lo) && !(mid == hi) && subset(lo.extent, mid.extent) &&
            subset(mid.extent, hi.extent))
          between = true;
      if (!between) out.insert({lo, hi});
    }
  return out;
}

/// The table restricted to the given columns, renumbered.
inline Table columns(const Table& t, const std::vector<int>& keep) {
  Table r;
  r.n_objects = t.n_objects;
  r.n_attributes = static_cast<int>(keep.size());
  r.cross.assign(r.n_objects, std::vector<bool>(r.n_attributes, false));
  for (int g = 0; g < t.n_objects; ++g)
    for (int j = 0; j < r.n_attributes; ++j) r.cross[g][j] = t.cross[g][keep[j]];
  return r;
}

/// Side-by-side concatenation.
inline Table beside(const Table& a, const Table& b) {
  Table r = a;
  r.n_attributes = a.n_attributes + b.n_attributes;
  for (int g = 0; g < a.n_objects; ++g)
    r.cross[g].insert(r.cross[g].end(), b.cross[g].begin(), b.cross[g].end());
  return r;
}

inline std::vector<int> bits(Mask s, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (has(s, i)) out.push_back(i);
  return out;
}

/// A random context with the given density of crosses and names g0.., m0..
inline latql::FormalContext random_context(std::mt19937& rng, int n_objects, int n_attributes,
                                           double density) {
  std::bernoulli_distribution cross(density);
  std::vector<std::string> objects, attributes;
  for (int g = 0; g < n_objects; ++g) objects.push_back("g" + std::to_string(g));
  for (int m = 0; m < n_attributes; ++m) attributes.push_back("m" + std::to_string(m));
  std::vector<std::vector<bool>> incidence(n_objects, std::vector<bool>(n_attributes));
  for (auto& row : incidence)
    for (std::size_t m = 0; m < row.size(); ++m) row[m] = cross(rng);
  return latql::FormalContext(objects, attributes, incidence);
}

}  // namespace oracle

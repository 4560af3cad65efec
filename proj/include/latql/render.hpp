#pragma once

#include <string>

#include "latql/algebra.hpp"
#include "latql/approximation.hpp"
#include "latql/lattice.hpp"

namespace latql {

enum class Format { Text, Json, Dot };

/// "text" | "json" | "dot"; throws ConfigError otherwise.
Format parse_format(const std::string& name);

/// Renders a lattice, optionally highlighting a region.
///   dot:  Hasse diagram, covering edges only, reduced labelling (each object
///         on its object concept, each attribute on its attribute concept);
///         region members carry `region=true` and a fill.
///   json: concepts with full extents and intents, covering edges, region.
///   text: one line per concept by id, then the covering pairs.
std::string write_lattice(const ConceptLattice& lat, Format format,
                          const ConceptRegion* region = nullptr);

std::string write_selection(const ConceptLattice& lat, const SelectionResult& sel, Format format);
std::string write_projection(const ConceptLattice& parent, const ProjectionResult& proj,
                             Format format);
std::string write_approx(const ConceptLattice& lat, const PresumedConcept& presumed,
                         const ApproxResult& result, Format format);

/// text: Burmeister; json: names and rows; dot: the context's lattice.
std::string write_context(const FormalContext& ctx, Format format);
/// text: CSV; json: scheme, key, tuples. Throws ConfigError for dot.
std::string write_relation(const Relation& r, Format format);

}  // namespace latql

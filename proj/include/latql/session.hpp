#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latql/context.hpp"
#include "latql/generalization.hpp"

namespace latql {

/// How one many-valued attribute is to be scaled. Nominal and ordinal scales
/// take their values from the data when they are built, so they also cover
/// relations produced by joins.
struct ScaleSpec {
  enum class Kind { Nominal, Ordinal, Explicit };
  Kind kind = Kind::Nominal;
  std::vector<double> thresholds;     // ordinal
  std::vector<std::string> values;    // optional for nominal and ordinal
  std::optional<FormalContext> table; // explicit
};

using ScaleSpecs = std::map<std::string, ScaleSpec>;  // by attribute

/// Builds the scale for `attribute`; `observed` lists the values found in the
/// data and is used when the scale lists none.
ConceptualScale build_scale(const std::string& attribute, const ScaleSpec& spec,
                            const std::vector<std::string>& observed);

/// Everything a query may refer to by name.
///
/// Binary contexts and relations share one namespace, since both appear as
/// bare references in queries. Covers live in their own.
struct Catalog {
  std::map<std::string, FormalContext> contexts;
  std::map<std::string, Relation> relations;
  std::map<std::string, ScaleSpecs> scales;  // by relation name
  std::map<std::string, AttributeCover> covers;
  std::optional<double> default_alpha;

  bool has_data(const std::string& name) const {
    return contexts.count(name) || relations.count(name);
  }
};

/// Session file (JSON):
///
///   {
///     "contexts": {
///       "sa":  {"path": "star_alliance.cxt"},
///       "air": {"path": "airlines.csv", "format": "csv"},
///       "k":   {"objects": [..], "attributes": [..], "rows": ["X.", ..]}
///     },
///     "scales": {
///       "air": {
///         "region": {"kind": "nominal"},
///         "fleet":  {"kind": "ordinal", "thresholds": [50, 200]},
///         "hub":    {"kind": "explicit", "values": [..], "attributes": [..], "rows": [..]}
///       }
///     },
///     "covers": {
///       "c": {"groups": [{"name": "m12", "members": ["m1", "m2"], "alpha": 0.5}]}
///     },
///     "alpha": 0.5
///   }
///
/// Paths are relative to the session file. `format` defaults from the
/// extension (".csv" is a relation, anything else Burmeister). Relation
/// attributes without a scale are scaled nominally when a binary context is
/// needed. Errors carry the session path.
Catalog load_session(const std::string& path);
Catalog parse_session(std::string_view text, const std::filesystem::path& base_dir,
                      const std::string& source = "<session>");

/// The binary context of a relation. Attributes without a scale entry are scaled
/// nominally.
FormalContext relation_context(const Relation& r, const ScaleSpecs& specs);

}  // namespace latql

#include "latql/session.hpp"

#include <nlohmann/json.hpp>

#include "latql/error.hpp"
#include "latql/io.hpp"

namespace latql {

using Json = nlohmann::ordered_json;

ConceptualScale build_scale(const std::string& attribute, const ScaleSpec& spec,
                            const std::vector<std::string>& observed) {
  const auto& values = spec.values.empty() ? observed : spec.values;
  switch (spec.kind) {
    case ScaleSpec::Kind::Nominal: return nominal_scale(attribute, values);
    case ScaleSpec::Kind::Ordinal: return ordinal_scale(attribute, values, spec.thresholds);
    case ScaleSpec::Kind::Explicit: return {attribute, *spec.table};
  }
  return {};
}

FormalContext relation_context(const Relation& r, const ScaleSpecs& specs) {
  r.validate();
  const auto mv = from_relation(r);
  for (const auto& [attribute, spec] : specs)
    if (!mv.find_attribute(attribute))
      throw ConfigError("scale given for '" + attribute + "', which is not a non-key attribute");
  ScaleMap scales;
  for (std::size_t m = 0; m < mv.num_attributes(); ++m) {
    const auto& name = mv.attributes()[m];
    auto it = specs.find(name);
    scales.emplace(name, it == specs.end() ? nominal_scale(name, mv.values_of(m))
                                           : build_scale(name, it->second, mv.values_of(m)));
  }
  return derive_context(mv, scales);
}

namespace {

std::vector<std::string> strings(const Json& j) {
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

FormalContext inline_context(const Json& j, const std::string& name) {
  auto objects = strings(j.at("objects"));
  auto attributes = strings(j.at("attributes"));
  const auto rows = strings(j.at("rows"));
  if (rows.size() != objects.size())
    throw ConfigError("context '" + name + "' has " + std::to_string(rows.size()) + " rows for " +
                      std::to_string(objects.size()) + " objects");
  std::vector<std::vector<bool>> incidence;
  for (const auto& row : rows) {
    if (row.size() != attributes.size() || row.find_first_not_of("X.") != std::string::npos)
      throw ConfigError("context '" + name + "': row \"" + row + "\" is not " +
                        std::to_string(attributes.size()) + " characters from {X, .}");
    std::vector<bool> bits;
    for (char c : row) bits.push_back(c == 'X');
    incidence.push_back(std::move(bits));
  }
  return FormalContext(std::move(objects), std::move(attributes), incidence, name);
}

ScaleSpec parse_scale(const Json& j, const std::string& what) {
  ScaleSpec spec;
  const auto kind = j.at("kind").get<std::string>();
  if (j.contains("values")) spec.values = strings(j.at("values"));
  if (kind == "nominal") {
    spec.kind = ScaleSpec::Kind::Nominal;
  } else if (kind == "ordinal") {
    spec.kind = ScaleSpec::Kind::Ordinal;
    spec.thresholds = j.at("thresholds").get<std::vector<double>>();
    if (spec.thresholds.empty()) throw ConfigError(what + ": ordinal scale needs thresholds");
  } else if (kind == "explicit") {
    spec.kind = ScaleSpec::Kind::Explicit;
    Json table = {{"objects", j.at("values")}, {"attributes", j.at("attributes")},
                  {"rows", j.at("rows")}};
    spec.table = inline_context(table, what);
  } else {
    throw ConfigError(what + ": unknown scale kind '" + kind + "'");
  }
  return spec;
}

AttributeCover parse_cover(const Json& j) {
  AttributeCover cover;
  for (const auto& g : j.at("groups")) {
    AttributeCover::Group group;
    group.name = g.at("name").get<std::string>();
    group.members = strings(g.at("members"));
    if (g.contains("alpha")) group.alpha = g.at("alpha").get<double>();
    cover.groups.push_back(std::move(group));
  }
  return cover;
}

Catalog build_catalog(const Json& root, const std::filesystem::path& base_dir) {
  Catalog cat;
  if (!root.is_object()) throw ConfigError("session must be a JSON object");
  for (const auto& [key, _] : root.items())
    if (key != "contexts" && key != "scales" && key != "covers" && key != "alpha")
      throw ConfigError("unknown session section '" + key + "'");

  if (root.contains("contexts")) {
    for (const auto& [name, entry] : root.at("contexts").items()) {
      if (entry.contains("rows")) {
        cat.contexts.emplace(name, inline_context(entry, name));
        continue;
      }
      const auto path = (base_dir / entry.at("path").get<std::string>()).string();
      std::string format = entry.value("format", "");
      if (format.empty())
        format = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0 ? "csv"
                                                                                  : "burmeister";
      if (format == "csv") {
        auto r = read_csv_relation(read_file(path), path);
        r.validate();
        cat.relations.emplace(name, std::move(r));
      } else if (format == "burmeister") {
        auto ctx = read_burmeister(read_file(path), path);
        ctx.set_name(name);
        cat.contexts.emplace(name, std::move(ctx));
      } else {
        throw ConfigError("context '" + name + "': unknown format '" + format + "'");
      }
    }
  }

  if (root.contains("scales")) {
    for (const auto& [relation, attrs] : root.at("scales").items()) {
      auto r = cat.relations.find(relation);
      if (r == cat.relations.end())
        throw ConfigError("scales given for '" + relation + "', which is not a CSV relation");
      auto& specs = cat.scales[relation];
      for (const auto& [attribute, spec] : attrs.items()) {
        if (!r->second.column(attribute) ||
            std::find(r->second.key.begin(), r->second.key.end(), attribute) != r->second.key.end())
          throw ConfigError("scale for '" + relation + "." + attribute +
                            "': not a non-key attribute of the relation");
        specs.emplace(attribute, parse_scale(spec, "scale for '" + relation + "." + attribute + "'"));
      }
    }
  }

  if (root.contains("covers"))
    for (const auto& [name, entry] : root.at("covers").items())
      cat.covers.emplace(name, parse_cover(entry));

  if (root.contains("alpha")) cat.default_alpha = root.at("alpha").get<double>();
  return cat;
}

}  // namespace

Catalog parse_session(std::string_view text, const std::filesystem::path& base_dir,
                      const std::string& source) {
  try {
    return build_catalog(Json::parse(text), base_dir);
  } catch (const Json::exception& e) {
    throw ConfigError(e.what(), source);
  } catch (Error& e) {
    e.locate(source);
    throw;
  }
}

Catalog load_session(const std::string& path) {
  return parse_session(read_file(path), std::filesystem::path(path).parent_path(), path);
}

}  // namespace latql

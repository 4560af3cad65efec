#include "latql/render.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "latql/error.hpp"
#include "latql/io.hpp"

namespace latql {

using Json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  throw ConfigError("unknown output format '" + name + "'");
}

namespace {

std::string braces(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out + "}";
}

std::string describe(const FormalContext& ctx, const Concept& c) {
  return "#" + std::to_string(c.id) + " " + braces(ctx.object_names(c.extent)) + " | " +
         braces(ctx.attribute_names(c.intent));
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string id_list(const std::vector<ConceptId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", #" : "#") + std::to_string(ids[i]);
  return out;
}

std::string lattice_text(const ConceptLattice& lat, const ConceptRegion* region) {
  const auto& ctx = lat.context();
  std::ostringstream out;
  out << "lattice: " << lat.size() << " concepts, top #" << lat.top() << ", bottom #"
      << lat.bottom() << "\n";
  if (region)
    out << "region: " << to_string(region->shape) << ", " << region->size() << " concepts"
        << (region->empty() ? "" : ": " + id_list(region->members)) << "\n";
  for (const auto& c : lat.concepts())
    out << (region && region->contains(c.id) ? "* " : "  ") << describe(ctx, c) << "\n";
  out << "covers:\n";
  for (const auto& [lo, hi] : lat.cover_edges()) out << "  #" << lo << " < #" << hi << "\n";
  return out.str();
}

Json lattice_json(const ConceptLattice& lat, const ConceptRegion* region) {
  const auto& ctx = lat.context();
  Json j;
  j["objects"] = ctx.objects();
  j["attributes"] = ctx.attributes();
  j["top"] = lat.top();
  j["bottom"] = lat.bottom();
  Json concepts = Json::array();
  for (const auto& c : lat.concepts()) {
    Json e;
    e["id"] = c.id;
    e["extent"] = ctx.object_names(c.extent);
    e["intent"] = ctx.attribute_names(c.intent);
    if (region) e["in_region"] = region->contains(c.id);
    concepts.push_back(std::move(e));
  }
  j["concepts"] = std::move(concepts);
  Json covers = Json::array();
  for (const auto& [lo, hi] : lat.cover_edges()) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  if (region) {
    j["region"]["shape"] = to_string(region->shape);
    j["region"]["members"] = region->members;
  }
  return j;
}

std::string lattice_dot(const ConceptLattice& lat, const ConceptRegion* region) {
  const auto& ctx = lat.context();
  // Reduced labelling.
  std::vector<std::vector<std::string>> own_objects(lat.size()), own_attributes(lat.size());
  for (std::size_t g = 0; g < ctx.num_objects(); ++g)
    own_objects[gamma(lat, g).id].push_back(ctx.objects()[g]);
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
    own_attributes[mu(lat, m).id].push_back(ctx.attributes()[m]);

  auto joined = [](const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + dot_escape(names[i]);
    return out;
  };

  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontsize=10];\n";
  out << "  edge [arrowhead=none];\n";
  for (const auto& c : lat.concepts()) {
    std::string label = "#" + std::to_string(c.id);
    if (!own_attributes[c.id].empty()) label += "\\n" + joined(own_attributes[c.id]);
    if (!own_objects[c.id].empty()) label += "\\n" + joined(own_objects[c.id]);
    out << "  c" << c.id << " [label=\"" << label << "\"";
    if (region && region->contains(c.id)) out << ", region=true, style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (const auto& [lo, hi] : lat.cover_edges()) out << "  c" << lo << " -> c" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string write_lattice(const ConceptLattice& lat, Format format, const ConceptRegion* region) {
  switch (format) {
    case Format::Text: return lattice_text(lat, region);
    case Format::Json: return dump(lattice_json(lat, region));
    case Format::Dot: return lattice_dot(lat, region);
  }
  return {};
}

std::string write_selection(const ConceptLattice& lat, const SelectionResult& sel, Format format) {
  const ConceptRegion region = sel.region();
  switch (format) {
    case Format::Text: {
      std::ostringstream out;
      out << "selection: " << to_string(sel.shape) << ", " << sel.members.size() << " concepts\n";
      for (const auto& n : sel.negations)
        out << "negated " << n.attribute << ": complement "
            << (n.complement_closed ? "closed" : "not closed") << "\n";
      out << lattice_text(lat, &region);
      return out.str();
    }
    case Format::Json: {
      Json j;
      j["selection"]["shape"] = to_string(sel.shape);
      j["selection"]["members"] = sel.members;
      Json neg = Json::array();
      for (const auto& n : sel.negations)
        neg.push_back({{"attribute", n.attribute}, {"complement_closed", n.complement_closed}});
      j["selection"]["negations"] = std::move(neg);
      j["lattice"] = lattice_json(lat, &region);
      return dump(j);
    }
    case Format::Dot: return lattice_dot(lat, &region);
  }
  return {};
}

std::string write_projection(const ConceptLattice& parent, const ProjectionResult& proj,
                             Format format) {
  const auto kept = parent.context().attribute_names(proj.kept);
  switch (format) {
    case Format::Text: {
      std::ostringstream out;
      out << "projection on " << braces(kept) << ": " << proj.projected.size() << " concepts\n";
      out << lattice_text(proj.projected, nullptr);
      out << "classes:\n";
      for (ConceptId c = 0; c < parent.size(); ++c)
        out << "  #" << c << " -> #" << proj.image[c] << " (representative #"
            << proj.representative[c] << ")\n";
      return out.str();
    }
    case Format::Json: {
      Json j;
      j["projection"]["attributes"] = kept;
      j["projection"]["image"] = proj.image;
      j["projection"]["representative"] = proj.representative;
      j["projection"]["representatives"] = proj.representatives;
      j["lattice"] = lattice_json(proj.projected, nullptr);
      return dump(j);
    }
    case Format::Dot: return lattice_dot(proj.projected, nullptr);
  }
  return {};
}

std::string write_approx(const ConceptLattice& lat, const PresumedConcept& presumed,
                         const ApproxResult& result, Format format) {
  const auto& ctx = lat.context();
  switch (format) {
    case Format::Text: {
      std::ostringstream out;
      out << "presumed: (" << braces(ctx.object_names(presumed.objects)) << ", "
          << braces(ctx.attribute_names(presumed.attributes)) << ")\n";
      out << "kind: " << to_string(result.kind) << "\n";
      out << "lower: " << describe(ctx, result.lower) << "\n";
      out << "upper: " << describe(ctx, result.upper) << "\n";
      out << "interval: " << result.interval.size() << " concepts"
          << (result.interval.empty() ? "" : ": " + id_list(result.interval.members)) << "\n";
      return out.str();
    }
    case Format::Json: {
      Json j;
      j["presumed"]["objects"] = ctx.object_names(presumed.objects);
      j["presumed"]["attributes"] = ctx.attribute_names(presumed.attributes);
      j["kind"] = to_string(result.kind);
      j["lower"] = result.lower.id;
      j["upper"] = result.upper.id;
      j["interval"] = result.interval.members;
      j["lattice"] = lattice_json(lat, &result.interval);
      return dump(j);
    }
    case Format::Dot: return lattice_dot(lat, &result.interval);
  }
  return {};
}

std::string write_context(const FormalContext& ctx, Format format) {
  switch (format) {
    case Format::Text: return write_burmeister(ctx);
    case Format::Json: {
      Json j;
      j["name"] = ctx.name();
      j["objects"] = ctx.objects();
      j["attributes"] = ctx.attributes();
      Json rows = Json::array();
      for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
        std::string row;
        for (std::size_t m = 0; m < ctx.num_attributes(); ++m) row += ctx.incident(g, m) ? 'X' : '.';
        rows.push_back(row);
      }
      j["rows"] = std::move(rows);
      return dump(j);
    }
    case Format::Dot: return lattice_dot(build_lattice(ctx), nullptr);
  }
  return {};
}

std::string write_relation(const Relation& r, Format format) {
  switch (format) {
    case Format::Text: return write_csv_relation(r);
    case Format::Json: {
      Json j;
      j["scheme"] = r.scheme;
      j["key"] = r.key;
      Json tuples = Json::array();
      for (const auto& t : r.tuples) {
        Json row = Json::array();
        for (const auto& v : t) row.push_back(v ? Json(*v) : Json(nullptr));
        tuples.push_back(std::move(row));
      }
      j["tuples"] = std::move(tuples);
      return dump(j);
    }
    case Format::Dot: throw ConfigError("dot output needs a lattice, not a relation");
  }
  return {};
}

}  // namespace latql

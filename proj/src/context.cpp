#include "latql/context.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "latql/error.hpp"

namespace latql {

namespace {

std::string without_blanks(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

std::optional<std::size_t> lenient_find(const std::map<std::string, std::size_t>& index,
                                        const std::string& name) {
  if (auto it = index.find(name); it != index.end()) return it->second;
  const std::string wanted = without_blanks(name);
  std::optional<std::size_t> hit;
  for (const auto& [key, pos] : index) {
    if (without_blanks(key) != wanted) continue;
    if (hit) return std::nullopt;  // ambiguous
    hit = pos;
  }
  return hit;
}

template <typename Set>
void check_universe(const Set& s, std::size_t expected, const char* what) {
  if (s.universe() != expected) {
    std::ostringstream msg;
    msg << what << " set has universe " << s.universe() << " but the context has " << expected;
    throw DomainError(msg.str());
  }
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             const std::vector<std::vector<bool>>& incidence, std::string name)
    : name_(std::move(name)), objects_(std::move(objects)), attributes_(std::move(attributes)) {
  if (incidence.size() != objects_.size())
    throw IntegrityError("incidence has " + std::to_string(incidence.size()) + " rows for " +
                         std::to_string(objects_.size()) + " objects");
  rows_.reserve(objects_.size());
  for (std::size_t g = 0; g < incidence.size(); ++g) {
    if (incidence[g].size() != attributes_.size())
      throw IntegrityError("incidence row " + std::to_string(g) + " has " +
                           std::to_string(incidence[g].size()) + " cells for " +
                           std::to_string(attributes_.size()) + " attributes");
    AttributeSet row(attributes_.size());
    for (std::size_t m = 0; m < incidence[g].size(); ++m)
      if (incidence[g][m]) row.insert(m);
    rows_.push_back(std::move(row));
  }
  index_names();
}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<AttributeSet> rows, std::string name)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      rows_(std::move(rows)) {
  if (rows_.size() != objects_.size())
    throw IntegrityError("incidence has " + std::to_string(rows_.size()) + " rows for " +
                         std::to_string(objects_.size()) + " objects");
  for (const auto& r : rows_)
    if (r.universe() != attributes_.size())
      throw IntegrityError("incidence row width does not match the attribute count");
  index_names();
}

void FormalContext::index_names() {
  for (std::size_t g = 0; g < objects_.size(); ++g)
    if (!object_index_.emplace(objects_[g], g).second)
      throw IntegrityError("duplicate object name '" + objects_[g] + "'");
  for (std::size_t m = 0; m < attributes_.size(); ++m)
    if (!attribute_index_.emplace(attributes_[m], m).second)
      throw IntegrityError("duplicate attribute name '" + attributes_[m] + "'");

  columns_.assign(attributes_.size(), ObjectSet(objects_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g)
    for (auto m : rows_[g].indices()) columns_[m].insert(g);
}

std::optional<std::size_t> FormalContext::find_object(const std::string& name) const {
  if (auto it = object_index_.find(name); it != object_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> FormalContext::find_attribute(const std::string& name) const {
  if (auto it = attribute_index_.find(name); it != attribute_index_.end()) return it->second;
  return std::nullopt;
}

std::size_t FormalContext::resolve_object(const std::string& name) const {
  if (auto i = lenient_find(object_index_, name)) return *i;
  throw UnknownNameError("unknown object '" + name + "'");
}

std::size_t FormalContext::resolve_attribute(const std::string& name) const {
  if (auto i = lenient_find(attribute_index_, name)) return *i;
  throw UnknownNameError("unknown attribute '" + name + "'");
}

ObjectSet FormalContext::object_set(const std::vector<std::string>& names) const {
  ObjectSet s(num_objects());
  for (const auto& n : names) s.insert(resolve_object(n));
  return s;
}

AttributeSet FormalContext::attribute_set(const std::vector<std::string>& names) const {
  AttributeSet s(num_attributes());
  for (const auto& n : names) s.insert(resolve_attribute(n));
  return s;
}

std::vector<std::string> FormalContext::object_names(const ObjectSet& s) const {
  check_universe(s, num_objects(), "object");
  std::vector<std::string> out;
  for (auto g : s.indices()) out.push_back(objects_[g]);
  return out;
}

std::vector<std::string> FormalContext::attribute_names(const AttributeSet& s) const {
  check_universe(s, num_attributes(), "attribute");
  std::vector<std::string> out;
  for (auto m : s.indices()) out.push_back(attributes_[m]);
  return out;
}

AttributeSet derive_objects(const FormalContext& ctx, const ObjectSet& objects) {
  check_universe(objects, ctx.num_objects(), "object");
  AttributeSet out = ctx.all_attributes();
  for (auto g : objects.indices()) out &= ctx.row(g);
  return out;
}

ObjectSet derive_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
  check_universe(attributes, ctx.num_attributes(), "attribute");
  ObjectSet out = ctx.all_objects();
  for (auto m : attributes.indices()) out &= ctx.column(m);
  return out;
}

ObjectSet closure_objects(const FormalContext& ctx, const ObjectSet& objects) {
  return derive_attributes(ctx, derive_objects(ctx, objects));
}

AttributeSet closure_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
  return derive_objects(ctx, derive_attributes(ctx, attributes));
}

FormalContext subcontext(const FormalContext& ctx, const ObjectSet& objects,
                         const AttributeSet& attributes) {
  check_universe(objects, ctx.num_objects(), "object");
  check_universe(attributes, ctx.num_attributes(), "attribute");
  const auto kept_objects = objects.indices();
  const auto kept_attributes = attributes.indices();

  std::vector<std::string> g_names, m_names;
  for (auto g : kept_objects) g_names.push_back(ctx.objects()[g]);
  for (auto m : kept_attributes) m_names.push_back(ctx.attributes()[m]);

  std::vector<AttributeSet> rows;
  rows.reserve(kept_objects.size());
  for (auto g : kept_objects) {
    AttributeSet row(kept_attributes.size());
    for (std::size_t j = 0; j < kept_attributes.size(); ++j)
      if (ctx.incident(g, kept_attributes[j])) row.insert(j);
    rows.push_back(std::move(row));
  }
  return FormalContext(std::move(g_names), std::move(m_names), std::move(rows), ctx.name());
}

FormalContext transpose(const FormalContext& ctx) {
  std::vector<AttributeSet> rows;
  rows.reserve(ctx.num_attributes());
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
    AttributeSet row(ctx.num_objects());
    for (auto g : ctx.column(m).indices()) row.insert(g);
    rows.push_back(std::move(row));
  }
  return FormalContext(ctx.attributes(), ctx.objects(), std::move(rows), ctx.name());
}

// ---------------------------------------------------------------------------

ManyValuedContext::ManyValuedContext(std::vector<std::string> objects,
                                     std::vector<std::string> attributes,
                                     std::vector<std::vector<Cell>> cells)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), cells_(std::move(cells)) {
  if (cells_.size() != objects_.size())
    throw IntegrityError("many-valued table has " + std::to_string(cells_.size()) +
                         " rows for " + std::to_string(objects_.size()) + " objects");
  for (const auto& row : cells_)
    if (row.size() != attributes_.size())
      throw IntegrityError("many-valued row width does not match the attribute count");
  std::set<std::string> seen;
  for (const auto& g : objects_)
    if (!seen.insert(g).second) throw IntegrityError("duplicate object name '" + g + "'");
  seen.clear();
  for (const auto& m : attributes_)
    if (!seen.insert(m).second) throw IntegrityError("duplicate attribute name '" + m + "'");
}

std::optional<std::size_t> ManyValuedContext::find_attribute(const std::string& name) const {
  auto it = std::find(attributes_.begin(), attributes_.end(), name);
  if (it == attributes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - attributes_.begin());
}

std::vector<std::string> ManyValuedContext::values_of(std::size_t m) const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& row : cells_)
    if (row[m] && seen.insert(*row[m]).second) out.push_back(*row[m]);
  return out;
}

ConceptualScale nominal_scale(const std::string& attribute,
                              const std::vector<std::string>& values) {
  std::vector<AttributeSet> rows;
  for (std::size_t i = 0; i < values.size(); ++i) rows.push_back(AttributeSet::of(values.size(), {i}));
  return {attribute, FormalContext(values, values, std::move(rows), attribute)};
}

namespace {

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::string format_threshold(double t) {
  std::ostringstream out;
  out << t;
  return "<=" + out.str();
}

}  // namespace

ConceptualScale ordinal_scale(const std::string& attribute, const std::vector<std::string>& values,
                              const std::vector<double>& thresholds) {
  std::vector<std::string> scaled;
  for (double t : thresholds) scaled.push_back(format_threshold(t));
  std::vector<AttributeSet> rows;
  for (const auto& v : values) {
    auto number = parse_number(v);
    if (!number)
      throw ConfigError("ordinal scale for '" + attribute + "': value '" + v + "' is not numeric");
    AttributeSet row(thresholds.size());
    for (std::size_t j = 0; j < thresholds.size(); ++j)
      if (*number <= thresholds[j]) row.insert(j);
    rows.push_back(std::move(row));
  }
  return {attribute, FormalContext(values, std::move(scaled), std::move(rows), attribute)};
}

FormalContext scale_attribute(const ManyValuedContext& mv, const std::string& attribute,
                              const ConceptualScale& scale) {
  if (scale.attribute != attribute)
    throw ConfigError("scale for '" + scale.attribute + "' applied to attribute '" + attribute + "'");
  auto m = mv.find_attribute(attribute);
  if (!m) throw UnknownNameError("unknown many-valued attribute '" + attribute + "'");

  const FormalContext& s = scale.scale;
  std::vector<AttributeSet> rows;
  rows.reserve(mv.num_objects());
  for (std::size_t g = 0; g < mv.num_objects(); ++g) {
    const auto& cell = mv.value(g, *m);
    if (!cell) {
      rows.emplace_back(s.num_attributes());
      continue;
    }
    auto v = s.find_object(*cell);
    if (!v)
      throw ScaleCoverageError("value '" + *cell + "' of attribute '" + attribute +
                               "' (object '" + mv.objects()[g] + "') is not covered by its scale");
    rows.push_back(s.row(*v));
  }
  return FormalContext(mv.objects(), s.attributes(), std::move(rows));
}

FormalContext derive_context(const ManyValuedContext& mv, const ScaleMap& scales) {
  std::vector<std::string> names;
  std::vector<FormalContext> pieces;
  for (const auto& m : mv.attributes()) {
    auto it = scales.find(m);
    if (it == scales.end()) throw ConfigError("no conceptual scale for attribute '" + m + "'");
    pieces.push_back(scale_attribute(mv, m, it->second));
    for (const auto& s : pieces.back().attributes()) names.push_back(m + ":" + s);
  }

  std::vector<AttributeSet> rows(mv.num_objects(), AttributeSet(names.size()));
  std::size_t offset = 0;
  for (const auto& piece : pieces) {
    for (std::size_t g = 0; g < mv.num_objects(); ++g)
      for (auto j : piece.row(g).indices()) rows[g].insert(offset + j);
    offset += piece.num_attributes();
  }
  return FormalContext(mv.objects(), std::move(names), std::move(rows));
}

ScaleMap default_scales(const ManyValuedContext& mv) {
  ScaleMap out;
  for (std::size_t m = 0; m < mv.num_attributes(); ++m)
    out.emplace(mv.attributes()[m], nominal_scale(mv.attributes()[m], mv.values_of(m)));
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> Relation::column(const std::string& attribute) const {
  auto it = std::find(scheme.begin(), scheme.end(), attribute);
  if (it == scheme.end()) return std::nullopt;
  return static_cast<std::size_t>(it - scheme.begin());
}

std::string Relation::key_of(std::size_t i) const {
  std::string out;
  for (std::size_t k = 0; k < key.size(); ++k) {
    if (k) out += ",";
    out += tuples[i][*column(key[k])].value_or("");
  }
  return out;
}

void Relation::validate() const {
  std::set<std::string> names;
  for (const auto& a : scheme)
    if (!names.insert(a).second) throw IntegrityError("duplicate attribute '" + a + "' in scheme");
  if (key.empty()) throw IntegrityError("relation has no key");
  std::vector<std::size_t> key_cols;
  for (const auto& k : key) {
    auto c = column(k);
    if (!c) throw IntegrityError("key attribute '" + k + "' is not in the scheme");
    key_cols.push_back(*c);
  }
  std::set<std::vector<std::string>> seen;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (tuples[i].size() != scheme.size())
      throw IntegrityError("tuple " + std::to_string(i) + " has " +
                           std::to_string(tuples[i].size()) + " values for " +
                           std::to_string(scheme.size()) + " attributes");
    std::vector<std::string> k;
    for (auto c : key_cols) {
      if (!tuples[i][c]) throw IntegrityError("tuple " + std::to_string(i) + " has no key value");
      k.push_back(*tuples[i][c]);
    }
    if (!seen.insert(k).second)
      throw IntegrityError("duplicate key value '" + key_of(i) + "'");
  }
}

ManyValuedContext from_relation(const Relation& r) {
  r.validate();
  std::vector<std::size_t> value_cols;
  std::vector<std::string> attributes;
  for (std::size_t c = 0; c < r.scheme.size(); ++c) {
    if (std::find(r.key.begin(), r.key.end(), r.scheme[c]) != r.key.end()) continue;
    value_cols.push_back(c);
    attributes.push_back(r.scheme[c]);
  }
  std::vector<std::string> objects;
  std::vector<std::vector<ManyValuedContext::Cell>> cells;
  for (std::size_t i = 0; i < r.tuples.size(); ++i) {
    objects.push_back(r.key_of(i));
    std::vector<ManyValuedContext::Cell> row;
    for (auto c : value_cols) row.push_back(r.tuples[i][c]);
    cells.push_back(std::move(row));
  }
  // Distinct composite keys can still collide once comma-joined.
  try {
    return ManyValuedContext(std::move(objects), std::move(attributes), std::move(cells));
  } catch (const IntegrityError& e) {
    throw IntegrityError(std::string("relation key: ") + e.message());
  }
}

}  // namespace latql

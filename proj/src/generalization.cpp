#include "latql/generalization.hpp"

#include <set>

#include "latql/error.hpp"
#include "latql/lattice.hpp"

namespace latql {

std::string to_string(GeneralizationMode mode) {
  switch (mode) {
    case GeneralizationMode::Exists: return "exists";
    case GeneralizationMode::Forall: return "forall";
    case GeneralizationMode::Alpha: return "alpha";
  }
  return "exists";
}

GeneralizationMode parse_mode(const std::string& text) {
  if (text == "exists") return GeneralizationMode::Exists;
  if (text == "forall") return GeneralizationMode::Forall;
  if (text == "alpha") return GeneralizationMode::Alpha;
  throw ConfigError("unknown generalization semantics '" + text + "'");
}

namespace {

double threshold_of(const AttributeCover::Group& group, const GeneralizationSemantics& sem) {
  if (group.alpha) return *group.alpha;
  if (sem.default_alpha) return *sem.default_alpha;
  throw ConfigError("alpha semantics without a threshold for group '" + group.name + "'");
}

}  // namespace

void validate(const AttributeCover& cover, const GeneralizationSemantics& sem,
              const FormalContext& ctx) {
  std::set<std::string> grouped;
  std::set<std::string> group_names;
  for (const auto& group : cover.groups) {
    if (group.members.empty()) throw ConfigError("group '" + group.name + "' is empty");
    if (!group_names.insert(group.name).second)
      throw ConfigError("duplicate group name '" + group.name + "'");
    for (const auto& m : group.members) {
      if (!ctx.find_attribute(m))
        throw ConfigError("group '" + group.name + "' names unknown attribute '" + m + "'");
      grouped.insert(m);
    }
    if (sem.mode == GeneralizationMode::Alpha) {
      const double a = threshold_of(group, sem);
      if (!(a > 0.0 && a <= 1.0))
        throw ConfigError("threshold for group '" + group.name + "' must lie in (0, 1]");
    }
  }
  for (const auto& m : ctx.attributes())
    if (!grouped.count(m) && group_names.count(m))
      throw ConfigError("group name '" + m + "' clashes with a pass-through attribute");
}

FormalContext generalize(const FormalContext& ctx, const AttributeCover& cover,
                         const GeneralizationSemantics& sem) {
  validate(cover, sem, ctx);

  std::set<std::size_t> grouped;
  // Position -> groups anchored there, in cover order.
  std::vector<std::vector<std::size_t>> anchored(ctx.num_attributes());
  std::vector<AttributeSet> members;
  for (std::size_t s = 0; s < cover.groups.size(); ++s) {
    members.push_back(ctx.attribute_set(cover.groups[s].members));
    for (auto m : members.back().indices()) grouped.insert(m);
    anchored[members.back().indices().front()].push_back(s);
  }

  // Each output column is either a group or a pass-through source attribute.
  struct Column {
    std::optional<std::size_t> group;
    std::size_t source = 0;
  };
  std::vector<Column> columns;
  std::vector<std::string> names;
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
    for (auto s : anchored[m]) {
      columns.push_back({s, 0});
      names.push_back(cover.groups[s].name);
    }
    if (!grouped.count(m)) {
      columns.push_back({std::nullopt, m});
      names.push_back(ctx.attributes()[m]);
    }
  }

  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    AttributeSet row(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const auto& col = columns[j];
      if (!col.group) {
        if (ctx.incident(g, col.source)) row.insert(j);
        continue;
      }
      const AttributeSet& group = members[*col.group];
      const std::size_t have = (ctx.row(g) & group).count();
      bool incident = false;
      switch (sem.mode) {
        case GeneralizationMode::Exists: incident = have > 0; break;
        case GeneralizationMode::Forall: incident = have == group.count(); break;
        case GeneralizationMode::Alpha:
          incident = static_cast<double>(have) / static_cast<double>(group.count()) >=
                     threshold_of(cover.groups[*col.group], sem);
          break;
      }
      if (incident) row.insert(j);
    }
    rows.push_back(std::move(row));
  }
  return FormalContext(ctx.objects(), std::move(names), std::move(rows), ctx.name());
}

LatticeSizeReport compare_lattice_sizes(const FormalContext& ctx, const AttributeCover& cover,
                                        const GeneralizationSemantics& sem) {
  const FormalContext gen = generalize(ctx, cover, sem);
  return {build_lattice(ctx).size(), build_lattice(gen).size()};
}

}  // namespace latql

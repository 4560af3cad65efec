#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latql/context.hpp"

namespace latql {

/// Groups of source attributes, each replaced by one generalized attribute.
/// Attributes in no group pass through unchanged. Groups may overlap.
struct AttributeCover {
  struct Group {
    std::string name;
    std::vector<std::string> members;
    std::optional<double> alpha;  // threshold for alpha semantics
  };
  std::vector<Group> groups;
};

enum class GeneralizationMode { Exists, Forall, Alpha };

std::string to_string(GeneralizationMode mode);
/// "exists" | "forall" | "alpha"; throws ConfigError otherwise.
GeneralizationMode parse_mode(const std::string& text);

struct GeneralizationSemantics {
  GeneralizationMode mode = GeneralizationMode::Exists;
  // Used for alpha groups that carry no threshold of their own.
  std::optional<double> default_alpha;
};

/// Throws ConfigError for an empty group, an unknown member, a group name
/// that clashes with a pass-through attribute or another group, or (in alpha
/// mode) a missing or out-of-range threshold.
void validate(const AttributeCover& cover, const GeneralizationSemantics& sem,
              const FormalContext& ctx);

/// (G, S ∪ pass-through, J). A group column sits where its first member was.
///   exists: g J s iff g has some member of s
///   forall: g J s iff g has every member of s
///   alpha:  g J s iff |{m ∈ s | g I m}| / |s| >= α_s
FormalContext generalize(const FormalContext& ctx, const AttributeCover& cover,
                         const GeneralizationSemantics& sem);

struct LatticeSizeReport {
  std::size_t original = 0;
  std::size_t generalized = 0;
  long long delta() const {
    return static_cast<long long>(generalized) - static_cast<long long>(original);
  }
};

LatticeSizeReport compare_lattice_sizes(const FormalContext& ctx, const AttributeCover& cover,
                                        const GeneralizationSemantics& sem);

}  // namespace latql

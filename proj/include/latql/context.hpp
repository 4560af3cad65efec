#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latql/index_set.hpp"

namespace latql {

/// A binary formal context (G, M, I). Objects and attributes keep the order
/// they were given in; every set-valued output is reported in that order.
///
/// Incidence is stored twice, as object rows and as attribute columns, so both
/// derivation directions reduce to bitwise intersections.
class FormalContext {
 public:
  FormalContext() = default;

  /// Throws IntegrityError on duplicate names or a shape mismatch.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                const std::vector<std::vector<bool>>& incidence, std::string name = {});

  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<AttributeSet> rows, std::string name = {});

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_attributes() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  bool incident(std::size_t g, std::size_t m) const { return rows_[g].contains(m); }
  const AttributeSet& row(std::size_t g) const { return rows_[g]; }
  const ObjectSet& column(std::size_t m) const { return columns_[m]; }

  std::optional<std::size_t> find_object(const std::string& name) const;
  std::optional<std::size_t> find_attribute(const std::string& name) const;

  /// Exact lookup first; otherwise a unique match ignoring blanks, so that
  /// `AirCanada` resolves "Air Canada". Throws UnknownNameError.
  std::size_t resolve_object(const std::string& name) const;
  std::size_t resolve_attribute(const std::string& name) const;

  ObjectSet object_set(const std::vector<std::string>& names) const;
  AttributeSet attribute_set(const std::vector<std::string>& names) const;

  ObjectSet all_objects() const { return ObjectSet::full(num_objects()); }
  AttributeSet all_attributes() const { return AttributeSet::full(num_attributes()); }

  std::vector<std::string> object_names(const ObjectSet& s) const;
  std::vector<std::string> attribute_names(const AttributeSet& s) const;

  /// Same names, same order, same crosses. The context name is ignored.
  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
  }

 private:
  void index_names();

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
  std::map<std::string, std::size_t> object_index_;
  std::map<std::string, std::size_t> attribute_index_;
};

// Derivation operators. All throw DomainError when a set belongs to a
// universe of the wrong size.

AttributeSet derive_objects(const FormalContext& ctx, const ObjectSet& objects);
ObjectSet derive_attributes(const FormalContext& ctx, const AttributeSet& attributes);
ObjectSet closure_objects(const FormalContext& ctx, const ObjectSet& objects);
AttributeSet closure_attributes(const FormalContext& ctx, const AttributeSet& attributes);

/// The restriction (H, N, I ∩ (H × N)), keeping the parent's order.
FormalContext subcontext(const FormalContext& ctx, const ObjectSet& objects,
                         const AttributeSet& attributes);

FormalContext transpose(const FormalContext& ctx);

// ---------------------------------------------------------------------------
// Many-valued data

/// (G, M, W, I) with at most one value per (object, attribute) cell; a missing
/// cell means the attribute is undefined on that object.
class ManyValuedContext {
 public:
  using Cell = std::optional<std::string>;

  ManyValuedContext() = default;
  ManyValuedContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                    std::vector<std::vector<Cell>> cells);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_attributes() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const Cell& value(std::size_t g, std::size_t m) const { return cells_[g][m]; }
  std::optional<std::size_t> find_attribute(const std::string& name) const;

  /// Distinct values of attribute m in order of first occurrence.
  std::vector<std::string> values_of(std::size_t m) const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<Cell>> cells_;
};

/// A binary context S_m whose objects are values of `attribute` and whose
/// attributes are the scaled attributes.
struct ConceptualScale {
  std::string attribute;
  FormalContext scale;
};

/// G_m = M_m = values, I_m = equality.
ConceptualScale nominal_scale(const std::string& attribute, const std::vector<std::string>& values);

/// Numeric values against thresholds: value v is incident with "<=t" iff v <= t.
/// Throws ConfigError when a value is not numeric.
ConceptualScale ordinal_scale(const std::string& attribute, const std::vector<std::string>& values,
                              const std::vector<double>& thresholds);

using ScaleMap = std::map<std::string, ConceptualScale>;

/// K_m = (G, M_m, I^m); objects without a value for m get an empty row.
/// Throws ScaleCoverageError when some m(g) is not an object of the scale.
FormalContext scale_attribute(const ManyValuedContext& mv, const std::string& attribute,
                              const ConceptualScale& scale);

/// Column-wise concatenation of every scale_attribute result. Scaled attribute
/// names are written "attribute:scaled". Throws ConfigError on a missing scale.
FormalContext derive_context(const ManyValuedContext& mv, const ScaleMap& scales);

/// Nominal scales for every attribute of mv.
ScaleMap default_scales(const ManyValuedContext& mv);

// ---------------------------------------------------------------------------
// Relations

/// A relation r(R) with a key. The key is usually one attribute; relations
/// produced by a cross join carry a composite key.
struct Relation {
  using Value = std::optional<std::string>;

  std::vector<std::string> scheme;
  std::vector<std::string> key;
  std::vector<std::vector<Value>> tuples;

  std::optional<std::size_t> column(const std::string& attribute) const;

  /// Object name of tuple i: its key value(s), comma-joined.
  std::string key_of(std::size_t i) const;

  /// Throws IntegrityError when the key is missing from the scheme, a tuple
  /// has the wrong arity, a key value is undefined, or key values repeat.
  void validate() const;
};

/// G = {t(K)}, (t(K), m, w) ∈ I iff t(m) = w, for every non-key attribute m.
ManyValuedContext from_relation(const Relation& r);

}  // namespace latql

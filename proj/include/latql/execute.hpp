#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>

#include "latql/algebra.hpp"
#include "latql/approximation.hpp"
#include "latql/query.hpp"
#include "latql/render.hpp"
#include "latql/session.hpp"

namespace latql {

using LatticePtr = std::shared_ptr<const ConceptLattice>;

struct RelationValue {
  Relation relation;
  ScaleSpecs scales;
};

struct LatticeValue {
  LatticePtr lattice;
};

struct SelectionValue {
  LatticePtr lattice;
  SelectionResult result;
};

struct ProjectionValue {
  LatticePtr parent;
  std::shared_ptr<const ProjectionResult> result;
};

struct ApproxValue {
  LatticePtr lattice;
  PresumedConcept presumed;
  ApproxResult result;
};

using Value = std::variant<FormalContext, RelationValue, LatticeValue, SelectionValue,
                           ProjectionValue, ApproxValue>;

struct ExecOptions {
  // Cross-check every lattice against exhaustive enumeration.
  bool oracle = false;
};

/// Evaluates one query bottom-up. Lattices are built on demand and memoized
/// per subexpression for the lifetime of the executor.
///
/// Operands are coerced as needed: a relation becomes its scaled binary
/// context, a context becomes its lattice, and a projection stands for its
/// projected lattice. Module errors are re-raised with the span of the
/// subexpression that failed.
class Executor {
 public:
  explicit Executor(const Catalog& catalog, ExecOptions options = {});

  Value run(const QueryAst& q);

  std::size_t lattices_built() const { return built_; }

 private:
  Value eval(const QueryAst& q);
  Value eval_node(const QueryAst& q);
  FormalContext as_context(const QueryAst& q);
  LatticePtr as_lattice(const QueryAst& q);
  RelationValue as_relation(const QueryAst& q);

  const Catalog& catalog_;
  ExecOptions options_;
  std::map<std::string, LatticePtr> memo_;
  std::size_t built_ = 0;
};

Value execute(const QueryAst& q, const Catalog& catalog, ExecOptions options = {});

std::string render(const Value& v, Format format);

/// Short name of the value's kind: context, relation, lattice, selection,
/// projection, approximation.
std::string kind_of(const Value& v);

}  // namespace latql

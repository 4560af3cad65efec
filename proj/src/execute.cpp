#include "latql/execute.hpp"

#include <algorithm>

#include "latql/error.hpp"
#include "latql/generalization.hpp"

namespace latql {

Executor::Executor(const Catalog& catalog, ExecOptions options)
    : catalog_(catalog), options_(options) {}

Value Executor::run(const QueryAst& q) { return eval(q); }

Value Executor::eval(const QueryAst& q) {
  try {
    return eval_node(q);
  } catch (Error& e) {
    e.locate(q.span.where());
    throw;
  }
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string kind_of(const Value& v) {
  return std::visit(Overloaded{
                        [](const FormalContext&) { return "context"; },
                        [](const RelationValue&) { return "relation"; },
                        [](const LatticeValue&) { return "lattice"; },
                        [](const SelectionValue&) { return "selection"; },
                        [](const ProjectionValue&) { return "projection"; },
                        [](const ApproxValue&) { return "approximation"; },
                    },
                    v);
}

FormalContext Executor::as_context(const QueryAst& q) {
  Value v = eval(q);
  return std::visit(Overloaded{
                        [](FormalContext& c) { return std::move(c); },
                        [](RelationValue& r) { return relation_context(r.relation, r.scales); },
                        [](LatticeValue& l) { return l.lattice->context(); },
                        [](ProjectionValue& p) { return p.result->projected.context(); },
                        [&](auto&) -> FormalContext {
                          throw Error(ErrorKind::Usage,
                                      "a " + kind_of(v) + " cannot be used as a context",
                                      q.span.where());
                        },
                    },
                    v);
}

LatticePtr Executor::as_lattice(const QueryAst& q) {
  const std::string key = pretty_print(q);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Value v = eval(q);
  LatticePtr lat;
  if (auto* l = std::get_if<LatticeValue>(&v)) {
    lat = l->lattice;
  } else if (auto* p = std::get_if<ProjectionValue>(&v)) {
    lat = LatticePtr(p->result, &p->result->projected);
  } else {
    FormalContext ctx = std::visit(
        Overloaded{
            [](FormalContext& c) { return std::move(c); },
            [](RelationValue& r) { return relation_context(r.relation, r.scales); },
            [&](auto&) -> FormalContext {
              throw Error(ErrorKind::Usage, "a " + kind_of(v) + " cannot be used as a context",
                          q.span.where());
            },
        },
        v);
    try {
      lat = std::make_shared<const ConceptLattice>(std::move(ctx));
      ++built_;
    } catch (Error& e) {
      e.locate(q.span.where());
      throw;
    }
    if (options_.oracle) {
      const auto diffs = diff_against_naive(*lat);
      if (!diffs.empty()) {
        std::string what = "lattice disagrees with exhaustive enumeration:";
        for (std::size_t i = 0; i < diffs.size() && i < 5; ++i) what += " " + diffs[i] + ";";
        throw Error(ErrorKind::Internal, what, q.span.where());
      }
    }
  }
  memo_.emplace(key, lat);
  return lat;
}

RelationValue Executor::as_relation(const QueryAst& q) {
  Value v = eval(q);
  if (auto* r = std::get_if<RelationValue>(&v)) return std::move(*r);
  throw Error(ErrorKind::Usage, "JOIN needs relations, got a " + kind_of(v), q.span.where());
}

Value Executor::eval_node(const QueryAst& q) {
  using Op = QueryAst::Op;
  switch (q.op) {
    case Op::Ref: {
      if (auto it = catalog_.contexts.find(q.name); it != catalog_.contexts.end()) return it->second;
      if (auto it = catalog_.relations.find(q.name); it != catalog_.relations.end()) {
        auto s = catalog_.scales.find(q.name);
        return RelationValue{it->second, s == catalog_.scales.end() ? ScaleSpecs{} : s->second};
      }
      throw UnknownNameError("unknown context or relation '" + q.name + "'");
    }
    case Op::Build:
      return LatticeValue{as_lattice(q.args.at(0))};
    case Op::Select: {
      auto lat = as_lattice(q.args.at(0));
      return SelectionValue{lat, select(*lat, q.condition)};
    }
    case Op::Project: {
      auto lat = as_lattice(q.args.at(0));
      auto result = std::make_shared<const ProjectionResult>(
          project(*lat, lat->context().attribute_set(q.attributes)));
      return ProjectionValue{lat, std::move(result)};
    }
    case Op::Appose: {
      auto left = as_context(q.args.at(0));
      return apposition(left, as_context(q.args.at(1)));
    }
    case Op::Subpose: {
      auto top = as_context(q.args.at(0));
      return subposition(top, as_context(q.args.at(1)));
    }
    case Op::Glue: {
      auto first = as_context(q.args.at(0));
      return glue(first, as_context(q.args.at(1)));
    }
    case Op::Join: {
      auto r = as_relation(q.args.at(0));
      auto s = as_relation(q.args.at(1));
      RelationValue out{natural_join(r.relation, s.relation), r.scales};
      for (auto& [attribute, spec] : s.scales) out.scales.emplace(attribute, std::move(spec));
      for (auto it = out.scales.begin(); it != out.scales.end();) {
        const auto& key = out.relation.key;
        if (std::find(key.begin(), key.end(), it->first) != key.end())
          it = out.scales.erase(it);
        else
          ++it;
      }
      return out;
    }
    case Op::Generalize: {
      auto ctx = as_context(q.args.at(0));
      auto cover = catalog_.covers.find(q.name);
      if (cover == catalog_.covers.end()) throw UnknownNameError("unknown cover '" + q.name + "'");
      return generalize(ctx, cover->second, {q.mode, catalog_.default_alpha});
    }
    case Op::Approx: {
      auto lat = as_lattice(q.args.at(0));
      const auto& ctx = lat->context();
      PresumedConcept presumed{ctx.object_set(q.objects), ctx.attribute_set(q.attributes)};
      auto result = approx_interval(*lat, presumed);
      return ApproxValue{lat, std::move(presumed), std::move(result)};
    }
  }
  throw InvariantError("unhandled query operator");
}

Value execute(const QueryAst& q, const Catalog& catalog, ExecOptions options) {
  return Executor(catalog, options).run(q);
}

std::string render(const Value& v, Format format) {
  return std::visit(Overloaded{
                        [&](const FormalContext& c) { return write_context(c, format); },
                        [&](const RelationValue& r) { return write_relation(r.relation, format); },
                        [&](const LatticeValue& l) { return write_lattice(*l.lattice, format); },
                        [&](const SelectionValue& s) {
                          return write_selection(*s.lattice, s.result, format);
                        },
                        [&](const ProjectionValue& p) {
                          return write_projection(*p.parent, *p.result, format);
                        },
                        [&](const ApproxValue& a) {
                          return write_approx(*a.lattice, a.presumed, a.result, format);
                        },
                    },
                    v);
}

}  // namespace latql

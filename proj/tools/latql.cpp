// latql: build concept lattices and run lattice queries from the command line.
//
//   latql build <context> [--format text|json|dot] [--oracle]
//   latql query -f <session.json> "<query>" [--format ...] [--oracle]
//   latql export --format dot|json|text (<context> | -f <session.json> "<query>")
//
// Exit codes: 0 success, 1 usage or syntax, 2 data integrity, 3 internal
// invariant violation.

#include <CLI11.hpp>
#include <iostream>
#include <new>

#include "latql/error.hpp"
#include "latql/execute.hpp"
#include "latql/io.hpp"
#include "latql/lattice.hpp"
#include "latql/query.hpp"
#include "latql/render.hpp"
#include "latql/session.hpp"

namespace {

using namespace latql;

std::string build_context(const std::string& path, Format format, bool oracle) {
  const ConceptLattice lat(load_context_file(path));
  if (oracle) {
    const auto diffs = diff_against_naive(lat);
    if (!diffs.empty()) {
      for (const auto& d : diffs) std::cerr << "oracle: " << d << "\n";
      throw InvariantError("lattice of '" + path + "' disagrees with exhaustive enumeration");
    }
  }
  return write_lattice(lat, format);
}

std::string run_query(const std::string& session, const std::string& text, Format format,
                      bool oracle) {
  const Catalog catalog = load_session(session);
  const QueryAst q = parse_query(text);
  return render(execute(q, catalog, {oracle}), format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concept lattice construction and lattice queries"};
  app.require_subcommand(1);

  std::string format_name = "text";
  bool oracle = false;

  auto* build = app.add_subcommand("build", "Build the concept lattice of a context file");
  std::string build_path;
  build->add_option("context", build_path, "Burmeister (.cxt) or CSV file")->required();
  build->add_option("--format", format_name, "text, json or dot");
  build->add_flag("--oracle", oracle, "Cross-check against exhaustive enumeration");

  auto* query = app.add_subcommand("query", "Evaluate a query against a session");
  std::string session;
  std::string query_text;
  query->add_option("-f,--session", session, "Session file (JSON)")->required();
  query->add_option("query", query_text, "Query expression")->required();
  query->add_option("--format", format_name, "text, json or dot");
  query->add_flag("--oracle", oracle, "Cross-check every lattice against exhaustive enumeration");

  auto* exporter = app.add_subcommand("export", "Render a context's lattice or a query result");
  std::string export_format;
  std::string export_session;
  std::string export_target;
  exporter->add_option("--format", export_format, "dot, json or text")->required();
  exporter->add_option("-f,--session", export_session, "Session file; the argument is then a query");
  exporter->add_option("target", export_target, "Context file, or a query with -f")->required();
  exporter->add_flag("--oracle", oracle, "Cross-check against exhaustive enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    std::string out;
    if (*build) {
      out = build_context(build_path, parse_format(format_name), oracle);
    } else if (*query) {
      out = run_query(session, query_text, parse_format(format_name), oracle);
    } else {
      const Format format = parse_format(export_format);
      out = export_session.empty() ? build_context(export_target, format, oracle)
                                   : run_query(export_session, export_target, format, oracle);
    }
    std::cout << out;
    std::cout.flush();
    return 0;
  } catch (const Error& e) {
    std::cerr << "latql: error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "latql: error: out of memory\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "latql: internal error: " << e.what() << "\n";
    return 3;
  }
}

// nielsen: command-line front end over the coincidence invariant modules.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nielsen/errors.hpp"
#include "nielsen/query.hpp"
#include "nielsen/tables.hpp"
#include "nielsen/wecken.hpp"

using namespace nielsen;

namespace {

constexpr int kInputError = 2;
constexpr int kInternalError = 3;

// Rule ids and the overlap assertion are checked before any query runs.
void startup_checks(const tables::FactBase& fb) {
  verify_registry();
  const auto clashes = wecken::rule_overlap_scan(64, 64, fb);
  if (!clashes.empty()) {
    const auto& c = clashes.front();
    throw ConsistencyError("Wecken rules disagree at (m, n) = (" + std::to_string(c.m) + ", " + std::to_string(c.n) +
                           ") for " + std::string(wecken::to_string(c.family)));
  }
}

int print_answer(const query::Answer& a) {
  std::cout << query::render(a);
  return a.error ? a.error->code : 0;
}

query::Answer one_shot(const std::string& family, query::Json payload) {
  query::Query q;
  q.id = family;
  q.family = family;
  q.payload = std::move(payload);
  return query::run_query(q);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coincidence invariants (MC, MCC, Nielsen numbers, Reidemeister number) with rule traces"};
  app.require_subcommand(1);

  std::string query_path;
  auto* query_cmd = app.add_subcommand("query", "Answer one query read from a JSON file");
  query_cmd->add_option("file", query_path, "Query JSON ({id, family, payload})")->required();

  std::string batch_path;
  unsigned threads = 1;
  auto* batch_cmd = app.add_subcommand("batch", "Answer a JSON array of queries, in input order");
  batch_cmd->add_option("file", batch_path, "JSON array of queries")->required();
  batch_cmd->add_option("-j,--threads", threads, "Worker threads (0: one per core)")->capture_default_str();

  long wm = 0, wn = 0;
  std::string wfamily = "Sphere";
  auto* wecken_cmd = app.add_subcommand("wecken", "Decide the Wecken condition for (m, n)");
  wecken_cmd->add_option("-m", wm, "Source sphere dimension")->required();
  wecken_cmd->add_option("-n", wn, "Target dimension")->required();
  wecken_cmd->add_option("--family", wfamily, "Sphere or SphericalSpaceForm")
      ->check(CLI::IsMember({"Sphere", "SphericalSpaceForm"}))
      ->capture_default_str();

  long sr = 0, sk = 0;
  bool soriented = false;
  auto* stiefel_cmd = app.add_subcommand("stiefel", "Selfcoincidence invariants of V(r,k) -> G(r,k)");
  stiefel_cmd->add_option("-r", sr, "Ambient dimension")->required();
  stiefel_cmd->add_option("-k", sk, "Frame length")->required();
  stiefel_cmd->add_flag("--oriented", soriented, "Target the oriented Grassmannian");

  std::string lint_path;
  auto* factbase_cmd = app.add_subcommand("factbase", "Fact-base tools");
  factbase_cmd->require_subcommand(1);
  auto* lint_cmd = factbase_cmd->add_subcommand("lint", "Check a fact-base file");
  lint_cmd->add_option("file", lint_path, "Fact-base JSON")->required();

  auto* rules_cmd = app.add_subcommand("rules", "Print the rule registry as Markdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (lint_cmd->parsed()) {
      std::ifstream in(lint_path, std::ios::binary);
      if (!in) throw InputError(lint_path + ": cannot read file");
      std::stringstream ss;
      ss << in.rdbuf();
      const auto issues = tables::lint_factbase(ss.str());
      for (const auto& i : issues) std::cerr << i.to_string(lint_path) << "\n";
      if (!issues.empty()) return kInputError;
      std::cout << lint_path << ": ok\n";
      return 0;
    }

    if (rules_cmd->parsed()) {
      verify_registry();
      std::cout << render_rules_markdown();
      return 0;
    }

    const tables::FactBase& fb = tables::FactBase::bundled();
    startup_checks(fb);

    if (query_cmd->parsed()) {
      const auto j = query::read_json_file(query_path);
      return print_answer(query::run_query(query::query_from_json(j)));
    }
    if (batch_cmd->parsed()) {
      const auto answers = query::run_batch(query::read_json_file(batch_path), threads, fb);
      std::cout << query::render(answers);
      for (const auto& a : answers)
        if (a.error && a.error->code == kInternalError) return kInternalError;
      return 0;
    }
    if (wecken_cmd->parsed())
      return print_answer(one_shot("wecken", {{"m", wm}, {"n", wn}, {"target_family", wfamily}}));
    if (stiefel_cmd->parsed())
      return print_answer(one_shot("stiefel", {{"r", sr}, {"k", sk}, {"oriented", soriented}}));
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return 0;
}

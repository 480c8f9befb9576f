// missing-why command line: explain, abduce, unravel, serve.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "missing_why/error.hpp"
#include "missing_why/service/http.hpp"
#include "missing_why/service/service.hpp"
#include "missing_why/syntax.hpp"

namespace mw = missing_why;
namespace svc = missing_why::service;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mw::Error(mw::ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw mw::Error(mw::ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

std::optional<mw::Signature> signature_file(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return svc::signature_from_json(nlohmann::json::parse(read_file(path)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explain why an ontology does not entail an axiom"};
  app.require_subcommand(1);

  std::string ontology_path, query, method = "small_model", signature_path, format = "json", out_path;
  int max_classes = 3, limit = 5;
  auto* explain = app.add_subcommand("explain", "counterexample graph or hypotheses for one query");
  explain->add_option("--ontology", ontology_path, "ontology file")->required();
  explain->add_option("--query", query, "missing entailment, e.g. \"SubClassOf(:A :B)\"")->required();
  explain->add_option("--method", method, "small_model, relevant_alpha, relevant_beta, relevant_delta, "
                                          "relevant_deltabar, naive_abduction");
  explain->add_option("--signature", signature_path, "permitted vocabulary file");
  explain->add_option("--max-classes", max_classes, "labels shown per element")->check(CLI::NonNegativeNumber);
  explain->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  explain->add_option("--limit", limit, "hypotheses to return")->check(CLI::PositiveNumber);
  explain->add_option("--out", out_path, "output file (default stdout)");

  std::string missing_path;
  std::vector<std::string> missing_axioms;
  int max_axioms = 1, max_depth = 1;
  auto* abduce = app.add_subcommand("abduce", "hypotheses H over the permitted vocabulary with O ∪ H ⊨ P");
  abduce->add_option("--ontology", ontology_path, "ontology file")->required();
  auto* missing_opt = abduce->add_option("--missing", missing_path, "missing-entailment file {\"missing\": [...]}");
  abduce->add_option("--query", missing_axioms, "missing entailment (repeatable)")->excludes(missing_opt);
  abduce->add_option("--signature", signature_path, "permitted vocabulary file");
  abduce->add_option("--max-axioms", max_axioms, "axioms per hypothesis")->check(CLI::PositiveNumber);
  abduce->add_option("--max-depth", max_depth, "role depth of hypothesis axioms")->check(CLI::NonNegativeNumber);
  abduce->add_option("--limit", limit, "hypotheses to return")->check(CLI::PositiveNumber);
  abduce->add_option("--out", out_path, "output file (default stdout)");

  std::string hypotheses_path;
  int count = 5;
  auto* unravel = app.add_subcommand("unravel", "fixpoint-free approximants of fixpoint hypotheses");
  unravel->add_option("--hypotheses", hypotheses_path, "disjuncts separated by --- lines")->required();
  unravel->add_option("--count", count, "hypotheses to return")->required();
  unravel->add_option("--out", out_path, "output file (default stdout)");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "HTTP API");
  serve->add_option("--port", port, "port (0 picks one)");
  serve->add_option("--host", host, "bind address");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*explain || *abduce) {
      svc::Session session("cli", mw::parse_ontology(read_file(ontology_path)));
      std::vector<mw::Axiom> missing;
      svc::Method m = svc::Method::NaiveAbduction;
      if (*explain) {
        missing.push_back(mw::parse_axiom(query));
        m = svc::parse_method(method);
      } else if (!missing_path.empty()) {
        missing = svc::missing_from_json(nlohmann::json::parse(read_file(missing_path)));
      } else {
        for (const auto& q : missing_axioms) missing.push_back(mw::parse_axiom(q));
      }
      session.set_query(std::move(missing), signature_file(signature_path));
      session.abduction_bounds = {max_axioms, max_depth};
      const auto& result = session.generate(m, limit);
      if (format == "dot" && svc::is_counterexample_method(m))
        write_out(out_path, svc::to_dot(session.graph(max_classes)));
      else
        write_out(out_path, svc::to_json(result, max_classes, session.permitted()).dump(2) + "\n");
    } else if (*unravel) {
      const auto blocks = mw::parse_axiom_blocks(read_file(hypotheses_path));
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& h : mw::abduction::unravel_fixpoints(blocks, count)) {
        nlohmann::ordered_json item = nlohmann::ordered_json::array();
        for (const auto& a : h.axioms) item.push_back(a.text());
        out.push_back(std::move(item));
      }
      write_out(out_path, out.dump(2) + "\n");
    } else if (*serve) {
      svc::ApiServer server;
      const int bound = server.bind(host, port);
      if (bound < 0) throw mw::Error(mw::ErrorCode::InvalidArgument, "cannot bind " + host + ":" + std::to_string(port));
      std::cerr << "listening on " << host << ":" << bound << "\n";
      return server.listen_after_bind() ? 0 : 1;
    }
  } catch (const mw::SyntaxError& e) {
    std::cerr << "error: SyntaxError at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return 1;
  } catch (const mw::Error& e) {
    std::cerr << "error: " << mw::to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: InvalidArgument: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

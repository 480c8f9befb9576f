#pragma once

// Explanation sessions: one working ontology, one query, staged
// disjointnesses and the last explanation result, plus graph export and the
// JSON save formats.
//
// Result-reset rule: edits made through apply_* keep last_result; any other
// ontology edit (edit_add/edit_remove, revert) clears it. Staged
// disjointnesses are not edits.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "missing_why/abduction/abduction.hpp"
#include "missing_why/cancel.hpp"
#include "missing_why/interpretation.hpp"
#include "missing_why/ontology.hpp"
#include "missing_why/relevance/relevance.hpp"
#include "missing_why/tableau/small_model.hpp"

namespace missing_why::service {

enum class Method {
  SmallModel,
  RelevantAlpha,
  RelevantBeta,
  RelevantDelta,
  RelevantDeltaBar,
  NaiveAbduction,
  Unravel,
};

std::string_view to_string(Method method);
// UnknownMethod on anything else.
Method parse_method(std::string_view text);
bool is_counterexample_method(Method method);

struct GraphPayload {
  Interpretation interp;
  std::vector<Axiom> tbox;  // what the model was built from, for label order
  std::optional<relevance::RelevantPart> part;
};

struct HypothesesPayload {
  std::vector<abduction::Hypothesis> hypotheses;
  bool exhausted = false;
};

struct ExplanationResult {
  Method method = Method::SmallModel;
  std::variant<GraphPayload, HypothesesPayload> payload;
  std::vector<std::string> progress_log;
};

struct Support {
  bool supported = true;
  std::string message;  // empty when supported
};

// User-facing refusal messages of check_support.
namespace messages {
inline constexpr std::string_view kNoQuery = "no missing entailment has been entered";
inline constexpr std::string_view kSingleGci = "requires a single subclass axiom";
inline constexpr std::string_view kElBotQuery = "requires EL⊥ class expressions in the query";
inline constexpr std::string_view kElQuery = "requires EL class expressions without owl:Nothing in the query";
inline constexpr std::string_view kElBotOntology = "requires an EL⊥ ontology";
inline constexpr std::string_view kElOntology = "requires an ontology without owl:Nothing or disjointness axioms";
inline constexpr std::string_view kElBotMissing = "requires EL⊥ missing entailments";
inline constexpr std::string_view kNoFixpoints = "requires a fixpoint hypothesis set";
}  // namespace messages

struct GraphNode {
  std::string id;
  std::vector<std::string> labels;
  std::vector<std::string> all_classes;
  bool marked = false;
};

struct GraphEdge {
  std::string source;
  std::string target;
  std::string role;
};

struct GraphDoc {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
};

// Labels per element: its classes in Σ, minus any name with a strictly more
// specific retained name, most specific first (more Σ-subsumers), then by
// name; the first k of them. all_classes lists the survivors and then the
// suppressed names in the same order, so labels is always a prefix. Edges
// keep Σ roles only.
GraphDoc export_graph(const Interpretation& interp, int k, const Signature& sigma, std::span<const Axiom> tbox);
nlohmann::ordered_json to_json(const GraphDoc& doc);
std::string to_dot(const GraphDoc& doc);

// Save files: {"missing":[...]} and {"permitted":{"concepts":...}}.
nlohmann::ordered_json missing_to_json(std::span<const Axiom> missing);
std::vector<Axiom> missing_from_json(const nlohmann::json& doc);
nlohmann::ordered_json signature_to_json(const Signature& sigma);
Signature signature_from_json(const nlohmann::json& doc);

nlohmann::ordered_json to_json(const ExplanationResult& result, int k, const Signature& sigma);

class Session {
 public:
  Session(std::string id, Ontology ontology);

  const std::string& id() const { return id_; }
  const Ontology& ontology() const { return ontology_; }
  const Ontology& baseline() const { return baseline_; }
  int epoch() const { return epoch_; }
  const std::vector<Axiom>& missing() const { return missing_; }
  const std::vector<Axiom>& pending_disjointnesses() const { return pending_; }
  const std::optional<ExplanationResult>& last_result() const { return last_result_; }

  // nullopt stands for the whole ontology vocabulary, resolved at use time.
  void set_query(std::vector<Axiom> missing, std::optional<Signature> permitted = std::nullopt);
  Signature permitted() const;
  void attach_fixpoints(abduction::FixpointHypothesisSet fhs);

  // Syntactic checks only; never runs the reasoner.
  Support check_support(Method method) const;

  // Counterexample methods compute a fresh graph over the TBox. Hypothesis
  // methods extend the current list by page_size items. On any error,
  // including cancellation, last_result is left as it was.
  const ExplanationResult& generate(Method method, int page_size, const CancelToken& cancel = {});
  // Counterexample method over the ontology plus staged disjointnesses.
  const ExplanationResult& recompute(Method method, const CancelToken& cancel = {});

  void add_disjointness(const std::vector<std::string>& names);
  void remove_disjointness(std::size_t index);

  void apply_disjointnesses();
  void apply_hypothesis(std::size_t index);
  void revert();

  // Edits from outside the explanation workflow; they clear last_result.
  AxiomId edit_add(Axiom axiom);
  void edit_remove(AxiomId id);

  // Graph of the last result. NoResult when there is none or it is a
  // hypothesis list.
  GraphDoc graph(int k) const;

  abduction::Bounds abduction_bounds{1, 1};
  abduction::PostprocessOptions postprocess;
  tableau::Budget budget;

 private:
  ExplanationResult explain_graph(Method method, std::span<const Axiom> extra, const CancelToken& cancel) const;
  ExplanationResult explain_hypotheses(Method method, int page_size, const CancelToken& cancel);
  void touched_by_service();

  std::string id_;
  Ontology ontology_;
  Ontology baseline_;
  int epoch_ = 0;
  std::vector<Axiom> missing_;
  std::optional<Signature> permitted_;
  std::optional<abduction::FixpointHypothesisSet> fixpoints_;
  std::vector<Axiom> pending_;
  std::optional<ExplanationResult> last_result_;
  // Full post-processed hypothesis stream for (method, epoch); pages are cut
  // from it.
  std::optional<std::pair<Method, int>> stream_key_;
  std::vector<abduction::Hypothesis> stream_;
};

}  // namespace missing_why::service

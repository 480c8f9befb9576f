#include "missing_why/service/service.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "missing_why/el/reasoner.hpp"
#include "missing_why/error.hpp"
#include "missing_why/syntax.hpp"

namespace missing_why::service {

namespace {

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::SmallModel, "small_model"},
    {Method::RelevantAlpha, "relevant_alpha"},
    {Method::RelevantBeta, "relevant_beta"},
    {Method::RelevantDelta, "relevant_delta"},
    {Method::RelevantDeltaBar, "relevant_deltabar"},
    {Method::NaiveAbduction, "naive_abduction"},
    {Method::Unravel, "unravel"},
};

std::string strip_colon(std::string name) {
  if (!name.empty() && name.front() == ':') name.erase(0, 1);
  return name;
}

relevance::RelevanceMode mode_of(Method method) {
  switch (method) {
    case Method::RelevantBeta: return relevance::RelevanceMode::Beta;
    case Method::RelevantDelta: return relevance::RelevanceMode::Delta;
    case Method::RelevantDeltaBar: return relevance::RelevanceMode::DeltaBar;
    default: return relevance::RelevanceMode::Alpha;
  }
}

bool any_not(std::span<const Axiom> axioms, bool (Axiom::*pred)() const) {
  return std::any_of(axioms.begin(), axioms.end(), [&](const Axiom& a) { return !(a.*pred)(); });
}

}  // namespace

std::string_view to_string(Method method) {
  for (const auto& [m, name] : kMethodNames)
    if (m == method) return name;
  return "?";
}

Method parse_method(std::string_view text) {
  for (const auto& [m, name] : kMethodNames)
    if (name == text) return m;
  throw Error(ErrorCode::UnknownMethod, "unknown method '" + std::string(text) + "'");
}

bool is_counterexample_method(Method method) {
  return method != Method::NaiveAbduction && method != Method::Unravel;
}

GraphDoc export_graph(const Interpretation& interp, int k, const Signature& sigma, std::span<const Axiom> tbox) {
  std::vector<std::string> names(sigma.concepts.begin(), sigma.concepts.end());
  const el::Classification cls(tbox, names);
  auto sigma_subsumers = [&](const std::string& name) {
    const auto& subs = cls.subsumers(name);
    return std::count_if(subs.begin(), subs.end(),
                         [&](const std::string& s) { return s != name && sigma.concepts.contains(s); });
  };
  auto more_specific_first = [&](const std::string& a, const std::string& b) {
    const auto ca = sigma_subsumers(a);
    const auto cb = sigma_subsumers(b);
    return ca != cb ? ca > cb : a < b;
  };

  GraphDoc doc;
  for (std::size_t i = 0; i < interp.elements.size(); ++i) {
    std::vector<std::string> candidates;
    for (const auto& c : interp.elements[i].classes)
      if (sigma.concepts.contains(c)) candidates.push_back(c);
    std::vector<std::string> kept;
    std::vector<std::string> suppressed;
    for (const auto& a : candidates) {
      const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const std::string& b) {
        return b != a && cls.subsumes(b, a) && !cls.subsumes(a, b);
      });
      (dominated ? suppressed : kept).push_back(a);
    }
    std::sort(kept.begin(), kept.end(), more_specific_first);
    std::sort(suppressed.begin(), suppressed.end(), more_specific_first);
    GraphNode node;
    node.id = "e" + std::to_string(i);
    node.labels.assign(kept.begin(), kept.begin() + std::min<std::ptrdiff_t>(std::max(k, 0), std::ssize(kept)));
    node.all_classes = kept;
    node.all_classes.insert(node.all_classes.end(), suppressed.begin(), suppressed.end());
    node.marked = interp.marked.contains(i);
    doc.nodes.push_back(std::move(node));
  }
  for (const auto& e : interp.edges)
    if (sigma.roles.contains(e.role))
      doc.edges.push_back({"e" + std::to_string(e.source), "e" + std::to_string(e.target), e.role});
  return doc;
}

nlohmann::ordered_json to_json(const GraphDoc& doc) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const auto& n : doc.nodes) {
    nlohmann::ordered_json node;
    node["id"] = n.id;
    node["labels"] = n.labels;
    node["allClasses"] = n.all_classes;
    node["marked"] = n.marked;
    nodes.push_back(std::move(node));
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : doc.edges) {
    nlohmann::ordered_json edge;
    edge["source"] = e.source;
    edge["target"] = e.target;
    edge["role"] = e.role;
    edges.push_back(std::move(edge));
  }
  nlohmann::ordered_json out;
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  return out;
}

std::string to_dot(const GraphDoc& doc) {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph counterexample {\n";
  for (const auto& n : doc.nodes) {
    std::string label;
    for (const auto& l : n.labels) label += (label.empty() ? "" : "\\n") + l;
    out << "  " << n.id << " [label=\"";
    for (char c : label) out << (c == '"' ? std::string("\\\"") : std::string(1, c));
    out << "\"" << (n.marked ? ", penwidth=3" : "") << "];\n";
  }
  for (const auto& e : doc.edges) out << "  " << e.source << " -> " << e.target << " [label=" << quoted(e.role) << "];\n";
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json missing_to_json(std::span<const Axiom> missing) {
  nlohmann::ordered_json out;
  out["missing"] = nlohmann::ordered_json::array();
  for (const auto& a : missing) out["missing"].push_back(a.text());
  return out;
}

std::vector<Axiom> missing_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("missing") || !doc["missing"].is_array())
    throw Error(ErrorCode::InvalidArgument, "expected {\"missing\": [axiom strings]}");
  std::vector<Axiom> out;
  for (const auto& a : doc["missing"]) {
    if (!a.is_string()) throw Error(ErrorCode::InvalidArgument, "missing entailments must be strings");
    out.push_back(parse_axiom(a.get<std::string>()));
  }
  return out;
}

nlohmann::ordered_json signature_to_json(const Signature& sigma) {
  nlohmann::ordered_json permitted;
  permitted["concepts"] = sigma.concepts;
  permitted["roles"] = sigma.roles;
  permitted["individuals"] = sigma.individuals;
  nlohmann::ordered_json out;
  out["permitted"] = std::move(permitted);
  return out;
}

Signature signature_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("permitted") || !doc["permitted"].is_object())
    throw Error(ErrorCode::InvalidArgument, "expected {\"permitted\": {...}}");
  const auto& p = doc["permitted"];
  Signature sigma;
  auto read = [&](const char* key, std::set<std::string>& into) {
    if (!p.contains(key)) return;
    if (!p[key].is_array()) throw Error(ErrorCode::InvalidArgument, std::string(key) + " must be an array");
    for (const auto& n : p[key]) {
      if (!n.is_string()) throw Error(ErrorCode::InvalidArgument, std::string(key) + " must hold strings");
      into.insert(strip_colon(n.get<std::string>()));
    }
  };
  read("concepts", sigma.concepts);
  read("roles", sigma.roles);
  read("individuals", sigma.individuals);
  return sigma;
}

nlohmann::ordered_json to_json(const ExplanationResult& result, int k, const Signature& sigma) {
  nlohmann::ordered_json out;
  out["method"] = std::string(to_string(result.method));
  if (const auto* graph = std::get_if<GraphPayload>(&result.payload)) {
    out["kind"] = "graph";
    out["graph"] = to_json(export_graph(graph->interp, k, sigma, graph->tbox));
    if (graph->part && !graph->part->conditions.empty()) {
      out["conditions"] = nlohmann::ordered_json::array();
      for (const auto& c : graph->part->conditions) out["conditions"].push_back(c.text());
    }
  } else {
    const auto& hyps = std::get<HypothesesPayload>(result.payload);
    out["kind"] = "hypotheses";
    out["hypotheses"] = nlohmann::ordered_json::array();
    for (const auto& h : hyps.hypotheses) {
      nlohmann::ordered_json item;
      item["axioms"] = nlohmann::ordered_json::array();
      for (const auto& a : h.axioms) item["axioms"].push_back(a.text());
      item["verified"] = h.verified ? nlohmann::ordered_json(*h.verified) : nlohmann::ordered_json(nullptr);
      out["hypotheses"].push_back(std::move(item));
    }
    out["exhausted"] = hyps.exhausted;
  }
  out["progress"] = result.progress_log;
  return out;
}

Session::Session(std::string id, Ontology ontology)
    : id_(std::move(id)), ontology_(ontology), baseline_(std::move(ontology)) {}

void Session::set_query(std::vector<Axiom> missing, std::optional<Signature> permitted) {
  if (missing.empty()) throw Error(ErrorCode::EmptyQuery, "enter at least one missing entailment");
  missing_ = std::move(missing);
  permitted_ = std::move(permitted);
  last_result_.reset();
  stream_key_.reset();
}

Signature Session::permitted() const { return permitted_ ? *permitted_ : signature_of(ontology_); }

void Session::attach_fixpoints(abduction::FixpointHypothesisSet fhs) {
  fixpoints_ = std::move(fhs);
  stream_key_.reset();
}

Support Session::check_support(Method method) const {
  auto no = [](std::string_view m) { return Support{false, std::string(m)}; };
  if (method == Method::Unravel) return fixpoints_ ? Support{} : no(messages::kNoFixpoints);
  if (missing_.empty()) return no(messages::kNoQuery);
  const auto axioms = ontology_.axioms();
  if (method == Method::NaiveAbduction) {
    if (any_not(missing_, &Axiom::is_el_bot)) return no(messages::kElBotMissing);
    if (any_not(axioms, &Axiom::is_el_bot)) return no(messages::kElBotOntology);
    return {};
  }
  if (missing_.size() != 1 || missing_[0].kind() != AxiomKind::SubClassOf) return no(messages::kSingleGci);
  const Axiom& q = missing_[0];
  const auto tbox = ontology_.tbox();
  if (method == Method::SmallModel) {
    if (!q.is_el_bot()) return no(messages::kElBotQuery);
    if (any_not(tbox, &Axiom::is_el_bot)) return no(messages::kElBotOntology);
    return {};
  }
  if (!q.sub().is_el() || !q.super().is_el()) return no(messages::kElQuery);
  if (any_not(tbox, &Axiom::is_el_bot)) return no(messages::kElBotOntology);
  if (any_not(tbox, &Axiom::is_el)) return no(messages::kElOntology);
  return {};
}

ExplanationResult Session::explain_graph(Method method, std::span<const Axiom> extra,
                                         const CancelToken& cancel) const {
  const Axiom& q = missing_[0];
  std::vector<Axiom> tbox = ontology_.tbox();
  tbox.insert(tbox.end(), extra.begin(), extra.end());
  ExplanationResult result;
  result.method = method;
  result.progress_log.push_back("checking the missing entailment");
  const el::Reasoner reasoner(tbox, cancel);
  if (!extra.empty()) {
    const bool unsat_now = !reasoner.is_consistent() || reasoner.subsumes(q.sub(), Concept::bottom());
    if (unsat_now) {
      const el::Reasoner before(ontology_.tbox(), cancel);
      if (before.is_consistent() && !before.subsumes(q.sub(), Concept::bottom()))
        throw Error(ErrorCode::InconsistentWithDisjointness,
                    "the staged disjointnesses make " + q.sub().text() + " unsatisfiable");
    }
  }
  if (reasoner.entails(q)) throw Error(ErrorCode::AlreadyEntailed, "the ontology entails " + q.text());

  GraphPayload payload;
  payload.tbox = tbox;
  if (method == Method::SmallModel) {
    result.progress_log.push_back("expanding the tableau");
    auto cx = tableau::generate_small_model(tbox, q, cancel, budget);
    if (cx.outcome != tableau::Outcome::Counterexample || !cx.model)
      throw Error(ErrorCode::Internal, "tableau found the query entailed after the reasoner did not");
    payload.interp = std::move(*cx.model);
    result.progress_log.push_back("counterexample with " + std::to_string(cx.stats.individuals) + " elements, " +
                                  std::to_string(cx.stats.reasoner_calls) + " reasoner calls");
  } else {
    const auto mode = mode_of(method);
    result.progress_log.push_back("building the " + std::string(relevance::to_string(mode)) + " part");
    auto part = relevance::extract_relevant_part(tbox, q, mode, cancel);
    payload.interp = part.interp;
    result.progress_log.push_back("relevant part with " + std::to_string(part.interp.elements.size()) + " elements");
    payload.part = std::move(part);
  }
  result.payload = std::move(payload);
  return result;
}

ExplanationResult Session::explain_hypotheses(Method method, int page_size, const CancelToken& cancel) {
  if (page_size < 1) throw Error(ErrorCode::NonPositiveCount, "page size must be positive");
  std::vector<abduction::Hypothesis> shown;
  if (last_result_ && last_result_->method == method)
    if (const auto* h = std::get_if<HypothesesPayload>(&last_result_->payload)) shown = h->hypotheses;

  ExplanationResult result;
  result.method = method;
  std::vector<abduction::Hypothesis> stream;
  bool finite = true;
  if (method == Method::NaiveAbduction) {
    result.progress_log.push_back("checking the missing entailments");
    const el::Reasoner reasoner(ontology_, cancel);
    const auto entailed = reasoner.entails_all(missing_);
    for (std::size_t i = 0; i < missing_.size(); ++i)
      if (entailed[i]) throw Error(ErrorCode::AlreadyEntailed, "the ontology entails " + missing_[i].text());
    if (stream_key_ != std::pair{method, epoch_}) {
      result.progress_log.push_back("enumerating hypotheses");
      auto raw = abduction::naive_abduce(ontology_, missing_, permitted(), abduction_bounds, cancel);
      result.progress_log.push_back("post-processing " + std::to_string(raw.size()) + " hypotheses");
      stream_ = abduction::postprocess_hypotheses(ontology_, std::move(raw), postprocess, cancel);
      stream_key_ = std::pair{method, epoch_};
    }
    stream = stream_;
  } else {
    const int wanted = static_cast<int>(shown.size()) + page_size;
    result.progress_log.push_back("unraveling fixpoints");
    auto raw = abduction::unravel_fixpoints(*fixpoints_, wanted);
    finite = std::ssize(raw) < wanted;
    for (auto& h : raw) {
      const auto v = abduction::verify_hypothesis(ontology_, h, missing_, cancel);
      if (v != abduction::Verification::Unverifiable) h.verified = v == abduction::Verification::Holds;
    }
    stream = abduction::postprocess_hypotheses(ontology_, std::move(raw), postprocess, cancel);
  }

  std::set<std::string> seen;
  for (const auto& h : shown) seen.insert(h.text());
  std::size_t added = 0;
  std::size_t next = 0;
  for (; next < stream.size() && added < static_cast<std::size_t>(page_size); ++next)
    if (seen.insert(stream[next].text()).second) {
      shown.push_back(stream[next]);
      ++added;
    }
  bool rest_seen = true;
  for (; next < stream.size(); ++next) rest_seen = rest_seen && seen.contains(stream[next].text());
  result.progress_log.push_back(std::to_string(added) + " new hypotheses");
  result.payload = HypothesesPayload{std::move(shown), finite && rest_seen};
  return result;
}

const ExplanationResult& Session::generate(Method method, int page_size, const CancelToken& cancel) {
  const auto support = check_support(method);
  if (!support.supported) throw Error(ErrorCode::Unsupported, support.message);
  auto result = is_counterexample_method(method) ? explain_graph(method, {}, cancel)
                                                 : explain_hypotheses(method, page_size, cancel);
  last_result_ = std::move(result);
  return *last_result_;
}

const ExplanationResult& Session::recompute(Method method, const CancelToken& cancel) {
  if (!is_counterexample_method(method))
    throw Error(ErrorCode::InvalidArgument, "recompute needs a counterexample method");
  const auto support = check_support(method);
  if (!support.supported) throw Error(ErrorCode::Unsupported, support.message);
  last_result_ = explain_graph(method, pending_, cancel);
  return *last_result_;
}

void Session::add_disjointness(const std::vector<std::string>& names) {
  std::vector<std::string> clean;
  for (const auto& n : names) {
    auto c = strip_colon(n);
    if (std::find(clean.begin(), clean.end(), c) == clean.end()) clean.push_back(std::move(c));
  }
  if (clean.size() < 2) throw Error(ErrorCode::TooFewNames, "a disjointness needs at least two class names");
  Signature known = signature_of(ontology_);
  known.merge(signature_of(missing_));
  std::vector<Concept> operands;
  for (const auto& n : clean) {
    if (!known.concepts.contains(n)) throw Error(ErrorCode::UnknownName, "unknown class name " + n);
    operands.push_back(Concept::named(n));
  }
  pending_.push_back(Axiom::disjoint(std::move(operands)));
}

void Session::remove_disjointness(std::size_t index) {
  if (index >= pending_.size())
    throw Error(ErrorCode::IndexOutOfRange, "no staged disjointness at index " + std::to_string(index));
  pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(index));
}

void Session::touched_by_service() { ++epoch_; }

void Session::apply_disjointnesses() {
  if (pending_.empty()) throw Error(ErrorCode::NothingToApply, "no staged disjointnesses");
  for (auto& a : pending_) ontology_.add(std::move(a));
  pending_.clear();
  touched_by_service();
}

void Session::apply_hypothesis(std::size_t index) {
  const HypothesesPayload* hyps = last_result_ ? std::get_if<HypothesesPayload>(&last_result_->payload) : nullptr;
  if (!hyps) throw Error(ErrorCode::NothingToApply, "no hypothesis list to apply from");
  if (index >= hyps->hypotheses.size())
    throw Error(ErrorCode::IndexOutOfRange, "no hypothesis at index " + std::to_string(index));
  const auto& h = hyps->hypotheses[index];
  if (!h.is_el_bot()) throw Error(ErrorCode::Unsupported, "only EL⊥ hypotheses can be added to the ontology");
  for (const auto& a : h.axioms)
    if (!ontology_.contains(a)) ontology_.add(a);
  touched_by_service();
}

void Session::revert() {
  ontology_ = baseline_;
  pending_.clear();
  last_result_.reset();
  stream_key_.reset();
  ++epoch_;
}

AxiomId Session::edit_add(Axiom axiom) {
  const auto id = ontology_.add(std::move(axiom));
  ++epoch_;
  last_result_.reset();
  return id;
}

void Session::edit_remove(AxiomId id) {
  if (!ontology_.remove(id)) throw Error(ErrorCode::IndexOutOfRange, "no axiom with id " + std::to_string(id));
  ++epoch_;
  last_result_.reset();
}

GraphDoc Session::graph(int k) const {
  const GraphPayload* g = last_result_ ? std::get_if<GraphPayload>(&last_result_->payload) : nullptr;
  if (!g) throw Error(ErrorCode::NoResult, "no counterexample graph to export");
  return export_graph(g->interp, k, permitted(), g->tbox);
}

}  // namespace missing_why::service

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "missing_why/el/reasoner.hpp"
#include "missing_why/el/saturation.hpp"
#include "missing_why/error.hpp"
#include "missing_why/service/http.hpp"
#include "missing_why/service/service.hpp"
#include "missing_why/syntax.hpp"

namespace mw = missing_why;
namespace svc = missing_why::service;
using mw::Axiom;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string pizza_text() { return read_file(std::string(MISSING_WHY_DATA_DIR) + "/pizza_analogue.ofn"); }

const char* kPizzaQuery = "SubClassOf(:SpicyAnalogue :SpicyTarget)";

svc::Session pizza_session() {
  svc::Session s("t", mw::parse_ontology(pizza_text()));
  s.set_query({mw::parse_axiom(kPizzaQuery)});
  return s;
}

mw::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const mw::Error& e) {
    return e.code();
  }
  return mw::ErrorCode::Internal;
}

const mw::Interpretation& graph_of(const svc::Session& s) {
  return std::get<svc::GraphPayload>(s.last_result()->payload).interp;
}

std::vector<std::string> hypothesis_texts(const svc::ExplanationResult& r) {
  std::vector<std::string> out;
  for (const auto& h : std::get<svc::HypothesesPayload>(r.payload).hypotheses) out.push_back(h.text());
  return out;
}

}  // namespace

TEST(Session, Creation) {
  svc::Session s("a", mw::parse_ontology("SubClassOf(:A :B)\nSubClassOf(:B :C)\nClassAssertion(:A :x)\n"));
  EXPECT_EQ(s.epoch(), 0);
  EXPECT_EQ(s.ontology().size(), 3u);
  EXPECT_EQ(s.ontology().serialize(), s.baseline().serialize());
  svc::Session empty("b", mw::parse_ontology(""));
  EXPECT_TRUE(empty.ontology().empty());
  try {
    mw::parse_ontology("SubClassOf(:A :B)\nSubClassOf(:A :B :C)\n");
    FAIL();
  } catch (const mw::SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Session, QueryAndVocabulary) {
  svc::Session s("a", mw::parse_ontology("SubClassOf(:A ObjectSomeValuesFrom(:r :B))\n"));
  EXPECT_EQ(code_of([&] { s.set_query({}); }), mw::ErrorCode::EmptyQuery);
  s.set_query({mw::parse_axiom("SubClassOf(:A :B)")});
  EXPECT_EQ(s.permitted(), mw::signature_of(s.ontology()));
  s.set_query({mw::parse_axiom("SubClassOf(:A :B)")}, mw::Signature{{"A", "Fresh"}, {}, {}});
  EXPECT_TRUE(s.permitted().concepts.contains("Fresh"));
  EXPECT_EQ(s.check_support(svc::Method::NaiveAbduction).supported, true);
}

TEST(Session, SupportMessagesWithoutReasoning) {
  auto s = pizza_session();
  const auto before = mw::el::saturation_runs();
  EXPECT_TRUE(s.check_support(svc::Method::SmallModel).supported);
  const auto relevant = s.check_support(svc::Method::RelevantAlpha);
  EXPECT_FALSE(relevant.supported);
  EXPECT_EQ(relevant.message, svc::messages::kElOntology);
  EXPECT_EQ(s.check_support(svc::Method::Unravel).message, svc::messages::kNoFixpoints);
  s.set_query({mw::parse_axiom(kPizzaQuery), mw::parse_axiom("SubClassOf(:Pizza :Food)")});
  EXPECT_EQ(s.check_support(svc::Method::SmallModel).message, "requires a single subclass axiom");
  EXPECT_TRUE(s.check_support(svc::Method::NaiveAbduction).supported);
  s.set_query({mw::parse_axiom("DisjointClasses(:A :B)")});
  EXPECT_EQ(s.check_support(svc::Method::RelevantAlpha).message, "requires a single subclass axiom");

  svc::Session el("e", mw::parse_ontology("SubClassOf(:A :B)\n"));
  EXPECT_EQ(el.check_support(svc::Method::SmallModel).message, svc::messages::kNoQuery);
  el.set_query({mw::parse_axiom("SubClassOf(:A owl:Nothing)")});
  EXPECT_EQ(el.check_support(svc::Method::RelevantBeta).message, svc::messages::kElQuery);
  EXPECT_TRUE(el.check_support(svc::Method::SmallModel).supported);
  el.set_query({mw::parse_extended_axiom("SubClassOf(:A ObjectUnionOf(:B :C))")});
  EXPECT_EQ(el.check_support(svc::Method::SmallModel).message, svc::messages::kElBotQuery);
  EXPECT_EQ(el.check_support(svc::Method::NaiveAbduction).message, svc::messages::kElBotMissing);
  EXPECT_EQ(mw::el::saturation_runs(), before);
}

TEST(Session, PizzaSmallModelCoLabelsNonDisjointToppings) {
  auto s = pizza_session();
  s.generate(svc::Method::SmallModel, 1);
  const auto& m = graph_of(s);
  ASSERT_EQ(m.marked.size(), 1u);
  EXPECT_TRUE(m.elements[*m.marked.begin()].classes.contains("SpicyAnalogue"));
  const auto tbox = s.ontology().tbox();
  for (const auto& a : tbox) EXPECT_TRUE(mw::model_satisfies(m, a)) << a.text();
  int co_labeled = 0;
  for (const auto& e : m.elements)
    if (e.classes.contains("MozzarellaT") && e.classes.contains("TomatoT")) ++co_labeled;
  EXPECT_EQ(co_labeled, 1);
  EXPECT_FALSE(mw::el::Reasoner(tbox).entails(mw::parse_axiom("DisjointClasses(:MozzarellaT :TomatoT)")));
  const std::string golden = read_file(std::string(MISSING_WHY_GOLDEN_DIR) + "/pizza_small_model.json");
  EXPECT_EQ(svc::to_json(s.graph(3)).dump(2) + "\n", golden);
}

TEST(Session, RecomputeSplitsCoLabeledElement) {
  auto s = pizza_session();
  s.generate(svc::Method::SmallModel, 1);
  const auto first = svc::to_json(s.graph(3)).dump();
  s.recompute(svc::Method::SmallModel);
  EXPECT_EQ(svc::to_json(s.graph(3)).dump(), first);  // nothing staged

  const std::string before = s.ontology().serialize();
  s.add_disjointness({"CheeseT", ":VegT"});
  ASSERT_EQ(s.pending_disjointnesses().size(), 1u);
  EXPECT_TRUE(s.last_result().has_value());  // staging is not an edit
  s.recompute(svc::Method::SmallModel);
  EXPECT_EQ(s.ontology().serialize(), before);

  const auto& m = graph_of(s);
  auto tbox = s.ontology().tbox();
  tbox.push_back(s.pending_disjointnesses()[0]);
  for (const auto& a : tbox) EXPECT_TRUE(mw::model_satisfies(m, a)) << a.text();
  bool mozzarella = false, tomato = false;
  for (const auto& e : m.elements) {
    EXPECT_FALSE(e.classes.contains("MozzarellaT") && e.classes.contains("TomatoT"));
    mozzarella = mozzarella || e.classes.contains("MozzarellaT");
    tomato = tomato || e.classes.contains("TomatoT");
  }
  EXPECT_TRUE(mozzarella && tomato);
  const std::string golden = read_file(std::string(MISSING_WHY_GOLDEN_DIR) + "/pizza_recompute.json");
  EXPECT_EQ(svc::to_json(s.graph(3)).dump(2) + "\n", golden);
}

TEST(Session, RecomputeReportsUnsatisfiableLhs) {
  svc::Session s("u", mw::parse_ontology("SubClassOf(:A :B)\nSubClassOf(:A :C)\n"));
  s.set_query({mw::parse_axiom("SubClassOf(:A :D)")});
  s.add_disjointness({"B", "C"});
  EXPECT_EQ(code_of([&] { s.recompute(svc::Method::SmallModel); }), mw::ErrorCode::InconsistentWithDisjointness);
  EXPECT_FALSE(s.last_result().has_value());
}

TEST(Session, DisjointnessErrors) {
  auto s = pizza_session();
  EXPECT_EQ(code_of([&] { s.remove_disjointness(0); }), mw::ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { s.add_disjointness({"CheeseT"}); }), mw::ErrorCode::TooFewNames);
  EXPECT_EQ(code_of([&] { s.add_disjointness({"CheeseT", "CheeseT"}); }), mw::ErrorCode::TooFewNames);
  EXPECT_EQ(code_of([&] { s.add_disjointness({"CheeseT", "Nope"}); }), mw::ErrorCode::UnknownName);
  EXPECT_EQ(code_of([&] { s.apply_disjointnesses(); }), mw::ErrorCode::NothingToApply);
  s.add_disjointness({"CheeseT", "VegT"});
  s.remove_disjointness(0);
  EXPECT_TRUE(s.pending_disjointnesses().empty());
}

TEST(Session, EntailedQueryIsRefused) {
  svc::Session s("e", mw::parse_ontology("SubClassOf(:A :B)\n"));
  s.set_query({mw::parse_axiom("SubClassOf(:A :B)")});
  EXPECT_EQ(code_of([&] { s.generate(svc::Method::SmallModel, 1); }), mw::ErrorCode::AlreadyEntailed);
  EXPECT_EQ(code_of([&] { s.generate(svc::Method::NaiveAbduction, 1); }), mw::ErrorCode::AlreadyEntailed);
  s.set_query({mw::parse_axiom("SubClassOf(:A :C)"), mw::parse_axiom("SubClassOf(:A :B)")});
  EXPECT_EQ(code_of([&] { s.generate(svc::Method::NaiveAbduction, 1); }), mw::ErrorCode::AlreadyEntailed);
}

TEST(Session, HypothesisPaging) {
  // A must occur in the ontology: vocabulary ALL is the ontology's signature.
  const char* text = "SubClassOf(:A :G)\nSubClassOf(:B :D)\nSubClassOf(:C :D)\nSubClassOf(:E :D)\nSubClassOf(:F :D)\n";
  auto make = [&] {
    svc::Session s("p", mw::parse_ontology(text));
    s.set_query({mw::parse_axiom("SubClassOf(:A :D)")});
    s.abduction_bounds = {1, 0};
    return s;
  };
  auto paged = make();
  const auto page1 = hypothesis_texts(paged.generate(svc::Method::NaiveAbduction, 2));
  ASSERT_EQ(page1.size(), 2u);
  const auto& r2 = paged.generate(svc::Method::NaiveAbduction, 2);
  const auto page2 = hypothesis_texts(r2);
  auto whole = make();
  const auto all = hypothesis_texts(whole.generate(svc::Method::NaiveAbduction, 4));
  EXPECT_EQ(page2, all);
  EXPECT_EQ(std::vector<std::string>(page2.begin(), page2.begin() + 2), page1);
  const auto page3 = hypothesis_texts(paged.generate(svc::Method::NaiveAbduction, 10));
  EXPECT_TRUE(std::get<svc::HypothesesPayload>(paged.last_result()->payload).exhausted);
  EXPECT_GE(page3.size(), 4u);
}

TEST(Session, ApplyHypothesisKeepsResultAndEntails) {
  svc::Session s("h", mw::parse_ontology("SubClassOf(:B :C)\nSubClassOf(:A :E)\n"));
  s.set_query({mw::parse_axiom("SubClassOf(:A :C)")});
  s.abduction_bounds = {1, 0};
  s.generate(svc::Method::NaiveAbduction, 3);
  const auto result_before = hypothesis_texts(*s.last_result());
  EXPECT_EQ(code_of([&] { s.apply_hypothesis(99); }), mw::ErrorCode::IndexOutOfRange);
  s.apply_hypothesis(0);
  EXPECT_EQ(s.epoch(), 1);
  ASSERT_TRUE(s.last_result().has_value());
  EXPECT_EQ(hypothesis_texts(*s.last_result()), result_before);
  EXPECT_TRUE(mw::el::entails(s.ontology(), mw::parse_axiom("SubClassOf(:A :C)")));
}

TEST(Session, ApplyDisjointnessesAppends) {
  auto s = pizza_session();
  s.generate(svc::Method::SmallModel, 1);
  const std::string base = s.baseline().serialize();
  s.add_disjointness({"CheeseT", "VegT"});
  s.apply_disjointnesses();
  EXPECT_EQ(s.ontology().serialize(), base + "DisjointClasses(:CheeseT :VegT)\n");
  EXPECT_TRUE(s.pending_disjointnesses().empty());
  EXPECT_TRUE(s.last_result().has_value());
  s.revert();
  EXPECT_EQ(s.ontology().serialize(), base);
  EXPECT_FALSE(s.last_result().has_value());
}

TEST(Session, ResultResetRule) {
  auto s = pizza_session();
  s.generate(svc::Method::SmallModel, 1);
  const int epoch = s.epoch();
  const auto id = s.edit_add(mw::parse_axiom("SubClassOf(:JalapenoT :HotT)"));
  EXPECT_GT(s.epoch(), epoch);
  EXPECT_FALSE(s.last_result().has_value());
  s.edit_remove(id);
  EXPECT_EQ(s.ontology().serialize(), s.baseline().serialize());
  EXPECT_EQ(code_of([&] { s.edit_remove(id); }), mw::ErrorCode::IndexOutOfRange);
  s.set_query({mw::parse_axiom(kPizzaQuery)});
  s.generate(svc::Method::SmallModel, 1);
  s.set_query({mw::parse_axiom(kPizzaQuery)});
  EXPECT_FALSE(s.last_result().has_value());
}

TEST(Session, ApplyRevertRoundTripOnRandomSequences) {
  std::mt19937 rng(7);
  const std::vector<std::vector<std::string>> pairs{
      {"CheeseT", "VegT"}, {"HotT", "MeatT"}, {"PepperT", "TomatoT"}, {"Food", "HotT"}};
  for (int round = 0; round < 20; ++round) {
    auto s = pizza_session();
    const std::string base = s.baseline().serialize();
    for (int step = 0; step < 6; ++step) {
      switch (rng() % 4) {
        case 0: s.add_disjointness(pairs[rng() % pairs.size()]); break;
        case 1:
          if (!s.pending_disjointnesses().empty()) s.apply_disjointnesses();
          break;
        case 2: s.edit_add(mw::parse_axiom("SubClassOf(:JalapenoT :HotT)")); break;
        default:
          if (!s.pending_disjointnesses().empty()) s.remove_disjointness(0);
      }
    }
    s.revert();
    ASSERT_EQ(s.ontology().serialize(), base) << round;
    ASSERT_TRUE(s.pending_disjointnesses().empty());
  }
}

TEST(Session, CancelLeavesResultUntouched) {
  auto s = pizza_session();
  s.generate(svc::Method::SmallModel, 1);
  const auto before = svc::to_json(s.graph(3)).dump();
  mw::CancelToken cancel;
  cancel.cancel();
  s.add_disjointness({"CheeseT", "VegT"});
  EXPECT_EQ(code_of([&] { s.recompute(svc::Method::SmallModel, cancel); }), mw::ErrorCode::Cancelled);
  EXPECT_EQ(svc::to_json(s.graph(3)).dump(), before);
}

TEST(Session, UnravelThroughService) {
  svc::Session s("f", mw::parse_ontology(""));
  s.attach_fixpoints(mw::parse_axiom_blocks(
      "ClassAssertion(Mu(?X ObjectSomeValuesFrom(ObjectInverseOf(:infected) ObjectUnionOf(ObjectOneOf(:p1) ?X))) :p2)\n"
      "---\n"
      "ClassAssertion(:EbolaBat :p2)\n"));
  s.set_query({mw::parse_axiom("ClassAssertion(:Sick :p2)")});
  const auto& r = s.generate(svc::Method::Unravel, 3);
  const auto& hyps = std::get<svc::HypothesesPayload>(r.payload).hypotheses;
  ASSERT_EQ(hyps.size(), 3u);
  EXPECT_EQ(hyps[0].text(), "ClassAssertion(:EbolaBat :p2)");
  EXPECT_EQ(hyps[0].verified, std::optional<bool>(false));
  EXPECT_FALSE(hyps[1].verified.has_value());
  EXPECT_FALSE(std::get<svc::HypothesesPayload>(r.payload).exhausted);
}

TEST(ExportGraph, MostSpecificLabelFirst) {
  mw::Interpretation m;
  m.elements.push_back({mw::OriginKind::Individual, "x", {"Pizza", "Food", "SpicyAnalogue"}});
  m.marked = {0};
  const auto tbox = std::vector<Axiom>{mw::parse_axiom("SubClassOf(:SpicyAnalogue :Pizza)"),
                                       mw::parse_axiom("SubClassOf(:Pizza :Food)")};
  const mw::Signature sigma{{"Pizza", "Food", "SpicyAnalogue"}, {}, {}};
  auto doc = svc::export_graph(m, 1, sigma, tbox);
  EXPECT_EQ(doc.nodes[0].labels, (std::vector<std::string>{"SpicyAnalogue"}));
  EXPECT_EQ(doc.nodes[0].all_classes, (std::vector<std::string>{"SpicyAnalogue", "Pizza", "Food"}));
  doc = svc::export_graph(m, 0, sigma, tbox);
  EXPECT_TRUE(doc.nodes[0].labels.empty());
  EXPECT_EQ(doc.nodes[0].all_classes.size(), 3u);
  // Outside Σ nothing is shown.
  doc = svc::export_graph(m, 3, mw::Signature{{"Food"}, {}, {}}, tbox);
  EXPECT_EQ(doc.nodes[0].labels, (std::vector<std::string>{"Food"}));
}

TEST(ExportGraph, RolesOutsideSignatureAreDropped) {
  mw::Interpretation m;
  m.elements = {{mw::OriginKind::Individual, "x", {"A"}}, {mw::OriginKind::Individual, "y", {"B"}}};
  m.edges = {{0, "r", 1}, {0, "s", 1}};
  m.marked = {0};
  auto doc = svc::export_graph(m, 2, mw::Signature{{"A", "B"}, {"s"}, {}}, {});
  ASSERT_EQ(doc.edges.size(), 1u);
  EXPECT_EQ(doc.edges[0].role, "s");
}

TEST(ExportGraph, LabelsFormAnAntichainAndPrefix) {
  auto s = pizza_session();
  s.generate(svc::Method::SmallModel, 1);
  const auto tbox = s.ontology().tbox();
  const mw::el::Reasoner reasoner(tbox);
  for (int k = 0; k <= 6; ++k) {
    const auto doc = s.graph(k);
    for (const auto& n : doc.nodes) {
      ASSERT_LE(n.labels.size(), static_cast<std::size_t>(k));
      ASSERT_TRUE(std::equal(n.labels.begin(), n.labels.end(), n.all_classes.begin()));
      for (const auto& a : n.labels)
        for (const auto& b : n.labels)
          if (a != b)
            ASSERT_FALSE(reasoner.subsumes(mw::Concept::named(a), mw::Concept::named(b))) << a << " " << b;
    }
  }
}

TEST(GraphDocJson, BitExactSchema) {
  svc::GraphDoc doc;
  doc.nodes.push_back({"e0", {"A"}, {"A", "B"}, true});
  doc.nodes.push_back({"e1", {}, {}, false});
  doc.edges.push_back({"e0", "e1", "r"});
  EXPECT_EQ(svc::to_json(doc).dump(),
            R"({"nodes":[{"id":"e0","labels":["A"],"allClasses":["A","B"],"marked":true},)"
            R"({"id":"e1","labels":[],"allClasses":[],"marked":false}],)"
            R"("edges":[{"source":"e0","target":"e1","role":"r"}]})");
}

TEST(GraphDocDot, RootIsBold) {
  svc::GraphDoc doc;
  doc.nodes.push_back({"e0", {"A", "B"}, {"A", "B"}, true});
  doc.nodes.push_back({"e1", {"C"}, {"C"}, false});
  doc.edges.push_back({"e0", "e1", "r"});
  EXPECT_EQ(svc::to_dot(doc),
            "digraph counterexample {\n"
            "  e0 [label=\"A\\nB\", penwidth=3];\n"
            "  e1 [label=\"C\"];\n"
            "  e0 -> e1 [label=\"r\"];\n"
            "}\n");
}

TEST(SaveFiles, RoundTrip) {
  const std::vector<Axiom> missing{mw::parse_axiom("SubClassOf(:A :B)"), mw::parse_axiom("ClassAssertion(:C :a)")};
  const auto doc = svc::missing_to_json(missing);
  EXPECT_EQ(doc.dump(), R"j({"missing":["SubClassOf(:A :B)","ClassAssertion(:C :a)"]})j");
  EXPECT_EQ(svc::missing_from_json(json::parse(doc.dump())), missing);
  const mw::Signature sigma{{"A", "B"}, {"r"}, {"a"}};
  const auto sdoc = svc::signature_to_json(sigma);
  EXPECT_EQ(sdoc.dump(), R"({"permitted":{"concepts":["A","B"],"roles":["r"],"individuals":["a"]}})");
  EXPECT_EQ(svc::signature_from_json(json::parse(sdoc.dump())), sigma);
  EXPECT_EQ(code_of([] { svc::missing_from_json(json::parse("{}")); }), mw::ErrorCode::InvalidArgument);
}

TEST(Methods, NamesRoundTrip) {
  for (auto m : {svc::Method::SmallModel, svc::Method::RelevantAlpha, svc::Method::RelevantBeta,
                 svc::Method::RelevantDelta, svc::Method::RelevantDeltaBar, svc::Method::NaiveAbduction,
                 svc::Method::Unravel})
    EXPECT_EQ(svc::parse_method(svc::to_string(m)), m);
  EXPECT_EQ(code_of([] { svc::parse_method("nope"); }), mw::ErrorCode::UnknownMethod);
}

class Http : public ::testing::Test {
 protected:
  void SetUp() override {
    port_ = server_.bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
  }
  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }
  httplib::Client client() { return httplib::Client("127.0.0.1", port_); }

  svc::ApiServer server_;
  int port_ = 0;
  std::thread thread_;
};

TEST_F(Http, DisjointnessLoop) {
  auto cli = client();
  auto res = cli.Post("/sessions", json{{"ontology", pizza_text()}}.dump(), "application/json");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 201);
  const std::string id = json::parse(res->body)["id"];
  const std::string base = "/sessions/" + id;

  res = cli.Get((base + "/support?method=small_model").c_str());
  ASSERT_TRUE(res);
  EXPECT_EQ(json::parse(res->body)["message"], std::string(svc::messages::kNoQuery));

  res = cli.Put((base + "/query").c_str(), json{{"missing", {kPizzaQuery}}}.dump(), "application/json");
  ASSERT_EQ(res->status, 200);
  res = cli.Get((base + "/support?method=small_model").c_str());
  EXPECT_EQ(json::parse(res->body)["supported"], true);

  res = cli.Post((base + "/explain").c_str(), json{{"method", "small_model"}}.dump(), "application/json");
  ASSERT_EQ(res->status, 200) << res->body;
  EXPECT_EQ(json::parse(res->body)["kind"], "graph");

  res = cli.Post((base + "/disjointnesses").c_str(), json{{"names", {"CheeseT", "VegT"}}}.dump(), "application/json");
  EXPECT_EQ(json::parse(res->body)["pending"].size(), 1u);
  res = cli.Post((base + "/recompute").c_str(), json{{"method", "small_model"}}.dump(), "application/json");
  ASSERT_EQ(res->status, 200) << res->body;

  res = cli.Get((base + "/graph?k=3").c_str());
  ASSERT_EQ(res->status, 200);
  EXPECT_EQ(res->body, nlohmann::ordered_json::parse(read_file(std::string(MISSING_WHY_GOLDEN_DIR) + "/pizza_recompute.json")).dump());
  res = cli.Get((base + "/graph?k=1&format=dot").c_str());
  EXPECT_NE(json::parse(res->body)["dot"].get<std::string>().find("penwidth=3"), std::string::npos);

  res = cli.Delete((base + "/disjointnesses/5").c_str());
  EXPECT_EQ(res->status, 400);
  EXPECT_EQ(json::parse(res->body)["error"]["code"], "IndexOutOfRange");

  res = cli.Post((base + "/apply").c_str(), json{{"what", "disjointnesses"}}.dump(), "application/json");
  ASSERT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["hasResult"], true);
  res = cli.Post((base + "/revert").c_str(), "", "application/json");
  EXPECT_EQ(json::parse(res->body)["ontology"], mw::parse_ontology(pizza_text()).serialize());

  res = cli.Post((base + "/cancel").c_str(), "", "application/json");
  EXPECT_EQ(res->status, 200);
  res = cli.Get("/sessions/nope/graph");
  EXPECT_EQ(res->status, 404);
  EXPECT_EQ(json::parse(res->body)["error"]["code"], "UnknownSession");
}

TEST_F(Http, SyntaxErrorsCarryPosition) {
  auto cli = client();
  auto res = cli.Post("/sessions", json{{"ontology", "SubClassOf(:A :B)\nSubClassOf(:A :B :C)\n"}}.dump(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  const auto err = json::parse(res->body)["error"];
  EXPECT_EQ(err["code"], "SyntaxError");
  EXPECT_EQ(err["line"], 2);
}

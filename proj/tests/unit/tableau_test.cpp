#include <gtest/gtest.h>

#include "generators.hpp"
#include "missing_why/el/reasoner.hpp"
#include "missing_why/error.hpp"
#include "missing_why/syntax.hpp"
#include "missing_why/tableau/small_model.hpp"

namespace mw = missing_why;
namespace tb = missing_why::tableau;
using mw::Axiom;
using mw::Concept;

namespace {

std::vector<Axiom> axioms(std::initializer_list<const char*> lines) {
  std::vector<Axiom> out;
  for (const char* l : lines) out.push_back(mw::parse_axiom(l));
  return out;
}

std::string trace_text(const std::vector<tb::TraceEntry>& trace) {
  std::string out;
  for (const auto& e : trace) {
    out += std::string(tb::to_string(e.rule)) + ":";
    for (const auto& a : e.added) out += " " + a.text();
    out += "\n";
  }
  return out;
}

}  // namespace

TEST(SmallModel, EmptyTBox) {
  auto r = tb::generate_small_model({}, mw::parse_axiom("SubClassOf(:A :B)"));
  ASSERT_EQ(r.outcome, tb::Outcome::Counterexample);
  ASSERT_TRUE(r.model);
  ASSERT_EQ(r.model->elements.size(), 1u);
  EXPECT_EQ(r.model->elements[0].classes, (std::set<std::string>{"A"}));
  EXPECT_EQ(r.model->marked, (std::set<mw::ElementId>{0}));
  EXPECT_TRUE(r.model->edges.empty());
}

TEST(SmallModel, ReusesRootAsItsOwnSuccessor) {
  auto tbox = axioms({"SubClassOf(:A ObjectSomeValuesFrom(:r :A))"});
  // Independent admissibility check of the reuse: the ABox with r(a,a) is
  // consistent and does not make a an instance of the goal.
  auto probe = tbox;
  probe.push_back(mw::parse_axiom("ClassAssertion(:A :a)"));
  probe.push_back(mw::parse_axiom("ObjectPropertyAssertion(:r :a :a)"));
  ASSERT_TRUE(mw::el::Reasoner(probe).is_consistent());
  ASSERT_FALSE(mw::el::Reasoner(probe).entails(mw::parse_axiom("ClassAssertion(:B :a)")));

  auto r = tb::generate_small_model(tbox, mw::parse_axiom("SubClassOf(:A :B)"));
  ASSERT_EQ(r.outcome, tb::Outcome::Counterexample);
  ASSERT_EQ(r.model->elements.size(), 1u);
  EXPECT_EQ(r.model->edges, (std::set<mw::RoleEdge>{{0, "r", 0}}));
  EXPECT_TRUE(mw::model_satisfies(*r.model, tbox[0]));
}

TEST(SmallModel, InconsistentReuseForcesFreshSuccessor) {
  auto tbox = axioms({"SubClassOf(:A ObjectSomeValuesFrom(:r :B))", "SubClassOf(:B :C)",
                      "SubClassOf(ObjectIntersectionOf(:A :C) owl:Nothing)"});
  auto probe = tbox;
  probe.push_back(mw::parse_axiom("ClassAssertion(:A :a)"));
  probe.push_back(mw::parse_axiom("ObjectPropertyAssertion(:r :a :a)"));
  probe.push_back(mw::parse_axiom("ClassAssertion(:B :a)"));
  ASSERT_FALSE(mw::el::Reasoner(probe).is_consistent());

  auto r = tb::generate_small_model(tbox, mw::parse_axiom("SubClassOf(:A :C)"));
  ASSERT_EQ(r.outcome, tb::Outcome::Counterexample);
  ASSERT_EQ(r.model->elements.size(), 2u);
  EXPECT_EQ(r.model->elements[0].classes, (std::set<std::string>{"A"}));
  EXPECT_EQ(r.model->elements[1].classes, (std::set<std::string>{"B", "C"}));
  EXPECT_EQ(r.model->edges, (std::set<mw::RoleEdge>{{0, "r", 1}}));
  for (const auto& a : tbox) EXPECT_TRUE(mw::model_satisfies(*r.model, a));
}

TEST(SmallModel, Entailed) {
  auto r = tb::generate_small_model(axioms({"SubClassOf(:A :B)"}), mw::parse_axiom("SubClassOf(:A :B)"));
  EXPECT_EQ(r.outcome, tb::Outcome::Entailed);
  EXPECT_FALSE(r.model);
}

TEST(SmallModel, EntailedWithCyclicTBoxTerminates) {
  auto tbox = axioms({"SubClassOf(:A ObjectSomeValuesFrom(:r :A))", "SubClassOf(:A :B)"});
  EXPECT_EQ(tb::generate_small_model(tbox, mw::parse_axiom("SubClassOf(:A :B)")).outcome, tb::Outcome::Entailed);
}

TEST(SmallModel, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const mw::Error& e) {
      return e.code();
    }
    return mw::ErrorCode::Internal;
  };
  EXPECT_EQ(code([] {
              tb::generate_small_model(axioms({"SubClassOf(:A owl:Nothing)"}), mw::parse_axiom("SubClassOf(:A :B)"));
            }),
            mw::ErrorCode::InconsistentInput);
  EXPECT_EQ(code([] { tb::generate_small_model({}, mw::parse_axiom("ClassAssertion(:A :a)")); }),
            mw::ErrorCode::InvalidArgument);
  mw::CancelToken token;
  token.cancel();
  EXPECT_EQ(code([&] { tb::generate_small_model({}, mw::parse_axiom("SubClassOf(:A :B)"), token); }),
            mw::ErrorCode::Cancelled);
  tb::Budget tiny;
  tiny.max_steps = 1;
  EXPECT_EQ(code([&] {
              tb::generate_small_model(axioms({"SubClassOf(:A ObjectSomeValuesFrom(:r :B))"}),
                                       mw::parse_axiom("SubClassOf(:A :C)"), {}, tiny);
            }),
            mw::ErrorCode::StepBudgetExceeded);
}

TEST(ExpandOnce, ConjunctionRule) {
  auto state = tb::initial_state({}, mw::parse_axiom("SubClassOf(ObjectIntersectionOf(:A :B) :X)"));
  auto rule = tb::tableau_expand_once(state);
  ASSERT_EQ(rule, tb::Rule::Conjunction);
  ASSERT_EQ(state.trace.back().added.size(), 1u);
  EXPECT_EQ(state.trace.back().added[0].text(), "ClassAssertion(:A :a*)");
}

TEST(ExpandOnce, Exists1AfterReuse) {
  auto state = tb::initial_state({}, mw::parse_axiom("SubClassOf(ObjectSomeValuesFrom(:r :B) :X)"));
  ASSERT_EQ(tb::tableau_expand_once(state), tb::Rule::Exists2);
  EXPECT_EQ(state.individuals.size(), 1u);
  ASSERT_TRUE(state.contains(mw::parse_axiom("ObjectPropertyAssertion(:r :a* :a*)")));
  ASSERT_EQ(tb::tableau_expand_once(state), tb::Rule::Exists1);
  EXPECT_EQ(state.trace.back().added[0].text(), "ClassAssertion(ObjectSomeValuesFrom(:r owl:Thing) :a*)");
}

TEST(ExpandOnce, ReuseThatEntailsGoalCreatesFreshIndividual) {
  auto tbox = axioms({"SubClassOf(:A ObjectSomeValuesFrom(:r :B))", "SubClassOf(ObjectSomeValuesFrom(:r :A) :D)"});
  auto probe = tbox;
  probe.push_back(mw::parse_axiom("ClassAssertion(:A :a)"));
  probe.push_back(mw::parse_axiom("ObjectPropertyAssertion(:r :a :a)"));
  probe.push_back(mw::parse_axiom("ClassAssertion(:B :a)"));
  ASSERT_TRUE(mw::el::Reasoner(probe).entails(mw::parse_axiom("ClassAssertion(:D :a)")));

  auto state = tb::initial_state(tbox, mw::parse_axiom("SubClassOf(:A :D)"));
  while (auto rule = tb::tableau_expand_once(state))
    if (*rule == tb::Rule::Exists2) break;
  EXPECT_EQ(state.individuals, (std::vector<std::string>{"a*", "d1"}));
  EXPECT_TRUE(state.contains(mw::parse_axiom("ObjectPropertyAssertion(:r :a* :d1)")));
}

TEST(Induce, RequiresSaturation) {
  auto state = tb::initial_state({}, mw::parse_axiom("SubClassOf(ObjectIntersectionOf(:A :B) :X)"));
  EXPECT_THROW(tb::induce_interpretation(state), mw::Error);
}

TEST(Induce, SingleElementAndReservedNamesStripped) {
  auto state = tb::initial_state(axioms({"SubClassOf(:A ObjectSomeValuesFrom(:r ObjectIntersectionOf(:B :C)))"}),
                                 mw::parse_axiom("SubClassOf(:A :Z)"));
  while (tb::tableau_expand_once(state)) {
  }
  auto m = tb::induce_interpretation(state);
  bool saw_fresh = false;
  for (const auto& a : state.assertions)
    if (a.kind() == mw::AxiomKind::ClassAssertion && a.class_expr().kind() == mw::ConceptKind::Name &&
        mw::is_reserved_name(a.class_expr().name()))
      saw_fresh = true;
  EXPECT_TRUE(saw_fresh);
  // a* is reused as its own successor, so it also carries B and C.
  ASSERT_EQ(m.elements.size(), 1u);
  EXPECT_EQ(m.elements[0].classes, (std::set<std::string>{"A", "B", "C"}));
}

TEST(SmallModel, Deterministic) {
  mw::testing::Family family;
  family.allow_abox = false;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    mw::testing::Generator gen(seed, family);
    auto tbox = gen.tbox();
    auto q = gen.gci();
    try {
      auto a = tb::generate_small_model(tbox, q);
      auto b = tb::generate_small_model(tbox, q);
      ASSERT_EQ(trace_text(a.trace), trace_text(b.trace));
      ASSERT_EQ(a.model, b.model);
    } catch (const mw::Error& e) {
      ASSERT_EQ(e.code(), mw::ErrorCode::InconsistentInput);
    }
  }
}

// Executable restatements of the correctness lemmas on random instances.
TEST(SmallModel, AgreesWithReasonerOnRandomInstances) {
  mw::testing::Family family;
  family.allow_abox = false;
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 300; ++seed) {
    mw::testing::Generator gen(seed, family);
    auto tbox = gen.tbox();
    auto q = gen.gci();
    mw::el::Reasoner reasoner(tbox);
    if (!reasoner.is_consistent() || reasoner.subsumes(q.sub(), Concept::bottom())) continue;
    auto r = tb::generate_small_model(tbox, q);
    ASSERT_EQ(r.outcome == tb::Outcome::Entailed, reasoner.entails(q)) << "seed " << seed;
    if (r.model) {
      for (const auto& a : tbox) ASSERT_TRUE(mw::model_satisfies(*r.model, a)) << "seed " << seed << " " << a.text();
      const auto root = *r.model->marked.begin();
      ASSERT_TRUE(mw::extension(*r.model, q.sub())[root]) << "seed " << seed;
      ASSERT_FALSE(mw::extension(*r.model, q.super())[root]) << "seed " << seed;
    }
    ++checked;
  }
}

TEST(SmallModel, EveryStepPreservesConsistency) {
  mw::testing::Family family;
  family.allow_abox = false;
  int checked = 0;
  for (std::uint64_t seed = 1000; checked < 60; ++seed) {
    mw::testing::Generator gen(seed, family);
    auto tbox = gen.tbox();
    auto q = gen.gci();
    mw::el::Reasoner reasoner(tbox);
    if (!reasoner.is_consistent() || reasoner.subsumes(q.sub(), Concept::bottom())) continue;
    auto state = tb::initial_state(tbox, q);
    std::size_t before = state.assertions.size();
    while (!state.goal_reached() && tb::tableau_expand_once(state)) {
      ASSERT_GE(state.assertions.size(), before);
      before = state.assertions.size();
      std::vector<Axiom> all = state.tbox_axioms;
      all.insert(all.end(), state.assertions.begin(), state.assertions.end());
      ASSERT_TRUE(mw::el::Reasoner(all).is_consistent()) << "seed " << seed;
    }
    ++checked;
  }
}

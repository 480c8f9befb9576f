#include <gtest/gtest.h>

#include <deque>

#include "generators.hpp"
#include "missing_why/el/reasoner.hpp"
#include "missing_why/error.hpp"
#include "missing_why/relevance/relevance.hpp"
#include "missing_why/syntax.hpp"

namespace mw = missing_why;
namespace rel = missing_why::relevance;
using mw::Axiom;
using mw::Concept;

namespace {

std::vector<Axiom> axioms(std::initializer_list<const char*> lines) {
  std::vector<Axiom> out;
  for (const char* l : lines) out.push_back(mw::parse_axiom(l));
  return out;
}

std::set<std::string> origins(const mw::Interpretation& m) {
  std::set<std::string> out;
  for (const auto& e : m.elements) out.insert(e.origin);
  return out;
}

// Breadth-first reachability written against the raw edge set.
std::set<std::string> reachable_origins(const mw::Interpretation& m, mw::ElementId start) {
  std::set<mw::ElementId> seen{start};
  std::deque<mw::ElementId> queue{start};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (const auto& e : m.edges)
      if (e.source == x && seen.insert(e.target).second) queue.push_back(e.target);
  }
  std::set<std::string> out;
  for (auto id : seen) out.insert(m.elements[id].origin);
  return out;
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST(Relevance, AlphaFollowsRequiredSuccessors) {
  auto tbox = axioms({"SubClassOf(:A ObjectSomeValuesFrom(:r :B))"});
  auto part = rel::extract_relevant_part(tbox, mw::parse_axiom("SubClassOf(:A ObjectSomeValuesFrom(:r :C))"),
                                         rel::RelevanceMode::Alpha);
  EXPECT_EQ(origins(part.interp), (std::set<std::string>{":A", ":B"}));
  const auto a = *part.interp.find_origin(":A");
  const auto b = *part.interp.find_origin(":B");
  EXPECT_EQ(part.witness, a);
  EXPECT_EQ(part.interp.edges, (std::set<mw::RoleEdge>{{a, "r", b}}));
  EXPECT_FALSE(part.contrast);
  EXPECT_EQ(part.interp.marked, (std::set<mw::ElementId>{a}));
}

TEST(Relevance, BetaAddsContrastElement) {
  auto tbox = axioms({"SubClassOf(:A ObjectSomeValuesFrom(:r :B))"});
  auto part = rel::extract_relevant_part(tbox, mw::parse_axiom("SubClassOf(:A ObjectSomeValuesFrom(:r :C))"),
                                         rel::RelevanceMode::Beta);
  EXPECT_EQ(origins(part.interp), (std::set<std::string>{":A", ":B", ":C", "ObjectSomeValuesFrom(:r :C)"}));
  ASSERT_TRUE(part.contrast);
  const auto& m = part.interp;
  EXPECT_EQ(m.elements[*part.contrast].origin, "ObjectSomeValuesFrom(:r :C)");
  EXPECT_TRUE(m.edges.contains({*part.contrast, "r", *m.find_origin(":C")}));
  EXPECT_EQ(m.elements[part.witness].origin, ":A");
}

TEST(Relevance, EmptyTBoxAlpha) {
  auto part = rel::extract_relevant_part({}, mw::parse_axiom("SubClassOf(:A :B)"), rel::RelevanceMode::Alpha);
  ASSERT_EQ(part.interp.elements.size(), 1u);
  EXPECT_EQ(part.interp.elements[0].classes, (std::set<std::string>{"A"}));
}

TEST(Relevance, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const mw::Error& e) {
      return e.code();
    }
    return mw::ErrorCode::Internal;
  };
  EXPECT_EQ(code([] {
              rel::extract_relevant_part(axioms({"SubClassOf(:A :B)"}), mw::parse_axiom("SubClassOf(:A :B)"),
                                         rel::RelevanceMode::Alpha);
            }),
            mw::ErrorCode::IsEntailed);
  EXPECT_EQ(code([] {
              rel::extract_relevant_part(axioms({"DisjointClasses(:A :C)"}), mw::parse_axiom("SubClassOf(:A :B)"),
                                         rel::RelevanceMode::Beta);
            }),
            mw::ErrorCode::BottomInTBox);
}

TEST(Contrasting, NamesOnly) {
  auto tbox = axioms({"SubClassOf(:D :E1)", "SubClassOf(:C owl:Thing)"});
  auto out = rel::contrasting_conditions(tbox, Concept::named("C"), Concept::named("D"));
  std::vector<std::string> texts;
  for (const auto& e : out) texts.push_back(e.text());
  EXPECT_EQ(texts, (std::vector<std::string>{":D", ":E1"}));
}

TEST(Contrasting, EmptyTBox) {
  auto out = rel::contrasting_conditions({}, Concept::named("A"), Concept::named("B"));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].text(), ":B");
}

TEST(Contrasting, RandomConditionsMeetDefinition) {
  mw::testing::Family family;
  family.allow_bottom = false;
  family.allow_abox = false;
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 100; ++seed) {
    mw::testing::Generator gen(seed, family);
    auto tbox = gen.tbox();
    auto q = gen.gci();
    mw::el::Reasoner reasoner(tbox);
    if (reasoner.entails(q)) continue;
    auto out = rel::contrasting_conditions(tbox, q.sub(), q.super());
    for (const auto& e : out) {
      ASSERT_TRUE(reasoner.subsumes(q.super(), e)) << seed;
      ASSERT_FALSE(reasoner.subsumes(q.sub(), e)) << seed;
      const Concept g = rel::generalize_condition(tbox, q.sub(), e);
      ASSERT_TRUE(reasoner.subsumes(e, g)) << seed;
      ASSERT_FALSE(reasoner.subsumes(q.sub(), g)) << seed;
    }
    for (std::size_t i = 1; i < out.size(); ++i)
      ASSERT_LE(out[i - 1].role_depth(), out[i].role_depth());
    ++checked;
  }
}

TEST(Generalize, PaperExample) {
  auto tbox = axioms({"SubClassOf(:D ObjectSomeValuesFrom(:r ObjectSomeValuesFrom(:r ObjectSomeValuesFrom(:r :F))))"});
  Concept e = mw::parse_concept("ObjectSomeValuesFrom(:r ObjectSomeValuesFrom(:r ObjectSomeValuesFrom(:r :F)))");
  ASSERT_FALSE(mw::el::Reasoner(tbox).subsumes(Concept::named("C"), mw::parse_concept("ObjectSomeValuesFrom(:r owl:Thing)")));
  EXPECT_EQ(rel::generalize_condition(tbox, Concept::named("C"), e).text(), "ObjectSomeValuesFrom(:r owl:Thing)");
}

TEST(Generalize, NameUnchanged) {
  EXPECT_EQ(rel::generalize_condition({}, Concept::named("C"), Concept::named("B")).text(), ":B");
}

TEST(Generalize, KeepsFillerWhenTruncationIsEntailed) {
  auto tbox = axioms({"SubClassOf(:C ObjectSomeValuesFrom(:r :G))"});
  Concept e = mw::parse_concept("ObjectSomeValuesFrom(:r :F)");
  mw::el::Reasoner reasoner(tbox);
  ASSERT_TRUE(reasoner.subsumes(Concept::named("C"), mw::parse_concept("ObjectSomeValuesFrom(:r owl:Thing)")));
  ASSERT_FALSE(reasoner.subsumes(Concept::named("C"), e));
  EXPECT_EQ(rel::generalize_condition(tbox, Concept::named("C"), e).text(), e.text());
}

TEST(Generalize, EntailedConditionIsAnError) {
  auto tbox = axioms({"SubClassOf(:C :B)"});
  EXPECT_THROW(rel::generalize_condition(tbox, Concept::named("C"), Concept::named("B")), mw::Error);
}

TEST(Relevance, RefinementChainOnRandomInstances) {
  mw::testing::Family family;
  family.allow_bottom = false;
  family.allow_abox = false;
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 150; ++seed) {
    mw::testing::Generator gen(seed, family);
    auto tbox = gen.tbox();
    auto q = gen.gci();
    if (mw::el::Reasoner(tbox).entails(q)) continue;
    std::map<rel::RelevanceMode, rel::RelevantPart> parts;
    for (auto mode : {rel::RelevanceMode::Alpha, rel::RelevanceMode::Beta, rel::RelevanceMode::Delta,
                      rel::RelevanceMode::DeltaBar})
      parts[mode] = rel::extract_relevant_part(tbox, q, mode);
    const auto alpha = origins(parts[rel::RelevanceMode::Alpha].interp);
    const auto beta = origins(parts[rel::RelevanceMode::Beta].interp);
    const auto delta = origins(parts[rel::RelevanceMode::Delta].interp);
    const auto delta_bar = origins(parts[rel::RelevanceMode::DeltaBar].interp);
    ASSERT_TRUE(subset(alpha, beta)) << seed;
    ASSERT_TRUE(subset(delta, beta)) << seed;
    ASSERT_TRUE(subset(delta_bar, delta)) << seed;

    // Witness against the full model seeded with [C, D].
    const std::vector<Concept> seeds{q.sub(), q.super()};
    const auto full = mw::el::canonical_model(tbox, seeds);
    const auto dc = *full.find_origin(q.sub().text());
    ASSERT_TRUE(mw::extension(full, q.sub())[dc]) << seed;
    ASSERT_FALSE(mw::extension(full, q.super())[dc]) << seed;
    const std::vector<Concept> c_only{q.sub()};
    const auto alpha_model = mw::el::canonical_model(tbox, c_only);
    ASSERT_EQ(alpha, reachable_origins(alpha_model, *alpha_model.find_origin(q.sub().text()))) << seed;
    for (auto& [mode, part] : parts) {
      ASSERT_EQ(part.interp.elements[part.witness].origin, q.sub().text());
      ASSERT_FALSE(mw::extension(part.interp, q.super())[part.witness]) << seed;
    }
    ++checked;
  }
}

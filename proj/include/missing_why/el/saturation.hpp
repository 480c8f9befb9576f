#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "missing_why/cancel.hpp"
#include "missing_why/el/normalize.hpp"

namespace missing_why::el {

// Completion-rule closure of a normalized EL⊥ TBox.
//
// One context per atom; S(A) holds every atom B with T ⊨ A ⊑ B (⊥ in S(A)
// marks A unsatisfiable). Rules:
//   CR1  B ∈ S(A), B ⊑ C                 ⇒ C ∈ S(A)
//   CR2  B1, B2 ∈ S(A), B1 ⊓ B2 ⊑ C       ⇒ C ∈ S(A)
//   CR3  B ∈ S(A), B ⊑ ∃r.C              ⇒ A →r C (C gets a context)
//   CR4  A →r B, B' ∈ S(B), ∃r.B' ⊑ C    ⇒ C ∈ S(A)
//   CR5  A →r B, ⊥ ∈ S(B)                ⇒ ⊥ ∈ S(A)
// The closure is the least fixpoint, built once in the constructor; the
// object is immutable afterwards.
class Saturation {
 public:
  Saturation(const NormalizedTBox& tbox, std::span<const Concept> contexts,
             const CancelToken& cancel = {});

  bool has_context(const Concept& atom) const;
  // T ⊨ sub ⊑ super, for atoms. `sub` must have a context.
  bool subsumes(const Concept& sub, const Concept& super) const;
  bool unsatisfiable(const Concept& atom) const;
  // Every atom name in S(atom) (⊤/⊥ excluded), sorted.
  std::vector<std::string> subsumer_names(const Concept& atom) const;
  // Role links A →r B derived by CR3, as (role, target atom) pairs.
  std::vector<std::pair<std::string, Concept>> links(const Concept& atom) const;

  std::size_t rule_applications() const { return applications_; }

 private:
  int atom_id(const Concept& atom);
  int role_id(const std::string& role);
  void ensure_context(int atom);
  void add(int context, int atom);
  void link(int context, int role, int target);
  void process(int context, int atom);
  int lookup(const Concept& atom) const;

  std::unordered_map<std::string, int> atom_index_;
  std::vector<Concept> atoms_;
  std::unordered_map<std::string, int> role_index_;
  std::vector<std::string> role_names_;

  std::vector<std::vector<int>> told_;
  std::vector<std::vector<std::pair<int, int>>> conj_;
  std::vector<std::vector<std::pair<int, int>>> exists_right_;
  std::unordered_map<std::uint64_t, std::vector<int>> exists_left_;

  std::vector<bool> has_context_;
  std::vector<std::vector<char>> member_;
  std::vector<std::vector<int>> subsumers_;
  std::vector<std::vector<std::pair<int, int>>> predecessors_;
  std::vector<std::vector<std::pair<int, int>>> successors_;
  std::vector<std::pair<int, int>> queue_;
  std::size_t applications_ = 0;
};

// Number of Saturation objects constructed in this process. Instrumentation
// for tests that assert a code path performs no reasoning.
std::uint64_t saturation_runs();

}  // namespace missing_why::el

#include "missing_why/el/saturation.hpp"

#include <algorithm>
#include <atomic>

#include "missing_why/error.hpp"

namespace missing_why::el {

namespace {

std::atomic<std::uint64_t> g_runs{0};

constexpr int kTop = 0;
constexpr int kBottom = 1;

std::uint64_t key(int role, int atom) {
  return (static_cast<std::uint64_t>(role) << 32) | static_cast<std::uint32_t>(atom);
}

}  // namespace

std::uint64_t saturation_runs() { return g_runs.load(); }

int Saturation::atom_id(const Concept& atom) {
  auto [it, inserted] = atom_index_.try_emplace(atom.text(), static_cast<int>(atoms_.size()));
  if (inserted) atoms_.push_back(atom);
  return it->second;
}

int Saturation::role_id(const std::string& role) {
  auto [it, inserted] = role_index_.try_emplace(role, static_cast<int>(role_names_.size()));
  if (inserted) role_names_.push_back(role);
  return it->second;
}

int Saturation::lookup(const Concept& atom) const {
  auto it = atom_index_.find(atom.text());
  return it == atom_index_.end() ? -1 : it->second;
}

Saturation::Saturation(const NormalizedTBox& tbox, std::span<const Concept> contexts,
                       const CancelToken& cancel) {
  ++g_runs;
  atom_id(Concept::top());
  atom_id(Concept::bottom());
  for (const auto& a : tbox.axioms) {
    atom_id(a.lhs);
    atom_id(a.lhs2);
    atom_id(a.rhs);
    if (!a.role.empty()) role_id(a.role);
  }
  for (const auto& c : contexts) {
    if (!c.is_atomic()) throw Error(ErrorCode::Internal, "saturation context must be atomic: " + c.text());
    atom_id(c);
  }

  const std::size_t n = atoms_.size();
  told_.resize(n);
  conj_.resize(n);
  exists_right_.resize(n);
  has_context_.assign(n, false);
  member_.resize(n);
  subsumers_.resize(n);
  predecessors_.resize(n);
  successors_.resize(n);

  for (const auto& a : tbox.axioms) {
    const int lhs = atom_index_.at(a.lhs.text());
    const int rhs = atom_index_.at(a.rhs.text());
    switch (a.shape) {
      case NormalShape::Subsumption: told_[lhs].push_back(rhs); break;
      case NormalShape::Conjunction: {
        const int lhs2 = atom_index_.at(a.lhs2.text());
        conj_[lhs].emplace_back(lhs2, rhs);
        conj_[lhs2].emplace_back(lhs, rhs);
        break;
      }
      case NormalShape::ExistsRight: exists_right_[lhs].emplace_back(role_index_.at(a.role), rhs); break;
      case NormalShape::ExistsLeft: exists_left_[key(role_index_.at(a.role), lhs)].push_back(rhs); break;
    }
  }

  ensure_context(kTop);
  for (const auto& c : contexts) ensure_context(atom_index_.at(c.text()));

  std::size_t head = 0;
  while (head < queue_.size()) {
    if ((head & 0xff) == 0) cancel.throw_if_cancelled();
    auto [context, atom] = queue_[head++];
    process(context, atom);
  }
  queue_.clear();
  queue_.shrink_to_fit();
}

void Saturation::ensure_context(int atom) {
  if (has_context_[atom]) return;
  has_context_[atom] = true;
  member_[atom].assign(atoms_.size(), 0);
  add(atom, atom);
  add(atom, kTop);
}

void Saturation::add(int context, int atom) {
  auto& row = member_[context];
  if (row[atom]) return;
  row[atom] = 1;
  subsumers_[context].push_back(atom);
  queue_.emplace_back(context, atom);
  ++applications_;
}

void Saturation::link(int context, int role, int target) {
  auto& succ = successors_[context];
  if (std::find(succ.begin(), succ.end(), std::pair{role, target}) != succ.end()) return;
  succ.emplace_back(role, target);
  ensure_context(target);
  predecessors_[target].emplace_back(role, context);
  ++applications_;
  for (std::size_t i = 0; i < subsumers_[target].size(); ++i) {
    const int b = subsumers_[target][i];
    if (auto it = exists_left_.find(key(role, b)); it != exists_left_.end())
      for (int c : it->second) add(context, c);
  }
  if (member_[target][kBottom]) add(context, kBottom);
}

void Saturation::process(int context, int atom) {
  for (int c : told_[atom]) add(context, c);
  for (auto [other, c] : conj_[atom])
    if (member_[context][other]) add(context, c);
  for (auto [role, target] : exists_right_[atom]) link(context, role, target);
  for (std::size_t i = 0; i < predecessors_[context].size(); ++i) {
    auto [role, pred] = predecessors_[context][i];
    if (auto it = exists_left_.find(key(role, atom)); it != exists_left_.end())
      for (int c : it->second) add(pred, c);
    if (atom == kBottom) add(pred, kBottom);
  }
}

bool Saturation::has_context(const Concept& atom) const {
  const int id = lookup(atom);
  return id >= 0 && has_context_[id];
}

bool Saturation::subsumes(const Concept& sub, const Concept& super) const {
  const int s = lookup(sub);
  if (s < 0 || !has_context_[s]) throw Error(ErrorCode::Internal, "no saturation context for " + sub.text());
  if (member_[s][kBottom]) return true;
  if (super.kind() == ConceptKind::Top) return true;
  const int t = lookup(super);
  return t >= 0 && member_[s][t];
}

bool Saturation::unsatisfiable(const Concept& atom) const {
  return subsumes(atom, Concept::bottom());
}

std::vector<std::string> Saturation::subsumer_names(const Concept& atom) const {
  const int s = lookup(atom);
  if (s < 0 || !has_context_[s]) throw Error(ErrorCode::Internal, "no saturation context for " + atom.text());
  std::vector<std::string> out;
  for (int b : subsumers_[s])
    if (atoms_[b].kind() == ConceptKind::Name) out.push_back(atoms_[b].name());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::string, Concept>> Saturation::links(const Concept& atom) const {
  const int s = lookup(atom);
  std::vector<std::pair<std::string, Concept>> out;
  if (s < 0 || !has_context_[s]) return out;
  for (auto [role, target] : successors_[s]) out.emplace_back(role_names_[role], atoms_[target]);
  return out;
}

}  // namespace missing_why::el

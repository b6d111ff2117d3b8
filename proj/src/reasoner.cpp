#include "elhcf/reasoner.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace elhcf {

namespace {

struct Edge {
  int role;
  int node;
};

}  // namespace

struct Reasoner::Index {
  NormalizedTBox nt;
  std::size_t num_nodes = 0;
  std::vector<std::vector<bool>> has;    // node -> name -> present
  std::vector<std::vector<int>> labels;  // node -> names in insertion order
  std::vector<std::vector<Edge>> out;
  std::vector<std::vector<Edge>> in;
  std::unordered_set<std::uint64_t> edge_keys;

  struct Event {
    bool is_edge;
    int node;
    int a;  // label, or role for edges
    int target;
  };
  std::deque<Event> work;

  // Concept node of name a is node a; individual i is node num_names + i.
  int concept_node(int a) const { return a; }
  int individual_node(std::size_t i) const { return static_cast<int>(nt.num_names + i); }

  void add_label(int n, int a) {
    if (has[n][a]) return;
    has[n][a] = true;
    labels[n].push_back(a);
    work.push_back({false, n, a, 0});
  }

  void add_edge(int n, int r, int m) {
    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 40) ^
                              (static_cast<std::uint64_t>(r) << 20) ^ static_cast<std::uint64_t>(m);
    if (!edge_keys.insert(key).second) return;
    out[n].push_back({r, m});
    in[m].push_back({r, n});
    work.push_back({true, n, r, m});
  }

  void on_label(int n, int a) {
    for (int b : nt.told[a]) add_label(n, b);
    for (const auto& c : nt.conj[a]) {
      if (has[n][c.other]) add_label(n, c.result);
    }
    for (const auto& e : nt.exists_rhs[a]) add_edge(n, e.role, concept_node(e.name));
    for (const auto& e : nt.exists_lhs[a]) {
      for (std::size_t k = 0; k < in[n].size(); ++k) {
        const Edge pred = in[n][k];
        if (nt.roles.subsumes(pred.role, e.role)) add_label(pred.node, e.name);
      }
    }
  }

  void on_edge(int n, int r, int m) {
    for (std::size_t k = 0; k < labels[m].size(); ++k) {
      const int a = labels[m][k];
      for (const auto& e : nt.exists_lhs[a]) {
        if (nt.roles.subsumes(r, e.role)) add_label(n, e.name);
      }
    }
  }

  void saturate() {
    while (!work.empty()) {
      const Event ev = work.front();
      work.pop_front();
      if (ev.is_edge) {
        on_edge(ev.node, ev.a, ev.target);
      } else {
        on_label(ev.node, ev.a);
      }
    }
  }

  bool holds(int node, const Concept& c, const Signature& sig) const;
};

bool Reasoner::Index::holds(int node, const Concept& c, const Signature& sig) const {
  switch (c.kind()) {
    case ConceptKind::kTop:
      return true;
    case ConceptKind::kAtomic: {
      const auto id = sig.lookup(SymbolKind::kConcept, c.name());
      return id && has[node][id->id + 1];
    }
    case ConceptKind::kExistential: {
      const auto r = sig.lookup(SymbolKind::kRole, c.role());
      if (!r) return false;
      for (const auto& e : out[node]) {
        if (nt.roles.subsumes(e.role, static_cast<int>(r->id)) && holds(e.node, c.filler(), sig)) {
          return true;
        }
      }
      return false;
    }
    case ConceptKind::kIntersection:
      return std::all_of(c.children().begin(), c.children().end(),
                         [&](const Concept& part) { return holds(node, part, sig); });
  }
  return false;
}

Reasoner::Reasoner(const KnowledgeBase& kb) : kb_(kb), index_(std::make_unique<Index>()) {
  Index& ix = *index_;
  const Signature& sig = kb_.signature();
  ix.nt = normalize(kb_.tbox(), sig);
  const std::size_t num_names = ix.nt.num_names;
  ix.num_nodes = num_names + sig.individuals().size();
  ix.has.assign(ix.num_nodes, std::vector<bool>(num_names, false));
  ix.labels.resize(ix.num_nodes);
  ix.out.resize(ix.num_nodes);
  ix.in.resize(ix.num_nodes);

  for (std::size_t a = 0; a < num_names; ++a) {
    ix.add_label(ix.concept_node(static_cast<int>(a)), 0);
    ix.add_label(ix.concept_node(static_cast<int>(a)), static_cast<int>(a));
  }
  for (std::size_t i = 0; i < sig.individuals().size(); ++i) ix.add_label(ix.individual_node(i), 0);
  for (const auto& a : kb_.abox()) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      const auto i = sig.lookup(SymbolKind::kIndividual, ca->individual)->id;
      const auto c = sig.lookup(SymbolKind::kConcept, ca->name)->id;
      ix.add_label(ix.individual_node(i), static_cast<int>(c) + 1);
    } else {
      const auto& ra = std::get<RoleAssertion>(a);
      ix.add_edge(ix.individual_node(sig.lookup(SymbolKind::kIndividual, ra.subject)->id),
                  static_cast<int>(sig.lookup(SymbolKind::kRole, ra.role)->id),
                  ix.individual_node(sig.lookup(SymbolKind::kIndividual, ra.object)->id));
    }
  }
  ix.saturate();
}

Reasoner::~Reasoner() = default;
Reasoner::Reasoner(Reasoner&&) noexcept = default;
Reasoner& Reasoner::operator=(Reasoner&&) noexcept = default;

const NormalizedTBox& Reasoner::normalized() const { return index_->nt; }

bool Reasoner::instance_check(const Concept& c, std::string_view x) const {
  kb_.require_individual(x);
  const auto i = kb_.signature().lookup(SymbolKind::kIndividual, x)->id;
  return index_->holds(index_->individual_node(i), c, kb_.signature());
}

namespace {

// Saturated canonical tree of a query concept, built on top of the read-only
// index. Names and roles unknown to the KB get ids past the KB's tables so
// that they only ever match themselves.
class QueryModel {
 public:
  QueryModel(const NormalizedTBox& nt, const Signature& sig,
             const std::vector<std::vector<bool>>& core_has,
             const std::vector<std::vector<int>>& core_labels,
             const std::vector<std::vector<Edge>>& core_out)
      : nt_(nt), sig_(sig), core_has_(core_has), core_labels_(core_labels), core_out_(core_out) {}

  // Returns the query node representing c.
  int build(const Concept& c) {
    Node node;
    node.labels.insert(0);
    for (const auto& part : c.conjuncts()) {
      if (part.is_atomic()) {
        node.labels.insert(name_id(part.name()));
      } else if (part.is_existential()) {
        const int child = build(part.filler());
        node.edges.push_back({role_id(part.role()), child, false});
      }
    }
    nodes_.push_back(std::move(node));
    const int q = static_cast<int>(nodes_.size()) - 1;
    close(q);
    return q;
  }

  bool holds(int q, const Concept& c) const {
    const Node& node = nodes_[q];
    switch (c.kind()) {
      case ConceptKind::kTop:
        return true;
      case ConceptKind::kAtomic:
        return node.labels.count(name_id(c.name())) > 0;
      case ConceptKind::kExistential: {
        const int r = role_id(c.role());
        for (const auto& e : node.edges) {
          if (!nt_.roles.subsumes(e.role, r)) continue;
          if (e.core ? core_holds(e.target, c.filler()) : holds(e.target, c.filler())) return true;
        }
        return false;
      }
      case ConceptKind::kIntersection:
        return std::all_of(c.children().begin(), c.children().end(),
                           [&](const Concept& part) { return holds(q, part); });
    }
    return false;
  }

 private:
  struct QEdge {
    int role;
    int target;
    bool core;  // target is a node of the saturated index
  };
  struct Node {
    std::set<int> labels;
    std::vector<QEdge> edges;
  };

  int name_id(const std::string& name) const {
    if (auto id = sig_.lookup(SymbolKind::kConcept, name)) return static_cast<int>(id->id) + 1;
    auto [it, _] = unknown_names_.try_emplace(
        name, static_cast<int>(nt_.num_names + unknown_names_.size()));
    return it->second;
  }

  int role_id(const std::string& role) const {
    if (auto id = sig_.lookup(SymbolKind::kRole, role)) return static_cast<int>(id->id);
    auto [it, _] = unknown_roles_.try_emplace(
        role, static_cast<int>(nt_.roles.size() + unknown_roles_.size()));
    return it->second;
  }

  bool known(int a) const { return a >= 0 && static_cast<std::size_t>(a) < nt_.num_names; }

  const std::vector<int>& target_labels(const QEdge& e, std::vector<int>& scratch) const {
    if (e.core) return core_labels_[e.target];
    scratch.assign(nodes_[e.target].labels.begin(), nodes_[e.target].labels.end());
    return scratch;
  }

  // Local fixpoint at q; successors are already saturated.
  void close(int q) {
    std::vector<int> pending(nodes_[q].labels.begin(), nodes_[q].labels.end());
    std::size_t edges_done = 0;
    std::vector<int> scratch;
    auto add = [&](int b) {
      if (nodes_[q].labels.insert(b).second) pending.push_back(b);
    };
    while (!pending.empty() || edges_done < nodes_[q].edges.size()) {
      while (edges_done < nodes_[q].edges.size()) {
        const QEdge e = nodes_[q].edges[edges_done++];
        for (int a : target_labels(e, scratch)) {
          if (!known(a)) continue;
          for (const auto& ex : nt_.exists_lhs[a]) {
            if (nt_.roles.subsumes(e.role, ex.role)) add(ex.name);
          }
        }
      }
      if (pending.empty()) continue;
      const int a = pending.back();
      pending.pop_back();
      if (!known(a)) continue;
      for (int b : nt_.told[a]) add(b);
      for (const auto& c : nt_.conj[a]) {
        if (nodes_[q].labels.count(c.other)) add(c.result);
      }
      for (const auto& ex : nt_.exists_rhs[a]) nodes_[q].edges.push_back({ex.role, ex.name, true});
      // Labels that feed ∃r.A ⊑ B live on successors and are handled per edge.
    }
  }

  bool core_holds(int node, const Concept& c) const {
    switch (c.kind()) {
      case ConceptKind::kTop:
        return true;
      case ConceptKind::kAtomic: {
        const int a = name_id(c.name());
        return known(a) && core_has_[node][a];
      }
      case ConceptKind::kExistential: {
        const int r = role_id(c.role());
        for (const auto& e : core_out_[node]) {
          if (nt_.roles.subsumes(e.role, r) && core_holds(e.node, c.filler())) return true;
        }
        return false;
      }
      case ConceptKind::kIntersection:
        return std::all_of(c.children().begin(), c.children().end(),
                           [&](const Concept& part) { return core_holds(node, part); });
    }
    return false;
  }

  const NormalizedTBox& nt_;
  const Signature& sig_;
  const std::vector<std::vector<bool>>& core_has_;
  const std::vector<std::vector<int>>& core_labels_;
  const std::vector<std::vector<Edge>>& core_out_;
  std::vector<Node> nodes_;
  mutable std::map<std::string, int> unknown_names_;
  mutable std::map<std::string, int> unknown_roles_;
};

}  // namespace

bool Reasoner::is_subsumed(const Concept& lhs, const Concept& rhs) const {
  QueryModel model(index_->nt, kb_.signature(), index_->has, index_->labels, index_->out);
  const int q = model.build(lhs);
  return model.holds(q, rhs);
}

bool Reasoner::is_subrole(std::string_view r, std::string_view s) const {
  const auto& sig = kb_.signature();
  const auto ri = sig.lookup(SymbolKind::kRole, r);
  const auto si = sig.lookup(SymbolKind::kRole, s);
  if (!ri || !si) return r == s;
  return index_->nt.roles.subsumes(static_cast<int>(ri->id), static_cast<int>(si->id));
}

std::set<std::string> Reasoner::instance_labels(std::string_view x) const {
  kb_.require_individual(x);
  const auto& sig = kb_.signature();
  const int node = index_->individual_node(sig.lookup(SymbolKind::kIndividual, x)->id);
  std::set<std::string> out;
  for (int a : index_->labels[node]) {
    if (a >= 1 && static_cast<std::size_t>(a) <= index_->nt.num_user_names) {
      out.insert(sig.concepts()[a - 1]);
    }
  }
  return out;
}

std::set<RoleAssertion> Reasoner::derived_role_edges() const {
  const auto& sig = kb_.signature();
  std::set<RoleAssertion> out;
  for (const auto& a : kb_.abox()) {
    const auto* ra = std::get_if<RoleAssertion>(&a);
    if (ra == nullptr) continue;
    const int r = static_cast<int>(sig.lookup(SymbolKind::kRole, ra->role)->id);
    for (int s : index_->nt.roles.supers(r)) out.insert({ra->subject, sig.roles()[s], ra->object});
  }
  return out;
}

KnowledgeBase Reasoner::materialize() const {
  AssertionSet abox = kb_.abox();
  for (const auto& x : kb_.signature().individuals()) {
    for (auto& name : instance_labels(x)) abox.insert(ConceptAssertion{x, std::move(name)});
  }
  for (auto& ra : derived_role_edges()) abox.insert(std::move(ra));
  return kb_.with_abox(std::move(abox));
}

std::set<std::string> Reasoner::negative_individuals(const Concept& c) const {
  std::set<std::string> out;
  for (const auto& y : kb_.signature().individuals()) {
    if (!instance_check(c, y)) out.insert(y);
  }
  return out;
}

bool is_subsumed(const KnowledgeBase& kb, const Concept& lhs, const Concept& rhs) {
  return Reasoner(kb).is_subsumed(lhs, rhs);
}

bool instance_check(const KnowledgeBase& kb, const Concept& c, std::string_view x) {
  return Reasoner(kb).instance_check(c, x);
}

bool is_subrole(const KnowledgeBase& kb, std::string_view r, std::string_view s) {
  return Reasoner(kb).is_subrole(r, s);
}

KnowledgeBase materialize(const KnowledgeBase& kb) { return Reasoner(kb).materialize(); }

std::set<std::string> negative_individuals(const KnowledgeBase& kb, const Concept& c) {
  return Reasoner(kb).negative_individuals(c);
}

}  // namespace elhcf

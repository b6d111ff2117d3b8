#include <algorithm>
#include <map>

#include "elhcf/reasoner.hpp"

namespace elhcf {

RoleHierarchy::RoleHierarchy(std::size_t num_roles,
                             const std::vector<std::pair<int, int>>& inclusions)
    : supers_(num_roles), is_super_(num_roles, std::vector<bool>(num_roles, false)) {
  std::vector<std::vector<int>> direct(num_roles);
  for (auto [sub, sup] : inclusions) direct[sub].push_back(sup);
  for (std::size_t r = 0; r < num_roles; ++r) {
    std::vector<int> stack{static_cast<int>(r)};
    is_super_[r][r] = true;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      for (int s : direct[cur]) {
        if (!is_super_[r][s]) {
          is_super_[r][s] = true;
          stack.push_back(s);
        }
      }
    }
    for (std::size_t s = 0; s < num_roles; ++s) {
      if (is_super_[r][s]) supers_[r].push_back(static_cast<int>(s));
    }
  }
}

bool RoleHierarchy::subsumes(int r, int s) const {
  const auto n = static_cast<int>(supers_.size());
  if (r < 0 || s < 0 || r >= n || s >= n) return r == s;
  return is_super_[r][s];
}

std::size_t NormalizedTBox::axiom_count() const {
  std::size_t n = 0;
  std::size_t conj_entries = 0;
  for (const auto& v : told) n += v.size();
  for (const auto& v : conj) conj_entries += v.size();
  n += conj_entries / 2;  // each binary conjunction is indexed twice
  for (const auto& v : exists_rhs) n += v.size();
  for (const auto& v : exists_lhs) n += v.size();
  return n;
}

namespace {

class Normalizer {
 public:
  Normalizer(const Signature& sig, NormalizedTBox& out) : sig_(sig), out_(out) {
    out_.num_user_names = sig.concepts().size();
    out_.num_names = out_.num_user_names + 1;
    grow();
  }

  void add(const Concept& sub, const Concept& sup) {
    if (sup.is_top()) return;
    if (sup.is_intersection()) {
      for (const auto& part : sup.children()) add(sub, part);
      return;
    }
    if (sub.is_top() || sub.is_atomic()) {
      const int a = id(sub);
      if (sup.is_atomic()) {
        if (a != id(sup)) push_told(a, id(sup));
      } else {  // existential
        push(out_.exists_rhs, a, {role(sup.role()), name_for(sup.filler())});
      }
      return;
    }
    // Complex left-hand side: route through a name when the right-hand side
    // is not a name itself.
    if (!sup.is_atomic()) {
      const int x = name_for(sub);
      add(Concept::atomic(text(x)), sup);
      return;
    }
    const int b = id(sup);
    if (sub.is_existential()) {
      push(out_.exists_lhs, name_for(sub.filler()), {role(sub.role()), b});
      return;
    }
    // Intersection: binarize left to right.
    std::vector<int> ops;
    for (const auto& part : sub.children()) ops.push_back(name_for(part));
    int acc = ops[0];
    for (std::size_t i = 1; i + 1 < ops.size(); ++i) {
      const int y = fresh(Concept::intersection({concept_of(acc), concept_of(ops[i])}));
      push_conj(acc, ops[i], y);
      acc = y;
    }
    push_conj(acc, ops.back(), b);
  }

 private:
  // A name equivalent to c; complex concepts get a fresh name X with X ≡ c.
  int name_for(const Concept& c) {
    if (c.is_top() || c.is_atomic()) return id(c);
    if (auto it = defined_.find(c); it != defined_.end()) return it->second;
    const int x = fresh(c);
    defined_.emplace(c, x);
    const Concept xc = Concept::atomic(text(x));
    add(xc, c);
    add(c, xc);
    return x;
  }

  int fresh(const Concept& c) {
    const int x = static_cast<int>(out_.num_names++);
    out_.fresh_names.emplace(x, c);
    grow();
    return x;
  }

  // Fresh names are rendered as "#<id>", which cannot clash with user names.
  std::string text(int x) const {
    if (x == 0) return "Thing";
    if (static_cast<std::size_t>(x) <= out_.num_user_names) return sig_.concepts()[x - 1];
    return "#" + std::to_string(x);
  }

  Concept concept_of(int x) const {
    if (x == 0) return Concept::top();
    return Concept::atomic(text(x));
  }

  int id(const Concept& c) const {
    if (c.is_top()) return 0;
    const auto& name = c.name();
    if (!name.empty() && name[0] == '#') return std::stoi(name.substr(1));
    return static_cast<int>(sig_.lookup(SymbolKind::kConcept, name)->id) + 1;
  }

  int role(const std::string& r) const {
    return static_cast<int>(sig_.lookup(SymbolKind::kRole, r)->id);
  }

  void grow() {
    out_.told.resize(out_.num_names);
    out_.conj.resize(out_.num_names);
    out_.exists_rhs.resize(out_.num_names);
    out_.exists_lhs.resize(out_.num_names);
  }

  void push_told(int a, int b) {
    auto& v = out_.told[a];
    if (std::find(v.begin(), v.end(), b) == v.end()) v.push_back(b);
  }

  void push_conj(int a1, int a2, int b) {
    if (a1 == a2) {
      push_told(a1, b);
      return;
    }
    out_.conj[a1].push_back({a2, b});
    out_.conj[a2].push_back({a1, b});
  }

  static void push(std::vector<std::vector<NormalizedTBox::Ex>>& index, int key,
                   NormalizedTBox::Ex e) {
    auto& v = index[key];
    for (const auto& f : v) {
      if (f.role == e.role && f.name == e.name) return;
    }
    v.push_back(e);
  }

  const Signature& sig_;
  NormalizedTBox& out_;
  std::map<Concept, int> defined_;
};

}  // namespace

NormalizedTBox normalize(const std::vector<TBoxAxiom>& tbox, const Signature& sig) {
  NormalizedTBox out;
  std::vector<std::pair<int, int>> role_incl;
  Normalizer n(sig, out);
  for (const auto& ax : tbox) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
      n.add(ci->sub, ci->sup);
    } else {
      const auto& ri = std::get<RoleInclusion>(ax);
      role_incl.emplace_back(sig.lookup(SymbolKind::kRole, ri.sub)->id,
                             sig.lookup(SymbolKind::kRole, ri.sup)->id);
    }
  }
  out.roles = RoleHierarchy(sig.roles().size(), role_incl);
  return out;
}

}  // namespace elhcf

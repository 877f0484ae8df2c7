#include "hyperdoc/kb.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "hyperdoc/error.h"

namespace hyperdoc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLookup: return "lookup";
    case ErrorCode::kAmbiguity: return "ambiguity";
    case ErrorCode::kStructure: return "structure";
    case ErrorCode::kConfiguration: return "configuration";
    case ErrorCode::kKnowledgeAbsent: return "knowledge-absent";
    case ErrorCode::kNoProcedure: return "no-procedure";
    case ErrorCode::kLexicalGap: return "lexical-gap";
    case ErrorCode::kReference: return "reference";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

const SlotValue* Frame::slot(std::string_view attribute) const {
  for (const Property& p : slots) {
    if (p.attribute == attribute) return &p.value;
  }
  return nullptr;
}

const Id* Frame::action(std::string_view symbol) const {
  for (const auto& [sym, id] : actions) {
    if (sym == symbol) return &id;
  }
  return nullptr;
}

bool Frame::operator==(const Frame& o) const {
  return id == o.id && kind == o.kind && isa == o.isa && defining == o.defining &&
         slots == o.slots && parts == o.parts && actions == o.actions &&
         lexical_anchor == o.lexical_anchor;
}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::kActor: return "actor";
    case Role::kActee: return "actee";
    case Role::kSource: return "source";
    case Role::kDestination: return "destination";
    case Role::kManner: return "manner";
  }
  return "";
}

std::optional<Role> parse_role(std::string_view s) {
  for (Role r : {Role::kActor, Role::kActee, Role::kSource, Role::kDestination, Role::kManner}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

std::string_view to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::kCanned: return "canned";
    case ActionKind::kEkr: return "ekr";
    case ActionKind::kTcf: return "tcf";
    case ActionKind::kCaseFrame: return "frame";
  }
  return "";
}

const Filler* ActionRep::role(Role r) const {
  for (const auto& [role_id, filler] : roles) {
    if (role_id == r) return &filler;
  }
  return nullptr;
}

bool ActionRep::operator==(const ActionRep& o) const {
  return id == o.id && kind == o.kind && text == o.text && segments == o.segments &&
         verb == o.verb && roles == o.roles && steps == o.steps;
}

namespace {

Filler parse_ref_filler(std::string_view body) {
  if (!body.empty() && body.front() == '@') body.remove_prefix(1);
  if (body == "self") return {Filler::Kind::kSelf, ""};
  if (body == "parent") return {Filler::Kind::kParent, ""};
  return {Filler::Kind::kEntity, std::string(body)};
}

}  // namespace

std::vector<ActionRep::Segment> parse_ekr(std::string_view text) {
  std::vector<ActionRep::Segment> out;
  std::string pending;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '[') {
      size_t close = text.find(']', i);
      if (close == std::string_view::npos) {
        pending.append(text.substr(i));
        break;
      }
      if (!pending.empty()) out.push_back({std::move(pending), std::nullopt});
      pending.clear();
      out.push_back({"", parse_ref_filler(text.substr(i + 1, close - i - 1))});
      i = close + 1;
    } else {
      pending += text[i++];
    }
  }
  if (!pending.empty()) out.push_back({std::move(pending), std::nullopt});
  return out;
}

std::string ekr_source(const std::vector<ActionRep::Segment>& segments) {
  std::string out;
  for (const auto& seg : segments) {
    if (!seg.ref) {
      out += seg.text;
      continue;
    }
    switch (seg.ref->kind) {
      case Filler::Kind::kSelf: out += "[@self]"; break;
      case Filler::Kind::kParent: out += "[@parent]"; break;
      default: out += "[" + seg.ref->value + "]";
    }
  }
  return out;
}

KnowledgeBase::KnowledgeBase(std::vector<Frame> frames, std::vector<ActionRep> actions)
    : frames_(std::move(frames)), actions_(std::move(actions)) {
  for (size_t i = 0; i < frames_.size(); ++i) index_.emplace(frames_[i].id, i);
  for (size_t i = 0; i < actions_.size(); ++i) action_index_.emplace(actions_[i].id, i);

  const size_t n = frames_.size();
  closure_.assign(n, {});
  for (size_t i = 0; i < n; ++i) {
    std::set<size_t> seen;
    std::vector<size_t> stack;
    for (const Id& p : frames_[i].isa) {
      if (auto it = index_.find(p); it != index_.end()) stack.push_back(it->second);
    }
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      if (!seen.insert(cur).second) continue;
      for (const Id& p : frames_[cur].isa) {
        if (auto it = index_.find(p); it != index_.end()) stack.push_back(it->second);
      }
    }
    closure_[i].assign(seen.begin(), seen.end());
  }

  part_of_.assign(n, std::nullopt);
  for (size_t i = 0; i < n; ++i) {
    for (const Id& part : frames_[i].parts) {
      if (auto it = index_.find(part); it != index_.end() && !part_of_[it->second]) {
        part_of_[it->second] = i;
      }
    }
  }

  // Longest path to the root; nodes on a cycle get the depth reached before
  // the cycle closes.
  depth_.assign(n, -1);
  std::vector<char> on_stack(n, 0);
  std::function<int(size_t)> compute = [&](size_t i) -> int {
    if (depth_[i] >= 0) return depth_[i];
    if (on_stack[i]) return 0;
    on_stack[i] = 1;
    int best = 0;
    for (const Id& p : frames_[i].isa) {
      if (auto it = index_.find(p); it != index_.end()) best = std::max(best, compute(it->second) + 1);
    }
    on_stack[i] = 0;
    depth_[i] = best;
    return best;
  };
  for (size_t i = 0; i < n; ++i) compute(i);
}

const Frame* KnowledgeBase::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &frames_[it->second];
}

const Frame& KnowledgeBase::node(std::string_view id) const {
  return frames_[index_of(id)];
}

size_t KnowledgeBase::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw Error(ErrorCode::kLookup, std::string(id), "unknown KB id '" + std::string(id) + "'");
  }
  return it->second;
}

const ActionRep* KnowledgeBase::find_action(std::string_view id) const {
  auto it = action_index_.find(std::string(id));
  return it == action_index_.end() ? nullptr : &actions_[it->second];
}

const ActionRep& KnowledgeBase::action(std::string_view id) const {
  const ActionRep* rep = find_action(id);
  if (!rep) {
    throw Error(ErrorCode::kLookup, std::string(id), "unknown action '" + std::string(id) + "'");
  }
  return *rep;
}

std::optional<Id> KnowledgeBase::root(Taxonomy taxonomy) const {
  for (const Frame& f : frames_) {
    if (f.kind != NodeKind::kInstance && f.taxonomy() == taxonomy && f.isa.empty()) return f.id;
  }
  return std::nullopt;
}

std::vector<Id> KnowledgeBase::components() const {
  std::vector<Id> out;
  for (size_t i = 0; i < frames_.size(); ++i) {
    const Frame& f = frames_[i];
    if (f.taxonomy() != Taxonomy::kDomain) continue;
    if ((f.kind == NodeKind::kInstance || !f.isa.empty()) && (!f.parts.empty() || part_of_[i])) {
      out.push_back(f.id);
    }
  }
  return out;
}

bool KnowledgeBase::reaches(size_t from, size_t to) const {
  return std::binary_search(closure_[from].begin(), closure_[from].end(), to);
}

bool KnowledgeBase::isa_reaches(std::string_view node, std::string_view ancestor) const {
  return reaches(index_of(node), index_of(ancestor));
}

std::vector<Property> KnowledgeBase::effective_properties_for(const Frame& frame) const {
  std::vector<Property> out = frame.defining;
  auto add = [&out](const Property& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  std::set<size_t> seen;
  std::vector<size_t> stack;
  for (const Id& p : frame.isa) {
    if (auto it = index_.find(p); it != index_.end()) stack.push_back(it->second);
  }
  while (!stack.empty()) {
    size_t cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    for (const Property& p : frames_[cur].defining) add(p);
    for (const Id& p : frames_[cur].isa) {
      if (auto it = index_.find(p); it != index_.end()) stack.push_back(it->second);
    }
  }
  if (frame.kind == NodeKind::kInstance) {
    for (const Property& p : frame.slots) {
      if (p.value.is(SlotValue::Kind::kSymbol)) add(p);
    }
  }
  return out;
}

std::vector<Property> KnowledgeBase::effective_properties(std::string_view node) const {
  return effective_properties_for(frames_[index_of(node)]);
}

bool KnowledgeBase::probe_subsumed_by(size_t general, const Probe& probe, int guard) const {
  if (guard > 64) return false;
  if (auto it = index_.find(std::string(probe.id)); it != index_.end()) {
    if (it->second == general || reaches(it->second, general)) return true;
  }
  for (const Id& p : probe.isa) {
    auto it = index_.find(p);
    if (it != index_.end() && (it->second == general || reaches(it->second, general))) return true;
  }
  // Defined concept: its properties hold of the probe and each of its
  // declared parents subsumes the probe too.
  const Frame& g = frames_[general];
  if (g.kind == NodeKind::kInstance || g.defining.empty()) return false;
  for (const Property& p : g.defining) {
    if (std::find(probe.props.begin(), probe.props.end(), p) == probe.props.end()) return false;
  }
  for (const Id& parent : g.isa) {
    auto it = index_.find(parent);
    if (it == index_.end() || !probe_subsumed_by(it->second, probe, guard + 1)) return false;
  }
  return true;
}

bool KnowledgeBase::subsumes(std::string_view general, std::string_view specific) const {
  size_t g = index_of(general);
  const Frame& sf = frames_[index_of(specific)];
  const std::vector<Property> props = effective_properties_for(sf);
  return probe_subsumed_by(g, Probe{sf.id, sf.isa, props}, 0);
}

Placement KnowledgeBase::classify(const Frame& cand) const {
  for (const Id& p : cand.isa) index_of(p);  // unknown parent -> lookup error

  const bool existing = contains(cand.id);
  if (existing) {
    size_t self = index_of(cand.id);
    for (const Id& p : cand.isa) {
      size_t pi = index_of(p);
      if (pi == self || reaches(pi, self)) {
        throw Error(ErrorCode::kStructure, cand.id,
                    "classifying '" + cand.id + "' under '" + p + "' would create an IS-A cycle");
      }
    }
  }

  const std::vector<Property> props = effective_properties_for(cand);
  const Probe probe{cand.id, cand.isa, props};
  const Taxonomy tax = cand.taxonomy();

  // Does existing node x subsume the concept being classified?
  auto subsumes_new = [&](size_t x) { return probe_subsumed_by(x, probe, 0); };
  // Does the concept being classified subsume existing node y?
  auto new_subsumes = [&](size_t y) {
    if (existing && reaches(y, index_of(cand.id))) return true;
    if (cand.defining.empty()) return false;
    const std::vector<Property> yprops = effective_properties_for(frames_[y]);
    for (const Property& p : cand.defining) {
      if (std::find(yprops.begin(), yprops.end(), p) == yprops.end()) return false;
    }
    for (const Id& p : cand.isa) {
      if (!subsumes(p, frames_[y].id)) return false;
    }
    return true;
  };

  std::vector<size_t> above, below;
  for (size_t i = 0; i < frames_.size(); ++i) {
    const Frame& f = frames_[i];
    if (f.kind == NodeKind::kInstance || f.taxonomy() != tax || f.id == cand.id) continue;
    if (subsumes_new(i)) above.push_back(i);
  }
  for (size_t i = 0; i < frames_.size(); ++i) {
    const Frame& f = frames_[i];
    if (f.kind == NodeKind::kInstance || f.taxonomy() != tax || f.id == cand.id) continue;
    if (std::find(above.begin(), above.end(), i) != above.end()) continue;
    if (new_subsumes(i)) below.push_back(i);
  }

  Placement out;
  for (size_t a : above) {
    bool has_lower = false;
    for (size_t b : above) {
      if (a != b && subsumes(frames_[a].id, frames_[b].id) && !subsumes(frames_[b].id, frames_[a].id)) {
        has_lower = true;
      }
    }
    if (!has_lower) out.parents.push_back(frames_[a].id);
  }
  for (size_t a : below) {
    bool has_higher = false;
    for (size_t b : below) {
      if (a != b && subsumes(frames_[b].id, frames_[a].id) && !subsumes(frames_[a].id, frames_[b].id)) {
        has_higher = true;
      }
    }
    if (!has_higher) out.children.push_back(frames_[a].id);
  }
  return out;
}

KnowledgeBase KnowledgeBase::with_classified(const Frame& cand) const {
  Placement placement = classify(cand);
  std::vector<Frame> frames;
  frames.reserve(frames_.size() + 1);
  for (const Frame& f : frames_) {
    if (f.id != cand.id) frames.push_back(f);
  }
  Frame inserted = cand;
  inserted.isa = placement.parents;
  for (Frame& f : frames) {
    if (std::find(placement.children.begin(), placement.children.end(), f.id) ==
        placement.children.end()) {
      continue;
    }
    // Parents now reachable through the inserted concept become redundant.
    std::erase_if(f.isa, [&](const Id& p) {
      return std::find(placement.parents.begin(), placement.parents.end(), p) !=
                 placement.parents.end() ||
             (contains(p) && std::any_of(placement.parents.begin(), placement.parents.end(),
                                         [&](const Id& q) { return isa_reaches(q, p); }));
    });
    if (std::find(f.isa.begin(), f.isa.end(), cand.id) == f.isa.end()) f.isa.push_back(cand.id);
  }
  frames.push_back(std::move(inserted));
  return KnowledgeBase(std::move(frames), actions_);
}

std::vector<std::pair<size_t, int>> KnowledgeBase::bfs_ancestors(size_t start) const {
  std::vector<std::pair<size_t, int>> order;
  std::vector<int> dist(frames_.size(), -1);
  std::deque<size_t> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    order.emplace_back(cur, dist[cur]);
    for (const Id& p : frames_[cur].isa) {
      auto it = index_.find(p);
      if (it == index_.end() || dist[it->second] >= 0) continue;
      dist[it->second] = dist[cur] + 1;
      queue.push_back(it->second);
    }
  }
  return order;
}

std::optional<SlotValue> KnowledgeBase::inherit(std::string_view node,
                                                std::string_view attribute) const {
  const auto definers =
      nearest_definers(node, [&](const Frame& f) { return f.slot(attribute) != nullptr; });
  if (definers.empty()) return std::nullopt;
  const SlotValue& first = *definers.front()->slot(attribute);
  for (const Frame* f : definers) {
    if (!(*f->slot(attribute) == first)) {
      throw Error(ErrorCode::kAmbiguity, std::string(node),
                  "'" + std::string(node) + "' inherits conflicting values for '" +
                      std::string(attribute) + "' from '" + definers.front()->id + "' and '" +
                      f->id + "'");
    }
  }
  return first;
}

const ActionRep* KnowledgeBase::inherit_action(std::string_view node,
                                               std::string_view symbol) const {
  const auto definers =
      nearest_definers(node, [&](const Frame& f) { return f.action(symbol) != nullptr; });
  if (definers.empty()) return nullptr;
  const Id& first = *definers.front()->action(symbol);
  for (const Frame* f : definers) {
    if (*f->action(symbol) != first) {
      throw Error(ErrorCode::kAmbiguity, std::string(node),
                  "'" + std::string(node) + "' inherits conflicting '" + std::string(symbol) +
                      "' procedures from '" + definers.front()->id + "' and '" + f->id + "'");
    }
  }
  return find_action(first);
}

const std::vector<Id>& KnowledgeBase::parts_of(std::string_view node) const {
  return frames_[index_of(node)].parts;
}

std::optional<Id> KnowledgeBase::part_of(std::string_view node) const {
  const auto& parent = part_of_[index_of(node)];
  if (!parent) return std::nullopt;
  return frames_[*parent].id;
}

int KnowledgeBase::depth(std::string_view node) const { return depth_[index_of(node)]; }

std::vector<Id> KnowledgeBase::ancestors_by_specificity(std::string_view node) const {
  const size_t start = index_of(node);
  const auto order = bfs_ancestors(start);  // distance order, start first
  std::vector<size_t> remaining;
  for (const auto& [idx, dist] : order) remaining.push_back(idx);
  std::vector<Id> out;
  while (!remaining.empty()) {
    // Nearest node that has no remaining strict descendant.
    size_t pick = remaining.size();
    for (size_t k = 0; k < remaining.size() && pick == remaining.size(); ++k) {
      bool has_descendant = false;
      for (size_t other : remaining) {
        if (other != remaining[k] && reaches(other, remaining[k])) has_descendant = true;
      }
      if (!has_descendant) pick = k;
    }
    if (pick == remaining.size()) pick = 0;  // cycle: fall back to BFS order
    out.push_back(frames_[remaining[pick]].id);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace hyperdoc

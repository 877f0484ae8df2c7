#ifndef HYPERDOC_KB_H_
#define HYPERDOC_KB_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperdoc/slot_value.h"

namespace hyperdoc {

struct SourceLocation {
  std::string file;
  int line = 0;
  bool operator==(const SourceLocation&) const = default;
};

enum class NodeKind { kConcept, kTask, kInstance };
enum class Taxonomy { kDomain, kTask };

struct Property {
  std::string attribute;
  SlotValue value;
  bool operator==(const Property&) const = default;
};

// A node of the IS-A taxonomy or Part-Of hierarchy: a concept, a task
// concept, or an instance.
struct Frame {
  Id id;
  NodeKind kind = NodeKind::kConcept;
  std::vector<Id> isa;
  std::vector<Property> defining;  // used for classification
  std::vector<Property> slots;     // default (concepts) or local (instances)
  std::vector<Id> parts;
  std::vector<std::pair<std::string, Id>> actions;  // action symbol -> ActionRep id
  std::string lexical_anchor;
  SourceLocation where;

  const SlotValue* slot(std::string_view attribute) const;
  const Id* action(std::string_view symbol) const;
  Taxonomy taxonomy() const {
    return kind == NodeKind::kTask ? Taxonomy::kTask : Taxonomy::kDomain;
  }

  bool operator==(const Frame& other) const;
};

// Role inventory for case frames.
enum class Role { kActor, kActee, kSource, kDestination, kManner };
std::string_view to_string(Role role);
std::optional<Role> parse_role(std::string_view s);

// Case filler or embedded reference. kSelf/kParent bind to the component the
// procedure is being generated for (and its Part-Of parent), which is what
// lets one procedure be inherited by every board of a family.
struct Filler {
  enum class Kind { kEntity, kText, kSelf, kParent };
  Kind kind = Kind::kEntity;
  std::string value;  // entity id or text

  bool is_reference() const { return kind != Kind::kText; }
  bool operator==(const Filler&) const = default;
};

enum class ActionKind { kCanned, kEkr, kTcf, kCaseFrame };
std::string_view to_string(ActionKind kind);

struct ActionRep {
  struct Segment {
    std::string text;
    std::optional<Filler> ref;
    bool operator==(const Segment&) const = default;
  };

  Id id;
  ActionKind kind = ActionKind::kCanned;
  std::string text;               // canned text
  std::vector<Segment> segments;  // EKR
  std::string verb;               // action symbol, case frames
  std::vector<std::pair<Role, Filler>> roles;
  std::vector<Id> steps;  // substeps, other ActionRep ids
  SourceLocation where;

  const Filler* role(Role r) const;
  bool operator==(const ActionRep& other) const;
};

// Parses "Carefully slide [Board21] out along its guides" into segments.
std::vector<ActionRep::Segment> parse_ekr(std::string_view text);
std::string ekr_source(const std::vector<ActionRep::Segment>& segments);

struct Placement {
  std::vector<Id> parents;   // most specific subsumers
  std::vector<Id> children;  // most general subsumees
  bool operator==(const Placement&) const = default;
};

// Immutable frame knowledge base with IS-A closure, default inheritance,
// subsumption and classification. Construction never fails: structural
// problems (cycles, dangling ids) are left for bundle validation to report,
// and every traversal here is cycle-safe.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  KnowledgeBase(std::vector<Frame> frames, std::vector<ActionRep> actions);

  bool contains(std::string_view id) const { return index_.contains(std::string(id)); }
  const Frame* find(std::string_view id) const;
  const Frame& node(std::string_view id) const;  // throws kLookup
  std::span<const Frame> nodes() const { return frames_; }

  const ActionRep* find_action(std::string_view id) const;
  const ActionRep& action(std::string_view id) const;
  std::span<const ActionRep> actions() const { return actions_; }

  std::optional<Id> root(Taxonomy taxonomy) const;
  // Queryable components: non-root domain nodes that take part in the Part-Of
  // forest, in KB order.
  std::vector<Id> components() const;

  bool subsumes(std::string_view general, std::string_view specific) const;
  Placement classify(const Frame& cand) const;
  // Returns a copy of this KB with `cand` inserted at its classified
  // placement (replacing any node with the same id).
  KnowledgeBase with_classified(const Frame& cand) const;

  std::optional<SlotValue> inherit(std::string_view node, std::string_view attribute) const;
  // Same nearest-definition rule as inherit(), over action representations.
  const ActionRep* inherit_action(std::string_view node, std::string_view symbol) const;

  const std::vector<Id>& parts_of(std::string_view node) const;
  std::optional<Id> part_of(std::string_view node) const;

  // Longest IS-A path from the node to its taxonomy root.
  int depth(std::string_view node) const;
  // True iff `ancestor` is reachable from `node` through declared IS-A links.
  bool isa_reaches(std::string_view node, std::string_view ancestor) const;
  // The node followed by its IS-A ancestors, every descendant before any of
  // its ancestors, nearer ones first among incomparable ones.
  std::vector<Id> ancestors_by_specificity(std::string_view node) const;
  // Defining properties of the node and all its ancestors, plus the local
  // symbol slots of an instance.
  std::vector<Property> effective_properties(std::string_view node) const;

  // Distance-ordered IS-A walk. Returns the ancestors at the nearest distance
  // whose `has` predicate holds, with strict ancestors of other hits removed.
  template <typename Pred>
  std::vector<const Frame*> nearest_definers(std::string_view node, Pred has) const;

 private:
  size_t index_of(std::string_view id) const;
  bool reaches(size_t from, size_t to) const;
  struct Probe {
    std::string_view id;
    const std::vector<Id>& isa;
    const std::vector<Property>& props;
  };
  bool probe_subsumed_by(size_t general, const Probe& probe, int guard) const;
  std::vector<Property> effective_properties_for(const Frame& frame) const;
  std::vector<std::pair<size_t, int>> bfs_ancestors(size_t start) const;

  std::vector<Frame> frames_;
  std::vector<ActionRep> actions_;
  std::unordered_map<std::string, size_t> index_;
  std::unordered_map<std::string, size_t> action_index_;
  std::vector<std::vector<size_t>> closure_;  // sorted strict-ancestor indices
  std::vector<std::optional<size_t>> part_of_;
  std::vector<int> depth_;
};

template <typename Pred>
std::vector<const Frame*> KnowledgeBase::nearest_definers(std::string_view node,
                                                          Pred has) const {
  const auto order = bfs_ancestors(index_of(node));
  std::vector<size_t> hits;
  int level = -1;
  for (const auto& [idx, dist] : order) {
    if (level >= 0 && dist > level) break;
    if (has(frames_[idx])) {
      level = dist;
      hits.push_back(idx);
    }
  }
  std::vector<const Frame*> out;
  for (size_t h : hits) {
    bool shadowed = false;
    for (size_t other : hits) {
      if (other != h && reaches(other, h)) shadowed = true;
    }
    if (!shadowed) out.push_back(&frames_[h]);
  }
  return out;
}

}  // namespace hyperdoc

#endif  // HYPERDOC_KB_H_

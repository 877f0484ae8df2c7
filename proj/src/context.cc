#include "hyperdoc/context.h"

#include <algorithm>

#include "hyperdoc/error.h"

namespace hyperdoc {

bool ExpertiseModel::operator==(const ExpertiseModel& o) const {
  return id == o.id && knows_all_lexemes == o.knows_all_lexemes &&
         known_lexemes == o.known_lexemes && knows_all_actions == o.knows_all_actions &&
         known_actions == o.known_actions && style == o.style && language == o.language;
}

const ContentRule& resolve_rule(Question question, std::string_view component,
                                std::string_view task, std::span<const ContentRule> rules,
                                const KnowledgeBase& kb) {
  const ContentRule* best = nullptr;
  std::pair<int, int> best_key{-1, -1};
  bool tied = false;
  for (const ContentRule& r : rules) {
    if (r.question != question) continue;
    if (!kb.contains(r.component_class) || !kb.contains(r.task_class)) continue;
    if (!kb.subsumes(r.component_class, component) || !kb.subsumes(r.task_class, task)) continue;
    std::pair<int, int> key{kb.depth(r.component_class), kb.depth(r.task_class)};
    if (key > best_key) {
      best = &r;
      best_key = key;
      tied = false;
    } else if (key == best_key) {
      tied = true;
    }
  }
  if (!best) {
    throw Error(ErrorCode::kConfiguration, std::string(to_string(question)),
                "no content rule for " + std::string(to_string(question)) + " on '" +
                    std::string(component) + "' under task '" + std::string(task) + "'");
  }
  if (tied) {
    throw Error(ErrorCode::kConfiguration, best->id,
                "content rules tie for " + std::string(to_string(question)) + " on '" +
                    std::string(component) + "'");
  }
  return *best;
}

DiscourseState update_focus(const DiscourseState& state, std::span<const Id> mentioned) {
  DiscourseState out;
  auto add = [&out](const Id& id) {
    if (out.focus.size() < kFocusCapacity &&
        std::find(out.focus.begin(), out.focus.end(), id) == out.focus.end()) {
      out.focus.push_back(id);
    }
  };
  for (const Id& id : mentioned) add(id);
  for (const Id& id : state.focus) add(id);
  out.last_center = mentioned.empty() ? state.last_center : std::optional<Id>(mentioned.front());
  if (out.last_center && std::find(out.focus.begin(), out.focus.end(), *out.last_center) == out.focus.end()) {
    out.last_center.reset();
  }
  return out;
}

}  // namespace hyperdoc

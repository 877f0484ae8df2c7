#ifndef HYPERDOC_CONTEXT_H_
#define HYPERDOC_CONTEXT_H_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hyperdoc/content_rule.h"
#include "hyperdoc/kb.h"

namespace hyperdoc {

inline constexpr size_t kFocusCapacity = 10;

struct Style {
  bool contractions = false;
  bool allow_abbreviations = true;
  bool operator==(const Style&) const = default;
};

struct ExpertiseModel {
  std::string id;
  bool knows_all_lexemes = false;
  std::set<std::string> known_lexemes;
  bool knows_all_actions = false;
  std::set<std::string> known_actions;
  Style style;
  std::string language = "en";
  SourceLocation where;

  bool knows_lexeme(const std::string& lexeme) const {
    return knows_all_lexemes || known_lexemes.contains(lexeme);
  }
  bool knows_action(const std::string& action) const {
    return knows_all_actions || known_actions.contains(action);
  }
  bool operator==(const ExpertiseModel& o) const;
};

struct QuestionPoint {
  Question question = Question::kWhatIsIt;
  Id component;
  Id task;
  std::string expertise;
  std::vector<Id> focus;
  // HowDoIPerform only: which action; empty means the task's action.
  std::string action;
};

struct DiscourseState {
  std::vector<Id> focus;  // most salient first
  std::optional<Id> last_center;
  bool operator==(const DiscourseState&) const = default;
};

// Most specific rule matching (question, component, task); specificity is
// component-class depth, then task-class depth. Throws kConfiguration when no
// rule matches or the best two tie.
const ContentRule& resolve_rule(Question question, std::string_view component,
                                std::string_view task, std::span<const ContentRule> rules,
                                const KnowledgeBase& kb);

// Mentioned entities first (mention order), then the unmentioned remainder of
// the old focus, truncated to kFocusCapacity.
DiscourseState update_focus(const DiscourseState& state, std::span<const Id> mentioned);

}  // namespace hyperdoc

#endif  // HYPERDOC_CONTEXT_H_

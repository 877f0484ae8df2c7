#ifndef HYPERDOC_CONTENT_H_
#define HYPERDOC_CONTENT_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperdoc/bundle.h"
#include "hyperdoc/content_rule.h"
#include "hyperdoc/context.h"

namespace hyperdoc {

struct ContentPlan {
  std::string rule_id;
  Schema schema = Schema::kIdentify;
  Id topic;
  std::vector<Property> facts;     // conveyed attributes present on the topic
  std::vector<Id> parts;           // PartsList
  std::optional<Id> container;     // Location: Part-Of parent
  std::string preposition;         // Location
  std::string action;              // Procedure: action symbol
  std::vector<Id> steps;           // Procedure: ActionRep ids in order
  bool bullet = false;
  bool unabbreviate = false;
  std::vector<Question> followups;

  bool operator==(const ContentPlan&) const = default;
};

// The task's action symbol, inherited along the task taxonomy ("use" when no
// task defines one).
std::string default_action(const KnowledgeBase& kb, std::string_view task);

// Throws kKnowledgeAbsent or kNoProcedure when the KB cannot answer.
ContentPlan plan_content(const QuestionPoint& point, const Bundle& bundle);

// Keeps the candidates plan_content can answer for (topic, task), in order.
std::vector<Question> filter_followups(std::span<const Question> candidates, const Id& topic,
                                       const Id& task, const Bundle& bundle);

// Followup button text: WHERE, PARTS, ... and the uppercased action for
// HowDoIPerform.
std::string followup_label(Question question, std::string_view action);

}  // namespace hyperdoc

#endif  // HYPERDOC_CONTENT_H_

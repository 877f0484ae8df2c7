#ifndef HYPERDOC_CONTENT_RULE_H_
#define HYPERDOC_CONTENT_RULE_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdoc/kb.h"

namespace hyperdoc {

// The seven basic questions.
enum class Question {
  kWhatIsIt,
  kWhereIsIt,
  kWhatAreItsParts,
  kWhatAreItsSpecs,
  kWhatIsItsPurpose,
  kWhatDoesItConnectTo,
  kHowDoIPerform,
};

inline constexpr std::array<Question, 7> kAllQuestions = {
    Question::kWhatIsIt,         Question::kWhereIsIt,          Question::kWhatAreItsParts,
    Question::kWhatAreItsSpecs,  Question::kWhatIsItsPurpose,   Question::kWhatDoesItConnectTo,
    Question::kHowDoIPerform};

std::string_view to_string(Question q);
std::optional<Question> parse_question(std::string_view s);

// Response structures, one per basic question.
enum class Schema { kIdentify, kLocation, kPartsList, kSpecs, kPurpose, kConnections, kProcedure };
std::string_view to_string(Schema s);
std::optional<Schema> parse_schema(std::string_view s);

struct ContentRule {
  std::string id;
  Question question = Question::kWhatIsIt;
  Id component_class;
  Id task_class;
  Schema schema = Schema::kIdentify;
  bool bullet = false;
  bool unabbreviate = false;
  std::vector<std::string> conveyed_attributes;
  std::vector<Question> candidate_followups;
  // Content standard: attributes every matched component should carry.
  std::vector<std::string> required_attributes;
  SourceLocation where;

  bool operator==(const ContentRule& o) const;
};

}  // namespace hyperdoc

#endif  // HYPERDOC_CONTENT_RULE_H_

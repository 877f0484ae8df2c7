#include "hyperdoc/content_rule.h"

namespace hyperdoc {

std::string_view to_string(Question q) {
  switch (q) {
    case Question::kWhatIsIt: return "WhatIsIt";
    case Question::kWhereIsIt: return "WhereIsIt";
    case Question::kWhatAreItsParts: return "WhatAreItsParts";
    case Question::kWhatAreItsSpecs: return "WhatAreItsSpecs";
    case Question::kWhatIsItsPurpose: return "WhatIsItsPurpose";
    case Question::kWhatDoesItConnectTo: return "WhatDoesItConnectTo";
    case Question::kHowDoIPerform: return "HowDoIPerform";
  }
  return "";
}

std::optional<Question> parse_question(std::string_view s) {
  for (Question q : kAllQuestions) {
    if (to_string(q) == s) return q;
  }
  return std::nullopt;
}

std::string_view to_string(Schema s) {
  switch (s) {
    case Schema::kIdentify: return "Identify";
    case Schema::kLocation: return "Location";
    case Schema::kPartsList: return "PartsList";
    case Schema::kSpecs: return "Specs";
    case Schema::kPurpose: return "Purpose";
    case Schema::kConnections: return "Connections";
    case Schema::kProcedure: return "Procedure";
  }
  return "";
}

std::optional<Schema> parse_schema(std::string_view s) {
  for (Schema x : {Schema::kIdentify, Schema::kLocation, Schema::kPartsList, Schema::kSpecs,
                   Schema::kPurpose, Schema::kConnections, Schema::kProcedure}) {
    if (to_string(x) == s) return x;
  }
  return std::nullopt;
}

bool ContentRule::operator==(const ContentRule& o) const {
  return id == o.id && question == o.question && component_class == o.component_class &&
         task_class == o.task_class && schema == o.schema && bullet == o.bullet &&
         unabbreviate == o.unabbreviate && conveyed_attributes == o.conveyed_attributes &&
         candidate_followups == o.candidate_followups &&
         required_attributes == o.required_attributes;
}

}  // namespace hyperdoc

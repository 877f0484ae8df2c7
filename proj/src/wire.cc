#include "hyperdoc/wire.h"

namespace hyperdoc {

nlohmann::json span_to_json(const AnnotatedSpan& span) {
  nlohmann::json j;
  j["text"] = span.text;
  switch (span.annotation.kind) {
    case Annotation::Kind::kPlain: j["kind"] = "plain"; break;
    case Annotation::Kind::kEntity:
      j["kind"] = "entity";
      j["target"] = span.annotation.target;
      break;
    case Annotation::Kind::kAction:
      j["kind"] = "action";
      j["target"] = span.annotation.target;
      j["action"] = span.annotation.action;
      break;
  }
  if (span.formatting.bullet_index) j["bullet_index"] = *span.formatting.bullet_index;
  return j;
}

nlohmann::json violation_to_json(const Violation& v) {
  return {{"rule", v.rule},
          {"sentence", v.sentence},
          {"token", v.token},
          {"severity", v.severity == Violation::Severity::kAdvisory ? "advisory" : "error"},
          {"message", v.message}};
}

nlohmann::json response_to_json(const Response& r) {
  nlohmann::json j;
  j["title"] = r.title;
  j["body"] = nlohmann::json::array();
  for (const AnnotatedSpan& s : r.body) j["body"].push_back(span_to_json(s));
  j["followups"] = nlohmann::json::array();
  for (const FollowupButton& f : r.followups) {
    nlohmann::json b = {{"question", std::string(to_string(f.question))}, {"component", f.component}, {"label", f.label}};
    if (!f.action.empty()) b["action"] = f.action;
    j["followups"].push_back(std::move(b));
  }
  j["elapsed_ms"] = r.elapsed_ms;
  if (!r.violations.empty()) {
    j["violations"] = nlohmann::json::array();
    for (const Violation& v : r.violations) j["violations"].push_back(violation_to_json(v));
  }
  return j;
}

}  // namespace hyperdoc

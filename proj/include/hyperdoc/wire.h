#ifndef HYPERDOC_WIRE_H_
#define HYPERDOC_WIRE_H_

#include "json.hpp"

#include "hyperdoc/delivery.h"

namespace hyperdoc {

// {text, kind: plain|entity|action, target?, action?, bullet_index?}
nlohmann::json span_to_json(const AnnotatedSpan& span);

// {title, body, followups: [{question, component, label, action?}], elapsed_ms}
nlohmann::json response_to_json(const Response& response);

nlohmann::json violation_to_json(const Violation& v);

}  // namespace hyperdoc

#endif  // HYPERDOC_WIRE_H_

#ifndef HYPERDOC_DELIVERY_H_
#define HYPERDOC_DELIVERY_H_

#include <memory>
#include <string>
#include <vector>

#include "hyperdoc/bundle.h"
#include "hyperdoc/content.h"
#include "hyperdoc/context.h"
#include "hyperdoc/semantic_spec.h"
#include "hyperdoc/spans.h"
#include "hyperdoc/standards.h"

namespace hyperdoc {

struct FollowupButton {
  Question question = Question::kWhatIsIt;
  Id component;
  std::string action;  // HowDoIPerform only
  std::string label;
  bool operator==(const FollowupButton&) const = default;
};

struct Response {
  std::string title;
  std::vector<AnnotatedSpan> body;
  std::vector<FollowupButton> followups;
  std::vector<Violation> violations;  // advisory: responses are never withheld
  double elapsed_ms = 0;
  // Intermediate structures, for traces.
  ContentPlan plan;
  std::vector<TextPlan> specs;
};

struct Session {
  std::string id;
  std::string expertise;
  Id task;
  std::string language = "en";
  DiscourseState state;
  std::vector<QuestionPoint> history;  // most recent last
};

inline constexpr size_t kHistoryCapacity = 100;

class Engine {
 public:
  explicit Engine(std::shared_ptr<const Bundle> bundle, std::string profile = "default");

  // Answers one question. `state` carries the discourse centre from earlier
  // answers; the point's focus is used as the focus space.
  Response answer(const QuestionPoint& point, const DiscourseState& state = {}) const;

  // Answers within a session and updates its focus and history.
  Response ask(Session& session, Question question, const Id& component,
               const std::string& action = "") const;

  // Throws kLookup for an unknown model or a non-task task.
  void check_model(const std::string& expertise, const Id& task) const;

  const Bundle& bundle() const { return *bundle_; }
  std::shared_ptr<const Bundle> shared_bundle() const { return bundle_; }

 private:
  std::shared_ptr<const Bundle> bundle_;
  std::string profile_;
};

// Entities linked from a body, in order of first appearance.
std::vector<Id> linked_entities(const std::vector<AnnotatedSpan>& spans);

// Content plan, SPL specs and violations in readable form.
std::string format_trace(const Response& response, const Bundle& bundle);

}  // namespace hyperdoc

#endif  // HYPERDOC_DELIVERY_H_

#include "hyperdoc/delivery.h"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "hyperdoc/error.h"
#include "hyperdoc/planner.h"
#include "hyperdoc/realizer.h"

namespace hyperdoc {

Engine::Engine(std::shared_ptr<const Bundle> bundle, std::string profile)
    : bundle_(std::move(bundle)), profile_(std::move(profile)) {}

void Engine::check_model(const std::string& expertise, const Id& task) const {
  if (!bundle_->find_model(expertise)) {
    throw Error(ErrorCode::kLookup, expertise, "unknown expertise model '" + expertise + "'");
  }
  if (bundle_->kb.node(task).kind != NodeKind::kTask) {
    throw Error(ErrorCode::kLookup, task, "'" + task + "' is not a task");
  }
}

std::vector<Id> linked_entities(const std::vector<AnnotatedSpan>& spans) {
  std::vector<Id> out;
  for (const AnnotatedSpan& s : spans) {
    if (s.annotation.kind == Annotation::Kind::kEntity &&
        std::find(out.begin(), out.end(), s.annotation.target) == out.end()) {
      out.push_back(s.annotation.target);
    }
  }
  return out;
}

Response Engine::answer(const QuestionPoint& point, const DiscourseState& state) const {
  const auto start = std::chrono::steady_clock::now();
  const Bundle& b = *bundle_;
  check_model(point.expertise, point.task);
  const Frame& topic = b.kb.node(point.component);
  if (topic.kind == NodeKind::kTask) {
    throw Error(ErrorCode::kLookup, point.component, "'" + point.component + "' is a task, not a component");
  }
  const ExpertiseModel& model = *b.find_model(point.expertise);
  const LanguagePack* pack = find_pack(model.language);
  if (!pack) throw Error(ErrorCode::kConfiguration, model.language, "no language pack for '" + model.language + "'");

  Response r;
  r.plan = plan_content(point, b);
  DiscourseState st = state;
  st.focus = point.focus;
  r.specs = plan_sentences(r.plan, point, st, b);

  const RealizeContext ctx{b, model};
  r.body = pack->postprocess(pack->realize(r.specs, ctx), ctx);
  const ReferringPlan title_ref = gen_reference(point.component, {}, model, b, {r.plan.unabbreviate, false});
  r.title = pack->realize_title(point.question, title_ref, r.plan.action, ctx);

  const StandardProfile* profile = b.find_profile(profile_);
  const StandardProfile fallback;
  r.violations = check_text(r.body, profile ? *profile : fallback);

  const std::string task_action = default_action(b.kb, point.task);
  for (Question q : r.plan.followups) {
    FollowupButton f;
    f.question = q;
    f.component = point.component;
    if (q == Question::kHowDoIPerform) f.action = task_action;
    f.label = followup_label(q, f.action);
    r.followups.push_back(std::move(f));
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Response Engine::ask(Session& session, Question question, const Id& component,
                     const std::string& action) const {
  QuestionPoint point;
  point.question = question;
  point.component = component;
  point.task = session.task;
  point.expertise = session.expertise;
  point.focus = session.state.focus;
  point.action = action;
  Response r = answer(point, session.state);

  std::vector<Id> mentioned = {component};
  for (const Id& id : linked_entities(r.body)) {
    if (id != component) mentioned.push_back(id);
  }
  session.state = update_focus(session.state, mentioned);
  session.history.push_back(point);
  if (session.history.size() > kHistoryCapacity) session.history.erase(session.history.begin());
  return r;
}

std::string format_trace(const Response& r, const Bundle& bundle) {
  std::ostringstream os;
  const ContentPlan& p = r.plan;
  os << "content plan\n";
  os << "  rule: " << p.rule_id << "\n";
  os << "  schema: " << to_string(p.schema) << "\n";
  os << "  topic: " << p.topic << "\n";
  os << "  bullet: " << (p.bullet ? "yes" : "no") << "\n";
  os << "  unabbreviate: " << (p.unabbreviate ? "yes" : "no") << "\n";
  if (!p.facts.empty()) {
    os << "  facts:";
    for (const Property& f : p.facts) os << " (" << f.attribute << ", " << f.value.to_source() << ")";
    os << "\n";
  }
  if (!p.parts.empty()) {
    os << "  parts:";
    for (const Id& id : p.parts) os << " " << id;
    os << "\n";
  }
  if (p.container) os << "  container: " << *p.container << " (" << p.preposition << ")\n";
  if (!p.action.empty()) os << "  action: " << p.action << "\n";
  if (!p.steps.empty()) {
    os << "  steps:";
    for (const Id& id : p.steps) os << " " << id;
    os << "\n";
  }
  os << "  followups:";
  for (Question q : p.followups) os << " " << to_string(q);
  os << "\n";
  os << "sentence plans\n";
  for (const TextPlan& t : r.specs) os << to_spl(t, &bundle.lexicon) << "\n";
  if (!r.violations.empty()) {
    os << "standards\n";
    for (const Violation& v : r.violations) os << "  " << to_string(v) << "\n";
  }
  return os.str();
}

}  // namespace hyperdoc

#ifndef HYPERDOC_PLANNER_H_
#define HYPERDOC_PLANNER_H_

#include <span>
#include <vector>

#include "hyperdoc/bundle.h"
#include "hyperdoc/content.h"
#include "hyperdoc/context.h"
#include "hyperdoc/semantic_spec.h"

namespace hyperdoc {

inline constexpr size_t kAggregationCap = 3;

// A fact together with its attribute category.
struct CategorizedFact {
  Property fact;
  std::string category;
  bool operator==(const CategorizedFact&) const = default;
};

// Groups facts by category, at most kAggregationCap per group, keeping the
// order of first appearance.
std::vector<std::vector<CategorizedFact>> aggregate(std::span<const CategorizedFact> facts);

struct ReferenceOptions {
  bool unabbreviate = false;
  bool predicative = false;  // Identity range: class description, indefinite
};

// Head noun by lexical choice, then distinguishing attributes against the
// focus members that share the head category.
ReferringPlan gen_reference(const Id& referent, std::span<const Id> focus,
                            const ExpertiseModel& expertise, const Bundle& bundle,
                            const ReferenceOptions& options = {});

// `topic` is the query topic of the response being generated.
bool pronoun_allowed(const Id& referent, const DiscourseState& state, const Id& topic);

// Binds @self/@parent and plans one action representation. `component` is the
// entity the procedure is generated for.
std::vector<TextPlan> expand_hybrid(const ActionRep& rep, const Id& component,
                                    std::span<const Id> focus, const ExpertiseModel& expertise,
                                    const Bundle& bundle);

std::vector<TextPlan> plan_sentences(const ContentPlan& plan, const QuestionPoint& point,
                                     const DiscourseState& state, const Bundle& bundle);

}  // namespace hyperdoc

#endif  // HYPERDOC_PLANNER_H_

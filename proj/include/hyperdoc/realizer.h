#ifndef HYPERDOC_REALIZER_H_
#define HYPERDOC_REALIZER_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdoc/bundle.h"
#include "hyperdoc/content_rule.h"
#include "hyperdoc/semantic_spec.h"
#include "hyperdoc/spans.h"

namespace hyperdoc {

struct RealizeContext {
  const Bundle& bundle;
  const ExpertiseModel& expertise;
};

// Inflection features understood by inflect().
inline constexpr const char* kPlural = "plural";
inline constexpr const char* kPresent3sg = "present-3sg";
inline constexpr const char* kPast = "past";
inline constexpr const char* kPastParticiple = "past-participle";
inline constexpr const char* kGerund = "gerund";

// Surface grammar for one language.
class LanguagePack {
 public:
  virtual ~LanguagePack() = default;
  virtual std::string language() const = 0;

  // Spans before postprocessing: one or more words per span, no spacing.
  virtual std::vector<AnnotatedSpan> realize(std::span<const TextPlan> plans,
                                             const RealizeContext& ctx) const = 0;

  // `topic` is a definite reference; `action` names the verb for HowDoIPerform.
  virtual std::string realize_title(Question question, const ReferringPlan& topic,
                                    std::string_view action, const RealizeContext& ctx) const = 0;

  // Base form for an empty feature; irregular forms on the entry win.
  virtual std::string inflect(const LexicalEntry& entry, std::string_view feature) const = 0;

  // Tokenizing, contractions, articles, capitals, terminal punctuation and
  // spacing. Idempotent; never changes annotations.
  virtual std::vector<AnnotatedSpan> postprocess(std::vector<AnnotatedSpan> spans,
                                                 const RealizeContext& ctx) const = 0;
};

// Registered pack for a language, or nullptr.
const LanguagePack* find_pack(std::string_view language);
std::vector<std::string> pack_languages();

// Realizes and postprocesses with the pack for the model's language; throws
// kConfiguration when there is none.
std::vector<AnnotatedSpan> realize_text(std::span<const TextPlan> plans, const RealizeContext& ctx);

}  // namespace hyperdoc

#endif  // HYPERDOC_REALIZER_H_

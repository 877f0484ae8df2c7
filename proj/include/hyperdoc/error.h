#ifndef HYPERDOC_ERROR_H_
#define HYPERDOC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperdoc {

enum class ErrorCode {
  kLookup,           // unknown id
  kAmbiguity,        // conflicting inherited defaults
  kStructure,        // cycle or broken hierarchy
  kConfiguration,    // no content rule / tie between rules
  kKnowledgeAbsent,  // the KB cannot answer this question for this component
  kNoProcedure,      // HowDoIPerform with no action representation
  kLexicalGap,       // nothing in the language pack names a concept
  kReference,        // dangling entity reference in an action representation
  kParse,
  kUsage,
  kIo,
};

std::string_view to_string(ErrorCode code);

// True for the two errors that mean "the KB has nothing to say", which are
// what followup filtering and export treat as unanswerable.
inline bool is_knowledge_absence(ErrorCode code) {
  return code == ErrorCode::kKnowledgeAbsent || code == ErrorCode::kNoProcedure;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string id, const std::string& message)
      : std::runtime_error(message), code_(code), id_(std::move(id)) {}

  ErrorCode code() const { return code_; }
  const std::string& id() const { return id_; }

 private:
  ErrorCode code_;
  std::string id_;
};

}  // namespace hyperdoc

#endif  // HYPERDOC_ERROR_H_

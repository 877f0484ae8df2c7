#ifndef HYPERDOC_TESTS_SUPPORT_ORACLES_H_
#define HYPERDOC_TESTS_SUPPORT_ORACLES_H_

// Straightforward re-implementations used to check the library on random
// inputs. They favour obviousness over speed.

#include <optional>
#include <string>
#include <vector>

#include "hyperdoc/bundle.h"

namespace hyperdoc::testing {

// Declared IS-A reachability by depth-first search over the frame list.
bool oracle_reaches(const std::vector<Frame>& frames, const Id& from, const Id& to);

struct InheritResult {
  bool ambiguous = false;
  std::optional<SlotValue> value;
};

// Nearest definers by IS-A edge distance; definers that are strict ancestors
// of another nearest definer are dropped; differing survivors are ambiguous.
InheritResult oracle_inherit(const std::vector<Frame>& frames, const Id& node, const std::string& attribute);

// Focus members other than the referent that fall under `head`.
std::vector<Id> oracle_distractors(const std::vector<Frame>& frames, const Id& referent, const Id& head,
                                   const std::vector<Id>& focus);

// True iff some subset of the usable attributes (symbol values with a lexeme,
// in `order`) rules out every distractor. Enumerates all subsets.
bool oracle_distinguishable(const Bundle& bundle, const Id& referent, const std::vector<Id>& distractors,
                            const std::string& language);

// Distractors that share the referent's value on every listed attribute.
std::vector<Id> oracle_survivors(const Bundle& bundle, const Id& referent, const std::vector<Id>& distractors,
                                 const std::vector<Property>& attributes);

}  // namespace hyperdoc::testing

#endif  // HYPERDOC_TESTS_SUPPORT_ORACLES_H_

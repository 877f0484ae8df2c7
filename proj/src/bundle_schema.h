#ifndef HYPERDOC_SRC_BUNDLE_SCHEMA_H_
#define HYPERDOC_SRC_BUNDLE_SCHEMA_H_

#include <string_view>
#include <vector>

namespace hyperdoc::schema {

// Key accepted inside a record. Qualified keys take a second word before the
// colon ("slot colour: black").
struct KeySpec {
  std::string_view key;
  std::string_view value_type;  // "id", "id-list", "slot-value", "bool", ...
  bool qualified = false;
  bool repeatable = false;
};

struct RecordSpec {
  std::string_view kind;
  std::string_view extension;  // file extension the record may appear in
  bool id_required = true;
  std::vector<KeySpec> keys;
};

const std::vector<RecordSpec>& records();
const RecordSpec* find_record(std::string_view extension, std::string_view kind);
const KeySpec* find_key(const RecordSpec& record, std::string_view key);

}  // namespace hyperdoc::schema

#endif  // HYPERDOC_SRC_BUNDLE_SCHEMA_H_

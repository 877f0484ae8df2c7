#ifndef HYPERDOC_SLOT_VALUE_H_
#define HYPERDOC_SLOT_VALUE_H_

#include <string>
#include <variant>
#include <vector>

namespace hyperdoc {

using Id = std::string;

// A frame slot filler: symbol, number with unit, text, id reference, or an
// ordered list of those.
class SlotValue {
 public:
  enum class Kind { kSymbol, kNumber, kText, kRef, kList };

  struct Number {
    double value = 0;
    std::string unit;
    bool operator==(const Number&) const = default;
  };

  SlotValue() : SlotValue(symbol("")) {}

  static SlotValue symbol(std::string s);
  static SlotValue number(double v, std::string unit = "");
  static SlotValue text(std::string s);
  static SlotValue ref(Id id);
  static SlotValue list(std::vector<SlotValue> items);

  Kind kind() const { return static_cast<Kind>(data_.index()); }
  bool is(Kind k) const { return kind() == k; }

  // Symbol name, text body or referenced id, depending on kind.
  const std::string& str() const;
  const Number& as_number() const { return std::get<Number>(data_); }
  const std::vector<SlotValue>& items() const {
    return std::get<std::vector<SlotValue>>(data_);
  }

  // Serialized form, the same syntax the bundle parser accepts.
  std::string to_source() const;

  bool operator==(const SlotValue& other) const { return data_ == other.data_; }

 private:
  struct Sym {
    std::string s;
    bool operator==(const Sym&) const = default;
  };
  struct Text {
    std::string s;
    bool operator==(const Text&) const = default;
  };
  struct Ref {
    std::string s;
    bool operator==(const Ref&) const = default;
  };
  using Data = std::variant<Sym, Number, Text, Ref, std::vector<SlotValue>>;

  explicit SlotValue(Data d) : data_(std::move(d)) {}
  Data data_;
};

// Collects every id referenced by a value, descending into lists.
void collect_refs(const SlotValue& value, std::vector<Id>& out);

std::string format_number(double v);

}  // namespace hyperdoc

#endif  // HYPERDOC_SLOT_VALUE_H_

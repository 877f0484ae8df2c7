#include "hyperdoc/slot_value.h"

#include <charconv>
#include <system_error>

namespace hyperdoc {

SlotValue SlotValue::symbol(std::string s) { return SlotValue(Data(Sym{std::move(s)})); }

SlotValue SlotValue::number(double v, std::string unit) {
  return SlotValue(Data(Number{v, std::move(unit)}));
}

SlotValue SlotValue::text(std::string s) { return SlotValue(Data(Text{std::move(s)})); }

SlotValue SlotValue::ref(Id id) { return SlotValue(Data(Ref{std::move(id)})); }

SlotValue SlotValue::list(std::vector<SlotValue> items) { return SlotValue(Data(std::move(items))); }

const std::string& SlotValue::str() const {
  static const std::string kEmpty;
  switch (kind()) {
    case Kind::kSymbol: return std::get<Sym>(data_).s;
    case Kind::kText: return std::get<Text>(data_).s;
    case Kind::kRef: return std::get<Ref>(data_).s;
    default: return kEmpty;
  }
}

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "0";
  return std::string(buf, end);
}

std::string SlotValue::to_source() const {
  switch (kind()) {
    case Kind::kSymbol: return str();
    case Kind::kNumber: {
      const Number& n = as_number();
      std::string out = format_number(n.value);
      if (!n.unit.empty()) out += " " + n.unit;
      return out;
    }
    case Kind::kText: {
      std::string out = "\"";
      for (char c : str()) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      return out + "\"";
    }
    case Kind::kRef: return "@" + str();
    case Kind::kList: {
      std::string out = "[";
      for (size_t i = 0; i < items().size(); ++i) {
        if (i) out += ", ";
        out += items()[i].to_source();
      }
      return out + "]";
    }
  }
  return {};
}

void collect_refs(const SlotValue& value, std::vector<Id>& out) {
  if (value.is(SlotValue::Kind::kRef)) {
    out.push_back(value.str());
  } else if (value.is(SlotValue::Kind::kList)) {
    for (const SlotValue& item : value.items()) collect_refs(item, out);
  }
}

}  // namespace hyperdoc

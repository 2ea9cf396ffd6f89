#include "cardlab/peano_num.hpp"

#include "cardlab/error.hpp"
#include "cardlab/sets.hpp"

namespace cardlab {

NumValue NumValue::fin(Natural n) {
  if (n < 0) throw Error(ErrorKind::UndefinedInput, "peano_num", "num is never negative");
  if (n == 0) return zero();
  return NumValue(Kind::Fin, std::move(n));
}

std::string NumValue::to_string() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Fin: return cardlab::to_string(count_);
    case Kind::Inf: return "inf";
  }
  return {};
}

const char* to_string(NumOrder order) noexcept {
  switch (order) {
    case NumOrder::Less: return "Less";
    case NumOrder::Equal: return "Equal";
    case NumOrder::Greater: return "Greater";
  }
  return "?";
}

NumValue num_add(const NumValue& a, const NumValue& b) {
  if (a.is_infinite() || b.is_infinite()) return NumValue::inf();
  return NumValue::fin(a.count() + b.count());
}

NumOrder num_cmp(const NumValue& a, const NumValue& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return NumOrder::Equal;
    return a.is_infinite() ? NumOrder::Greater : NumOrder::Less;
  }
  if (a.count() < b.count()) return NumOrder::Less;
  if (a.count() > b.count()) return NumOrder::Greater;
  return NumOrder::Equal;
}

NumValue num_of_size(const SizeClass& size) {
  if (size.is_infinite()) return NumValue::inf();
  return NumValue::fin(Natural(size.count));
}

NumValue num_of_class(const SetExpr& s) {
  try {
    return num_of_size(classify_size(s));
  } catch (const Error& e) {
    throw Error(ErrorKind::UnknownSize, "peano_num",
                std::string("cannot classify the size: ") + e.what(), s.to_string());
  }
}

NumValue num_disjoint_union(const SetExpr& a, const SetExpr& b) {
  const std::string subject = a.to_string() + " , " + b.to_string();
  switch (are_disjoint(a, b)) {
    case Truth::True: break;
    case Truth::False:
      throw Error(ErrorKind::NotDisjoint, "peano_num", "the classes share an element", subject);
    case Truth::Unknown:
      throw Error(ErrorKind::UnknownResult, "peano_num",
                  "disjointness is not decidable for these classes", subject);
  }
  return num_add(num_of_class(a), num_of_class(b));
}

}  // namespace cardlab

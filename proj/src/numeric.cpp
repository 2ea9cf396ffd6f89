#include "cardlab/numeric.hpp"

#include <stdexcept>

#include "cardlab/error.hpp"

namespace cardlab {

Truth truth_and(Truth a, Truth b) noexcept {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
  return Truth::True;
}

Truth truth_not(Truth a) noexcept {
  switch (a) {
    case Truth::False: return Truth::True;
    case Truth::True: return Truth::False;
    case Truth::Unknown: break;
  }
  return Truth::Unknown;
}

const char* to_string(Truth t) noexcept {
  switch (t) {
    case Truth::False: return "False";
    case Truth::True: return "True";
    case Truth::Unknown: break;
  }
  return "Unknown";
}

std::string to_string(const Natural& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const Natural num = boost::multiprecision::numerator(r);
  const Natural den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Natural parse_natural(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty numeral");
  Natural value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad numeral");
    value = value * 10 + (c - '0');
  }
  return value;
}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Sort: return "sort error";
    case ErrorKind::Guard: return "guard violation";
    case ErrorKind::UndefinedInput: return "undefined input";
    case ErrorKind::UnknownResult: return "unknown result";
    case ErrorKind::UnknownSize: return "unknown size";
    case ErrorKind::NotDisjoint: return "not disjoint";
    case ErrorKind::Exhausted: return "exhausted";
    case ErrorKind::SizeMismatch: return "size mismatch";
    case ErrorKind::UnitMismatch: return "unit mismatch";
    case ErrorKind::SizeLimit: return "size limit";
    case ErrorKind::ResourceLimit: return "resource limit";
    case ErrorKind::Catalog: return "catalog error";
  }
  return "error";
}

Error::Error(ErrorKind kind, std::string module, const std::string& message,
             std::string subject, std::optional<std::size_t> position)
    : std::runtime_error(message),
      kind_(kind),
      module_(std::move(module)),
      subject_(std::move(subject)),
      position_(position) {}

Error Error::with_subject(std::string subject) const {
  if (!subject_.empty()) return *this;
  return Error(kind_, module_, what(), std::move(subject), position_);
}

Error Error::with_position(std::size_t position) const {
  if (position_) return *this;
  return Error(kind_, module_, what(), subject_, position);
}

}  // namespace cardlab

namespace cardlab {

std::string describe(const Error& e) {
  std::string out = e.module() + ": " + to_string(e.kind());
  if (e.position()) out += " at " + std::to_string(*e.position());
  out += ": ";
  out += e.what();
  if (!e.subject().empty()) out += " [" + e.subject() + "]";
  return out;
}

}  // namespace cardlab

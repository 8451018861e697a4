#include "robustflow/rational.hpp"

#include <cctype>

#include "robustflow/error.hpp"

namespace robustflow {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kInvalidInstance: return "InvalidInstance";
    case ErrorKind::kPathLimitExceeded: return "PathLimitExceeded";
    case ErrorKind::kEnumerationBudgetExceeded:
      return "EnumerationBudgetExceeded";
    case ErrorKind::kInfiniteCapacity: return "InfiniteCapacity";
    case ErrorKind::kNotAFlow: return "NotAFlow";
    case ErrorKind::kNotUnitCapacity: return "NotUnitCapacity";
    case ErrorKind::kCapacityOutOfRange: return "CapacityOutOfRange";
    case ErrorKind::kNonIntegralCapacity: return "NonIntegralCapacity";
    case ErrorKind::kNotFeasible: return "NotFeasible";
    case ErrorKind::kUnboundedFlow: return "UnboundedFlow";
    case ErrorKind::kInvalidCliqueSize: return "InvalidCliqueSize";
    case ErrorKind::kSizeMismatch: return "SizeMismatch";
    case ErrorKind::kInvalidTerminals: return "InvalidTerminals";
    case ErrorKind::kNotDisjoint: return "NotDisjoint";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kSolverFailure: return "SolverFailure";
  }
  return "Unknown";
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool is_integer_token(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num =
      slash == std::string_view::npos ? text : text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_token(num, true) || !is_integer_token(den, false)) {
    throw Error(ErrorKind::kParse,
                "malformed rational '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::kParse,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(Integer(std::string(num), 10), d);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Capacity::Capacity(const Rational& value) : value_(value) {
  value_.canonicalize();
  if (value_ < 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "capacity must be nonnegative, got " + to_string(value_));
  }
}

const Rational& Capacity::value() const {
  if (infinite_) {
    throw Error(ErrorKind::kInfiniteCapacity, "capacity is INF");
  }
  return value_;
}

bool operator==(const Capacity& a, const Capacity& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Capacity& a, const Capacity& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

Capacity operator+(const Capacity& a, const Capacity& b) {
  if (a.infinite_ || b.infinite_) return Capacity::infinite();
  return Capacity(Rational(a.value_ + b.value_));
}

std::string to_string(const Capacity& capacity) {
  return capacity.is_infinite() ? std::string("INF")
                                : to_string(capacity.value());
}

Capacity parse_capacity(std::string_view text) {
  if (text == "INF") return Capacity::infinite();
  Rational r = parse_rational(text);
  if (r < 0) {
    throw Error(ErrorKind::kParse,
                "negative capacity '" + std::string(text) + "'");
  }
  return Capacity(r);
}

}  // namespace robustflow

#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace robustflow {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms; integers keep the "/1" suffix.
std::string to_string(const Rational& value);

// Accepts "<int>" or "<num>/<den>" with den > 0. Throws Error(kParse).
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& value);

Integer lcm(const Integer& a, const Integer& b);

// Arc capacity: an exact nonnegative rational or INF.
class Capacity {
 public:
  Capacity() = default;
  Capacity(const Rational& value);  // NOLINT(google-explicit-constructor)
  Capacity(long value) : Capacity(Rational(value)) {}  // NOLINT
  // Lets unevaluated gmpxx expressions such as `1 + eps` convert directly.
  template <class T, class U>
  Capacity(const __gmp_expr<T, U>& expr)  // NOLINT
      : Capacity(Rational(expr)) {}

  static Capacity infinite() {
    Capacity c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  // Precondition: is_finite().
  const Rational& value() const;

  friend bool operator==(const Capacity& a, const Capacity& b);
  friend std::strong_ordering operator<=>(const Capacity& a,
                                          const Capacity& b);
  friend Capacity operator+(const Capacity& a, const Capacity& b);

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

// "INF" or the rational form.
std::string to_string(const Capacity& capacity);
Capacity parse_capacity(std::string_view text);

}  // namespace robustflow

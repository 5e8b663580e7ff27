#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace primechar {

/// Arbitrary-precision non-negative integer.
///
/// Thin value wrapper over boost::multiprecision::cpp_int that keeps the
/// non-negativity invariant: subtraction below zero throws Underflow and
/// division by zero throws DivisionByZero instead of producing garbage.
class Natural {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Natural() = default;

  template <std::integral T>
  Natural(T value) : rep_(value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (value < 0) throw Underflow("negative value is not a natural number");
    }
  }

  explicit Natural(Rep value) : rep_(std::move(value)) {
    if (rep_.sign() < 0) throw Underflow("negative value is not a natural number");
  }

  /// Parses a non-empty string of ASCII decimal digits. No sign, no spaces.
  static Natural from_decimal(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty numeral");
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw InvalidArgument("malformed numeral '" + std::string(text) + "'");
      }
    }
    // a leading 0 would make cpp_int read octal
    const auto first = text.find_first_not_of('0');
    if (first == std::string_view::npos) return Natural();
    return Natural(Rep(std::string(text.substr(first))));
  }

  [[nodiscard]] std::string to_string() const { return rep_.str(); }
  [[nodiscard]] const Rep& rep() const noexcept { return rep_; }
  [[nodiscard]] bool is_zero() const noexcept { return rep_.is_zero(); }
  [[nodiscard]] bool is_odd() const { return boost::multiprecision::bit_test(rep_, 0); }

  [[nodiscard]] bool fits_u64() const {
    return rep_ <= std::numeric_limits<std::uint64_t>::max();
  }

  [[nodiscard]] std::uint64_t to_u64() const {
    if (!fits_u64()) throw InvalidArgument("value " + to_string() + " exceeds 64 bits");
    return rep_.convert_to<std::uint64_t>();
  }

  [[nodiscard]] std::size_t decimal_digits() const { return to_string().size(); }

  Natural& operator+=(const Natural& rhs) {
    rep_ += rhs.rep_;
    return *this;
  }
  Natural& operator-=(const Natural& rhs) {
    if (rep_ < rhs.rep_) throw Underflow("natural subtraction underflow");
    rep_ -= rhs.rep_;
    return *this;
  }
  Natural& operator*=(const Natural& rhs) {
    rep_ *= rhs.rep_;
    return *this;
  }
  // Floor division.
  Natural& operator/=(const Natural& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    rep_ /= rhs.rep_;
    return *this;
  }
  Natural& operator%=(const Natural& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    rep_ %= rhs.rep_;
    return *this;
  }
  Natural& operator++() {
    ++rep_;
    return *this;
  }

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator/(Natural lhs, const Natural& rhs) { return lhs /= rhs; }
  friend Natural operator%(Natural lhs, const Natural& rhs) { return lhs %= rhs; }

  friend bool operator==(const Natural& a, const Natural& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = a.rep_.compare(b.rep_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.rep_; }

 private:
  Rep rep_;
};

/// Quotient that requires `divisor | dividend`.
inline Natural exact_div(const Natural& dividend, const Natural& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  Natural::Rep q;
  Natural::Rep r;
  boost::multiprecision::divide_qr(dividend.rep(), divisor.rep(), q, r);
  if (!r.is_zero()) {
    throw NotDivisible(divisor.to_string() + " does not divide " + dividend.to_string());
  }
  return Natural(std::move(q));
}

inline Natural pow(const Natural& base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned>::max()) {
    if (base <= Natural(1)) return base.is_zero() ? Natural(0) : Natural(1);
    throw InvalidArgument("exponent too large");
  }
  return Natural(boost::multiprecision::pow(base.rep(), static_cast<unsigned>(exponent)));
}

/// base^exponent mod modulus with an arbitrary-size exponent.
inline Natural pow_mod(const Natural& base, const Natural& exponent, const Natural& modulus) {
  if (modulus.is_zero()) throw DivisionByZero();
  if (modulus == Natural(1)) return 0;
  return Natural(boost::multiprecision::powm(base.rep(), exponent.rep(), modulus.rep()));
}

inline Natural gcd(const Natural& a, const Natural& b) {
  return Natural(boost::multiprecision::gcd(a.rep(), b.rep()));
}

inline Natural isqrt(const Natural& n) { return Natural(boost::multiprecision::sqrt(n.rep())); }

inline const Natural& min(const Natural& a, const Natural& b) { return b < a ? b : a; }

/// An element of Z/mZ, stored as its least non-negative representative.
class ResidueClass {
 public:
  ResidueClass(const Natural& value, Natural modulus) : modulus_(std::move(modulus)) {
    if (modulus_.is_zero()) throw InvalidArgument("residue modulus must be at least 1");
    value_ = value % modulus_;
  }

  [[nodiscard]] const Natural& value() const noexcept { return value_; }
  [[nodiscard]] const Natural& modulus() const noexcept { return modulus_; }

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ResidueClass& r) {
    return os << r.value_ << " (mod " << r.modulus_ << ")";
  }

 private:
  Natural value_;
  Natural modulus_;
};

}  // namespace primechar

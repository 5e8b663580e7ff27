#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "natural.hpp"

namespace primechar {

/// Largest q with q * m <= x.
inline Natural floor_div(const Natural& x, const Natural& m) {
  if (m.is_zero()) throw DivisionByZero();
  return x / m;
}

/// Base-b expansion n = digits[0] + digits[1] b + ... + digits[l] b^l,
/// least significant digit first.
struct DigitExpansion {
  Natural n;
  Natural base;
  std::vector<Natural> digits;

  /// Index l of the leading digit.
  [[nodiscard]] std::size_t top() const { return digits.size() - 1; }

  /// digits[from] + digits[from+1] base + ... + digits[to-1] base^(to-1-from).
  [[nodiscard]] Natural assemble(std::size_t from, std::size_t to) const {
    Natural acc;
    to = std::min(to, digits.size());
    for (std::size_t i = to; i > from; --i) acc = acc * base + digits[i - 1];
    return acc;
  }

  [[nodiscard]] Natural reassemble() const { return assemble(0, digits.size()); }
};

inline DigitExpansion base_digits(const Natural& n, const Natural& base) {
  if (base < Natural(2)) throw InvalidBase("base must be at least 2, got " + base.to_string());
  DigitExpansion out{n, base, {}};
  Natural rest = n;
  do {
    Natural::Rep q;
    Natural::Rep r;
    boost::multiprecision::divide_qr(rest.rep(), base.rep(), q, r);
    out.digits.emplace_back(std::move(r));
    rest = Natural(std::move(q));
  } while (!rest.is_zero());
  return out;
}

/// p = q^x * k with q the smallest prime factor of p and gcd(q, k) = 1.
struct FactorMultiplicity {
  Natural q;
  std::uint64_t x = 0;
  Natural k;

  [[nodiscard]] bool is_prime_input() const { return x == 1 && k == Natural(1); }
};

namespace detail {

inline Natural smallest_prime_factor(const Natural& p) {
  if (p.fits_u64()) {
    const std::uint64_t v = p.to_u64();
    if (v % 2 == 0) return 2;
    for (std::uint64_t d = 3; static_cast<unsigned __int128>(d) * d <= v; d += 2) {
      if (v % d == 0) return d;
    }
    return p;
  }
  if (!p.is_odd()) return 2;
  for (Natural d = 3; d * d <= p; d += 2) {
    if ((p % d).is_zero()) return d;
  }
  return p;
}

}  // namespace detail

/// Trial division from 2 upward; inputs are expected to be desk scale.
inline FactorMultiplicity smallest_prime_factor_decomposition(const Natural& p) {
  if (p < Natural(2)) {
    throw InvalidArgument("factorization needs p >= 2, got " + p.to_string());
  }
  FactorMultiplicity out;
  out.q = detail::smallest_prime_factor(p);
  out.k = p;
  while ((out.k % out.q).is_zero()) {
    out.k /= out.q;
    ++out.x;
  }
  return out;
}

inline bool is_prime(const Natural& p) {
  return p >= Natural(2) && smallest_prime_factor_decomposition(p).is_prime_input();
}

namespace detail {

inline void require_prime(const Natural& p, const char* what) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::string(what) + ": " + p.to_string() + " is not prime");
  }
}

// sum_{i>=1} floor(n / p^i); caller guarantees p >= 2.
inline Natural legendre_sum(Natural n, const Natural& p) {
  Natural total;
  while (!n.is_zero()) {
    n /= p;
    total += n;
  }
  return total;
}

}  // namespace detail

/// Exponent of the prime p in n!.
inline Natural legendre_valuation(const Natural& n, const Natural& p) {
  detail::require_prime(p, "legendre_valuation");
  return detail::legendre_sum(n, p);
}

/// (p^k - 1)/(p - 1) - k = 1 + p + ... + p^(k-1) - k, the exponent of p in (p^k - 1)!.
inline Natural valuation_closed_form(const Natural& p, std::uint64_t k) {
  detail::require_prime(p, "valuation_closed_form");
  if (k == 0) throw InvalidArgument("valuation_closed_form needs k >= 1");
  return exact_div(pow(p, k) - 1, p - 1) - k;
}

inline Natural factorial(std::uint64_t n) {
  Natural::Rep acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
  return Natural(std::move(acc));
}

/// Cofactor c of (p^k - 1)! = c * (p-1)! * p^E, E = valuation_closed_form(p, k).
/// gcd(p, c) = 1 is checked; failure of either the exact division or the
/// coprimality raises TheoremViolation.
inline Natural cofactor_decomposition(const Natural& p, std::uint64_t k) {
  const Natural exponent = valuation_closed_form(p, k);
  const Natural pk = pow(p, k);
  if (pk > Natural(1'000'000)) {
    throw InvalidArgument("cofactor_decomposition: p^k = " + pk.to_string() + " is too large");
  }
  const Natural whole = factorial((pk - 1).to_u64());
  const Natural divisor = factorial((p - 1).to_u64()) * pow(p, exponent.to_u64());
  Natural cofactor;
  try {
    cofactor = exact_div(whole, divisor);
  } catch (const NotDivisible&) {
    throw TheoremViolation("(p^k-1)! is not divisible by (p-1)! p^E for p=" + p.to_string() +
                           ", k=" + std::to_string(k));
  }
  if (gcd(cofactor, p) != Natural(1)) {
    throw TheoremViolation("cofactor of (p^k-1)! shares a factor with p=" + p.to_string() +
                           ", k=" + std::to_string(k));
  }
  return cofactor;
}

}  // namespace primechar

#pragma once

#include <cstdint>
#include <vector>

#include "core_arith.hpp"
#include "errors.hpp"
#include "natural.hpp"

namespace primechar {

/// C(n, m), zero when m > n.
///
/// Multiplicative formula over min(m, n - m) factors. Each step divides
/// exactly, so the running value is always C(n - t + i, i) and never much
/// larger than the result.
inline Natural binom_exact(const Natural& n, const Natural& m) {
  if (m > n) return 0;
  const Natural::Rep t = min(m, n - m).rep();
  const Natural::Rep base = n.rep() - t;
  Natural::Rep acc = 1;
  for (Natural::Rep i = 1; i <= t; ++i) {
    acc *= base + i;
    acc /= i;
  }
  return Natural(std::move(acc));
}

/// Running value of C(n, m) for fixed m as n advances by one.
///
/// C(n+1, m) = C(n, m) (n+1) / (n+1-m), exact at every step.
class BinomialColumn {
 public:
  BinomialColumn(Natural m, Natural n) : m_(std::move(m)), n_(std::move(n)) {
    value_ = binom_exact(n_, m_);
  }

  [[nodiscard]] const Natural& n() const noexcept { return n_; }
  [[nodiscard]] const Natural& m() const noexcept { return m_; }
  [[nodiscard]] const Natural& value() const noexcept { return value_; }

  void advance() {
    ++n_;
    if (n_ < m_) return;
    if (n_ == m_) {
      value_ = 1;
      return;
    }
    value_ = exact_div(value_ * n_, n_ - m_);
  }

 private:
  Natural m_;
  Natural n_;
  Natural value_;
};

/// C(n, m) mod p as the product of digit binomials C(n_i, m_i) mod p.
inline ResidueClass binom_mod_p_digits(const Natural& n, const Natural& m, const Natural& p) {
  detail::require_prime(p, "binom_mod_p_digits");
  if (m > n) return {0, p};
  const auto nd = base_digits(n, p);
  const auto md = base_digits(m, p);
  Natural::Rep acc = 1;
  const Natural::Rep& mod = p.rep();
  for (std::size_t i = 0; i < md.digits.size(); ++i) {
    const Natural& ni = nd.digits[i];
    const Natural& mi = md.digits[i];
    if (mi > ni) return {0, p};
    // digits are < p, so no factor below is divisible by p
    const Natural::Rep t = min(mi, ni - mi).rep();
    Natural::Rep num = 1;
    Natural::Rep den = 1;
    for (Natural::Rep j = 1; j <= t; ++j) {
      num = num * (ni.rep() - t + j) % mod;
      den = den * j % mod;
    }
    acc = acc * num % mod;
    if (den != 1) {
      const Natural::Rep inverse = boost::multiprecision::powm(den, Natural::Rep(mod - 2), mod);
      acc = acc * inverse % mod;
    }
  }
  return {Natural(std::move(acc)), p};
}

/// C(n, m) mod p^e through the p-free part of factorials.
///
/// n! = p^(v_p(n!)) * N(n), and N(n) mod p^e follows from the table
/// T[i] = product of j <= i with p not dividing j (mod p^e):
///   N(n) = T[p^e - 1]^floor(n / p^e) * T[n mod p^e] * N(floor(n / p)).
/// The table is built once and is immutable, so one instance can serve a
/// whole scan and be shared across threads.
class PrimePowerBinomial {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 22;

  PrimePowerBinomial(const Natural& p, std::uint64_t e) : prime_(p), exponent_(e) {
    detail::require_prime(p, "binom_mod_prime_power");
    if (e == 0) throw InvalidArgument("binom_mod_prime_power needs e >= 1");
    const Natural pe = pow(p, e);
    if (pe > Natural(kMaxModulus)) {
      throw InvalidArgument("binom_mod_prime_power: p^e = " + pe.to_string() + " exceeds table limit");
    }
    modulus_ = pe.to_u64();
    const std::uint64_t pv = p.to_u64();
    table_.resize(modulus_);
    table_[0] = 1 % modulus_;
    for (std::uint64_t i = 1; i < modulus_; ++i) {
      table_[i] = (i % pv == 0) ? table_[i - 1] : table_[i - 1] * i % modulus_;
    }
  }

  [[nodiscard]] Natural modulus() const { return modulus_; }

  [[nodiscard]] ResidueClass operator()(const Natural& n, const Natural& m) const {
    if (m > n) return {0, modulus_};
    const Natural r = n - m;
    const Natural v = detail::legendre_sum(n, prime_) - detail::legendre_sum(m, prime_) -
                      detail::legendre_sum(r, prime_);
    if (v >= Natural(exponent_)) return {0, modulus_};
    std::uint64_t unit = unit_factorial(n);
    unit = unit * inverse(unit_factorial(m)) % modulus_;
    unit = unit * inverse(unit_factorial(r)) % modulus_;
    const std::uint64_t scale = pow(prime_, v.to_u64()).to_u64();
    return {Natural(unit * scale % modulus_), modulus_};
  }

 private:
  [[nodiscard]] std::uint64_t unit_factorial(Natural n) const {
    const Natural mod(modulus_);
    const Natural full_block(table_[modulus_ - 1]);
    std::uint64_t acc = 1 % modulus_;
    while (!n.is_zero()) {
      const std::uint64_t blocks = pow_mod(full_block, n / mod, mod).to_u64();
      acc = acc * blocks % modulus_ * table_[(n % mod).to_u64()] % modulus_;
      n /= prime_;
    }
    return acc;
  }

  // a must be a unit mod modulus_.
  [[nodiscard]] std::uint64_t inverse(std::uint64_t a) const {
    std::int64_t old_r = static_cast<std::int64_t>(a);
    std::int64_t r = static_cast<std::int64_t>(modulus_);
    std::int64_t old_s = 1;
    std::int64_t s = 0;
    while (r != 0) {
      const std::int64_t q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1 && modulus_ != 1) throw TheoremViolation("p-free factorial is not a unit");
    const auto m = static_cast<std::int64_t>(modulus_);
    return static_cast<std::uint64_t>(((old_s % m) + m) % m);
  }

  Natural prime_;
  std::uint64_t exponent_;
  std::uint64_t modulus_ = 1;
  std::vector<std::uint64_t> table_;
};

inline ResidueClass binom_mod_prime_power(const Natural& n, const Natural& m, const Natural& p,
                                          std::uint64_t e) {
  return PrimePowerBinomial(p, e)(n, m);
}

}  // namespace primechar

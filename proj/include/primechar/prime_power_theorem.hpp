#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "characterization.hpp"
#include "core_arith.hpp"
#include "errors.hpp"
#include "natural.hpp"

namespace primechar {

/// n = high * p^k + low with low < p^k.
///
/// For k = 0 the split is the conventional (high = n, low = 0) and
/// `conventional` is set.
struct DigitSplit {
  Natural n;
  Natural p;
  std::uint64_t k = 0;
  Natural high;
  Natural low;
  bool conventional = false;
};

inline DigitSplit split_at_power(const Natural& n, const Natural& p, std::uint64_t k) {
  if (p < Natural(2)) throw InvalidBase("split_at_power needs p >= 2, got " + p.to_string());
  if (k == 0) return {n, p, 0, n, 0, true};

  const Natural pk = pow(p, k);
  DigitSplit split{n, p, k, floor_div(n, pk), n % pk, false};

  const DigitExpansion digits = base_digits(n, p);
  const auto kk = static_cast<std::size_t>(k);
  if (digits.assemble(kk, digits.digits.size()) != split.high ||
      digits.assemble(0, kk) != split.low) {
    throw TheoremViolation("digit blocks disagree with division for n=" + n.to_string());
  }
  return split;
}

/// C(n, p^k) against floor(n / p^k) modulo the prime p.
inline CongruenceReport prime_power_congruence_check(const Natural& n, const Natural& p,
                                                     std::uint64_t k) {
  detail::require_prime(p, "prime_power_congruence_check");
  const Natural pk = pow(p, k);
  return detail::make_report(n, pk, p, binom_exact(n, pk));
}

/// prime_power_congruence_check for n = 0..n_max with a reused binomial column.
inline std::vector<CongruenceReport> prime_power_congruence_scan(const Natural& p, std::uint64_t k,
                                                                 const Natural& n_max) {
  detail::require_prime(p, "prime_power_congruence_scan");
  const Natural pk = pow(p, k);
  std::vector<CongruenceReport> out;
  BinomialColumn column(pk, 0);
  while (true) {
    out.push_back(detail::make_report(column.n(), pk, p, column.value()));
    if (column.n() >= n_max) break;
    column.advance();
  }
  return out;
}

namespace detail {

inline void require_lemma_args(const Natural& a, const Natural& b, const Natural& p,
                               std::uint64_t k, const char* what) {
  require_prime(p, what);
  if (k == 0) throw InvalidArgument(std::string(what) + " needs k >= 1");
  if (a.is_zero()) throw InvalidArgument(std::string(what) + " needs a >= 1");
  if (b >= pow(p, k)) throw InvalidArgument(std::string(what) + " needs b <= p^k - 1");
}

// prod_{r=1}^{b} (a p^k + r) * prod_{r=1}^{p^k-1-b} (a p^k - r), exactly.
inline Natural two_sided_product(const Natural& a, const Natural& b, const Natural& pk) {
  const Natural centre = a * pk;
  Natural::Rep acc = 1;
  for (Natural::Rep r = 1; r <= b.rep(); ++r) acc *= centre.rep() + r;
  const Natural::Rep below = pk.rep() - 1 - b.rep();
  for (Natural::Rep r = 1; r <= below; ++r) acc *= centre.rep() - r;
  return Natural(std::move(acc));
}

}  // namespace detail

/// The p^k - 1 factors of C(a p^k + b, p^k) other than a p^k multiply to
/// (p^k - 1)! modulo p^k. Returns that common residue.
inline ResidueClass product_residue_lemma(const Natural& a, const Natural& b, const Natural& p,
                                          std::uint64_t k) {
  detail::require_lemma_args(a, b, p, k, "product_residue_lemma");
  const Natural pk = pow(p, k);
  if (pk > Natural(1'000'000)) throw InvalidArgument("product_residue_lemma: p^k too large");
  ResidueClass product(detail::two_sided_product(a, b, pk), pk);
  ResidueClass expected(factorial((pk - 1).to_u64()), pk);
  if (product != expected) {
    throw TheoremViolation("two-sided product is not (p^k-1)! mod p^k for a=" + a.to_string() +
                           ", b=" + b.to_string() + ", p=" + p.to_string() +
                           ", k=" + std::to_string(k));
  }
  return product;
}

struct FloorPowerReport {
  Natural x;
  Natural p;
  std::uint64_t k = 0;
  std::uint64_t s = 0;
  Natural q;        // floor(x / p^k)
  Natural r;        // x mod p^k
  Natural r_prime;  // x mod p^(ks)
  Natural modulus;  // p^(ks)
  bool hypothesis_holds = false;  // floor(x / p^(ks)) == q^s
  bool conclusion_holds = false;  // r == r_prime
};

/// If floor(x / p^(ks)) = floor(x / p^k)^s then x == x mod p^k (mod p^(ks)).
inline FloorPowerReport check_floor_power_lemma(const Natural& x, const Natural& p,
                                                std::uint64_t k, std::uint64_t s) {
  detail::require_prime(p, "check_floor_power_lemma");
  if (x.is_zero()) throw InvalidArgument("check_floor_power_lemma needs x >= 1");
  if (s == 0) throw InvalidArgument("check_floor_power_lemma needs s >= 1");

  FloorPowerReport rep{x, p, k, s, {}, {}, {}, {}, false, false};
  if (k == 0) {
    // everything is congruent mod 1
    rep.q = x;
    rep.modulus = 1;
    rep.hypothesis_holds = true;
    rep.conclusion_holds = true;
    return rep;
  }
  const Natural pk = pow(p, k);
  rep.modulus = pow(pk, s);
  rep.q = floor_div(x, pk);
  rep.r = x % pk;
  rep.r_prime = x % rep.modulus;
  rep.hypothesis_holds = floor_div(x, rep.modulus) == pow(rep.q, s);
  rep.conclusion_holds = rep.r == rep.r_prime;
  return rep;
}

struct EqualityProbe {
  Natural lhs;
  Natural rhs;
  bool equal = false;
};

/// Compares the two-sided product with a^(p^k-1) p^(k(p^k-1)) + (p^k-1)!.
/// Nothing is asserted; the outcome is reported as computed.
inline EqualityProbe section3_equality_probe(const Natural& a, const Natural& b, const Natural& p,
                                             std::uint64_t k) {
  detail::require_lemma_args(a, b, p, k, "section3_equality_probe");
  const Natural pk = pow(p, k);
  if (pk > Natural(1'000'000)) throw InvalidArgument("section3_equality_probe: p^k too large");
  const std::uint64_t width = (pk - 1).to_u64();
  const Natural leading = pow(a, width);  // c_(k)
  EqualityProbe probe{detail::two_sided_product(a, b, pk),
                      leading * pow(p, k * width) + factorial(width), false};
  probe.equal = probe.lhs == probe.rhs;
  return probe;
}

}  // namespace primechar

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "core_arith.hpp"
#include "errors.hpp"
#include "natural.hpp"

namespace primechar {

/// Both sides of C(n, m) == floor(n / m) (mod p).
struct CongruenceReport {
  Natural n;
  Natural m;  // lower index of the binomial: p or p^k
  Natural p;
  ResidueClass binom_residue;
  ResidueClass floor_residue;
  bool holds = false;
};

namespace detail {

inline CongruenceReport make_report(const Natural& n, const Natural& m, const Natural& p,
                                    const Natural& binomial) {
  ResidueClass lhs(binomial, p);
  ResidueClass rhs(floor_div(n, m), p);
  const bool holds = lhs == rhs;
  return {n, m, p, std::move(lhs), std::move(rhs), holds};
}

}  // namespace detail

/// C(n, p) against floor(n / p) modulo p. p may be composite.
inline CongruenceReport congruence_check(const Natural& n, const Natural& p) {
  if (p < Natural(2)) throw InvalidArgument("congruence_check needs p >= 2, got " + p.to_string());
  return detail::make_report(n, p, p, binom_exact(n, p));
}

/// congruence_check(n, p) for n = 0..n_max, reusing the binomial across n.
inline std::vector<CongruenceReport> congruence_scan(const Natural& p, const Natural& n_max) {
  if (p < Natural(2)) throw InvalidArgument("congruence_scan needs p >= 2, got " + p.to_string());
  std::vector<CongruenceReport> out;
  BinomialColumn column(p, 0);
  while (true) {
    out.push_back(detail::make_report(column.n(), p, p, column.value()));
    if (column.n() >= n_max) break;
    column.advance();
  }
  return out;
}

/// Checks that the p - 1 factors of C(ap+b, p) other than ap, namely
/// ap+1..ap+b and ap-1..ap-(p-1-b), hit each nonzero residue mod p once,
/// and that their product is (p-1)! mod p.
inline bool residue_system_check(const Natural& a, const Natural& b, const Natural& p) {
  detail::require_prime(p, "residue_system_check");
  if (b >= p) throw InvalidArgument("residue_system_check needs b < p");
  if (a.is_zero() && b + 1 < p) {
    throw InvalidArgument("residue_system_check: a = 0 makes ap - r negative");
  }
  const std::uint64_t pv = p.to_u64();
  const std::uint64_t bv = b.to_u64();
  const Natural ap = a * p;

  std::vector<std::uint32_t> hits(pv, 0);
  Natural product = 1;
  auto visit = [&](const Natural& term) {
    const Natural residue = term % p;
    ++hits[residue.to_u64()];
    product = product * residue % p;
  };
  for (std::uint64_t r = 1; r <= bv; ++r) visit(ap + r);
  for (std::uint64_t r = 1; r <= pv - 1 - bv; ++r) visit(ap - r);

  if (hits[0] != 0) return false;
  for (std::uint64_t i = 1; i < pv; ++i) {
    if (hits[i] != 1) return false;
  }
  return product == factorial(pv - 1) % p;
}

/// The n = p + q witness that a composite p breaks the congruence.
struct CompositeWitness {
  Natural p;
  Natural q;
  std::uint64_t x = 0;
  Natural cofactor;
  Natural n;
  ResidueClass binom_residue_qx;  // C(p+q, p) mod q^x
  ResidueClass floor_residue_qx;  // floor((p+q)/p) mod q^x
  Natural predicted_residue;      // (q^(x-1) cofactor + 1) mod q^x
};

inline CompositeWitness witness_for_composite(const Natural& p) {
  if (p < Natural(4)) throw NotComposite(p.to_string() + " is not composite");
  const FactorMultiplicity f = smallest_prime_factor_decomposition(p);
  if (f.is_prime_input()) throw NotComposite(p.to_string() + " is prime, not composite");

  const Natural qx = pow(f.q, f.x);
  const Natural n = p + f.q;
  CompositeWitness w{p,
                     f.q,
                     f.x,
                     f.k,
                     n,
                     ResidueClass(binom_exact(n, p), qx),
                     ResidueClass(floor_div(n, p), qx),
                     (pow(f.q, f.x - 1) * f.k + 1) % qx};

  const std::string where = " (p=" + p.to_string() + ")";
  if (w.binom_residue_qx.value() != w.predicted_residue) {
    throw TheoremViolation("C(p+q,p) mod q^x differs from q^(x-1)k+1" + where);
  }
  if (w.floor_residue_qx.value() != Natural(1)) {
    throw TheoremViolation("floor((p+q)/p) is not 1 mod q^x" + where);
  }
  if (w.binom_residue_qx == w.floor_residue_qx) {
    throw TheoremViolation("witness congruence holds mod q^x" + where);
  }
  if (congruence_check(n, p).holds) {
    throw TheoremViolation("witness congruence holds mod p" + where);
  }
  return w;
}

struct PrimalityVerdict {
  bool is_prime = false;
  std::optional<CongruenceReport> failing;
};

/// Prime iff C(p+q, p) == floor((p+q)/p) (mod p) for every prime q <= sqrt(p).
///
/// A composite p has its smallest prime factor below sqrt(p), and the
/// witness at n = p + q for that factor fails, so the finite scan decides.
inline PrimalityVerdict is_prime_by_characterization(const Natural& p) {
  if (p < Natural(2)) {
    throw InvalidArgument("is_prime_by_characterization needs p >= 2, got " + p.to_string());
  }
  const Natural limit = isqrt(p);
  for (Natural q = 2; q <= limit; ++q) {
    if (!is_prime(q)) continue;
    CongruenceReport report = congruence_check(p + q, p);
    if (!report.holds) return {false, std::move(report)};
  }
  return {true, std::nullopt};
}

}  // namespace primechar

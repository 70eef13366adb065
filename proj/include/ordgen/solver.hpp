#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordgen/arith_spec.hpp"

namespace ordgen {

/// c * q^{-a}.
struct DeficiencyTerm {
  mpz_class coeff;
  long exponent = 0;

  bool operator==(const DeficiencyTerm&) const = default;
};

/// Evaluates sum c_j q^{-a_j} exactly.
mpq_class eval_deficiency(const std::vector<DeficiencyTerm>& terms, const mpz_class& q);

/// Upper bound, valid at every prime not in special_primes(spec), on
/// 1 - (count of the last copy)/|M_n(F_{q^r})|^k for the worst splitting
/// pattern of group (n, r). Below 1 means the group fits at level k.
struct GroupBound {
  int n = 1;
  int r = 1;
  std::int64_t worst_copies = 0;
  std::vector<DeficiencyTerm> last_term;
};

struct CutoffCertificate {
  int k = 1;
  /// Every non-special prime p >= q0 satisfies the capacity condition at k.
  std::uint64_t q0 = 2;
  std::vector<GroupBound> groups;
  /// max over groups of the last-term bound at q0 (< 1), and at q0 - 1
  /// (>= 1) unless q0 = 2.
  mpq_class margin_at_q0;
  std::optional<mpq_class> margin_below_q0;
};

/// Throws NoCutoff when some bound has a term independent of q.
CutoffCertificate prime_cutoff(const OrderSpec& spec, int k);

enum class VerdictKind { Exact, TwoOrThree, OneOrTwo };
std::string_view to_string(VerdictKind v);

struct PrimeCheck {
  std::uint64_t p = 2;
  int min_k = 1;
  bool approximate = false;
};

struct Verdict {
  int h = 1;
  VerdictKind kind = VerdictKind::OneOrTwo;
  /// 2 when h = 2, no factor has degree 2 and the order is free.
  std::optional<int> refined;
  std::string annotation;
  /// 1 when every factor is commutative, else 2.
  int r_k = 1;
  std::vector<std::uint64_t> critical_primes;
  CutoffCertificate cutoff;
  /// Primes decided individually: all primes below the cutoff and the
  /// special primes.
  std::vector<PrimeCheck> checked;
  /// Some rank >= 4 count was bounded instead of decided; h is then an
  /// upper bound.
  bool approximate = false;
};

Verdict smallest_h(const OrderSpec& spec);

struct DensityFactor {
  std::uint64_t p = 2;
  mpq_class value;
};

struct DensityInterval {
  int k = 1;
  std::uint64_t bound = 0;
  bool zero = false;
  std::string zero_reason;
  mpq_class lower;
  mpq_class upper;
  /// Certified bound on sum over p > B of the local deficiencies.
  std::optional<mpq_class> tail;
  std::vector<DensityFactor> factors;
  std::vector<std::string> notes;
};

/// Smallest admissible truncation bound for density().
std::uint64_t density_min_bound(const OrderSpec& spec);

/// Throws BoundTooSmall, UnsupportedRank (some degree >= 4).
DensityInterval density(const OrderSpec& spec, int k, std::uint64_t bound);

/// Quaternion algebra over Q ramified exactly at `ramified` (index 2 there),
/// taken `copies` times; Lambda free.
OrderSpec quaternion_spec(const std::vector<std::uint64_t>& ramified, std::int64_t copies);

struct QuaternionRange {
  int h = 1;
  std::int64_t m_from = 1;
  std::int64_t m_to = 1;
  /// True when h(m_to + 1) == h, i.e. the range continues past m_max.
  bool open = false;
};

struct QuaternionTable {
  std::vector<std::uint64_t> ramified;
  std::int64_t m_max = 1;
  /// h(m) for m = 1..m_max.
  std::vector<int> h;
  std::vector<QuaternionRange> ranges;
};

QuaternionTable quaternion_example(const std::vector<std::uint64_t>& ramified, std::int64_t m_max);

}  // namespace ordgen

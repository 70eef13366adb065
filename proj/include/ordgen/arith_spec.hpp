#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordgen/counting.hpp"
#include "ordgen/finalg.hpp"
#include "ordgen/poly_zp.hpp"

namespace ordgen {

/// Integer polynomial, coefficients ascending.
using IntPoly = std::vector<mpz_class>;

/// One local entry (n, m, e, f): capacity n = delta / m, local index m,
/// ramification e and inertia f of the center prime.
struct LocalEntry {
  int n = 1;
  int m = 1;
  int e = 1;
  int f = 1;

  bool operator==(const LocalEntry&) const = default;
};

struct SimpleFactorSpec {
  std::string name;
  /// Monic, ascending.
  IntPoly center_minpoly;
  /// delta: dim over the center is delta^2.
  int degree = 1;
  /// p -> one index per prime of the center above p, in canonical factor
  /// order (see degree_pattern). Omitted primes have index 1.
  std::map<std::uint64_t, std::vector<int>> local_indices;
  std::int64_t copies = 1;

  int center_degree() const { return static_cast<int>(center_minpoly.size()) - 1; }
};

struct OrderSpec {
  std::vector<SimpleFactorSpec> factors;
  /// Lambda free over Z, as asserted by the user.
  bool free_over_base = false;
  /// p -> complete list of local entries at p (replaces the computed data).
  std::map<std::uint64_t, std::vector<LocalEntry>> overrides;

  /// d = sum deg(f_i) delta_i^2 copies_i.
  mpz_class total_dimension() const;
  /// Throws EmptySpec, InvalidSpec, NotMonic or IndexNotDividingDegree.
  void validate() const;
};

/// Parses and validates the JSON spec document. Unknown keys are rejected.
OrderSpec parse_spec(std::string_view json);
OrderSpec load_spec(const std::string& path);
std::string spec_to_json(const OrderSpec& spec);

enum class Certification {
  /// p does not divide disc(f).
  Unramified,
  /// Z[x]/(f) is maximal at p by Dedekind's criterion.
  Dedekind,
  /// Neither; the caller must supply local data.
  Exceptional,
};

std::string_view to_string(Certification c);

struct PrimeAbove {
  PolyZp factor;
  int f = 1;
  int e = 1;
};

struct DegreePattern {
  /// Canonical order: factors of f mod p sorted by ascending coefficient list.
  std::vector<PrimeAbove> primes;
  Certification status = Certification::Unramified;

  bool certified() const { return status != Certification::Exceptional; }
};

/// Factorization pattern of f mod p. Throws NotMonic.
DegreePattern degree_pattern(const IntPoly& f, std::uint64_t p);

mpz_class discriminant(const IntPoly& f);
/// Distinct prime divisors of |n|, ascending.
std::vector<mpz_class> prime_divisors(mpz_class n);

/// Primes where the local data may differ from the generic unramified,
/// unsplit-index pattern: divisors of the discriminants, primes carrying
/// local indices, and override primes. Ascending.
std::vector<std::uint64_t> special_primes(const OrderSpec& spec);

struct LocalPrimeData {
  std::uint64_t p = 2;
  std::vector<LocalEntry> entries;
  bool exceptional = false;
  /// The spec's total dimension d, carried for the dimension identity.
  mpz_class dimension = 0;
};

/// Throws IndexNotDividingDegree, InvalidSpec (wrong number of indices) and
/// ExceptionalPrimeNeedsOverride.
LocalPrimeData local_data(const OrderSpec& spec, std::uint64_t p);

/// 1 if m > 1; q^{-f} if m = 1 and e > 1; 0 if m = e = 1.
mpq_class c_factor(int m, int e, int f, const mpz_class& q);

struct ClassMember {
  int em = 1;
  mpq_class c;
};

struct LocalGroup {
  int n = 1;
  int r = 1;
  std::vector<ClassMember> members;

  std::int64_t count() const { return static_cast<std::int64_t>(members.size()); }
};

struct ClassifiedLocal {
  std::uint64_t p = 2;
  mpz_class q = 2;
  /// Keyed by (n, r) with r = f m.
  std::map<std::pair<int, int>, LocalGroup> groups;
};

/// Throws Exceptional; InvalidSpec when the dimension identity fails.
ClassifiedLocal classify(const LocalPrimeData& data);

/// Exact generating k-tuple count of Lambda / p Lambda over F_p. Throws
/// UnsupportedRank when some group has n >= 4.
GenCount gen_count_local(int k, const ClassifiedLocal& cl);

/// True when the count at k is certified positive (exact for n <= 3, via
/// lower bounds otherwise; a false answer for n >= 4 may be conservative).
bool local_positive(int k, const ClassifiedLocal& cl);

struct LocalMinK {
  int k = 1;
  /// Some group has n >= 4 and was bounded rather than decided.
  bool approximate = false;
};

/// Smallest k with M(n, r) within capacity for every group, and k >= 2 when
/// a member has c = 1.
LocalMinK min_k_local(const ClassifiedLocal& cl);

/// Lambda / p Lambda as an explicit algebra: the product over entries of
/// M_n(Delta / pi^{em} Delta), using the twist s = 1.
FiniteAlgebra local_quotient_algebra(const LocalPrimeData& data);

}  // namespace ordgen

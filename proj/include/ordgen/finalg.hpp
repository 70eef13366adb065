#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ordgen/finfield.hpp"

namespace ordgen {

/// Coordinate vector over the base field of an algebra.
using Vec = std::vector<Elem>;

/// Default number of closure computations the exhaustive oracle may run.
inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 26;
/// Largest dimension any constructor will materialize.
inline constexpr int kMaxAlgebraDim = 64;

/// Finite-dimensional unital associative algebra over a finite field, given by
/// structure constants e_i * e_j = sum_k c_ijk e_k, together with a basis of
/// a nilpotent ideal supplied by the constructor (the radical for every
/// algebra built here).
class FiniteAlgebra {
 public:
  /// `constants` is dense, indexed [(i * dim + j) * dim + k]. Validates
  /// associativity on basis triples, the two-sided unit, and that
  /// `radical_basis` spans a nilpotent two-sided ideal.
  FiniteAlgebra(FiniteField base, int dim, std::vector<Elem> constants, Vec unit,
                std::vector<Vec> radical_basis, std::string label);

  const FiniteField& base() const { return base_; }
  int dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const std::vector<Vec>& radical_basis() const { return radical_; }
  const std::string& label() const { return label_; }
  /// c_ijk.
  Elem constant(int i, int j, int k) const {
    return dense_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  Vec zero() const { return Vec(dim_, 0); }
  Vec basis_vector(int i) const;
  Vec mul(const Vec& x, const Vec& y) const;
  void mul_into(const Vec& x, const Vec& y, Vec& out) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(Elem c, const Vec& x) const;

  /// |A| = q^dim as an exact integer.
  mpz_class cardinality() const;
  /// Element with the given index: base-q digits, coordinate 0 most
  /// significant (row-major over field_elements order). Requires |A| < 2^64.
  Vec element(std::uint64_t index) const;
  std::uint64_t index_of(const Vec& x) const;

  bool is_commutative() const;

 private:
  struct Term {
    int k;
    Elem c;
  };

  FiniteField base_;
  int dim_;
  std::vector<Elem> dense_;
  std::vector<std::vector<Term>> table_;  // sparse (i, j) -> terms
  Vec unit_;
  std::vector<Vec> radical_;
  std::string label_;
};

/// Reduced row echelon span of vectors over a finite field.
class EchelonSpan {
 public:
  EchelonSpan(const FiniteField& field, int dim) : field_(&field), dim_(dim), pivot_row_(dim, -1) {}

  /// Reduces v against the span; returns true if v was independent (and is
  /// now included).
  bool insert(Vec v);
  bool contains(Vec v) const;
  Vec reduce(Vec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  /// Canonical basis: reduced rows sorted by pivot column.
  std::vector<Vec> basis() const;
  std::vector<int> pivots() const;

 private:
  const FiniteField* field_;
  int dim_;
  std::vector<Vec> rows_;
  std::vector<int> pivot_of_row_;
  std::vector<int> pivot_row_;
};

/// Unital subalgebra in canonical reduced echelon form.
struct SubalgebraBasis {
  std::vector<Vec> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const SubalgebraBasis&) const = default;
};

// --- constructors -----------------------------------------------------------

/// M_n(F_{q^r}) as an algebra over F_q.
FiniteAlgebra matrix_algebra(int n, const PrimePower& q, int r = 1);
/// A x B with componentwise multiplication.
FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);
/// M_n(A).
FiniteAlgebra matrix_over(const FiniteAlgebra& a, int n);
/// Delta / pi^{e m} Delta over F_q where Delta has residue field F_{q^{f m}}
/// and pi a = a^{(q^f)^s} pi. Basis omega^i pi^j, index j * (f m) + i.
FiniteAlgebra truncated_local_algebra(const PrimePower& q, int f, int m, int s, int e);

// --- closure and oracle -----------------------------------------------------

SubalgebraBasis closure(const FiniteAlgebra& a, std::span<const Vec> tuple);
bool is_generating(const FiniteAlgebra& a, std::span<const Vec> tuple);

struct OracleOptions {
  std::uint64_t budget = kDefaultOracleBudget;
  unsigned workers = 1;
};

/// Exact number of generating k-tuples by full enumeration. Throws
/// BudgetExceeded when |A|^k exceeds the budget.
mpz_class brute_gen_count(const FiniteAlgebra& a, int k, const OracleOptions& opt = {});

/// Counts generating tuples with tuple index in [begin, end). Partition sums
/// are independent of how the range is split.
std::uint64_t brute_gen_count_range(const FiniteAlgebra& a, int k, std::uint64_t begin,
                                    std::uint64_t end);

struct SampleEstimate {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double fraction = 0.0;
  /// 95% Wilson score interval.
  double ci_low = 0.0;
  double ci_high = 0.0;
};

/// Monte Carlo estimate of the fraction of generating k-tuples. Sample i is
/// drawn from a xoshiro256** stream seeded by splitmix64(seed, i), so the
/// result depends only on (seed, samples), never on the worker count.
SampleEstimate sample_gen_fraction(const FiniteAlgebra& a, int k, std::uint64_t samples,
                                   std::uint64_t seed, unsigned workers = 1);

/// Two-sided ideal spanned by `ideal`; verifies it is an ideal and nilpotent.
void check_nilpotent_ideal(const FiniteAlgebra& a, std::span<const Vec> ideal);

/// Representatives of A / I: all vectors supported on the non-pivot
/// coordinates of the echelon basis of I, in index order.
std::vector<Vec> quotient_representatives(const FiniteAlgebra& a, std::span<const Vec> ideal);

/// True iff the images of `reps` generate A / I.
bool generates_quotient(const FiniteAlgebra& a, std::span<const Vec> ideal, std::span<const Vec> reps);

/// Number of generating k-tuples of A lying over the tuple of A/I represented
/// by `reps`. Throws NotGenerating if `reps` does not generate A / I.
mpz_class lift_count(const FiniteAlgebra& a, std::span<const Vec> ideal, std::span<const Vec> reps,
                     const OracleOptions& opt = {});

}  // namespace ordgen

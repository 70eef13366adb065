#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ordgen {

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// q = p^e with p prime.
struct PrimePower {
  std::uint64_t p = 2;
  int e = 1;
  std::uint64_t q = 2;

  /// Throws NotPrime / CapExceeded.
  static PrimePower make(std::uint64_t p, int e, std::uint64_t cap = kDefaultFieldCap);
  /// Decomposes q; nullopt when q is not a prime power.
  static std::optional<PrimePower> from_q(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap);

  bool operator==(const PrimePower&) const = default;
};

/// Field elements are indices in [0, q): the base-p digits of an index are the
/// coordinates (ascending powers of x) of the element over F_p. Index 0 is
/// zero and index 1 is one.
using Elem = std::uint32_t;

/// F_{p^e} = F_p[x]/(modulus). Immutable after construction; copies share
/// their tables.
class FiniteField {
 public:
  /// The modulus is the lexicographically least monic irreducible of degree
  /// e, comparing ascending coefficient lists (constant term first).
  static FiniteField build(std::uint64_t p, int e, std::uint64_t cap = kDefaultFieldCap);
  static FiniteField build(const PrimePower& pp) { return build(pp.p, pp.e, pp.q); }

  const PrimePower& prime_power() const { return pp_; }
  std::uint64_t p() const { return pp_.p; }
  int degree() const { return pp_.e; }
  std::uint64_t q() const { return pp_.q; }
  bool is_prime_field() const { return pp_.e == 1; }
  const std::vector<std::uint64_t>& modulus() const;
  /// Element of multiplicative order q - 1 (the least such index).
  Elem generator() const;

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws InvalidArgument for zero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t n) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;

  /// a^{p^i}; i is reduced mod e, so negative i gives the inverse Frobenius.
  Elem frobenius(Elem a, std::int64_t i) const;
  /// True iff a lies in the subfield of order p^s (s must divide e).
  bool subfield_test(Elem a, int s) const;

  std::vector<std::uint64_t> coords(Elem a) const;
  Elem from_coords(std::span<const std::uint64_t> c) const;

  /// All q elements in index order: 0, 1, ...
  std::vector<Elem> elements() const;

  bool operator==(const FiniteField& o) const { return pp_ == o.pp_ && modulus() == o.modulus(); }

 private:
  struct Tables;
  FiniteField(PrimePower pp, std::shared_ptr<const Tables> t) : pp_(pp), t_(std::move(t)) {}

  Elem mul_slow(Elem a, Elem b) const;

  PrimePower pp_;
  std::shared_ptr<const Tables> t_;
};

struct FiniteField::Tables {
  std::vector<std::uint64_t> modulus;
  Elem generator = 1;
  bool has_logs = false;
  std::vector<Elem> antilog;          // size q-1 (doubled for wraparound-free lookup)
  std::vector<std::uint32_t> log;     // size q, log[0] unused
  std::vector<std::uint64_t> pow_p;   // p^i for i <= e
};

}  // namespace ordgen

namespace ordgen {

/// F_{q^r} presented as an r-dimensional vector space over a base field F_q,
/// with basis 1, theta, ..., theta^{r-1} where theta generates F_{q^r}^*.
class FieldExtension {
 public:
  FieldExtension(const FiniteField& base, int r);

  const FiniteField& base() const { return base_; }
  const FiniteField& big() const { return big_; }
  int degree() const { return r_; }

  /// Coordinates of x in F_{q^r} over the base.
  std::vector<Elem> coords(Elem x) const;
  Elem from_coords(std::span<const Elem> c) const;
  Elem embed(Elem base_elem) const { return embed_[base_elem]; }
  /// theta^i.
  Elem basis(int i) const { return basis_[i]; }
  /// x -> x^{q^j} (the F_q-linear Frobenius power), j may be negative.
  Elem frobenius_q(Elem x, std::int64_t j) const;

 private:
  FiniteField base_;
  FiniteField big_;
  int r_;
  std::vector<Elem> embed_;
  std::vector<Elem> basis_;
  std::vector<std::uint32_t> coord_index_;  // big element -> packed base-q coordinates
};

}  // namespace ordgen

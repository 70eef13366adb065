#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ordgen {

/// Dense polynomial over F_p, coefficients ascending, no trailing zeros
/// (the zero polynomial is the empty vector).
class PolyZp {
 public:
  using Coeffs = std::vector<std::uint64_t>;

  PolyZp() = default;
  PolyZp(std::uint64_t p, Coeffs coeffs);

  static PolyZp monomial(std::uint64_t p, std::size_t degree, std::uint64_t c = 1);
  static PolyZp constant(std::uint64_t p, std::uint64_t c);

  std::uint64_t modulus() const { return p_; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  PolyZp operator+(const PolyZp& o) const;
  PolyZp operator-(const PolyZp& o) const;
  PolyZp operator*(const PolyZp& o) const;
  PolyZp scaled(std::uint64_t c) const;
  PolyZp derivative() const;
  PolyZp make_monic() const;

  /// (quotient, remainder); divisor must be nonzero.
  std::pair<PolyZp, PolyZp> divmod(const PolyZp& d) const;
  PolyZp operator%(const PolyZp& d) const { return divmod(d).second; }
  PolyZp operator/(const PolyZp& d) const { return divmod(d).first; }

  bool operator==(const PolyZp& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const PolyZp& o) const { return !(*this == o); }

 private:
  void trim();

  std::uint64_t p_ = 2;
  Coeffs c_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// Monic gcd.
PolyZp gcd(PolyZp a, PolyZp b);
PolyZp powmod(const PolyZp& base, std::uint64_t e, const PolyZp& mod);

bool is_irreducible(const PolyZp& f);

/// Irreducible monic factors with multiplicity, sorted lexicographically by
/// ascending coefficient list (the canonical prime ordering).
std::vector<std::pair<PolyZp, int>> factor(const PolyZp& f);

}  // namespace ordgen

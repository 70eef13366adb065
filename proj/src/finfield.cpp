#include "ordgen/finfield.hpp"

#include <string>

#include "ordgen/errors.hpp"
#include "ordgen/poly_zp.hpp"

namespace ordgen {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower PrimePower::make(std::uint64_t p, int e, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "exponent must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > cap / p) {
      throw Error(ErrorKind::CapExceeded,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds cap " +
                      std::to_string(cap));
    }
    q *= p;
  }
  if (q > cap) throw Error(ErrorKind::CapExceeded, "q exceeds cap " + std::to_string(cap));
  return PrimePower{p, e, q};
}

std::optional<PrimePower> PrimePower::from_q(std::uint64_t q, std::uint64_t cap) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  int e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) return std::nullopt;
  return make(p, e, cap);
}

namespace {

std::vector<std::uint64_t> digits(std::uint64_t v, std::uint64_t p, int e) {
  std::vector<std::uint64_t> c(e, 0);
  for (int i = 0; i < e; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

std::vector<std::uint64_t> least_irreducible(std::uint64_t p, int e) {
  if (e == 1) return {0, 1};
  // Enumerate (c_0, ..., c_{e-1}) in lexicographic order, c_0 most significant.
  std::uint64_t total = 1;
  for (int i = 0; i < e; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint64_t> c(e + 1, 0);
    std::uint64_t v = idx;
    for (int i = e - 1; i >= 0; --i) {
      c[i] = v % p;
      v /= p;
    }
    c[e] = 1;
    if (c[0] == 0) continue;
    if (is_irreducible(PolyZp(p, c))) return c;
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

Elem FiniteField::mul_slow(Elem a, Elem b) const {
  const std::uint64_t p = pp_.p;
  const int e = pp_.e;
  if (e == 1) return static_cast<Elem>(mulmod(a, b, p));
  const auto ca = digits(a, p, e);
  const auto cb = digits(b, p, e);
  std::vector<std::uint64_t> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i) {
    if (!ca[i]) continue;
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  }
  const auto& mod = t_->modulus;
  for (int i = 2 * e - 2; i >= e; --i) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    for (int j = 0; j <= e; ++j) prod[i - e + j] = (prod[i - e + j] + (p - c) * mod[j]) % p;
  }
  prod.resize(e);
  return from_coords(prod);
}

FiniteField FiniteField::build(std::uint64_t p, int e, std::uint64_t cap) {
  const PrimePower pp = PrimePower::make(p, e, cap);
  auto t = std::make_shared<Tables>();
  t->modulus = least_irreducible(p, e);
  t->pow_p.resize(e + 1);
  t->pow_p[0] = 1;
  for (int i = 1; i <= e; ++i) t->pow_p[i] = t->pow_p[i - 1] * p;

  FiniteField tmp(pp, t);
  const std::uint64_t order = pp.q - 1;
  const auto ell = prime_factors(order);
  Elem gen = 1;
  if (pp.q > 2) {
    for (std::uint64_t cand = 2; cand < pp.q; ++cand) {
      bool ok = true;
      for (auto l : ell) {
        if (tmp.pow(static_cast<Elem>(cand), order / l) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen = static_cast<Elem>(cand);
        break;
      }
    }
  }
  t->generator = gen;

  if (pp.q <= (std::uint64_t{1} << 16)) {
    t->antilog.resize(2 * order);
    t->log.assign(pp.q, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      t->antilog[i] = x;
      t->antilog[i + order] = x;
      t->log[x] = static_cast<std::uint32_t>(i);
      x = tmp.mul_slow(x, gen);
    }
    t->has_logs = true;
  }
  return FiniteField(pp, std::move(t));
}

const std::vector<std::uint64_t>& FiniteField::modulus() const { return t_->modulus; }

Elem FiniteField::generator() const { return t_->generator; }

Elem FiniteField::add(Elem a, Elem b) const {
  const std::uint64_t p = pp_.p;
  if (p == 2) return a ^ b;
  if (pp_.e == 1) return static_cast<Elem>((a + b) % p);
  Elem r = 0;
  std::uint64_t scale = 1;
  for (int i = 0; i < pp_.e; ++i) {
    r += static_cast<Elem>(((a % p + b % p) % p) * scale);
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

Elem FiniteField::neg(Elem a) const {
  const std::uint64_t p = pp_.p;
  if (p == 2) return a;
  if (pp_.e == 1) return static_cast<Elem>((p - a) % p);
  Elem r = 0;
  std::uint64_t scale = 1;
  for (int i = 0; i < pp_.e; ++i) {
    r += static_cast<Elem>(((p - a % p) % p) * scale);
    a /= p;
    scale *= p;
  }
  return r;
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (pp_.e == 1) return static_cast<Elem>(mulmod(a, b, pp_.p));
  if (t_->has_logs) return t_->antilog[t_->log[a] + t_->log[b]];
  return mul_slow(a, b);
}

Elem FiniteField::pow(Elem a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  if (t_ && t_->has_logs) {
    const std::uint64_t order = pp_.q - 1;
    return t_->antilog[(static_cast<unsigned __int128>(t_->log[a]) * n) % order];
  }
  Elem r = 1;
  Elem b = a;
  while (n) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  if (t_->has_logs) {
    const std::uint64_t order = pp_.q - 1;
    return t_->antilog[(order - t_->log[a]) % order];
  }
  return pow(a, pp_.q - 2);
}

Elem FiniteField::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(pp_.p);
  return static_cast<Elem>(((v % p) + p) % p);
}

Elem FiniteField::frobenius(Elem a, std::int64_t i) const {
  const std::int64_t e = pp_.e;
  const std::int64_t k = ((i % e) + e) % e;
  return pow(a, t_->pow_p[k]);
}

bool FiniteField::subfield_test(Elem a, int s) const {
  if (s < 1 || pp_.e % s != 0) {
    throw Error(ErrorKind::NotADivisor,
                std::to_string(s) + " does not divide " + std::to_string(pp_.e));
  }
  return frobenius(a, s) == a;
}

std::vector<std::uint64_t> FiniteField::coords(Elem a) const { return digits(a, pp_.p, pp_.e); }

Elem FiniteField::from_coords(std::span<const std::uint64_t> c) const {
  std::uint64_t r = 0;
  std::uint64_t scale = 1;
  for (int i = 0; i < pp_.e; ++i) {
    const std::uint64_t v = i < static_cast<int>(c.size()) ? c[i] % pp_.p : 0;
    r += v * scale;
    scale *= pp_.p;
  }
  return static_cast<Elem>(r);
}

std::vector<Elem> FiniteField::elements() const {
  std::vector<Elem> v(pp_.q);
  for (std::uint64_t i = 0; i < pp_.q; ++i) v[i] = static_cast<Elem>(i);
  return v;
}

}  // namespace ordgen

namespace ordgen {

FieldExtension::FieldExtension(const FiniteField& base, int r)
    : base_(base), big_(FiniteField::build(base.p(), base.degree() * r)), r_(r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  // Embed the base: find a root of its modulus in the big field.
  const auto& mod = base_.modulus();
  Elem root = 0;
  bool found = false;
  for (std::uint64_t x = 0; x < big_.q() && !found; ++x) {
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) {
      acc = big_.add(big_.mul(acc, static_cast<Elem>(x)), big_.from_int(static_cast<std::int64_t>(mod[i])));
    }
    if (acc == 0) {
      root = static_cast<Elem>(x);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "base modulus has no root in extension");
  embed_.resize(base_.q());
  for (std::uint64_t a = 0; a < base_.q(); ++a) {
    const auto c = base_.coords(static_cast<Elem>(a));
    Elem v = 0;
    Elem pw = 1;
    for (auto ci : c) {
      v = big_.add(v, big_.mul(big_.from_int(static_cast<std::int64_t>(ci)), pw));
      pw = big_.mul(pw, root);
    }
    embed_[a] = v;
  }
  const Elem theta = big_.generator();
  basis_.resize(r_);
  Elem pw = 1;
  for (int i = 0; i < r_; ++i) {
    basis_[i] = pw;
    pw = big_.mul(pw, theta);
  }
  coord_index_.assign(big_.q(), 0);
  std::vector<bool> seen(big_.q(), false);
  const std::uint64_t q = base_.q();
  std::uint64_t total = 1;
  for (int i = 0; i < r_; ++i) total *= q;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t v = t;
    Elem x = 0;
    for (int i = 0; i < r_; ++i) {
      x = big_.add(x, big_.mul(embed_[v % q], basis_[i]));
      v /= q;
    }
    if (seen[x]) throw Error(ErrorKind::InvalidArgument, "extension basis is degenerate");
    seen[x] = true;
    coord_index_[x] = static_cast<std::uint32_t>(t);
  }
}

std::vector<Elem> FieldExtension::coords(Elem x) const {
  std::vector<Elem> c(r_);
  std::uint64_t v = coord_index_[x];
  const std::uint64_t q = base_.q();
  for (int i = 0; i < r_; ++i) {
    c[i] = static_cast<Elem>(v % q);
    v /= q;
  }
  return c;
}

Elem FieldExtension::from_coords(std::span<const Elem> c) const {
  Elem x = 0;
  for (int i = 0; i < r_ && i < static_cast<int>(c.size()); ++i) {
    x = big_.add(x, big_.mul(embed_[c[i]], basis_[i]));
  }
  return x;
}

Elem FieldExtension::frobenius_q(Elem x, std::int64_t j) const {
  return big_.frobenius(x, j * base_.degree());
}

}  // namespace ordgen

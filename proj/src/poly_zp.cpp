#include "ordgen/poly_zp.hpp"

#include <algorithm>

#include "ordgen/errors.hpp"

namespace ordgen {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero mod p");
  return powmod(a, p - 2, p);
}

PolyZp::PolyZp(std::uint64_t p, Coeffs coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

PolyZp PolyZp::monomial(std::uint64_t p, std::size_t degree, std::uint64_t c) {
  Coeffs v(degree + 1, 0);
  v[degree] = c;
  return PolyZp(p, std::move(v));
}

PolyZp PolyZp::constant(std::uint64_t p, std::uint64_t c) { return PolyZp(p, {c}); }

void PolyZp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZp PolyZp::operator+(const PolyZp& o) const {
  Coeffs r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t a = i < c_.size() ? c_[i] : 0;
    std::uint64_t b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = (a + b) % p_;
  }
  return PolyZp(p_, std::move(r));
}

PolyZp PolyZp::operator-(const PolyZp& o) const {
  Coeffs r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t a = i < c_.size() ? c_[i] : 0;
    std::uint64_t b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = (a + p_ - b) % p_;
  }
  return PolyZp(p_, std::move(r));
}

PolyZp PolyZp::operator*(const PolyZp& o) const {
  if (is_zero() || o.is_zero()) return PolyZp(p_, {});
  Coeffs r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
    }
  }
  return PolyZp(p_, std::move(r));
}

PolyZp PolyZp::scaled(std::uint64_t c) const {
  Coeffs r = c_;
  for (auto& x : r) x = mulmod(x, c % p_, p_);
  return PolyZp(p_, std::move(r));
}

PolyZp PolyZp::derivative() const {
  if (c_.size() <= 1) return PolyZp(p_, {});
  Coeffs r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], i % p_, p_);
  return PolyZp(p_, std::move(r));
}

PolyZp PolyZp::make_monic() const {
  if (is_zero()) return *this;
  return scaled(invmod(lead(), p_));
}

std::pair<PolyZp, PolyZp> PolyZp::divmod(const PolyZp& d) const {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  if (degree() < d.degree()) return {PolyZp(p_, {}), *this};
  Coeffs rem = c_;
  Coeffs quo(c_.size() - d.c_.size() + 1, 0);
  const std::uint64_t inv_lead = invmod(d.lead(), p_);
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t i = rem.size(); i-- > dd;) {
    std::uint64_t coef = mulmod(rem[i], inv_lead, p_);
    if (coef == 0) continue;
    quo[i - dd] = coef;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] = (rem[i - dd + j] + p_ - mulmod(coef, d.c_[j], p_)) % p_;
    }
  }
  return {PolyZp(p_, std::move(quo)), PolyZp(p_, std::move(rem))};
}

PolyZp gcd(PolyZp a, PolyZp b) {
  while (!b.is_zero()) {
    PolyZp r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_monic();
}

PolyZp powmod(const PolyZp& base, std::uint64_t e, const PolyZp& mod) {
  PolyZp result = PolyZp::constant(mod.modulus(), 1) % mod;
  PolyZp b = base % mod;
  while (e) {
    if (e & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const PolyZp& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const std::uint64_t p = f.modulus();
  const PolyZp x = PolyZp::monomial(p, 1);
  PolyZp xp = x;
  for (int i = 1; i <= n / 2; ++i) {
    xp = powmod(xp, p, f);
    if (!gcd(f, xp - x).is_one()) return false;
  }
  return true;
}

namespace {

// Square-free decomposition over F_p: pairwise coprime square-free parts
// with their multiplicities.
std::vector<std::pair<PolyZp, int>> squarefree_parts(const PolyZp& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<PolyZp, int>> out;
  PolyZp c = gcd(f, f.derivative());
  PolyZp w = f / c;
  int i = 1;
  while (!w.is_one() && w.degree() > 0) {
    PolyZp y = gcd(w, c);
    PolyZp fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.make_monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power: take the p-th root coefficientwise.
    PolyZp::Coeffs root;
    const auto& cc = c.coeffs();
    for (std::size_t j = 0; j < cc.size(); j += p) root.push_back(cc[j]);
    for (auto& [g, m] : squarefree_parts(PolyZp(p, root).make_monic())) {
      out.emplace_back(g, m * static_cast<int>(p));
    }
  }
  return out;
}

// Null space basis of a matrix over F_p (rows x cols), as column vectors.
std::vector<std::vector<std::uint64_t>> null_space(std::vector<std::vector<std::uint64_t>> m,
                                                   std::uint64_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t inv = invmod(m[r][c], p);
    for (auto& x : m[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + p - mulmod(f, m[r][j], p)) % p;
    }
    pivot_row_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_row_of_col[free] >= 0) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const int pr = pivot_row_of_col[c];
      if (pr >= 0) v[c] = (p - m[pr][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Berlekamp splitting of a monic square-free polynomial.
std::vector<PolyZp> berlekamp(const PolyZp& g) {
  const std::uint64_t p = g.modulus();
  const int n = g.degree();
  if (n <= 1) return {g};
  // Row i holds x^{ip} mod g; we need v with v*(Q - I) = 0.
  std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
  const PolyZp xp = powmod(PolyZp::monomial(p, 1), p, g);
  PolyZp cur = PolyZp::constant(p, 1);
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.coeffs().size(); ++j) q[i][j] = cur.coeffs()[j];
    cur = (cur * xp) % g;
  }
  std::vector<std::vector<std::uint64_t>> mt(n, std::vector<std::uint64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mt[j][i] = (q[i][j] + (i == j ? p - 1 : 0)) % p;
  const auto kernel = null_space(mt, p);
  const std::size_t target = kernel.size();
  std::vector<PolyZp> factors{g};
  for (const auto& v : kernel) {
    if (factors.size() == target) break;
    PolyZp h(p, v);
    if (h.degree() <= 0) continue;
    std::vector<PolyZp> next;
    for (const auto& u : factors) {
      std::vector<PolyZp> pieces{u};
      // Small p: gcd(w, h - s) over all s. Large odd p: gcd(w, (h + s)^{(p-1)/2} - 1)
      // for s = 0, 1, ..., which splits w with probability about 1/2 each.
      const bool small = p <= 64;
      const std::uint64_t tries = small ? p : 64 * static_cast<std::uint64_t>(n) + 64;
      for (std::uint64_t s = 0; s < tries && pieces.size() + next.size() < target; ++s) {
        std::vector<PolyZp> split;
        for (const auto& w : pieces) {
          if (w.degree() <= 1) {
            split.push_back(w);
            continue;
          }
          PolyZp d = small ? gcd(w, h - PolyZp::constant(p, s))
                           : gcd(w, powmod((h + PolyZp::constant(p, s)) % w, (p - 1) / 2, w) -
                                        PolyZp::constant(p, 1));
          if (d.degree() > 0 && d.degree() < w.degree()) {
            split.push_back(d);
            split.push_back((w / d).make_monic());
          } else {
            split.push_back(w);
          }
        }
        pieces = std::move(split);
      }
      next.insert(next.end(), pieces.begin(), pieces.end());
    }
    factors = std::move(next);
  }
  if (factors.size() != target) {
    throw Error(ErrorKind::InvalidArgument, "Berlekamp splitting did not converge");
  }
  return factors;
}

bool coeff_less(const PolyZp& a, const PolyZp& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

}  // namespace

std::vector<std::pair<PolyZp, int>> factor(const PolyZp& f) {
  if (f.degree() <= 0) return {};
  std::vector<std::pair<PolyZp, int>> out;
  for (const auto& [part, mult] : squarefree_parts(f.make_monic())) {
    for (auto& irr : berlekamp(part)) out.emplace_back(irr.make_monic(), mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return coeff_less(a.first, b.first); });
  return out;
}

}  // namespace ordgen

#include "ordgen/finalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "ordgen/errors.hpp"
#include "ordgen/rng.hpp"

namespace ordgen {

// --- FiniteAlgebra ----------------------------------------------------------

FiniteAlgebra::FiniteAlgebra(FiniteField base, int dim, std::vector<Elem> constants, Vec unit,
                             std::vector<Vec> radical_basis, std::string label)
    : base_(std::move(base)),
      dim_(dim),
      dense_(std::move(constants)),
      unit_(std::move(unit)),
      radical_(std::move(radical_basis)),
      label_(std::move(label)) {
  if (dim_ < 1) throw Error(ErrorKind::InvalidArgument, "algebra dimension must be positive");
  if (dim_ > kMaxAlgebraDim) {
    throw Error(ErrorKind::BudgetExceeded, "dimension " + std::to_string(dim_) +
                                               " exceeds the constructor limit " +
                                               std::to_string(kMaxAlgebraDim));
  }
  const auto d = static_cast<std::size_t>(dim_);
  if (dense_.size() != d * d * d || unit_.size() != d) {
    throw Error(ErrorKind::InvalidArgument, "structure constant table has the wrong shape");
  }
  table_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Elem c = dense_[(i * d + j) * d + k];
        if (c) table_[i * d + j].push_back(Term{static_cast<int>(k), c});
      }

  for (int i = 0; i < dim_; ++i) {
    const Vec ei = basis_vector(i);
    if (mul(unit_, ei) != ei || mul(ei, unit_) != ei) {
      throw Error(ErrorKind::InvalidArgument, label_ + ": unit is not a two-sided identity");
    }
  }
  std::vector<Vec> basis(d);
  for (int i = 0; i < dim_; ++i) basis[i] = basis_vector(i);
  Vec ij(d), left(d), jk(d), right(d);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      mul_into(basis[i], basis[j], ij);
      for (int k = 0; k < dim_; ++k) {
        mul_into(ij, basis[k], left);
        mul_into(basis[j], basis[k], jk);
        mul_into(basis[i], jk, right);
        if (left != right) {
          throw Error(ErrorKind::InvalidArgument, label_ + ": multiplication is not associative");
        }
      }
    }
  for (const auto& v : radical_) {
    if (v.size() != d) throw Error(ErrorKind::InvalidArgument, "radical vector has wrong length");
  }
  check_nilpotent_ideal(*this, radical_);
}

Vec FiniteAlgebra::basis_vector(int i) const {
  Vec v(dim_, 0);
  v[i] = 1;
  return v;
}

void FiniteAlgebra::mul_into(const Vec& x, const Vec& y, Vec& out) const {
  std::fill(out.begin(), out.end(), 0);
  const auto& f = base_;
  for (int i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < dim_; ++j) {
      if (!y[j]) continue;
      const Elem xy = f.mul(x[i], y[j]);
      for (const Term& t : table_[static_cast<std::size_t>(i) * dim_ + j]) {
        out[t.k] = f.add(out[t.k], f.mul(xy, t.c));
      }
    }
  }
}

Vec FiniteAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out(dim_, 0);
  mul_into(x, y, out);
  return out;
}

Vec FiniteAlgebra::add(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = base_.add(x[i], y[i]);
  return out;
}

Vec FiniteAlgebra::sub(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = base_.sub(x[i], y[i]);
  return out;
}

Vec FiniteAlgebra::scale(Elem c, const Vec& x) const {
  Vec out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = base_.mul(c, x[i]);
  return out;
}

mpz_class FiniteAlgebra::cardinality() const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base_.q(), static_cast<unsigned long>(dim_));
  return r;
}

Vec FiniteAlgebra::element(std::uint64_t index) const {
  Vec v(dim_);
  const std::uint64_t q = base_.q();
  for (int i = dim_ - 1; i >= 0; --i) {
    v[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return v;
}

std::uint64_t FiniteAlgebra::index_of(const Vec& x) const {
  std::uint64_t idx = 0;
  for (int i = 0; i < dim_; ++i) idx = idx * base_.q() + x[i];
  return idx;
}

bool FiniteAlgebra::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (constant(i, j, k) != constant(j, i, k)) return false;
  return true;
}

// --- EchelonSpan ------------------------------------------------------------

Vec EchelonSpan::reduce(Vec v) const {
  const auto& f = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int c = pivot_of_row_[r];
    const Elem coef = v[c];
    if (!coef) continue;
    const Vec& row = rows_[r];
    for (int j = c; j < dim_; ++j) {
      if (row[j]) v[j] = f.sub(v[j], f.mul(coef, row[j]));
    }
  }
  return v;
}

bool EchelonSpan::insert(Vec v) {
  v = reduce(std::move(v));
  int c = 0;
  while (c < dim_ && !v[c]) ++c;
  if (c == dim_) return false;
  const auto& f = *field_;
  const Elem inv = f.inv(v[c]);
  for (int j = c; j < dim_; ++j) v[j] = f.mul(v[j], inv);
  for (auto& row : rows_) {
    const Elem coef = row[c];
    if (!coef) continue;
    for (int j = c; j < dim_; ++j) {
      if (v[j]) row[j] = f.sub(row[j], f.mul(coef, v[j]));
    }
  }
  pivot_row_[c] = static_cast<int>(rows_.size());
  pivot_of_row_.push_back(c);
  rows_.push_back(std::move(v));
  return true;
}

bool EchelonSpan::contains(Vec v) const {
  v = reduce(std::move(v));
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

std::vector<Vec> EchelonSpan::basis() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (int c = 0; c < dim_; ++c) {
    if (pivot_row_[c] >= 0) out.push_back(rows_[pivot_row_[c]]);
  }
  return out;
}

std::vector<int> EchelonSpan::pivots() const {
  std::vector<int> out;
  for (int c = 0; c < dim_; ++c)
    if (pivot_row_[c] >= 0) out.push_back(c);
  return out;
}

// --- closure ----------------------------------------------------------------

namespace {

// Grows span{1, tuple} until closed under multiplication. Stops early once the
// whole algebra is reached.
EchelonSpan close_span(const FiniteAlgebra& a, std::span<const Vec> tuple) {
  EchelonSpan span(a.base(), a.dim());
  std::vector<Vec> gens;
  gens.reserve(a.dim());
  auto push = [&](const Vec& v) {
    if (span.insert(v)) gens.push_back(v);
  };
  push(a.unit());
  for (const auto& t : tuple) push(t);
  Vec prod(a.dim());
  for (std::size_t i = 0; i < gens.size() && span.rank() < a.dim(); ++i) {
    for (std::size_t j = 0; j <= i && span.rank() < a.dim(); ++j) {
      a.mul_into(gens[i], gens[j], prod);
      push(prod);
      if (i != j) {
        a.mul_into(gens[j], gens[i], prod);
        push(prod);
      }
    }
  }
  return span;
}

}  // namespace

SubalgebraBasis closure(const FiniteAlgebra& a, std::span<const Vec> tuple) {
  return SubalgebraBasis{close_span(a, tuple).basis()};
}

bool is_generating(const FiniteAlgebra& a, std::span<const Vec> tuple) {
  return close_span(a, tuple).rank() == a.dim();
}

// --- exhaustive oracle ------------------------------------------------------

namespace {

std::uint64_t checked_tuple_space(const mpz_class& base, int k, std::uint64_t budget,
                                  const std::string& what) {
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
  if (total > mpz_class(std::to_string(budget))) {
    throw Error(ErrorKind::BudgetExceeded,
                what + " requires " + total.get_str() + " closures; budget is " +
                    std::to_string(budget));
  }
  return std::stoull(total.get_str());
}

template <class Fn>
std::uint64_t run_partitioned(std::uint64_t total, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || total < 2 * workers) return fn(0, total);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = total / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = (w + 1 == workers) ? total : begin + chunk;
    threads.emplace_back([&, w, begin, end] { partial[w] = fn(begin, end); });
  }
  for (auto& t : threads) t.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace

std::uint64_t brute_gen_count_range(const FiniteAlgebra& a, int k, std::uint64_t begin,
                                    std::uint64_t end) {
  const std::uint64_t size = std::stoull(a.cardinality().get_str());
  std::vector<Vec> tuple(k);
  std::uint64_t count = 0;
  for (std::uint64_t t = begin; t < end; ++t) {
    std::uint64_t rest = t;
    for (int i = k - 1; i >= 0; --i) {
      tuple[i] = a.element(rest % size);
      rest /= size;
    }
    if (is_generating(a, tuple)) ++count;
  }
  return count;
}

mpz_class brute_gen_count(const FiniteAlgebra& a, int k, const OracleOptions& opt) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const std::uint64_t total =
      checked_tuple_space(a.cardinality(), k, opt.budget, "exhaustive count over " + a.label());
  const std::uint64_t n = run_partitioned(total, opt.workers, [&](std::uint64_t b, std::uint64_t e) {
    return brute_gen_count_range(a, k, b, e);
  });
  return mpz_class(std::to_string(n));
}

SampleEstimate sample_gen_fraction(const FiniteAlgebra& a, int k, std::uint64_t samples,
                                   std::uint64_t seed, unsigned workers) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be positive");
  const std::uint64_t q = a.base().q();
  const std::uint64_t hits =
      run_partitioned(samples, workers, [&](std::uint64_t b, std::uint64_t e) {
        std::vector<Vec> tuple(k, Vec(a.dim()));
        std::uint64_t h = 0;
        for (std::uint64_t s = b; s < e; ++s) {
          Xoshiro256ss rng = Xoshiro256ss::for_stream(seed, s);
          for (auto& v : tuple)
            for (auto& x : v) x = static_cast<Elem>(rng.below(q));
          if (is_generating(a, tuple)) ++h;
        }
        return h;
      });
  SampleEstimate est;
  est.samples = samples;
  est.hits = hits;
  const double n = static_cast<double>(samples);
  const double phat = static_cast<double>(hits) / n;
  const double z = 1.959963984540054;
  const double denom = 1.0 + z * z / n;
  const double center = (phat + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom;
  est.fraction = phat;
  est.ci_low = std::max(0.0, center - half);
  est.ci_high = std::min(1.0, center + half);
  return est;
}

// --- ideals and lifting -----------------------------------------------------

void check_nilpotent_ideal(const FiniteAlgebra& a, std::span<const Vec> ideal) {
  EchelonSpan span(a.base(), a.dim());
  for (const auto& v : ideal) span.insert(v);
  const auto basis = span.basis();
  for (int i = 0; i < a.dim(); ++i) {
    const Vec ei = a.basis_vector(i);
    for (const auto& v : basis) {
      if (!span.contains(a.mul(ei, v)) || !span.contains(a.mul(v, ei))) {
        throw Error(ErrorKind::InvalidArgument, a.label() + ": radical span is not an ideal");
      }
    }
  }
  // I^{j+1} = I^j * I until zero; a nonzero fixed point means not nilpotent.
  std::vector<Vec> power = basis;
  int prev = static_cast<int>(power.size());
  while (!power.empty()) {
    EchelonSpan next(a.base(), a.dim());
    for (const auto& x : power)
      for (const auto& y : basis) next.insert(a.mul(x, y));
    power = next.basis();
    const int rank = static_cast<int>(power.size());
    if (rank > 0 && rank >= prev) {
      throw Error(ErrorKind::InvalidArgument, a.label() + ": radical span is not nilpotent");
    }
    prev = rank;
  }
}

std::vector<Vec> quotient_representatives(const FiniteAlgebra& a, std::span<const Vec> ideal) {
  EchelonSpan span(a.base(), a.dim());
  for (const auto& v : ideal) span.insert(v);
  const auto piv = span.pivots();
  std::vector<int> free;
  for (int c = 0; c < a.dim(); ++c)
    if (!std::binary_search(piv.begin(), piv.end(), c)) free.push_back(c);
  const std::uint64_t q = a.base().q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free.size(); ++i) total *= q;
  std::vector<Vec> out;
  out.reserve(total);
  for (std::uint64_t t = 0; t < total; ++t) {
    Vec v(a.dim(), 0);
    std::uint64_t rest = t;
    for (std::size_t i = free.size(); i-- > 0;) {
      v[free[i]] = static_cast<Elem>(rest % q);
      rest /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool generates_quotient(const FiniteAlgebra& a, std::span<const Vec> ideal,
                        std::span<const Vec> reps) {
  EchelonSpan span(a.base(), a.dim());
  for (const auto& v : closure(a, reps).basis) span.insert(v);
  for (const auto& v : ideal) span.insert(v);
  return span.rank() == a.dim();
}

mpz_class lift_count(const FiniteAlgebra& a, std::span<const Vec> ideal, std::span<const Vec> reps,
                     const OracleOptions& opt) {
  check_nilpotent_ideal(a, ideal);
  if (!generates_quotient(a, ideal, reps)) {
    throw Error(ErrorKind::NotGenerating, "tuple does not generate the quotient of " + a.label());
  }
  EchelonSpan span(a.base(), a.dim());
  for (const auto& v : ideal) span.insert(v);
  const auto ibasis = span.basis();
  const int k = static_cast<int>(reps.size());
  const std::uint64_t q = a.base().q();
  mpz_class isize;
  mpz_ui_pow_ui(isize.get_mpz_t(), q, ibasis.size());
  const std::uint64_t total = checked_tuple_space(isize, k, opt.budget, "lift count over " + a.label());
  const std::uint64_t per = std::stoull(isize.get_str());

  auto ideal_element = [&](std::uint64_t idx) {
    Vec v(a.dim(), 0);
    for (std::size_t b = ibasis.size(); b-- > 0;) {
      const Elem c = static_cast<Elem>(idx % q);
      idx /= q;
      if (c) v = a.add(v, a.scale(c, ibasis[b]));
    }
    return v;
  };

  const std::uint64_t n = run_partitioned(total, opt.workers, [&](std::uint64_t b, std::uint64_t e) {
    std::vector<Vec> tuple(k);
    std::uint64_t hits = 0;
    for (std::uint64_t t = b; t < e; ++t) {
      std::uint64_t rest = t;
      for (int i = k - 1; i >= 0; --i) {
        tuple[i] = a.add(reps[i], ideal_element(rest % per));
        rest /= per;
      }
      if (is_generating(a, tuple)) ++hits;
    }
    return hits;
  });
  return mpz_class(std::to_string(n));
}

// --- constructors -----------------------------------------------------------

namespace {

std::string q_label(const PrimePower& q) { return std::to_string(q.q); }

void check_dim(long long dim, const std::string& what) {
  if (dim > kMaxAlgebraDim) {
    throw Error(ErrorKind::BudgetExceeded, what + " has dimension " + std::to_string(dim) +
                                               " > " + std::to_string(kMaxAlgebraDim));
  }
}

}  // namespace

FiniteAlgebra matrix_algebra(int n, const PrimePower& q, int r) {
  if (n < 1 || r < 1) throw Error(ErrorKind::InvalidArgument, "n and r must be positive");
  const std::string label =
      "M(" + std::to_string(n) + "," + q_label(q) + (r > 1 ? ";r=" + std::to_string(r) : "") + ")";
  check_dim(static_cast<long long>(n) * n * r, label);
  const FiniteField base = FiniteField::build(q);
  const FieldExtension ext(base, r);
  const int dim = n * n * r;
  auto idx = [&](int a, int b, int i) { return (a * n + b) * r + i; };
  std::vector<Elem> c(static_cast<std::size_t>(dim) * dim * dim, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < r; ++i)
        for (int d = 0; d < n; ++d)
          for (int j = 0; j < r; ++j) {
            const auto coords = ext.coords(ext.big().mul(ext.basis(i), ext.basis(j)));
            const int lhs = idx(a, b, i);
            const int rhs = idx(b, d, j);
            for (int t = 0; t < r; ++t) {
              c[(static_cast<std::size_t>(lhs) * dim + rhs) * dim + idx(a, d, t)] = coords[t];
            }
          }
  Vec unit(dim, 0);
  const auto one = ext.coords(1);
  for (int a = 0; a < n; ++a)
    for (int t = 0; t < r; ++t) unit[idx(a, a, t)] = one[t];
  return FiniteAlgebra(base, dim, std::move(c), std::move(unit), {}, label);
}

FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.base() == b.base())) {
    throw Error(ErrorKind::BaseMismatch, a.label() + " and " + b.label() + " differ in base field");
  }
  const std::string label = "P(" + a.label() + "," + b.label() + ")";
  check_dim(a.dim() + b.dim(), label);
  const int da = a.dim();
  const int dim = da + b.dim();
  std::vector<Elem> c(static_cast<std::size_t>(dim) * dim * dim, 0);
  auto at = [&](int i, int j, int k) -> Elem& {
    return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  };
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < da; ++k) at(i, j, k) = a.constant(i, j, k);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k) at(da + i, da + j, da + k) = b.constant(i, j, k);
  Vec unit(a.unit());
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  std::vector<Vec> rad;
  for (const auto& v : a.radical_basis()) {
    Vec w(v);
    w.resize(dim, 0);
    rad.push_back(std::move(w));
  }
  for (const auto& v : b.radical_basis()) {
    Vec w(da, 0);
    w.insert(w.end(), v.begin(), v.end());
    rad.push_back(std::move(w));
  }
  return FiniteAlgebra(a.base(), dim, std::move(c), std::move(unit), std::move(rad), label);
}

FiniteAlgebra matrix_over(const FiniteAlgebra& a, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (n == 1) return a;
  const std::string label = "MO(" + a.label() + "," + std::to_string(n) + ")";
  check_dim(static_cast<long long>(n) * n * a.dim(), label);
  const int da = a.dim();
  const int dim = n * n * da;
  auto idx = [&](int r, int s, int t) { return (r * n + s) * da + t; };
  std::vector<Elem> c(static_cast<std::size_t>(dim) * dim * dim, 0);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int d = 0; d < n; ++d)
        for (int t = 0; t < da; ++t)
          for (int u = 0; u < da; ++u)
            for (int v = 0; v < da; ++v) {
              c[(static_cast<std::size_t>(idx(r, s, t)) * dim + idx(s, d, u)) * dim + idx(r, d, v)] =
                  a.constant(t, u, v);
            }
  Vec unit(dim, 0);
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < da; ++t) unit[idx(r, r, t)] = a.unit()[t];
  std::vector<Vec> rad;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (const auto& v : a.radical_basis()) {
        Vec w(dim, 0);
        for (int t = 0; t < da; ++t) w[idx(r, s, t)] = v[t];
        rad.push_back(std::move(w));
      }
  return FiniteAlgebra(a.base(), dim, std::move(c), std::move(unit), std::move(rad), label);
}

FiniteAlgebra truncated_local_algebra(const PrimePower& q, int f, int m, int s, int e) {
  if (f < 1 || m < 1 || e < 1) throw Error(ErrorKind::InvalidArgument, "f, m, e must be positive");
  if (s < 1 || s > m || std::gcd(s, m) != 1) {
    throw Error(ErrorKind::InvalidTwist, "twist s=" + std::to_string(s) +
                                             " must satisfy 1 <= s <= m and gcd(s,m)=1 for m=" +
                                             std::to_string(m));
  }
  const std::string label = "TW(q=" + q_label(q) + ",f=" + std::to_string(f) +
                            ",m=" + std::to_string(m) + ",s=" + std::to_string(s) +
                            ",e=" + std::to_string(e) + ")";
  const int width = f * m;
  const int height = e * m;
  check_dim(static_cast<long long>(width) * height, label);
  const FiniteField base = FiniteField::build(q);
  const FieldExtension ext(base, width);
  const int dim = width * height;
  auto idx = [&](int i, int j) { return j * width + i; };
  std::vector<Elem> c(static_cast<std::size_t>(dim) * dim * dim, 0);
  // (w^i pi^j)(w^i2 pi^j2) = w^i sigma^j(w^i2) pi^{j+j2}, sigma(x) = x^{q^{f s}}.
  for (int j = 0; j < height; ++j)
    for (int j2 = 0; j2 + j < height; ++j2)
      for (int i = 0; i < width; ++i)
        for (int i2 = 0; i2 < width; ++i2) {
          const Elem twisted = ext.frobenius_q(ext.basis(i2), static_cast<std::int64_t>(f) * s * j);
          const auto coords = ext.coords(ext.big().mul(ext.basis(i), twisted));
          for (int t = 0; t < width; ++t) {
            c[(static_cast<std::size_t>(idx(i, j)) * dim + idx(i2, j2)) * dim + idx(t, j + j2)] =
                coords[t];
          }
        }
  Vec unit(dim, 0);
  const auto one = ext.coords(1);
  for (int t = 0; t < width; ++t) unit[idx(t, 0)] = one[t];
  std::vector<Vec> rad;
  for (int j = 1; j < height; ++j)
    for (int i = 0; i < width; ++i) {
      Vec v(dim, 0);
      v[idx(i, j)] = 1;
      rad.push_back(std::move(v));
    }
  return FiniteAlgebra(base, dim, std::move(c), std::move(unit), std::move(rad), label);
}

}  // namespace ordgen

#include "toricapprox/intlat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toric {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("IntMatrix: ragged rows");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, std::size_t dim) {
  IntMatrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw InputError("IntMatrix: vector length mismatch");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t ncols) {
  IntMatrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw InputError("IntMatrix: vector length mismatch");
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVec IntMatrix::col(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<IntVec> IntMatrix::columns() const {
  std::vector<IntVec> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  if (x.size() != cols_) throw InputError("IntMatrix::apply: dimension mismatch");
  IntVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("IntMatrix: product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntVec SmithDecomposition::diagonal() const {
  IntVec d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

mpz_class QuotientStructure::torsion_order() const {
  mpz_class p = 1;
  for (const auto& f : invariant_factors) p *= f;
  return p;
}

std::string QuotientStructure::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    s += (i ? "," : "") + invariant_factors[i].get_str();
  s += "]";
  if (free_rank) s += " + Z^" + std::to_string(free_rank);
  return s;
}

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void col_axpy(IntMatrix& m, std::size_t dst, const mpz_class& q, std::size_t src) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void row_axpy(IntMatrix& m, std::size_t dst, const mpz_class& q, std::size_t src) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

IntMatrix hnf(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t d = m.rows(), k = m.cols();
  std::size_t pc = 0;
  for (std::size_t i = 0; i < d && pc < k; ++i) {
    for (;;) {
      std::size_t best = k;
      for (std::size_t j = pc; j < k; ++j)
        if (m(i, j) != 0 && (best == k || abs(m(i, j)) < abs(m(i, best)))) best = j;
      if (best == k) break;
      swap_cols(m, pc, best);
      bool clean = true;
      for (std::size_t j = pc + 1; j < k; ++j) {
        if (m(i, j) == 0) continue;
        col_axpy(m, j, floor_div(m(i, j), m(i, pc)), pc);
        if (m(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(i, pc) == 0) continue;
    if (m(i, pc) < 0)
      for (std::size_t r = 0; r < d; ++r) m(r, pc) = -m(r, pc);
    for (std::size_t j = 0; j < pc; ++j) col_axpy(m, j, floor_div(m(i, j), m(i, pc)), pc);
    ++pc;
  }
  IntMatrix out(d, pc);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < pc; ++j) out(i, j) = m(i, j);
  return out;
}

SmithDecomposition snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& S = r.S;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool any = false;
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (bi == m || abs(S(i, j)) < abs(S(bi, bj)))) bi = i, bj = j;
      if (bi == m) break;
      any = true;
      swap_rows(S, t, bi);
      swap_rows(r.U, t, bi);
      swap_cols(S, t, bj);
      swap_cols(r.V, t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        mpz_class q = S(i, t) / S(t, t);
        row_axpy(S, i, q, t);
        row_axpy(r.U, i, q, t);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        mpz_class q = S(t, j) / S(t, t);
        col_axpy(S, j, q, t);
        col_axpy(r.V, j, q, t);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_axpy(S, t, -1, bad);
      row_axpy(r.U, t, -1, bad);
    }
    if (!any) break;
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < m; ++j) r.U(t, j) = -r.U(t, j);
    }
  }
  return r;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant: non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) { return hnf(a).cols(); }

LatticeBasis lattice_from_generators(const std::vector<IntVec>& vectors, std::size_t ambient_dim) {
  return {ambient_dim, hnf(IntMatrix::from_columns(vectors, ambient_dim))};
}

LatticeIndex lattice_index(const LatticeBasis& sub, std::size_t ambient_dim) {
  if (sub.ambient_dim != ambient_dim) throw InputError("lattice_index: ambient dimension mismatch");
  if (sub.rank() < ambient_dim) return {};
  return {abs(determinant(sub.basis))};
}

QuotientStructure quotient_invariants(const LatticeBasis& sub, std::size_t ambient_dim) {
  if (sub.ambient_dim != ambient_dim) throw InputError("quotient_invariants: ambient dimension mismatch");
  QuotientStructure q;
  q.free_rank = ambient_dim - sub.rank();
  for (const auto& d : snf(sub.basis).diagonal())
    if (d > 1) q.invariant_factors.push_back(d);
  return q;
}

std::optional<IntMatrix> right_inverse(const IntMatrix& a) {
  const std::size_t d = a.rows(), l = a.cols();
  if (l < d) return std::nullopt;
  auto dec = snf(a);
  for (std::size_t i = 0; i < d; ++i)
    if (dec.S(i, i) != 1) return std::nullopt;
  IntMatrix splus(l, d);
  for (std::size_t i = 0; i < d; ++i) splus(i, i) = 1;
  IntMatrix r = dec.V * splus * dec.U;
  if (!(a * r == IntMatrix::identity(d))) throw ComputationDefect("right_inverse: self-check failed");
  return r;
}

std::optional<IntVec> solve_integral(const IntMatrix& a, const IntVec& b) {
  if (b.size() != a.rows()) throw InputError("solve_integral: dimension mismatch");
  auto dec = snf(a);
  IntVec c = dec.U.apply(b);
  IntVec y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const bool pivot = i < a.cols() && dec.S(i, i) != 0;
    if (!pivot) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    if (c[i] % dec.S(i, i) != 0) return std::nullopt;
    y[i] = c[i] / dec.S(i, i);
  }
  return dec.V.apply(y);
}

std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw InputError("solve_rational: dimension mismatch");
  std::vector<RatVec> t(m, RatVec(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a(i, j);
    t[i][n] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t p = r;
    while (p < m && t[p][j] == 0) ++p;
    if (p == m) continue;
    std::swap(t[p], t[r]);
    mpq_class inv = 1 / t[r][j];
    for (auto& x : t[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][j] == 0) continue;
      mpq_class f = t[i][j];
      for (std::size_t k = j; k <= n; ++k) t[i][k] -= f * t[r][k];
    }
    pivots.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (t[i][n] != 0) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = t[i][n];
  return x;
}

std::optional<RatVec> lp_feasible(const std::vector<RatVec>& a_rows, const RatVec& b, std::size_t nvars) {
  const std::size_t m = a_rows.size(), n = nvars;
  if (b.size() != m) throw InputError("lp_feasible: dimension mismatch");
  // Tableau [A | I | b] with artificial basis; objective row minimizes the artificial sum.
  const std::size_t w = n + m;
  std::vector<RatVec> t(m, RatVec(w + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a_rows[i].size() != n) throw InputError("lp_feasible: row length mismatch");
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? mpq_class(-a_rows[i][j]) : a_rows[i][j];
    t[i][n + i] = 1;
    t[i][w] = flip ? mpq_class(-b[i]) : b[i];
    basis[i] = n + i;
  }
  RatVec obj(w + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) obj[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) obj[w] -= t[i][w];

  for (;;) {
    std::size_t enter = w;
    for (std::size_t j = 0; j < w; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == w) break;
    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][w] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    mpq_class inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      mpq_class f = t[i][enter];
      for (std::size_t k = 0; k <= w; ++k) t[i][k] -= f * t[leave][k];
    }
    mpq_class f = obj[enter];
    for (std::size_t k = 0; k <= w; ++k) obj[k] -= f * t[leave][k];
    basis[leave] = enter;
  }
  if (obj[w] != 0) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][w];
  return x;
}

RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

bool cone_contains(const std::vector<IntVec>& generators, const RatVec& v) {
  const std::size_t d = v.size();
  if (generators.empty())
    return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
  std::vector<RatVec> rows(d, RatVec(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != d) throw InputError("cone_contains: dimension mismatch");
    for (std::size_t i = 0; i < d; ++i) rows[i][j] = generators[j][i];
  }
  return lp_feasible(rows, v, generators.size()).has_value();
}

bool cone_contains(const std::vector<IntVec>& generators, const IntVec& v) {
  return cone_contains(generators, to_rat(v));
}

bool cone_is_full(const std::vector<IntVec>& generators, std::size_t ambient_dim) {
  if (ambient_dim == 0) return true;
  for (std::size_t i = 0; i < ambient_dim; ++i)
    for (int s : {1, -1}) {
      RatVec e(ambient_dim);
      e[i] = s;
      if (!cone_contains(generators, e)) return false;
    }
  return true;
}

bool is_unimodular_cone(const std::vector<IntVec>& cone_rays, std::size_t ambient_dim) {
  if (cone_rays.size() > ambient_dim) return false;
  auto dec = snf(IntMatrix::from_columns(cone_rays, ambient_dim));
  for (std::size_t i = 0; i < cone_rays.size(); ++i)
    if (dec.S(i, i) != 1) return false;
  return true;
}

std::optional<IntVec> solve_in_smooth_cone(const std::vector<IntVec>& cone_rays, const IntVec& v) {
  const std::size_t d = v.size();
  if (!is_unimodular_cone(cone_rays, d))
    throw InputError("solve_in_smooth_cone: cone rays do not extend to a Z-basis");
  if (cone_rays.empty()) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return IntVec{};
  }
  auto sol = solve_integral(IntMatrix::from_columns(cone_rays, d), v);
  if (!sol) return std::nullopt;
  for (const auto& c : *sol)
    if (c < 0) return std::nullopt;
  return sol;
}

}  // namespace toric

#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "toricapprox/core.hpp"

namespace toric {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Columns are the given vectors; dim fixes the row count (needed for empty lists).
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t dim);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t ncols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec col(std::size_t c) const;
  std::vector<IntVec> columns() const;
  IntMatrix transpose() const;
  IntVec apply(const IntVec& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithDecomposition {
  IntMatrix U, S, V;
  // Diagonal of S, length min(rows, cols).
  IntVec diagonal() const;
};

struct LatticeBasis {
  std::size_t ambient_dim = 0;
  IntMatrix basis;  // ambient_dim x rank, column HNF
  std::size_t rank() const { return basis.cols(); }
  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.ambient_dim == b.ambient_dim && a.basis == b.basis;
  }
};

// Index of a sublattice; nullopt value means infinite.
struct LatticeIndex {
  std::optional<mpz_class> value;
  bool is_infinite() const { return !value.has_value(); }
  bool is_one() const { return value && *value == 1; }
  std::string to_string() const { return value ? value->get_str() : "inf"; }
  friend bool operator==(const LatticeIndex& a, const LatticeIndex& b) { return a.value == b.value; }
};

struct QuotientStructure {
  IntVec invariant_factors;  // all >= 2, d1 | d2 | ...
  std::size_t free_rank = 0;
  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  mpz_class torsion_order() const;
  std::string to_string() const;
  friend bool operator==(const QuotientStructure& a, const QuotientStructure& b) {
    return a.invariant_factors == b.invariant_factors && a.free_rank == b.free_rank;
  }
};

IntMatrix hnf(const IntMatrix& a);
SmithDecomposition snf(const IntMatrix& a);
mpz_class determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);

LatticeBasis lattice_from_generators(const std::vector<IntVec>& vectors, std::size_t ambient_dim);
LatticeIndex lattice_index(const LatticeBasis& sub, std::size_t ambient_dim);
QuotientStructure quotient_invariants(const LatticeBasis& sub, std::size_t ambient_dim);

std::optional<IntMatrix> right_inverse(const IntMatrix& a);
// Some integral x with A x = b.
std::optional<IntVec> solve_integral(const IntMatrix& a, const IntVec& b);
// Some rational x with A x = b (free variables set to 0).
std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b);

// Exact phase-one simplex: some x >= 0 with A x = b, or nullopt.
std::optional<RatVec> lp_feasible(const std::vector<RatVec>& a_rows, const RatVec& b, std::size_t nvars);

bool cone_contains(const std::vector<IntVec>& generators, const RatVec& v);
bool cone_contains(const std::vector<IntVec>& generators, const IntVec& v);
bool cone_is_full(const std::vector<IntVec>& generators, std::size_t ambient_dim);

// Throws InputError unless the rays extend to a Z-basis.
std::optional<IntVec> solve_in_smooth_cone(const std::vector<IntVec>& cone_rays, const IntVec& v);
bool is_unimodular_cone(const std::vector<IntVec>& cone_rays, std::size_t ambient_dim);

RatVec to_rat(const IntVec& v);

}  // namespace toric

#pragma once
// Dense complex linear algebra for small verification workloads (dims up to a
// few thousand): value-semantic matrices, tensor-product site embedding, a
// cyclic-Jacobi Hermitian eigensolver and characteristic polynomials.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace matcore {

using cdouble = std::complex<double>;

class MatcoreError : public std::runtime_error {
 public:
  explicit MatcoreError(const std::string& what) : std::runtime_error(what) {}
};

class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diag(const std::vector<cdouble>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cdouble operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  cdouble& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  const cdouble* data() const { return data_.data(); }
  cdouble* data() { return data_.data(); }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator-() const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator*(cdouble s) const;
  friend ComplexMatrix operator*(cdouble s, const ComplexMatrix& m) {
    return m * s;
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  cdouble trace() const;
  double norm_fro() const;   // Frobenius norm
  double norm_max() const;   // max |entry|
  bool is_hermitian(double tol = 1e-9) const;

 private:
  std::size_t rows_, cols_;
  std::vector<cdouble> data_;
};

// Kronecker product; the first factor carries the slow (outer) index:
// out[(i*rb+k)*(cols) + (j*cb+l)] = a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Symmetric summation over all six orderings of a triple product.
ComplexMatrix sym3(const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c);

// Gauss-Jordan inverse with partial pivoting; throws MatcoreError when the
// matrix is numerically singular.
ComplexMatrix inverse(const ComplexMatrix& a);

// Multi-site tensor-product space bookkeeping: per-site dimensions plus
// operator embedding at a site (identity elsewhere).
class TensorSpace {
 public:
  explicit TensorSpace(std::vector<std::size_t> dims);

  std::size_t sites() const { return dims_.size(); }
  std::size_t dim() const { return total_; }
  std::size_t site_dim(std::size_t site) const { return dims_.at(site); }
  const std::vector<std::size_t>& dims() const { return dims_; }

  ComplexMatrix embed(const ComplexMatrix& op, std::size_t site) const;
  // Embed a two-site operator acting on (site, site+1).
  ComplexMatrix embed_pair(const ComplexMatrix& op, std::size_t left) const;
  // Replace the action on one site by its normalized partial trace:
  // X -> (tr_site X / d_site) tensor identity_site, other sites untouched.
  // Used for support decompositions of chain operators.
  ComplexMatrix average_out_site(const ComplexMatrix& op,
                                 std::size_t site) const;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary; column k pairs with values[k]
};

// Cyclic Jacobi with complex plane rotations. Sweeps until every off-diagonal
// magnitude falls below tol * max|a_ij| (cap: 100 sweeps). Throws on
// non-Hermitian input (message carries the measured asymmetry) and on
// non-convergence.
EigenDecomposition hermitian_eigen(const ComplexMatrix& a, double tol = 1e-9);

// Monic characteristic polynomial det(xI - a) via the Faddeev-LeVerrier
// recurrence; returns {1, c1, ..., cn} with p(x) = x^n + c1 x^(n-1) + ... + cn.
std::vector<cdouble> char_poly_coeffs(const ComplexMatrix& a);

// Evaluate a monic polynomial given by char_poly_coeffs at x.
cdouble poly_eval(const std::vector<cdouble>& coeffs, cdouble x);

}  // namespace matcore

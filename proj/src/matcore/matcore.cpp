#include "matcore/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "matcore/kernels.hpp"

namespace matcore {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw MatcoreError(msg);
}

std::string dim_str(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cdouble>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, "ragged initializer for ComplexMatrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<cdouble>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_,
          "shape mismatch in +: " + dim_str(*this) + " vs " + dim_str(o));
  ComplexMatrix out(rows_, cols_);
  kernels::add(data_.size(), data(), o.data(), out.data());
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_,
          "shape mismatch in -: " + dim_str(*this) + " vs " + dim_str(o));
  ComplexMatrix out(rows_, cols_);
  kernels::sub(data_.size(), data(), o.data(), out.data());
  return out;
}

ComplexMatrix ComplexMatrix::operator-() const {
  ComplexMatrix out(rows_, cols_);
  kernels::scale(data_.size(), cdouble(-1.0, 0.0), data(), out.data());
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  require(cols_ == o.rows_,
          "shape mismatch in *: " + dim_str(*this) + " vs " + dim_str(o));
  ComplexMatrix out(rows_, o.cols_);
  kernels::gemm(rows_, cols_, o.cols_, data(), o.data(), out.data());
  return out;
}

ComplexMatrix ComplexMatrix::operator*(cdouble s) const {
  ComplexMatrix out(rows_, cols_);
  kernels::scale(data_.size(), s, data(), out.data());
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out.at(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data()[i] = std::conj(data_[i]);
  return out;
}

cdouble ComplexMatrix::trace() const {
  require(square(), "trace requires a square matrix, got " + dim_str(*this));
  cdouble t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::norm_fro() const {
  double s = 0.0;
  for (const cdouble& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

double ComplexMatrix::norm_max() const {
  double m = 0.0;
  for (const cdouble& x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol)
        return false;
  return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  ComplexMatrix out(ra * rb, ca * cb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j) {
      const cdouble aij = a(i, j);
      if (aij == cdouble(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l)
          out.at(i * rb + k, j * cb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

ComplexMatrix sym3(const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c) {
  const ComplexMatrix ab = a * b, ba = b * a, ac = a * c, ca = c * a,
                      bc = b * c, cb = c * b;
  return ab * c + ba * c + ac * b + ca * b + bc * a + cb * a;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  require(a.square(), "inverse requires a square matrix, got " + dim_str(a));
  const std::size_t n = a.rows();
  ComplexMatrix w = a;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  const double tiny = 1e-12 * std::max(1.0, a.norm_max());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(w(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(w(r, col));
      if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    require(best > tiny, "inverse: matrix is numerically singular (pivot " +
                             std::to_string(best) + ")");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w.at(col, j), w.at(piv, j));
        std::swap(inv.at(col, j), inv.at(piv, j));
      }
    }
    const cdouble scale = 1.0 / w(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      w.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cdouble f = w(r, col);
      if (f == cdouble(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        w.at(r, j) -= f * w(col, j);
        inv.at(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

TensorSpace::TensorSpace(std::vector<std::size_t> dims)
    : dims_(std::move(dims)), total_(1) {
  require(!dims_.empty(), "TensorSpace needs at least one site");
  for (std::size_t d : dims_) {
    require(d >= 1, "TensorSpace site dimension must be positive");
    total_ *= d;
  }
}

ComplexMatrix TensorSpace::embed(const ComplexMatrix& op,
                                 std::size_t site) const {
  require(site < dims_.size(), "embed: site index out of range");
  const std::size_t d = dims_[site];
  require(op.rows() == d && op.cols() == d,
          "embed: operator is " + dim_str(op) + " but site dimension is " +
              std::to_string(d));
  std::size_t left = 1, right = 1;
  for (std::size_t s = 0; s < site; ++s) left *= dims_[s];
  for (std::size_t s = site + 1; s < dims_.size(); ++s) right *= dims_[s];
  ComplexMatrix out(total_, total_);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const cdouble v = op(a, b);
        if (v == cdouble(0.0, 0.0)) continue;
        const std::size_t ro = (l * d + a) * right;
        const std::size_t co = (l * d + b) * right;
        for (std::size_t r = 0; r < right; ++r) out.at(ro + r, co + r) = v;
      }
  return out;
}

ComplexMatrix TensorSpace::embed_pair(const ComplexMatrix& op,
                                      std::size_t left_site) const {
  require(left_site + 1 < dims_.size(),
          "embed_pair: needs two adjacent sites starting at the given index");
  const std::size_t d = dims_[left_site] * dims_[left_site + 1];
  require(op.rows() == d && op.cols() == d,
          "embed_pair: operator is " + dim_str(op) +
              " but the site pair has dimension " + std::to_string(d));
  std::size_t left = 1, right = 1;
  for (std::size_t s = 0; s < left_site; ++s) left *= dims_[s];
  for (std::size_t s = left_site + 2; s < dims_.size(); ++s) right *= dims_[s];
  ComplexMatrix out(total_, total_);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const cdouble v = op(a, b);
        if (v == cdouble(0.0, 0.0)) continue;
        const std::size_t ro = (l * d + a) * right;
        const std::size_t co = (l * d + b) * right;
        for (std::size_t r = 0; r < right; ++r) out.at(ro + r, co + r) = v;
      }
  return out;
}

ComplexMatrix TensorSpace::average_out_site(const ComplexMatrix& op,
                                            std::size_t site) const {
  require(site < dims_.size(), "average_out_site: site index out of range");
  require(op.rows() == total_ && op.cols() == total_,
          "average_out_site: operator is " + dim_str(op) +
              " but the space has dimension " + std::to_string(total_));
  const std::size_t d = dims_[site];
  std::size_t left = 1, right = 1;
  for (std::size_t s = 0; s < site; ++s) left *= dims_[s];
  for (std::size_t s = site + 1; s < dims_.size(); ++s) right *= dims_[s];
  ComplexMatrix out(total_, total_);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t lp = 0; lp < left; ++lp)
      for (std::size_t r = 0; r < right; ++r)
        for (std::size_t rp = 0; rp < right; ++rp) {
          cdouble s = 0.0;
          for (std::size_t a = 0; a < d; ++a)
            s += op((l * d + a) * right + r, (lp * d + a) * right + rp);
          s /= static_cast<double>(d);
          if (s == cdouble(0.0, 0.0)) continue;
          for (std::size_t b = 0; b < d; ++b)
            out.at((l * d + b) * right + r, (lp * d + b) * right + rp) = s;
        }
  return out;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& a, double tol) {
  require(a.square(),
          "hermitian_eigen requires a square matrix, got " + dim_str(a));
  const std::size_t n = a.rows();
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      asym = std::max(asym, std::abs(a(i, j) - std::conj(a(j, i))));
  require(asym <= 1e-9 * std::max(1.0, a.norm_max()),
          "hermitian_eigen: input is not Hermitian (asymmetry " +
              std::to_string(asym) + ")");

  ComplexMatrix w = a;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = tol * a.norm_max();

  auto max_offdiag = [&]() {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        m = std::max(m, std::abs(w(i, j)));
    return m;
  };

  const int max_sweeps = 100;
  int sweep = 0;
  while (max_offdiag() > threshold) {
    require(sweep++ < max_sweeps,
            "hermitian_eigen: no convergence after 100 sweeps");
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cdouble apq = w(p, q);
        const double r = std::abs(apq);
        if (r <= threshold) continue;
        // Phase-absorbed real rotation: with apq = r e^{i phi}, the 2x2 block
        // diagonalizes via R(pp)=c, R(qq)=c, R(pq)=s e^{i phi},
        // R(qp)=-s e^{-i phi}.
        const cdouble phase = apq / r;
        const double tau = (w(q, q).real() - w(p, p).real()) / (2.0 * r);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cdouble spq = s * phase;             // R(p,q)
        const cdouble sqp = -s * std::conj(phase); // R(q,p)
        // Columns: W <- W R, V <- V R.
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble wp = w(k, p), wq = w(k, q);
          w.at(k, p) = wp * c + wq * sqp;
          w.at(k, q) = wp * spq + wq * c;
          const cdouble vp = v(k, p), vq = v(k, q);
          v.at(k, p) = vp * c + vq * sqp;
          v.at(k, q) = vp * spq + vq * c;
        }
        // Rows: W <- R^dagger W.
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble wp = w(p, k), wq = w(q, k);
          w.at(p, k) = wp * c + wq * std::conj(sqp);
          w.at(q, k) = wp * std::conj(spq) + wq * c;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return w(i, i).real() < w(j, j).real();
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = w(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors.at(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<cdouble> char_poly_coeffs(const ComplexMatrix& a) {
  require(a.square(),
          "char_poly_coeffs requires a square matrix, got " + dim_str(a));
  const std::size_t n = a.rows();
  std::vector<cdouble> coeffs(n + 1);
  coeffs[0] = 1.0;
  ComplexMatrix m = a;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      ComplexMatrix shifted = m;
      for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += coeffs[k - 1];
      m = a * shifted;
    }
    coeffs[k] = -m.trace() / static_cast<double>(k);
  }
  return coeffs;
}

cdouble poly_eval(const std::vector<cdouble>& coeffs, cdouble x) {
  cdouble acc = 0.0;
  for (const cdouble& c : coeffs) acc = acc * x + c;
  return acc;
}

}  // namespace matcore

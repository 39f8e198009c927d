#pragma once

// Dense exact linear algebra over Q(z).
//
// All indices are 0-based. Builders that follow 1-based or differently
// anchored statements translate explicitly.

#include <cyclodet/cyclotomic.hpp>
#include <cyclodet/permutation.hpp>
#include <cyclodet/poly_ring.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclodet {

/// Raised when a factorial-cost routine is asked for a size above its cap.
class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CMatrix {
 public:
  CMatrix(CycloContextPtr ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols) {
    if (!ctx_) throw std::invalid_argument("CMatrix: null context");
    entries_.assign(rows * cols, CycloElem::zero(ctx_));
  }

  static CMatrix zero(const CycloContextPtr& ctx, std::size_t dim) { return CMatrix(ctx, dim, dim); }

  static CMatrix identity(const CycloContextPtr& ctx, std::size_t dim) {
    CMatrix m(ctx, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = CycloElem::one(ctx);
    return m;
  }

  /// Square matrix with entry (j, k) = f(j, k).
  static CMatrix generate(const CycloContextPtr& ctx, std::size_t dim,
                          const std::function<CycloElem(std::size_t, std::size_t)>& f) {
    CMatrix m(ctx, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) m(j, k) = f(j, k);
    }
    return m;
  }

  static CMatrix from_rationals(const CycloContextPtr& ctx, const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    CMatrix m(ctx, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("CMatrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = CycloElem::from_rational(ctx, rows[i][j]);
    }
    return m;
  }

  const CycloContextPtr& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  CycloElem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const CycloElem& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const CycloElem& at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("CMatrix::at: index out of range");
    return entries_[r * cols_ + c];
  }

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    check_shape(a, b);
    CMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
  }

  friend CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    check_shape(a, b);
    CMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
    return out;
  }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("CMatrix: shape mismatch in product");
    CMatrix out(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const CycloElem& ail = a(i, l);
        if (ail.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(l, j).is_zero()) continue;
          out(i, j) += ail * b(l, j);
        }
      }
    }
    return out;
  }

  CMatrix scaled(const CycloElem& c) const {
    CMatrix out = *this;
    for (auto& e : out.entries_) e = e * c;
    return out;
  }

  /// Entry-wise x + m_jk.
  CMatrix plus_constant(const CycloElem& x) const {
    CMatrix out = *this;
    for (auto& e : out.entries_) e += x;
    return out;
  }

  CMatrix map(const std::function<CycloElem(const CycloElem&)>& f) const {
    CMatrix out = *this;
    for (auto& e : out.entries_) e = f(e);
    return out;
  }

  CMatrix transpose() const {
    CMatrix out(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  CMatrix conj_transpose() const { return transpose().map([](const CycloElem& e) { return e.conjugate(); }); }

  bool is_hermitian() const { return is_square() && *this == conj_transpose(); }

  bool is_skew_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i; j < cols_; ++j) {
        if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
      }
    }
    return true;
  }

  CycloElem trace() const {
    require_square("trace");
    CycloElem t = CycloElem::zero(ctx_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  void require_square(const char* what) const {
    if (!is_square()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }

 private:
  static void check_shape(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("CMatrix: shape mismatch");
  }

  CycloContextPtr ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CycloElem> entries_;
};

/// Gaussian elimination with exact division. The pivot is the first nonzero
/// entry scanning down the column; the empty matrix has determinant 1.
inline CycloElem det(const CMatrix& m) {
  m.require_square("det");
  const std::size_t dim = m.rows();
  const auto& ctx = m.context();
  CMatrix a = m;
  CycloElem result = CycloElem::one(ctx);
  bool negate = false;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t p = c;
    while (p < dim && a(p, c).is_zero()) ++p;
    if (p == dim) return CycloElem::zero(ctx);
    if (p != c) {
      for (std::size_t j = c; j < dim; ++j) std::swap(a(p, j), a(c, j));
      negate = !negate;
    }
    result *= a(c, c);
    const CycloElem pivot_inv = a(c, c).inverse();
    for (std::size_t j = c + 1; j < dim; ++j) a(c, j) = a(c, j) * pivot_inv;
    for (std::size_t i = c + 1; i < dim; ++i) {
      if (a(i, c).is_zero()) continue;
      const CycloElem f = a(i, c);
      for (std::size_t j = c + 1; j < dim; ++j) {
        if (a(c, j).is_zero()) continue;
        a(i, j) -= f * a(c, j);
      }
    }
  }
  return negate ? -result : result;
}

/// Leibniz expansion over all of S_dim. Independent oracle for det().
inline CycloElem perm_expansion_det(const CMatrix& m, bool force = false) {
  m.require_square("perm_expansion_det");
  constexpr std::size_t kGuardrail = 8;
  const std::size_t dim = m.rows();
  if (dim > kGuardrail && !force) {
    throw GuardrailError("perm_expansion_det: dimension " + std::to_string(dim) + " exceeds guardrail " +
                         std::to_string(kGuardrail));
  }
  const auto& ctx = m.context();
  std::vector<int> img(dim);
  std::iota(img.begin(), img.end(), 1);
  CycloElem total = CycloElem::zero(ctx);
  do {
    CycloElem term = CycloElem::one(ctx);
    for (std::size_t j = 0; j < dim && !term.is_zero(); ++j) {
      term *= m(j, static_cast<std::size_t>(img[j] - 1));
    }
    if (term.is_zero()) continue;
    total = sign(Permutation(img)) > 0 ? total + term : total - term;
  } while (std::next_permutation(img.begin(), img.end()));
  return total;
}

/// det(xI - M) by the Faddeev-LeVerrier recurrence:
///   N_1 = I, c_{d-k} = -tr(M N_k) / k, N_{k+1} = M N_k + c_{d-k} I.
inline CPoly charpoly(const CMatrix& m) {
  m.require_square("charpoly");
  const std::size_t dim = m.rows();
  const auto& ctx = m.context();
  std::vector<CycloElem> coeffs(dim + 1, CycloElem::zero(ctx));
  coeffs[dim] = CycloElem::one(ctx);
  CMatrix n_k = CMatrix::identity(ctx, dim);
  for (std::size_t k = 1; k <= dim; ++k) {
    CMatrix product = m * n_k;
    const CycloElem c = product.trace() * Rational(-1, static_cast<long>(k));
    coeffs[dim - k] = c;
    if (k == dim) break;
    for (std::size_t i = 0; i < dim; ++i) product(i, i) += c;
    n_k = std::move(product);
  }
  return CPoly(ctx, std::move(coeffs));
}

inline std::vector<CycloElem> matvec(const CMatrix& m, const std::vector<CycloElem>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matvec: shape mismatch");
  std::vector<CycloElem> out(m.rows(), CycloElem::zero(m.context()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

inline CMatrix conj_transpose(const CMatrix& m) { return m.conj_transpose(); }
inline bool is_hermitian(const CMatrix& m) { return m.is_hermitian(); }

/// Principal minor with row and column `index` (0-based) removed.
inline CMatrix minor_delete(const CMatrix& m, std::size_t index) {
  m.require_square("minor_delete");
  if (index >= m.rows()) throw std::out_of_range("minor_delete: index out of range");
  const std::size_t dim = m.rows();
  CMatrix out(m.context(), dim - 1, dim - 1);
  for (std::size_t i = 0, oi = 0; i < dim; ++i) {
    if (i == index) continue;
    for (std::size_t j = 0, oj = 0; j < dim; ++j) {
      if (j == index) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

/// M' with m'_{jk} = m_{jk} - m_{j0} - m_{0k} + m_{00} for j, k >= 1.
inline CMatrix mm_prime(const CMatrix& m) {
  m.require_square("mm_prime");
  const std::size_t dim = m.rows();
  if (dim < 2) throw std::invalid_argument("mm_prime: dimension must be >= 2");
  CMatrix out(m.context(), dim - 1, dim - 1);
  for (std::size_t j = 1; j < dim; ++j) {
    for (std::size_t k = 1; k < dim; ++k) out(j - 1, k - 1) = m(j, k) - m(j, 0) - m(0, k) + m(0, 0);
  }
  return out;
}

struct AffineDet {
  CycloElem constant;  // det(M)
  CycloElem slope;     // det(M')
};

/// det[x + m_jk] = det(M) + x det(M'). For a 1x1 input M' is empty, so the
/// slope is 1.
inline AffineDet det_affine(const CMatrix& m) {
  m.require_square("det_affine");
  if (m.rows() == 0) throw std::invalid_argument("det_affine: dimension must be >= 1");
  if (m.rows() == 1) return {det(m), CycloElem::one(m.context())};
  return {det(m), det(mm_prime(m))};
}

}  // namespace cyclodet

#pragma once

// Dense univariate polynomials over Q(z), lowest degree first.

#include <cyclodet/cyclotomic.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclodet {

class CPoly {
 public:
  explicit CPoly(CycloContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("CPoly: null context");
  }

  CPoly(CycloContextPtr ctx, std::vector<CycloElem> coeffs) : CPoly(std::move(ctx)) {
    coeffs_ = std::move(coeffs);
    for (const auto& c : coeffs_) {
      if (c.modulus() != ctx_->n()) throw std::invalid_argument("CPoly: coefficient context mismatch");
    }
    trim();
  }

  static CPoly from_rationals(const CycloContextPtr& ctx, const std::vector<Rational>& coeffs) {
    std::vector<CycloElem> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.push_back(CycloElem::from_rational(ctx, r));
    return CPoly(ctx, std::move(c));
  }

  static CPoly constant(const CycloContextPtr& ctx, const CycloElem& c) { return CPoly(ctx, {c}); }

  /// c * x^k
  static CPoly monomial(const CycloContextPtr& ctx, const CycloElem& c, std::size_t k) {
    std::vector<CycloElem> coeffs(k + 1, CycloElem::zero(ctx));
    coeffs[k] = c;
    return CPoly(ctx, std::move(coeffs));
  }

  static CPoly x(const CycloContextPtr& ctx) { return monomial(ctx, CycloElem::one(ctx), 1); }

  const CycloContextPtr& context() const { return ctx_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<CycloElem>& coeffs() const { return coeffs_; }

  CycloElem coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : CycloElem::zero(ctx_);
  }

  CycloElem eval(const CycloElem& at) const {
    CycloElem acc = CycloElem::zero(ctx_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
    return acc;
  }

  CycloElem eval(const Rational& at) const { return eval(CycloElem::from_rational(ctx_, at)); }

  friend bool operator==(const CPoly& a, const CPoly& b) {
    check_same(a, b);
    return a.coeffs_ == b.coeffs_;
  }

  friend CPoly operator+(const CPoly& a, const CPoly& b) { return combine(a, b, false); }
  friend CPoly operator-(const CPoly& a, const CPoly& b) { return combine(a, b, true); }

  CPoly operator-() const {
    CPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CPoly operator*(const CPoly& a, const CPoly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return CPoly(a.ctx_);
    std::vector<CycloElem> out(a.coeffs_.size() + b.coeffs_.size() - 1, CycloElem::zero(a.ctx_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return CPoly(a.ctx_, std::move(out));
  }

  CPoly scale(const CycloElem& c) const {
    std::vector<CycloElem> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return CPoly(ctx_, std::move(out));
  }

  /// Euclidean division; divisor must be nonzero. Returns (quotient, remainder).
  std::pair<CPoly, CPoly> divmod(const CPoly& divisor) const {
    check_same(*this, divisor);
    if (divisor.is_zero()) throw std::domain_error("CPoly::divmod: division by the zero polynomial");
    std::vector<CycloElem> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size();
    if (rem.size() < dd) return {CPoly(ctx_), *this};
    std::vector<CycloElem> quot(rem.size() - dd + 1, CycloElem::zero(ctx_));
    const CycloElem lead_inv = divisor.coeffs_.back().inverse();
    for (std::size_t i = rem.size(); i-- >= dd;) {
      if (rem[i].is_zero()) continue;
      const CycloElem c = rem[i] * lead_inv;
      quot[i - (dd - 1)] = c;
      for (std::size_t j = 0; j < dd; ++j) rem[i - (dd - 1) + j] -= c * divisor.coeffs_[j];
    }
    rem.resize(dd - 1, CycloElem::zero(ctx_));
    return {CPoly(ctx_, std::move(quot)), CPoly(ctx_, std::move(rem))};
  }

  /// "c0 + (c1)*x + ...", coefficients rendered in z-coordinates.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string c = coeffs_[i].to_string();
      const bool atomic = c.find(' ') == std::string::npos;
      if (i == 0) {
        out += c;
        continue;
      }
      const std::string mono = i == 1 ? "x" : "x^" + std::to_string(i);
      if (c == "1") {
        out += mono;
      } else {
        out += (atomic ? c : "(" + c + ")") + "*" + mono;
      }
    }
    return out;
  }

 private:
  static void check_same(const CPoly& a, const CPoly& b) {
    if (a.ctx_ != b.ctx_ && a.ctx_->n() != b.ctx_->n()) throw std::invalid_argument("CPoly: context mismatch");
  }

  static CPoly combine(const CPoly& a, const CPoly& b, bool subtract) {
    check_same(a, b);
    std::vector<CycloElem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), CycloElem::zero(a.ctx_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      out[i] = subtract ? out[i] - b.coeffs_[i] : out[i] + b.coeffs_[i];
    }
    return CPoly(a.ctx_, std::move(out));
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  CycloContextPtr ctx_;
  std::vector<CycloElem> coeffs_;
};

/// prod (1 - x z^r) over r in 0..n-1 not in `exclude`.
inline CPoly prod_one_minus_x_zeta(const CycloContextPtr& ctx, const std::set<long>& exclude = {}) {
  CPoly acc = CPoly::constant(ctx, CycloElem::one(ctx));
  for (long r = 0; r < ctx->n(); ++r) {
    if (exclude.count(r) != 0) continue;
    acc = acc * CPoly(ctx, {CycloElem::one(ctx), -zeta_pow(ctx, r)});
  }
  return acc;
}

/// prod (x - root) over the given rational roots.
inline CPoly poly_from_roots(const CycloContextPtr& ctx, const std::vector<Rational>& roots) {
  CPoly acc = CPoly::constant(ctx, CycloElem::one(ctx));
  for (const auto& r : roots) acc = acc * CPoly::from_rationals(ctx, {-r, Rational(1)});
  return acc;
}

namespace detail {

inline CPoly geometric_sum(const CycloContextPtr& ctx) {  // sum_{j<n} x^j
  return CPoly::from_rationals(ctx, std::vector<Rational>(static_cast<std::size_t>(ctx->n()), Rational(1)));
}

inline CPoly x_minus_one(const CycloContextPtr& ctx) { return CPoly::from_rationals(ctx, {Rational(-1), Rational(1)}); }

}  // namespace detail

/// Denominator-cleared form of
///   sum_{0<r<n} z^{-rs} / (1 - x z^r) = (sum_{j<n} x^j - n x^s) / (x^n - 1),
/// checked as an exact polynomial identity.
inline bool check_root_sum_identity(const CycloContextPtr& ctx, long s) {
  const long n = ctx->n();
  if (s < 0 || s >= n) throw std::out_of_range("check_root_sum_identity: s must lie in 0..n-1");
  CPoly lhs(ctx);
  for (long r = 1; r < n; ++r) {
    lhs = lhs + prod_one_minus_x_zeta(ctx, {0, r}).scale(zeta_pow(ctx, -r * s));
  }
  lhs = detail::x_minus_one(ctx) * lhs;
  const CPoly rhs = detail::geometric_sum(ctx) -
                    CPoly::monomial(ctx, CycloElem::from_rational(ctx, Rational(n)), static_cast<std::size_t>(s));
  return lhs == rhs;
}

/// Both sides of
///   sum_{j != k} (1 + x z^{j-k}) / (1 - x z^{j-k}) z^{s(k-j)}
///     = 1 + 2 (sum_{j<n} x^j - n x^s) / (x^n - 1) - n [s == 0]
/// multiplied by D = (x - 1) sum_{j<n} x^j. Each D / (1 - x z^r) is an exact
/// division whose remainder must vanish.
inline bool check_cayley_sum_identity(const CycloContextPtr& ctx, long k, long s) {
  const long n = ctx->n();
  if (k < 1 || k > n) throw std::out_of_range("check_cayley_sum_identity: k must lie in 1..n");
  if (s < 0 || s >= n) throw std::out_of_range("check_cayley_sum_identity: s must lie in 0..n-1");
  const CPoly denom = detail::x_minus_one(ctx) * detail::geometric_sum(ctx);

  CPoly lhs(ctx);
  for (long j = 1; j <= n; ++j) {
    if (j == k) continue;
    const CycloElem zr = zeta_pow(ctx, j - k);
    const CPoly factor(ctx, {CycloElem::one(ctx), -zr});  // 1 - x z^{j-k}
    auto [cofactor, rem] = denom.divmod(factor);
    if (!rem.is_zero()) return false;
    const CPoly numer(ctx, {CycloElem::one(ctx), zr});  // 1 + x z^{j-k}
    lhs = lhs + (numer * cofactor).scale(zeta_pow(ctx, s * (k - j)));
  }

  const Rational constant_term = s == 0 ? Rational(1 - n) : Rational(1);
  const CPoly numer = detail::geometric_sum(ctx) -
                      CPoly::monomial(ctx, CycloElem::from_rational(ctx, Rational(n)), static_cast<std::size_t>(s));
  const CPoly x_n_minus_one = CPoly::monomial(ctx, CycloElem::one(ctx), static_cast<std::size_t>(n)) -
                              CPoly::constant(ctx, CycloElem::one(ctx));
  auto [ratio, ratio_rem] = denom.divmod(x_n_minus_one);
  if (!ratio_rem.is_zero()) return false;
  const CPoly rhs = denom.scale(CycloElem::from_rational(ctx, constant_term)) +
                    (numer * ratio).scale(CycloElem::from_rational(ctx, Rational(2)));
  return lhs == rhs;
}

}  // namespace cyclodet

#pragma once

// Exact arithmetic in the cyclotomic field Q(z) = Q[x]/Phi_n(x).
//
// An element is stored in the power basis 1, z, ..., z^(d-1), d = deg Phi_n,
// as integer numerators over one positive common denominator that is coprime
// to their content. That layout is canonical, so equality is structural.

#include <cyclodet/exact_numbers.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclodet {

/// Coefficients of Phi_n, lowest degree first. Computed by exact division
/// of x^n - 1 by Phi_d for every proper divisor d of n.
inline std::vector<Integer> cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  static std::mutex mu;
  static std::map<long, std::vector<Integer>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }

  std::vector<Integer> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<Integer> divisor = cyclotomic_polynomial(d);
    // Long division by a monic integer polynomial stays in Z[x].
    const std::size_t dd = divisor.size() - 1;
    std::vector<Integer> quot(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const Integer c = poly[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
    }
    for (std::size_t j = 0; j < dd; ++j) {
      if (poly[j] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
    }
    poly = std::move(quot);
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, poly);
  return poly;
}

inline long euler_totient(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

class CycloContext {
 public:
  explicit CycloContext(long n) : n_(n) {
    if (n < 2) throw std::invalid_argument("CycloContext: n must be >= 2");
    phi_ = cyclotomic_polynomial(n);
    degree_ = static_cast<int>(phi_.size()) - 1;
    for (int j = 0; j < degree_; ++j) {
      if (phi_[j] == 0) continue;
      if (!phi_[j].fits_slong_p()) throw std::domain_error("CycloContext: Phi_n coefficient too large");
      phi_terms_.emplace_back(j, phi_[j].get_si());
    }
  }

  long n() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<Integer>& phi() const { return phi_; }

  /// Reduces an integer coefficient vector of any length modulo Phi_n and
  /// truncates it to exactly degree() entries.
  void reduce(std::vector<Integer>& c) const {
    const auto d = static_cast<std::size_t>(degree_);
    const auto n = static_cast<std::size_t>(n_);
    // Phi_n divides x^n - 1, so folding exponents mod n is a valid first step.
    if (c.size() > n) {
      for (std::size_t i = n; i < c.size(); ++i) {
        if (c[i] != 0) c[i % n] += c[i];
      }
      c.resize(n);
    }
    for (std::size_t i = c.size(); i-- > d;) {
      if (c[i] == 0) continue;
      const std::size_t base = i - d;
      for (const auto& [j, p] : phi_terms_) {
        Integer& t = c[base + static_cast<std::size_t>(j)];
        if (p > 0) {
          mpz_submul_ui(t.get_mpz_t(), c[i].get_mpz_t(), static_cast<unsigned long>(p));
        } else {
          mpz_addmul_ui(t.get_mpz_t(), c[i].get_mpz_t(), static_cast<unsigned long>(-p));
        }
      }
      c[i] = 0;
    }
    c.resize(d, 0);
  }

 private:
  long n_;
  int degree_ = 0;
  std::vector<Integer> phi_;
  std::vector<std::pair<int, long>> phi_terms_;  // non-leading nonzero terms
};

using CycloContextPtr = std::shared_ptr<const CycloContext>;

/// Contexts are cached per n and never released.
inline CycloContextPtr context_new(long n) {
  if (n < 2) throw std::invalid_argument("context_new: n must be >= 2");
  static std::mutex mu;
  static std::map<long, CycloContextPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CycloContext>(n);
  return slot;
}

class CycloElem {
 public:
  /// Context-free placeholder; any arithmetic on it throws.
  CycloElem() = default;

  static CycloElem zero(const CycloContextPtr& ctx) {
    CycloElem e;
    e.ctx_ = require(ctx);
    e.num_.assign(static_cast<std::size_t>(ctx->degree()), 0);
    return e;
  }

  static CycloElem from_rational(const CycloContextPtr& ctx, const Rational& r) {
    CycloElem e = zero(ctx);
    e.num_[0] = r.numer();
    e.den_ = r.denom();
    return e;
  }

  static CycloElem one(const CycloContextPtr& ctx) { return from_rational(ctx, Rational(1)); }

  /// Element sum_i coeffs[i] z^i; any length is accepted and reduced.
  static CycloElem from_coeffs(const CycloContextPtr& ctx, const std::vector<Rational>& coeffs) {
    require(ctx);
    Integer den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denom().get_mpz_t());
    std::vector<Integer> num;
    num.reserve(coeffs.size());
    for (const auto& c : coeffs) num.push_back(c.numer() * (den / c.denom()));
    return from_integer_poly(ctx, std::move(num), std::move(den));
  }

  /// z^e with e taken mod n.
  static CycloElem zeta_pow(const CycloContextPtr& ctx, long e) {
    require(ctx);
    const long n = ctx->n();
    const long r = ((e % n) + n) % n;
    std::vector<Integer> num(static_cast<std::size_t>(r) + 1, 0);
    num[static_cast<std::size_t>(r)] = 1;
    return from_integer_poly(ctx, std::move(num), 1);
  }

  const CycloContextPtr& context() const { return ctx_; }
  long modulus() const { return ctx_ ? ctx_->n() : 0; }
  int degree() const { return ctx_ ? ctx_->degree() : 0; }

  Rational coeff(int i) const { return Rational(num_.at(static_cast<std::size_t>(i)), den_); }
  std::vector<Rational> coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) out.emplace_back(c, den_);
    return out;
  }

  bool is_zero() const {
    for (const auto& c : num_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// The rational value if every coordinate past the constant term vanishes.
  std::optional<Rational> as_rational() const {
    check();
    for (std::size_t i = 1; i < num_.size(); ++i) {
      if (num_[i] != 0) return std::nullopt;
    }
    return Rational(num_[0], den_);
  }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    same_context(a, b);
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  CycloElem operator-() const {
    check();
    CycloElem r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) { return add_sub(a, b, false); }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) { return add_sub(a, b, true); }

  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    same_context(a, b);
    const std::size_t d = a.num_.size();
    std::vector<Integer> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b.num_[j] == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
    return from_integer_poly(a.ctx_, std::move(prod), a.den_ * b.den_);
  }

  friend CycloElem operator*(const CycloElem& a, const Rational& r) {
    a.check();
    CycloElem out = a;
    for (auto& c : out.num_) c *= r.numer();
    out.den_ *= r.denom();
    out.normalize();
    return out;
  }
  friend CycloElem operator*(const Rational& r, const CycloElem& a) { return a * r; }

  CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
  CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

  /// Field inverse via the extended Euclidean algorithm against Phi_n.
  CycloElem inverse() const {
    check();
    if (is_zero()) throw std::domain_error("CycloElem::inverse: zero has no inverse");
    using QPoly = std::vector<mpq_class>;
    auto trim = [](QPoly& p) {
      while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    };
    QPoly r0(ctx_->phi().begin(), ctx_->phi().end());
    QPoly r1(num_.begin(), num_.end());
    trim(r1);
    QPoly s0;
    QPoly s1{mpq_class(1)};
    // Invariant: r_i == s_i * a (mod Phi_n), with a the numerator polynomial.
    while (r1.size() > 1) {
      QPoly q(r0.size() - r1.size() + 1);
      const mpq_class lead_inv = 1 / r1.back();
      for (std::size_t i = r0.size(); i-- >= r1.size();) {
        const mpq_class c = r0[i] * lead_inv;
        q[i - (r1.size() - 1)] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < r1.size(); ++j) r0[i - (r1.size() - 1) + j] -= c * r1[j];
      }
      trim(r0);
      QPoly s2 = s0;
      if (s2.size() < q.size() + s1.size() - 1) s2.resize(q.size() + s1.size() - 1);
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (sgn(q[i]) == 0) continue;
        for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
      }
      trim(s2);
      s0 = std::move(s1);
      s1 = std::move(s2);
      std::swap(r0, r1);
    }
    // r1 is a nonzero constant c, so a^-1 = s1 / c; the element is a/den.
    const mpq_class scale = mpq_class(den_) / r1[0];
    std::vector<Rational> coeffs;
    coeffs.reserve(s1.size());
    for (const auto& c : s1) coeffs.push_back(Rational::from_mpq(c * scale));
    return from_coeffs(ctx_, coeffs);
  }

  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }

  /// Image under z -> z^t; t must be coprime to n.
  CycloElem galois(long t) const {
    check();
    const long n = ctx_->n();
    if (std::gcd(t, n) != 1) throw std::invalid_argument("galois: exponent not coprime to n");
    const long tt = ((t % n) + n) % n;
    std::vector<Integer> acc(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      acc[static_cast<std::size_t>((static_cast<long>(i) * tt) % n)] += num_[i];
    }
    return from_integer_poly(ctx_, std::move(acc), den_);
  }

  /// Complex conjugation, z -> z^-1.
  CycloElem conjugate() const { return galois(ctx_ ? ctx_->n() - 1 : 1); }

  /// "c0 + c1*z + c2*z^2 ...", zero terms omitted.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      Rational c(num_[i], den_);
      const bool neg = c.sign() < 0;
      const Rational mag = neg ? -c : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
      if (i == 0) {
        out += mag.to_string();
      } else if (mag == Rational(1)) {
        out += mono;
      } else {
        out += mag.to_string() + "*" + mono;
      }
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const CycloElem& e) { return os << e.to_string(); }

 private:
  static const CycloContextPtr& require(const CycloContextPtr& ctx) {
    if (!ctx) throw std::invalid_argument("CycloElem: null context");
    return ctx;
  }

  void check() const {
    if (!ctx_) throw std::logic_error("CycloElem: operation on a context-free placeholder");
  }

  static void same_context(const CycloElem& a, const CycloElem& b) {
    a.check();
    b.check();
    if (a.ctx_ != b.ctx_ && a.ctx_->n() != b.ctx_->n()) {
      throw std::invalid_argument("CycloElem: context mismatch");
    }
  }

  static CycloElem from_integer_poly(const CycloContextPtr& ctx, std::vector<Integer> num, Integer den) {
    ctx->reduce(num);
    CycloElem e;
    e.ctx_ = ctx;
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    e.normalize();
    return e;
  }

  static CycloElem add_sub(const CycloElem& a, const CycloElem& b, bool subtract) {
    same_context(a, b);
    CycloElem r;
    r.ctx_ = a.ctx_;
    r.num_.resize(a.num_.size());
    if (a.den_ == b.den_) {
      for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (subtract) {
          r.num_[i] = a.num_[i] - b.num_[i];
        } else {
          r.num_[i] = a.num_[i] + b.num_[i];
        }
      }
      r.den_ = a.den_;
    } else {
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
      const Integer fa = b.den_ / g;
      const Integer fb = a.den_ / g;
      for (std::size_t i = 0; i < a.num_.size(); ++i) {
        r.num_[i] = a.num_[i] * fa;
        if (subtract) {
          mpz_submul(r.num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), fb.get_mpz_t());
        } else {
          mpz_addmul(r.num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), fb.get_mpz_t());
        }
      }
      r.den_ = a.den_ * fa;
    }
    r.normalize();
    return r;
  }

  void normalize() {
    if (sgn(den_) < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& c : num_) {
      if (c == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    if (is_zero()) {
      den_ = 1;
      return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }

  CycloContextPtr ctx_;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

inline CycloElem zeta_pow(const CycloContextPtr& ctx, long e) { return CycloElem::zeta_pow(ctx, e); }
inline CycloElem inverse(const CycloElem& a) { return a.inverse(); }
inline CycloElem galois(const CycloElem& a, long t) { return a.galois(t); }
inline CycloElem conjugate(const CycloElem& a) { return a.conjugate(); }
inline std::optional<Rational> as_rational(const CycloElem& a) { return a.as_rational(); }

}  // namespace cyclodet

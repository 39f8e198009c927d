#pragma once

#include <cyclodet/cyclodet.hpp>

#include <random>
#include <vector>

namespace cyclodet::testing {

inline Rational random_rational(std::mt19937& rng, int span = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline CycloElem random_elem(std::mt19937& rng, const CycloContextPtr& ctx, int span = 5) {
  std::vector<Rational> c;
  for (int i = 0; i < ctx->degree(); ++i) c.push_back(random_rational(rng, span));
  return CycloElem::from_coeffs(ctx, c);
}

inline CycloElem random_nonzero(std::mt19937& rng, const CycloContextPtr& ctx) {
  for (;;) {
    CycloElem e = random_elem(rng, ctx);
    if (!e.is_zero()) return e;
  }
}

inline CMatrix random_matrix(std::mt19937& rng, const CycloContextPtr& ctx, std::size_t dim, int span = 3) {
  return CMatrix::generate(ctx, dim, [&](std::size_t, std::size_t) { return random_elem(rng, ctx, span); });
}

inline CycloElem q(const CycloContextPtr& ctx, long p, long d = 1) { return CycloElem::from_rational(ctx, Rational(p, d)); }

}  // namespace cyclodet::testing

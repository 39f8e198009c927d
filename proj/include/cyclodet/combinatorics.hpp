#pragma once

#include <cyclodet/exact_linalg.hpp>
#include <cyclodet/permutation.hpp>

#include <string>

namespace cyclodet {

inline constexpr int kDerangementGuardrail = 10;

/// sum over derangements t of sign(t) * prod_j M[j, t(j)].
/// Dimensions above kDerangementGuardrail need `force`.
inline CycloElem signed_derangement_sum(const CMatrix& m, bool force = false) {
  m.require_square("signed_derangement_sum");
  const int dim = static_cast<int>(m.rows());
  if (dim > kDerangementGuardrail && !force) {
    throw GuardrailError("signed_derangement_sum: dimension " + std::to_string(dim) + " exceeds guardrail " +
                         std::to_string(kDerangementGuardrail) + " (D_" + std::to_string(dim) + " = " +
                         to_string(derangement_count(dim)) + " terms)");
  }
  const auto& ctx = m.context();
  CycloElem total = CycloElem::zero(ctx);
  DerangementStream stream(dim);
  while (auto tau = stream.next()) {
    CycloElem term = CycloElem::one(ctx);
    for (int j = 1; j <= dim && !term.is_zero(); ++j) {
      term *= m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>((*tau)(j) - 1));
    }
    if (term.is_zero()) continue;
    total = sign(*tau) > 0 ? total + term : total - term;
  }
  return total;
}

}  // namespace cyclodet

// Prints det[(1 + z^(j-k))/(1 - z^(j-k))] (zero diagonal) for odd n and
// compares it with the signed derangement sum of the same matrix.

#include <cyclodet/cyclodet.hpp>

#include <iostream>

int main() {
  using namespace cyclodet;
  for (long n = 3; n <= 9; n += 2) {
    const auto ctx = context_new(n);
    const CMatrix a = build(MatrixKind::A, ctx, static_cast<std::size_t>(n - 1));
    const auto [d0, d1] = det_affine(a);
    std::cout << "n=" << n << "  det=" << render(d0) << "  slope=" << render(d1)
              << "  derangement sum=" << render(signed_derangement_sum(a))
              << "  closed form=" << cayley_det_value(n) << "\n";
  }
}

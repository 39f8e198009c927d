#pragma once

// Permutations of 1..m, derangement enumeration, and the integer sequences
// that go with them.

#include <cyclodet/exact_numbers.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cyclodet {

/// A bijection on 1..m stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size() + 1, false);
    for (int v : image_) {
      if (v < 1 || v > static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("Permutation: image is not a bijection on 1..m");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  int size() const { return static_cast<int>(image_.size()); }
  /// Image of j, 1-based.
  int operator()(int j) const { return image_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& image() const { return image_; }

  bool is_derangement() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] == static_cast<int>(i) + 1) return false;
    }
    return true;
  }

  /// (p * q)(j) = p(q(j)).
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("Permutation: size mismatch in composition");
    std::vector<int> img(q.image_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = p(q.image_[i]);
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// (-1)^(m - number of cycles).
inline int sign(const Permutation& p) {
  const auto& img = p.image();
  std::vector<bool> visited(img.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (visited[i]) continue;
    ++cycles;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(img[j] - 1)) visited[j] = true;
  }
  return (p.size() - cycles) % 2 == 0 ? 1 : -1;
}

/// Fixed-point-free permutations of 1..m in lexicographic order of image
/// sequences. Backtracking keeps the cost proportional to the output.
class DerangementStream {
 public:
  explicit DerangementStream(int m) : m_(m), image_(static_cast<std::size_t>(std::max(m, 0)), 0),
                                       used_(static_cast<std::size_t>(std::max(m, 0)) + 1, false) {
    if (m < 0) throw std::invalid_argument("DerangementStream: m must be >= 0");
  }

  std::optional<Permutation> next() {
    if (done_) return std::nullopt;
    if (m_ == 0) {
      done_ = true;
      return Permutation{};
    }
    if (!started_) {
      started_ = true;
      if (!advance(0, 1)) {
        done_ = true;
        return std::nullopt;
      }
      return Permutation(image_);
    }
    // Walk back from the last slot looking for one that can take a larger value.
    for (int pos = m_ - 1; pos >= 0; --pos) {
      const int old = image_[static_cast<std::size_t>(pos)];
      used_[static_cast<std::size_t>(old)] = false;
      image_[static_cast<std::size_t>(pos)] = 0;
      if (advance(pos, old + 1)) return Permutation(image_);
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  // Fills slots pos..m-1 with the lexicographically smallest completion whose
  // slot `pos` value is at least `from`.
  bool advance(int pos, int from) {
    if (pos == m_) return true;
    for (int v = from; v <= m_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || v == pos + 1) continue;
      used_[static_cast<std::size_t>(v)] = true;
      image_[static_cast<std::size_t>(pos)] = v;
      if (advance(pos + 1, 1)) return true;
      used_[static_cast<std::size_t>(v)] = false;
      image_[static_cast<std::size_t>(pos)] = 0;
    }
    return false;
  }

  int m_;
  std::vector<int> image_;
  std::vector<bool> used_;
  bool started_ = false;
  bool done_ = false;
};

inline DerangementStream derangements(int m) { return DerangementStream(m); }

inline Integer factorial(long k) {
  if (k < 0) throw std::invalid_argument("factorial: k must be >= 0");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

/// k (k-2) (k-4) ... down to 1 or 2, with 0!! = (-1)!! = 1.
inline Integer double_factorial(long k) {
  if (k < -1) throw std::invalid_argument("double_factorial: k must be >= -1");
  Integer r = 1;
  for (long i = k; i > 1; i -= 2) r *= i;
  return r;
}

/// D_m = m! sum_{k=0}^m (-1)^k / k!, evaluated as sum (-1)^k m!/k! in Z.
inline Integer derangement_count(long m) {
  if (m < 0) throw std::invalid_argument("derangement_count: m must be >= 0");
  Integer total = 0;
  Integer term = 1;  // m!/k! for k = m, m-1, ..., 0
  for (long k = m; k >= 0; --k) {
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    term *= (k == 0 ? 1 : k);
  }
  return total;
}

}  // namespace cyclodet

#pragma once

#include <cstddef>
#include <vector>

namespace colorfact::detail {

// Divisors of an integer represented by exponent vectors, indexed in mixed
// radix. Index arithmetic is linear in the exponents, so for d | m the
// quotient m/d has index idx(m) - idx(d), and every divisor of m has a
// smaller index than m.
class ExponentLattice {
 public:
  explicit ExponentLattice(std::vector<int> top) : top_(std::move(top)) {
    stride_.resize(top_.size());
    std::size_t s = 1;
    for (std::size_t j = 0; j < top_.size(); ++j) {
      stride_[j] = s;
      s *= static_cast<std::size_t>(top_[j]) + 1;
    }
    size_ = s;
    decoded_.resize(size_ * top_.size());
    omega_.resize(size_);
    for (std::size_t idx = 0; idx < size_; ++idx) {
      std::size_t rest = idx;
      int total = 0;
      for (std::size_t j = 0; j < top_.size(); ++j) {
        const int e = static_cast<int>(rest % (static_cast<std::size_t>(top_[j]) + 1));
        rest /= static_cast<std::size_t>(top_[j]) + 1;
        decoded_[idx * top_.size() + j] = e;
        total += e;
      }
      omega_[idx] = total;
    }
  }

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] std::size_t top() const { return size_ - 1; }
  [[nodiscard]] std::size_t rank() const { return top_.size(); }
  [[nodiscard]] int exponent(std::size_t idx, std::size_t j) const { return decoded_[idx * top_.size() + j]; }
  [[nodiscard]] int big_omega(std::size_t idx) const { return omega_[idx]; }

  // Calls visit(d) for every divisor index d of m, including 0 and m.
  template <class Visit>
  void for_each_divisor(std::size_t m, Visit&& visit) const {
    const std::size_t r = top_.size();
    std::vector<int> digits(r, 0);
    std::size_t idx = 0;
    while (true) {
      visit(idx);
      std::size_t j = 0;
      for (; j < r; ++j) {
        if (digits[j] < exponent(m, j)) {
          ++digits[j];
          idx += stride_[j];
          break;
        }
        idx -= static_cast<std::size_t>(digits[j]) * stride_[j];
        digits[j] = 0;
      }
      if (j == r) return;
    }
  }

  // True if i * exps(d) <= exps(m) componentwise.
  [[nodiscard]] bool power_divides(std::size_t d, int i, std::size_t m) const {
    for (std::size_t j = 0; j < top_.size(); ++j) {
      if (i * exponent(d, j) > exponent(m, j)) return false;
    }
    return true;
  }

  // Index of the prime with the largest exponent in m (first on ties).
  [[nodiscard]] std::size_t pivot(std::size_t m) const {
    std::size_t best = 0;
    for (std::size_t j = 1; j < top_.size(); ++j) {
      if (exponent(m, j) > exponent(m, best)) best = j;
    }
    return best;
  }

 private:
  std::vector<int> top_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
  std::vector<int> decoded_;
  std::vector<int> omega_;
};

}  // namespace colorfact::detail

#ifndef POLYSOL_MULTI_INDEX_HPP
#define POLYSOL_MULTI_INDEX_HPP

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace polysol {

// Exponent tuple of a monomial. Keys of the sparse polynomial map.
// Ordering is graded lexicographic: total order first, then lexicographic
// in the exponents, so map iteration runs low-degree-first.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int v : e_) {
      if (v < 0) throw std::invalid_argument("multi-index exponent must be non-negative");
    }
  }

  MultiIndex(std::initializer_list<int> exponents)
      : MultiIndex(std::vector<int>(exponents)) {}

  static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(static_cast<size_t>(dim), 0)); }

  // e_i -> e_i + 1
  static MultiIndex unit(int dim, int axis) {
    std::vector<int> e(static_cast<size_t>(dim), 0);
    e.at(static_cast<size_t>(axis)) = 1;
    return MultiIndex(std::move(e));
  }

  int dim() const { return static_cast<int>(e_.size()); }

  int order() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }

  const std::vector<int>& exponents() const { return e_; }

  MultiIndex with(int axis, int value) const {
    if (value < 0) throw std::invalid_argument("multi-index exponent must be non-negative");
    MultiIndex r = *this;
    r.e_[static_cast<size_t>(axis)] = value;
    return r;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("multi-index dimension mismatch");
    MultiIndex r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

  // graded-lex
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    if (a.e_.size() != b.e_.size()) return a.e_.size() < b.e_.size();
    const int oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return a.e_ < b.e_;
  }

 private:
  std::vector<int> e_;
};

}  // namespace polysol

#endif

#ifndef ITLOG_MULTIINDEX_HPP
#define ITLOG_MULTIINDEX_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace itlog {

// Element of N* = union of N^{1+r}: the exponent pattern of a differential
// monomial Y^{i_0} (Y')^{i_1} ... (Y^{(r)})^{i_r}. Canonical form strips
// trailing zeros, so padding with zeros does not change identity or order.
class MultiIndex {
 public:
  MultiIndex() = default;

  MultiIndex(std::initializer_list<int> e) : e_(e) { normalize(); }

  explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) { normalize(); }

  static MultiIndex unit(int k) {
    std::vector<int> e(static_cast<std::size_t>(k) + 1, 0);
    e.back() = 1;
    return MultiIndex(std::move(e));
  }

  int entry(int k) const {
    return (k >= 0 && k < static_cast<int>(e_.size())) ? e_[static_cast<std::size_t>(k)] : 0;
  }

  // Highest derivative index with a non-zero exponent; -1 for the zero index.
  int top() const { return static_cast<int>(e_.size()) - 1; }

  bool is_zero() const { return e_.empty(); }

  // |i| = i_0 + ... + i_r
  int abs() const {
    int s = 0;
    for (int x : e_) s += x;
    return s;
  }

  // ||i|| = i_1 + 2 i_2 + ... + r i_r
  int wt() const {
    int s = 0;
    for (int k = 0; k < static_cast<int>(e_.size()); ++k) s += k * e_[static_cast<std::size_t>(k)];
    return s;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    std::vector<int> e(std::max(e_.size(), o.e_.size()), 0);
    for (int k = 0; k < static_cast<int>(e.size()); ++k)
      e[static_cast<std::size_t>(k)] = entry(k) + o.entry(k);
    return MultiIndex(std::move(e));
  }

  bool operator==(const MultiIndex& o) const { return e_ == o.e_; }

  const std::vector<int>& entries() const { return e_; }

  std::string to_string() const;

 private:
  void normalize() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }

  std::vector<int> e_;
};

// Anti-lexicographic comparison: i < j iff they differ and at the highest
// differing position i is smaller. A well-order on N*.
inline std::strong_ordering compare_antilex(const MultiIndex& i, const MultiIndex& j) {
  int top = std::max(i.top(), j.top());
  for (int k = top; k >= 0; --k) {
    if (i.entry(k) != j.entry(k))
      return i.entry(k) < j.entry(k) ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

struct AntilexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return compare_antilex(a, b) == std::strong_ordering::less;
  }
};

inline std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(e_[k]);
  }
  if (e_.empty()) s += "0";
  s += ")";
  return s;
}

}  // namespace itlog

#endif

#ifndef QALLOC_QUANTILE_HPP
#define QALLOC_QUANTILE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qalloc {

/// An exact quantile p/q in [0, 1], always held in lowest terms (0 is 0/1).
class Quantile {
 public:
  constexpr Quantile() = default;

  /// Reduces p/q. Throws InvalidInput when q == 0 or p > q.
  Quantile(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p/q" (or a bare "0" / "1"). Unlike the constructor, the text must
  /// already be in lowest terms: "3/3" and "2/4" are rejected.
  static Quantile parse(std::string_view text);

  static Quantile zero() { return Quantile(0, 1); }
  static Quantile one() { return Quantile(1, 1); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  std::string to_string() const;

  friend bool operator==(const Quantile&, const Quantile&) = default;
  friend std::strong_ordering operator<=>(const Quantile& a, const Quantile& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// 1-based position of the quantile item in a bundle of `size` items sorted by
/// ascending value: ceil(tau * size) for tau > 0, and 1 for tau == 0.
/// Integer arithmetic only. Requires size >= 1.
std::int64_t quantile_index(const Quantile& tau, std::int64_t size);

}  // namespace qalloc

#endif  // QALLOC_QUANTILE_HPP

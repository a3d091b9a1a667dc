#include "qalloc/quantile.hpp"

#include <charconv>
#include <numeric>

#include "qalloc/errors.hpp"

namespace qalloc {

Quantile::Quantile(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0 || numerator > denominator) {
    throw InvalidInput("quantile " + std::to_string(numerator) + "/" +
                       std::to_string(denominator) + " is not in [0,1]");
  }
  if (numerator == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw InvalidInput("malformed quantile \"" + std::string(whole) + "\"");
  }
  return out;
}

}  // namespace

Quantile Quantile::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::int64_t p = 0;
  std::int64_t q = 1;
  if (slash == std::string_view::npos) {
    p = parse_int(text, text);
  } else {
    p = parse_int(text.substr(0, slash), text);
    q = parse_int(text.substr(slash + 1), text);
  }
  Quantile tau(p, q);
  if (tau.num_ != p || tau.den_ != q) {
    throw InvalidInput("quantile \"" + std::string(text) + "\" is not in lowest terms (use " +
                       tau.to_string() + ")");
  }
  return tau;
}

std::string Quantile::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t quantile_index(const Quantile& tau, std::int64_t size) {
  if (size < 1) throw InvalidInput("quantile_index needs a non-empty bundle");
  if (tau.is_zero()) return 1;
  return (tau.numerator() * size + tau.denominator() - 1) / tau.denominator();
}

}  // namespace qalloc

#include "iwahori/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace iwahori {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

Laurent::Laurent(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Laurent Laurent::monomial(std::int64_t coefficient, int exponent) {
  Laurent out;
  if (coefficient != 0) {
    out.low_ = exponent;
    out.coeffs_.push_back(coefficient);
  }
  return out;
}

Laurent Laurent::from_terms(const std::vector<std::pair<int, std::int64_t>>& terms) {
  Laurent out;
  for (const auto& [e, c] : terms) out += monomial(c, e);
  return out;
}

std::int64_t Laurent::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, std::int64_t>> Laurent::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

void Laurent::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(max_exponent(), other.max_exponent());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), 0);
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& slot = coeffs_[static_cast<std::size_t>(other.low_ - lo) + i];
    slot = checked_add(slot, other.coeffs_[i]);
  }
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) { return *this += -other; }

Laurent Laurent::operator+(const Laurent& other) const {
  Laurent out(*this);
  out += other;
  return out;
}

Laurent Laurent::operator-(const Laurent& other) const {
  Laurent out(*this);
  out -= other;
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out(*this);
  for (auto& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

Laurent Laurent::operator*(const Laurent& other) const {
  if (is_zero() || other.is_zero()) return {};
  Laurent out;
  out.low_ = low_ + other.low_;
  out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = checked_add(out.coeffs_[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  out.normalize();
  return out;
}

Laurent Laurent::shifted(int exponent) const {
  Laurent out(*this);
  if (!out.is_zero()) out.low_ += exponent;
  return out;
}

std::int64_t Laurent::at_one() const {
  std::int64_t total = 0;
  for (std::int64_t c : coeffs_) total = checked_add(total, c);
  return total;
}

Laurent Laurent::bar() const {
  Laurent out;
  if (is_zero()) return out;
  out.low_ = -max_exponent();
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return out;
}

std::int64_t Laurent::evaluate_q(std::int64_t q) const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms()) {
    if (e % 2 != 0 || e < 0) throw std::domain_error("evaluate_q needs a polynomial in q = v^2, got " + str());
    std::int64_t power = 1;
    for (int k = 0; k < e / 2; ++k) power = checked_mul(power, q);
    total = checked_add(total, checked_mul(c, power));
  }
  return total;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace iwahori

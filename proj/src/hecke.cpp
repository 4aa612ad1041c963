#include "iwahori/hecke.hpp"

#include <algorithm>

#include "iwahori/errors.hpp"
#include "iwahori/parallel.hpp"

namespace iwahori {

// ------------------------------------------------------------- HeckeElement

void HeckeElement::add(const AffineWeylElement& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Laurent HeckeElement::coefficient(const AffineWeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent() : it->second;
}

std::vector<std::pair<AffineWeylElement, Laurent>> HeckeElement::sorted_terms() const {
  std::vector<std::pair<AffineWeylElement, Laurent>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

HeckeElement HeckeElement::operator+(const HeckeElement& other) const {
  HeckeElement out(*this);
  out += other;
  return out;
}

HeckeElement HeckeElement::operator-(const HeckeElement& other) const {
  HeckeElement out(*this);
  out -= other;
  return out;
}

HeckeElement HeckeElement::operator-() const { return scaled(Laurent(-1)); }

HeckeElement HeckeElement::scaled(const Laurent& c) const {
  HeckeElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, coeff] : terms_) out.add(w, coeff * c);
  return out;
}

// ------------------------------------------------------------- HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group) : group_(std::move(group)) {
  if (!group_) throw InvalidInput("null affine Weyl group");
}

HeckeAlgebra::HeckeAlgebra(const RootDatum& rd) : group_(std::make_shared<const AffineWeylGroup>(rd)) {}

HeckeElement HeckeAlgebra::unit() const { return t_basis(group_->identity()); }

HeckeElement HeckeAlgebra::t_basis(const AffineWeylElement& w) const {
  if (w.tag() != group_->tag()) throw InvalidInput("basis element belongs to a different root datum");
  HeckeElement out;
  out.add(w, Laurent(1));
  return out;
}

void HeckeAlgebra::right_multiply_simple_into(const AffineWeylElement& x, const Laurent& c, int s,
                                              HeckeElement& out) const {
  const AffineWeylGroup& g = *group_;
  const AffineWeylElement xs = g.multiply(x, g.simple_reflections()[static_cast<std::size_t>(s)]);
  if (g.length(xs) > g.length(x)) {
    out.add(xs, c);
  } else {
    out.add(xs, c.shifted(2));
    out.add(x, c.shifted(2) - c);
  }
}

HeckeElement HeckeAlgebra::right_multiply_simple(const HeckeElement& a, int s) const {
  HeckeElement out;
  for (const auto& [x, c] : a.terms()) right_multiply_simple_into(x, c, s, out);
  return out;
}

HeckeElement HeckeAlgebra::left_multiply_simple(int s, const HeckeElement& a) const {
  const AffineWeylGroup& g = *group_;
  const AffineWeylElement& refl = g.simple_reflections()[static_cast<std::size_t>(s)];
  HeckeElement out;
  for (const auto& [x, c] : a.terms()) {
    const AffineWeylElement sx = g.multiply(refl, x);
    if (g.length(sx) > g.length(x)) {
      out.add(sx, c);
    } else {
      out.add(sx, c.shifted(2));
      out.add(x, c.shifted(2) - c);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::right_multiply_omega(const HeckeElement& a, int power) const {
  if (power == 0) return a;
  const AffineWeylElement w = group_->omega_power(power);
  HeckeElement out;
  for (const auto& [x, c] : a.terms()) out.add(group_->multiply(x, w), c);
  return out;
}

HeckeElement HeckeAlgebra::left_multiply_omega(int power, const HeckeElement& a) const {
  if (power == 0) return a;
  const AffineWeylElement w = group_->omega_power(power);
  HeckeElement out;
  for (const auto& [x, c] : a.terms()) out.add(group_->multiply(w, x), c);
  return out;
}

namespace {

// a * T_y, expanding y letter by letter from the left.
HeckeElement times_basis_right(const HeckeAlgebra& alg, const HeckeElement& a, const ReducedWord& word) {
  HeckeElement current = a;
  for (int s : word.letters) current = alg.right_multiply_simple(current, s);
  return alg.right_multiply_omega(current, word.omega_power);
}

// T_x * b, expanding x letter by letter from the right.
HeckeElement times_basis_left(const HeckeAlgebra& alg, const ReducedWord& word, const HeckeElement& b) {
  HeckeElement current = alg.left_multiply_omega(word.omega_power, b);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    current = alg.left_multiply_simple(*it, current);
  return current;
}

struct Expansion {
  bool expand_right;  // true: sum over terms of b of a*T_y
  std::vector<std::pair<AffineWeylElement, Laurent>> terms;
};

Expansion plan(const HeckeAlgebra& alg, const HeckeElement& a, const HeckeElement& b) {
  std::size_t cost_right = 0;
  for (const auto& [y, c] : b.terms()) cost_right += static_cast<std::size_t>(alg.group().length(y)) + 1;
  cost_right *= std::max<std::size_t>(a.size(), 1);
  std::size_t cost_left = 0;
  for (const auto& [x, c] : a.terms()) cost_left += static_cast<std::size_t>(alg.group().length(x)) + 1;
  cost_left *= std::max<std::size_t>(b.size(), 1);
  Expansion e;
  e.expand_right = cost_right <= cost_left;
  e.terms = e.expand_right ? b.sorted_terms() : a.sorted_terms();
  return e;
}

}  // namespace

HeckeElement HeckeAlgebra::multiply_parallel(const HeckeElement& a, const HeckeElement& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const Expansion e = plan(*this, a, b);
  const auto count = static_cast<std::ptrdiff_t>(e.terms.size());
  HeckeElement result;
  IWAHORI_OMP_PARALLEL
  {
    HeckeElement local;
    IWAHORI_OMP_FOR_DYNAMIC
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto& [w, c] = e.terms[static_cast<std::size_t>(i)];
      const ReducedWord word = group_->reduced_word(w);
      HeckeElement piece = e.expand_right ? times_basis_right(*this, a, word) : times_basis_left(*this, word, b);
      local += piece.scaled(c);
    }
    IWAHORI_OMP_CRITICAL
    result += local;
  }
  return result;
}

HeckeElement HeckeAlgebra::multiply_serial(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement result;
  for (const auto& [x, cx] : a.sorted_terms()) {
    for (const auto& [y, cy] : b.sorted_terms()) {
      HeckeElement piece = times_basis_right(*this, t_basis(x), group_->reduced_word(y));
      result += piece.scaled(cx * cy);
    }
  }
  return result;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  constexpr std::size_t kParallelThreshold = 8;
  if (parallel::max_threads() > 1 && std::min(a.size(), b.size()) >= kParallelThreshold) {
    return multiply_parallel(a, b);
  }
  if (a.is_zero() || b.is_zero()) return {};
  const Expansion e = plan(*this, a, b);
  HeckeElement result;
  for (const auto& [w, c] : e.terms) {
    const ReducedWord word = group_->reduced_word(w);
    HeckeElement piece = e.expand_right ? times_basis_right(*this, a, word) : times_basis_left(*this, word, b);
    result += piece.scaled(c);
  }
  return result;
}

HeckeElement HeckeAlgebra::invert_simple(int s) const {
  if (s < 0 || s >= group_->num_simple()) throw InvalidInput("not a simple reflection index");
  HeckeElement out = t_basis(group_->simple_reflections()[static_cast<std::size_t>(s)]).scaled(Laurent::v_power(-2));
  out.add(group_->identity(), Laurent::v_power(-2) - Laurent(1));
  return out;
}

HeckeElement HeckeAlgebra::invert_t(const AffineWeylElement& w) const {
  const ReducedWord word = group_->reduced_word(w);
  // T_w^-1 = T_{omega^-k} T_{s_m}^-1 ... T_{s_1}^-1
  HeckeElement current = t_basis(group_->omega_power(-word.omega_power));
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    HeckeElement with_s = right_multiply_simple(current, *it).scaled(Laurent::v_power(-2));
    with_s += current.scaled(Laurent::v_power(-2) - Laurent(1));
    current = std::move(with_s);
  }
  return current;
}

bool HeckeAlgebra::is_central(const HeckeElement& a) const {
  for (int s = 0; s < group_->num_simple(); ++s) {
    if (left_multiply_simple(s, a) != right_multiply_simple(a, s)) return false;
  }
  return left_multiply_omega(1, a) == right_multiply_omega(a, 1);
}

GroupAlgebraElement HeckeAlgebra::specialize_at_one(const HeckeElement& a) const {
  GroupAlgebraElement out;
  for (const auto& [w, c] : a.terms()) {
    const std::int64_t value = c.at_one();
    if (value != 0) out[w] = value;
  }
  return out;
}

GroupAlgebraElement HeckeAlgebra::group_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const {
  GroupAlgebraElement out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      auto& slot = out[group_->multiply(x, y)];
      slot += cx * cy;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace iwahori

#include "iwahori/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <set>

#include "iwahori/errors.hpp"

namespace iwahori {

namespace {

constexpr std::size_t kMemoCapacity = std::size_t{1} << 20;

std::uint8_t tag_for(const RootDatum& rd) {
  return static_cast<std::uint8_t>((rd.kind() == GroupKind::GSp ? 0x80 : 0x00) | rd.rank());
}

}  // namespace

AffineWeylElement::AffineWeylElement(const Coweight& translation, const Permutation& finite, std::uint8_t tag)
    : finite_(finite), tag_(tag) {
  for (int i = 0; i < translation.size(); ++i) {
    const int v = translation[i];
    if (v < std::numeric_limits<std::int16_t>::min() || v > std::numeric_limits<std::int16_t>::max()) {
      throw InvalidInput("translation entry out of range");
    }
    translation_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(v);
  }
}

Coweight AffineWeylElement::translation(int n) const {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = translation_[static_cast<std::size_t>(i)];
  return Coweight(std::move(v));
}

std::size_t AffineWeylElement::hash() const noexcept {
  std::size_t h = tag_;
  for (std::size_t i = 0; i < translation_.size(); ++i) {
    h = h * 1000003u ^ static_cast<std::uint16_t>(translation_[i]);
    h = h * 1000003u ^ static_cast<std::size_t>(finite_(static_cast<int>(i)));
  }
  return h;
}

// ----------------------------------------------------------- AffineWeylGroup

AffineWeylGroup::AffineWeylGroup(RootDatum rd) : rd_(std::move(rd)), tag_(tag_for(rd_)) {
  const int n = rd_.ambient();
  if (n >= 2) {
    const RootPair theta = rd_.highest_root();
    const auto roots = rd_.positive_roots();
    const auto it = std::find(roots.begin(), roots.end(), theta);
    const Coweight theta_vee = rd_.positive_coroots()[static_cast<std::size_t>(it - roots.begin())];
    Permutation s_theta = Permutation::transposition(theta.i, theta.j);
    simple_.push_back(make(theta_vee, s_theta));
    for (const Permutation& s : rd_.weyl_generators()) simple_.push_back(finite(s));
  }

  // Omega generator: the unique length-zero element of degree 1. It has the
  // form t^lambda w with lambda in the orbit of the smallest minuscule
  // coweight of degree 1.
  std::vector<int> half(static_cast<std::size_t>(rd_.rank()), rd_.kind() == GroupKind::GSp ? 1 : 0);
  if (rd_.kind() == GroupKind::GL) half[0] = 1;
  const Coweight fundamental = rd_.complete(half, 1);
  bool found = false;
  for (const Coweight& lambda : weyl_orbit(fundamental, rd_)) {
    for (const Permutation& w : rd_.weyl_group()) {
      AffineWeylElement x = make(lambda, w);
      if (length(x) == 0) {
        omega_ = x;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) throw VerificationFailure("no length-zero element of degree 1 found");
  omega_inverse_ = invert(omega_);
}

AffineWeylElement AffineWeylGroup::identity() const { return make(rd_.zero(), Permutation::identity()); }

AffineWeylElement AffineWeylGroup::translation(const Coweight& lambda) const {
  return make(lambda, Permutation::identity());
}

AffineWeylElement AffineWeylGroup::finite(const Permutation& w) const { return make(rd_.zero(), w); }

AffineWeylElement AffineWeylGroup::make(const Coweight& lambda, const Permutation& w) const {
  rd_.validate(lambda);
  return AffineWeylElement(lambda, w, tag_);
}

void AffineWeylGroup::check(const AffineWeylElement& x) const {
  if (x.tag() != tag_) throw InvalidInput("affine Weyl element belongs to a different root datum");
}

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& x, const AffineWeylElement& y) const {
  check(x);
  check(y);
  const int n = rd_.ambient();
  AffineWeylElement out;
  out.tag_ = tag_;
  out.finite_ = x.finite_ * y.finite_;
  for (int i = 0; i < n; ++i) {
    const auto src = static_cast<std::size_t>(i);
    const auto dst = static_cast<std::size_t>(x.finite_(i));
    out.translation_[dst] = static_cast<std::int16_t>(out.translation_[dst] + y.translation_[src]);
  }
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.translation_[k] = static_cast<std::int16_t>(out.translation_[k] + x.translation_[k]);
  }
  return out;
}

AffineWeylElement AffineWeylGroup::invert(const AffineWeylElement& x) const {
  check(x);
  const int n = rd_.ambient();
  AffineWeylElement out;
  out.tag_ = tag_;
  out.finite_ = x.finite_.inverse();
  // (t^l w)^-1 = t^{-w^-1 l} w^-1
  for (int i = 0; i < n; ++i) {
    out.translation_[static_cast<std::size_t>(out.finite_(i))] =
        static_cast<std::int16_t>(-x.translation_[static_cast<std::size_t>(i)]);
  }
  return out;
}

int AffineWeylGroup::length(const AffineWeylElement& x) const {
  check(x);
  const Permutation inv = x.finite_.inverse();
  int len = 0;
  for (RootPair a : rd_.positive_roots()) {
    const int p = x.translation_entry(a.i) - x.translation_entry(a.j);
    len += inv(a.i) < inv(a.j) ? std::abs(p) : std::abs(p - 1);
  }
  return len;
}

int AffineWeylGroup::degree(const AffineWeylElement& x) const {
  check(x);
  if (rd_.kind() == GroupKind::GSp) return x.translation_entry(0) + x.translation_entry(rd_.ambient() - 1);
  int total = 0;
  for (int i = 0; i < rd_.ambient(); ++i) total += x.translation_entry(i);
  return total;
}

AffineWeylElement AffineWeylGroup::omega_power(int k) const {
  AffineWeylElement out = identity();
  const AffineWeylElement& step = k >= 0 ? omega_ : omega_inverse_;
  for (int i = 0; i < std::abs(k); ++i) out = multiply(out, step);
  return out;
}

bool AffineWeylGroup::is_left_descent(int s, const AffineWeylElement& x) const {
  return length(multiply(simple_[static_cast<std::size_t>(s)], x)) < length(x);
}

bool AffineWeylGroup::is_right_descent(const AffineWeylElement& x, int s) const {
  return length(multiply(x, simple_[static_cast<std::size_t>(s)])) < length(x);
}

ReducedWord AffineWeylGroup::compute_reduced_word(const AffineWeylElement& x) const {
  ReducedWord word;
  AffineWeylElement current = x;
  int len = length(current);
  while (len > 0) {
    bool stepped = false;
    for (int s = 0; s < num_simple(); ++s) {
      AffineWeylElement next = multiply(simple_[static_cast<std::size_t>(s)], current);
      const int next_len = length(next);
      if (next_len < len) {
        word.letters.push_back(s);
        current = next;
        len = next_len;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw VerificationFailure("element of positive length without a left descent");
  }
  word.omega_power = degree(current);
  if (current != omega_power(word.omega_power)) {
    throw VerificationFailure("length-zero remainder is not a power of omega");
  }
  return word;
}

ReducedWord AffineWeylGroup::reduced_word(const AffineWeylElement& x) const {
  check(x);
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
  }
  ReducedWord word = compute_reduced_word(x);
  std::unique_lock lock(memo_mutex_);
  if (memo_.size() >= kMemoCapacity) memo_.clear();
  memo_.emplace(x, word);
  return word;
}

AffineWeylElement AffineWeylGroup::from_word(const ReducedWord& word) const {
  AffineWeylElement out = identity();
  for (int s : word.letters) {
    if (s < 0 || s >= num_simple()) throw InvalidInput("simple reflection index out of range");
    out = multiply(out, simple_[static_cast<std::size_t>(s)]);
  }
  return multiply(out, omega_power(word.omega_power));
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const {
  if (degree(x) != degree(y)) return false;
  AffineWeylElement a = x;
  AffineWeylElement b = y;
  while (true) {
    const int la = length(a);
    const int lb = length(b);
    if (la > lb) return false;
    if (lb == 0) return a == b;
    int s = 0;
    while (!is_left_descent(s, b)) ++s;
    const AffineWeylElement& refl = simple_[static_cast<std::size_t>(s)];
    const AffineWeylElement sa = multiply(refl, a);
    if (length(sa) < la) a = sa;
    b = multiply(refl, b);
  }
}

std::vector<AffineWeylElement> AffineWeylGroup::bruhat_interval_below(const AffineWeylElement& y) const {
  check(y);
  if (length(y) == 0) return {y};
  int s = 0;
  while (!is_left_descent(s, y)) ++s;
  const AffineWeylElement& refl = simple_[static_cast<std::size_t>(s)];
  std::vector<AffineWeylElement> below = bruhat_interval_below(multiply(refl, y));
  std::set<AffineWeylElement> out(below.begin(), below.end());
  for (const AffineWeylElement& z : below) out.insert(multiply(refl, z));
  return {out.begin(), out.end()};
}

std::vector<AffineWeylElement> AffineWeylGroup::admissible_set(const Coweight& mu) const {
  if (!is_dominant(mu, rd_)) throw InvalidInput("admissible set requires a dominant coweight, got " + mu.str());
  std::set<AffineWeylElement> out;
  for (const Coweight& conj : weyl_orbit(mu, rd_)) {
    for (const AffineWeylElement& x : bruhat_interval_below(translation(conj))) out.insert(x);
  }
  return {out.begin(), out.end()};
}

std::vector<AffineWeylElement> AffineWeylGroup::double_coset(const Coweight& mu) const {
  if (!is_dominant(mu, rd_)) throw InvalidInput("double coset requires a dominant coweight, got " + mu.str());
  std::set<AffineWeylElement> out;
  for (const Permutation& u : rd_.weyl_group()) {
    const Coweight shifted = rd_.act(u, mu);
    for (const Permutation& v : rd_.weyl_group()) out.insert(make(shifted, u * v));
  }
  return {out.begin(), out.end()};
}

std::vector<std::pair<AffineWeylElement, ReducedWord>> AffineWeylGroup::export_memo() const {
  std::shared_lock lock(memo_mutex_);
  std::vector<std::pair<AffineWeylElement, ReducedWord>> out(memo_.begin(), memo_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t AffineWeylGroup::import_memo(
    const std::vector<std::pair<AffineWeylElement, ReducedWord>>& entries) const {
  std::size_t accepted = 0;
  for (const auto& [x, word] : entries) {
    if (x.tag() != tag_) continue;
    try {
      if (static_cast<int>(word.letters.size()) != length(x)) continue;
      if (from_word(word) != x) continue;
      if (word != compute_reduced_word(x)) continue;
    } catch (const std::exception&) {
      continue;
    }
    std::unique_lock lock(memo_mutex_);
    if (memo_.size() >= kMemoCapacity) break;
    memo_.emplace(x, word);
    ++accepted;
  }
  return accepted;
}

}  // namespace iwahori

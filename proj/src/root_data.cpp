#include "iwahori/root_data.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "iwahori/errors.hpp"

namespace iwahori {

std::string to_string(GroupKind kind) { return kind == GroupKind::GL ? "GL" : "GSp"; }

GroupKind parse_group_kind(const std::string& name) {
  if (name == "GL" || name == "gl") return GroupKind::GL;
  if (name == "GSp" || name == "GSP" || name == "gsp") return GroupKind::GSp;
  throw InvalidInput("unknown group '" + name + "' (expected GL or GSp)");
}

// ---------------------------------------------------------------- Coweight

Coweight Coweight::operator+(const Coweight& other) const {
  if (size() != other.size()) throw InvalidInput("coweight length mismatch");
  Coweight out(*this);
  for (int i = 0; i < size(); ++i) out[i] += other[i];
  return out;
}

Coweight Coweight::operator-(const Coweight& other) const {
  if (size() != other.size()) throw InvalidInput("coweight length mismatch");
  Coweight out(*this);
  for (int i = 0; i < size(); ++i) out[i] -= other[i];
  return out;
}

Coweight Coweight::operator-() const { return scaled(-1); }

Coweight Coweight::scaled(int factor) const {
  Coweight out(*this);
  for (int i = 0; i < size(); ++i) out[i] *= factor;
  return out;
}

bool Coweight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

std::string Coweight::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << (*this)[i];
  os << ')';
  return os.str();
}

// ------------------------------------------------------------- Permutation

Permutation::Permutation() {
  for (std::size_t i = 0; i < image_.size(); ++i) image_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::transposition(int a, int b) {
  Permutation p;
  std::swap(p.image_[static_cast<std::size_t>(a)], p.image_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  if (images.size() > static_cast<std::size_t>(kMaxAmbient)) throw InvalidInput("permutation too large");
  Permutation p;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
    p.image_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  for (std::size_t i = 0; i < image_.size(); ++i) out.image_[i] = image_[rhs.image_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  for (std::size_t i = 0; i < image_.size(); ++i) out.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

std::vector<int> Permutation::images(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = (*this)(i);
  return out;
}

// --------------------------------------------------------------- RootDatum

namespace {

RootPair canonical_pair(GroupKind kind, int n, int i, int j) {
  RootPair p{i, j};
  if (kind == GroupKind::GSp) {
    RootPair mirror{n - 1 - j, n - 1 - i};
    if (mirror < p) p = mirror;
  }
  return p;
}

Coweight coroot_of(GroupKind kind, int n, RootPair a) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(a.i)] += 1;
  v[static_cast<std::size_t>(a.j)] -= 1;
  if (kind == GroupKind::GSp && a.j != n - 1 - a.i) {
    v[static_cast<std::size_t>(n - 1 - a.j)] += 1;
    v[static_cast<std::size_t>(n - 1 - a.i)] -= 1;
  }
  return Coweight(std::move(v));
}

Permutation reflection_of(GroupKind kind, int n, RootPair a) {
  Permutation p = Permutation::transposition(a.i, a.j);
  if (kind == GroupKind::GSp && a.j != n - 1 - a.i) {
    p = p * Permutation::transposition(n - 1 - a.j, n - 1 - a.i);
  }
  return p;
}

}  // namespace

RootDatum RootDatum::build(GroupKind kind, int d) {
  if (d < 1) throw InvalidInput("rank parameter d must be >= 1");
  const int n = kind == GroupKind::GL ? d : 2 * d;
  if (n > kMaxAmbient) throw InvalidInput("ambient dimension exceeds " + std::to_string(kMaxAmbient));

  RootDatum rd;
  rd.kind_ = kind;
  rd.d_ = d;
  rd.n_ = n;

  std::set<RootPair> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) roots.insert(canonical_pair(kind, n, i, j));
  rd.positive_roots_.assign(roots.begin(), roots.end());

  const int simple_count = kind == GroupKind::GL ? d - 1 : d;
  for (int i = 0; i < simple_count; ++i) rd.simple_roots_.push_back(RootPair{i, i + 1});
  if (n >= 2) rd.highest_root_ = RootPair{0, n - 1};

  for (RootPair a : rd.positive_roots_) rd.positive_coroots_.push_back(coroot_of(kind, n, a));
  for (RootPair a : rd.simple_roots_) {
    rd.simple_coroots_.push_back(coroot_of(kind, n, a));
    rd.weyl_generators_.push_back(reflection_of(kind, n, a));
  }

  rd.two_rho_vee_ = rd.zero();
  for (const Coweight& c : rd.positive_coroots_) rd.two_rho_vee_ = rd.two_rho_vee_ + c;

  std::set<Permutation> group{Permutation::identity()};
  std::deque<Permutation> frontier{Permutation::identity()};
  while (!frontier.empty()) {
    Permutation w = frontier.front();
    frontier.pop_front();
    for (const Permutation& s : rd.weyl_generators_) {
      Permutation ws = w * s;
      if (group.insert(ws).second) frontier.push_back(ws);
    }
  }
  rd.weyl_group_.assign(group.begin(), group.end());
  std::stable_sort(rd.weyl_group_.begin(), rd.weyl_group_.end(),
                   [&](const Permutation& a, const Permutation& b) {
                     return rd.finite_length(a) < rd.finite_length(b);
                   });
  return rd;
}

int RootDatum::rho_twice(const Coweight& lambda) const {
  int total = 0;
  for (RootPair a : positive_roots_) total += pairing(lambda, a);
  return total;
}

bool RootDatum::is_valid(const Coweight& lambda) const {
  if (lambda.size() != n_) return false;
  if (kind_ == GroupKind::GSp) {
    const int c = lambda[0] + lambda[n_ - 1];
    for (int i = 0; i < d_; ++i)
      if (lambda[i] + lambda[n_ - 1 - i] != c) return false;
  }
  return true;
}

void RootDatum::validate(const Coweight& lambda) const {
  if (lambda.size() != n_) {
    throw InvalidInput("coweight " + lambda.str() + " has length " + std::to_string(lambda.size()) +
                       ", expected " + std::to_string(n_));
  }
  if (!is_valid(lambda)) {
    throw InvalidInput("coweight " + lambda.str() + " violates the similitude constraint");
  }
}

int RootDatum::central_coordinate(const Coweight& lambda) const {
  if (kind_ == GroupKind::GSp) return lambda[0] + lambda[n_ - 1];
  return std::accumulate(lambda.entries().begin(), lambda.entries().end(), 0);
}

Coweight RootDatum::act(const Permutation& w, const Coweight& lambda) const {
  Coweight out = lambda;
  for (int i = 0; i < n_; ++i) out[w(i)] = lambda[i];
  return out;
}

Coweight RootDatum::dominant_conjugate(const Coweight& lambda) const {
  validate(lambda);
  std::vector<int> v = lambda.entries();
  if (kind_ == GroupKind::GL) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return Coweight(std::move(v));
  }
  const int c = central_coordinate(lambda);
  std::vector<int> half(static_cast<std::size_t>(d_));
  for (int i = 0; i < d_; ++i) half[static_cast<std::size_t>(i)] = std::max(v[static_cast<std::size_t>(i)], c - v[static_cast<std::size_t>(i)]);
  std::sort(half.begin(), half.end(), std::greater<>());
  return complete(half, c);
}

int RootDatum::finite_length(const Permutation& w) const {
  const Permutation inv = w.inverse();
  int len = 0;
  for (RootPair a : positive_roots_)
    if (inv(a.i) > inv(a.j)) ++len;
  return len;
}

Coweight RootDatum::complete(const std::vector<int>& half, int similitude) const {
  if (kind_ == GroupKind::GL) return Coweight(half);
  if (static_cast<int>(half.size()) != d_) throw InvalidInput("expected " + std::to_string(d_) + " entries");
  std::vector<int> v(static_cast<std::size_t>(n_));
  for (int i = 0; i < d_; ++i) {
    v[static_cast<std::size_t>(i)] = half[static_cast<std::size_t>(i)];
    v[static_cast<std::size_t>(n_ - 1 - i)] = similitude - half[static_cast<std::size_t>(i)];
  }
  return Coweight(std::move(v));
}

// ------------------------------------------------------------ free functions

bool is_dominant(const Coweight& lambda, const RootDatum& rd) {
  rd.validate(lambda);
  for (RootPair a : rd.simple_roots())
    if (rd.pairing(lambda, a) < 0) return false;
  return true;
}

bool dominance_leq(const Coweight& lower, const Coweight& upper, const RootDatum& rd) {
  if (!is_dominant(lower, rd) || !is_dominant(upper, rd)) {
    throw InvalidInput("dominance order is only defined on dominant coweights");
  }
  if (rd.central_coordinate(lower) != rd.central_coordinate(upper)) return false;
  // Coefficients in the simple-coroot basis are the partial sums of the
  // first-half entries of upper - lower, in both realizations.
  const Coweight delta = upper - lower;
  const int span = rd.kind() == GroupKind::GL ? rd.rank() - 1 : rd.rank();
  int partial = 0;
  for (int i = 0; i < span; ++i) {
    partial += delta[i];
    if (partial < 0) return false;
  }
  return true;
}

int rho_pairing_twice(const Coweight& lambda, const RootDatum& rd) {
  if (!is_dominant(lambda, rd)) throw InvalidInput("rho pairing requires a dominant coweight, got " + lambda.str());
  return rd.rho_twice(lambda);
}

std::vector<Coweight> weyl_orbit(const Coweight& lambda, const RootDatum& rd) {
  rd.validate(lambda);
  std::set<Coweight> orbit{lambda};
  std::deque<Coweight> frontier{lambda};
  while (!frontier.empty()) {
    Coweight mu = frontier.front();
    frontier.pop_front();
    for (const Permutation& s : rd.weyl_generators()) {
      Coweight image = rd.act(s, mu);
      if (orbit.insert(image).second) frontier.push_back(std::move(image));
    }
  }
  return {orbit.rbegin(), orbit.rend()};
}

std::vector<Coweight> lambda_set(int n_minus, int n_plus, const RootDatum& rd) {
  if (n_minus > 0) throw InvalidInput("n_minus must be <= 0");
  if (n_plus <= 0) throw InvalidInput("n_plus must be > 0");
  const int d = rd.rank();
  const int similitude = n_plus + n_minus;
  // GSp lower bound (n_+ + n_-)/2, rounded up to an integer.
  const int lower = rd.kind() == GroupKind::GL
                        ? n_minus
                        : (similitude >= 0 ? (similitude + 1) / 2 : -((-similitude) / 2));
  std::vector<Coweight> out;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int upper) {
    if (static_cast<int>(current.size()) == d) {
      out.push_back(rd.complete(current, similitude));
      return;
    }
    for (int v = upper; v >= lower; --v) {
      current.push_back(v);
      extend(v);
      current.pop_back();
    }
  };
  extend(n_plus);
  return out;
}

}  // namespace iwahori

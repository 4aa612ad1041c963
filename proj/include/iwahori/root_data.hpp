#pragma once

// Root data of GL(d) and GSp(2d) in a shared ambient realization.
//
// Coweights live in Z^n with n = d (GL) or n = 2d (GSp). For GSp a coweight
// must satisfy l_i + l_{n-1-i} = c for a single similitude constant c. Roots
// are the functionals l -> l_i - l_j (i < j); for GSp two pairs that restrict
// to the same functional on the constrained lattice are identified and one
// canonical pair is kept. The finite Weyl group is S_d, resp. the centralizer
// of i -> n-1-i inside S_{2d}.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace iwahori {

enum class GroupKind { GL, GSp };

inline constexpr int kMaxAmbient = 8;

std::string to_string(GroupKind kind);
GroupKind parse_group_kind(const std::string& name);

class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::vector<int> entries) : entries_(std::move(entries)) {}
  Coweight(std::initializer_list<int> entries) : entries_(entries) {}

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  Coweight operator+(const Coweight& other) const;
  Coweight operator-(const Coweight& other) const;
  Coweight operator-() const;
  Coweight scaled(int factor) const;
  bool is_zero() const;

  auto operator<=>(const Coweight&) const = default;

  std::string str() const;

 private:
  std::vector<int> entries_;
};

// A permutation of {0, ..., n-1}; slots >= n are fixed points.
class Permutation {
 public:
  Permutation();
  static Permutation identity() { return Permutation(); }
  static Permutation transposition(int a, int b);
  static Permutation from_images(const std::vector<int>& images);

  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  Permutation operator*(const Permutation& rhs) const;  // (this*rhs)(i) = this(rhs(i))
  Permutation inverse() const;
  std::vector<int> images(int n) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::array<std::uint8_t, kMaxAmbient> image_;
};

// Root functional l -> l[i] - l[j] with i < j.
struct RootPair {
  int i;
  int j;
  auto operator<=>(const RootPair&) const = default;
};

class RootDatum {
 public:
  static RootDatum build(GroupKind kind, int d);

  GroupKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return d_; }
  int ambient() const noexcept { return n_; }

  const std::vector<RootPair>& positive_roots() const noexcept { return positive_roots_; }
  const std::vector<RootPair>& simple_roots() const noexcept { return simple_roots_; }
  const std::vector<Coweight>& positive_coroots() const noexcept { return positive_coroots_; }
  const std::vector<Coweight>& simple_coroots() const noexcept { return simple_coroots_; }
  const std::vector<Permutation>& weyl_generators() const noexcept { return weyl_generators_; }
  // All of W_0, ordered by length then lexicographically; element 0 is the identity.
  const std::vector<Permutation>& weyl_group() const noexcept { return weyl_group_; }
  const Permutation& longest_element() const { return weyl_group_.back(); }
  // The highest root (its coroot is used for the affine simple reflection).
  RootPair highest_root() const noexcept { return highest_root_; }

  int pairing(const Coweight& lambda, RootPair alpha) const { return lambda[alpha.i] - lambda[alpha.j]; }
  // Sum over positive roots of <lambda, alpha>; defined for every coweight.
  int rho_twice(const Coweight& lambda) const;
  // 2 rho^vee: the sum of positive coroots (an integral coweight with c = 0).
  const Coweight& two_rho_vee() const noexcept { return two_rho_vee_; }

  bool is_valid(const Coweight& lambda) const;
  void validate(const Coweight& lambda) const;
  // Coordinate sum (GL) or similitude constant (GSp): indexes the component of
  // the coweight lattice modulo the coroot lattice.
  int central_coordinate(const Coweight& lambda) const;

  Coweight act(const Permutation& w, const Coweight& lambda) const;
  Coweight dominant_conjugate(const Coweight& lambda) const;
  int finite_length(const Permutation& w) const;
  Coweight zero() const { return Coweight(std::vector<int>(static_cast<std::size_t>(n_), 0)); }
  // Completes first-half entries (l_1..l_d) with similitude c; for GL returns the input.
  Coweight complete(const std::vector<int>& half, int similitude) const;

  bool operator==(const RootDatum& other) const { return kind_ == other.kind_ && d_ == other.d_; }

 private:
  RootDatum() = default;

  GroupKind kind_ = GroupKind::GL;
  int d_ = 0;
  int n_ = 0;
  std::vector<RootPair> positive_roots_;
  std::vector<RootPair> simple_roots_;
  std::vector<Coweight> positive_coroots_;
  std::vector<Coweight> simple_coroots_;
  std::vector<Permutation> weyl_generators_;
  std::vector<Permutation> weyl_group_;
  RootPair highest_root_{0, 0};
  Coweight two_rho_vee_;
};

bool is_dominant(const Coweight& lambda, const RootDatum& rd);
// lambda' <= lambda iff lambda - lambda' is a non-negative integer combination
// of positive coroots. Both arguments must be dominant.
bool dominance_leq(const Coweight& lower, const Coweight& upper, const RootDatum& rd);
// 2<rho, lambda> for dominant lambda.
int rho_pairing_twice(const Coweight& lambda, const RootDatum& rd);
// W_0-orbit, sorted in decreasing lexicographic order (dominant member first).
std::vector<Coweight> weyl_orbit(const Coweight& lambda, const RootDatum& rd);
// The finite set Lambda(n_-, n_+), sorted decreasing lexicographically.
std::vector<Coweight> lambda_set(int n_minus, int n_plus, const RootDatum& rd);

}  // namespace iwahori

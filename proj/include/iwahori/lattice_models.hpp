#pragma once

// Brute-force F_q-points of the lattice models over the special fibre.
//
// Every level quotient t^{n_-}V_i / t^{n_+}V_i is identified with
// Q = (F_q[t]/t^N)^n, N = n_+ - n_-, through local coordinates (j, k): the
// coordinate j of a level-i lattice has t-exponent lower_j + k, where
// lower_j = n_- - [j < i]. In these coordinates t shifts k -> k+1 on every
// coordinate, and the inclusion of level i into level i+1 is the map P_i that
// shifts only coordinate i (the top slot k = N-1 falls into t^{n_+}V_{i+1}).
// A vector of Q has index j*N + k.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/finite_field.hpp"
#include "iwahori/hecke.hpp"

namespace iwahori {

enum class ModelKind { M, Grass, N };

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& name);

struct LatticeModelParams {
  GroupKind kind = GroupKind::GL;
  int d = 1;
  std::optional<int> r;  // GL only: rank n_+ d - r of every L_i
  int n_minus = 0;
  int n_plus = 1;
  int q = 2;
  ModelKind model = ModelKind::M;

  int width() const { return n_plus - n_minus; }
  int ambient() const { return kind == GroupKind::GL ? d : 2 * d; }
  // Throws InvalidInput on inconsistent parameters.
  void validate() const;
};

// Subspace of F_q^m held in reduced row echelon form, so equality is
// equality of subspaces.
class Subspace {
 public:
  Subspace() = default;
  // rows: dim() rows of length ambient, already in reduced row echelon form.
  Subspace(int ambient, std::vector<std::uint8_t> rows);

  int ambient() const noexcept { return ambient_; }
  int dim() const noexcept { return ambient_ == 0 ? 0 : static_cast<int>(rows_.size()) / ambient_; }
  const std::uint8_t* row(int i) const { return rows_.data() + static_cast<std::size_t>(i) * ambient_; }
  std::vector<std::uint8_t> row_vector(int i) const { return {row(i), row(i) + ambient_}; }
  const std::vector<std::uint8_t>& data() const noexcept { return rows_; }
  int pivot(int i) const { return pivots_[static_cast<std::size_t>(i)]; }

  bool contains(const std::vector<std::uint8_t>& v, const FiniteField& f) const;

  auto operator<=>(const Subspace& other) const {
    if (auto c = ambient_ <=> other.ambient_; c != 0) return c;
    return rows_ <=> other.rows_;
  }
  bool operator==(const Subspace& other) const { return ambient_ == other.ambient_ && rows_ == other.rows_; }

 private:
  int ambient_ = 0;
  std::vector<std::uint8_t> rows_;
  std::vector<int> pivots_;
};

Subspace row_reduce(const std::vector<std::vector<std::uint8_t>>& vectors, int ambient, const FiniteField& f);

struct LatticeChain {
  std::vector<Subspace> modules;  // L_0, ..., in local coordinates
  auto operator<=>(const LatticeChain&) const = default;
  bool operator==(const LatticeChain&) const = default;
};

// Square matrix over F_q[t]/t^T, entry (a, b) coefficient e at
// data[(a*n + b)*T + e].
struct PolyMatrix {
  int n = 0;
  int terms = 0;
  std::vector<std::uint8_t> data;
  std::uint8_t at(int a, int b, int e) const { return data[(static_cast<std::size_t>(a) * n + b) * terms + e]; }
  std::uint8_t& at(int a, int b, int e) { return data[(static_cast<std::size_t>(a) * n + b) * terms + e]; }
};

// Gaussian binomial [m choose k]_q as a floating estimate.
long double gaussian_binomial(int m, int k, int q);
// IWAHORI_BUDGET if set and valid, otherwise 2e6 candidate subspaces.
long double default_budget();

class LatticeModel {
 public:
  explicit LatticeModel(LatticeModelParams params);

  const LatticeModelParams& params() const noexcept { return p_; }
  const FiniteField& field() const noexcept { return field_; }
  int quotient_dim() const noexcept { return m_; }
  int levels() const;

  // Number of candidate subspaces the enumeration visits.
  long double estimate() const;
  void check_budget(long double budget) const;

  // Each call checks the budget first and throws BudgetExceeded.
  std::vector<LatticeChain> enumerate_points(long double budget) const;
  std::vector<LatticeChain> enumerate_points_serial(long double budget) const;

  // Partition into orbits of the Iwahori group (M, N) or of K (Grass); each
  // orbit lists point indices in increasing order, orbits sorted by first index.
  std::vector<std::vector<std::size_t>> stratify(const std::vector<LatticeChain>& points) const;
  // Orbits of single level-0 subspaces under the Iwahori group.
  std::vector<std::vector<std::size_t>> iwahori_orbits_on_grass(const std::vector<LatticeChain>& grass_points) const;

  // t-stable subspaces of Q of the given dimension, optionally Lagrangian.
  std::vector<Subspace> t_stable_subspaces(int dim, bool lagrangian) const;
  bool is_t_stable(const Subspace& s) const;
  bool is_lagrangian(const Subspace& s) const;
  // Orthogonal complement for the residue pairing of the symplectic form
  // (GSp only).
  Subspace perp(const Subspace& s) const;
  std::vector<std::uint8_t> shift(const std::vector<std::uint8_t>& v, int coordinate) const;  // P_i
  std::vector<std::uint8_t> apply_t(const std::vector<std::uint8_t>& v) const;

  const std::vector<PolyMatrix>& iwahori_generators() const noexcept { return iwahori_gens_; }
  const std::vector<PolyMatrix>& maximal_generators() const noexcept { return maximal_gens_; }
  // Image of a level-i subspace under g.
  Subspace act(const PolyMatrix& g, int level, const Subspace& s) const;
  LatticeChain act(const PolyMatrix& g, const LatticeChain& chain) const;
  // Whether g preserves the symplectic form up to a scalar (GSp) or is
  // invertible mod t (GL).
  bool is_group_element(const PolyMatrix& g) const;

 private:
  std::vector<int> module_dims() const;
  std::vector<LatticeChain> chains_from(const Subspace& first, const std::vector<Subspace>& middle,
                                        const std::vector<Subspace>& last) const;
  std::vector<LatticeChain> enumerate_impl(long double budget, bool parallel) const;
  void build_generators();
  std::uint8_t pairing(const std::uint8_t* x, const std::uint8_t* y) const;

  LatticeModelParams p_;
  FiniteField field_;
  int n_;   // ambient coordinates
  int m_;   // dim Q = n * N
  std::vector<PolyMatrix> iwahori_gens_;
  std::vector<PolyMatrix> maximal_gens_;
};

// Elements of Lambda(n_-, n_+) whose central coordinate equals r.
std::vector<Coweight> lambda_set_fixed(int n_minus, int n_plus, int r, const RootDatum& rd);

// sum_{w in wset} q^l(w)
std::int64_t predicted_count(const std::vector<AffineWeylElement>& wset, const AffineWeylGroup& g, int q);

// Admissible sets of the dominance-maximal elements of Lambda(r, n_pm), one
// per admissible r (GL, model N or no r given) or for the given r; GSp uses
// Lambda(n_pm) itself. Sorted.
std::vector<AffineWeylElement> candidate_set(const LatticeModelParams& p, const AffineWeylGroup& g);

// |K t^lambda K / K| over F_q, from minimal coset lengths in W_0 t^lambda W_0.
std::int64_t grass_orbit_size(const Coweight& lambda, const AffineWeylGroup& g, int q);

struct StrataReport {
  bool match = false;
  std::vector<std::int64_t> orbit_sizes;      // sorted
  std::vector<std::int64_t> predicted_sizes;  // sorted
  std::int64_t total_points = 0;
  std::int64_t predicted_total = 0;
  std::string verdict() const { return match ? "match" : "mismatch"; }
};

StrataReport compare_sizes(std::vector<std::int64_t> orbit_sizes, std::vector<std::int64_t> predicted);
StrataReport match_strata(const std::vector<std::vector<std::size_t>>& orbits,
                          const std::vector<AffineWeylElement>& candidate, const AffineWeylGroup& g, int q);
// K-orbits of Grass against |K t^lambda K/K| for lambda in Lambda (or Lambda(r, n_pm)).
StrataReport match_grass_strata(const std::vector<std::vector<std::size_t>>& orbits, const LatticeModelParams& p,
                                const AffineWeylGroup& g);

// (size of an I-orbit on Grass, number of points of M over it).
struct FiberEntry {
  std::int64_t orbit_size = 0;
  std::int64_t fiber_size = 0;
  auto operator<=>(const FiberEntry&) const = default;
};

// Brute force: I-orbits on Grass paired with the fibre size of M -> Grass.
std::vector<FiberEntry> fiber_profile(const LatticeModel& model, const std::vector<LatticeChain>& points,
                                      long double budget);
// Hecke side: for f = sum_{x in candidate} T_x, the coefficients of f * e_K on
// each coset y W_0 evaluated at q, paired with q^(minimal length in y W_0).
std::vector<FiberEntry> fiber_profile_from_hecke(const HeckeAlgebra& algebra,
                                                 const std::vector<AffineWeylElement>& candidate, int q);

}  // namespace iwahori

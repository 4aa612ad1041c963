#pragma once

// Characters of the dual group. A coweight of G is a weight of the dual
// group, and the positive coroots of G are its positive roots, so every
// routine here works directly with Coweight and the coroot data of RootDatum.

#include <cstdint>
#include <map>
#include <vector>

#include "iwahori/laurent.hpp"
#include "iwahori/root_data.hpp"

namespace iwahori {

// weight -> multiplicity; W_0-invariant for genuine characters.
using Character = std::map<Coweight, std::int64_t>;

struct Multiplicity {
  std::int64_t value = 0;
  // Set when mu lies in a different component than lambda; value is then 0.
  bool central_mismatch = false;
};

// Dominant mu <= lambda, sorted decreasing lexicographically (lambda first).
std::vector<Coweight> dominant_weights_below(const Coweight& lambda, const RootDatum& rd);

// m_lambda(mu) for every dominant mu <= lambda (Freudenthal recursion).
std::map<Coweight, std::int64_t> dominant_multiplicities(const Coweight& lambda, const RootDatum& rd);

Multiplicity weight_multiplicity_checked(const Coweight& lambda, const Coweight& mu, const RootDatum& rd);
std::int64_t weight_multiplicity(const Coweight& lambda, const Coweight& mu, const RootDatum& rd);

Character character(const Coweight& lambda, const RootDatum& rd);
Character character_product(const Character& a, const Character& b);
std::int64_t character_dimension(const Character& chi);

// chi_lambda * chi_mu = sum_nu c_nu chi_nu
std::map<Coweight, std::int64_t> decompose_product(const Coweight& lambda, const Coweight& mu, const RootDatum& rd);
// Decomposes any W_0-invariant virtual character into irreducibles; throws
// VerificationFailure if the input is not W_0-invariant.
std::map<Coweight, std::int64_t> decompose_character(const Character& chi, const RootDatum& rd);

bool is_minuscule(const Coweight& lambda, const RootDatum& rd);

// Lusztig's q-analog m_lambda^mu(q), returned as a Laurent polynomial in v
// with q = v^2. Requires dominant mu <= lambda (returns 0 otherwise).
Laurent q_weight_multiplicity(const Coweight& lambda, const Coweight& mu, const RootDatum& rd);

}  // namespace iwahori

#pragma once

#include <memory>
#include <utility>

#include "iwahori/hecke.hpp"

namespace iwahori {

// Bernstein elements in the v-normalization: theta(lambda) = v^-l(t^lambda) T_{t^lambda}
// for dominant lambda, extended multiplicatively.
class Bernstein {
 public:
  explicit Bernstein(std::shared_ptr<const HeckeAlgebra> algebra);

  const HeckeAlgebra& algebra() const noexcept { return *algebra_; }
  const RootDatum& datum() const noexcept { return algebra_->datum(); }

  // The smallest dominant lambda2 with lambda + lambda2 dominant.
  std::pair<Coweight, Coweight> dominant_split(const Coweight& lambda) const;

  HeckeElement theta(const Coweight& lambda) const;
  // theta computed from an explicit decomposition lambda = plus - minus.
  HeckeElement theta_from(const Coweight& plus, const Coweight& minus) const;

  HeckeElement z(const Coweight& lambda) const;
  HeckeElement bern_of_character(const Coweight& lambda) const;
  HeckeElement theorem11_rhs(const Coweight& lambda) const;

 private:
  std::shared_ptr<const HeckeAlgebra> algebra_;
};

}  // namespace iwahori

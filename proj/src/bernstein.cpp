#include "iwahori/bernstein.hpp"

#include <algorithm>

#include "iwahori/characters.hpp"
#include "iwahori/errors.hpp"

namespace iwahori {

Bernstein::Bernstein(std::shared_ptr<const HeckeAlgebra> algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw InvalidInput("null Hecke algebra");
}

std::pair<Coweight, Coweight> Bernstein::dominant_split(const Coweight& lambda) const {
  const RootDatum& rd = datum();
  rd.validate(lambda);
  const int d = rd.rank();
  std::vector<int> half(static_cast<std::size_t>(d), 0);
  int similitude = 0;
  if (rd.kind() == GroupKind::GSp) {
    // gap at the long simple root is 2*a_{d-1} - c
    const int gap = lambda[d - 1] - lambda[d];
    similitude = std::min(0, gap);
  }
  for (int i = d - 2; i >= 0; --i) {
    const int gap = lambda[i] - lambda[i + 1];
    half[static_cast<std::size_t>(i)] = half[static_cast<std::size_t>(i) + 1] + std::max(0, -gap);
  }
  Coweight minus = rd.complete(half, similitude);
  Coweight plus = lambda + minus;
  return {std::move(plus), std::move(minus)};
}

HeckeElement Bernstein::theta_from(const Coweight& plus, const Coweight& minus) const {
  const RootDatum& rd = datum();
  if (!is_dominant(plus, rd) || !is_dominant(minus, rd)) {
    throw InvalidInput("theta decomposition needs two dominant coweights");
  }
  const AffineWeylGroup& g = algebra_->group();
  const AffineWeylElement tp = g.translation(plus);
  const AffineWeylElement tm = g.translation(minus);
  HeckeElement product = algebra_->multiply(algebra_->t_basis(tp), algebra_->invert_t(tm));
  return product.scaled(Laurent::v_power(g.length(tm) - g.length(tp)));
}

HeckeElement Bernstein::theta(const Coweight& lambda) const {
  auto [plus, minus] = dominant_split(lambda);
  return theta_from(plus, minus);
}

HeckeElement Bernstein::z(const Coweight& lambda) const {
  if (!is_dominant(lambda, datum())) throw InvalidInput("z requires a dominant coweight, got " + lambda.str());
  HeckeElement out;
  for (const Coweight& mu : weyl_orbit(lambda, datum())) out += theta(mu);
  return out;
}

HeckeElement Bernstein::bern_of_character(const Coweight& lambda) const {
  HeckeElement out;
  for (const auto& [mu, m] : dominant_multiplicities(lambda, datum())) {
    if (m != 0) out += z(mu).scaled(Laurent(m));
  }
  return out;
}

HeckeElement Bernstein::theorem11_rhs(const Coweight& lambda) const {
  HeckeElement out = bern_of_character(lambda);
  if (rho_pairing_twice(lambda, datum()) % 2 != 0) out = -out;
  return out;
}

}  // namespace iwahori

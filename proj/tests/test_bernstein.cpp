#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iwahori/bernstein.hpp"
#include "iwahori/characters.hpp"
#include "iwahori/errors.hpp"
#include "support.hpp"

using namespace iwahori;

namespace {

std::shared_ptr<const Bernstein> make(GroupKind kind, int d) {
  return std::make_shared<const Bernstein>(std::make_shared<const HeckeAlgebra>(RootDatum::build(kind, d)));
}

Coweight random_coweight(const RootDatum& rd, int lo, int hi) {
  std::vector<int> half(static_cast<std::size_t>(rd.rank()));
  for (int& x : half) x = testing_support::uniform(lo, hi);
  return rd.kind() == GroupKind::GL ? Coweight(half) : rd.complete(half, testing_support::uniform(-1, 1));
}

}  // namespace

TEST_CASE("theta examples") {
  auto b = make(GroupKind::GL, 2);
  const HeckeAlgebra& h = b->algebra();
  const auto& g = h.group();
  CHECK(b->theta({0, 0}) == h.unit());
  for (const Coweight& lambda : std::vector<Coweight>{{1, 0}, {2, 0}, {3, 1}, {1, 1}}) {
    const auto t = g.translation(lambda);
    CHECK(b->theta(lambda) == h.t_basis(t).scaled(Laurent::v_power(-g.length(t))));
  }
  // (0,1) = (1,1) - (1,0): v^{l(t^(1,0)) - l(t^(1,1))} T_{t^(1,1)} T_{t^(1,0)}^{-1}
  const HeckeElement expected =
      h.multiply(h.t_basis(g.translation({1, 1})), h.invert_t(g.translation({1, 0}))).scaled(Laurent::v_power(1));
  CHECK(b->theta({0, 1}) == expected);
}

TEST_CASE("dominant split") {
  for (auto kind : {GroupKind::GL, GroupKind::GSp})
    for (int d = 1; d <= 3; ++d) {
      auto b = make(kind, d);
      const RootDatum& rd = b->datum();
      for (int i = 0; i < 30; ++i) {
        const Coweight lambda = random_coweight(rd, -2, 2);
        const auto [plus, minus] = b->dominant_split(lambda);
        CHECK(is_dominant(plus, rd));
        CHECK(is_dominant(minus, rd));
        CHECK(plus - minus == lambda);
        if (is_dominant(lambda, rd)) CHECK(minus == rd.zero());
      }
    }
}

TEST_CASE("theta does not depend on the decomposition") {
  for (auto kind : {GroupKind::GL, GroupKind::GSp}) {
    auto b = make(kind, 2);
    const RootDatum& rd = b->datum();
    for (int i = 0; i < 10; ++i) {
      const Coweight lambda = random_coweight(rd, -2, 2);
      const auto [plus, minus] = b->dominant_split(lambda);
      const Coweight nu = testing_support::random_dominant(rd, 0, 2);
      CHECK(b->theta_from(plus + nu, minus + nu) == b->theta(lambda));
    }
  }
}

TEST_CASE("thetas multiply like translations") {
  for (auto kind : {GroupKind::GL, GroupKind::GSp}) {
    auto b = make(kind, 2);
    const RootDatum& rd = b->datum();
    for (int i = 0; i < 10; ++i) {
      const Coweight lambda = random_coweight(rd, -2, 2), mu = random_coweight(rd, -2, 2);
      const HeckeElement lm = b->algebra().multiply(b->theta(lambda), b->theta(mu));
      CHECK(lm == b->theta(lambda + mu));
      CHECK(lm == b->algebra().multiply(b->theta(mu), b->theta(lambda)));
    }
  }
}

TEST_CASE("z examples") {
  auto b = make(GroupKind::GL, 2);
  const HeckeAlgebra& h = b->algebra();
  const auto& g = h.group();
  CHECK(b->z({0, 0}) == h.unit());
  CHECK(b->z({1, 1}) == h.t_basis(g.translation({1, 1})));
  const HeckeElement z = b->z({1, 0});
  CHECK(z == b->theta({1, 0}) + b->theta({0, 1}));
  CHECK(h.is_central(z));
  // leading terms v^-1 T_{t^mu'} for both conjugates; everything else lies in Adm((1,0))
  CHECK(z.coefficient(g.translation({1, 0})) == Laurent::v_power(-1));
  CHECK(z.coefficient(g.translation({0, 1})) == Laurent::v_power(-1));
  const auto adm = g.admissible_set({1, 0});
  for (const auto& [x, c] : z.terms()) CHECK(std::find(adm.begin(), adm.end(), x) != adm.end());
  // No other multiple of T_omega can be added while staying central.
  CHECK_FALSE(h.is_central(z + h.t_basis(g.omega())));
  CHECK_THROWS_AS(b->z({0, 1}), InvalidInput);
}

TEST_CASE("central elements for small dominant coweights") {
  for (auto [kind, d] : std::vector<std::pair<GroupKind, int>>{{GroupKind::GL, 2}, {GroupKind::GL, 3}, {GroupKind::GSp, 2}}) {
    auto b = make(kind, d);
    for (const Coweight& lambda : lambda_set(-1, 1, b->datum()))
      if (rho_pairing_twice(lambda, b->datum()) <= 4) CHECK(b->algebra().is_central(b->z(lambda)));
  }
}

TEST_CASE("Bern of characters") {
  auto b = make(GroupKind::GL, 2);
  const HeckeAlgebra& h = b->algebra();
  CHECK(b->bern_of_character({1, 1}) == h.t_basis(h.group().translation({1, 1})));
  CHECK(b->bern_of_character({1, 0}) == b->z({1, 0}));
  CHECK(b->bern_of_character({2, 0}) == b->z({2, 0}) + b->z({1, 1}));
  CHECK(b->theorem11_rhs({0, 0}) == h.unit());
  CHECK(b->theorem11_rhs({1, 0}) == -b->z({1, 0}));
  auto b4 = make(GroupKind::GL, 4);
  CHECK(b4->theorem11_rhs({1, 1, 0, 0}) == b4->z({1, 1, 0, 0}));
}

TEST_CASE("Bern is multiplicative on small pairs") {
  for (auto [kind, d] : std::vector<std::pair<GroupKind, int>>{{GroupKind::GL, 2}, {GroupKind::GSp, 2}}) {
    auto b = make(kind, d);
    const RootDatum& rd = b->datum();
    const auto set = lambda_set(0, 1, rd);
    for (const auto& l : set)
      for (const auto& m : set) {
        if (rho_pairing_twice(l + m, rd) > 4) continue;
        HeckeElement rhs;
        for (const auto& [nu, c] : decompose_product(l, m, rd)) rhs += b->bern_of_character(nu).scaled(Laurent(c));
        CHECK(b->algebra().multiply(b->bern_of_character(l), b->bern_of_character(m)) == rhs);
      }
  }
}

TEST_CASE("z specializes to the orbit sum") {
  for (auto kind : {GroupKind::GL, GroupKind::GSp}) {
    auto b = make(kind, 2);
    const RootDatum& rd = b->datum();
    const auto& g = b->algebra().group();
    for (const Coweight& lambda : lambda_set(-1, 2, rd)) {
      if (rho_pairing_twice(lambda, rd) > 5) continue;
      GroupAlgebraElement expected;
      for (const auto& mu : weyl_orbit(lambda, rd)) expected[g.translation(mu)] = 1;
      CHECK(b->algebra().specialize_at_one(b->z(lambda)) == expected);
    }
  }
}

#include "iwahori/spherical.hpp"

#include <algorithm>
#include <set>

#include "iwahori/characters.hpp"
#include "iwahori/errors.hpp"

namespace iwahori {

bool TriangleMatrix::all_ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const TriangleRow& r) { return r.residual_zero && r.triangular && r.diagonal_ok; });
}

Spherical::Spherical(std::shared_ptr<const Bernstein> bernstein) : bernstein_(std::move(bernstein)) {
  if (!bernstein_) throw InvalidInput("null Bernstein context");
}

HeckeElement Spherical::e_K() const {
  const AffineWeylGroup& g = algebra().group();
  HeckeElement out;
  for (const Permutation& w : g.datum().weyl_group()) out.add(g.finite(w), Laurent(1));
  return out;
}

Laurent Spherical::poincare() const {
  const RootDatum& rd = algebra().datum();
  Laurent out;
  for (const Permutation& w : rd.weyl_group()) out += Laurent::q_power(rd.finite_length(w));
  return out;
}

HeckeElement Spherical::star_IK(const HeckeElement& f) const { return algebra().multiply(f, e_K()); }

HeckeElement Spherical::double_coset_char(const Coweight& mu) const {
  HeckeElement out;
  for (const AffineWeylElement& x : algebra().group().double_coset(mu)) out.add(x, Laurent(1));
  return out;
}

MinusculeCheck Spherical::verify_minuscule_identity(const Coweight& mu) const {
  const RootDatum& rd = algebra().datum();
  if (!is_minuscule(mu, rd)) throw InvalidInput("the characterization is stated for minuscule coweights; got " + mu.str());
  MinusculeCheck check;
  check.mu = mu;
  check.length = algebra().group().length(algebra().group().translation(mu));
  check.lhs = star_IK(bernstein_->z(mu)).scaled(Laurent::v_power(check.length));
  check.rhs = double_coset_char(mu);
  check.holds = check.lhs == check.rhs;
  return check;
}

TriangleRow Spherical::triangle_row(const Coweight& mu) const {
  const RootDatum& rd = algebra().datum();
  const AffineWeylGroup& g = algebra().group();
  const HeckeElement image = star_IK(bernstein_->bern_of_character(mu));

  // 1_{K nu K} is the only double-coset function with t^nu in its support,
  // where its coefficient is 1; so C_{mu nu} is the coefficient at t^nu.
  std::set<Coweight> candidates;
  for (const auto& [x, c] : image.terms()) candidates.insert(rd.dominant_conjugate(g.translation_part(x)));

  TriangleRow row;
  row.mu = mu;
  HeckeElement residual = image;
  // Eliminate from the top of the dominance order down.
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const Coweight& nu = *it;
    const Laurent c = residual.coefficient(g.translation(nu));
    if (c.is_zero()) continue;
    row.entries.emplace(nu, c);
    residual -= double_coset_char(nu).scaled(c);
  }
  row.residual_zero = residual.is_zero();
  row.triangular = std::all_of(row.entries.begin(), row.entries.end(),
                               [&](const auto& kv) { return dominance_leq(kv.first, mu, rd); });
  auto diag = row.entries.find(mu);
  row.diagonal_ok = diag != row.entries.end() &&
                    diag->second == Laurent::v_power(-g.length(g.translation(mu)));
  return row;
}

TriangleMatrix Spherical::triangle_matrix(const Coweight& lambda_max) const {
  TriangleMatrix m;
  m.lambda_max = lambda_max;
  m.index = dominant_weights_below(lambda_max, algebra().datum());
  for (const Coweight& mu : m.index) m.rows.push_back(triangle_row(mu));
  return m;
}

std::vector<QAnalogComparison> Spherical::q_analog_report(const TriangleMatrix& matrix) const {
  const RootDatum& rd = algebra().datum();
  const AffineWeylGroup& g = algebra().group();
  std::vector<QAnalogComparison> out;
  for (const TriangleRow& row : matrix.rows) {
    for (const Coweight& nu : dominant_weights_below(row.mu, rd)) {
      QAnalogComparison cmp;
      cmp.lambda = row.mu;
      cmp.mu = nu;
      auto it = row.entries.find(nu);
      if (it != row.entries.end()) cmp.entry = it->second;
      cmp.q_analog_prediction =
          q_weight_multiplicity(row.mu, nu, rd).bar().shifted(-g.length(g.translation(nu)));
      cmp.equal = cmp.entry == cmp.q_analog_prediction;
      out.push_back(std::move(cmp));
    }
  }
  return out;
}

}  // namespace iwahori

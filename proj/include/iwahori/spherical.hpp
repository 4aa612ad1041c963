#pragma once

// Spherical computations carried out inside H(G//I) by right-averaging over
// K = union of I w I (w in W_0).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "iwahori/bernstein.hpp"

namespace iwahori {

struct MinusculeCheck {
  Coweight mu;
  int length = 0;        // l(t^mu)
  HeckeElement lhs;      // v^l(t^mu) z_mu e_K
  HeckeElement rhs;      // characteristic function of K mu K
  bool holds = false;
};

struct TriangleRow {
  Coweight mu;
  std::map<Coweight, Laurent> entries;  // nu -> C_{mu nu}, nonzero only
  bool residual_zero = false;
  bool triangular = false;    // every nu with nonzero entry satisfies nu <= mu
  bool diagonal_ok = false;   // C_{mu mu} = v^-l(t^mu)
};

struct TriangleMatrix {
  Coweight lambda_max;
  std::vector<Coweight> index;  // dominant mu <= lambda_max, decreasing lexicographic
  std::vector<TriangleRow> rows;

  bool all_ok() const;
};

// Exploratory comparison of C_{lambda mu} with v^-l(t^mu) m_lambda^mu(v^-2).
struct QAnalogComparison {
  Coweight lambda;
  Coweight mu;
  Laurent entry;
  Laurent q_analog_prediction;
  bool equal = false;
};

class Spherical {
 public:
  explicit Spherical(std::shared_ptr<const Bernstein> bernstein);

  const HeckeAlgebra& algebra() const noexcept { return bernstein_->algebra(); }
  const Bernstein& bernstein() const noexcept { return *bernstein_; }

  HeckeElement e_K() const;
  // Poincare polynomial sum_{w in W_0} q^l(w), in v.
  Laurent poincare() const;
  HeckeElement star_IK(const HeckeElement& f) const;
  HeckeElement double_coset_char(const Coweight& mu) const;

  MinusculeCheck verify_minuscule_identity(const Coweight& mu) const;

  TriangleRow triangle_row(const Coweight& mu) const;
  TriangleMatrix triangle_matrix(const Coweight& lambda_max) const;

  std::vector<QAnalogComparison> q_analog_report(const TriangleMatrix& matrix) const;

 private:
  std::shared_ptr<const Bernstein> bernstein_;
};

}  // namespace iwahori

#include "iwahori/lattice_models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "iwahori/errors.hpp"
#include "iwahori/parallel.hpp"

namespace iwahori {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::M: return "M";
    case ModelKind::Grass: return "Grass";
    case ModelKind::N: return "N";
  }
  return "?";
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "M") return ModelKind::M;
  if (name == "Grass" || name == "grass") return ModelKind::Grass;
  if (name == "N") return ModelKind::N;
  throw InvalidInput("unknown model '" + name + "' (expected M, Grass or N)");
}

void LatticeModelParams::validate() const {
  if (d < 1) throw InvalidInput("d must be at least 1");
  if (ambient() > kMaxAmbient) throw InvalidInput("ambient dimension exceeds " + std::to_string(kMaxAmbient));
  if (n_minus > 0) throw InvalidInput("n_minus must be <= 0");
  if (n_plus <= 0) throw InvalidInput("n_plus must be > 0");
  if (q != 2 && q != 3 && q != 4) throw InvalidInput("q must be 2, 3 or 4");
  if (kind == GroupKind::GSp) {
    if (r) throw InvalidInput("r applies to GL only");
    return;
  }
  if (r && (*r < d * n_minus || *r > d * n_plus)) {
    throw InvalidInput("r must satisfy d*n_minus <= r <= d*n_plus");
  }
  if (model == ModelKind::M && !r) throw InvalidInput("model M for GL needs r");
}

// ------------------------------------------------------------------ Subspace

Subspace::Subspace(int ambient, std::vector<std::uint8_t> rows) : ambient_(ambient), rows_(std::move(rows)) {
  for (int i = 0; i < dim(); ++i) {
    const std::uint8_t* r = row(i);
    int c = 0;
    while (c < ambient_ && r[c] == 0) ++c;
    if (c == ambient_) throw std::logic_error("zero row in a reduced basis");
    pivots_.push_back(c);
  }
}

bool Subspace::contains(const std::vector<std::uint8_t>& v, const FiniteField& f) const {
  std::vector<std::uint8_t> w = v;
  for (int i = 0; i < dim(); ++i) {
    const std::uint8_t coef = w[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])];
    if (coef == 0) continue;
    const std::uint8_t* r = row(i);
    for (int c = 0; c < ambient_; ++c) w[static_cast<std::size_t>(c)] = f.sub(w[static_cast<std::size_t>(c)], f.mul(coef, r[c]));
  }
  return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

Subspace row_reduce(const std::vector<std::vector<std::uint8_t>>& vectors, int ambient, const FiniteField& f) {
  std::vector<std::vector<std::uint8_t>> m = vectors;
  std::size_t rank = 0;
  for (int c = 0; c < ambient && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][static_cast<std::size_t>(c)] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const std::uint8_t inv = f.inv(m[rank][static_cast<std::size_t>(c)]);
    for (auto& x : m[rank]) x = f.mul(x, inv);
    for (std::size_t other = 0; other < m.size(); ++other) {
      if (other == rank) continue;
      const std::uint8_t coef = m[other][static_cast<std::size_t>(c)];
      if (coef == 0) continue;
      for (int k = 0; k < ambient; ++k)
        m[other][static_cast<std::size_t>(k)] = f.sub(m[other][static_cast<std::size_t>(k)], f.mul(coef, m[rank][static_cast<std::size_t>(k)]));
    }
    ++rank;
  }
  std::vector<std::uint8_t> flat;
  flat.reserve(rank * static_cast<std::size_t>(ambient));
  for (std::size_t i = 0; i < rank; ++i) flat.insert(flat.end(), m[i].begin(), m[i].end());
  return Subspace(ambient, std::move(flat));
}

// ------------------------------------------------------------------- budget

long double gaussian_binomial(int m, int k, int q) {
  if (k < 0 || k > m) return 0;
  long double num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= std::pow(static_cast<long double>(q), m - i) - 1;
    den *= std::pow(static_cast<long double>(q), i + 1) - 1;
  }
  return std::round(num / den);
}

long double default_budget() {
  if (const char* env = std::getenv("IWAHORI_BUDGET")) {
    char* end = nullptr;
    const long double value = std::strtold(env, &end);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return 2e6L;
}

// ---------------------------------------------------------------- the model

namespace {

std::uint64_t clamp_to_u64(long double x) {
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  if (!(x < static_cast<long double>(top))) return top;
  return x <= 0 ? 0 : static_cast<std::uint64_t>(x);
}

}  // namespace

LatticeModel::LatticeModel(LatticeModelParams params) : p_(std::move(params)), field_(p_.q) {
  p_.validate();
  n_ = p_.ambient();
  m_ = n_ * p_.width();
  build_generators();
}

int LatticeModel::levels() const {
  if (p_.model == ModelKind::Grass) return 1;
  return p_.kind == GroupKind::GL ? p_.d : p_.d + 1;
}

std::vector<int> LatticeModel::module_dims() const {
  if (p_.kind == GroupKind::GSp) return {p_.width() * p_.d};
  if (p_.r && p_.model != ModelKind::N) return {p_.n_plus * p_.d - *p_.r};
  std::vector<int> dims(static_cast<std::size_t>(m_ + 1));
  std::iota(dims.begin(), dims.end(), 0);
  return dims;
}

long double LatticeModel::estimate() const {
  long double total = 0;
  for (int dim : module_dims()) total += gaussian_binomial(m_, dim, p_.q);
  return total;
}

void LatticeModel::check_budget(long double budget) const {
  const long double est = estimate();
  if (est > budget) {
    throw BudgetExceeded("enumeration would visit about " + std::to_string(static_cast<long long>(est)) +
                             " candidate subspaces, above the budget of " +
                             std::to_string(static_cast<long long>(budget)),
                         clamp_to_u64(est), clamp_to_u64(budget));
  }
}

std::vector<std::uint8_t> LatticeModel::apply_t(const std::vector<std::uint8_t>& v) const {
  const int N = p_.width();
  std::vector<std::uint8_t> out(v.size(), 0);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k + 1 < N; ++k) out[static_cast<std::size_t>(j * N + k + 1)] = v[static_cast<std::size_t>(j * N + k)];
  return out;
}

std::vector<std::uint8_t> LatticeModel::shift(const std::vector<std::uint8_t>& v, int coordinate) const {
  const int N = p_.width();
  std::vector<std::uint8_t> out = v;
  const int base = coordinate * N;
  for (int k = N - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(base + k)] = k == 0 ? 0 : v[static_cast<std::size_t>(base + k - 1)];
  }
  return out;
}

bool LatticeModel::is_t_stable(const Subspace& s) const {
  for (int i = 0; i < s.dim(); ++i)
    if (!s.contains(apply_t(s.row_vector(i)), field_)) return false;
  return true;
}

std::uint8_t LatticeModel::pairing(const std::uint8_t* x, const std::uint8_t* y) const {
  const int N = p_.width();
  const int d = p_.d;
  std::uint8_t total = 0;
  for (int j = 0; j < n_; ++j) {
    std::uint8_t partial = 0;
    for (int k = 0; k < N; ++k)
      partial = field_.add(partial, field_.mul(x[j * N + k], y[(n_ - 1 - j) * N + (N - 1 - k)]));
    total = j < d ? field_.add(total, partial) : field_.sub(total, partial);
  }
  return total;
}

bool LatticeModel::is_lagrangian(const Subspace& s) const {
  if (p_.kind != GroupKind::GSp) throw InvalidInput("Lagrangian condition applies to GSp only");
  if (2 * s.dim() != m_) return false;
  for (int a = 0; a < s.dim(); ++a)
    for (int b = a; b < s.dim(); ++b)
      if (pairing(s.row(a), s.row(b)) != 0) return false;
  return true;
}

Subspace LatticeModel::perp(const Subspace& s) const {
  if (p_.kind != GroupKind::GSp) throw InvalidInput("perp applies to GSp only");
  const int N = p_.width();
  // Row a of the system: the functional x -> B(x, s_a).
  std::vector<std::vector<std::uint8_t>> functionals;
  for (int a = 0; a < s.dim(); ++a) {
    std::vector<std::uint8_t> f(static_cast<std::size_t>(m_));
    const std::uint8_t* y = s.row(a);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < N; ++k) {
        const std::uint8_t c = y[(n_ - 1 - j) * N + (N - 1 - k)];
        f[static_cast<std::size_t>(j * N + k)] = j < p_.d ? c : field_.neg(c);
      }
    functionals.push_back(std::move(f));
  }
  const Subspace system = row_reduce(functionals, m_, field_);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m_), false);
  for (int i = 0; i < system.dim(); ++i) is_pivot[static_cast<std::size_t>(system.pivot(i))] = true;
  std::vector<std::vector<std::uint8_t>> kernel;
  for (int c = 0; c < m_; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    std::vector<std::uint8_t> v(static_cast<std::size_t>(m_), 0);
    v[static_cast<std::size_t>(c)] = 1;
    for (int i = 0; i < system.dim(); ++i) v[static_cast<std::size_t>(system.pivot(i))] = field_.neg(system.row(i)[c]);
    kernel.push_back(std::move(v));
  }
  return row_reduce(kernel, m_, field_);
}

namespace {

// Calls visit(rows) for every subspace of F_q^m of dimension k, given by its
// reduced row echelon basis.
template <typename Visit>
void for_each_rref(int m, int k, const FiniteField& f, Visit&& visit) {
  const int q = f.order();
  std::vector<int> pivots(static_cast<std::size_t>(k));
  std::iota(pivots.begin(), pivots.end(), 0);
  std::vector<std::uint8_t> rows(static_cast<std::size_t>(k) * m);
  while (true) {
    // free slots: (row, column) right of the row pivot at non-pivot columns
    std::vector<std::size_t> free_slots;
    std::fill(rows.begin(), rows.end(), 0);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int r = 0; r < k; ++r) {
      rows[static_cast<std::size_t>(r) * m + pivots[static_cast<std::size_t>(r)]] = 1;
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < m; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_slots.push_back(static_cast<std::size_t>(r) * m + c);
    }
    std::vector<int> counter(free_slots.size(), 0);
    while (true) {
      visit(rows);
      std::size_t i = 0;
      while (i < counter.size()) {
        if (++counter[i] < q) {
          rows[free_slots[i]] = static_cast<std::uint8_t>(counter[i]);
          break;
        }
        counter[i] = 0;
        rows[free_slots[i]] = 0;
        ++i;
      }
      if (i == counter.size()) break;
    }
    // next pivot combination
    int i = k - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j) - 1] + 1;
  }
}

}  // namespace

std::vector<Subspace> LatticeModel::t_stable_subspaces(int dim, bool lagrangian) const {
  std::vector<Subspace> out;
  if (dim < 0 || dim > m_) return out;
  for_each_rref(m_, dim, field_, [&](const std::vector<std::uint8_t>& rows) {
    Subspace s(m_, rows);
    if (!is_t_stable(s)) return;
    if (lagrangian && !is_lagrangian(s)) return;
    out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Subspace image_rows(const LatticeModel& model, const Subspace& s, int coordinate) {
  std::vector<std::vector<std::uint8_t>> rows;
  for (int i = 0; i < s.dim(); ++i) rows.push_back(model.shift(s.row_vector(i), coordinate));
  return row_reduce(rows, s.ambient(), model.field());
}

bool contains_all(const Subspace& big, const Subspace& small, const FiniteField& f) {
  for (int i = 0; i < small.dim(); ++i)
    if (!big.contains(small.row_vector(i), f)) return false;
  return true;
}

}  // namespace

std::vector<LatticeChain> LatticeModel::chains_from(const Subspace& first, const std::vector<Subspace>& middle,
                                                    const std::vector<Subspace>& last) const {
  std::vector<LatticeChain> out;
  const int d = p_.d;
  LatticeChain current;
  current.modules.push_back(first);
  if (p_.kind == GroupKind::GL) {
    // L_1..L_{d-1} from middle, then P_{d-1}(L_{d-1}) must lie in L_0
    std::function<void(int)> extend = [&](int level) {
      const Subspace image = image_rows(*this, current.modules.back(), level - 1);
      if (level == d) {
        if (contains_all(first, image, field_)) out.push_back(current);
        return;
      }
      for (const Subspace& s : middle) {
        if (!contains_all(s, image, field_)) continue;
        current.modules.push_back(s);
        extend(level + 1);
        current.modules.pop_back();
      }
    };
    extend(1);
    return out;
  }
  std::function<void(int)> extend = [&](int level) {
    if (level > d) {
      out.push_back(current);
      return;
    }
    const Subspace image = image_rows(*this, current.modules.back(), level - 1);
    for (const Subspace& s : level == d ? last : middle) {
      if (!contains_all(s, image, field_)) continue;
      current.modules.push_back(s);
      extend(level + 1);
      current.modules.pop_back();
    }
  };
  extend(1);
  return out;
}

std::vector<LatticeChain> LatticeModel::enumerate_impl(long double budget, bool parallel) const {
  check_budget(budget);
  std::vector<LatticeChain> out;
  if (p_.model == ModelKind::Grass) {
    const bool lagrangian = p_.kind == GroupKind::GSp;
    for (int dim : module_dims())
      for (Subspace& s : t_stable_subspaces(dim, lagrangian)) out.push_back(LatticeChain{{std::move(s)}});
    return out;
  }
  for (int dim : module_dims()) {
    std::vector<Subspace> middle = t_stable_subspaces(dim, false);
    std::vector<Subspace> ends = p_.kind == GroupKind::GSp ? t_stable_subspaces(dim, true) : middle;
    const auto count = static_cast<std::ptrdiff_t>(ends.size());
    std::vector<std::vector<LatticeChain>> per_start(ends.size());
    if (parallel) {
      IWAHORI_OMP_PARALLEL
      {
        IWAHORI_OMP_FOR_DYNAMIC
        for (std::ptrdiff_t i = 0; i < count; ++i) {
          per_start[static_cast<std::size_t>(i)] = chains_from(ends[static_cast<std::size_t>(i)], middle, ends);
        }
      }
    } else {
      for (std::ptrdiff_t i = 0; i < count; ++i)
        per_start[static_cast<std::size_t>(i)] = chains_from(ends[static_cast<std::size_t>(i)], middle, ends);
    }
    for (auto& chunk : per_start)
      for (auto& chain : chunk) out.push_back(std::move(chain));
  }
  return out;
}

std::vector<LatticeChain> LatticeModel::enumerate_points(long double budget) const {
  return enumerate_impl(budget, true);
}

std::vector<LatticeChain> LatticeModel::enumerate_points_serial(long double budget) const {
  return enumerate_impl(budget, false);
}

// ------------------------------------------------------------- group action

namespace {

PolyMatrix identity_matrix(int n, int terms) {
  PolyMatrix g;
  g.n = n;
  g.terms = terms;
  g.data.assign(static_cast<std::size_t>(n) * n * terms, 0);
  for (int a = 0; a < n; ++a) g.at(a, a, 0) = 1;
  return g;
}

// Coefficients of (1 + c t^m)^-1 modulo t^terms.
std::vector<std::uint8_t> inverse_series(std::uint8_t c, int m, int terms, const FiniteField& f) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(terms), 0);
  std::uint8_t power = 1;
  const std::uint8_t step = f.neg(c);
  for (int e = 0; e < terms; e += m) {
    out[static_cast<std::size_t>(e)] = power;
    power = f.mul(power, step);
  }
  return out;
}

}  // namespace

void LatticeModel::build_generators() {
  const int N = p_.width();
  const int terms = N + 1;
  const FiniteField& f = field_;
  const int n = n_;
  const int d = p_.d;
  const bool gsp = p_.kind == GroupKind::GSp;
  std::vector<PolyMatrix> torus;

  auto push_diag = [&](std::vector<PolyMatrix>& list, const std::vector<std::pair<int, std::vector<std::uint8_t>>>& entries) {
    PolyMatrix g = identity_matrix(n, terms);
    for (const auto& [j, poly] : entries)
      for (int e = 0; e < terms; ++e) g.at(j, j, e) = poly[static_cast<std::size_t>(e)];
    list.push_back(std::move(g));
  };
  auto constant = [&](std::uint8_t c) {
    std::vector<std::uint8_t> poly(static_cast<std::size_t>(terms), 0);
    poly[0] = c;
    return poly;
  };

  const std::uint8_t zeta = f.primitive();
  if (zeta != 1) {
    if (gsp) {
      for (int j = 0; j < d; ++j) push_diag(torus, {{j, constant(zeta)}, {n - 1 - j, constant(f.inv(zeta))}});
    } else {
      for (int j = 0; j < n; ++j) push_diag(torus, {{j, constant(zeta)}});
    }
  }
  if (gsp && zeta != 1) {
    std::vector<std::pair<int, std::vector<std::uint8_t>>> sim;
    for (int j = d; j < n; ++j) sim.emplace_back(j, constant(zeta));
    push_diag(torus, sim);
  }
  for (std::uint8_t c : f.additive_basis()) {
    for (int m = 1; m <= N; ++m) {
      std::vector<std::uint8_t> unit = constant(1);
      unit[static_cast<std::size_t>(m)] = c;
      if (gsp) {
        for (int j = 0; j < d; ++j) push_diag(torus, {{j, unit}, {n - 1 - j, inverse_series(c, m, terms, f)}});
      } else {
        for (int j = 0; j < n; ++j) push_diag(torus, {{j, unit}});
      }
    }
  }

  // Root elements 1 + c t^m X.
  auto omega = [&](int a, int b) { return b == n - 1 - a ? (a < d ? 1 : -1) : 0; };
  auto root_direction = [&](int a, int b) -> std::vector<std::tuple<int, int, int>> {
    if (!gsp) return {{a, b, 1}};
    if (b == n - 1 - a) return {{a, b, 1}};
    const int a2 = n - 1 - a, b2 = n - 1 - b;
    // pick eps with X^T Omega + Omega X = 0 for X = E_ab + eps E_{b2 a2}
    for (int eps : {1, -1}) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) {
          auto X = [&](int r, int c) { return (r == a && c == b ? 1 : 0) + (r == b2 && c == a2 ? eps : 0); };
          int value = 0;
          for (int z = 0; z < n; ++z) value += X(z, x) * omega(z, y) + omega(x, z) * X(z, y);
          if (value != 0) ok = false;
        }
      if (ok) return {{a, b, 1}, {b2, a2, eps}};
    }
    throw std::logic_error("no symplectic root element");
  };

  std::vector<PolyMatrix> iwahori_roots, maximal_roots;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (gsp && b != n - 1 - a) {
        const std::pair<int, int> mirror{n - 1 - b, n - 1 - a};
        if (mirror < std::make_pair(a, b)) continue;
      }
      const auto dir = root_direction(a, b);
      for (std::uint8_t c : f.additive_basis()) {
        for (int m = 0; m <= N; ++m) {
          PolyMatrix g = identity_matrix(n, terms);
          for (const auto& [r, col, sign] : dir) g.at(r, col, m) = f.mul(c, f.from_int(sign));
          if (a < b || m >= 1) iwahori_roots.push_back(g);
          maximal_roots.push_back(std::move(g));
        }
      }
    }
  }
  iwahori_gens_ = torus;
  iwahori_gens_.insert(iwahori_gens_.end(), iwahori_roots.begin(), iwahori_roots.end());
  maximal_gens_ = torus;
  maximal_gens_.insert(maximal_gens_.end(), maximal_roots.begin(), maximal_roots.end());
}

bool LatticeModel::is_group_element(const PolyMatrix& g) const {
  const FiniteField& f = field_;
  const int n = g.n, terms = g.terms;
  if (p_.kind == GroupKind::GL) {
    std::vector<std::vector<std::uint8_t>> constant(static_cast<std::size_t>(n), std::vector<std::uint8_t>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) constant[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.at(a, b, 0);
    return row_reduce(constant, n, f).dim() == n;
  }
  // g^T Omega g == s Omega with s a nonzero constant
  auto omega = [&](int a, int b) -> std::uint8_t {
    if (b != n - 1 - a) return 0;
    return a < p_.d ? 1 : f.neg(1);
  };
  std::uint8_t s = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int e = 0; e < terms; ++e) {
        std::uint8_t value = 0;
        for (int x = 0; x < n; ++x) {
          const int y = n - 1 - x;
          const std::uint8_t w = omega(x, y);
          for (int e1 = 0; e1 <= e; ++e1)
            value = f.add(value, f.mul(w, f.mul(g.at(x, a, e1), g.at(y, b, e - e1))));
        }
        if (e == 0 && b == n - 1 - a && a == 0) s = value;
        const std::uint8_t expected = e == 0 ? f.mul(s, omega(a, b)) : 0;
        if (a == 0 && b == n - 1) continue;
        if (value != expected) return false;
      }
    }
  }
  return s != 0;
}

Subspace LatticeModel::act(const PolyMatrix& g, int level, const Subspace& s) const {
  const int N = p_.width();
  const int terms = N + 1;
  const FiniteField& f = field_;
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::uint8_t> embedded(static_cast<std::size_t>(n_) * terms);
  std::vector<std::uint8_t> image(embedded.size());
  for (int i = 0; i < s.dim(); ++i) {
    std::fill(embedded.begin(), embedded.end(), 0);
    const std::uint8_t* v = s.row(i);
    for (int j = 0; j < n_; ++j) {
      const int offset = j < level ? 0 : 1;
      for (int k = 0; k < N; ++k) embedded[static_cast<std::size_t>(j * terms + k + offset)] = v[j * N + k];
    }
    std::fill(image.begin(), image.end(), 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int e1 = 0; e1 < terms; ++e1) {
          const std::uint8_t coef = g.at(a, b, e1);
          if (coef == 0) continue;
          for (int e2 = 0; e1 + e2 < terms; ++e2) {
            auto& slot = image[static_cast<std::size_t>(a * terms + e1 + e2)];
            slot = f.add(slot, f.mul(coef, embedded[static_cast<std::size_t>(b * terms + e2)]));
          }
        }
    std::vector<std::uint8_t> local(static_cast<std::size_t>(m_), 0);
    for (int j = 0; j < n_; ++j) {
      const int offset = j < level ? 0 : 1;
      if (offset == 1 && image[static_cast<std::size_t>(j * terms)] != 0) {
        throw std::logic_error("group element does not preserve the lattice chain");
      }
      for (int k = 0; k < N; ++k) local[static_cast<std::size_t>(j * N + k)] = image[static_cast<std::size_t>(j * terms + k + offset)];
    }
    rows.push_back(std::move(local));
  }
  return row_reduce(rows, m_, f);
}

LatticeChain LatticeModel::act(const PolyMatrix& g, const LatticeChain& chain) const {
  LatticeChain out;
  for (std::size_t i = 0; i < chain.modules.size(); ++i) out.modules.push_back(act(g, static_cast<int>(i), chain.modules[i]));
  return out;
}

namespace {

std::string chain_key(const LatticeChain& chain) {
  std::string key;
  for (const Subspace& s : chain.modules) {
    key.push_back(static_cast<char>(s.dim()));
    key.append(s.data().begin(), s.data().end());
  }
  return key;
}

std::vector<std::vector<std::size_t>> orbits_under(const LatticeModel& model, const std::vector<LatticeChain>& points,
                                                   const std::vector<PolyMatrix>& gens) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(points.size() * 2);
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(chain_key(points[i]), i);
  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const PolyMatrix& g : gens) {
      auto it = index.find(chain_key(model.act(g, points[i])));
      if (it == index.end()) throw std::logic_error("group action left the enumerated point set");
      std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < points.size(); ++i) grouped[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : grouped) out.push_back(std::move(members));
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> LatticeModel::stratify(const std::vector<LatticeChain>& points) const {
  return orbits_under(*this, points, p_.model == ModelKind::Grass ? maximal_gens_ : iwahori_gens_);
}

std::vector<std::vector<std::size_t>> LatticeModel::iwahori_orbits_on_grass(const std::vector<LatticeChain>& grass_points) const {
  return orbits_under(*this, grass_points, iwahori_gens_);
}

// --------------------------------------------------------- combinatorics side

std::vector<Coweight> lambda_set_fixed(int n_minus, int n_plus, int r, const RootDatum& rd) {
  std::vector<Coweight> out;
  for (Coweight& lambda : lambda_set(n_minus, n_plus, rd))
    if (rd.central_coordinate(lambda) == r) out.push_back(std::move(lambda));
  return out;
}

namespace {

std::int64_t int_power(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) throw std::overflow_error("point count overflow");
  }
  return out;
}

}  // namespace

std::int64_t predicted_count(const std::vector<AffineWeylElement>& wset, const AffineWeylGroup& g, int q) {
  std::int64_t total = 0;
  for (const AffineWeylElement& w : wset) total += int_power(q, g.length(w));
  return total;
}

std::vector<AffineWeylElement> candidate_set(const LatticeModelParams& p, const AffineWeylGroup& g) {
  p.validate();
  const RootDatum& rd = g.datum();
  std::vector<Coweight> lambdas;
  if (p.kind == GroupKind::GL && p.r && p.model != ModelKind::N) {
    lambdas = lambda_set_fixed(p.n_minus, p.n_plus, *p.r, rd);
  } else {
    lambdas = lambda_set(p.n_minus, p.n_plus, rd);
  }
  std::set<AffineWeylElement> out;
  for (const Coweight& lambda : lambdas)
    for (const AffineWeylElement& x : g.admissible_set(lambda)) out.insert(x);
  return {out.begin(), out.end()};
}

std::int64_t grass_orbit_size(const Coweight& lambda, const AffineWeylGroup& g, int q) {
  std::map<Coweight, int> min_length;
  for (const AffineWeylElement& x : g.double_coset(lambda)) {
    const Coweight nu = g.translation_part(x);
    const int len = g.length(x);
    auto [it, inserted] = min_length.emplace(nu, len);
    if (!inserted) it->second = std::min(it->second, len);
  }
  std::int64_t total = 0;
  for (const auto& [nu, len] : min_length) total += int_power(q, len);
  return total;
}

StrataReport compare_sizes(std::vector<std::int64_t> orbit_sizes, std::vector<std::int64_t> predicted) {
  StrataReport report;
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  std::sort(predicted.begin(), predicted.end());
  report.total_points = std::accumulate(orbit_sizes.begin(), orbit_sizes.end(), std::int64_t{0});
  report.predicted_total = std::accumulate(predicted.begin(), predicted.end(), std::int64_t{0});
  report.match = orbit_sizes == predicted;
  report.orbit_sizes = std::move(orbit_sizes);
  report.predicted_sizes = std::move(predicted);
  return report;
}

StrataReport match_strata(const std::vector<std::vector<std::size_t>>& orbits,
                          const std::vector<AffineWeylElement>& candidate, const AffineWeylGroup& g, int q) {
  std::vector<std::int64_t> sizes, predicted;
  for (const auto& o : orbits) sizes.push_back(static_cast<std::int64_t>(o.size()));
  for (const AffineWeylElement& w : candidate) predicted.push_back(int_power(q, g.length(w)));
  return compare_sizes(std::move(sizes), std::move(predicted));
}

StrataReport match_grass_strata(const std::vector<std::vector<std::size_t>>& orbits, const LatticeModelParams& p,
                                const AffineWeylGroup& g) {
  const RootDatum& rd = g.datum();
  const std::vector<Coweight> lambdas = (p.kind == GroupKind::GL && p.r)
                                            ? lambda_set_fixed(p.n_minus, p.n_plus, *p.r, rd)
                                            : lambda_set(p.n_minus, p.n_plus, rd);
  std::vector<std::int64_t> sizes, predicted;
  for (const auto& o : orbits) sizes.push_back(static_cast<std::int64_t>(o.size()));
  for (const Coweight& lambda : lambdas) predicted.push_back(grass_orbit_size(lambda, g, p.q));
  return compare_sizes(std::move(sizes), std::move(predicted));
}

std::vector<FiberEntry> fiber_profile(const LatticeModel& model, const std::vector<LatticeChain>& points,
                                      long double budget) {
  LatticeModelParams grass_params = model.params();
  if (grass_params.model == ModelKind::Grass) throw InvalidInput("fiber profile needs model M or N");
  if (grass_params.model == ModelKind::N) grass_params.r.reset();
  grass_params.model = ModelKind::Grass;
  const LatticeModel grass(grass_params);
  const std::vector<LatticeChain> grass_points = grass.enumerate_points(budget);
  std::map<Subspace, std::int64_t> fibre;
  for (const LatticeChain& chain : points) ++fibre[chain.modules.front()];
  std::vector<FiberEntry> out;
  for (const auto& orbit : grass.iwahori_orbits_on_grass(grass_points)) {
    auto size_at = [&](std::size_t i) {
      auto it = fibre.find(grass_points[i].modules.front());
      return it == fibre.end() ? std::int64_t{0} : it->second;
    };
    const std::int64_t size = size_at(orbit.front());
    for (std::size_t i : orbit)
      if (size_at(i) != size) throw VerificationFailure("fibre size is not constant along an Iwahori orbit");
    if (size != 0) out.push_back({static_cast<std::int64_t>(orbit.size()), size});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiberEntry> fiber_profile_from_hecke(const HeckeAlgebra& algebra,
                                                 const std::vector<AffineWeylElement>& candidate, int q) {
  const AffineWeylGroup& g = algebra.group();
  HeckeElement f, e_k;
  for (const AffineWeylElement& x : candidate) f.add(x, Laurent(1));
  for (const Permutation& w : g.datum().weyl_group()) e_k.add(g.finite(w), Laurent(1));
  const HeckeElement averaged = algebra.multiply(f, e_k);
  struct Coset {
    Laurent value;
    int min_length;
    std::size_t members;
  };
  std::map<Coweight, Coset> cosets;
  for (const auto& [y, c] : averaged.terms()) {
    const Coweight nu = g.translation_part(y);
    auto [it, inserted] = cosets.emplace(nu, Coset{c, g.length(y), 1});
    if (inserted) continue;
    if (it->second.value != c) throw VerificationFailure("averaged function is not right K-invariant");
    it->second.min_length = std::min(it->second.min_length, g.length(y));
    ++it->second.members;
  }
  const std::size_t coset_size = g.datum().weyl_group().size();
  std::vector<FiberEntry> out;
  for (const auto& [nu, coset] : cosets) {
    if (coset.members != coset_size) throw VerificationFailure("averaged function is not right K-invariant");
    out.push_back({int_power(q, coset.min_length), coset.value.evaluate_q(q)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace iwahori

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "iwahori/bernstein.hpp"
#include "iwahori/characters.hpp"
#include "iwahori/lattice_models.hpp"
#include "iwahori/spherical.hpp"

using namespace iwahori;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& detail, double secs) {
  std::printf("CRITERION %d: %s  %s  [%.2f s]\n", id, pass ? "PASS" : "FAIL", detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct Stack {
  std::shared_ptr<const HeckeAlgebra> algebra;
  std::shared_ptr<const Bernstein> bernstein;
  std::shared_ptr<const Spherical> spherical;
  explicit Stack(const RootDatum& rd)
      : algebra(std::make_shared<const HeckeAlgebra>(rd)),
        bernstein(std::make_shared<const Bernstein>(algebra)),
        spherical(std::make_shared<const Spherical>(bernstein)) {}
  const AffineWeylGroup& group() const { return algebra->group(); }
  const RootDatum& datum() const { return algebra->datum(); }
};

// Dominant coweights with 2<rho, lambda> <= bound, normalized: last entry 0
// for GL, similitude 0 or 1 for GSp.
std::vector<Coweight> normalized_dominant(const RootDatum& rd, int bound) {
  std::vector<Coweight> out;
  const int d = rd.rank();
  std::vector<int> half(static_cast<std::size_t>(d), 0);
  std::function<void(int)> fill = [&](int i) {
    if (i == d) {
      if (rd.kind() == GroupKind::GL) {
        Coweight lambda(half);
        if (half.back() == 0 && is_dominant(lambda, rd) && rho_pairing_twice(lambda, rd) <= bound) out.push_back(lambda);
        return;
      }
      for (int c : {0, 1}) {
        Coweight lambda = rd.complete(half, c);
        if (is_dominant(lambda, rd) && rho_pairing_twice(lambda, rd) <= bound) out.push_back(lambda);
      }
      return;
    }
    for (int x = 0; x <= bound; ++x) {
      half[static_cast<std::size_t>(i)] = x;
      fill(i + 1);
    }
  };
  fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Semistandard tableaux of shape lambda and content mu (both non-negative).
std::int64_t kostka(const std::vector<int>& shape, const std::vector<int>& content) {
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), -1);
  std::vector<int> left = content;
  std::int64_t count = 0;
  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
    if (r == shape.size()) {
      ++count;
      return;
    }
    if (c == shape[r]) return fill(r + 1, 0);
    for (int x = 0; x < static_cast<int>(content.size()); ++x) {
      if (left[static_cast<std::size_t>(x)] == 0) continue;
      if (c > 0 && t[r][static_cast<std::size_t>(c - 1)] > x) continue;
      if (r > 0 && t[r - 1][static_cast<std::size_t>(c)] >= x) continue;
      --left[static_cast<std::size_t>(x)];
      t[r][static_cast<std::size_t>(c)] = x;
      fill(r, c + 1);
      ++left[static_cast<std::size_t>(x)];
    }
  };
  fill(0, 0);
  return count;
}

std::int64_t kostka_gl(const Coweight& lambda, const Coweight& mu) {
  const int shift = -lambda[lambda.size() - 1];
  std::vector<int> shape, content;
  for (int x : lambda.entries())
    if (x + shift > 0) shape.push_back(x + shift);
  for (int x : mu.entries()) content.push_back(x + shift);
  return kostka(shape, content);
}

std::int64_t weyl_dimension(const Coweight& lambda, const RootDatum& rd) {
  long double num = 1, den = 1;
  for (const RootPair& a : rd.positive_roots()) {
    const int rho2 = rd.pairing(rd.two_rho_vee(), a);
    num *= 2 * rd.pairing(lambda, a) + rho2;
    den *= rho2;
  }
  return static_cast<std::int64_t>(num / den + 0.5L);
}

// Group-algebra product by multiplying every pair of group elements.
GroupAlgebraElement convolve(const AffineWeylGroup& g, const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out[g.multiply(x, y)] += cx * cy;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

GroupAlgebraElement finite_sum(const AffineWeylGroup& g) {
  GroupAlgebraElement out;
  for (const auto& w : g.datum().weyl_group()) out[g.finite(w)] = 1;
  return out;
}

GroupAlgebraElement coset_indicator(const AffineWeylGroup& g, const Coweight& mu) {
  GroupAlgebraElement out;
  for (const auto& u : g.datum().weyl_group())
    for (const auto& v : g.datum().weyl_group()) out[g.multiply(g.multiply(g.finite(u), g.translation(mu)), g.finite(v))] = 1;
  return out;
}

std::vector<std::pair<GroupKind, int>> triangle_groups() { return {{GroupKind::GL, 2}, {GroupKind::GL, 3}, {GroupKind::GSp, 2}}; }

void criterion1() {
  const auto start = Clock::now();
  AffineWeylGroup g(RootDatum::build(GroupKind::GL, 4));
  const std::size_t n = g.admissible_set({1, 1, 0, 0}).size();
  const double t = seconds_since(start);
  report(1, n == 33 && t < 5.0, "|Adm((1,1,0,0))| = " + std::to_string(n) + " for GL(4)", t);
}

void criterion2_and_10a(std::vector<std::string>& v1_failures, int& v1_checked) {
  const auto start = Clock::now();
  int checked = 0, held = 0;
  std::vector<std::pair<GroupKind, Coweight>> cases;
  for (int d = 1; d <= 4; ++d)
    for (int r = 0; r <= d; ++r) {
      std::vector<int> mu(static_cast<std::size_t>(d), 0);
      for (int i = 0; i < r; ++i) mu[static_cast<std::size_t>(i)] = 1;
      cases.emplace_back(GroupKind::GL, Coweight(mu));
    }
  for (int d : {2, 3}) {
    const auto rd = RootDatum::build(GroupKind::GSp, d);
    cases.emplace_back(GroupKind::GSp, rd.complete(std::vector<int>(static_cast<std::size_t>(d), 1), 1));
  }
  for (const auto& [kind, mu] : cases) {
    const int d = kind == GroupKind::GL ? mu.size() : mu.size() / 2;
    Stack s(RootDatum::build(kind, d));
    const MinusculeCheck check = s.spherical->verify_minuscule_identity(mu);
    ++checked;
    held += check.holds ? 1 : 0;

    // v -> 1: lhs specializes to the indicator of W_0 t^mu W_0, and so does
    // (orbit sum of t^mu') * (sum of W_0) computed by coset enumeration.
    const AffineWeylGroup& g = s.group();
    GroupAlgebraElement orbit;
    for (const auto& conj : weyl_orbit(mu, s.datum())) orbit[g.translation(conj)] = 1;
    const GroupAlgebraElement indicator = coset_indicator(g, mu);
    ++v1_checked;
    if (!(s.algebra->specialize_at_one(check.lhs) == indicator) || !(convolve(g, orbit, finite_sum(g)) == indicator))
      v1_failures.push_back("minuscule " + to_string(kind) + " " + mu.str());
  }
  const double t = seconds_since(start);
  report(2, held == checked && t < 60.0,
         std::to_string(held) + "/" + std::to_string(checked) + " minuscule identities hold (GL(1..4), GSp(4), GSp(6))", t);
}

void criterion3() {
  const auto start = Clock::now();
  int checked = 0, central = 0;
  for (const auto& [kind, d] : triangle_groups()) {
    Stack s(RootDatum::build(kind, d));
    for (const Coweight& lambda : normalized_dominant(s.datum(), 6)) {
      ++checked;
      central += s.algebra->is_central(s.bernstein->z(lambda)) ? 1 : 0;
    }
  }
  const double t = seconds_since(start);
  report(3, central == checked && t < 120.0,
         std::to_string(central) + "/" + std::to_string(checked) + " z_lambda central (2<rho,lambda> <= 6; GL(2), GL(3), GSp(4))", t);
}

void criterion4() {
  const auto start = Clock::now();
  int checked = 0, held = 0;
  for (const auto& [kind, d] : triangle_groups()) {
    Stack s(RootDatum::build(kind, d));
    const RootDatum& rd = s.datum();
    const auto weights = normalized_dominant(rd, 6);
    for (std::size_t i = 0; i < weights.size(); ++i)
      for (std::size_t j = i; j < weights.size(); ++j) {
        const Coweight& l = weights[i];
        const Coweight& m = weights[j];
        if (rho_pairing_twice(l + m, rd) > 6 || (l.is_zero() || m.is_zero())) continue;
        HeckeElement rhs;
        for (const auto& [nu, c] : decompose_product(l, m, rd)) rhs += s.bernstein->bern_of_character(nu).scaled(Laurent(c));
        const HeckeElement lhs = s.algebra->multiply(s.bernstein->bern_of_character(l), s.bernstein->bern_of_character(m));
        ++checked;
        held += lhs == rhs ? 1 : 0;
      }
  }
  report(4, held == checked && checked >= 10,
         std::to_string(held) + "/" + std::to_string(checked) + " pairs satisfy Bern(chi_l) Bern(chi_m) = sum c_nu Bern(chi_nu)",
         seconds_since(start));
}

void criterion5_and_10b(std::vector<std::string>& v1_failures, int& v1_checked) {
  const auto start = Clock::now();
  int checked = 0, ok = 0;
  for (const auto& [kind, d] : triangle_groups()) {
    Stack s(RootDatum::build(kind, d));
    const RootDatum& rd = s.datum();
    const AffineWeylGroup& g = s.group();
    for (const Coweight& mu : normalized_dominant(rd, 4)) {
      const TriangleRow row = s.spherical->triangle_row(mu);
      ++checked;
      ok += row.residual_zero && row.triangular && row.diagonal_ok ? 1 : 0;

      // v -> 1: F = Bern(chi_mu) e_K specializes to (sum_mu' m(mu') t^mu') * (sum of W_0),
      // and to sum_nu C_{mu nu}(1) 1_{W_0 t^nu W_0}.
      const HeckeElement f = s.spherical->star_IK(s.bernstein->bern_of_character(mu));
      GroupAlgebraElement weights;
      for (const auto& [w, m] : character(mu, rd)) weights[g.translation(w)] = m;
      GroupAlgebraElement from_rows;
      for (const auto& [nu, c] : row.entries)
        for (const auto& [x, one] : coset_indicator(g, nu)) from_rows[x] += c.at_one() * one;
      for (auto it = from_rows.begin(); it != from_rows.end();) it = it->second == 0 ? from_rows.erase(it) : std::next(it);
      const GroupAlgebraElement special = s.algebra->specialize_at_one(f);
      ++v1_checked;
      if (!(special == convolve(g, weights, finite_sum(g))) || !(special == from_rows))
        v1_failures.push_back("triangle " + to_string(kind) + " " + mu.str());
    }
  }
  report(5, ok == checked,
         std::to_string(ok) + "/" + std::to_string(checked) + " triangle rows triangular with diagonal v^-l(t^mu) and zero residual",
         seconds_since(start));
}

void criterion6() {
  const auto start = Clock::now();
  const auto gl3 = RootDatum::build(GroupKind::GL, 3);
  const std::int64_t k = kostka_gl({2, 1, 0}, {1, 1, 1});
  bool ok = k == 2 && weight_multiplicity({2, 1, 0}, {1, 1, 1}, gl3) == 2;
  int checked = 0, held = 0;
  for (const auto& [kind, d] : triangle_groups()) {
    Stack s(RootDatum::build(kind, d));
    const RootDatum& rd = s.datum();
    for (const Coweight& lambda : normalized_dominant(rd, 4)) {
      const auto mults = dominant_multiplicities(lambda, rd);
      bool oracle_ok = true;
      if (kind == GroupKind::GL) {
        for (const auto& [mu, m] : mults) oracle_ok = oracle_ok && m == kostka_gl(lambda, mu);
      } else {
        std::int64_t dim = 0;
        for (const auto& [mu, m] : mults) dim += m * static_cast<std::int64_t>(weyl_orbit(mu, rd).size());
        oracle_ok = dim == weyl_dimension(lambda, rd);
      }
      const int pairing = rho_pairing_twice(lambda, rd);
      HeckeElement expected;
      for (const auto& [mu, m] : mults) expected += s.bernstein->z(mu).scaled(Laurent(pairing % 2 == 0 ? m : -m));
      ++checked;
      held += oracle_ok && s.bernstein->theorem11_rhs(lambda) == expected ? 1 : 0;
    }
  }
  ok = ok && held == checked;
  report(6, ok,
         "m_(2,1,0)((1,1,1)) = " + std::to_string(k) + " by tableaux; " + std::to_string(held) + "/" + std::to_string(checked) +
             " theorem11_rhs = (-1)^{2<rho,lambda>} sum m z",
         seconds_since(start));
}

void criterion7() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  AffineWeylGroup g(RootDatum::build(GroupKind::GL, 2));
  for (int q : {2, 3}) {
    LatticeModelParams p;
    p.d = 2;
    p.r = 1;
    p.q = q;
    LatticeModel m(p);
    const auto pts = m.enumerate_points(default_budget());
    std::vector<std::size_t> sizes;
    for (const auto& o : m.stratify(pts)) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    const std::int64_t predicted = predicted_count(g.admissible_set({1, 0}), g, q);
    const auto qs = static_cast<std::size_t>(q);
    ok = ok && static_cast<std::int64_t>(pts.size()) == 2 * q + 1 && predicted == 2 * q + 1 &&
         sizes == std::vector<std::size_t>{1, qs, qs};
    detail += "q=" + std::to_string(q) + ": |M|=" + std::to_string(pts.size()) + " predicted=" + std::to_string(predicted) + "; ";
  }
  const double t = seconds_since(start);
  report(7, ok && t < 10.0, detail + "orbit sizes {q,q,1}", t);
}

void criterion8() {
  const auto start = Clock::now();
  int checked = 0, matched = 0;
  std::string bad;
  for (int d = 1; d <= 2; ++d) {
    AffineWeylGroup g(RootDatum::build(GroupKind::GL, d));
    for (int nm = -2; nm <= 0; ++nm)
      for (int np = 1; np - nm <= 2; ++np)
        for (int r = d * nm; r <= d * np; ++r) {
          LatticeModelParams p;
          p.d = d;
          p.r = r;
          p.n_minus = nm;
          p.n_plus = np;
          p.q = 2;
          LatticeModel m(p);
          const auto orbits = m.stratify(m.enumerate_points(default_budget()));
          const StrataReport rep = match_strata(orbits, candidate_set(p, g), g, 2);
          ++checked;
          if (rep.verdict() == "match") {
            ++matched;
          } else {
            bad += " d=" + std::to_string(d) + ",(" + std::to_string(nm) + "," + std::to_string(np) + "),r=" + std::to_string(r);
          }
        }
  }
  const double t = seconds_since(start);
  report(8, matched == checked && t < 600.0,
         std::to_string(matched) + "/" + std::to_string(checked) + " GL parameter sets match (d <= 2, n+ - n- <= 2, q = 2)" + bad, t);
}

void criterion9() {
  const auto start = Clock::now();
  std::mt19937 gen(9u);
  std::uniform_int_distribution<int> entry(0, 3);
  int checked = 0, held = 0;
  for (auto [kind, d] : std::vector<std::pair<GroupKind, int>>{
           {GroupKind::GL, 2}, {GroupKind::GL, 3}, {GroupKind::GL, 4}, {GroupKind::GSp, 2}, {GroupKind::GSp, 3}}) {
    const auto rd = RootDatum::build(kind, d);
    AffineWeylGroup g(rd);
    for (int i = 0; i < 100; ++i) {
      std::vector<int> half(static_cast<std::size_t>(d));
      for (int& x : half) x = entry(gen);
      std::sort(half.rbegin(), half.rend());
      Coweight lambda(half);
      if (kind == GroupKind::GSp) {
        // similitude 1 stays dominant only when the smallest half entry is positive
        lambda = rd.complete(half, half.back() >= 1 ? static_cast<int>(gen() % 2) : 0);
      }
      ++checked;
      held += is_dominant(lambda, rd) && g.length(g.translation(lambda)) == rho_pairing_twice(lambda, rd) ? 1 : 0;
    }
  }
  report(9, held == checked, std::to_string(held) + "/" + std::to_string(checked) + " random dominant lambda with l(t^lambda) = 2<rho,lambda>",
         seconds_since(start));
}

}  // namespace

int main() {
  const auto start = Clock::now();
  std::vector<std::string> v1_failures;
  int v1_checked = 0;
  criterion1();
  criterion2_and_10a(v1_failures, v1_checked);
  criterion3();
  criterion4();
  criterion5_and_10b(v1_failures, v1_checked);
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::string detail = std::to_string(v1_checked - static_cast<int>(v1_failures.size())) + "/" +
                       std::to_string(v1_checked) + " identities from criteria 2 and 5 hold at v = 1 by coset enumeration";
  for (const auto& f : v1_failures) detail += "; failed: " + f;
  report(10, v1_failures.empty(), detail, 0.0);
  std::printf("SUMMARY: %d failing criteria, total %.2f s\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}

#include "toric/linear_feasibility.hpp"

#include <set>
#include <utility>

namespace toric {

namespace {

void check_shape(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw DomainError("feasibility: row count does not match right-hand side");
}

// Inequality coef . x <= rhs.
struct Inequality {
  RatVector coef;
  Rational rhs;

  bool operator<(const Inequality& o) const {
    if (coef != o.coef) return coef < o.coef;
    return rhs < o.rhs;
  }
};

// Scale so the first nonzero coefficient has absolute value one; keeps the
// dedup set small during elimination.
Inequality normalized(Inequality q) {
  for (const auto& c : q.coef) {
    if (c == 0) continue;
    Rational s = abs(c);
    for (auto& x : q.coef) x /= s;
    q.rhs /= s;
    break;
  }
  return q;
}

}  // namespace

bool has_nonnegative_solution_simplex(const RatMatrix& a, const RatVector& b) {
  check_shape(a, b);
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  if (m == 0) return true;

  // Tableau [a | I | rhs] with artificial basis.
  const std::size_t width = k + m;
  RatMatrix t(m, width);
  RatVector rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < k; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    t(i, k + i) = 1;
    rhs[i] = flip ? Rational(-b[i]) : b[i];
    basis[i] = k + i;
  }
  auto cost = [k](std::size_t j) { return j >= k ? 1 : 0; };

  for (;;) {
    std::size_t entering = width;
    for (std::size_t j = 0; j < width && entering == width; ++j) {
      Rational reduced = cost(j);
      for (std::size_t i = 0; i < m; ++i)
        if (cost(basis[i])) reduced -= t(i, j);
      if (reduced < 0) entering = j;
    }
    if (entering == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, entering) <= 0) continue;
      Rational ratio = rhs[i] / t(i, entering);
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw InvariantError("phase-one simplex reported unbounded");

    Rational pivot = t(leave, entering);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) /= pivot;
    rhs[leave] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t(i, entering) == 0) continue;
      Rational f = t(i, entering);
      for (std::size_t j = 0; j < width; ++j) t(i, j) -= f * t(leave, j);
      rhs[i] -= f * rhs[leave];
    }
    basis[leave] = entering;
  }

  Rational objective = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (cost(basis[i])) objective += rhs[i];
  return objective == 0;
}

bool has_nonnegative_solution_fm(const RatMatrix& a, const RatVector& b) {
  check_shape(a, b);
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();

  // Reduced row echelon form of [a | b].
  RatMatrix e(m, k + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) e(i, j) = a(i, j);
    e(i, k) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < m; ++c) {
    std::size_t p = r;
    while (p < m && e(p, c) == 0) ++p;
    if (p == m) continue;
    e.swap_rows(r, p);
    Rational pv = e(r, c);
    for (std::size_t j = 0; j <= k; ++j) e(r, j) /= pv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || e(i, c) == 0) continue;
      Rational f = e(i, c);
      for (std::size_t j = 0; j <= k; ++j) e(i, j) -= f * e(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (e(i, k) != 0) return false;

  std::vector<bool> is_pivot(k, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < k; ++j)
    if (!is_pivot[j]) free_vars.push_back(j);
  const std::size_t f = free_vars.size();

  std::set<Inequality> system;
  for (std::size_t i = 0; i < r; ++i) {
    // x_pivot = rhs - sum coef * x_free >= 0
    Inequality q{RatVector(f), e(i, k)};
    for (std::size_t v = 0; v < f; ++v) q.coef[v] = e(i, free_vars[v]);
    system.insert(normalized(q));
  }
  for (std::size_t v = 0; v < f; ++v) {
    Inequality q{RatVector(f), 0};
    q.coef[v] = -1;
    system.insert(q);
  }

  for (std::size_t v = 0; v < f; ++v) {
    std::vector<Inequality> pos, neg;
    std::set<Inequality> next;
    for (const auto& q : system) {
      if (q.coef[v] > 0)
        pos.push_back(q);
      else if (q.coef[v] < 0)
        neg.push_back(q);
      else
        next.insert(q);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Rational sp = p.coef[v];
        Rational sn = -n.coef[v];
        Inequality q{RatVector(f), p.rhs / sp + n.rhs / sn};
        for (std::size_t j = 0; j < f; ++j) q.coef[j] = p.coef[j] / sp + n.coef[j] / sn;
        q.coef[v] = 0;
        next.insert(normalized(q));
      }
    system = std::move(next);
  }
  for (const auto& q : system)
    if (q.rhs < 0) return false;
  return true;
}

bool in_cone(const std::vector<IntVector>& generators, const IntVector& target,
             FeasibilityMethod method) {
  const std::size_t n = target.size();
  RatMatrix a(n, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != n) throw DomainError("in_cone: generator length mismatch");
    for (std::size_t i = 0; i < n; ++i) a(i, j) = generators[j][i];
  }
  RatVector b = to_rational(target);
  if (method == FeasibilityMethod::automatic)
    method = generators.size() <= kFourierMotzkinLimit ? FeasibilityMethod::fourier_motzkin
                                                       : FeasibilityMethod::simplex;
  return method == FeasibilityMethod::fourier_motzkin ? has_nonnegative_solution_fm(a, b)
                                                      : has_nonnegative_solution_simplex(a, b);
}

}  // namespace toric

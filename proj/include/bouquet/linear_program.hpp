#ifndef BOUQUET_LINEAR_PROGRAM_HPP
#define BOUQUET_LINEAR_PROGRAM_HPP

#include <bouquet/matrix.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bouquet {

enum class Sense { GE, LE, EQ };
enum class Objective { MIN, MAX };
enum class LPStatus { OPTIMAL, INFEASIBLE, UNBOUNDED };

// value_at(x) = linear_part . x + constant
struct AffineFunctional {
  Vector linear_part;
  Rational constant{0};

  Rational value_at(const Vector& x) const { return dot(linear_part, x) + constant; }
};

// Conjunction of conditions functional(x) >= 0 / <= 0 / == 0.
struct InequalitySystem {
  size_t dim = 0;
  std::vector<AffineFunctional> functionals;
  std::vector<Sense> senses;

  InequalitySystem() = default;
  explicit InequalitySystem(size_t d) : dim(d) {}

  void add(AffineFunctional f, Sense s) {
    functionals.push_back(std::move(f));
    senses.push_back(s);
  }

  bool satisfied_by(const Vector& x) const {
    for (size_t i = 0; i < functionals.size(); ++i) {
      const Rational v = functionals[i].value_at(x);
      if (senses[i] == Sense::GE && v < 0) return false;
      if (senses[i] == Sense::LE && v > 0) return false;
      if (senses[i] == Sense::EQ && v != 0) return false;
    }
    return true;
  }
};

struct LPOutcome {
  LPStatus status = LPStatus::INFEASIBLE;
  Rational value{0};  // optimal objective value when OPTIMAL
  Vector witness;     // optimal point when OPTIMAL; a vertex whenever one exists
  Vector ray;         // improving recession direction when UNBOUNDED
};

// True when moving along r never leaves the solution set.
inline bool is_recession_direction(const InequalitySystem& s, const Vector& r) {
  for (size_t i = 0; i < s.functionals.size(); ++i) {
    const Rational g = dot(s.functionals[i].linear_part, r);
    if (s.senses[i] == Sense::GE && g < 0) return false;
    if (s.senses[i] == Sense::LE && g > 0) return false;
    if (s.senses[i] == Sense::EQ && g != 0) return false;
  }
  return true;
}

namespace detail {

struct SimplexResult {
  LPStatus status = LPStatus::INFEASIBLE;
  Rational value{0};
  Vector x;
  Vector ray;
};

// Two-phase primal simplex with Bland's rule, exact arithmetic throughout.
// Free variables are split x = u - w; the u/w columns of one variable are
// negatives of each other, so a basis never contains both.
inline SimplexResult simplex_min(const InequalitySystem& s, const Vector& c) {
  const size_t d = s.dim;
  const size_t m0 = s.functionals.size();
  size_t num_slack = 0;
  for (const auto sense : s.senses)
    if (sense != Sense::EQ) ++num_slack;
  const size_t n_struct = 2 * d;  // u block then w block
  const size_t n_real = n_struct + num_slack;
  const size_t n_total = n_real + m0;  // artificial block last

  Matrix a(m0, Vector(n_total, Rational(0)));
  Vector b(m0, Rational(0));
  size_t slack_at = n_struct;
  for (size_t i = 0; i < m0; ++i) {
    const auto& f = s.functionals[i];
    for (size_t j = 0; j < d; ++j) {
      a[i][j] = f.linear_part[j];
      a[i][d + j] = -f.linear_part[j];
    }
    b[i] = -f.constant;
    if (s.senses[i] == Sense::GE)
      a[i][slack_at++] = -1;
    else if (s.senses[i] == Sense::LE)
      a[i][slack_at++] = 1;
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
    a[i][n_real + i] = 1;
  }

  std::vector<size_t> basis(m0);
  for (size_t i = 0; i < m0; ++i) basis[i] = n_real + i;

  Vector red(n_total, Rational(0));
  for (size_t j = n_real; j < n_total; ++j) red[j] = 1;
  for (size_t i = 0; i < m0; ++i)
    for (size_t j = 0; j < n_total; ++j) red[j] -= a[i][j];

  const auto pivot = [&](size_t r, size_t e) {
    const Rational p = a[r][e];
    for (auto& v : a[r]) v /= p;
    b[r] /= p;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][e] == 0) continue;
      const Rational f = a[i][e];
      for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    if (red[e] != 0) {
      const Rational f = red[e];
      for (size_t j = 0; j < red.size(); ++j) red[j] -= f * a[r][j];
    }
    basis[r] = e;
  };

  // Returns the entering column proving unboundedness, or n_total at optimum.
  const auto iterate = [&]() -> size_t {
    while (true) {
      size_t e = red.size();
      for (size_t j = 0; j < red.size(); ++j)
        if (red[j] < 0) {
          e = j;
          break;
        }
      if (e == red.size()) return n_total;
      size_t r = a.size();
      Rational best;
      for (size_t i = 0; i < a.size(); ++i) {
        if (a[i][e] <= 0) continue;
        const Rational ratio = b[i] / a[i][e];
        if (r == a.size() || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == a.size()) return e;
      pivot(r, e);
    }
  };

  if (iterate() != n_total)
    throw std::logic_error("phase-1 objective is bounded below by zero");
  Rational z1 = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (basis[i] >= n_real) z1 += b[i];
  if (z1 > 0) return {LPStatus::INFEASIBLE, Rational(0), {}, {}};

  // Drive artificial variables out of the basis; drop redundant rows.
  for (size_t i = 0; i < a.size();) {
    if (basis[i] < n_real) {
      ++i;
      continue;
    }
    size_t e = n_real;
    for (size_t j = 0; j < n_real; ++j)
      if (a[i][j] != 0) {
        e = j;
        break;
      }
    if (e == n_real) {
      a.erase(a.begin() + static_cast<long>(i));
      b.erase(b.begin() + static_cast<long>(i));
      basis.erase(basis.begin() + static_cast<long>(i));
      continue;
    }
    pivot(i, e);
    ++i;
  }
  for (auto& row : a) row.resize(n_real);

  Vector cost(n_real, Rational(0));
  for (size_t j = 0; j < d; ++j) {
    cost[j] = c[j];
    cost[d + j] = -c[j];
  }
  red = cost;
  for (size_t i = 0; i < a.size(); ++i) {
    if (cost[basis[i]] == 0) continue;
    const Rational f = cost[basis[i]];
    for (size_t j = 0; j < n_real; ++j) red[j] -= f * a[i][j];
  }

  const size_t entering = iterate();
  const auto value_of = [&](size_t col) -> Rational {
    for (size_t i = 0; i < a.size(); ++i)
      if (basis[i] == col) return b[i];
    return 0;
  };

  if (entering != n_total) {
    Vector dir(n_real, Rational(0));
    dir[entering] = 1;
    for (size_t i = 0; i < a.size(); ++i) dir[basis[i]] = -a[i][entering];
    Vector ray(d, Rational(0));
    for (size_t j = 0; j < d; ++j) ray[j] = dir[j] - dir[d + j];
    return {LPStatus::UNBOUNDED, Rational(0), {}, std::move(ray)};
  }

  Rational z = 0;
  for (size_t i = 0; i < a.size(); ++i) z += cost[basis[i]] * b[i];
  Vector x(d, Rational(0));
  for (size_t j = 0; j < d; ++j) x[j] = value_of(j) - value_of(d + j);
  return {LPStatus::OPTIMAL, std::move(z), std::move(x), {}};
}

}  // namespace detail

// Slide an optimal point to a vertex of its optimal face, when the face has
// one. level_row, if given, is a direction kept constant during the slide.
inline Vector purify_to_vertex(const InequalitySystem& s, const Vector* level_row, Vector x) {
  const size_t d = s.dim;
  for (size_t guard = 0; guard <= d + 1; ++guard) {
    Matrix active;
    if (level_row) active.push_back(*level_row);
    for (size_t i = 0; i < s.functionals.size(); ++i) {
      if (s.senses[i] == Sense::EQ || s.functionals[i].value_at(x) == 0)
        active.push_back(s.functionals[i].linear_part);
    }
    const auto kb = kernel_basis(active, d);
    if (kb.empty()) return x;
    const Vector& z = kb.front();

    bool plus_bounded = false, minus_bounded = false;
    Rational t_plus, t_minus;
    for (size_t i = 0; i < s.functionals.size(); ++i) {
      const Rational v = s.functionals[i].value_at(x);
      if (v == 0 || s.senses[i] == Sense::EQ) continue;  // active rows are orthogonal to z
      const Rational g = dot(s.functionals[i].linear_part, z);
      if (g == 0) continue;
      if (s.senses[i] == Sense::GE) {  // v > 0; need v + t*sg >= 0
        if (g < 0) {
          const Rational t = v / -g;
          if (!plus_bounded || t < t_plus) plus_bounded = true, t_plus = t;
        } else {
          const Rational t = v / g;
          if (!minus_bounded || t < t_minus) minus_bounded = true, t_minus = t;
        }
      } else {  // LE: v < 0; need v + t*sg <= 0
        if (g > 0) {
          const Rational t = -v / g;
          if (!plus_bounded || t < t_plus) plus_bounded = true, t_plus = t;
        } else {
          const Rational t = -v / -g;
          if (!minus_bounded || t < t_minus) minus_bounded = true, t_minus = t;
        }
      }
    }
    if (plus_bounded)
      for (size_t j = 0; j < d; ++j) x[j] += t_plus * z[j];
    else if (minus_bounded)
      for (size_t j = 0; j < d; ++j) x[j] -= t_minus * z[j];
    else
      return x;  // the set contains a whole line, no vertex exists
  }
  throw std::logic_error("vertex slide failed to terminate");
}

inline LPOutcome lp_solve(const InequalitySystem& s, const Vector& objective, Objective dir) {
  if (objective.size() != s.dim)
    throw std::invalid_argument("objective dimension mismatch");
  for (const auto& f : s.functionals)
    if (f.linear_part.size() != s.dim)
      throw std::invalid_argument("functional dimension mismatch");

  if (s.dim == 0) {
    for (size_t i = 0; i < s.functionals.size(); ++i) {
      const Rational v = s.functionals[i].constant;
      if (s.senses[i] == Sense::GE && v < 0) return {};
      if (s.senses[i] == Sense::LE && v > 0) return {};
      if (s.senses[i] == Sense::EQ && v != 0) return {};
    }
    return {LPStatus::OPTIMAL, Rational(0), {}, {}};
  }

  Vector c = objective;
  if (dir == Objective::MAX)
    for (auto& v : c) v = -v;

  auto r = detail::simplex_min(s, c);
  LPOutcome out;
  out.status = r.status;
  if (r.status == LPStatus::OPTIMAL) {
    out.value = dir == Objective::MAX ? Rational(-r.value) : r.value;
    out.witness = purify_to_vertex(s, &objective, std::move(r.x));
  } else if (r.status == LPStatus::UNBOUNDED) {
    out.ray = std::move(r.ray);
  }
  return out;
}

inline bool feasible(const InequalitySystem& s) {
  return lp_solve(s, Vector(s.dim, Rational(0)), Objective::MIN).status == LPStatus::OPTIMAL;
}

// Is every point of inner also a point of outer?
inline bool poly_contains(const InequalitySystem& inner, const InequalitySystem& outer) {
  if (!feasible(inner)) return true;
  for (size_t i = 0; i < outer.functionals.size(); ++i) {
    const auto& f = outer.functionals[i];
    if (outer.senses[i] != Sense::LE) {
      const auto lo = lp_solve(inner, f.linear_part, Objective::MIN);
      if (lo.status == LPStatus::UNBOUNDED || lo.value + f.constant < 0) return false;
    }
    if (outer.senses[i] != Sense::GE) {
      const auto hi = lp_solve(inner, f.linear_part, Objective::MAX);
      if (hi.status == LPStatus::UNBOUNDED || hi.value + f.constant > 0) return false;
    }
  }
  return true;
}

// Indices i admitting some m >= 0 with w m = 0 and m_i >= 1.
inline std::vector<size_t> cone_positive_support(const Matrix& w, size_t num_vars) {
  std::vector<size_t> result;
  for (size_t i = 0; i < num_vars; ++i) {
    InequalitySystem s(num_vars);
    for (const auto& row : w) {
      Vector lin = row;
      lin.resize(num_vars, Rational(0));
      s.add({std::move(lin), Rational(0)}, Sense::EQ);
    }
    for (size_t j = 0; j < num_vars; ++j) {
      Vector unit(num_vars, Rational(0));
      unit[j] = 1;
      s.add({std::move(unit), Rational(0)}, Sense::GE);
    }
    Vector lower(num_vars, Rational(0));
    lower[i] = 1;
    s.add({std::move(lower), Rational(-1)}, Sense::GE);
    if (feasible(s)) result.push_back(i);
  }
  return result;
}

// Does the solution set have nonempty interior?
inline bool full_dimensional(const InequalitySystem& s) {
  const size_t t = s.dim;
  InequalitySystem relaxed(s.dim + 1);
  for (size_t i = 0; i < s.functionals.size(); ++i) {
    AffineFunctional f = s.functionals[i];
    f.linear_part.resize(s.dim + 1, Rational(0));
    if (s.senses[i] == Sense::EQ) {
      bool zero = true;
      for (const auto& v : s.functionals[i].linear_part)
        if (v != 0) zero = false;
      if (!zero || f.constant != 0) return false;
      continue;
    }
    if (s.senses[i] == Sense::GE) {
      f.linear_part[t] = -1;  // f(x) >= margin
      relaxed.add(std::move(f), Sense::GE);
    } else {
      f.linear_part[t] = 1;  // f(x) <= -margin
      relaxed.add(std::move(f), Sense::LE);
    }
  }
  AffineFunctional cap;
  cap.linear_part.assign(s.dim + 1, Rational(0));
  cap.linear_part[t] = -1;
  cap.constant = 1;
  relaxed.add(std::move(cap), Sense::GE);  // margin <= 1

  Vector obj(s.dim + 1, Rational(0));
  obj[t] = 1;
  const auto out = lp_solve(relaxed, obj, Objective::MAX);
  return out.status == LPStatus::OPTIMAL && out.value > 0;
}

}  // namespace bouquet

#endif

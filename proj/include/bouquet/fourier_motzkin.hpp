#ifndef BOUQUET_FOURIER_MOTZKIN_HPP
#define BOUQUET_FOURIER_MOTZKIN_HPP

#include <bouquet/linear_program.hpp>

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace bouquet {

// Projection-based optimizer, kept independent of the simplex path so the two
// can cross-check each other. The objective is coupled through an extra
// variable t = objective . x; eliminating every x leaves an exact interval
// for t, whose endpoint is the optimal value.

struct FMOutcome {
  LPStatus status = LPStatus::INFEASIBLE;
  Rational value{0};
};

namespace detail {

struct FMRow {
  Vector a;
  Rational b{0};
  bool eq = false;  // a.y + b == 0 when set, >= 0 otherwise
};

inline std::string fm_key(const FMRow& r) {
  std::string k = r.eq ? "e" : "i";
  for (const auto& v : r.a) {
    k += '|';
    k += format_rational(v);
  }
  k += '#';
  k += format_rational(r.b);
  return k;
}

inline void fm_normalize(FMRow& r) {
  for (const auto& v : r.a) {
    if (v == 0) continue;
    const Rational scale = r.eq ? v : Rational(abs(v));
    for (auto& w : r.a) w /= scale;
    r.b /= scale;
    return;
  }
}

}  // namespace detail

inline FMOutcome fm_optimize(const InequalitySystem& s, const Vector& objective, Objective dir) {
  const size_t d = s.dim;
  std::vector<detail::FMRow> rows;
  for (size_t i = 0; i < s.functionals.size(); ++i) {
    detail::FMRow r;
    r.a = s.functionals[i].linear_part;
    r.a.resize(d + 1, Rational(0));
    r.b = s.functionals[i].constant;
    if (s.senses[i] == Sense::LE) {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
    }
    r.eq = s.senses[i] == Sense::EQ;
    rows.push_back(std::move(r));
  }
  {
    detail::FMRow couple;  // t - objective . x == 0
    couple.a.assign(d + 1, Rational(0));
    for (size_t j = 0; j < d; ++j) couple.a[j] = -objective[j];
    couple.a[d] = 1;
    couple.eq = true;
    rows.push_back(std::move(couple));
  }

  for (size_t v = 0; v < d; ++v) {
    std::vector<detail::FMRow> next;
    size_t pick = rows.size();
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i].eq && rows[i].a[v] != 0) {
        pick = i;
        break;
      }
    if (pick != rows.size()) {
      const detail::FMRow e = rows[pick];
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i == pick) continue;
        detail::FMRow r = rows[i];
        if (r.a[v] != 0) {
          const Rational f = r.a[v] / e.a[v];
          for (size_t j = 0; j <= d; ++j) r.a[j] -= f * e.a[j];
          r.b -= f * e.b;
        }
        next.push_back(std::move(r));
      }
    } else {
      std::vector<size_t> pos, neg;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].a[v] > 0)
          pos.push_back(i);
        else if (rows[i].a[v] < 0)
          neg.push_back(i);
        else
          next.push_back(rows[i]);
      }
      for (const auto p : pos)
        for (const auto n : neg) {
          detail::FMRow r;
          const Rational fp = -rows[n].a[v];  // > 0
          const Rational fn = rows[p].a[v];   // > 0
          r.a.assign(d + 1, Rational(0));
          for (size_t j = 0; j <= d; ++j) r.a[j] = fp * rows[p].a[j] + fn * rows[n].a[j];
          r.b = fp * rows[p].b + fn * rows[n].b;
          next.push_back(std::move(r));
        }
    }

    std::set<std::string> seen;
    std::vector<detail::FMRow> dedup;
    for (auto& r : next) {
      bool all_zero = true;
      for (const auto& x : r.a)
        if (x != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) {
        if (r.eq ? (r.b != 0) : (r.b < 0)) return {LPStatus::INFEASIBLE, Rational(0)};
        continue;
      }
      detail::fm_normalize(r);
      if (seen.insert(detail::fm_key(r)).second) dedup.push_back(std::move(r));
    }
    rows = std::move(dedup);
  }

  bool has_lower = false, has_upper = false, pinned = false;
  Rational lower, upper, pin;
  for (const auto& r : rows) {
    const Rational& at = r.a[d];
    if (r.eq) {
      const Rational v0 = -r.b / at;
      if (pinned && v0 != pin) return {LPStatus::INFEASIBLE, Rational(0)};
      pinned = true;
      pin = v0;
    } else if (at > 0) {  // t >= -b/at
      const Rational v0 = -r.b / at;
      if (!has_lower || v0 > lower) lower = v0, has_lower = true;
    } else {  // t <= b/(-at)
      const Rational v0 = r.b / -at;
      if (!has_upper || v0 < upper) upper = v0, has_upper = true;
    }
  }
  if (pinned) {
    if ((has_lower && lower > pin) || (has_upper && upper < pin))
      return {LPStatus::INFEASIBLE, Rational(0)};
    return {LPStatus::OPTIMAL, pin};
  }
  if (has_lower && has_upper && lower > upper) return {LPStatus::INFEASIBLE, Rational(0)};
  if (dir == Objective::MIN) {
    if (!has_lower) return {LPStatus::UNBOUNDED, Rational(0)};
    return {LPStatus::OPTIMAL, lower};
  }
  if (!has_upper) return {LPStatus::UNBOUNDED, Rational(0)};
  return {LPStatus::OPTIMAL, upper};
}

}  // namespace bouquet

#endif

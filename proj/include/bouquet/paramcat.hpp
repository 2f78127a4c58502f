#ifndef BOUQUET_PARAMCAT_HPP
#define BOUQUET_PARAMCAT_HPP

#include <bouquet/category_o.hpp>
#include <bouquet/errors.hpp>
#include <bouquet/rational.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bouquet {

// Parameter regimes of the ambient two-petal category at level ell.
// The three LARGE regimes admit closed-form tables; the other two do not.
enum class Regime {
  INTEGRAL_LARGE,
  HALF_INTEGRAL_LARGE,
  GENERIC_LARGE,
  IN_WINDOW_NONSINGULAR,
  SINGULAR,
};

inline bool is_large(Regime r) {
  return r == Regime::INTEGRAL_LARGE || r == Regime::HALF_INTEGRAL_LARGE ||
         r == Regime::GENERIC_LARGE;
}

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::INTEGRAL_LARGE: return "INTEGRAL_LARGE";
    case Regime::HALF_INTEGRAL_LARGE: return "HALF_INTEGRAL_LARGE";
    case Regime::GENERIC_LARGE: return "GENERIC_LARGE";
    case Regime::IN_WINDOW_NONSINGULAR: return "IN_WINDOW_NONSINGULAR";
    case Regime::SINGULAR: return "SINGULAR";
  }
  return "";
}

struct LambdaClass {
  Rational lambda;
  std::size_t level = 0;
  bool singular = false;
  bool abelian_localization = false;
  bool finite_hom_dim = false;
  Regime regime = Regime::SINGULAR;
};

// Exact classification of a quantization parameter at level ell.
// singular <=> (lambda integral and -ell < lambda < ell-1) or lambda = -1/2;
// the two derived flags are both equivalent to non-singularity.
inline LambdaClass classify(std::size_t ell, const Rational& lambda) {
  if (ell < 2) throw ScopeError("level must be at least 2");
  const long l = static_cast<long>(ell);
  LambdaClass c;
  c.lambda = lambda;
  c.level = ell;
  const bool integral = is_integer(lambda);
  const bool half = is_half_integer(lambda);
  c.singular = (integral && lambda > -l && lambda < l - 1) ||
               lambda == make_rational(-1, 2);
  if (integral && (lambda <= -l || lambda >= l - 1))
    c.regime = Regime::INTEGRAL_LARGE;
  else if (half && (lambda <= make_rational(-2 * l - 1, 2) ||
                    lambda >= make_rational(2 * l - 1, 2)))
    c.regime = Regime::HALF_INTEGRAL_LARGE;
  else if (!integral && !half && (lambda < 1 - l || lambda > l - 2))
    c.regime = Regime::GENERIC_LARGE;
  else if (c.singular)
    c.regime = Regime::SINGULAR;
  else
    c.regime = Regime::IN_WINDOW_NONSINGULAR;
  c.abelian_localization = !c.singular;
  c.finite_hom_dim = !c.singular;
  return c;
}

// The shift lambda -> -1-lambda exchanging the two determinant characters.
inline Rational reflect(const Rational& lambda) { return Rational(-1) - lambda; }

// Exactness of the section functor for the rank-n bouquet with ell loops.
// theta '+': fails exactly when some k in 1..n has
//   k * (lambda + (ell-1)(n-k) + 1) a nonpositive integer;
// theta '-': fails exactly when some k in 1..n has
//   k * (lambda - (ell-1)(n-k)) a nonnegative integer.
inline bool mn_exact(std::size_t n, std::size_t ell, const Rational& lambda,
                     char theta_sign) {
  if (n < 1) throw UsageError("rank must be positive");
  if (ell < 2) throw ScopeError("level must be at least 2");
  if (theta_sign != '+' && theta_sign != '-')
    throw UsageError("stability sign must be '+' or '-'");
  const long l = static_cast<long>(ell);
  const long nn = static_cast<long>(n);
  for (long k = 1; k <= nn; ++k) {
    const long step = (l - 1) * (nn - k);
    Rational v;
    if (theta_sign == '+')
      v = Rational(k) * (lambda + step + 1);
    else
      v = Rational(k) * (lambda - step);
    if (!is_integer(v)) continue;
    if (theta_sign == '+' ? v <= 0 : v >= 0) return false;
  }
  return true;
}

// --- canonical slice chamber labels -----------------------------------------
//
// The slice decomposition orders its 4*ell-3 chambers canonically; the pair
// families interleave as a1,b1,...,a_{ell-1},b_{ell-1},mid,a_{ell+1},b_{ell+1},
// ...,a_{2ell-1},b_{2ell-1}. The helpers below translate between 1-based
// chamber labels and (side, pair index) names.

inline std::size_t slice_label_count(std::size_t ell) { return 4 * ell - 3; }

inline std::size_t slice_mid_position(std::size_t ell) { return 2 * ell - 1; }

// pre: 1 <= k <= 2*ell-1 and k != ell; side is 'a' or 'b'.
inline std::size_t slice_position(std::size_t ell, char side, std::size_t k) {
  if (k < 1 || k == ell || k > 2 * ell - 1)
    throw UsageError("pair index out of range");
  if (side != 'a' && side != 'b') throw UsageError("side must be 'a' or 'b'");
  if (k < ell) return 2 * k - (side == 'a' ? 1 : 0);
  return 2 * k - (side == 'a' ? 2 : 1);
}

inline std::string slice_label_name(std::size_t ell, std::size_t label) {
  const std::size_t mid = slice_mid_position(ell);
  if (label < 1 || label > slice_label_count(ell))
    throw UsageError("slice label out of range");
  if (label == mid) return "mid";
  std::size_t k = 0;
  bool a_side = false;
  if (label < mid) {
    k = (label + 1) / 2;
    a_side = label % 2 == 1;
  } else {
    const std::size_t off = label - mid;
    k = ell + (off + 1) / 2;
    a_side = off % 2 == 1;
  }
  return std::string(a_side ? "a" : "b") + std::to_string(k);
}

namespace detail {

inline void require_large(Regime r) {
  if (!is_large(r))
    throw ScopeError(
        "REGIME_OUT_OF_SCOPE: closed-form tables exist in the large regimes "
        "only");
}

inline void require_restriction_regime(Regime r) {
  if (r != Regime::INTEGRAL_LARGE && r != Regime::HALF_INTEGRAL_LARGE)
    throw ScopeError(
        "REGIME_OUT_OF_SCOPE: the slice restriction is tabulated for the "
        "integral and half-integral large regimes only");
}

// Image of the i-th ambient class in the slice, as 1-based chamber labels.
// Two label alignments are in play: the head-aligned one keeps indices below
// the middle pair fixed, the tail-aligned one keeps indices above it fixed.
// The middle pair maps to mid either way; a forced middle index collapses to
// a doubled mid, and nullopt means the alignment names a label beyond the
// top of the ladder.
inline std::optional<std::vector<std::size_t>> restriction_labels(
    std::size_t ell, std::size_t i, Regime regime, bool head_aligned,
    bool simple) {
  if (i < 1 || i > 2 * ell) throw UsageError("ambient index out of range");
  if (simple && regime == Regime::HALF_INTEGRAL_LARGE && i == ell)
    return std::vector<std::size_t>{};  // the middle simple restricts to zero
  if (i == ell || i == ell + 1)
    return std::vector<std::size_t>{slice_mid_position(ell)};
  std::size_t j = 0;
  if (head_aligned)
    j = i < ell ? i : i - 1;
  else
    j = i < ell ? i + 1 : i;
  if (j == 2 * ell) return std::nullopt;
  if (j == ell) {
    const auto m = slice_mid_position(ell);
    return std::vector<std::size_t>{m, m};
  }
  return std::vector<std::size_t>{slice_position(ell, 'a', j),
                                  slice_position(ell, 'b', j)};
}

}  // namespace detail

// --- closed-form tables ------------------------------------------------------

struct HomDigraph {
  std::size_t ell = 0;
  Regime regime = Regime::INTEGRAL_LARGE;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // source > target
};

// Arrows between distinct standards; an edge (s, t) records a nonzero map
// from the s-th standard to the t-th one.
inline HomDigraph hom_digraph(std::size_t ell, Regime regime) {
  if (ell < 2) throw ScopeError("level must be at least 2");
  detail::require_large(regime);
  HomDigraph g;
  g.ell = ell;
  g.regime = regime;
  const std::size_t n = 2 * ell;
  if (regime == Regime::INTEGRAL_LARGE) {
    for (std::size_t i = 2; i <= n; ++i)
      if (i != ell + 1) g.edges.emplace_back(i, i - 1);
    g.edges.emplace_back(ell + 2, ell);
    g.edges.emplace_back(ell + 1, ell - 1);
    for (std::size_t i = 0; i + 2 <= ell; ++i)
      g.edges.emplace_back(n - i, i + 1);
    for (std::size_t i = 2; i + 2 <= ell; ++i)
      g.edges.emplace_back(n + 2 - i, i);
  } else if (regime == Regime::HALF_INTEGRAL_LARGE) {
    for (std::size_t i = 0; i < ell; ++i) g.edges.emplace_back(n - i, i + 1);
  }
  return g;
}

struct MultiplicityTable {
  std::size_t ell = 0;
  Regime regime = Regime::INTEGRAL_LARGE;
  // rows[i-1] lists the simple constituents of the i-th standard in
  // filtration order: head first, socle last, every multiplicity one.
  std::vector<std::vector<std::size_t>> rows;
};

inline MultiplicityTable multiplicity_table(std::size_t ell, Regime regime) {
  if (ell < 2) throw ScopeError("level must be at least 2");
  detail::require_large(regime);
  MultiplicityTable t;
  t.ell = ell;
  t.regime = regime;
  const std::size_t n = 2 * ell;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> row;
    if (regime == Regime::GENERIC_LARGE) {
      row = {i};
    } else if (regime == Regime::HALF_INTEGRAL_LARGE) {
      if (i <= ell)
        row = {i, n - i + 1};
      else
        row = {i};
    } else if (i == n) {
      row = {n};
    } else if (i > ell + 1) {
      row = {i, i + 1};
    } else if (i == ell || i == ell + 1) {
      row = {i, ell + 2};
    } else if (i == ell - 1) {
      row = {ell - 1, ell, ell + 1, ell + 2};
    } else if (i == 1) {
      row = {1, 2, n};
    } else {
      row = {i, i + 1, n + 2 - i, n + 1 - i};
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

// socle_table(ell, regime)[i-1] is the index of the socle of the i-th
// standard; in every large regime the socle is a single simple.
inline std::vector<std::size_t> socle_table(std::size_t ell, Regime regime) {
  if (ell < 2) throw ScopeError("level must be at least 2");
  detail::require_large(regime);
  const std::size_t n = 2 * ell;
  std::vector<std::size_t> soc(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t s = i;
    if (regime == Regime::INTEGRAL_LARGE) {
      if (i < ell)
        s = n - i + 1;
      else if (i == ell || i == ell + 1)
        s = ell + 2;
      else if (i < n)
        s = i + 1;
    } else if (regime == Regime::HALF_INTEGRAL_LARGE) {
      if (i <= ell) s = n - i + 1;
    }
    soc[i - 1] = s;
  }
  return soc;
}

struct ResImage {
  std::vector<std::string> labels;   // slice chamber names, e.g. "a2", "mid"
  bool undefined_index = false;      // alignment points beyond the slice ladder
};

struct ResTable {
  std::size_t ell = 0;
  Regime regime = Regime::INTEGRAL_LARGE;
  std::vector<ResImage> delta_images;   // [i-1]: image of the i-th standard
  std::vector<ResImage> simple_images;  // [i-1]: image of the i-th simple
};

// Tail-aligned restriction table from the ambient category to the slice.
// A forced middle index is collapsed to mid; the top ambient index points
// beyond the slice ladder and is flagged rather than renamed. The auditor
// weighs this alignment against the head-aligned one.
inline ResTable res_table(std::size_t ell, Regime regime) {
  if (ell < 2) throw ScopeError("level must be at least 2");
  detail::require_restriction_regime(regime);
  ResTable t;
  t.ell = ell;
  t.regime = regime;
  const auto render = [&](std::size_t i, bool simple) {
    ResImage img;
    const auto labels =
        detail::restriction_labels(ell, i, regime, /*head_aligned=*/false,
                                   simple);
    if (!labels) {
      img.undefined_index = true;
      return img;
    }
    for (const auto lab : *labels)
      img.labels.push_back(slice_label_name(ell, lab));
    return img;
  };
  for (std::size_t i = 1; i <= 2 * ell; ++i) {
    t.delta_images.push_back(render(i, false));
    t.simple_images.push_back(render(i, true));
  }
  return t;
}

// Support dimensions of the ambient simples in the integral large regime:
// 2*ell for the first, 4*ell-3 through the middle band, 4*ell-2 above it.
// Every value is cross-checked against the slice decomposition through the
// codimension identity dim = (6*ell-4) - ((4*ell-4) - slice_dim).
inline std::vector<long long> support_dims_ambient(std::size_t ell) {
  if (ell < 2) throw ScopeError("level must be at least 2");
  const long long l = static_cast<long long>(ell);
  std::vector<long long> dims(2 * ell, 0);
  for (std::size_t i = 1; i <= 2 * ell; ++i) {
    if (i == 1)
      dims[i - 1] = 2 * l;
    else if (i <= ell + 1)
      dims[i - 1] = 4 * l - 3;
    else
      dims[i - 1] = 4 * l - 2;
  }
  const auto sd =
      slice_decomposition(ell, Rational(-static_cast<long>(ell) - 1));
  for (std::size_t i = 1; i <= 2 * ell; ++i) {
    const auto img = detail::restriction_labels(
        ell, i, Regime::INTEGRAL_LARGE, /*head_aligned=*/true, /*simple=*/true);
    for (const auto lab : *img) {
      const long long slice_dim =
          static_cast<long long>(sd.chambers[lab - 1].support_dim);
      const long long lifted = (6 * l - 4) - ((4 * l - 4) - slice_dim);
      if (lifted != dims[i - 1])
        throw std::logic_error("support dimension cross-check failed");
    }
  }
  return dims;
}

}  // namespace bouquet

#endif

#ifndef BOUQUET_CATEGORY_O_HPP
#define BOUQUET_CATEGORY_O_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <bouquet/arrangement.hpp>
#include <bouquet/errors.hpp>
#include <bouquet/linear_program.hpp>
#include <bouquet/matrix.hpp>
#include <bouquet/rational.hpp>

namespace bouquet {

// A chamber on which the objective is bounded below, together with its
// certified minimizer.
struct Chamber {
  std::string sign;                      // one slot per coordinate in play
  Vector point;                          // minimizer, subspace coords
  Vector vertex;                         // minimizer, ambient coords
  Rational xi_value;
  std::vector<std::size_t> active_slots; // slots tight at the minimizer
};

struct ChamberSet {
  std::vector<std::size_t> indices;  // ambient coordinates in play, ascending
  std::vector<Chamber> chambers;     // xi ascending, then vertex lexicographic
  bool regular = true;               // false once a certificate degenerates
};

namespace detail {

inline bool vector_less(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

inline bool chamber_less(const Chamber& a, const Chamber& b) {
  if (a.xi_value != b.xi_value) return a.xi_value < b.xi_value;
  if (a.vertex != b.vertex) return vector_less(a.vertex, b.vertex);
  return a.sign < b.sign;
}

inline std::size_t thread_budget() {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("BOUQUET_O_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = static_cast<std::size_t>(v);
  }
  return std::min<std::size_t>(std::max<std::size_t>(n, 1), 8);
}

}  // namespace detail

// All chambers over the coordinate subset idx on which xi is bounded below,
// found by solving for the multipliers of every candidate tight set and
// certifying each resulting vertex with the solver.  Degenerate evidence
// (a candidate vertex lying on a further wall, or an ambiguous optimum)
// clears the regular flag.
inline ChamberSet bounded_chambers(const Arrangement& arr,
                                   std::vector<std::size_t> idx,
                                   const Rational& shift) {
  std::sort(idx.begin(), idx.end());
  const std::size_t d = arr.dim();
  const std::size_t k = idx.size();
  ChamberSet out;
  out.indices = idx;
  if (k < d) return out;  // walls cannot pin a vertex, nothing is bounded

  std::vector<Vector> grad(k);
  Vector cst(k);
  for (std::size_t s = 0; s < k; ++s) {
    AffineFunctional f = arr.coordinate_functional(idx[s]);
    grad[s] = std::move(f.linear_part);
    cst[s] = f.constant;
  }

  std::map<std::string, std::size_t> seen;  // sign word -> chamber position
  std::vector<std::size_t> comb(d);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    Matrix cols(d, Vector(d));
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) cols[r][c] = grad[comb[c]][r];
    std::optional<Vector> z;
    if (rank(cols) == d) z = solve(cols, arr.xi);
    if (z) {
      bool strict = true;
      for (const auto& zc : *z)
        if (zc == 0) { strict = false; break; }
      if (strict) {
        Matrix rows(d);
        Vector rhs(d);
        std::string sign(k, '?');
        for (std::size_t c = 0; c < d; ++c) {
          const std::size_t s = comb[c];
          sign[s] = (*z)[c] > 0 ? '-' : '+';
          rows[c] = grad[s];
          rhs[c] = (sign[s] == '-' ? shift : Rational(0)) - cst[s];
        }
        const auto point = solve(rows, rhs);
        if (!point) throw std::logic_error("tight set lost rank");
        bool degenerate = false;
        for (std::size_t s = 0; s < k && !degenerate; ++s) {
          if (sign[s] != '?') continue;
          const Rational v = dot(grad[s], *point) + cst[s];
          if (v < 0)
            sign[s] = '+';
          else if (v > shift)
            sign[s] = '-';
          else
            degenerate = true;
        }
        if (degenerate) {
          out.regular = false;
        } else {
          const auto sys = chamber_system(arr, idx, sign, shift);
          const auto lp = lp_solve(sys, arr.xi, Objective::MIN);
          if (lp.status != LPStatus::OPTIMAL)
            throw std::logic_error("certified vertex rejected by the solver");
          const Rational value = dot(arr.xi, *point);
          if (lp.value != value || lp.witness != *point) {
            out.regular = false;  // optimum not pinned at the vertex
          } else {
            const auto hit = seen.find(sign);
            if (hit == seen.end()) {
              Chamber ch;
              ch.sign = sign;
              ch.point = *point;
              ch.vertex = arr.embed(*point);
              ch.xi_value = value;
              ch.active_slots = comb;
              seen.emplace(sign, out.chambers.size());
              out.chambers.push_back(std::move(ch));
            } else if (out.chambers[hit->second].point != *point) {
              out.regular = false;
            }
          }
        }
      }
    }
    // next combination
    std::size_t c = d;
    while (c > 0 && comb[c - 1] == k - d + (c - 1)) --c;
    if (c == 0) break;
    ++comb[c - 1];
    for (std::size_t t = c; t < d; ++t) comb[t] = comb[t - 1] + 1;
  }

  std::sort(out.chambers.begin(), out.chambers.end(), detail::chamber_less);
  return out;
}

// Exhaustive sweep over all sign words, kept as ground truth for the
// certificate-driven search.  Worker count comes from BOUQUET_O_THREADS
// (clamped to [1,8]); chunks merge in index order, so the result does not
// depend on the thread count.
inline std::vector<std::string> sign_words_where(const Arrangement& arr,
                                                 const std::vector<std::size_t>& idx,
                                                 const Rational& shift,
                                                 bool require_bounded) {
  const std::size_t k = idx.size();
  if (k > 20) throw UsageError("sign sweep capped at 20 coordinates");
  const std::uint64_t total = std::uint64_t(1) << k;
  const std::size_t workers =
      static_cast<std::size_t>(std::min<std::uint64_t>(detail::thread_budget(), total));
  std::vector<std::vector<std::string>> found(workers);
  auto run = [&](std::size_t w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    for (std::uint64_t v = lo; v < hi; ++v) {
      std::string sign(k, '+');
      for (std::size_t j = 0; j < k; ++j)
        if ((v >> j) & 1) sign[j] = '-';
      const auto sys = chamber_system(arr, idx, sign, shift);
      const auto lp = lp_solve(sys, arr.xi, Objective::MIN);
      if (lp.status == LPStatus::INFEASIBLE) continue;
      if (require_bounded && lp.status != LPStatus::OPTIMAL) continue;
      found[w].push_back(std::move(sign));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::string> all;
  for (auto& part : found)
    for (auto& s : part) all.push_back(std::move(s));
  return all;
}

inline std::vector<std::string> feasible_sign_words(const Arrangement& arr,
                                                    const std::vector<std::size_t>& idx,
                                                    const Rational& shift) {
  return sign_words_where(arr, idx, shift, false);
}

inline std::vector<std::string> bounded_sign_words(const Arrangement& arr,
                                                   const std::vector<std::size_t>& idx,
                                                   const Rational& shift) {
  return sign_words_where(arr, idx, shift, true);
}

// gamma contributes to alpha exactly when the region of gamma lies in the
// tangent cone of alpha's region at its minimizer; with full-dimensional
// nonempty regions that happens exactly when gamma matches alpha on every
// tight slot.  Entries are positions into cs.chambers, ascending.
inline std::vector<std::vector<std::size_t>> subquotients(const ChamberSet& cs) {
  const std::size_t n = cs.chambers.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Chamber& alpha = cs.chambers[a];
    for (std::size_t g = 0; g < n; ++g) {
      bool inside = true;
      for (const auto s : alpha.active_slots)
        if (cs.chambers[g].sign[s] != alpha.sign[s]) {
          inside = false;
          break;
        }
      if (inside) out[a].push_back(g);
    }
  }
  return out;
}

// Same relation decided by polyhedral containment, kept as a cross-check.
inline std::vector<std::vector<std::size_t>> subquotients_by_containment(
    const Arrangement& arr, const ChamberSet& cs, const Rational& shift) {
  const std::size_t n = cs.chambers.size();
  std::vector<InequalitySystem> regions;
  regions.reserve(n);
  for (const auto& ch : cs.chambers)
    regions.push_back(chamber_system(arr, cs.indices, ch.sign, shift));
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Chamber& alpha = cs.chambers[a];
    InequalitySystem cone(arr.dim());
    for (const auto s : alpha.active_slots) {
      AffineFunctional f = arr.coordinate_functional(cs.indices[s]);
      if (alpha.sign[s] == '+') {
        cone.add(std::move(f), Sense::LE);
      } else {
        f.constant -= shift;
        cone.add(std::move(f), Sense::GE);
      }
    }
    for (std::size_t g = 0; g < n; ++g)
      if (poly_contains(regions[g], cone)) out[a].push_back(g);
  }
  return out;
}

// Partition of the chambers by lattice translation of their vertices.
// Members ascend; classes are ordered by representative (largest xi value,
// sign word as tie-break), descending.
inline std::size_t block_representative(const ChamberSet& cs,
                                        const std::vector<std::size_t>& cls) {
  std::size_t rep = cls.front();
  for (const auto i : cls) {
    const Chamber& a = cs.chambers[i];
    const Chamber& r = cs.chambers[rep];
    if (a.xi_value > r.xi_value ||
        (a.xi_value == r.xi_value && a.sign < r.sign))
      rep = i;
  }
  return rep;
}

inline std::vector<std::vector<std::size_t>> block_partition(const Arrangement& arr,
                                                             const ChamberSet& cs) {
  const std::size_t n = cs.chambers.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls_of(n, none);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls_of[i] != none) continue;
    cls_of[i] = classes.size();
    classes.push_back({i});
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cls_of[j] != none) continue;
      Vector diff(arr.ambient_dim);
      for (std::size_t t = 0; t < arr.ambient_dim; ++t)
        diff[t] = cs.chambers[j].vertex[t] - cs.chambers[i].vertex[t];
      if (lattice_member(arr.lattice_basis, diff)) {
        cls_of[j] = cls_of[i];
        classes[cls_of[i]].push_back(j);
      }
    }
  }
  std::sort(classes.begin(), classes.end(),
            [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              const Chamber& ra = cs.chambers[block_representative(cs, a)];
              const Chamber& rb = cs.chambers[block_representative(cs, b)];
              if (ra.xi_value != rb.xi_value) return ra.xi_value > rb.xi_value;
              return ra.sign < rb.sign;
            });
  return classes;
}

// Dimension of the attracting support cut out by a sign word: keep the
// positive coordinate of each '+' slot and the conjugate of each '-' slot,
// find which of them can take strictly positive values on the weight-zero
// cone, and measure that face.
inline std::size_t support_dimension(const Matrix& weights, const std::string& sign) {
  const std::size_t k = sign.size();
  Matrix rows(weights.size(), Vector(k, Rational(0)));
  for (std::size_t r = 0; r < weights.size(); ++r)
    for (std::size_t p = 0; p < k; ++p)
      rows[r][p] = sign[p] == '+' ? weights[r][p] : -weights[r][p];
  const auto positive = cone_positive_support(rows, k);
  Matrix cols;
  for (const auto p : positive) {
    Vector col(weights.size());
    for (std::size_t r = 0; r < weights.size(); ++r) col[r] = rows[r][p];
    cols.push_back(std::move(col));
  }
  return positive.size() - rank(cols);
}

// Chambers over the full coordinate frame, refined orbit by orbit: each
// translation class is recomputed over the walls that stay integral on it,
// and contribution lists are read off there.  At an integral base point
// there is a single class and the refinement is a no-op.
struct OrbitRefined {
  ChamberSet full;
  std::vector<std::vector<std::size_t>> blocks;        // chamber positions
  std::vector<std::vector<std::size_t>> subquotients;  // per chamber, ascending
};

inline OrbitRefined orbit_refined_category(const Arrangement& arr, const Rational& shift) {
  std::vector<std::size_t> all(arr.ambient_dim);
  std::iota(all.begin(), all.end(), 0);
  OrbitRefined out;
  out.full = bounded_chambers(arr, all, shift);
  if (!out.full.regular)
    throw ScopeError("degenerate parameter: optimizer certificates collide");
  out.blocks = block_partition(arr, out.full);
  out.subquotients.assign(out.full.chambers.size(), {});
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  for (const auto& cls : out.blocks) {
    const std::size_t rep = block_representative(out.full, cls);
    Arrangement orbit = arr;
    orbit.base_point = out.full.chambers[rep].vertex;
    const auto walls = orbit.integral_coordinates();
    const auto oc = bounded_chambers(orbit, walls, shift);
    if (!oc.regular)
      throw ScopeError("degenerate parameter: orbit certificates collide");
    if (oc.chambers.size() != cls.size())
      throw ScopeError("degenerate parameter: orbit chamber count mismatch");
    std::vector<std::size_t> member_of(oc.chambers.size(), none);
    std::vector<std::size_t> orbit_of(cls.size(), none);
    for (std::size_t m = 0; m < cls.size(); ++m) {
      const Vector& v = out.full.chambers[cls[m]].vertex;
      for (std::size_t j = 0; j < oc.chambers.size(); ++j)
        if (oc.chambers[j].vertex == v) {
          orbit_of[m] = j;
          break;
        }
      if (orbit_of[m] == none || member_of[orbit_of[m]] != none)
        throw ScopeError("degenerate parameter: orbit vertices do not match");
      member_of[orbit_of[m]] = cls[m];
    }
    const auto osub = subquotients(oc);
    for (std::size_t m = 0; m < cls.size(); ++m) {
      std::vector<std::size_t> lifted;
      for (const auto j : osub[orbit_of[m]]) lifted.push_back(member_of[j]);
      std::sort(lifted.begin(), lifted.end());
      out.subquotients[cls[m]] = std::move(lifted);
    }
  }
  return out;
}

// gamma -> alpha for every proper contribution, positions as in the input.
inline std::vector<std::pair<std::size_t, std::size_t>> hom_edges(
    const std::vector<std::vector<std::size_t>>& subq) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < subq.size(); ++a)
    for (const auto g : subq[a])
      if (g != a) edges.emplace_back(g, a);
  return edges;
}

// The classical picture projected to the integral walls must reproduce the
// shifted-wall picture computed there directly.
inline bool is_linked(const Arrangement& arr) {
  std::vector<std::size_t> all(arr.ambient_dim);
  std::iota(all.begin(), all.end(), 0);
  const auto classical = feasible_sign_words(arr, all, Rational(0));
  const auto walls = arr.integral_coordinates();
  std::set<std::string> projected;
  for (const auto& s : classical) {
    std::string p;
    for (const auto i : walls) p.push_back(s[i]);
    projected.insert(std::move(p));
  }
  const auto shifted = feasible_sign_words(arr, walls, Rational(1));
  return projected == std::set<std::string>(shifted.begin(), shifted.end());
}

// Full decomposition of the two-petal family at level ell: canonical
// chamber order (xi ascending, vertex lexicographic), 1-based labels,
// orbit-refined contribution lists, translation blocks, support dimensions.
struct SliceChamber {
  std::size_t label = 0;
  std::string sign;
  Vector point;
  Vector vertex;
  Rational xi_value;
  std::vector<std::size_t> subquotients;  // 1-based labels, ascending
  std::size_t support_dim = 0;
};

struct SliceDecomposition {
  std::size_t ell = 0;
  Rational lambda;
  Rational shift;
  Arrangement arrangement;
  std::vector<SliceChamber> chambers;
  std::vector<std::vector<std::size_t>> blocks;  // 1-based labels
};

inline SliceDecomposition slice_decomposition(std::size_t ell, const Rational& lambda,
                                              const Rational& shift = Rational(0)) {
  SliceDecomposition sd;
  sd.ell = ell;
  sd.lambda = lambda;
  sd.shift = shift;
  sd.arrangement = slice_arrangement(ell, lambda);
  auto cat = orbit_refined_category(sd.arrangement, shift);
  if (shift == 0 && cat.full.chambers.size() != 4 * ell - 3)
    throw ScopeError("degenerate parameter: unexpected chamber count");
  const Matrix weights = slice_weight_rows(ell);
  for (std::size_t i = 0; i < cat.full.chambers.size(); ++i) {
    Chamber& ch = cat.full.chambers[i];
    SliceChamber sc;
    sc.label = i + 1;
    sc.sign = ch.sign;
    sc.point = std::move(ch.point);
    sc.vertex = std::move(ch.vertex);
    sc.xi_value = ch.xi_value;
    for (const auto j : cat.subquotients[i]) sc.subquotients.push_back(j + 1);
    sc.support_dim = support_dimension(weights, sc.sign);
    sd.chambers.push_back(std::move(sc));
  }
  for (const auto& cls : cat.blocks) {
    std::vector<std::size_t> labels;
    for (const auto i : cls) labels.push_back(i + 1);
    sd.blocks.push_back(std::move(labels));
  }
  return sd;
}

}  // namespace bouquet

#endif

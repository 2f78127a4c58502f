#ifndef BOUQUET_BOUQUET_QUIVER_HPP
#define BOUQUET_BOUQUET_QUIVER_HPP

// Torus fixed points, dimension formulas, symplectic leaf tables and
// one-parameter fixed-component decompositions for the framed bouquet
// quiver varieties M(n, l): one node, l loop pairs, one-dimensional framing.

#include <bouquet/errors.hpp>
#include <bouquet/matrix.hpp>
#include <bouquet/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bouquet {

struct BouquetParams {
  std::size_t dim_v = 0;  // dimension of the representation space V
  std::size_t loops = 0;  // number of loop pairs at the single node

  void validate() const {
    if (dim_v < 1) throw UsageError("dimension vector must be positive");
    if (loops < 2) throw ScopeError("loop count must be at least 2");
  }
};

namespace detail {

// operators are indexed 0..2l-1: first the X side, then the Y side
inline std::string op_name(std::size_t op, std::size_t loops) {
  return op < loops ? "X" + std::to_string(op + 1)
                    : "Y" + std::to_string(op - loops + 1);
}

// X_s lowers the torus weight by e_s, Y_s raises it
inline Vector op_weight(std::size_t op, std::size_t loops) {
  Vector w(loops, Rational(0));
  if (op < loops)
    w[op] = Rational(-1);
  else
    w[op - loops] = Rational(1);
  return w;
}

inline Vector vec_add(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

inline Matrix zero_matrix(std::size_t n) {
  return Matrix(n, Vector(n, Rational(0)));
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out = zero_matrix(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r) {
      if (a[p][r] == 0) continue;
      for (std::size_t q = 0; q < n; ++q) out[p][q] += a[p][r] * b[r][q];
    }
  return out;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) {
  Matrix out = mat_mul(a, b);
  const Matrix ba = mat_mul(b, a);
  for (std::size_t p = 0; p < out.size(); ++p)
    for (std::size_t q = 0; q < out.size(); ++q) out[p][q] -= ba[p][q];
  return out;
}

inline bool matrix_is_zero(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& entry : row)
      if (entry != 0) return false;
  return true;
}

}  // namespace detail

// A fixed point presented as a weight diagram together with an explicit
// matrix witness.  The basis is canonical: the cyclic vector sits first and
// the remaining weight lines follow in ascending lexicographic weight order,
// which makes two presentations of the same point compare equal.
struct FixedPointDiagram {
  struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    std::string label;  // "X2", "Y1", ...
  };

  std::size_t loops = 0;
  std::size_t dim_v = 0;
  std::vector<Vector> vertices;  // torus weights of the basis lines
  std::vector<Edge> edges;       // in order of application to the cyclic vector
  std::size_t cyclic_vertex = 0;
  std::vector<Matrix> x, y;      // one matrix per loop pair
  Vector i, j;                   // framing row (V -> W) and column (W -> V)
  std::string name;
};

namespace detail {

inline bool weight_lex_less(const Vector& a, const Vector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

// arrows[k] = (source construction slot, operator); the target slot is k+1
inline FixedPointDiagram build_diagram(
    std::size_t loops, std::size_t dim_v,
    const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  std::vector<Vector> weight(dim_v, Vector(loops, Rational(0)));
  for (std::size_t k = 0; k < arrows.size(); ++k)
    weight[k + 1] = vec_add(weight[arrows[k].first], op_weight(arrows[k].second, loops));

  // canonical order: cyclic slot first, the rest by ascending weight
  std::vector<std::size_t> order(dim_v);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) {
    return weight_lex_less(weight[a], weight[b]);
  });
  std::vector<std::size_t> pos(dim_v);
  for (std::size_t a = 0; a < dim_v; ++a) pos[order[a]] = a;

  FixedPointDiagram d;
  d.loops = loops;
  d.dim_v = dim_v;
  d.cyclic_vertex = 0;
  for (std::size_t a = 0; a < dim_v; ++a) d.vertices.push_back(weight[order[a]]);
  d.x.assign(loops, zero_matrix(dim_v));
  d.y.assign(loops, zero_matrix(dim_v));
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto [src, op] = arrows[k];
    Matrix& m = op < loops ? d.x[op] : d.y[op - loops];
    m[pos[k + 1]][pos[src]] = Rational(1);
    d.edges.push_back({pos[src], pos[k + 1], op_name(op, loops)});
  }
  d.j.assign(dim_v, Rational(0));
  d.j[0] = Rational(1);
  d.i.assign(dim_v, Rational(0));
  return d;
}

}  // namespace detail

// Complete list of isolated torus fixed points for dim V <= 3, one canonical
// matrix witness each.  For dim V = 3 every point is a two-arrow diagram:
// either a fork (two arrows out of the cyclic vector) or a chain; a chain in
// which an operator is followed by its partner from the same loop pair lands
// back on the starting weight and is discarded.
inline std::vector<FixedPointDiagram> fixed_points(const BouquetParams& p) {
  p.validate();
  if (p.dim_v >= 4)
    throw ScopeError(
        "UNSUPPORTED_DIM: isolated fixed points exist only for dimension at most 3");
  std::vector<FixedPointDiagram> out;
  const std::size_t n_ops = 2 * p.loops;
  if (p.dim_v == 1) {
    out.push_back(detail::build_diagram(p.loops, 1, {}));
    out.back().name = "pt";
  } else if (p.dim_v == 2) {
    for (std::size_t op = 0; op < n_ops; ++op) {
      out.push_back(detail::build_diagram(p.loops, 2, {{0, op}}));
      out.back().name = detail::op_name(op, p.loops);
    }
  } else {
    for (std::size_t a = 0; a + 1 < n_ops; ++a)
      for (std::size_t b = a + 1; b < n_ops; ++b) {
        out.push_back(detail::build_diagram(p.loops, 3, {{0, a}, {0, b}}));
        out.back().name =
            detail::op_name(a, p.loops) + "|" + detail::op_name(b, p.loops);
      }
    for (std::size_t a = 0; a < n_ops; ++a)
      for (std::size_t b = 0; b < n_ops; ++b) {
        const bool same_pair = a % p.loops == b % p.loops;
        const bool mixed = (a < p.loops) != (b < p.loops);
        if (same_pair && mixed) continue;  // repeated weight
        out.push_back(detail::build_diagram(p.loops, 3, {{0, a}, {1, b}}));
        out.back().name =
            detail::op_name(a, p.loops) + ">" + detail::op_name(b, p.loops);
      }
  }
  return out;
}

// sum of commutators minus the framing term j i, evaluated exactly
inline Matrix moment_defect(const FixedPointDiagram& d) {
  Matrix m = detail::zero_matrix(d.dim_v);
  for (std::size_t k = 0; k < d.loops; ++k) {
    const Matrix c = detail::commutator(d.x[k], d.y[k]);
    for (std::size_t p = 0; p < d.dim_v; ++p)
      for (std::size_t q = 0; q < d.dim_v; ++q) m[p][q] += c[p][q];
  }
  for (std::size_t p = 0; p < d.dim_v; ++p)
    for (std::size_t q = 0; q < d.dim_v; ++q) m[p][q] -= d.j[p] * d.i[q];
  return m;
}

inline bool satisfies_moment(const FixedPointDiagram& d) {
  return detail::matrix_is_zero(moment_defect(d));
}

// stability for the chosen character: the framing vector is nonzero and
// generates V under the loop operators
inline bool is_stable(const FixedPointDiagram& d) {
  bool nonzero = false;
  for (const auto& entry : d.j) nonzero = nonzero || entry != 0;
  if (!nonzero) return false;
  Matrix span;
  span.push_back(d.j);
  std::size_t r = rank(span);
  bool grew = true;
  while (grew && r < d.dim_v) {
    grew = false;
    Matrix next = span;
    for (const auto& row : span) {
      for (std::size_t k = 0; k < d.loops; ++k) {
        next.push_back(mat_vec(d.x[k], row));
        next.push_back(mat_vec(d.y[k], row));
      }
    }
    const std::size_t r2 = rank(next);
    if (r2 > r) {
      span = std::move(next);
      r = r2;
      grew = true;
    }
  }
  return r == d.dim_v;
}

// the diagram data and the matrix witness describe the same weight grading
inline bool weight_consistent(const FixedPointDiagram& d) {
  for (const auto& entry : d.vertices[d.cyclic_vertex])
    if (entry != 0) return false;
  for (std::size_t a = 0; a < d.dim_v; ++a)
    for (std::size_t b = a + 1; b < d.dim_v; ++b)
      if (d.vertices[a] == d.vertices[b]) return false;
  for (std::size_t op = 0; op < 2 * d.loops; ++op) {
    const Matrix& m = op < d.loops ? d.x[op] : d.y[op - d.loops];
    const Vector w = detail::op_weight(op, d.loops);
    for (std::size_t p = 0; p < d.dim_v; ++p)
      for (std::size_t q = 0; q < d.dim_v; ++q) {
        if (m[p][q] == 0) continue;
        if (d.vertices[p] != detail::vec_add(d.vertices[q], w)) return false;
      }
  }
  for (const auto& e : d.edges) {
    std::size_t op = e.label[0] == 'X' ? 0 : d.loops;
    op += static_cast<std::size_t>(std::stoul(e.label.substr(1))) - 1;
    const Vector w = detail::op_weight(op, d.loops);
    if (d.vertices[e.target] != detail::vec_add(d.vertices[e.source], w)) return false;
  }
  for (std::size_t q = 0; q < d.dim_v; ++q) {
    if (d.j[q] != 0 && q != d.cyclic_vertex) return false;
    if (d.i[q] != 0 && q != d.cyclic_vertex) return false;
  }
  return true;
}

struct DimensionReport {
  long long resolution_dim = 0;
  long long half_dim = 0;
  long long central_fiber = 0;
  bool central_exact = false;  // exact value when true, upper bound otherwise
};

inline DimensionReport dims(const BouquetParams& p) {
  p.validate();
  const long long n = static_cast<long long>(p.dim_v);
  const long long l = static_cast<long long>(p.loops);
  DimensionReport r;
  r.resolution_dim = 2 * l * (n * n - 1) + 2 * n - 2 * n * n;
  r.half_dim = (l - 1) * n * n - l + n;
  if (n == 2) {
    r.central_fiber = 2 * l - 1;
    r.central_exact = true;
  } else {
    r.central_fiber = (n * n - n) * l - n * n + 2 * n - 1;
    r.central_exact = false;
  }
  return r;
}

struct LeafDescriptor {
  std::size_t leaf_type = 0;  // 1-based row of the printed table
  std::string dim_vector;     // semisimple decomposition with multiplicities
  long long leaf_dim = 0;
  std::string stabilizer;
  std::string namikawa_group;
};

inline std::vector<LeafDescriptor> leaves(const BouquetParams& p) {
  p.validate();
  const long long l = static_cast<long long>(p.loops);
  if (p.dim_v == 2)
    return {
        {1, "(2,1)", 6 * l - 4, "trivial", "Z/2"},
        {2, "(2,0)+(0,1)", 6 * l - 6, "scalars", "Z/2"},
        {3, "(1,0)+(1,0)+(0,1)", 2 * l, "diagonal torus", "Z/2"},
        {4, "(1,0)^2+(0,1)", 0, "GL(2)", "Z/2"},
    };
  if (p.dim_v == 3)
    return {
        {1, "(3,1)", 16 * l - 12, "trivial", "trivial"},
        {2, "(3,0)+(0,1)", 16 * l - 16, "scalars", "trivial"},
        {3, "(2,1)+(1,0)", 6 * l - 4, "diag(1,1,*)", "trivial"},
        {4, "(2,0)+(1,0)+(0,1)", 6 * l - 6, "diag(a,a,b)", "trivial"},
        {5, "(1,0)+(1,0)+(1,0)+(0,1)", 4 * l, "diagonal torus", "trivial"},
        {6, "(1,0)^2+(1,0)+(0,1)", 2 * l, "GL(2) x C*", "trivial"},
        {7, "(1,0)^3+(0,1)", 0, "GL(3)", "trivial"},
    };
  throw ScopeError("UNSUPPORTED_DIM: leaf tables cover dimensions 2 and 3");
}

enum class Subgroup { NU_TILDE, NU_PRIME, T_PRIME };

struct FixedComponent {
  std::string variety;
  long long dim = 0;
  std::string quantization;        // label of the induced quantization
  std::optional<Rational> period;  // numeric period when the parameter is known
};

struct ComponentDecomposition {
  Subgroup kind = Subgroup::NU_TILDE;
  std::vector<FixedComponent> components;
};

// Fixed locus of the distinguished one-parameter subgroups of the ambient
// torus, for dim V = 2.  The first kind scales a single loop pair and leaves
// one smaller bouquet variety plus two affine cells; the second carries
// period data for its two components; the third fixes the last loop pair
// pointwise and leaves T*P^1 plus 2l-2 planes.
inline ComponentDecomposition fixed_components(
    std::size_t loops, Subgroup kind,
    const std::optional<Rational>& lambda = std::nullopt) {
  if (loops < 2) throw ScopeError("loop count must be at least 2");
  const long long l = static_cast<long long>(loops);
  ComponentDecomposition d;
  d.kind = kind;
  if (kind == Subgroup::NU_TILDE) {
    const std::string small = "(2," + std::to_string(l - 1) + ")";
    const std::string cell = "C^" + std::to_string(2 * l - 2);
    d.components.push_back(
        {"M^theta" + small, 6 * l - 10, "A_lambda" + small, std::nullopt});
    d.components.push_back({cell, 2 * l - 2, "D(" + cell + ")", std::nullopt});
    d.components.push_back({cell, 2 * l - 2, "D(" + cell + ")", std::nullopt});
  } else if (kind == Subgroup::NU_PRIME) {
    const std::string proj = "P^" + std::to_string(l - 1);
    const std::string twist_low =
        lambda ? format_rational(*lambda - static_cast<long>(l - 1))
               : "lambda-" + std::to_string(l - 1);
    const std::string twist_high = lambda ? format_rational(*lambda) : "lambda";
    std::optional<Rational> period_low, period_high;
    if (lambda) {
      period_low = *lambda + make_rational(2 - l, 2);
      period_high = *lambda + make_rational(l, 2);
    }
    d.components.push_back({"T*" + proj, 2 * l - 2,
                            "D^{" + twist_low + "}(" + proj + ")", period_low});
    d.components.push_back({"T*" + proj, 2 * l - 2,
                            "D^{" + twist_high + "}(" + proj + ")", period_high});
  } else {
    d.components.push_back({"T*P^1", 2, "", std::nullopt});
    for (long long k = 0; k < 2 * l - 2; ++k)
      d.components.push_back({"C^2", 2, "", std::nullopt});
  }
  return d;
}

struct PeriodReport {
  std::pair<Rational, Rational> slice_restriction;  // image of the ambient parameter
  std::pair<Rational, Rational> slice_period;       // the half-shifted quantization period
  Rational ambient_period_shift;
};

inline PeriodReport periods(std::size_t, const Rational& lambda) {
  const Rational half = make_rational(1, 2);
  PeriodReport r;
  r.slice_restriction = {lambda, lambda};
  r.slice_period = {lambda + half, lambda + half};
  r.ambient_period_shift = half;
  return r;
}

}  // namespace bouquet

#endif

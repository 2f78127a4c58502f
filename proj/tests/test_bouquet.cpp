#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <bouquet/bouquet_quiver.hpp>
#include <bouquet/category_o.hpp>
#include <bouquet/slice.hpp>

using namespace bouquet;

namespace {

Rational rat(long num, long den = 1) { return make_rational(num, den); }

// ---- independent brute force over labeled two-edge diagrams ----
//
// A fixed point with three-dimensional V splits into three distinct weight
// lines with the framing image in weight zero, and some two arrows out of
// that line generate: a fork or a chain.  Enumerating those trees, filling
// every other weight-allowed entry with an unknown, and solving the moment
// equation exactly recounts the fixed points without touching the
// production enumeration.  The moment entries stay linear in the unknowns
// because an unknown can only meet a tree entry in a product; the guard
// below turns any violation of that into a test failure.

struct LinForm {
  Vector coeffs;
  Rational constant;

  bool is_constant() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const Rational& c) { return c == 0; });
  }
  bool is_zero() const { return constant == 0 && is_constant(); }
};

LinForm lin_zero(std::size_t n) { return {Vector(n, Rational(0)), Rational(0)}; }

void lin_add(LinForm& a, const LinForm& b, const Rational& scale) {
  for (std::size_t t = 0; t < a.coeffs.size(); ++t)
    a.coeffs[t] += scale * b.coeffs[t];
  a.constant += scale * b.constant;
}

LinForm lin_mul(const LinForm& a, const LinForm& b, bool& quadratic) {
  LinForm out = lin_zero(a.coeffs.size());
  if (!a.is_constant() && !b.is_constant()) {
    quadratic = true;
    return out;
  }
  if (a.is_constant())
    lin_add(out, b, a.constant);
  else
    lin_add(out, a, b.constant);
  return out;
}

using LinMatrix = std::vector<std::vector<LinForm>>;

LinMatrix lin_matrix(std::size_t dim, std::size_t n_unknowns) {
  return LinMatrix(dim, std::vector<LinForm>(dim, lin_zero(n_unknowns)));
}

LinMatrix lin_mat_mul(const LinMatrix& a, const LinMatrix& b, bool& quadratic) {
  const std::size_t n = a.size();
  LinMatrix out = lin_matrix(n, a[0][0].coeffs.size());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r) {
      if (a[p][r].is_zero()) continue;
      for (std::size_t q = 0; q < n; ++q) {
        if (b[r][q].is_zero()) continue;
        const LinForm prod = lin_mul(a[p][r], b[r][q], quadratic);
        lin_add(out[p][q], prod, Rational(1));
      }
    }
  return out;
}

Vector torus_weight(std::size_t op, std::size_t loops) {
  Vector w(loops, Rational(0));
  if (op < loops)
    w[op] = rat(-1);
  else
    w[op - loops] = rat(1);
  return w;
}

std::string weight_tag(const Vector& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += format_rational(w[k]);
  }
  return s + ")";
}

std::string oracle_op_name(std::size_t op, std::size_t loops) {
  return op < loops ? "X" + std::to_string(op + 1)
                    : "Y" + std::to_string(op - loops + 1);
}

struct OracleVerdict {
  bool skipped = false;    // repeated weight, not a diagram
  bool quadratic = false;  // moment equation left the linear regime
  bool accepted = false;   // unique moment solution, equal to the tree itself
  bool stray = false;      // solvable away from the tree: a missed point
  std::string signature;
};

// tree entries are (operator, row, column) positions set to one
OracleVerdict oracle_check(std::size_t loops, const std::vector<Vector>& w,
                           const std::vector<std::array<std::size_t, 3>>& tree) {
  OracleVerdict v;
  const std::size_t dim = w.size();
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b)
      if (w[a] == w[b]) {
        v.skipped = true;
        return v;
      }

  // unknowns: every weight-allowed non-tree entry, plus the framing row
  // entry on the weight-zero line
  std::map<std::array<std::size_t, 3>, std::size_t> slot;
  const std::set<std::array<std::size_t, 3>> tree_set(tree.begin(), tree.end());
  for (std::size_t op = 0; op < 2 * loops; ++op) {
    const Vector shift = torus_weight(op, loops);
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q) {
        Vector target = w[q];
        for (std::size_t k = 0; k < loops; ++k) target[k] += shift[k];
        if (target != w[p]) continue;
        const std::array<std::size_t, 3> key{op, p, q};
        if (tree_set.count(key)) continue;
        slot.emplace(key, slot.size());
      }
  }
  const std::size_t framing_unknown = slot.size();
  const std::size_t n_unknowns = slot.size() + 1;

  std::vector<LinMatrix> xs(loops, lin_matrix(dim, n_unknowns));
  std::vector<LinMatrix> ys(loops, lin_matrix(dim, n_unknowns));
  auto entry = [&](std::size_t op, std::size_t p, std::size_t q) -> LinForm& {
    return op < loops ? xs[op][p][q] : ys[op - loops][p][q];
  };
  for (const auto& t : tree) entry(t[0], t[1], t[2]).constant = Rational(1);
  for (const auto& [key, idx] : slot)
    entry(key[0], key[1], key[2]).coeffs[idx] = Rational(1);

  bool quadratic = false;
  LinMatrix moment = lin_matrix(dim, n_unknowns);
  for (std::size_t k = 0; k < loops; ++k) {
    const LinMatrix xy = lin_mat_mul(xs[k], ys[k], quadratic);
    const LinMatrix yx = lin_mat_mul(ys[k], xs[k], quadratic);
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q) {
        lin_add(moment[p][q], xy[p][q], Rational(1));
        lin_add(moment[p][q], yx[p][q], Rational(-1));
      }
  }
  // the framing product j i can only hit the weight-zero diagonal entry
  moment[0][0].coeffs[framing_unknown] -= 1;
  if (quadratic) {
    v.quadratic = true;
    return v;
  }

  Matrix a;
  Vector c;
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) {
      a.push_back(moment[p][q].coeffs);
      c.push_back(-moment[p][q].constant);
    }
  Matrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(c[r]);
  const std::size_t rank_a = rank(a);
  const bool consistent = rank_a == rank(aug);
  const bool unique = rank_a == n_unknowns;
  const bool homogeneous =
      std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
  if (consistent && unique && homogeneous) {
    v.accepted = true;
    std::vector<std::string> parts;
    for (const auto& wt : w) parts.push_back("V" + weight_tag(wt));
    for (const auto& t : tree)
      parts.push_back("E" + oracle_op_name(t[0], loops) + ":" +
                      weight_tag(w[t[2]]) + ">" + weight_tag(w[t[1]]));
    std::sort(parts.begin(), parts.end());
    for (const auto& piece : parts) v.signature += piece + ";";
  } else if (consistent) {
    v.stray = true;
  }
  return v;
}

struct OracleResult {
  std::size_t count = 0;
  std::multiset<std::string> signatures;
};

OracleResult oracle_fixed_points(std::size_t loops) {
  OracleResult out;
  const std::size_t n_ops = 2 * loops;
  const Vector zero(loops, Rational(0));
  auto weight_after = [&](const Vector& base, std::size_t op) {
    Vector w = base;
    const Vector s = torus_weight(op, loops);
    for (std::size_t k = 0; k < loops; ++k) w[k] += s[k];
    return w;
  };
  auto run = [&](const std::vector<Vector>& w,
                 const std::vector<std::array<std::size_t, 3>>& tree) {
    const OracleVerdict v = oracle_check(loops, w, tree);
    REQUIRE_FALSE(v.quadratic);
    REQUIRE_FALSE(v.stray);
    if (v.accepted) {
      ++out.count;
      out.signatures.insert(v.signature);
    }
  };
  for (std::size_t a = 0; a < n_ops; ++a)
    for (std::size_t b = a + 1; b < n_ops; ++b)
      run({zero, torus_weight(a, loops), torus_weight(b, loops)},
          {{{a, 1, 0}}, {{b, 2, 0}}});
  for (std::size_t a = 0; a < n_ops; ++a)
    for (std::size_t b = 0; b < n_ops; ++b) {
      const Vector w1 = torus_weight(a, loops);
      run({zero, w1, weight_after(w1, b)}, {{{a, 1, 0}}, {{b, 2, 1}}});
    }
  return out;
}

std::string engine_signature(const FixedPointDiagram& d) {
  std::vector<std::string> parts;
  for (const auto& wt : d.vertices) parts.push_back("V" + weight_tag(wt));
  for (const auto& e : d.edges)
    parts.push_back("E" + e.label + ":" + weight_tag(d.vertices[e.source]) +
                    ">" + weight_tag(d.vertices[e.target]));
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& piece : parts) s += piece + ";";
  return s;
}

bool diagram_valid(const FixedPointDiagram& d) {
  return satisfies_moment(d) && is_stable(d) && weight_consistent(d);
}

}  // namespace

TEST_CASE("single point in dimension one") {
  const auto pts = fixed_points({1, 3});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].name == "pt");
  CHECK(pts[0].edges.empty());
  CHECK(pts[0].vertices.size() == 1);
  CHECK(diagram_valid(pts[0]));
}

TEST_CASE("dimension two fixed points") {
  for (std::size_t ell = 2; ell <= 10; ++ell) {
    const auto pts = fixed_points({2, ell});
    REQUIRE(pts.size() == 2 * ell);
    for (std::size_t k = 0; k < ell; ++k) {
      CHECK(pts[k].name == "X" + std::to_string(k + 1));
      CHECK(pts[ell + k].name == "Y" + std::to_string(k + 1));
    }
    for (const auto& d : pts) {
      REQUIRE(d.edges.size() == 1);
      CHECK(d.edges[0].source == d.cyclic_vertex);
      CHECK(d.edges[0].label == d.name);
      CHECK(diagram_valid(d));
    }
  }
}

TEST_CASE("dimension three count matches the brute-force oracle") {
  for (std::size_t ell : {2, 3}) {
    const auto oracle = oracle_fixed_points(ell);
    const auto pts = fixed_points({3, ell});
    REQUIRE(oracle.count > 0);
    CHECK(pts.size() == oracle.count);
  }
}

TEST_CASE("dimension three closed-form count") {
  for (std::size_t ell = 2; ell <= 6; ++ell) {
    const auto pts = fixed_points({3, ell});
    CHECK(pts.size() == 6 * ell * ell - 3 * ell);
  }
}

TEST_CASE("dimension three signatures match the oracle") {
  for (std::size_t ell : {2, 3}) {
    const auto oracle = oracle_fixed_points(ell);
    std::multiset<std::string> engine;
    for (const auto& d : fixed_points({3, ell}))
      engine.insert(engine_signature(d));
    CHECK(engine == oracle.signatures);
    CHECK(engine.size() == std::set<std::string>(engine.begin(), engine.end()).size());
  }
}

TEST_CASE("every listed diagram passes the exact verifier") {
  for (std::size_t n : {1, 2, 3})
    for (std::size_t ell : {2, 3, 4})
      for (const auto& d : fixed_points({n, ell})) {
        CHECK(satisfies_moment(d));
        CHECK(is_stable(d));
        CHECK(weight_consistent(d));
        CHECK(d.vertices.size() == n);
      }
}

TEST_CASE("partnered chains are excluded and fail the moment equation") {
  std::set<std::string> names;
  for (const auto& d : fixed_points({3, 2})) names.insert(d.name);
  CHECK_FALSE(names.count("X1>Y1"));
  CHECK_FALSE(names.count("Y1>X1"));
  CHECK_FALSE(names.count("X2>Y2"));
  CHECK(names.count("Y1>X2"));
  CHECK(names.count("X1>X1"));
  CHECK(names.count("X1|Y1"));

  // hand-built excluded chain: invalid grading and a nonzero moment defect
  FixedPointDiagram d;
  d.loops = 2;
  d.dim_v = 3;
  d.vertices = {Vector{rat(0), rat(0)}, Vector{rat(-1), rat(0)},
                Vector{rat(0), rat(0)}};
  d.edges = {{0, 1, "X1"}, {1, 2, "Y1"}};
  d.x.assign(2, detail::zero_matrix(3));
  d.y.assign(2, detail::zero_matrix(3));
  d.x[0][1][0] = rat(1);
  d.y[0][2][1] = rat(1);
  d.j = {rat(1), rat(0), rat(0)};
  d.i = {rat(0), rat(0), rat(0)};
  CHECK_FALSE(weight_consistent(d));
  CHECK_FALSE(satisfies_moment(d));
  const Matrix defect = moment_defect(d);
  CHECK(defect[2][0] == rat(-1));
}

TEST_CASE("dimension formulas") {
  for (std::size_t ell = 2; ell <= 6; ++ell) {
    const long long l = static_cast<long long>(ell);
    const auto r2 = dims({2, ell});
    CHECK(r2.resolution_dim == 6 * l - 4);
    CHECK(r2.resolution_dim == 2 * r2.half_dim);
    CHECK(r2.central_exact);
    CHECK(r2.central_fiber == 2 * l - 1);
    CHECK(r2.central_fiber < r2.half_dim);

    const auto r3 = dims({3, ell});
    CHECK(r3.resolution_dim == 16 * l - 12);
    CHECK(r3.resolution_dim == 2 * r3.half_dim);
    CHECK_FALSE(r3.central_exact);
    CHECK(r3.central_fiber < r3.half_dim);

    // the small resolution dimension doubles the deepest positive leaf
    const auto rows = leaves({2, ell});
    CHECK(r2.resolution_dim - 2 * rows[2].leaf_dim == 2 * l - 4);
  }
  CHECK(dims({2, 4}).central_fiber == 7);
  CHECK_THROWS_AS(dims({0, 3}), UsageError);
  CHECK_THROWS_AS(dims({2, 1}), ScopeError);
}

TEST_CASE("leaf tables") {
  for (std::size_t ell = 2; ell <= 6; ++ell) {
    const long long l = static_cast<long long>(ell);
    const auto two = leaves({2, ell});
    REQUIRE(two.size() == 4);
    CHECK(two[0].leaf_dim == 6 * l - 4);
    CHECK(two[1].leaf_dim == 6 * l - 6);
    CHECK(two[2].leaf_dim == 2 * l);
    CHECK(two[3].leaf_dim == 0);
    CHECK(two[0].dim_vector == "(2,1)");
    CHECK(two[1].dim_vector == "(2,0)+(0,1)");
    CHECK(two[3].dim_vector == "(1,0)^2+(0,1)");
    CHECK(two[0].stabilizer == "trivial");
    CHECK(two[3].stabilizer == "GL(2)");
    for (const auto& row : two) {
      CHECK(row.namikawa_group == "Z/2");
      CHECK(row.leaf_dim % 2 == 0);
    }
    CHECK(std::is_sorted(two.begin(), two.end(),
                         [](const LeafDescriptor& a, const LeafDescriptor& b) {
                           return a.leaf_dim > b.leaf_dim;
                         }));

    const auto three = leaves({3, ell});
    REQUIRE(three.size() == 7);
    CHECK(three[0].leaf_dim == 16 * l - 12);
    CHECK(three[0].leaf_dim == dims({3, ell}).resolution_dim);
    CHECK(three[1].leaf_dim == 16 * l - 16);
    CHECK(three[2].leaf_dim == 6 * l - 4);
    CHECK(three[3].leaf_dim == 6 * l - 6);
    CHECK(three[4].leaf_dim == 4 * l);
    CHECK(three[5].leaf_dim == 2 * l);
    CHECK(three[6].leaf_dim == 0);
    CHECK(three[2].dim_vector == "(2,1)+(1,0)");
    CHECK(three[6].dim_vector == "(1,0)^3+(0,1)");
    CHECK(three[3].stabilizer == "diag(a,a,b)");
    CHECK(three[5].stabilizer == "GL(2) x C*");
    CHECK(three[6].stabilizer == "GL(3)");
    for (const auto& row : three) {
      CHECK(row.namikawa_group == "trivial");
      CHECK(row.leaf_dim % 2 == 0);
    }
    const bool sorted =
        std::is_sorted(three.begin(), three.end(),
                       [](const LeafDescriptor& a, const LeafDescriptor& b) {
                         return a.leaf_dim > b.leaf_dim;
                       });
    // the poset order inverts one pair of rows at the smallest loop count
    CHECK(sorted == (ell >= 3));
  }
  CHECK(leaves({2, 5})[2].leaf_dim == 10);
  CHECK(leaves({3, 2})[4].leaf_dim == 8);
  CHECK_THROWS_AS(leaves({4, 3}), ScopeError);
  REQUIRE_THROWS_WITH(leaves({4, 3}),
                      Catch::Matchers::StartsWith("UNSUPPORTED_DIM"));
  REQUIRE_THROWS_WITH(fixed_points({4, 2}),
                      Catch::Matchers::StartsWith("UNSUPPORTED_DIM"));
}

TEST_CASE("fixed components of the distinguished subgroups") {
  const auto tilde = fixed_components(3, Subgroup::NU_TILDE);
  REQUIRE(tilde.components.size() == 3);
  CHECK(tilde.components[0].variety == "M^theta(2,2)");
  CHECK(tilde.components[0].dim == 8);
  CHECK(tilde.components[0].quantization == "A_lambda(2,2)");
  CHECK(tilde.components[1].variety == "C^4");
  CHECK(tilde.components[1].dim == 4);
  CHECK(tilde.components[1].quantization == "D(C^4)");
  CHECK(tilde.components[2].variety == tilde.components[1].variety);

  const auto tp = fixed_components(2, Subgroup::T_PRIME);
  REQUIRE(tp.components.size() == 3);
  CHECK(tp.components[0].variety == "T*P^1");
  CHECK(tp.components[0].dim == 2);
  CHECK(tp.components[1].variety == "C^2");
  CHECK(tp.components[2].variety == "C^2");

  const auto prime = fixed_components(4, Subgroup::NU_PRIME, rat(1));
  REQUIRE(prime.components.size() == 2);
  CHECK(prime.components[0].variety == "T*P^3");
  CHECK(prime.components[0].dim == 6);
  CHECK(prime.components[0].quantization == "D^{-2}(P^3)");
  CHECK(prime.components[1].quantization == "D^{1}(P^3)");
  REQUIRE(prime.components[0].period.has_value());
  CHECK(*prime.components[0].period == rat(0));
  CHECK(*prime.components[1].period == rat(3));

  const auto symbolic = fixed_components(4, Subgroup::NU_PRIME);
  CHECK(symbolic.components[0].quantization == "D^{lambda-3}(P^3)");
  CHECK(symbolic.components[1].quantization == "D^{lambda}(P^3)");
  CHECK_FALSE(symbolic.components[0].period.has_value());

  CHECK_THROWS_AS(fixed_components(1, Subgroup::T_PRIME), ScopeError);
}

TEST_CASE("component Euler counts add up to the fixed point count") {
  for (std::size_t ell = 2; ell <= 5; ++ell) {
    const std::size_t total = fixed_points({2, ell}).size();

    // one smaller bouquet variety plus two affine cells
    if (ell >= 3) {
      const auto tilde = fixed_components(ell, Subgroup::NU_TILDE);
      std::size_t sum = fixed_points({2, ell - 1}).size();
      sum += tilde.components.size() - 1;
      CHECK(sum == total);
    }

    // two cotangent bundles of projective space, Euler number ell each
    const auto prime = fixed_components(ell, Subgroup::NU_PRIME);
    CHECK(prime.components.size() * ell == total);

    // T*P^1 carries two fixed points, each plane one
    const auto tp = fixed_components(ell, Subgroup::T_PRIME);
    CHECK(2 + (tp.components.size() - 1) == total);
  }
}

TEST_CASE("period bookkeeping") {
  const auto at = [](long num, long den = 1) { return make_rational(num, den); };
  const auto r = periods(3, at(-3));
  CHECK(r.slice_restriction.first == at(-3));
  CHECK(r.slice_restriction.second == at(-3));
  CHECK(r.slice_period.first == at(-5, 2));
  CHECK(r.slice_period.second == at(-5, 2));
  CHECK(r.ambient_period_shift == at(1, 2));

  const auto zero = periods(2, at(0));
  CHECK(zero.slice_period.first == at(1, 2));

  // restriction intertwines the reflection about -1/2
  for (long num : {-7, -2, 1, 5})
    for (long den : {1, 2, 3}) {
      const Rational lambda = at(num, den);
      const auto a = periods(4, lambda);
      const auto b = periods(4, at(-1) - lambda);
      CHECK(b.slice_restriction.first == at(-1) - a.slice_restriction.first);
      CHECK(b.slice_restriction.second == at(-1) - a.slice_restriction.second);
    }
}

TEST_CASE("slice presentation") {
  const auto s2 = slice_spec(2, rat(-2));
  CHECK(s2.level == 2);
  CHECK(s2.quantized_shift == rat(1));
  REQUIRE(s2.hyperplane_table.size() == 4);
  CHECK(s2.hyperplane_table[0].printed_normal == Vector{rat(1), rat(0)});
  CHECK(s2.hyperplane_table[1].printed_normal == Vector{rat(-1), rat(-1)});
  CHECK(s2.hyperplane_table[2].printed_normal == Vector{rat(0), rat(1)});
  CHECK(s2.hyperplane_table[3].printed_normal == Vector{rat(0), rat(-1)});

  const auto s3 = slice_spec(3, rat(-4));
  REQUIRE(s3.hyperplane_table.size() == 6);
  CHECK(s3.hyperplane_table[0].printed_normal ==
        Vector{rat(1), rat(1), rat(1), rat(0)});
  CHECK(s3.hyperplane_table[1].printed_normal ==
        Vector{rat(-1), rat(0), rat(0), rat(0)});
  CHECK(s3.hyperplane_table[2].printed_normal ==
        Vector{rat(0), rat(-1), rat(0), rat(0)});
  CHECK(s3.hyperplane_table[3].printed_normal ==
        Vector{rat(0), rat(0), rat(-1), rat(-1)});
  CHECK(s3.hyperplane_table[4].printed_normal ==
        Vector{rat(0), rat(0), rat(0), rat(1)});
  CHECK(s3.hyperplane_table[5].printed_normal ==
        Vector{rat(0), rat(0), rat(0), rat(-1)});

  // each printed normal is the gradient of its functional up to a global
  // sign on the middle band of rows
  for (std::size_t ell = 2; ell <= 5; ++ell) {
    const auto s = slice_spec(ell, rat(-(static_cast<long>(ell)) - 1));
    s.arrangement.validate();
    REQUIRE(s.hyperplane_table.size() == 2 * ell);
    for (std::size_t r = 1; r <= 2 * ell; ++r) {
      const auto& row = s.hyperplane_table[r - 1];
      const bool flipped = r >= ell && r <= 2 * ell - 2;
      Vector expected = row.functional.linear_part;
      if (flipped)
        for (auto& x : expected) x = -x;
      CHECK(row.printed_normal == expected);
    }

    // torus weights of the coordinates kill the arrangement directions and
    // pair with the stored parameter drift to the fixed character
    REQUIRE(s.weight_rows.size() == 2);
    for (const auto& t : s.weight_rows) {
      REQUIRE(t.size() == 2 * ell);
      for (const auto& u : s.arrangement.lattice_basis) CHECK(dot(t, u) == 0);
      REQUIRE(s.arrangement.eta.has_value());
      CHECK(dot(t, *s.arrangement.eta) == rat(-1));
    }
  }
}

TEST_CASE("slice fixed points") {
  CHECK_THROWS_AS(slice_fixed_points(1), ScopeError);

  const auto pts3 = slice_fixed_points(3);
  REQUIRE(pts3.size() == 9);
  CHECK(pts3[0].coordinates == "x1=1, j1=1");
  CHECK(pts3[0].ambient == "(1,0) on C^2[X1]");
  CHECK(pts3[2].coordinates == "x3=1, j1=1");
  CHECK(pts3[2].ambient == "(1,0) on C^2[Y1]");
  CHECK(pts3[5].coordinates == "y2=1, j2=1");
  CHECK(pts3[5].ambient == "(-1,0) on C^2[X2]");
  CHECK(pts3[8].coordinates == "j1=1, j2=1");
  CHECK(pts3[8].ambient == "double point on T*P^1");

  CHECK(slice_fixed_points(4).size() == 13);

  for (std::size_t ell = 2; ell <= 6; ++ell) {
    const auto pts = slice_fixed_points(ell);
    REQUIRE(pts.size() == 4 * ell - 3);
    for (std::size_t k = 0; k < pts.size(); ++k) CHECK(pts[k].label == k + 1);
    CHECK(pts.back().ambient == "double point on T*P^1");

    // as many slice fixed points as chambers of the slice arrangement
    const auto sd = slice_decomposition(ell, rat(-(static_cast<long>(ell)) - 1));
    CHECK(pts.size() == sd.chambers.size());

    // every point lands on a component of the small subgroup fixed locus,
    // with the double point on the lone cotangent component
    const auto tp = fixed_components(ell, Subgroup::T_PRIME);
    CHECK(pts.size() == 2 * (tp.components.size() - 1) + 1);
  }
}

#ifndef BOUQUET_SLICE_HPP
#define BOUQUET_SLICE_HPP

// Presentation data for the minimal slice model attached to a bouquet with
// l loop pairs: its hyperplane arrangement in printed-table form, the torus
// weights of its linear coordinates, and its own torus fixed points matched
// with the ambient components they sit on.

#include <bouquet/arrangement.hpp>
#include <bouquet/errors.hpp>
#include <bouquet/linear_program.hpp>
#include <bouquet/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace bouquet {

struct HyperplaneRow {
  AffineFunctional functional;  // h_r in subspace coordinates
  Vector printed_normal;        // normal vector as listed in the table
};

struct SliceSpec {
  std::size_t level = 0;
  Rational lambda;
  Arrangement arrangement;
  Rational quantized_shift;  // offset of the quantized chamber conditions
  Matrix weight_rows;        // torus weights of the 2l linear coordinates
  std::vector<HyperplaneRow> hyperplane_table;
};

// The printed normals follow a fixed pattern in m = 2l-2 variables: the
// first row sums the first m-1 variables, the middle rows negate single
// coordinates, row 2l-2 is -(last two), and the final pair is +-(last).
// Each printed normal is proportional to the gradient of the matching
// arrangement functional.
inline SliceSpec slice_spec(std::size_t ell, const Rational& lambda) {
  SliceSpec s;
  s.level = ell;
  s.lambda = lambda;
  s.arrangement = slice_arrangement(ell, lambda);
  s.quantized_shift = Rational(1);
  s.weight_rows = slice_weight_rows(ell);
  const std::size_t m = 2 * ell - 2;
  for (std::size_t r = 1; r <= 2 * ell; ++r) {
    Vector normal(m, Rational(0));
    if (r == 1) {
      for (std::size_t k = 0; k + 1 < m; ++k) normal[k] = Rational(1);
    } else if (r <= 2 * ell - 3) {
      normal[r - 2] = Rational(-1);
    } else if (r == 2 * ell - 2) {
      normal[m - 2] = Rational(-1);
      normal[m - 1] = Rational(-1);
    } else if (r == 2 * ell - 1) {
      normal[m - 1] = Rational(1);
    } else {
      normal[m - 1] = Rational(-1);
    }
    s.hyperplane_table.push_back(
        {s.arrangement.coordinate_functional(r - 1), normal});
  }
  return s;
}

struct SliceFixedPoint {
  std::size_t label = 0;    // 1-based, in the standard listing order
  std::string coordinates;  // nonzero slice coordinates
  std::string ambient;      // ambient fixed component the point sits on
};

namespace detail {

// slice coordinate slots 1..2l-2 correspond to the ambient loop pairs in
// order, skipping the distinguished last pair
inline std::string ambient_copy_name(std::size_t s, std::size_t ell) {
  return s <= ell - 1 ? "X" + std::to_string(s)
                      : "Y" + std::to_string(s - ell + 1);
}

}  // namespace detail

// The 4l-3 torus fixed points of the slice: one for each unit coordinate
// vector on either framing leg, plus the point using both legs, which is
// the one sitting on the ambient T*P^1.
inline std::vector<SliceFixedPoint> slice_fixed_points(std::size_t ell) {
  if (ell < 2) throw ScopeError("level must be at least 2");
  std::vector<SliceFixedPoint> out;
  const std::size_t m = 2 * ell - 2;
  for (std::size_t s = 1; s <= m; ++s)
    out.push_back({s, "x" + std::to_string(s) + "=1, j1=1",
                   "(1,0) on C^2[" + detail::ambient_copy_name(s, ell) + "]"});
  for (std::size_t s = 1; s <= m; ++s)
    out.push_back({m + s, "y" + std::to_string(s) + "=1, j2=1",
                   "(-1,0) on C^2[" + detail::ambient_copy_name(s, ell) + "]"});
  out.push_back({2 * m + 1, "j1=1, j2=1", "double point on T*P^1"});
  return out;
}

}  // namespace bouquet

#endif

#ifndef BOUQUET_ARRANGEMENT_HPP
#define BOUQUET_ARRANGEMENT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <bouquet/errors.hpp>
#include <bouquet/linear_program.hpp>
#include <bouquet/matrix.hpp>
#include <bouquet/rational.hpp>

namespace bouquet {

// A rational affine subspace of a coordinate space, carried by integral
// direction vectors, together with a generic objective on the subspace
// coordinates.  Restricting the i-th ambient coordinate to the subspace
// gives the affine functional
//
//   h_i(c) = base_point[i] + sum_j c_j * lattice_basis[j][i].
//
// Chambers are cut out by the sign conditions h_i <= 0 ('+') and
// h_i >= shift ('-'); the objective xi singles out a vertex of each
// chamber on which it is bounded below.
struct Arrangement {
  std::size_t ambient_dim = 0;
  std::vector<Vector> lattice_basis;  // direction vectors, ambient coords
  Vector base_point;                  // ambient coords
  Vector xi;                          // objective, subspace coords
  std::optional<Vector> eta;          // ambient drift of the parameter, if known

  std::size_t dim() const { return lattice_basis.size(); }

  AffineFunctional coordinate_functional(std::size_t i) const {
    AffineFunctional f;
    f.constant = base_point[i];
    f.linear_part.resize(lattice_basis.size());
    for (std::size_t j = 0; j < lattice_basis.size(); ++j)
      f.linear_part[j] = lattice_basis[j][i];
    return f;
  }

  // Ambient coordinates of the subspace point c.
  Vector embed(const Vector& c) const {
    Vector w = base_point;
    for (std::size_t j = 0; j < lattice_basis.size(); ++j)
      for (std::size_t i = 0; i < ambient_dim; ++i)
        w[i] += c[j] * lattice_basis[j][i];
    return w;
  }

  // Coordinates taking integer values on every lattice translate of the
  // base point.  The direction vectors are integral, so this is decided
  // by the base point alone.
  std::vector<std::size_t> integral_coordinates() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_dim; ++i)
      if (is_integer(base_point[i])) out.push_back(i);
    return out;
  }

  void validate() const {
    if (base_point.size() != ambient_dim)
      throw UsageError("base point has wrong length");
    for (const auto& u : lattice_basis)
      if (u.size() != ambient_dim)
        throw UsageError("direction vector has wrong length");
    if (xi.size() != lattice_basis.size())
      throw UsageError("objective has wrong length");
    if (eta && eta->size() != ambient_dim)
      throw UsageError("parameter direction has wrong length");
    Matrix rows;
    for (const auto& u : lattice_basis) rows.push_back(u);
    if (rank(rows) != lattice_basis.size())
      throw UsageError("direction vectors are dependent");
  }
};

// Region selected by a sign word over the coordinate subset idx:
// '+' at slot j demands h_{idx[j]} <= 0, '-' demands h_{idx[j]} >= shift.
inline InequalitySystem chamber_system(const Arrangement& arr,
                                       const std::vector<std::size_t>& idx,
                                       const std::string& sign,
                                       const Rational& shift) {
  if (sign.size() != idx.size())
    throw UsageError("sign word length does not match coordinate subset");
  InequalitySystem s(arr.dim());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    AffineFunctional f = arr.coordinate_functional(idx[j]);
    if (sign[j] == '+') {
      s.add(std::move(f), Sense::LE);
    } else if (sign[j] == '-') {
      f.constant -= shift;
      s.add(std::move(f), Sense::GE);
    } else {
      throw UsageError("sign word must consist of '+' and '-'");
    }
  }
  return s;
}

// The two-petal family at level ell: 2*ell coordinates, a (2*ell-2)-dim
// subspace spanned by
//   u_j = e_1 - e_{1+j}              1 <= j <= ell-2
//   u_j = e_1 + e_{1+j}              ell-1 <= j <= 2*ell-3
//   u_{2*ell-2} = e_{2*ell-2} + e_{2*ell-1} - e_{2*ell}
// through the point (0,...,0,-lambda,-lambda).
inline Arrangement slice_arrangement(std::size_t ell, const Rational& lambda) {
  if (ell < 2) throw ScopeError("level must be at least 2");
  const std::size_t n = 2 * ell;
  const std::size_t d = n - 2;
  Arrangement a;
  a.ambient_dim = n;
  a.base_point.assign(n, Rational(0));
  a.base_point[n - 2] = -lambda;
  a.base_point[n - 1] = -lambda;
  a.lattice_basis.assign(d, Vector(n, Rational(0)));
  for (std::size_t j = 1; j <= d; ++j) {
    Vector& u = a.lattice_basis[j - 1];
    if (j + 2 <= ell) {
      u[0] = 1;
      u[j] = -1;
    } else if (j + 1 <= n - 2) {
      u[0] = 1;
      u[j] = 1;
    } else {
      u[n - 3] = 1;
      u[n - 2] = 1;
      u[n - 1] = -1;
    }
  }
  a.xi.assign(d, Rational(0));
  for (std::size_t j = 1; j <= d; ++j) {
    if (j + 2 <= ell)
      a.xi[j - 1] = Rational(static_cast<long>(j));
    else if (j + 1 <= n - 2)
      a.xi[j - 1] = Rational(static_cast<long>(j + 1));
    else
      a.xi[j - 1] = Rational(static_cast<long>(ell - 1));
  }
  Vector drift(n, Rational(0));
  drift[n - 2] = 1;
  drift[n - 1] = 1;
  a.eta = std::move(drift);
  return a;
}

// Torus weights of the positive coordinate attached to each wall of the
// two-petal family; the conjugate coordinate carries the negated column.
inline Matrix slice_weight_rows(std::size_t ell) {
  const std::size_t n = 2 * ell;
  Matrix t(2, Vector(n, Rational(0)));
  for (std::size_t s = 0; s < ell - 1; ++s) {
    t[0][s] = -1;
    t[1][s] = 1;
  }
  for (std::size_t s = ell - 1; s < n - 2; ++s) {
    t[0][s] = 1;
    t[1][s] = -1;
  }
  t[0][n - 2] = -1;
  t[1][n - 1] = -1;
  return t;
}

}  // namespace bouquet

#endif

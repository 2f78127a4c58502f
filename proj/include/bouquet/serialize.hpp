#ifndef BOUQUET_SERIALIZE_HPP
#define BOUQUET_SERIALIZE_HPP

#include <json.hpp>

#include <bouquet/audit.hpp>
#include <bouquet/bouquet_quiver.hpp>
#include <bouquet/category_o.hpp>
#include <bouquet/errors.hpp>
#include <bouquet/paramcat.hpp>
#include <bouquet/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace bouquet {

// Key order is part of the output contract: identical invocations must be
// byte-identical, so every object below is built with ordered_json.
using Json = nlohmann::ordered_json;

inline Json json_rationals(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(format_rational(x));
  return a;
}

// Integral vectors (lattice directions, torus weights) serialize as plain
// integers; feeding a non-integral entry here is a programming error.
inline Json json_integers(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (!is_integer(x)) throw std::logic_error("non-integral lattice entry");
    a.push_back(static_cast<long long>(x.get_num().get_si()));
  }
  return a;
}

inline Rational rational_from_json(const Json& x) {
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) return Rational(x.get<long>());
  throw UsageError("rational entries must be strings like \"p/q\" or integers");
}

inline Json json_of(const Arrangement& a) {
  Json j;
  j["ambient_dim"] = a.ambient_dim;
  Json basis = Json::array();
  for (const auto& u : a.lattice_basis) basis.push_back(json_integers(u));
  j["lattice_basis"] = std::move(basis);
  j["base_point"] = json_rationals(a.base_point);
  j["xi"] = json_rationals(a.xi);
  if (a.eta) j["eta"] = json_integers(*a.eta);
  return j;
}

inline Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("arrangement file must be a JSON object");
  for (const char* key : {"ambient_dim", "lattice_basis", "base_point", "xi"})
    if (!j.contains(key))
      throw UsageError(std::string("arrangement file is missing key '") + key +
                       "'");
  Arrangement a;
  if (!j["ambient_dim"].is_number_integer() || j["ambient_dim"].get<long>() < 1)
    throw UsageError("ambient_dim must be a positive integer");
  a.ambient_dim = j["ambient_dim"].get<std::size_t>();
  if (!j["lattice_basis"].is_array())
    throw UsageError("lattice_basis must be an array of integer arrays");
  for (const auto& row : j["lattice_basis"]) {
    if (!row.is_array())
      throw UsageError("lattice_basis must be an array of integer arrays");
    Vector u;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw UsageError("lattice_basis entries must be integers");
      u.push_back(Rational(x.get<long>()));
    }
    a.lattice_basis.push_back(std::move(u));
  }
  for (const auto& x : j["base_point"]) a.base_point.push_back(rational_from_json(x));
  for (const auto& x : j["xi"]) a.xi.push_back(rational_from_json(x));
  if (j.contains("eta")) {
    Vector e;
    for (const auto& x : j["eta"]) {
      if (!x.is_number_integer())
        throw UsageError("eta entries must be integers");
      e.push_back(Rational(x.get<long>()));
    }
    a.eta = std::move(e);
  }
  a.validate();
  return a;
}

inline Json json_of(const SliceDecomposition& sd) {
  Json j;
  j["ell"] = sd.ell;
  j["lambda"] = format_rational(sd.lambda);
  j["shift"] = format_rational(sd.shift);
  j["arrangement"] = json_of(sd.arrangement);
  std::vector<std::size_t> block_of(sd.chambers.size() + 1, 0);
  for (std::size_t b = 0; b < sd.blocks.size(); ++b)
    for (const auto lab : sd.blocks[b]) block_of[lab] = b + 1;
  Json chambers = Json::array();
  for (const auto& ch : sd.chambers) {
    Json c;
    c["label"] = ch.label;
    c["sign"] = ch.sign;
    c["point"] = json_rationals(ch.point);
    c["vertex"] = json_rationals(ch.vertex);
    c["xi_value"] = format_rational(ch.xi_value);
    c["subquotients"] = ch.subquotients;
    c["support_dim"] = ch.support_dim;
    c["block"] = block_of[ch.label];
    chambers.push_back(std::move(c));
  }
  j["chambers"] = std::move(chambers);
  j["blocks"] = sd.blocks;
  return j;
}

inline Json json_of(const FixedPointDiagram& d) {
  Json j;
  j["name"] = d.name;
  j["loops"] = d.loops;
  j["dim_v"] = d.dim_v;
  Json weights = Json::array();
  for (const auto& w : d.vertices) weights.push_back(json_integers(w));
  j["weights"] = std::move(weights);
  Json edges = Json::array();
  for (const auto& e : d.edges) {
    Json row;
    row["source"] = e.source;
    row["target"] = e.target;
    row["label"] = e.label;
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  return j;
}

inline Json json_of(const DimensionReport& r) {
  Json j;
  j["resolution_dim"] = r.resolution_dim;
  j["half_dim"] = r.half_dim;
  j["central_fiber"] = r.central_fiber;
  j["central_exact"] = r.central_exact;
  return j;
}

inline Json json_of(const LeafDescriptor& leaf) {
  Json j;
  j["leaf_type"] = leaf.leaf_type;
  j["dim_vector"] = leaf.dim_vector;
  j["leaf_dim"] = leaf.leaf_dim;
  j["stabilizer"] = leaf.stabilizer;
  j["namikawa_group"] = leaf.namikawa_group;
  return j;
}

inline const char* subgroup_token(Subgroup s) {
  switch (s) {
    case Subgroup::NU_TILDE: return "nu-tilde";
    case Subgroup::NU_PRIME: return "nu-prime";
    case Subgroup::T_PRIME: return "t-prime";
  }
  return "";
}

inline Json json_of(const ComponentDecomposition& d) {
  Json j;
  j["subgroup"] = subgroup_token(d.kind);
  Json rows = Json::array();
  for (const auto& c : d.components) {
    Json row;
    row["variety"] = c.variety;
    row["dim"] = c.dim;
    row["quantization"] = c.quantization;
    row["period"] = c.period ? Json(format_rational(*c.period)) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  j["components"] = std::move(rows);
  return j;
}

inline Json json_of(const LambdaClass& c) {
  Json j;
  j["lambda"] = format_rational(c.lambda);
  j["level"] = c.level;
  j["regime"] = regime_name(c.regime);
  j["singular"] = c.singular;
  j["abelian_localization"] = c.abelian_localization;
  j["finite_hom_dim"] = c.finite_hom_dim;
  return j;
}

inline Json json_of(const HomDigraph& g) {
  Json j;
  j["ell"] = g.ell;
  j["regime"] = regime_name(g.regime);
  Json edges = Json::array();
  for (const auto& [s, t] : g.edges) {
    Json e;
    e["source"] = s;
    e["target"] = t;
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  return j;
}

inline Json json_of(const MultiplicityTable& t) {
  Json j;
  j["ell"] = t.ell;
  j["regime"] = regime_name(t.regime);
  Json rows = Json::array();
  for (std::size_t i = 1; i <= t.rows.size(); ++i) {
    Json row;
    row["standard"] = "D" + std::to_string(i);
    Json cs = Json::array();
    for (const auto s : t.rows[i - 1]) cs.push_back("S" + std::to_string(s));
    row["constituents"] = std::move(cs);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline Json json_of(const ResTable& t) {
  const auto render = [](const std::vector<ResImage>& images, char tag) {
    Json rows = Json::array();
    for (std::size_t i = 1; i <= images.size(); ++i) {
      const auto& img = images[i - 1];
      Json row;
      row["object"] = std::string(1, tag) + std::to_string(i);
      row["labels"] = img.labels;
      row["undefined_index"] = img.undefined_index;
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Json j;
  j["ell"] = t.ell;
  j["regime"] = regime_name(t.regime);
  j["standards"] = render(t.delta_images, 'D');
  j["simples"] = render(t.simple_images, 'S');
  return j;
}

inline Json json_of(const AuditReport& rep) {
  Json j;
  j["ell"] = rep.ell;
  j["regime"] = regime_name(rep.regime);
  j["slice_parameter"] = format_rational(rep.slice_parameter);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json row;
    row["name"] = c.name;
    row["index"] = c.index;
    row["status"] = check_status_name(c.status);
    row["detail"] = c.detail;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  j["no_failures"] = rep.no_failures();
  return j;
}

}  // namespace bouquet

#endif

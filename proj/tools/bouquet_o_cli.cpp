#include <CLI11.hpp>

#include <bouquet/arrangement.hpp>
#include <bouquet/audit.hpp>
#include <bouquet/bouquet_quiver.hpp>
#include <bouquet/category_o.hpp>
#include <bouquet/errors.hpp>
#include <bouquet/fourier_motzkin.hpp>
#include <bouquet/linear_program.hpp>
#include <bouquet/paramcat.hpp>
#include <bouquet/rational.hpp>
#include <bouquet/serialize.hpp>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bouquet::Arrangement;
using bouquet::AuditReport;
using bouquet::BouquetParams;
using bouquet::Json;
using bouquet::Rational;
using bouquet::ScopeError;
using bouquet::Subgroup;
using bouquet::UsageError;
using bouquet::Vector;

enum class Format { JSON, TSV, DOT, ASCII };

Format format_token(const std::string& s) {
  if (s == "json") return Format::JSON;
  if (s == "tsv") return Format::TSV;
  if (s == "dot") return Format::DOT;
  if (s == "ascii") return Format::ASCII;
  throw UsageError("unknown output format '" + s + "'");
}

// Empty request falls back to the command default; a format the command
// cannot render is a usage error, not a silent substitution.
Format resolve_format(const std::string& requested, Format fallback,
                      std::initializer_list<Format> allowed) {
  const Format f = requested.empty() ? fallback : format_token(requested);
  for (const Format g : allowed)
    if (g == f) return f;
  throw UsageError("output format '" + requested +
                   "' is not supported by this command");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string rational_list(const Vector& v, const std::string& sep) {
  std::vector<std::string> parts;
  parts.reserve(v.size());
  for (const auto& x : v) parts.push_back(bouquet::format_rational(x));
  return join(parts, sep);
}

std::string dname(std::size_t i) { return "D" + std::to_string(i); }
std::string sname(std::size_t i) { return "S" + std::to_string(i); }

// Payload goes to stdout in one write; stderr is reserved for diagnostics.
void emit(const std::string& payload) { std::cout << payload << std::flush; }

void emit_json(const Json& j) { emit(j.dump(2) + "\n"); }

Subgroup parse_subgroup(const std::string& s) {
  if (s == "nu-tilde") return Subgroup::NU_TILDE;
  if (s == "nu-prime") return Subgroup::NU_PRIME;
  if (s == "t-prime") return Subgroup::T_PRIME;
  throw UsageError("unknown subgroup '" + s + "'");
}

int run_slice(std::size_t ell, const std::string& lambda_text,
              const std::string& out, long hshift) {
  const Format fmt = resolve_format(out, Format::TSV, {Format::TSV, Format::JSON});
  const Rational lambda = bouquet::parse_rational(lambda_text);
  const auto sd = bouquet::slice_decomposition(ell, lambda, Rational(hshift));
  if (fmt == Format::JSON) {
    emit_json(bouquet::json_of(sd));
    return 0;
  }
  std::vector<std::size_t> block_of(sd.chambers.size() + 1, 0);
  for (std::size_t b = 0; b < sd.blocks.size(); ++b)
    for (const auto lab : sd.blocks[b]) block_of[lab] = b + 1;
  std::ostringstream os;
  os << "label\tname\tsign\txi\tvertex\tsubquotients\tsupport_dim\tblock\n";
  for (const auto& ch : sd.chambers) {
    std::vector<std::string> subq;
    subq.reserve(ch.subquotients.size());
    for (const auto q : ch.subquotients) subq.push_back(std::to_string(q));
    os << ch.label << '\t' << bouquet::slice_label_name(ell, ch.label) << '\t'
       << ch.sign << '\t' << bouquet::format_rational(ch.xi_value) << '\t'
       << rational_list(ch.vertex, ",") << '\t' << join(subq, ",") << '\t'
       << ch.support_dim << '\t' << block_of[ch.label] << '\n';
  }
  emit(os.str());
  return 0;
}

int run_sign_vectors(const std::string& file, const std::string& out, long hshift) {
  const Format fmt = resolve_format(out, Format::TSV, {Format::TSV, Format::JSON});
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read arrangement file '" + file + "'");
  const Json doc = Json::parse(in);
  const Arrangement arr = bouquet::arrangement_from_json(doc);
  std::vector<std::size_t> idx(arr.ambient_dim);
  std::iota(idx.begin(), idx.end(), 0);
  const Rational shift(hshift);
  auto feasible = bouquet::feasible_sign_words(arr, idx, shift);
  std::sort(feasible.begin(), feasible.end());
  const auto cs = bouquet::bounded_chambers(arr, idx, shift);
  if (!cs.regular)
    throw ScopeError(
        "NON_REGULAR: the objective does not pin a unique vertex in every "
        "bounded chamber");
  std::map<std::string, const bouquet::Chamber*> bounded;
  for (const auto& ch : cs.chambers) bounded[ch.sign] = &ch;
  if (fmt == Format::JSON) {
    Json j;
    j["arrangement"] = bouquet::json_of(arr);
    j["shift"] = bouquet::format_rational(shift);
    j["feasible"] = feasible;
    Json rows = Json::array();
    for (const auto& ch : cs.chambers) {
      Json row;
      row["sign"] = ch.sign;
      row["xi_value"] = bouquet::format_rational(ch.xi_value);
      row["vertex"] = bouquet::json_rationals(ch.vertex);
      rows.push_back(std::move(row));
    }
    j["bounded"] = std::move(rows);
    emit_json(j);
    return 0;
  }
  std::ostringstream os;
  os << "sign\tbounded\txi\tvertex\n";
  for (const auto& word : feasible) {
    const auto hit = bounded.find(word);
    if (hit == bounded.end()) {
      os << word << "\tno\t\t\n";
    } else {
      os << word << "\tyes\t" << bouquet::format_rational(hit->second->xi_value)
         << '\t' << rational_list(hit->second->vertex, ",") << '\n';
    }
  }
  emit(os.str());
  return 0;
}

std::string edge_text(const bouquet::FixedPointDiagram::Edge& e) {
  return std::to_string(e.source) + " -" + e.label + "-> " +
         std::to_string(e.target);
}

int run_fixed_points(std::size_t n, std::size_t ell, const std::string& out) {
  const Format fmt =
      resolve_format(out, Format::ASCII, {Format::ASCII, Format::TSV, Format::JSON});
  const auto diagrams = bouquet::fixed_points(BouquetParams{n, ell});
  if (fmt == Format::JSON) {
    Json j;
    j["count"] = diagrams.size();
    Json rows = Json::array();
    for (const auto& d : diagrams) rows.push_back(bouquet::json_of(d));
    j["diagrams"] = std::move(rows);
    emit_json(j);
    return 0;
  }
  std::ostringstream os;
  if (fmt == Format::TSV) {
    os << "name\tloops\tdim_v\tweights\tedges\n";
    for (const auto& d : diagrams) {
      std::vector<std::string> ws, es;
      for (const auto& w : d.vertices) ws.push_back("(" + rational_list(w, ",") + ")");
      for (const auto& e : d.edges) es.push_back(edge_text(e));
      os << d.name << '\t' << d.loops << '\t' << d.dim_v << '\t'
         << join(ws, ";") << '\t' << join(es, ",") << '\n';
    }
  } else {
    os << "count: " << diagrams.size() << "\n";
    for (const auto& d : diagrams) {
      os << d.name;
      if (!d.edges.empty()) {
        std::vector<std::string> es;
        for (const auto& e : d.edges) es.push_back(edge_text(e));
        os << ": " << join(es, ", ");
      }
      os << "\n";
    }
  }
  emit(os.str());
  return 0;
}

int run_fixed_components(std::size_t ell, const std::string& kind_token,
                         const std::optional<std::string>& lambda_text,
                         const std::string& out) {
  const Format fmt = resolve_format(out, Format::TSV, {Format::TSV, Format::JSON});
  std::optional<Rational> lambda;
  if (lambda_text) lambda = bouquet::parse_rational(*lambda_text);
  const auto cd = bouquet::fixed_components(ell, parse_subgroup(kind_token), lambda);
  if (fmt == Format::JSON) {
    emit_json(bouquet::json_of(cd));
    return 0;
  }
  std::ostringstream os;
  os << "variety\tdim\tquantization\tperiod\n";
  for (const auto& c : cd.components) {
    os << c.variety << '\t' << c.dim << '\t' << c.quantization << '\t'
       << (c.period ? bouquet::format_rational(*c.period) : std::string()) << '\n';
  }
  emit(os.str());
  return 0;
}

int run_leaves(std::size_t n, std::size_t ell, const std::string& out) {
  const Format fmt = resolve_format(out, Format::TSV, {Format::TSV, Format::JSON});
  const auto rows = bouquet::leaves(BouquetParams{n, ell});
  if (fmt == Format::JSON) {
    Json j = Json::array();
    for (const auto& leaf : rows) j.push_back(bouquet::json_of(leaf));
    emit_json(j);
    return 0;
  }
  std::ostringstream os;
  os << "leaf_type\tdim_vector\tleaf_dim\tstabilizer\tnamikawa_group\n";
  for (const auto& leaf : rows) {
    os << leaf.leaf_type << '\t' << leaf.dim_vector << '\t' << leaf.leaf_dim
       << '\t' << leaf.stabilizer << '\t' << leaf.namikawa_group << '\n';
  }
  emit(os.str());
  return 0;
}

int run_dims(std::size_t n, std::size_t ell, const std::string& out) {
  const Format fmt = resolve_format(out, Format::ASCII, {Format::ASCII, Format::JSON});
  const auto r = bouquet::dims(BouquetParams{n, ell});
  if (fmt == Format::JSON) {
    emit_json(bouquet::json_of(r));
    return 0;
  }
  std::ostringstream os;
  os << "resolution_dim: " << r.resolution_dim << "\n"
     << "half_dim: " << r.half_dim << "\n"
     << "central_fiber: " << r.central_fiber << "\n"
     << "central_exact: " << (r.central_exact ? "true" : "false") << "\n";
  emit(os.str());
  return 0;
}

int run_classify(std::size_t ell, const std::string& lambda_text,
                 const std::string& out) {
  const Format fmt = resolve_format(out, Format::ASCII, {Format::ASCII, Format::JSON});
  const auto c = bouquet::classify(ell, bouquet::parse_rational(lambda_text));
  if (fmt == Format::JSON) {
    emit_json(bouquet::json_of(c));
    return 0;
  }
  std::ostringstream os;
  os << "lambda: " << bouquet::format_rational(c.lambda) << "\n"
     << "level: " << c.level << "\n"
     << "regime: " << bouquet::regime_name(c.regime) << "\n"
     << "singular: " << (c.singular ? "true" : "false") << "\n"
     << "abelian_localization: " << (c.abelian_localization ? "true" : "false")
     << "\n"
     << "finite_hom_dim: " << (c.finite_hom_dim ? "true" : "false") << "\n";
  emit(os.str());
  return 0;
}

int run_homs(std::size_t ell, const std::string& lambda_text,
             const std::string& out) {
  const Format fmt =
      resolve_format(out, Format::DOT, {Format::DOT, Format::TSV, Format::JSON});
  const auto c = bouquet::classify(ell, bouquet::parse_rational(lambda_text));
  const auto g = bouquet::hom_digraph(ell, c.regime);
  if (fmt == Format::JSON) {
    emit_json(bouquet::json_of(g));
    return 0;
  }
  std::ostringstream os;
  if (fmt == Format::TSV) {
    os << "source\ttarget\n";
    for (const auto& [s, t] : g.edges) os << s << '\t' << t << '\n';
  } else {
    os << "digraph homs {\n";
    for (std::size_t i = 1; i <= 2 * ell; ++i) os << "  " << dname(i) << ";\n";
    for (const auto& [s, t] : g.edges)
      os << "  " << dname(s) << " -> " << dname(t) << ";\n";
    os << "}\n";
  }
  emit(os.str());
  return 0;
}

int run_mult(std::size_t ell, const std::string& lambda_text,
             const std::string& out) {
  const Format fmt =
      resolve_format(out, Format::TSV, {Format::TSV, Format::ASCII, Format::JSON});
  const auto c = bouquet::classify(ell, bouquet::parse_rational(lambda_text));
  const auto t = bouquet::multiplicity_table(ell, c.regime);
  if (fmt == Format::JSON) {
    emit_json(bouquet::json_of(t));
    return 0;
  }
  std::ostringstream os;
  if (fmt == Format::ASCII) {
    for (std::size_t i = 1; i <= t.rows.size(); ++i) {
      std::vector<std::string> cells;
      for (const auto s : t.rows[i - 1]) cells.push_back(sname(s));
      os << dname(i) << ": " << join(cells, " ") << "\n";
    }
  } else {
    // One column per standard object, constituents listed downwards; rows are
    // padded to a rectangle so the byte layout is stable.
    std::size_t depth = 0;
    for (const auto& row : t.rows) depth = std::max(depth, row.size());
    for (std::size_t i = 1; i <= t.rows.size(); ++i)
      os << dname(i) << (i == t.rows.size() ? '\n' : '\t');
    for (std::size_t r = 0; r < depth; ++r) {
      for (std::size_t c2 = 0; c2 < t.rows.size(); ++c2) {
        if (r < t.rows[c2].size()) os << sname(t.rows[c2][r]);
        os << (c2 + 1 == t.rows.size() ? '\n' : '\t');
      }
    }
  }
  emit(os.str());
  return 0;
}

int run_socles(std::size_t ell, const std::string& lambda_text,
               const std::string& out) {
  const Format fmt = resolve_format(out, Format::TSV, {Format::TSV, Format::JSON});
  const auto c = bouquet::classify(ell, bouquet::parse_rational(lambda_text));
  const auto socles = bouquet::socle_table(ell, c.regime);
  if (fmt == Format::JSON) {
    Json j;
    j["ell"] = ell;
    j["regime"] = bouquet::regime_name(c.regime);
    Json rows = Json::array();
    for (std::size_t i = 1; i <= socles.size(); ++i) {
      Json row;
      row["standard"] = dname(i);
      row["socle"] = sname(socles[i - 1]);
      rows.push_back(std::move(row));
    }
    j["socles"] = std::move(rows);
    emit_json(j);
    return 0;
  }
  std::ostringstream os;
  os << "standard\tsocle\n";
  for (std::size_t i = 1; i <= socles.size(); ++i)
    os << dname(i) << '\t' << sname(socles[i - 1]) << '\n';
  emit(os.str());
  return 0;
}

int run_res(std::size_t ell, const std::string& lambda_text,
            const std::string& out) {
  const Format fmt = resolve_format(out, Format::TSV, {Format::TSV, Format::JSON});
  const auto c = bouquet::classify(ell, bouquet::parse_rational(lambda_text));
  const auto t = bouquet::res_table(ell, c.regime);
  if (fmt == Format::JSON) {
    emit_json(bouquet::json_of(t));
    return 0;
  }
  std::ostringstream os;
  os << "object\timage\tnote\n";
  const auto render = [&os](const std::vector<bouquet::ResImage>& images,
                            const std::function<std::string(std::size_t)>& tag) {
    for (std::size_t i = 1; i <= images.size(); ++i) {
      const auto& img = images[i - 1];
      os << tag(i) << '\t';
      if (img.undefined_index) {
        os << "\tambiguous\n";
      } else if (img.labels.empty()) {
        os << "0\t\n";
      } else {
        os << join(img.labels, "+") << "\t\n";
      }
    }
  };
  render(t.delta_images, dname);
  render(t.simple_images, sname);
  emit(os.str());
  return 0;
}

int run_support(std::size_t ell, const std::string& out) {
  const Format fmt = resolve_format(out, Format::TSV, {Format::TSV, Format::JSON});
  const auto dims = bouquet::support_dims_ambient(ell);
  if (fmt == Format::JSON) {
    Json j;
    j["ell"] = ell;
    j["dims"] = dims;
    emit_json(j);
    return 0;
  }
  std::ostringstream os;
  os << "simple\tdim\n";
  for (std::size_t i = 1; i <= dims.size(); ++i)
    os << sname(i) << '\t' << dims[i - 1] << '\n';
  emit(os.str());
  return 0;
}

int run_audit(std::size_t ell, const std::string& lambda_text,
              const std::string& out) {
  resolve_format(out, Format::JSON, {Format::JSON});
  const auto c = bouquet::classify(ell, bouquet::parse_rational(lambda_text));
  const AuditReport report = bouquet::audit(ell, c.regime);
  emit_json(bouquet::json_of(report));
  return 0;
}

int run_reflect(const std::string& lambda_text, const std::string& out) {
  const Format fmt = resolve_format(out, Format::ASCII, {Format::ASCII, Format::JSON});
  const Rational lambda = bouquet::parse_rational(lambda_text);
  const Rational mirrored = bouquet::reflect(lambda);
  if (fmt == Format::JSON) {
    Json j;
    j["lambda"] = bouquet::format_rational(lambda);
    j["reflected"] = bouquet::format_rational(mirrored);
    emit_json(j);
    return 0;
  }
  emit("lambda: " + bouquet::format_rational(lambda) + "\n" +
       "reflected: " + bouquet::format_rational(mirrored) + "\n");
  return 0;
}

// Randomized cross-checks: the simplex path against the projection optimizer
// on small systems, classifier invariance under the reflection, and the two
// frozen slice chamber counts.  Exit 1 on any mismatch.
int run_selfcheck(unsigned long seed, const std::string& out) {
  resolve_format(out, Format::ASCII, {Format::ASCII});
  std::mt19937 gen(static_cast<std::mt19937::result_type>(seed));
  std::uniform_int_distribution<int> dim_d(2, 3);
  std::uniform_int_distribution<int> count_d(3, 6);
  std::uniform_int_distribution<int> coef_d(-3, 3);
  std::uniform_int_distribution<int> sense_d(0, 5);

  const int lp_trials = 40;
  int lp_bad = 0;
  for (int t = 0; t < lp_trials; ++t) {
    const std::size_t d = static_cast<std::size_t>(dim_d(gen));
    const int m = count_d(gen);
    bouquet::InequalitySystem sys(d);
    for (int i = 0; i < m; ++i) {
      bouquet::AffineFunctional f;
      f.linear_part.assign(d, Rational(0));
      for (auto& x : f.linear_part) x = Rational(coef_d(gen));
      f.constant = Rational(coef_d(gen));
      const int s = sense_d(gen);
      const bouquet::Sense sense = s == 0   ? bouquet::Sense::EQ
                                   : s % 2 ? bouquet::Sense::GE
                                           : bouquet::Sense::LE;
      sys.add(std::move(f), sense);
    }
    Vector obj(d, Rational(0));
    bool nonzero = false;
    for (auto& x : obj) {
      x = Rational(coef_d(gen));
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) obj[0] = Rational(1);
    const auto lp = bouquet::lp_solve(sys, obj, bouquet::Objective::MIN);
    const auto fm = bouquet::fm_optimize(sys, obj, bouquet::Objective::MIN);
    if (lp.status != fm.status ||
        (lp.status == bouquet::LPStatus::OPTIMAL && lp.value != fm.value))
      ++lp_bad;
  }

  std::uniform_int_distribution<long> num_d(-40, 40);
  std::uniform_int_distribution<long> den_d(1, 12);
  int refl_trials = 0;
  int refl_bad = 0;
  for (std::size_t ell = 2; ell <= 4; ++ell) {
    for (int t = 0; t < 60; ++t) {
      const Rational lam = bouquet::make_rational(num_d(gen), den_d(gen));
      const auto a = bouquet::classify(ell, lam);
      const auto b = bouquet::classify(ell, bouquet::reflect(lam));
      ++refl_trials;
      if (a.regime != b.regime || a.singular != b.singular ||
          a.abelian_localization != b.abelian_localization)
        ++refl_bad;
    }
  }

  bool slices_ok = true;
  slices_ok = slices_ok &&
              bouquet::slice_decomposition(2, Rational(-2)).chambers.size() == 5;
  slices_ok = slices_ok &&
              bouquet::slice_decomposition(2, bouquet::make_rational(-5, 2))
                      .chambers.size() == 5;

  std::ostringstream os;
  os << "lp-vs-projection: " << lp_trials << " trials, " << lp_bad
     << " mismatches\n";
  os << "reflection-invariance: " << refl_trials << " trials, " << refl_bad
     << " mismatches\n";
  os << "slice-chambers: " << (slices_ok ? "ok" : "mismatch") << "\n";
  os << "seed: " << seed << "\n";
  const bool ok = lp_bad == 0 && refl_bad == 0 && slices_ok;
  os << "selfcheck: " << (ok ? "ok" : "FAIL") << "\n";
  emit(os.str());
  return ok ? 0 : 1;
}

int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    std::cerr << "bouquet-o: " << e.what() << "\n";
    return 2;
  } catch (const ScopeError& e) {
    std::string m = e.what();
    if (m.rfind("degenerate parameter", 0) == 0) m = "NON_REGULAR: " + m;
    std::cerr << "bouquet-o: " << m << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "bouquet-o: invalid JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bouquet-o: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "bouquet-o: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact chamber decompositions, fixed-point diagrams and block tables "
      "for bouquet quiver varieties"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string out;
  unsigned long seed = 12345;
  long hshift = 0;
  app.add_option("--out", out, "output format: json, tsv, dot or ascii")
      ->check(CLI::IsMember({"json", "tsv", "dot", "ascii"}));
  app.add_option("--seed", seed, "seed for the randomized self checks");
  app.add_option("--hshift", hshift, "wall shift for the minus side (0 or 1)")
      ->check(CLI::Range(0, 1));

  std::size_t a_ell = 0;
  std::size_t a_n = 0;
  std::string a_lambda;
  std::string a_file;
  std::string a_kind;
  std::string a_lambda_opt;
  CLI::Option* lambda_opt = nullptr;

  struct Cmd {
    CLI::App* sub;
    std::function<int()> run;
  };
  std::vector<Cmd> cmds;

  {
    auto* sub = app.add_subcommand("slice", "slice chamber decomposition");
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    sub->add_option("lambda", a_lambda, "slice parameter, a rational like -5/2")
        ->required();
    cmds.push_back({sub, [&] { return run_slice(a_ell, a_lambda, out, hshift); }});
  }
  {
    auto* sub = app.add_subcommand(
        "sign-vectors", "feasible and bounded sign vectors of an arrangement file");
    sub->add_option("file", a_file, "arrangement JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmds.push_back({sub, [&] { return run_sign_vectors(a_file, out, hshift); }});
  }
  {
    auto* sub = app.add_subcommand("fixed-points",
                                   "isolated torus fixed points as diagrams");
    sub->add_option("n", a_n, "dimension of the representation space")->required();
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    cmds.push_back({sub, [&] { return run_fixed_points(a_n, a_ell, out); }});
  }
  {
    auto* sub = app.add_subcommand(
        "fixed-components", "fixed locus of a distinguished one-parameter subgroup");
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    sub->add_option("kind", a_kind, "subgroup: nu-tilde, nu-prime or t-prime")
        ->required()
        ->check(CLI::IsMember({"nu-tilde", "nu-prime", "t-prime"}));
    lambda_opt = sub->add_option("lambda", a_lambda_opt,
                                 "optional quantization parameter");
    cmds.push_back({sub, [&] {
                      std::optional<std::string> lam;
                      if (lambda_opt->count() > 0) lam = a_lambda_opt;
                      return run_fixed_components(a_ell, a_kind, lam, out);
                    }});
  }
  {
    auto* sub = app.add_subcommand("leaves", "symplectic leaf table");
    sub->add_option("n", a_n, "dimension of the representation space")->required();
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    cmds.push_back({sub, [&] { return run_leaves(a_n, a_ell, out); }});
  }
  {
    auto* sub = app.add_subcommand("dims", "dimension report");
    sub->add_option("n", a_n, "dimension of the representation space")->required();
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    cmds.push_back({sub, [&] { return run_dims(a_n, a_ell, out); }});
  }
  {
    auto* sub = app.add_subcommand("classify", "classify a quantization parameter");
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    sub->add_option("lambda", a_lambda, "parameter, a rational like -1/2")
        ->required();
    cmds.push_back({sub, [&] { return run_classify(a_ell, a_lambda, out); }});
  }
  {
    auto* sub = app.add_subcommand("homs", "arrows between standard objects");
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    sub->add_option("lambda", a_lambda, "parameter")->required();
    cmds.push_back({sub, [&] { return run_homs(a_ell, a_lambda, out); }});
  }
  {
    auto* sub = app.add_subcommand("mult", "composition multiplicities");
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    sub->add_option("lambda", a_lambda, "parameter")->required();
    cmds.push_back({sub, [&] { return run_mult(a_ell, a_lambda, out); }});
  }
  {
    auto* sub = app.add_subcommand("socles", "socles of the standard objects");
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    sub->add_option("lambda", a_lambda, "parameter")->required();
    cmds.push_back({sub, [&] { return run_socles(a_ell, a_lambda, out); }});
  }
  {
    auto* sub = app.add_subcommand("res", "restriction images in the slice");
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    sub->add_option("lambda", a_lambda, "parameter")->required();
    cmds.push_back({sub, [&] { return run_res(a_ell, a_lambda, out); }});
  }
  {
    auto* sub = app.add_subcommand("support", "support dimensions of the simples");
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    cmds.push_back({sub, [&] { return run_support(a_ell, out); }});
  }
  {
    auto* sub = app.add_subcommand(
        "audit", "confront the closed-form tables with the chamber engine");
    sub->add_option("ell", a_ell, "number of loop pairs")->required();
    sub->add_option("lambda", a_lambda, "parameter")->required();
    cmds.push_back({sub, [&] { return run_audit(a_ell, a_lambda, out); }});
  }
  {
    auto* sub = app.add_subcommand("reflect", "mirror a parameter across -1/2");
    sub->add_option("lambda", a_lambda, "parameter")->required();
    cmds.push_back({sub, [&] { return run_reflect(a_lambda, out); }});
  }
  {
    auto* sub = app.add_subcommand("selfcheck", "randomized internal cross-checks");
    cmds.push_back({sub, [&] { return run_selfcheck(seed, out); }});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "bouquet-o: " << e.what() << "\n";
    return 2;
  }

  for (const auto& c : cmds)
    if (app.got_subcommand(c.sub)) return guarded(c.run);
  std::cerr << "bouquet-o: no command selected\n";
  return 2;
}

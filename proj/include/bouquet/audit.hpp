#ifndef BOUQUET_AUDIT_HPP
#define BOUQUET_AUDIT_HPP

#include <bouquet/paramcat.hpp>

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace bouquet {

enum class CheckStatus { PASS, FAIL, AMBIGUOUS };

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::PASS: return "PASS";
    case CheckStatus::FAIL: return "FAIL";
    case CheckStatus::AMBIGUOUS: return "AMBIGUOUS";
  }
  return "";
}

struct AuditCheck {
  std::string name;
  std::size_t index = 0;
  CheckStatus status = CheckStatus::FAIL;
  std::string detail;
};

struct AuditReport {
  std::size_t ell = 0;
  Regime regime = Regime::INTEGRAL_LARGE;
  Rational slice_parameter;
  std::vector<AuditCheck> checks;

  bool no_failures() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::FAIL) return false;
    return true;
  }
};

namespace detail {

// Socle constituents of the slice standard at a 1-based chamber label,
// again as 1-based labels. In the integral regime the socle of a paired
// standard below the middle sits at the mirrored index 2*ell-k, above it
// at the next index up, and the middle standard has a two-simple socle.
// In the half-integral regime each lower standard keeps only its partner.
inline std::vector<std::size_t> slice_socle_labels(std::size_t ell,
                                                   std::size_t label,
                                                   Regime regime) {
  const std::size_t mid = slice_mid_position(ell);
  std::size_t k = 0;
  bool a_side = false;
  if (label != mid) {
    if (label < mid) {
      k = (label + 1) / 2;
      a_side = label % 2 == 1;
    } else {
      const std::size_t off = label - mid;
      k = ell + (off + 1) / 2;
      a_side = off % 2 == 1;
    }
  }
  if (regime == Regime::HALF_INTEGRAL_LARGE) {
    if (label >= mid) return {label};
    return {slice_position(ell, a_side ? 'b' : 'a', 2 * ell - k)};
  }
  if (label == mid)
    return {slice_position(ell, 'a', ell + 1), slice_position(ell, 'b', ell + 1)};
  if (k < ell) return {slice_position(ell, a_side ? 'b' : 'a', 2 * ell - k)};
  if (k < 2 * ell - 1) return {slice_position(ell, a_side ? 'a' : 'b', k + 1)};
  return {label};
}

struct AlignmentVerdict {
  bool ok = false;
  std::string note;
};

}  // namespace detail

// Confrontation of the closed-form tables with the polyhedral slice engine.
// Emits one table-consistency check and one restriction-exactness check per
// ambient index. The exactness check balances the restriction of a standard
// against the restrictions of its constituents under both label alignments;
// an index passes when at least one alignment balances and transports the
// socle into the slice socle. The two ladder positions where the alignments
// genuinely disagree about the label set, ell-1 and 2*ell, are always
// reported AMBIGUOUS with both verdicts spelled out.
inline AuditReport audit(std::size_t ell, Regime regime) {
  if (ell < 2) throw ScopeError("level must be at least 2");
  detail::require_large(regime);
  AuditReport rep;
  rep.ell = ell;
  rep.regime = regime;
  const long l = static_cast<long>(ell);
  const auto mult = multiplicity_table(ell, regime);
  const auto soc = socle_table(ell, regime);
  const auto homs = hom_digraph(ell, regime);
  const std::size_t n = 2 * ell;

  for (std::size_t i = 1; i <= n; ++i) {
    const auto& row = mult.rows[i - 1];
    bool ok = !row.empty() && row.front() == i;
    ok = ok && std::count(row.begin(), row.end(), i) == 1;
    ok = ok && row.back() == soc[i - 1];
    std::set<std::size_t> column;
    for (const auto& [s, t] : homs.edges)
      if (t == i) column.insert(s);
    std::set<std::size_t> members(row.begin(), row.end());
    members.erase(i);
    ok = ok && column == members;
    rep.checks.push_back({"table-consistency", i,
                          ok ? CheckStatus::PASS : CheckStatus::FAIL,
                          ok ? "head, socle and arrow columns agree"
                             : "tables disagree at this index"});
  }

  if (regime == Regime::GENERIC_LARGE) {
    rep.slice_parameter = make_rational(-3 * l - 4, 3);
    for (std::size_t i = 1; i <= n; ++i)
      rep.checks.push_back({"restriction-exactness", i, CheckStatus::PASS,
                            "diagonal row; nothing to balance"});
    return rep;
  }

  rep.slice_parameter = regime == Regime::INTEGRAL_LARGE
                            ? Rational(-l - 1)
                            : make_rational(-2 * l - 1, 2);
  const auto sd = slice_decomposition(ell, rep.slice_parameter);

  const auto verdict = [&](std::size_t i, bool head) {
    detail::AlignmentVerdict v;
    const auto dimg = detail::restriction_labels(ell, i, regime, head, false);
    if (!dimg) {
      v.note = "names a label beyond the slice ladder";
      return v;
    }
    std::vector<std::size_t> lhs;
    for (const auto j : mult.rows[i - 1]) {
      const auto simg = detail::restriction_labels(ell, j, regime, head, true);
      if (!simg) {
        v.note = "names a label beyond the slice ladder";
        return v;
      }
      lhs.insert(lhs.end(), simg->begin(), simg->end());
    }
    std::vector<std::size_t> rhs;
    for (const auto lab : *dimg) {
      const auto& subq = sd.chambers[lab - 1].subquotients;
      rhs.insert(rhs.end(), subq.begin(), subq.end());
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) {
      v.note = "constituent multisets differ";
      return v;
    }
    const auto ssoc =
        detail::restriction_labels(ell, soc[i - 1], regime, head, true);
    if (!ssoc) {
      v.note = "socle names a label beyond the slice ladder";
      return v;
    }
    std::set<std::size_t> target;
    for (const auto lab : *dimg)
      for (const auto s : detail::slice_socle_labels(ell, lab, regime))
        target.insert(s);
    for (const auto s : *ssoc)
      if (!target.count(s)) {
        v.note = "socle escapes the slice socle";
        return v;
      }
    v.ok = true;
    v.note = "balances and transports the socle";
    return v;
  };

  for (std::size_t i = 1; i <= n; ++i) {
    const auto head = verdict(i, true);
    const auto tail = verdict(i, false);
    const bool boundary = i == ell - 1 || i == n;
    AuditCheck c;
    c.name = "restriction-exactness";
    c.index = i;
    c.detail = "head-aligned: " + head.note + "; tail-aligned: " + tail.note;
    if (boundary) {
      c.status = CheckStatus::AMBIGUOUS;
      c.detail = "ladder boundary; " + c.detail;
    } else {
      c.status = head.ok || tail.ok ? CheckStatus::PASS : CheckStatus::FAIL;
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace bouquet

#endif

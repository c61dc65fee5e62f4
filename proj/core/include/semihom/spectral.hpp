#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semihom/arith.hpp"

namespace semihom {

enum class PageKind { mclean, order };

const char* to_string(PageKind kind);

/// E1 page with columns canonicalized to the m-divisor index i in
/// [-floor(m/d), -1] and rows by total degree s = p + q. Both sequences
/// degenerate in scope, so E1 = E_infinity and no differentials are stored.
struct SpectralPage {
  PageKind kind = PageKind::mclean;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, FgAbGroup> entries;  ///< (i, s)

  FgAbGroup at(std::int64_t column, std::int64_t total_degree) const;
  /// Entries of column i, keyed by total degree.
  GradedGroup column(std::int64_t i) const;
  std::vector<std::int64_t> columns() const;

  friend bool operator==(const SpectralPage&, const SpectralPage&) = default;
};

/// Column i holds H_{n-1-s-2i(d-n)} of the Denef-Loeser cover of E_i (the
/// grading already includes the +2m correction).
SpectralPage mclean_e1(std::int64_t n, std::int64_t d, std::int64_t m);

/// Column i = -rho holds H^s_c of the order-rho stratum of X_m.
SpectralPage order_e1(std::int64_t n, std::int64_t d, std::int64_t m);

/// Total-degree offset (n-1)(2m+1) taking the McLean page to the order page.
std::int64_t arc_floer_shift(std::int64_t n, std::int64_t m);

struct PageMismatch {
  std::int64_t column;
  std::int64_t mclean_degree;
  FgAbGroup mclean;
  FgAbGroup order;
};

/// Entry-by-entry comparison mclean(i, s) vs order(i, s + (n-1)(2m+1)),
/// covering the supports of both pages.
std::vector<PageMismatch> page_mismatches(std::int64_t n, std::int64_t d, std::int64_t m);

bool compare_pages(std::int64_t n, std::int64_t d, std::int64_t m);

struct ConditionReport {
  bool holds = true;
  std::vector<std::int64_t> violating_k;

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

/// 2k(d-n) + 1 not in {+-1, +-(n-1), +-(n-2), +-(2n-3)} for k in [1, m/d).
ConditionReport condition_degeneration(std::int64_t n, std::int64_t d, std::int64_t m);

/// 2k(d-n) not in {0, +-(n-2), +-(n-1)} for k in [1, m/d).
ConditionReport condition_filtration(std::int64_t n, std::int64_t d, std::int64_t m);

bool degeneration_violated_at(std::int64_t n, std::int64_t d, std::int64_t k);
bool filtration_violated_at(std::int64_t n, std::int64_t d, std::int64_t k);

struct FloerResult {
  ConditionReport degeneration;
  ConditionReport filtration;
  /// HF^*(phi^m, +); nullopt when the conditions fail and the groups are not
  /// determined.
  std::optional<GradedGroup> groups;

  friend bool operator==(const FloerResult&, const FloerResult&) = default;
};

FloerResult floer_cohomology(std::int64_t n, std::int64_t d, std::int64_t m);

enum class PairColor { blue, orange, yellow, pink };

const char* to_string(PairColor c);
PairColor pair_color_from_string(const std::string& s);

struct PairClass {
  PairColor color = PairColor::blue;
  /// Smallest k violating each condition; the condition first fails at m = k d + 1.
  std::optional<std::int64_t> degeneration_witness_k;
  std::optional<std::int64_t> filtration_witness_k;

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

/// Largest k that can violate either condition: floor((n-1)/|d-n|), or 1 if d == n.
std::int64_t classification_scan_bound(std::int64_t n, std::int64_t d);

PairClass classify_pair(std::int64_t n, std::int64_t d);
PairClass classify_pair_with_bound(std::int64_t n, std::int64_t d, std::int64_t k_max);

struct ScatterRow {
  std::int64_t n;
  std::int64_t d;
  PairClass cls;

  friend bool operator==(const ScatterRow&, const ScatterRow&) = default;
};

/// classify_pair over [n_lo, n_hi] x [d_lo, d_hi], n-major order.
std::vector<ScatterRow> scatter_grid(std::int64_t n_lo, std::int64_t n_hi, std::int64_t d_lo,
                                     std::int64_t d_hi);

/// "n,d,class" header followed by one row per pair.
std::string scatter_csv(const std::vector<ScatterRow>& rows);
/// Standalone SVG: one filled square per pair, n horizontal and d vertical.
std::string scatter_svg(const std::vector<ScatterRow>& rows);

/// Lefschetz number of the m-th monodromy iterate from the resolution side,
/// checked against 1 + (-1)^{n-1} (d-1)^n when d | m and 0 otherwise.
Integer lefschetz_number(std::int64_t n, std::int64_t d, std::int64_t m);

}  // namespace semihom

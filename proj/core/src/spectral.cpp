#include "semihom/spectral.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "semihom/contact.hpp"
#include "semihom/error.hpp"
#include "semihom/resolution.hpp"
#include "semihom/surface_topology.hpp"

namespace semihom {

const char* to_string(PageKind kind) { return kind == PageKind::mclean ? "mclean" : "order"; }

FgAbGroup SpectralPage::at(std::int64_t column, std::int64_t total_degree) const {
  auto it = entries.find({column, total_degree});
  return it == entries.end() ? FgAbGroup() : it->second;
}

GradedGroup SpectralPage::column(std::int64_t i) const {
  GradedGroup g;
  for (const auto& [key, grp] : entries) {
    if (key.first == i) g.add(key.second, grp);
  }
  return g;
}

std::vector<std::int64_t> SpectralPage::columns() const {
  std::set<std::int64_t> cols;
  for (const auto& [key, grp] : entries) cols.insert(key.first);
  return {cols.begin(), cols.end()};
}

SpectralPage mclean_e1(std::int64_t n, std::int64_t d, std::int64_t m) {
  validate_contact_params(n, d, m);
  SpectralPage page{PageKind::mclean, n, d, m, {}};
  ResolutionChain chain = build_minimal_resolution(n, d, m);
  for (const auto& entry : m_divisors(chain).entries) {
    if (!entry.exceptional) continue;
    const std::int64_t i = entry.index;
    // 2m(nu_i/N_i - 1) = 2i(d - n).
    const std::int64_t weight = 2 * i * (d - n);
    const GradedGroup cover = cover_homology(n, d, i, m);
    for (const auto& [k, grp] : cover.entries()) {
      page.entries.emplace(std::pair{i, n - 1 - k - weight}, grp);
    }
  }
  return page;
}

SpectralPage order_e1(std::int64_t n, std::int64_t d, std::int64_t m) {
  SpectralPage page{PageKind::order, n, d, m, {}};
  for (const auto& piece : graded_pieces(n, d, m)) {
    const GradedGroup piece_h = piece_compact_cohomology(piece, n, d);
    for (const auto& [s, grp] : piece_h.entries()) {
      page.entries.emplace(std::pair{-piece.rho, s}, grp);
    }
  }
  return page;
}

std::int64_t arc_floer_shift(std::int64_t n, std::int64_t m) { return (n - 1) * (2 * m + 1); }

std::vector<PageMismatch> page_mismatches(std::int64_t n, std::int64_t d, std::int64_t m) {
  SpectralPage mclean = mclean_e1(n, d, m);
  SpectralPage order = order_e1(n, d, m);
  const std::int64_t offset = arc_floer_shift(n, m);
  std::set<std::pair<std::int64_t, std::int64_t>> keys;
  for (const auto& [key, grp] : mclean.entries) keys.insert(key);
  for (const auto& [key, grp] : order.entries) keys.insert({key.first, key.second - offset});
  std::vector<PageMismatch> out;
  for (const auto& [i, s] : keys) {
    FgAbGroup a = mclean.at(i, s);
    FgAbGroup b = order.at(i, s + offset);
    if (!(a == b)) out.push_back({i, s, a, b});
  }
  return out;
}

bool compare_pages(std::int64_t n, std::int64_t d, std::int64_t m) {
  return page_mismatches(n, d, m).empty();
}

namespace {

std::int64_t k_upper(std::int64_t d, std::int64_t m) {
  // Integers k with 1 <= k < m/d, i.e. k d < m.
  return (m - 1) / d;
}

void validate_condition_params(std::int64_t n, std::int64_t d, std::int64_t m) {
  detail::require(n >= 3 && d >= 1 && m >= 1, "conditions need n ≥ 3, d ≥ 1, m ≥ 1");
  detail::require(n <= kMaxParameter && d <= kMaxParameter && m <= kMaxParameter,
                  "n, d and m must be ≤ " + std::to_string(kMaxParameter));
}

template <typename Violated>
ConditionReport scan(std::int64_t n, std::int64_t d, std::int64_t m, Violated violated) {
  validate_condition_params(n, d, m);
  ConditionReport report;
  for (std::int64_t k = 1; k <= k_upper(d, m); ++k) {
    if (violated(n, d, k)) report.violating_k.push_back(k);
  }
  report.holds = report.violating_k.empty();
  return report;
}

}  // namespace

bool degeneration_violated_at(std::int64_t n, std::int64_t d, std::int64_t k) {
  const std::int64_t v = std::llabs(2 * k * (d - n) + 1);
  return v == 1 || v == n - 1 || v == n - 2 || v == 2 * n - 3;
}

bool filtration_violated_at(std::int64_t n, std::int64_t d, std::int64_t k) {
  const std::int64_t v = std::llabs(2 * k * (d - n));
  return v == 0 || v == n - 2 || v == n - 1;
}

ConditionReport condition_degeneration(std::int64_t n, std::int64_t d, std::int64_t m) {
  return scan(n, d, m, degeneration_violated_at);
}

ConditionReport condition_filtration(std::int64_t n, std::int64_t d, std::int64_t m) {
  return scan(n, d, m, filtration_violated_at);
}

FloerResult floer_cohomology(std::int64_t n, std::int64_t d, std::int64_t m) {
  validate_contact_params(n, d, m);
  FloerResult out;
  out.degeneration = condition_degeneration(n, d, m);
  out.filtration = condition_filtration(n, d, m);
  if (out.degeneration.holds && out.filtration.holds) {
    out.groups = shift(contact_cohomology(n, d, m), -arc_floer_shift(n, m));
  }
  return out;
}

const char* to_string(PairColor c) {
  switch (c) {
    case PairColor::blue:
      return "blue";
    case PairColor::orange:
      return "orange";
    case PairColor::yellow:
      return "yellow";
    case PairColor::pink:
      return "pink";
  }
  return "?";
}

PairColor pair_color_from_string(const std::string& s) {
  if (s == "blue") return PairColor::blue;
  if (s == "orange") return PairColor::orange;
  if (s == "yellow") return PairColor::yellow;
  if (s == "pink") return PairColor::pink;
  throw InvalidArgument("unknown pair class: " + s);
}

std::int64_t classification_scan_bound(std::int64_t n, std::int64_t d) {
  if (d == n) return 1;
  // A violation needs |2k(d-n)| <= 2n-2.
  return (n - 1) / std::llabs(d - n);
}

PairClass classify_pair_with_bound(std::int64_t n, std::int64_t d, std::int64_t k_max) {
  detail::require(n >= 3 && d >= 2, "classify_pair needs n ≥ 3 and d ≥ 2");
  PairClass cls;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    if (!cls.degeneration_witness_k && degeneration_violated_at(n, d, k)) {
      cls.degeneration_witness_k = k;
    }
    if (!cls.filtration_witness_k && filtration_violated_at(n, d, k)) {
      cls.filtration_witness_k = k;
    }
  }
  const bool deg = cls.degeneration_witness_k.has_value();
  const bool filt = cls.filtration_witness_k.has_value();
  cls.color = deg && filt ? PairColor::pink
              : filt      ? PairColor::orange
              : deg       ? PairColor::yellow
                          : PairColor::blue;
  return cls;
}

PairClass classify_pair(std::int64_t n, std::int64_t d) {
  return classify_pair_with_bound(n, d, classification_scan_bound(n, d));
}

std::vector<ScatterRow> scatter_grid(std::int64_t n_lo, std::int64_t n_hi, std::int64_t d_lo,
                                     std::int64_t d_hi) {
  detail::require(n_lo >= 3 && d_lo >= 2, "scatter grid needs n ≥ 3 and d ≥ 2");
  detail::require(n_lo <= n_hi && d_lo <= d_hi, "scatter grid ranges are empty");
  detail::require(n_hi <= kMaxParameter && d_hi <= kMaxParameter, "scatter grid too large");
  std::vector<ScatterRow> rows;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    for (std::int64_t d = d_lo; d <= d_hi; ++d) rows.push_back({n, d, classify_pair(n, d)});
  }
  return rows;
}

std::string scatter_csv(const std::vector<ScatterRow>& rows) {
  std::string out = "n,d,class\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + std::to_string(row.d) + "," + to_string(row.cls.color) +
           "\n";
  }
  return out;
}

namespace {

const char* fill_for(PairColor c) {
  switch (c) {
    case PairColor::blue:
      return "#1f77b4";
    case PairColor::orange:
      return "#ff7f0e";
    case PairColor::yellow:
      return "#f2d230";
    case PairColor::pink:
      return "#e377c2";
  }
  return "#000000";
}

}  // namespace

std::string scatter_svg(const std::vector<ScatterRow>& rows) {
  std::int64_t n_lo = 0, n_hi = 0, d_lo = 0, d_hi = 0;
  if (!rows.empty()) {
    n_lo = n_hi = rows.front().n;
    d_lo = d_hi = rows.front().d;
  }
  for (const auto& row : rows) {
    n_lo = std::min(n_lo, row.n);
    n_hi = std::max(n_hi, row.n);
    d_lo = std::min(d_lo, row.d);
    d_hi = std::max(d_hi, row.d);
  }
  constexpr int cell = 10;
  constexpr int margin = 40;
  constexpr int legend_w = 120;
  const std::int64_t plot_w = (n_hi - n_lo + 1) * cell;
  const std::int64_t plot_h = (d_hi - d_lo + 1) * cell;
  const std::int64_t width = plot_w + 2 * margin + legend_w;
  const std::int64_t height = plot_h + 2 * margin;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& row : rows) {
    const std::int64_t x = margin + (row.n - n_lo) * cell;
    const std::int64_t y = margin + (d_hi - row.d) * cell;
    svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
           std::to_string(cell - 1) + "\" height=\"" + std::to_string(cell - 1) + "\" fill=\"" +
           fill_for(row.cls.color) + "\"><title>n=" + std::to_string(row.n) +
           " d=" + std::to_string(row.d) + " " + to_string(row.cls.color) + "</title></rect>\n";
  }
  svg += "<text x=\"" + std::to_string(margin + plot_w / 2) + "\" y=\"" +
         std::to_string(height - 10) + "\" font-size=\"12\" text-anchor=\"middle\">n</text>\n";
  svg += "<text x=\"12\" y=\"" + std::to_string(margin + plot_h / 2) +
         "\" font-size=\"12\">d</text>\n";
  const PairColor legend[] = {PairColor::blue, PairColor::orange, PairColor::yellow,
                              PairColor::pink};
  std::int64_t ly = margin;
  for (PairColor c : legend) {
    const std::int64_t lx = margin + plot_w + 20;
    svg += "<rect x=\"" + std::to_string(lx) + "\" y=\"" + std::to_string(ly) +
           "\" width=\"12\" height=\"12\" fill=\"" + fill_for(c) + "\"/>\n";
    svg += "<text x=\"" + std::to_string(lx + 18) + "\" y=\"" + std::to_string(ly + 11) +
           "\" font-size=\"12\">" + to_string(c) + "</text>\n";
    ly += 20;
  }
  svg += "</svg>\n";
  return svg;
}

Integer lefschetz_number(std::int64_t n, std::int64_t d, std::int64_t m) {
  validate_euler_params(n, d, m);
  // A'Campo: sum of chi of the Denef-Loeser covers over exceptional m-divisors.
  // For n = 2 only chi is modelled: intermediate covers are C^x-bundles over points.
  Integer value = 0;
  for (const auto& entry : m_divisors(build_minimal_resolution(n, d, m)).entries) {
    if (!entry.exceptional) continue;
    if (n >= 3) {
      value += euler_char(cover_homology(n, d, entry.index, m));
    } else if (entry.divisor.pair == CoprimePair(0, 1)) {
      value += milnor_fiber_euler(n, d);
    }
  }
  detail::ensure(value == contact_euler_closed_form(n, d, m),
                 "Lefschetz number disagrees with its closed form");
  return value;
}

}  // namespace semihom

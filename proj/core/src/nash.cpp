#include "semihom/nash.hpp"

#include <algorithm>

#include "semihom/error.hpp"

namespace semihom {

std::vector<Divisor> essential_valuations(std::int64_t n, std::int64_t d, std::int64_t m) {
  ResolutionChain chain = build_minimal_resolution(n, d, m);
  std::vector<Divisor> out;
  for (const auto& entry : m_divisors(chain).entries) {
    if (entry.exceptional) out.push_back(entry.divisor);
  }
  return out;
}

std::vector<Divisor> contact_valuations(std::int64_t n, std::int64_t d, std::int64_t m) {
  std::vector<Divisor> essential = essential_valuations(n, d, m);
  if (d >= n || essential.empty()) return essential;
  // E_{-1} is last in ascending index order.
  return {essential.back()};
}

std::vector<Divisor> dlt_valuations(std::int64_t n, std::int64_t d, std::int64_t m) {
  if (d < n) {
    validate_resolution_params(n, d, m);
    return {};
  }
  return essential_valuations(n, d, m);
}

std::int64_t stratum_codimension(std::int64_t n, std::int64_t d, std::int64_t m, std::int64_t i) {
  validate_resolution_params(n, d, m);
  detail::require(i >= -(m / d) && i <= -1, "stratum index i must lie in [-floor(m/d), -1]");
  Divisor div = Divisor::make(m_divisor_pair(d, m, i), n, d);
  const std::int64_t closed_form = m + i * (d - n);
  detail::ensure((m * div.nu) % div.N == 0 && m * div.nu / div.N == closed_form,
                 "codimension formulas disagree");
  return closed_form;
}

namespace {

bool subset(const std::vector<Divisor>& a, const std::vector<Divisor>& b) {
  return std::all_of(a.begin(), a.end(), [&](const Divisor& x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  });
}

}  // namespace

ValuationReport valuation_report(std::int64_t n, std::int64_t d, std::int64_t m) {
  ValuationReport report;
  report.n = n;
  report.d = d;
  report.m = m;
  report.essential = essential_valuations(n, d, m);
  report.contact = contact_valuations(n, d, m);
  report.dlt = dlt_valuations(n, d, m);
  for (std::int64_t i = -(m / d); i <= -1; ++i) {
    report.codims[i] = stratum_codimension(n, d, m, i);
  }
  if (n == 2) report.note = "counts only; topology modules require n ≥ 3";
  detail::ensure(static_cast<std::int64_t>(report.essential.size()) == m / d,
                 "essential valuation count is not floor(m/d)");
  detail::ensure(subset(report.dlt, report.contact) && subset(report.contact, report.essential),
                 "valuation sets are not nested");
  return report;
}

}  // namespace semihom

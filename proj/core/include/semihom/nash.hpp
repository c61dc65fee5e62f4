#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semihom/resolution.hpp"

namespace semihom {

/// Exceptional m-divisors E_{-floor(m/d)}, ..., E_{-1} of the minimal resolution.
std::vector<Divisor> essential_valuations(std::int64_t n, std::int64_t d, std::int64_t m);

/// d < n: only E_{-1} (when m >= d). d >= n: every exceptional m-divisor.
std::vector<Divisor> contact_valuations(std::int64_t n, std::int64_t d, std::int64_t m);

/// d < n: none. d >= n: every exceptional m-divisor.
std::vector<Divisor> dlt_valuations(std::int64_t n, std::int64_t d, std::int64_t m);

/// Codimension m nu_i / N_i = m + i(d - n) of the stratum of arcs lifting to E_i.
std::int64_t stratum_codimension(std::int64_t n, std::int64_t d, std::int64_t m, std::int64_t i);

struct ValuationReport {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::vector<Divisor> essential;
  std::vector<Divisor> contact;
  std::vector<Divisor> dlt;
  std::map<std::int64_t, std::int64_t> codims;  ///< i -> codimension
  std::string note;  ///< set for n = 2, where only the counts are meaningful

  friend bool operator==(const ValuationReport&, const ValuationReport&) = default;
};

/// Assembles the three lists and codimensions; throws InternalError if the
/// nesting dlt <= contact <= essential or the count floor(m/d) fails.
ValuationReport valuation_report(std::int64_t n, std::int64_t d, std::int64_t m);

}  // namespace semihom

#include "semihom/surface_topology.hpp"

#include "semihom/error.hpp"
#include "semihom/resolution.hpp"

namespace semihom {

namespace {

Integer ipow(Integer base, std::int64_t exp) {
  Integer out = 1;
  for (std::int64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  Integer out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

bool is_odd(std::int64_t n) { return n % 2 != 0; }

}  // namespace

const LefschetzMap& LefschetzData::at(std::int64_t k) const {
  auto it = maps.find(k);
  detail::require(it != maps.end(), "no Lefschetz map recorded at this degree");
  return it->second;
}

void validate_surface_params(std::int64_t n, std::int64_t d) {
  detail::require(n >= 3, "n must be ≥ 3");
  detail::require(d >= 1, "d must be ≥ 1");
  detail::require(n <= kMaxParameter && d <= kMaxParameter,
                  "n and d must be ≤ " + std::to_string(kMaxParameter));
}

Integer hypersurface_euler(std::int64_t n, std::int64_t d) {
  detail::require(n >= 2 && d >= 1, "hypersurface_euler: needs n ≥ 2 and d ≥ 1");
  Integer numerator = ipow(Integer(1 - d), n) - 1;
  detail::ensure(numerator % d == 0, "Euler characteristic formula is not integral");
  return n + numerator / d;
}

Integer middle_rank(std::int64_t n, std::int64_t d) {
  validate_surface_params(n, d);
  Integer chi = hypersurface_euler(n, d);
  return is_odd(n) ? Integer(n - 1) - chi : chi - (n - 2);
}

Integer middle_rank_printed_formula(std::int64_t n, std::int64_t d) {
  validate_surface_params(n, d);
  Integer ceil_term = 2 * ((n - 1 + 1) / 2);
  Integer b = is_odd(n - 1) ? Integer(-ceil_term) : ceil_term;
  for (std::int64_t k = 0; k <= n - 2; ++k) {
    Integer term = binomial(n, k) * ipow(Integer(d), n - 1 - k);
    if (k % 2 == 0) {
      b += term;
    } else {
      b -= term;
    }
  }
  return b;
}

Integer milnor_number(std::int64_t n, std::int64_t d) {
  detail::require(n >= 1 && d >= 1, "milnor_number: n, d must be positive");
  return ipow(Integer(d - 1), n);
}

HypersurfaceData hypersurface_data(std::int64_t n, std::int64_t d) {
  validate_surface_params(n, d);
  HypersurfaceData data;
  data.n = n;
  data.d = d;
  data.b = middle_rank(n, d);
  data.mu = milnor_number(n, d);
  data.degenerate = d == 1;
  for (std::int64_t k = 0; k <= 2 * n - 4; ++k) {
    if (k == n - 2) {
      data.ring.add(k, FgAbGroup::free_of_rank(data.b));
    } else if (k % 2 == 0) {
      data.ring.add(k, FgAbGroup::free_of_rank(1));
    }
  }
  data.chi_S = euler_char(data.ring);
  return data;
}

LefschetzData lefschetz_data(const HypersurfaceData& data) {
  const std::int64_t n = data.n;
  LefschetzData lef;
  lef.n = n;
  const Integer b = data.b;
  for (std::int64_t k = -2; k <= 2 * n - 2; ++k) {
    FgAbGroup source = data.ring.at(k);
    FgAbGroup target = data.ring.at(k + 2);
    LefschetzMap map;
    if (is_odd(n) && k == n - 3) {
      // Z<h^{(n-3)/2}> -> Z<(1/d) h^{(n-1)/2}> is multiplication by d.
      map = {FgAbGroup(), FgAbGroup::cyclic(data.d)};
    } else if (!is_odd(n) && k == n - 4) {
      // Injective onto a primitive class.
      map = {FgAbGroup(), FgAbGroup::free_of_rank(b - 1)};
    } else if (!is_odd(n) && k == n - 2) {
      // Surjective onto H^n(S).
      map = {FgAbGroup::free_of_rank(b - 1), FgAbGroup()};
    } else if (source.rank() == 1 && target.rank() == 1) {
      map = {FgAbGroup(), FgAbGroup()};
    } else {
      // One side vanishes; the map is zero.
      map = {source, target};
    }
    lef.maps.emplace(k, map);
  }
  return lef;
}

GradedGroup gysin_cx_bundle(const HypersurfaceData& data, const LefschetzData& lef) {
  GradedGroup out;
  for (std::int64_t k = 0; k <= 2 * data.n - 2; ++k) {
    FgAbGroup group;
    if (lef.maps.contains(k - 3)) group = group + lef.at(k - 3).cokernel;
    if (lef.maps.contains(k - 2)) group = group + lef.at(k - 2).kernel;
    out.add(k, group);
  }
  return out;
}

GradedGroup intermediate_cover_homology(std::int64_t n, std::int64_t d) {
  validate_surface_params(n, d);
  Integer b = middle_rank(n, d);
  GradedGroup h;
  h.add(0, FgAbGroup::free_of_rank(1));
  if (is_odd(n)) {
    h.add(n - 2, FgAbGroup(b, {Integer(d)}));
    h.add(n - 1, FgAbGroup::free_of_rank(b));
  } else {
    h.add(n - 2, FgAbGroup::free_of_rank(b - 1));
    h.add(n - 1, FgAbGroup::free_of_rank(b - 1));
  }
  h.add(2 * n - 3, FgAbGroup::free_of_rank(1));
  return h;
}

GradedGroup milnor_fiber_homology(std::int64_t n, std::int64_t d) {
  validate_surface_params(n, d);
  GradedGroup h;
  h.add(0, FgAbGroup::free_of_rank(1));
  h.add(n - 1, FgAbGroup::free_of_rank(milnor_number(n, d)));
  return h;
}

GradedGroup cover_homology(std::int64_t n, std::int64_t d, std::int64_t i, std::int64_t m) {
  validate_surface_params(n, d);
  detail::require(m >= 1 && m <= kMaxParameter, "m out of range");
  detail::require(i >= -(m / d) && i <= -1, "cover index i must lie in [-floor(m/d), -1]");
  if (m_divisor_pair(d, m, i) == CoprimePair(0, 1)) return milnor_fiber_homology(n, d);
  return intermediate_cover_homology(n, d);
}

GradedGroup milnor_fiber_compact_cohomology(std::int64_t n, std::int64_t d) {
  validate_surface_params(n, d);
  GradedGroup h;
  h.add(n - 1, FgAbGroup::free_of_rank(milnor_number(n, d)));
  h.add(2 * n - 2, FgAbGroup::free_of_rank(1));
  return h;
}

GradedGroup cone_compact_cohomology(std::int64_t n, std::int64_t d) {
  HypersurfaceData data = hypersurface_data(n, d);
  return gysin_cx_bundle(data, lefschetz_data(data));
}

}  // namespace semihom

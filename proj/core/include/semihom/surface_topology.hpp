#pragma once

#include <cstdint>
#include <map>

#include "semihom/arith.hpp"

namespace semihom {

/// Cohomology data of a smooth degree-d hypersurface S in P^{n-1}.
struct HypersurfaceData {
  std::int64_t n = 0;
  std::int64_t d = 0;
  Integer b;      ///< rank of H^{n-2}(S)
  Integer mu;     ///< Milnor number (d-1)^n of the cone
  Integer chi_S;  ///< Euler characteristic of S
  GradedGroup ring;
  bool degenerate = false;  ///< d == 1: S is a hyperplane

  friend bool operator==(const HypersurfaceData&, const HypersurfaceData&) = default;
};

/// Kernel and cokernel of H^k(S) -> H^{k+2}(S), cup with the hyperplane class.
struct LefschetzMap {
  FgAbGroup kernel;
  FgAbGroup cokernel;

  friend bool operator==(const LefschetzMap&, const LefschetzMap&) = default;
};

struct LefschetzData {
  std::int64_t n = 0;
  std::map<std::int64_t, LefschetzMap> maps;  ///< keyed by source degree k in [-2, 2n-2]

  const LefschetzMap& at(std::int64_t k) const;
};

void validate_surface_params(std::int64_t n, std::int64_t d);

/// chi_S = n + ((1-d)^n - 1)/d; defined for n >= 2.
Integer hypersurface_euler(std::int64_t n, std::int64_t d);
/// b from chi_S = n + ((1-d)^n - 1)/d.
Integer middle_rank(std::int64_t n, std::int64_t d);

/// The alternating binomial expression with the ceiling term, kept for
/// comparison. Agrees with middle_rank for odd n only.
Integer middle_rank_printed_formula(std::int64_t n, std::int64_t d);

Integer milnor_number(std::int64_t n, std::int64_t d);

HypersurfaceData hypersurface_data(std::int64_t n, std::int64_t d);

LefschetzData lefschetz_data(const HypersurfaceData& data);

/// H_c of a C^x-bundle over S with Euler class +-h, via the compactly
/// supported Thom-Gysin sequence. H^k_c is the (split) extension of
/// ker(H^{k-2} -> H^k) by coker(H^{k-3} -> H^{k-1}).
GradedGroup gysin_cx_bundle(const HypersurfaceData& data, const LefschetzData& lef);

/// Closed-form homology of the Denef-Loeser cover of an intermediate divisor
/// (four groups at degrees 0, n-2, n-1, 2n-3).
GradedGroup intermediate_cover_homology(std::int64_t n, std::int64_t d);

/// Homology of the cover of E_(0,1): the affine Milnor fiber, a bouquet of
/// mu spheres of dimension n-1.
GradedGroup milnor_fiber_homology(std::int64_t n, std::int64_t d);

/// Homology of the cover of the m-divisor E_i, i in [-floor(m/d), -1].
GradedGroup cover_homology(std::int64_t n, std::int64_t d, std::int64_t i, std::int64_t m);

/// Z^mu at n-1 and Z at 2n-2.
GradedGroup milnor_fiber_compact_cohomology(std::int64_t n, std::int64_t d);

/// H_c of the punctured cone {h = 0} \ {0}, computed with the Gysin engine.
GradedGroup cone_compact_cohomology(std::int64_t n, std::int64_t d);

}  // namespace semihom

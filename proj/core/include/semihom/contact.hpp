#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semihom/arith.hpp"

namespace semihom {

enum class BaseKind { cone, milnor_fiber };

const char* to_string(BaseKind kind);

/// Jets of order exactly rho in the restricted contact locus X_m. They form
/// an iterated affine bundle of rank fiber_dim over the base (the punctured
/// cone {h = 0} \ {0}, or the Milnor fiber {h = 1} when d rho = m).
struct GradedPiece {
  std::int64_t rho = 0;
  BaseKind base_kind = BaseKind::cone;
  std::int64_t hyperplane_vars = 0;  ///< m - d rho
  std::int64_t free_vars = 0;        ///< (d - 1) rho
  std::int64_t fiber_dim = 0;        ///< (m - d rho)(n - 1) + (d - 1) rho n
  std::int64_t total_dim = 0;        ///< (n - 1) + fiber_dim

  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

/// Validates n >= 3, d >= 2 and m >= 1; throws HypothesisViolated for d == 1.
void validate_contact_params(std::int64_t n, std::int64_t d, std::int64_t m);
/// Same with n >= 2: Euler characteristics and classes only need chi(S), which
/// is defined for n = 2 (S is d points).
void validate_euler_params(std::int64_t n, std::int64_t d, std::int64_t m);

/// The stratum of order rho, 1 <= rho <= m/d. Only needs n >= 1 and d >= 2,
/// so the point-count oracle can use it outside the topological range.
GradedPiece make_piece(std::int64_t n, std::int64_t d, std::int64_t m, std::int64_t rho);

/// One piece per rho in [1, floor(m/d)]; empty when m < d.
std::vector<GradedPiece> graded_pieces(std::int64_t n, std::int64_t d, std::int64_t m);

/// Base H_c profile shifted by 2 * fiber_dim (Thom isomorphism of the affine bundles).
GradedGroup piece_compact_cohomology(const GradedPiece& piece, std::int64_t n, std::int64_t d);

/// Direct sum over pieces (the order spectral sequence degenerates at E1 and
/// every extension splits).
GradedGroup contact_cohomology(std::int64_t n, std::int64_t d, std::int64_t m);

enum class MotivicBasis { pt, S, Mh };

const char* to_string(MotivicBasis b);
MotivicBasis motivic_basis_from_string(const std::string& s);

/// Integer combination of L^e [pt], L^e [S] and L^e [M_h] in the Grothendieck
/// ring; [punctured cone] is stored expanded as (L - 1)[S].
class MotivicClass {
public:
  using Key = std::pair<MotivicBasis, std::int64_t>;  ///< (basis, exponent of L)

  void add(MotivicBasis basis, std::int64_t l_exp, const Integer& coeff);
  Integer coefficient(MotivicBasis basis, std::int64_t l_exp) const;
  const std::map<Key, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// L -> l, [S] -> s, [M_h] -> mh, [pt] -> 1.
  Integer evaluate(const Integer& l, const Integer& s, const Integer& mh) const;

  std::string to_string() const;

  friend bool operator==(const MotivicClass&, const MotivicClass&) = default;

private:
  std::map<Key, Integer> terms_;
};

/// Accepts n >= 2.
MotivicClass contact_class(std::int64_t n, std::int64_t d, std::int64_t m);

/// 1 + (-1)^{n-1} mu.
Integer milnor_fiber_euler(std::int64_t n, std::int64_t d);

/// Accepts n >= 2; for n >= 3 it is the Euler characteristic of contact_cohomology.
Integer contact_euler(std::int64_t n, std::int64_t d, std::int64_t m);

/// 0 when d does not divide m, otherwise 1 + (-1)^{n-1} (d-1)^n.
Integer contact_euler_closed_form(std::int64_t n, std::int64_t d, std::int64_t m);

/// Largest total_dim over the pieces; nullopt when the locus is empty.
std::optional<std::int64_t> contact_dimension(std::int64_t n, std::int64_t d, std::int64_t m);

}  // namespace semihom

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semihom/arith.hpp"

namespace semihom {

struct PolyTerm {
  std::vector<int> exps;
  std::int64_t coeff;

  int degree() const;
  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

/// Integer polynomial in x0..x{n-1}. Terms are kept sorted by exponent vector
/// with distinct exponents and nonzero coefficients.
class SparseIntPoly {
public:
  SparseIntPoly() = default;
  SparseIntPoly(int n, std::vector<PolyTerm> terms);

  int n() const { return n_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Smallest total degree among the terms; throws for the zero polynomial.
  int min_degree() const;
  int max_degree() const;
  bool is_homogeneous() const;
  /// Terms of total degree min_degree().
  SparseIntPoly initial_form() const;
  SparseIntPoly partial(int var) const;

  /// Value at x modulo p (x entries already reduced).
  std::uint64_t eval_mod(const std::vector<std::uint64_t>& x, std::uint64_t p) const;

  /// Inline-grammar rendering, e.g. "x0^2+x1^2-3*x2^3".
  std::string to_string() const;

  friend bool operator==(const SparseIntPoly&, const SparseIntPoly&) = default;

private:
  int n_ = 0;
  std::vector<PolyTerm> terms_;
};

/// Parses `term (("+"|"-") term)*` with `term := [coeff "*"] var ["^" int]`
/// over variables x0..x{n-1}. No whitespace or other syntax is accepted.
/// When n is not given it is one more than the largest variable index.
SparseIntPoly parse_polynomial(std::string_view text, std::optional<int> n = std::nullopt);

/// Fermat form x0^d + ... + x{n-1}^d.
SparseIntPoly fermat(int n, int d);

bool is_prime(std::uint64_t p);

struct BaseCounts {
  Integer cone;    ///< |{h = 0} \ {0}|
  Integer milnor;  ///< |{h = 1}|

  friend bool operator==(const BaseCounts&, const BaseCounts&) = default;
};

/// Brute-force point counts over F_p^n of the punctured cone and Milnor fiber.
BaseCounts count_base(const SparseIntPoly& h, std::uint64_t p);

/// Throws NonSmoothReduction if all partials of h vanish at some nonzero point of F_p^n.
void check_smooth_reduction(const SparseIntPoly& h, std::uint64_t p);

struct JetCountOptions {
  /// Upper bound on the number of candidate jets p^(n m).
  Integer budget = Integer(10000000000000ULL);
  /// Worker threads for the gamma_1 partition; 0 picks the hardware count.
  unsigned threads = 0;
};

struct JetCountReport {
  std::uint64_t p = 0;
  std::int64_t m = 0;
  int n = 0;
  int d = 0;  ///< degree of the initial form
  Integer total_count;
  std::map<std::int64_t, Integer> by_order;  ///< jet order rho -> count
  BaseCounts base_counts;
  std::map<std::int64_t, Integer> predicted_by_order;  ///< base count * p^{D_rho}

  friend bool operator==(const JetCountReport&, const JetCountReport&) = default;
};

/// Counts m-jets gamma with gamma(0) = 0 and f(gamma) = t^m mod t^{m+1} over
/// F_p, stratified by the order of gamma, and fills the affine-bundle
/// predictions of each stratum.
JetCountReport count_contact_jets(const SparseIntPoly& f, std::int64_t m, std::uint64_t p,
                                  const JetCountOptions& options = {});

/// Every stratum count equals its prediction and no jet has order outside [1, m/d].
bool stratification_matches(const JetCountReport& report);

bool verify_stratification(const SparseIntPoly& f, std::int64_t m, std::uint64_t p,
                           const JetCountOptions& options = {});

/// Dimension of C[x]/(dh/dx_i) for homogeneous h, by ranks of the graded
/// pieces of the Jacobian ideal up to degree n(d-2)+2. Throws if the quotient
/// does not vanish above the socle degree (non-isolated singularity).
Integer milnor_number_oracle(const SparseIntPoly& h);

}  // namespace semihom

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semihom/arith.hpp"

namespace semihom {

enum class DivisorKind { strict_transform, first_exceptional, intermediate };

const char* to_string(DivisorKind kind);
DivisorKind divisor_kind_from_string(const std::string& s);

/// Divisor E_(kappa,r) of the chain with multiplicity N = kappa + r d and log
/// discrepancy nu = kappa + r n.
struct Divisor {
  CoprimePair pair;
  std::int64_t N;
  std::int64_t nu;
  DivisorKind kind;

  static Divisor make(const CoprimePair& pair, std::int64_t n, std::int64_t d);

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// Dual graph of the resolution: divisors listed from E_(0,1) to E_(1,0).
struct ResolutionChain {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::vector<Divisor> divisors;

  std::optional<std::size_t> index_of(const CoprimePair& pair) const;
  bool contains(const CoprimePair& pair) const { return index_of(pair).has_value(); }

  friend bool operator==(const ResolutionChain&, const ResolutionChain&) = default;
};

struct MDivisor {
  std::int64_t index;  ///< i in [-floor(m/d), 0]
  Divisor divisor;
  bool exceptional;

  friend bool operator==(const MDivisor&, const MDivisor&) = default;
};

struct MDivisorList {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::vector<MDivisor> entries;  ///< ascending index, i = -floor(m/d) first

  friend bool operator==(const MDivisorList&, const MDivisorList&) = default;
};

/// Validates n >= 2, d >= 1, m >= 1 (and the global parameter cap).
void validate_resolution_params(std::int64_t n, std::int64_t d, std::int64_t m);

/// Upper bound on chain length accepted by build_minimal_resolution.
inline constexpr std::int64_t kMaxChainDivisors = 2000000;

/// Minimal m-separating log resolution: starting from [(0,1), (1,0)], inserts
/// the mediant between adjacent divisors while N + N' <= m. Throws
/// BudgetExceeded when m^2 / (2d) exceeds kMaxChainDivisors.
ResolutionChain build_minimal_resolution(std::int64_t n, std::int64_t d, std::int64_t m);

/// The pair of E_i: (m + i d, -i) divided by its gcd.
CoprimePair m_divisor_pair(std::int64_t d, std::int64_t m, std::int64_t i);

MDivisorList m_divisors(const ResolutionChain& chain);

struct Neighbours {
  CoprimePair left;
  CoprimePair right;
};

/// Chain neighbours of an intermediate divisor. Throws for endpoints and
/// pairs not in the chain.
Neighbours adjacency(const ResolutionChain& chain, const CoprimePair& pair);

struct BlowupCounts {
  std::int64_t left;   ///< n': blow-ups of the intersection with the left neighbour
  std::int64_t right;  ///< n''
};

/// n' = (kappa* - kappa')/kappa and n'' = (kappa** - kappa'')/kappa, checked
/// against the r-coordinate versions. Non-integrality is an InternalError.
BlowupCounts blowup_counts(const ResolutionChain& chain, const CoprimePair& pair);

/// nu* + nu** == nu (1 + n' + n'') and the same for N.
bool nef_fiber_identity(const ResolutionChain& chain, const CoprimePair& pair);

/// Closed-form membership (intermediate pairs are exactly the coprime
/// kappa, r >= 1 with kappa + r d <= m), endpoints, and N + N' > m for
/// every adjacent pair.
bool verify_minimality(const ResolutionChain& chain);

/// Every adjacent pair has determinant +-1.
bool farey_adjacent(const ResolutionChain& chain);

}  // namespace semihom

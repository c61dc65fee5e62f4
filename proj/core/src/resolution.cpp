#include "semihom/resolution.hpp"

#include <algorithm>
#include <string>

#include "semihom/error.hpp"

namespace semihom {

const char* to_string(DivisorKind kind) {
  switch (kind) {
    case DivisorKind::strict_transform:
      return "strict_transform";
    case DivisorKind::first_exceptional:
      return "first_exceptional";
    case DivisorKind::intermediate:
      return "intermediate";
  }
  return "?";
}

DivisorKind divisor_kind_from_string(const std::string& s) {
  if (s == "strict_transform") return DivisorKind::strict_transform;
  if (s == "first_exceptional") return DivisorKind::first_exceptional;
  if (s == "intermediate") return DivisorKind::intermediate;
  throw InvalidArgument("unknown divisor kind: " + s);
}

Divisor Divisor::make(const CoprimePair& pair, std::int64_t n, std::int64_t d) {
  DivisorKind kind = DivisorKind::intermediate;
  if (pair == CoprimePair(1, 0)) kind = DivisorKind::strict_transform;
  if (pair == CoprimePair(0, 1)) kind = DivisorKind::first_exceptional;
  return Divisor{pair, pair.kappa() + pair.r() * d, pair.kappa() + pair.r() * n, kind};
}

std::optional<std::size_t> ResolutionChain::index_of(const CoprimePair& pair) const {
  // Chains are ordered by slope; the linear scan covers hand-edited chains.
  auto it = std::lower_bound(divisors.begin(), divisors.end(), pair,
                             [](const Divisor& v, const CoprimePair& p) { return v.pair.left_of(p); });
  if (it != divisors.end() && it->pair == pair) return static_cast<std::size_t>(it - divisors.begin());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i].pair == pair) return i;
  }
  return std::nullopt;
}

void validate_resolution_params(std::int64_t n, std::int64_t d, std::int64_t m) {
  detail::require(n >= 2, "n must be ≥ 2");
  detail::require(d >= 1, "d must be ≥ 1");
  detail::require(m >= 1, "m must be ≥ 1");
  detail::require(n <= kMaxParameter && d <= kMaxParameter && m <= kMaxParameter,
                  "n, d and m must be ≤ " + std::to_string(kMaxParameter));
}

ResolutionChain build_minimal_resolution(std::int64_t n, std::int64_t d, std::int64_t m) {
  validate_resolution_params(n, d, m);
  // At most sum_{r d < m} (m - r d) <= m^2 / (2d) intermediate divisors.
  if (static_cast<double>(m) * static_cast<double>(m) / (2.0 * static_cast<double>(d)) >
      static_cast<double>(kMaxChainDivisors)) {
    throw BudgetExceeded("resolution for m = " + std::to_string(m) + ", d = " + std::to_string(d) +
                         " may exceed " + std::to_string(kMaxChainDivisors) + " divisors");
  }
  ResolutionChain chain{n, d, m, {}};

  // Depth-first worklist over adjacent pairs still to be separated; a pair is
  // popped, emitted left-to-right, and split by its mediant when N + N' <= m.
  struct Gap {
    Divisor left;
    Divisor right;
  };
  Divisor first = Divisor::make(CoprimePair(0, 1), n, d);
  Divisor last = Divisor::make(CoprimePair(1, 0), n, d);
  chain.divisors.push_back(first);
  std::vector<Gap> work{{first, last}};
  while (!work.empty()) {
    Gap gap = work.back();
    work.pop_back();
    if (gap.left.N + gap.right.N <= m) {
      Divisor mid = Divisor::make(gap.left.pair.mediant(gap.right.pair), n, d);
      // Right half is processed after the left half.
      work.push_back({mid, gap.right});
      work.push_back({gap.left, mid});
    } else {
      chain.divisors.push_back(gap.right);
    }
  }
  return chain;
}

CoprimePair m_divisor_pair(std::int64_t d, std::int64_t m, std::int64_t i) {
  detail::require(i <= 0 && m + i * d >= 0, "m-divisor index out of range");
  return CoprimePair::reduced(m + i * d, -i);
}

MDivisorList m_divisors(const ResolutionChain& chain) {
  MDivisorList out{chain.n, chain.d, chain.m, {}};
  for (std::int64_t i = -(chain.m / chain.d); i <= 0; ++i) {
    CoprimePair pair = m_divisor_pair(chain.d, chain.m, i);
    detail::ensure(chain.contains(pair), "m-divisor missing from chain");
    Divisor div = Divisor::make(pair, chain.n, chain.d);
    detail::ensure(chain.m % div.N == 0, "m-divisor multiplicity does not divide m");
    out.entries.push_back(MDivisor{i, div, div.kind != DivisorKind::strict_transform});
  }
  return out;
}

Neighbours adjacency(const ResolutionChain& chain, const CoprimePair& pair) {
  auto idx = chain.index_of(pair);
  detail::require(idx.has_value(), "divisor is not in the chain");
  detail::require(*idx > 0 && *idx + 1 < chain.divisors.size(),
                  "endpoints of the chain have no two neighbours");
  return {chain.divisors[*idx - 1].pair, chain.divisors[*idx + 1].pair};
}

namespace {

std::int64_t exact_quotient(std::int64_t num, std::int64_t den) {
  detail::ensure(den > 0 && num % den == 0, "blow-up count is not an integer");
  std::int64_t q = num / den;
  detail::ensure(q >= 0, "blow-up count is negative");
  return q;
}

}  // namespace

BlowupCounts blowup_counts(const ResolutionChain& chain, const CoprimePair& pair) {
  Neighbours nb = adjacency(chain, pair);
  Parents parents = parents_from_cf(pair.kappa(), pair.r());
  std::int64_t left = exact_quotient(nb.left.kappa() - parents.left.kappa(), pair.kappa());
  std::int64_t left_r = exact_quotient(nb.left.r() - parents.left.r(), pair.r());
  std::int64_t right = exact_quotient(nb.right.kappa() - parents.right.kappa(), pair.kappa());
  std::int64_t right_r = exact_quotient(nb.right.r() - parents.right.r(), pair.r());
  detail::ensure(left == left_r && right == right_r,
                 "blow-up counts disagree between kappa and r coordinates");
  return {left, right};
}

bool nef_fiber_identity(const ResolutionChain& chain, const CoprimePair& pair) {
  Neighbours nb = adjacency(chain, pair);
  BlowupCounts c = blowup_counts(chain, pair);
  Divisor e = Divisor::make(pair, chain.n, chain.d);
  Divisor left = Divisor::make(nb.left, chain.n, chain.d);
  Divisor right = Divisor::make(nb.right, chain.n, chain.d);
  std::int64_t factor = 1 + c.left + c.right;
  return left.nu + right.nu == e.nu * factor && left.N + right.N == e.N * factor;
}

bool farey_adjacent(const ResolutionChain& chain) {
  for (std::size_t i = 0; i + 1 < chain.divisors.size(); ++i) {
    std::int64_t det = chain.divisors[i].pair.determinant(chain.divisors[i + 1].pair);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

bool verify_minimality(const ResolutionChain& chain) {
  const auto& divs = chain.divisors;
  if (divs.size() < 2) return false;
  if (!(divs.front().pair == CoprimePair(0, 1)) || !(divs.back().pair == CoprimePair(1, 0))) {
    return false;
  }
  // Intermediate entries must be exactly the closed-form set, each once.
  std::int64_t expected = 0;
  for (std::int64_t r = 1; r * chain.d + 1 <= chain.m; ++r) {
    for (std::int64_t kappa = 1; kappa + r * chain.d <= chain.m; ++kappa) {
      if (gcd(kappa, r) == 1) ++expected;
    }
  }
  if (static_cast<std::int64_t>(divs.size()) - 2 != expected) return false;
  for (std::size_t i = 1; i + 1 < divs.size(); ++i) {
    const auto& p = divs[i].pair;
    if (p.kappa() < 1 || p.r() < 1 || p.kappa() + p.r() * chain.d > chain.m) return false;
  }
  for (std::size_t i = 0; i + 1 < divs.size(); ++i) {
    if (!divs[i].pair.left_of(divs[i + 1].pair)) return false;
    if (divs[i].N + divs[i + 1].N <= chain.m) return false;
  }
  return true;
}

}  // namespace semihom

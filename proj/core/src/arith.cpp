#include "semihom/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "semihom/error.hpp"

namespace semihom {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  detail::require(a >= 0 && b >= 0, "gcd: arguments must be non-negative");
  detail::require(a != 0 || b != 0, "gcd: both arguments are zero");
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer gcd(const Integer& a, const Integer& b) {
  detail::require(a >= 0 && b >= 0, "gcd: arguments must be non-negative");
  detail::require(a != 0 || b != 0, "gcd: both arguments are zero");
  return boost::multiprecision::gcd(a, b);
}

CoprimePair::CoprimePair(std::int64_t kappa, std::int64_t r) : kappa_(kappa), r_(r) {
  detail::require(kappa >= 0 && r >= 0, "coprime pair entries must be non-negative");
  detail::require(kappa != 0 || r != 0, "(0, 0) is not a coprime pair");
  detail::require(gcd(kappa, r) == 1, "pair is not coprime");
}

CoprimePair CoprimePair::reduced(std::int64_t a, std::int64_t b) {
  std::int64_t g = gcd(a, b);
  return CoprimePair(a / g, b / g);
}

CoprimePair CoprimePair::mediant(const CoprimePair& other) const {
  return CoprimePair(kappa_ + other.kappa_, r_ + other.r_);
}

std::int64_t CoprimePair::determinant(const CoprimePair& other) const {
  return kappa_ * other.r_ - other.kappa_ * r_;
}

bool CoprimePair::left_of(const CoprimePair& other) const {
  // r/kappa > r'/kappa'  <=>  r*kappa' > r'*kappa (denominators non-negative).
  return r_ * other.kappa_ > other.r_ * kappa_;
}

std::ostream& operator<<(std::ostream& os, const CoprimePair& p) {
  return os << '(' << p.kappa() << ',' << p.r() << ')';
}

std::vector<std::int64_t> continued_fraction(std::int64_t kappa, std::int64_t r) {
  detail::require(kappa >= 1 && r >= 1, "continued_fraction: kappa and r must be positive");
  detail::require(gcd(kappa, r) == 1, "continued_fraction: kappa and r must be coprime");
  std::vector<std::int64_t> q;
  while (r != 0) {
    q.push_back(kappa / r);
    std::int64_t rem = kappa % r;
    kappa = r;
    r = rem;
  }
  return q;
}

std::pair<std::int64_t, std::int64_t> evaluate_continued_fraction(
    const std::vector<std::int64_t>& quotients) {
  detail::require(!quotients.empty(), "empty continued fraction");
  // Convergent recurrence h_k = q_k h_{k-1} + h_{k-2}, starting from 1/0 and 0/1.
  std::int64_t h_prev = 1, h_prev2 = 0;
  std::int64_t k_prev = 0, k_prev2 = 1;
  for (std::int64_t q : quotients) {
    std::int64_t h = q * h_prev + h_prev2;
    std::int64_t k = q * k_prev + k_prev2;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return {h_prev, k_prev};
}

Parents parents_from_cf(std::int64_t kappa, std::int64_t r) {
  detail::require(kappa >= 1 && r >= 1, "(1,0) and (0,1) have no parents");
  auto q = continued_fraction(kappa, r);
  q.pop_back();
  // Empty truncation is the convergent 1/0.
  CoprimePair truncated = q.empty() ? CoprimePair(1, 0) : [&] {
    auto [a, b] = evaluate_continued_fraction(q);
    return CoprimePair(a, b);
  }();
  CoprimePair other(kappa - truncated.kappa(), r - truncated.r());
  if (truncated.left_of(other)) return {truncated, other};
  return {other, truncated};
}

std::vector<Integer> invariant_factors(std::vector<Integer> orders) {
  for (const auto& t : orders) {
    detail::require(t >= 1, "torsion orders must be positive");
  }
  std::erase_if(orders, [](const Integer& t) { return t == 1; });
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      Integer g = boost::multiprecision::gcd(orders[i], orders[j]);
      Integer l = orders[i] / g * orders[j];
      orders[i] = g;
      orders[j] = l;
    }
  }
  std::erase_if(orders, [](const Integer& t) { return t == 1; });
  return orders;
}

FgAbGroup::FgAbGroup(Integer rank, std::vector<Integer> torsion)
    : rank_(std::move(rank)), torsion_(invariant_factors(std::move(torsion))) {
  detail::require(rank_ >= 0, "rank must be non-negative");
}

FgAbGroup operator+(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Integer> t = a.torsion_;
  t.insert(t.end(), b.torsion_.begin(), b.torsion_.end());
  return FgAbGroup(a.rank_ + b.rank_, std::move(t));
}

std::string FgAbGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ != 0) {
    os << 'Z';
    if (rank_ != 1) os << '^' << rank_;
    first = false;
  }
  for (const auto& t : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g) { return os << g.to_string(); }

GradedGroup::GradedGroup(Map entries) {
  for (auto& [k, g] : entries) add(k, g);
}

void GradedGroup::add(std::int64_t degree, const FgAbGroup& g) {
  if (g.is_zero()) return;
  auto it = entries_.find(degree);
  if (it == entries_.end()) {
    entries_.emplace(degree, g);
  } else {
    it->second = it->second + g;
  }
}

FgAbGroup GradedGroup::at(std::int64_t degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? FgAbGroup() : it->second;
}

std::ostream& operator<<(std::ostream& os, const GradedGroup& g) {
  if (g.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [k, grp] : g.entries()) {
    if (!first) os << ", ";
    os << '[' << k << "] " << grp;
    first = false;
  }
  return os;
}

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b) {
  GradedGroup out = a;
  for (const auto& [k, g] : b.entries()) out.add(k, g);
  return out;
}

GradedGroup shift(const GradedGroup& g, std::int64_t s) {
  GradedGroup out;
  for (const auto& [k, grp] : g.entries()) out.add(k + s, grp);
  return out;
}

Integer euler_char(const GradedGroup& g) {
  Integer chi = 0;
  for (const auto& [k, grp] : g.entries()) {
    if (k % 2 == 0) {
      chi += grp.rank();
    } else {
      chi -= grp.rank();
    }
  }
  return chi;
}

GradedGroup reflect(const GradedGroup& g, std::int64_t total) {
  GradedGroup out;
  for (const auto& [k, grp] : g.entries()) out.add(total - k, grp);
  return out;
}

}  // namespace semihom

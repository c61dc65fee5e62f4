#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace semihom {

/// Unbounded integer used for ranks, torsion orders, counts and characteristics.
using Integer = boost::multiprecision::cpp_int;

/// Upper bound on n, d and m accepted anywhere in the library. Keeps every
/// derived degree, multiplicity and dimension inside int64.
inline constexpr std::int64_t kMaxParameter = 100000;

std::int64_t gcd(std::int64_t a, std::int64_t b);
Integer gcd(const Integer& a, const Integer& b);

/// A coprime pair (kappa, r) of non-negative integers, (0, 0) excluded.
class CoprimePair {
public:
  CoprimePair(std::int64_t kappa, std::int64_t r);

  /// Divides out the gcd first; (a, b) must not be (0, 0).
  static CoprimePair reduced(std::int64_t a, std::int64_t b);

  std::int64_t kappa() const { return kappa_; }
  std::int64_t r() const { return r_; }

  /// Componentwise sum. Only a coprime pair when the inputs are Farey neighbours.
  CoprimePair mediant(const CoprimePair& other) const;
  /// kappa * other.r - other.kappa * r.
  std::int64_t determinant(const CoprimePair& other) const;

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;
  /// Orders by decreasing slope r/kappa, i.e. (0,1) first and (1,0) last.
  bool left_of(const CoprimePair& other) const;

private:
  std::int64_t kappa_;
  std::int64_t r_;
};

std::ostream& operator<<(std::ostream& os, const CoprimePair& p);

/// Canonical continued fraction [q0; q1, ..., qk] of kappa/r; the last
/// quotient is >= 2 unless the expansion has length one.
std::vector<std::int64_t> continued_fraction(std::int64_t kappa, std::int64_t r);

/// Evaluates a continued fraction back to a reduced fraction (numerator, denominator).
std::pair<std::int64_t, std::int64_t> evaluate_continued_fraction(
    const std::vector<std::int64_t>& quotients);

struct Parents {
  CoprimePair left;   ///< larger r/kappa, closer to (0,1)
  CoprimePair right;  ///< closer to (1,0)
};

/// The two Farey parents whose mediant is (kappa, r), read off the continued
/// fraction: one is the truncation [q0; ...; q_{k-1}], the other is the
/// difference. Throws for (1,0) and (0,1).
Parents parents_from_cf(std::int64_t kappa, std::int64_t r);

/// Finitely generated abelian group Z^rank + Z/t1 + ... + Z/tk with t1 | t2 | ... | tk.
class FgAbGroup {
public:
  FgAbGroup() = default;
  /// Torsion orders may be given in any order and need not be invariant
  /// factors; 1s are dropped. Orders must be >= 1.
  explicit FgAbGroup(Integer rank, std::vector<Integer> torsion = {});

  static FgAbGroup free_of_rank(Integer rank) { return FgAbGroup(std::move(rank)); }
  static FgAbGroup cyclic(Integer order) { return FgAbGroup(0, {std::move(order)}); }

  const Integer& rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_zero() const { return rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }

  friend FgAbGroup operator+(const FgAbGroup& a, const FgAbGroup& b);
  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

  /// "0", "Z", "Z^6 + Z/4", ...
  std::string to_string() const;

private:
  Integer rank_ = 0;
  std::vector<Integer> torsion_;
};

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g);

/// Brings a multiset of cyclic orders into invariant-factor form.
std::vector<Integer> invariant_factors(std::vector<Integer> orders);

/// Finitely supported map degree -> FgAbGroup; zero groups are never stored.
class GradedGroup {
public:
  using Map = std::map<std::int64_t, FgAbGroup>;

  GradedGroup() = default;
  explicit GradedGroup(Map entries);

  /// Adds g into degree k (direct sum with what is already there).
  void add(std::int64_t degree, const FgAbGroup& g);

  FgAbGroup at(std::int64_t degree) const;
  const Map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
  Map entries_;
};

std::ostream& operator<<(std::ostream& os, const GradedGroup& g);

GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b);
GradedGroup shift(const GradedGroup& g, std::int64_t s);
/// sum_k (-1)^k rank(g_k); torsion does not contribute.
Integer euler_char(const GradedGroup& g);
/// Reindexes k -> total - k (Poincare duality bookkeeping).
GradedGroup reflect(const GradedGroup& g, std::int64_t total);

}  // namespace semihom

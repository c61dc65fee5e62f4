#include "semihom/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <thread>

#include "semihom/contact.hpp"
#include "semihom/error.hpp"

namespace semihom {

int PolyTerm::degree() const {
  int total = 0;
  for (int e : exps) total += e;
  return total;
}

SparseIntPoly::SparseIntPoly(int n, std::vector<PolyTerm> terms) : n_(n) {
  detail::require(n >= 1, "polynomial needs at least one variable");
  std::map<std::vector<int>, std::int64_t> merged;
  for (auto& t : terms) {
    detail::require(static_cast<int>(t.exps.size()) == n, "exponent vector has wrong length");
    for (int e : t.exps) detail::require(e >= 0, "exponents must be non-negative");
    std::int64_t& c = merged[t.exps];
    detail::require(!__builtin_add_overflow(c, t.coeff, &c), "coefficient overflow");
  }
  for (auto& [exps, coeff] : merged) {
    if (coeff != 0) terms_.push_back({exps, coeff});
  }
}

int SparseIntPoly::min_degree() const {
  detail::require(!terms_.empty(), "zero polynomial has no degree");
  int best = std::numeric_limits<int>::max();
  for (const auto& t : terms_) best = std::min(best, t.degree());
  return best;
}

int SparseIntPoly::max_degree() const {
  detail::require(!terms_.empty(), "zero polynomial has no degree");
  int best = 0;
  for (const auto& t : terms_) best = std::max(best, t.degree());
  return best;
}

bool SparseIntPoly::is_homogeneous() const {
  return !terms_.empty() && min_degree() == max_degree();
}

SparseIntPoly SparseIntPoly::initial_form() const {
  const int d = min_degree();
  std::vector<PolyTerm> low;
  for (const auto& t : terms_) {
    if (t.degree() == d) low.push_back(t);
  }
  return SparseIntPoly(n_, std::move(low));
}

SparseIntPoly SparseIntPoly::partial(int var) const {
  detail::require(var >= 0 && var < n_, "variable index out of range");
  std::vector<PolyTerm> out;
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    PolyTerm d = t;
    d.coeff *= t.exps[var];
    d.exps[var] -= 1;
    out.push_back(std::move(d));
  }
  return SparseIntPoly(n_, std::move(out));
}

namespace {

std::uint64_t reduce(std::int64_t c, std::uint64_t p) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t pow_mod(std::uint64_t base, int exp, std::uint64_t p) {
  std::uint64_t out = 1 % p;
  for (int i = 0; i < exp; ++i) out = out * base % p;
  return out;
}

}  // namespace

std::uint64_t SparseIntPoly::eval_mod(const std::vector<std::uint64_t>& x,
                                      std::uint64_t p) const {
  std::uint64_t total = 0;
  for (const auto& t : terms_) {
    std::uint64_t v = reduce(t.coeff, p);
    for (int i = 0; i < n_ && v != 0; ++i) v = v * pow_mod(x[i], t.exps[i], p) % p;
    total = (total + v) % p;
  }
  return total;
}

std::string SparseIntPoly::to_string() const {
  // Display order: increasing degree, then x0 before x1 before ...
  std::vector<const PolyTerm*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const PolyTerm* a, const PolyTerm* b) {
    if (a->degree() != b->degree()) return a->degree() < b->degree();
    return a->exps > b->exps;
  });
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& t = *order[k];
    std::int64_t c = t.coeff;
    if (k > 0) out += c < 0 ? "-" : "+";
    // The grammar has no leading sign and exactly one variable per term, so
    // only polynomials of that shape render back to parseable text.
    if (k == 0 && c < 0) out += "-";
    std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : c;
    bool wrote_var = false;
    if (mag != 1 || t.degree() == 0) out += std::to_string(mag);
    for (int i = 0; i < n_; ++i) {
      if (t.exps[i] == 0) continue;
      if (wrote_var || mag != 1) out += "*";
      out += "x" + std::to_string(i);
      if (t.exps[i] != 1) out += "^" + std::to_string(t.exps[i]);
      wrote_var = true;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class InlineParser {
public:
  explicit InlineParser(std::string_view text) : text_(text) {}

  struct RawTerm {
    std::int64_t coeff;
    int var;
    int exp;
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    terms.push_back(term(+1));
    while (pos_ < text_.size()) {
      char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(op == '+' ? +1 : -1));
    }
    return terms;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                          what);
  }

  bool peek_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::int64_t number() {
    if (!peek_digit()) fail("expected a decimal integer");
    std::int64_t v = 0;
    while (peek_digit()) {
      int digit = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) fail("integer overflow");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  RawTerm term(int sign) {
    std::int64_t coeff = 1;
    if (peek_digit()) {
      coeff = number();
      if (pos_ >= text_.size() || text_[pos_] != '*') fail("expected '*' after coefficient");
      ++pos_;
    }
    if (pos_ >= text_.size() || text_[pos_] != 'x') fail("expected variable x<index>");
    ++pos_;
    std::int64_t var = number();
    if (var > 1000) fail("variable index too large");
    std::int64_t exp = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      exp = number();
      if (exp > 1000) fail("exponent too large");
    }
    return {sign * coeff, static_cast<int>(var), static_cast<int>(exp)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparseIntPoly parse_polynomial(std::string_view text, std::optional<int> n) {
  auto raw = InlineParser(text).parse();
  int max_var = 0;
  for (const auto& t : raw) max_var = std::max(max_var, t.var);
  int vars = n.value_or(max_var + 1);
  detail::require(vars > max_var, "polynomial uses a variable beyond x" + std::to_string(vars - 1));
  std::vector<PolyTerm> terms;
  for (const auto& t : raw) {
    std::vector<int> exps(vars, 0);
    exps[t.var] = t.exp;
    terms.push_back({std::move(exps), t.coeff});
  }
  return SparseIntPoly(vars, std::move(terms));
}

SparseIntPoly fermat(int n, int d) {
  std::vector<PolyTerm> terms;
  for (int i = 0; i < n; ++i) {
    std::vector<int> exps(n, 0);
    exps[i] = d;
    terms.push_back({std::move(exps), 1});
  }
  return SparseIntPoly(n, std::move(terms));
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

namespace {

void require_prime(std::uint64_t p) {
  detail::require(is_prime(p), "p must be prime");
  detail::require(p < (1ULL << 31), "p must be below 2^31");
}

/// Calls fn(x) for every x in F_p^n, x as a vector of residues.
template <typename Fn>
void for_each_point(int n, std::uint64_t p, Fn fn) {
  std::vector<std::uint64_t> x(n, 0);
  while (true) {
    fn(x);
    int i = 0;
    while (i < n && ++x[i] == p) x[i++] = 0;
    if (i == n) return;
  }
}

Integer point_budget(int n, std::uint64_t p) {
  Integer total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  return total;
}

}  // namespace

void check_smooth_reduction(const SparseIntPoly& h, std::uint64_t p) {
  require_prime(p);
  detail::require(point_budget(h.n(), p) <= Integer(100000000), "F_p^n too large to scan");
  std::vector<SparseIntPoly> partials;
  for (int i = 0; i < h.n(); ++i) partials.push_back(h.partial(i));
  for_each_point(h.n(), p, [&](const std::vector<std::uint64_t>& x) {
    if (std::all_of(x.begin(), x.end(), [](std::uint64_t v) { return v == 0; })) return;
    for (const auto& dp : partials) {
      if (dp.eval_mod(x, p) != 0) return;
    }
    std::string where;
    for (auto v : x) where += (where.empty() ? "" : ",") + std::to_string(v);
    throw NonSmoothReduction("initial form is singular mod " + std::to_string(p) + " at (" +
                             where + ")");
  });
}

BaseCounts count_base(const SparseIntPoly& h, std::uint64_t p) {
  require_prime(p);
  detail::require(h.is_homogeneous(), "count_base needs a homogeneous polynomial");
  detail::require(point_budget(h.n(), p) <= Integer(100000000), "F_p^n too large to scan");
  std::uint64_t zeros = 0, ones = 0;
  for_each_point(h.n(), p, [&](const std::vector<std::uint64_t>& x) {
    std::uint64_t v = h.eval_mod(x, p);
    if (v == 0) ++zeros;
    if (v == 1 % p) ++ones;
  });
  // The origin is always a zero of a homogeneous form of positive degree.
  return {Integer(zeros) - 1, Integer(ones)};
}

namespace {

/// Depth-first enumeration of jets gamma_1, ..., gamma_m over F_p.
class JetEnumerator {
public:
  JetEnumerator(const SparseIntPoly& f, std::int64_t m, std::uint64_t p)
      : f_(f),
        n_(f.n()),
        m_(static_cast<int>(m)),
        p_(p),
        d_min_(f.min_degree()),
        gamma_(static_cast<std::size_t>(m_ + 1), std::vector<std::uint64_t>(n_, 0)),
        coeffs_(f.terms().size()) {
    for (std::size_t k = 0; k < f.terms().size(); ++k) coeffs_[k] = reduce(f.terms()[k].coeff, p);
    max_exp_.assign(n_, 0);
    for (const auto& t : f.terms()) {
      for (int i = 0; i < n_; ++i) max_exp_[i] = std::max(max_exp_[i], t.exps[i]);
    }
    // tail_weight_[j] = p^(n (m - j)): jets extending a fixed gamma_1..gamma_j.
    tail_weight_.resize(m_ + 1);
    Integer layer = point_budget(n_, p);
    tail_weight_[m_] = 1;
    for (int j = m_ - 1; j >= 0; --j) tail_weight_[j] = tail_weight_[j + 1] * layer;
  }

  /// Runs the search with gamma_1 restricted to points with linear index in [lo, hi).
  void run(std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t index = 0;
    for_each_point(n_, p_, [&](const std::vector<std::uint64_t>& x) {
      if (index >= lo && index < hi) visit(1, 0, x);
      ++index;
    });
  }

  const std::map<std::int64_t, Integer>& counts() const { return counts_; }

private:
  void visit(int j, int rho, const std::vector<std::uint64_t>& value) {
    gamma_[j] = value;
    bool nonzero = std::any_of(value.begin(), value.end(), [](std::uint64_t v) { return v != 0; });
    int new_rho = rho != 0 ? rho : (nonzero ? j : 0);
    // Every monomial has degree >= d_min and every coordinate has order >=
    // rho_floor, so gamma_i with i > j only reaches t^alpha for
    // alpha >= j + 1 + (d_min - 1) rho_floor.
    int rho_floor = new_rho != 0 ? new_rho : j + 1;
    std::int64_t determined = static_cast<std::int64_t>(j) + 1 +
                              static_cast<std::int64_t>(d_min_ - 1) * rho_floor;
    int check_to = static_cast<int>(std::min<std::int64_t>(determined - 1, m_));
    if (coefficients_ok(check_to)) {
      if (determined > m_) {
        if (new_rho != 0) counts_[new_rho] += tail_weight_[j];
      } else {
        for_each_point(n_, p_, [&](const std::vector<std::uint64_t>& x) {
          visit(j + 1, new_rho, x);
        });
      }
    }
    std::fill(gamma_[j].begin(), gamma_[j].end(), 0);
  }

  void mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
           std::vector<std::uint64_t>& out, int upto) const {
    std::fill(out.begin(), out.end(), 0);
    for (int i = 0; i <= upto; ++i) {
      if (a[i] == 0) continue;
      for (int k = 0; i + k <= upto; ++k) out[i + k] = (out[i + k] + a[i] * b[k]) % p_;
    }
  }

  /// Coefficients t^1 .. t^upto of f(gamma) match 0, ..., 0 and 1 at t^m.
  bool coefficients_ok(int upto) {
    if (upto < 1) return true;
    const std::size_t len = static_cast<std::size_t>(m_ + 1);
    // powers[i][e] = (gamma^i)^e truncated at t^upto.
    powers_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      powers_[i].resize(max_exp_[i] + 1, std::vector<std::uint64_t>(len, 0));
      auto& p0 = powers_[i][0];
      std::fill(p0.begin(), p0.end(), 0);
      p0[0] = 1 % p_;
      std::vector<std::uint64_t> series(len, 0);
      for (int k = 0; k <= m_; ++k) series[k] = gamma_[k][i];
      for (int e = 1; e <= max_exp_[i]; ++e) mul(powers_[i][e - 1], series, powers_[i][e], upto);
    }
    std::vector<std::uint64_t> total(len, 0), acc(len, 0), tmp(len, 0);
    for (std::size_t t = 0; t < f_.terms().size(); ++t) {
      std::fill(acc.begin(), acc.end(), 0);
      acc[0] = coeffs_[t];
      for (int i = 0; i < n_; ++i) {
        int e = f_.terms()[t].exps[i];
        if (e == 0) continue;
        mul(acc, powers_[i][e], tmp, upto);
        acc.swap(tmp);
      }
      for (int k = 0; k <= upto; ++k) total[k] = (total[k] + acc[k]) % p_;
    }
    for (int k = 1; k <= upto; ++k) {
      std::uint64_t want = k == m_ ? 1 % p_ : 0;
      if (total[k] != want) return false;
    }
    return true;
  }

  const SparseIntPoly& f_;
  int n_;
  int m_;
  std::uint64_t p_;
  int d_min_;
  std::vector<std::vector<std::uint64_t>> gamma_;  ///< gamma_[k][i]: coefficient of t^k in x_i
  std::vector<std::uint64_t> coeffs_;
  std::vector<int> max_exp_;
  std::vector<Integer> tail_weight_;
  std::vector<std::vector<std::vector<std::uint64_t>>> powers_;
  std::map<std::int64_t, Integer> counts_;
};

}  // namespace

JetCountReport count_contact_jets(const SparseIntPoly& f, std::int64_t m, std::uint64_t p,
                                  const JetCountOptions& options) {
  require_prime(p);
  detail::require(!f.is_zero(), "f must be nonzero");
  detail::require(m >= 1 && m <= 64, "m must lie in [1, 64]");
  const int d = f.min_degree();
  detail::require(d >= 2, "f must vanish to order ≥ 2 at the origin");

  Integer candidates = 1;
  for (std::int64_t k = 0; k < f.n() * m; ++k) {
    candidates *= p;
    if (candidates > options.budget) {
      throw BudgetExceeded("p^(n m) candidate jets exceed the budget of " +
                           options.budget.str());
    }
  }

  SparseIntPoly h = f.initial_form();
  check_smooth_reduction(h, p);

  JetCountReport report;
  report.p = p;
  report.m = m;
  report.n = f.n();
  report.d = d;
  report.base_counts = count_base(h, p);

  const std::uint64_t layer = static_cast<std::uint64_t>(point_budget(f.n(), p));
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(layer)));
  std::vector<std::map<std::int64_t, Integer>> partial(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      std::uint64_t lo = layer * w / threads;
      std::uint64_t hi = layer * (w + 1) / threads;
      workers.emplace_back([&, w, lo, hi] {
        JetEnumerator e(f, m, p);
        e.run(lo, hi);
        partial[w] = e.counts();
      });
    }
  }
  for (const auto& counts : partial) {
    for (const auto& [rho, c] : counts) report.by_order[rho] += c;
  }
  report.total_count = 0;
  for (const auto& [rho, c] : report.by_order) report.total_count += c;

  for (std::int64_t rho = 1; rho * d <= m; ++rho) {
    GradedPiece piece = make_piece(f.n(), d, m, rho);
    Integer scale = 1;
    for (std::int64_t k = 0; k < piece.fiber_dim; ++k) scale *= p;
    const Integer& base = piece.base_kind == BaseKind::cone ? report.base_counts.cone
                                                            : report.base_counts.milnor;
    report.predicted_by_order[rho] = base * scale;
  }
  return report;
}

bool stratification_matches(const JetCountReport& report) {
  for (const auto& [rho, count] : report.by_order) {
    if (count != 0 && !report.predicted_by_order.contains(rho)) return false;
  }
  for (const auto& [rho, predicted] : report.predicted_by_order) {
    auto it = report.by_order.find(rho);
    Integer observed = it == report.by_order.end() ? Integer(0) : it->second;
    if (observed != predicted) return false;
  }
  return true;
}

bool verify_stratification(const SparseIntPoly& f, std::int64_t m, std::uint64_t p,
                           const JetCountOptions& options) {
  return stratification_matches(count_contact_jets(f, m, p, options));
}

namespace {

using Monomial = std::vector<int>;

void monomials_of_degree(int n, int degree, Monomial& cur, int var, std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur[var] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[var] = e;
    monomials_of_degree(n, degree - e, cur, var + 1, out);
  }
  cur[var] = 0;
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur(n, 0);
  monomials_of_degree(n, degree, cur, 0, out);
  return out;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e != 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                     std::uint64_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    std::uint64_t inv = inverse_mod(rows[rank][c], p);
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::uint64_t factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = (rows[r][k] + (p - factor) * rows[rank][k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

/// dim of (C[x]/J)_k for the Jacobian ideal J of homogeneous h of degree d.
std::int64_t quotient_dimension(const std::vector<SparseIntPoly>& partials, int n, int d, int k) {
  std::vector<Monomial> basis = monomials_of_degree(n, k);
  if (basis.size() > 50000) throw BudgetExceeded("Milnor algebra graded piece too large");
  std::map<Monomial, std::size_t> column;
  for (std::size_t c = 0; c < basis.size(); ++c) column[basis[c]] = c;
  std::vector<Monomial> multipliers = monomials_of_degree(n, k - (d - 1));

  std::size_t best_rank = 0;
  // Rank over Q is at least the rank modulo any prime; two large primes make
  // an accidental drop negligible.
  for (std::uint64_t prime : {2147483647ULL, 2147483629ULL}) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& dp : partials) {
      if (dp.is_zero()) continue;
      for (const auto& mult : multipliers) {
        std::vector<std::uint64_t> row(basis.size(), 0);
        for (const auto& t : dp.terms()) {
          Monomial mono = t.exps;
          for (int i = 0; i < n; ++i) mono[i] += mult[i];
          auto it = column.find(mono);
          detail::ensure(it != column.end(), "Jacobian generator left its graded piece");
          row[it->second] = (row[it->second] + reduce(t.coeff, prime)) % prime;
        }
        rows.push_back(std::move(row));
      }
    }
    best_rank = std::max(best_rank, rank_mod(std::move(rows), basis.size(), prime));
  }
  return static_cast<std::int64_t>(basis.size() - best_rank);
}

}  // namespace

Integer milnor_number_oracle(const SparseIntPoly& h) {
  detail::require(h.is_homogeneous(), "milnor_number_oracle needs a homogeneous polynomial");
  const int n = h.n();
  const int d = h.min_degree();
  detail::require(d >= 1, "constant polynomial has no Milnor algebra");
  std::vector<SparseIntPoly> partials;
  for (int i = 0; i < n; ++i) partials.push_back(h.partial(i));

  const int socle = std::max(n * (d - 2), 0);
  Integer mu = 0;
  for (int k = 0; k <= socle; ++k) mu += quotient_dimension(partials, n, d, k);
  for (int k = socle + 1; k <= socle + 2; ++k) {
    if (quotient_dimension(partials, n, d, k) != 0) {
      throw InvalidArgument("Milnor algebra does not vanish above degree " +
                            std::to_string(socle) + ": singularity is not isolated");
    }
  }
  return mu;
}

}  // namespace semihom

#include "semihom/contact.hpp"

#include <sstream>

#include "semihom/error.hpp"
#include "semihom/surface_topology.hpp"

namespace semihom {

const char* to_string(BaseKind kind) {
  return kind == BaseKind::cone ? "cone" : "milnor_fiber";
}

namespace {

void validate_with_min_n(std::int64_t n_min, std::int64_t n, std::int64_t d, std::int64_t m) {
  detail::require(n >= n_min, "n must be ≥ " + std::to_string(n_min));
  detail::require(d >= 1, "d must be ≥ 1");
  if (d < 2) throw HypothesisViolated("theorem hypothesis violated: requires d ≥ 2");
  detail::require(m >= 1, "m must be ≥ 1");
  detail::require(n <= kMaxParameter && d <= kMaxParameter && m <= kMaxParameter,
                  "n, d and m must be ≤ " + std::to_string(kMaxParameter));
}

}  // namespace

void validate_contact_params(std::int64_t n, std::int64_t d, std::int64_t m) {
  validate_with_min_n(3, n, d, m);
}

void validate_euler_params(std::int64_t n, std::int64_t d, std::int64_t m) {
  validate_with_min_n(2, n, d, m);
}

GradedPiece make_piece(std::int64_t n, std::int64_t d, std::int64_t m, std::int64_t rho) {
  detail::require(n >= 1 && d >= 2, "make_piece: needs n ≥ 1 and d ≥ 2");
  detail::require(rho >= 1 && d * rho <= m, "jet order rho must satisfy 1 ≤ rho ≤ m/d");
  GradedPiece p;
  p.rho = rho;
  p.base_kind = d * rho == m ? BaseKind::milnor_fiber : BaseKind::cone;
  p.hyperplane_vars = m - d * rho;
  p.free_vars = (d - 1) * rho;
  p.fiber_dim = p.hyperplane_vars * (n - 1) + p.free_vars * n;
  p.total_dim = (n - 1) + p.fiber_dim;
  return p;
}

std::vector<GradedPiece> graded_pieces(std::int64_t n, std::int64_t d, std::int64_t m) {
  validate_contact_params(n, d, m);
  std::vector<GradedPiece> pieces;
  for (std::int64_t rho = 1; rho <= m / d; ++rho) pieces.push_back(make_piece(n, d, m, rho));
  return pieces;
}

GradedGroup piece_compact_cohomology(const GradedPiece& piece, std::int64_t n, std::int64_t d) {
  GradedGroup base = piece.base_kind == BaseKind::cone ? cone_compact_cohomology(n, d)
                                                       : milnor_fiber_compact_cohomology(n, d);
  return shift(base, 2 * piece.fiber_dim);
}

GradedGroup contact_cohomology(std::int64_t n, std::int64_t d, std::int64_t m) {
  GradedGroup total;
  for (const auto& piece : graded_pieces(n, d, m)) {
    total = direct_sum(total, piece_compact_cohomology(piece, n, d));
  }
  return total;
}

const char* to_string(MotivicBasis b) {
  switch (b) {
    case MotivicBasis::pt:
      return "pt";
    case MotivicBasis::S:
      return "S";
    case MotivicBasis::Mh:
      return "Mh";
  }
  return "?";
}

MotivicBasis motivic_basis_from_string(const std::string& s) {
  if (s == "pt") return MotivicBasis::pt;
  if (s == "S") return MotivicBasis::S;
  if (s == "Mh") return MotivicBasis::Mh;
  throw InvalidArgument("unknown motivic basis symbol: " + s);
}

void MotivicClass::add(MotivicBasis basis, std::int64_t l_exp, const Integer& coeff) {
  Key key{basis, l_exp};
  Integer value = coefficient(basis, l_exp) + coeff;
  if (value == 0) {
    terms_.erase(key);
  } else {
    terms_[key] = value;
  }
}

Integer MotivicClass::coefficient(MotivicBasis basis, std::int64_t l_exp) const {
  auto it = terms_.find({basis, l_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer MotivicClass::evaluate(const Integer& l, const Integer& s, const Integer& mh) const {
  Integer total = 0;
  for (const auto& [key, coeff] : terms_) {
    Integer power = 1;
    for (std::int64_t i = 0; i < key.second; ++i) power *= l;
    const Integer& base = key.first == MotivicBasis::S ? s
                          : key.first == MotivicBasis::Mh ? mh
                                                          : Integer(1);
    total += coeff * power * base;
  }
  return total;
}

std::string MotivicClass::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    Integer c = coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    if (c != 1) os << c << "*";
    if (key.second != 0) {
      os << "L";
      if (key.second != 1) os << "^" << key.second;
      if (key.first != MotivicBasis::pt) os << "*";
    }
    if (key.first == MotivicBasis::S) os << "[S]";
    if (key.first == MotivicBasis::Mh) os << "[Mh]";
    if (key.first == MotivicBasis::pt && key.second == 0) os << "[pt]";
    first = false;
  }
  return os.str();
}

MotivicClass contact_class(std::int64_t n, std::int64_t d, std::int64_t m) {
  validate_euler_params(n, d, m);
  MotivicClass cls;
  for (std::int64_t rho = 1; rho <= m / d; ++rho) {
    const GradedPiece piece = make_piece(n, d, m, rho);
    if (piece.base_kind == BaseKind::cone) {
      cls.add(MotivicBasis::S, piece.fiber_dim + 1, 1);
      cls.add(MotivicBasis::S, piece.fiber_dim, -1);
    } else {
      cls.add(MotivicBasis::Mh, piece.fiber_dim, 1);
    }
  }
  return cls;
}

Integer milnor_fiber_euler(std::int64_t n, std::int64_t d) {
  Integer mu = milnor_number(n, d);
  return (n - 1) % 2 == 0 ? Integer(1 + mu) : Integer(1 - mu);
}

Integer contact_euler(std::int64_t n, std::int64_t d, std::int64_t m) {
  validate_euler_params(n, d, m);
  if (n >= 3) return euler_char(contact_cohomology(n, d, m));
  return contact_class(n, d, m).evaluate(1, hypersurface_euler(n, d), milnor_fiber_euler(n, d));
}

Integer contact_euler_closed_form(std::int64_t n, std::int64_t d, std::int64_t m) {
  validate_euler_params(n, d, m);
  return m % d == 0 ? milnor_fiber_euler(n, d) : Integer(0);
}

std::optional<std::int64_t> contact_dimension(std::int64_t n, std::int64_t d, std::int64_t m) {
  std::optional<std::int64_t> best;
  for (const auto& piece : graded_pieces(n, d, m)) {
    if (!best || piece.total_dim > *best) best = piece.total_dim;
  }
  return best;
}

}  // namespace semihom

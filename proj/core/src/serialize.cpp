#include "semihom/serialize.hpp"

#include <limits>

#include "semihom/error.hpp"

namespace semihom {

Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    detail::require(s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos,
                    "malformed integer string: " + s);
    return Integer(s);
  }
  throw InvalidArgument("expected an integer");
}

namespace {

template <typename Key>
Json keyed_integers(const std::map<Key, Integer>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = integer_to_json(v);
  return out;
}

std::map<std::int64_t, Integer> keyed_integers_from(const Json& j) {
  std::map<std::int64_t, Integer> out;
  for (const auto& [k, v] : j.items()) out[std::stoll(k)] = integer_from_json(v);
  return out;
}

std::optional<std::int64_t> optional_int(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::int64_t>();
}

Json optional_to_json(const std::optional<std::int64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

PageKind page_kind_from_string(const std::string& s) {
  if (s == to_string(PageKind::mclean)) return PageKind::mclean;
  if (s == to_string(PageKind::order)) return PageKind::order;
  throw InvalidArgument("unknown page kind: " + s);
}

BaseKind base_kind_from_string(const std::string& s) {
  if (s == to_string(BaseKind::cone)) return BaseKind::cone;
  if (s == to_string(BaseKind::milnor_fiber)) return BaseKind::milnor_fiber;
  throw InvalidArgument("unknown base kind: " + s);
}

void write_group(Json& j, const FgAbGroup& g) {
  j["rank"] = integer_to_json(g.rank());
  Json torsion = Json::array();
  for (const auto& t : g.torsion()) torsion.push_back(integer_to_json(t));
  j["torsion"] = std::move(torsion);
}

FgAbGroup read_group(const Json& j) {
  std::vector<Integer> torsion;
  for (const auto& t : j.at("torsion")) torsion.push_back(integer_from_json(t));
  return FgAbGroup(integer_from_json(j.at("rank")), std::move(torsion));
}

void write_divisor(Json& j, const Divisor& v) {
  j["kappa"] = v.pair.kappa();
  j["r"] = v.pair.r();
  j["N"] = v.N;
  j["nu"] = v.nu;
  j["kind"] = to_string(v.kind);
}

Divisor read_divisor(const Json& j) {
  return {CoprimePair(j.at("kappa").get<std::int64_t>(), j.at("r").get<std::int64_t>()),
          j.at("N").get<std::int64_t>(), j.at("nu").get<std::int64_t>(),
          divisor_kind_from_string(j.at("kind").get<std::string>())};
}

std::vector<Divisor> read_divisors(const Json& j) {
  std::vector<Divisor> out;
  for (const auto& e : j) out.push_back(read_divisor(e));
  return out;
}

}  // namespace

void to_json(Json& j, const CoprimePair& p) { j = Json{{"kappa", p.kappa()}, {"r", p.r()}}; }

void to_json(Json& j, const FgAbGroup& g) {
  j = Json::object();
  write_group(j, g);
}

void from_json(const Json& j, FgAbGroup& g) { g = read_group(j); }

void to_json(Json& j, const GradedGroup& g) {
  j = Json::array();
  for (const auto& [deg, grp] : g.entries()) {
    Json e{{"degree", deg}};
    write_group(e, grp);
    j.push_back(std::move(e));
  }
}

void from_json(const Json& j, GradedGroup& g) {
  g = GradedGroup();
  for (const auto& e : j) g.add(e.at("degree").get<std::int64_t>(), read_group(e));
}

void to_json(Json& j, const Divisor& v) {
  j = Json::object();
  write_divisor(j, v);
}

void to_json(Json& j, const ResolutionChain& c) {
  j = Json{{"n", c.n}, {"d", c.d}, {"m", c.m}, {"divisors", c.divisors}};
}

void from_json(const Json& j, ResolutionChain& c) {
  c.n = j.at("n").get<std::int64_t>();
  c.d = j.at("d").get<std::int64_t>();
  c.m = j.at("m").get<std::int64_t>();
  c.divisors = read_divisors(j.at("divisors"));
}

void to_json(Json& j, const MDivisor& v) {
  j = Json{{"index", v.index}};
  write_divisor(j, v.divisor);
  j["exceptional"] = v.exceptional;
}

void to_json(Json& j, const MDivisorList& l) {
  j = Json{{"n", l.n}, {"d", l.d}, {"m", l.m}, {"entries", l.entries}};
}

void from_json(const Json& j, MDivisorList& l) {
  l.n = j.at("n").get<std::int64_t>();
  l.d = j.at("d").get<std::int64_t>();
  l.m = j.at("m").get<std::int64_t>();
  l.entries.clear();
  for (const auto& e : j.at("entries")) {
    l.entries.push_back({e.at("index").get<std::int64_t>(), read_divisor(e),
                         e.at("exceptional").get<bool>()});
  }
}

void to_json(Json& j, const GradedPiece& p) {
  j = Json{{"rho", p.rho},
           {"base", to_string(p.base_kind)},
           {"hyperplane_vars", p.hyperplane_vars},
           {"free_vars", p.free_vars},
           {"fiber_dim", p.fiber_dim},
           {"total_dim", p.total_dim}};
}

void from_json(const Json& j, GradedPiece& p) {
  p.rho = j.at("rho").get<std::int64_t>();
  p.base_kind = base_kind_from_string(j.at("base").get<std::string>());
  p.hyperplane_vars = j.at("hyperplane_vars").get<std::int64_t>();
  p.free_vars = j.at("free_vars").get<std::int64_t>();
  p.fiber_dim = j.at("fiber_dim").get<std::int64_t>();
  p.total_dim = j.at("total_dim").get<std::int64_t>();
}

void to_json(Json& j, const MotivicClass& c) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : c.terms()) {
    terms.push_back(
        Json{{"L_exp", key.second}, {"basis", to_string(key.first)}, {"coeff", integer_to_json(coeff)}});
  }
  j = Json{{"terms", std::move(terms)}};
}

void from_json(const Json& j, MotivicClass& c) {
  c = MotivicClass();
  for (const auto& t : j.at("terms")) {
    c.add(motivic_basis_from_string(t.at("basis").get<std::string>()),
          t.at("L_exp").get<std::int64_t>(), integer_from_json(t.at("coeff")));
  }
}

void to_json(Json& j, const SpectralPage& page) {
  Json entries = Json::array();
  for (const auto& [key, grp] : page.entries) {
    Json e{{"column", key.first}, {"degree", key.second}};
    write_group(e, grp);
    entries.push_back(std::move(e));
  }
  j = Json{{"kind", to_string(page.kind)},
           {"n", page.n},
           {"d", page.d},
           {"m", page.m},
           {"entries", std::move(entries)}};
}

void from_json(const Json& j, SpectralPage& page) {
  page.kind = page_kind_from_string(j.at("kind").get<std::string>());
  page.n = j.at("n").get<std::int64_t>();
  page.d = j.at("d").get<std::int64_t>();
  page.m = j.at("m").get<std::int64_t>();
  page.entries.clear();
  for (const auto& e : j.at("entries")) {
    page.entries[{e.at("column").get<std::int64_t>(), e.at("degree").get<std::int64_t>()}] =
        read_group(e);
  }
}

void to_json(Json& j, const ConditionReport& r) {
  j = Json{{"holds", r.holds}, {"violating_k", r.violating_k}};
}

void from_json(const Json& j, ConditionReport& r) {
  r.holds = j.at("holds").get<bool>();
  r.violating_k = j.at("violating_k").get<std::vector<std::int64_t>>();
}

void to_json(Json& j, const FloerResult& r) {
  j = Json{{"degeneration", r.degeneration},
           {"filtration", r.filtration},
           {"groups", r.groups ? Json(*r.groups) : Json(nullptr)}};
}

void from_json(const Json& j, FloerResult& r) {
  r.degeneration = j.at("degeneration").get<ConditionReport>();
  r.filtration = j.at("filtration").get<ConditionReport>();
  const Json& g = j.at("groups");
  r.groups = g.is_null() ? std::nullopt : std::optional<GradedGroup>(g.get<GradedGroup>());
}

void to_json(Json& j, const PairClass& c) {
  j = Json{{"class", to_string(c.color)},
           {"degeneration_witness_k", optional_to_json(c.degeneration_witness_k)},
           {"filtration_witness_k", optional_to_json(c.filtration_witness_k)}};
}

void from_json(const Json& j, PairClass& c) {
  c.color = pair_color_from_string(j.at("class").get<std::string>());
  c.degeneration_witness_k = optional_int(j.at("degeneration_witness_k"));
  c.filtration_witness_k = optional_int(j.at("filtration_witness_k"));
}

void to_json(Json& j, const ScatterRow& r) {
  j = Json(r.cls);
  Json head{{"n", r.n}, {"d", r.d}};
  head.update(j);
  j = std::move(head);
}

void from_json(const Json& j, ScatterRow& r) {
  r.n = j.at("n").get<std::int64_t>();
  r.d = j.at("d").get<std::int64_t>();
  r.cls = j.get<PairClass>();
}

void to_json(Json& j, const ValuationReport& r) {
  Json codims = Json::object();
  for (const auto& [i, c] : r.codims) codims[std::to_string(i)] = c;
  j = Json{{"n", r.n},         {"d", r.d},     {"m", r.m},
           {"essential", r.essential}, {"contact", r.contact}, {"dlt", r.dlt},
           {"codims", std::move(codims)}};
  if (!r.note.empty()) j["note"] = r.note;
}

void from_json(const Json& j, ValuationReport& r) {
  r.n = j.at("n").get<std::int64_t>();
  r.d = j.at("d").get<std::int64_t>();
  r.m = j.at("m").get<std::int64_t>();
  r.essential = read_divisors(j.at("essential"));
  r.contact = read_divisors(j.at("contact"));
  r.dlt = read_divisors(j.at("dlt"));
  r.codims.clear();
  for (const auto& [k, v] : j.at("codims").items()) r.codims[std::stoll(k)] = v.get<std::int64_t>();
  r.note = j.value("note", std::string());
}

void to_json(Json& j, const SparseIntPoly& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) terms.push_back(Json{{"exps", t.exps}, {"coeff", t.coeff}});
  j = Json{{"n", f.n()}, {"terms", std::move(terms)}};
}

void from_json(const Json& j, SparseIntPoly& f) {
  detail::require(j.is_object() && j.size() == 2 && j.contains("n") && j.contains("terms"),
                  "polynomial document must have exactly the keys n and terms");
  const Json& n = j.at("n");
  detail::require(n.is_number_integer(), "polynomial n must be an integer");
  std::vector<PolyTerm> terms;
  for (const auto& t : j.at("terms")) {
    detail::require(t.is_object() && t.size() == 2 && t.contains("exps") && t.contains("coeff"),
                    "polynomial term must have exactly the keys exps and coeff");
    detail::require(t.at("coeff").is_number_integer(), "coefficient must be an integer");
    detail::require(t.at("exps").is_array(), "exps must be an array");
    std::vector<int> exps;
    for (const auto& e : t.at("exps")) {
      detail::require(e.is_number_integer(), "exponent must be an integer");
      exps.push_back(e.get<int>());
    }
    terms.push_back({std::move(exps), t.at("coeff").get<std::int64_t>()});
  }
  f = SparseIntPoly(n.get<int>(), std::move(terms));
}

void to_json(Json& j, const BaseCounts& c) {
  j = Json{{"cone", integer_to_json(c.cone)}, {"milnor", integer_to_json(c.milnor)}};
}

void from_json(const Json& j, BaseCounts& c) {
  c.cone = integer_from_json(j.at("cone"));
  c.milnor = integer_from_json(j.at("milnor"));
}

void to_json(Json& j, const JetCountReport& r) {
  j = Json{{"p", r.p},
           {"m", r.m},
           {"n", r.n},
           {"d", r.d},
           {"total_count", integer_to_json(r.total_count)},
           {"by_order", keyed_integers(r.by_order)},
           {"base_counts", r.base_counts},
           {"predicted_by_order", keyed_integers(r.predicted_by_order)}};
}

void from_json(const Json& j, JetCountReport& r) {
  r.p = j.at("p").get<std::uint64_t>();
  r.m = j.at("m").get<std::int64_t>();
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.total_count = integer_from_json(j.at("total_count"));
  r.by_order = keyed_integers_from(j.at("by_order"));
  r.base_counts = j.at("base_counts").get<BaseCounts>();
  r.predicted_by_order = keyed_integers_from(j.at("predicted_by_order"));
}

SparseIntPoly parse_polynomial_spec(std::string_view spec) {
  if (!spec.empty() && spec.front() == '{') {
    Json doc;
    try {
      doc = Json::parse(spec);
    } catch (const Json::parse_error& e) {
      throw InvalidArgument(std::string("polynomial document is not valid JSON: ") + e.what());
    }
    try {
      return doc.get<SparseIntPoly>();
    } catch (const Json::exception& e) {
      throw InvalidArgument(std::string("malformed polynomial document: ") + e.what());
    }
  }
  return parse_polynomial(spec);
}

}  // namespace semihom

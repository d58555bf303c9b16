#include "cstar/io.hpp"

#include <sstream>

namespace cstar {

namespace {

Error malformed(const std::string& what) { return Error(ErrorCode::MalformedInput, what); }

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw malformed(where + ": expected an integer");
}

std::vector<std::vector<Integer>> integer_rows(const Json& j, const std::string& key) {
  if (!j.is_array()) throw malformed("'" + key + "' must be an array of arrays");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw malformed("'" + key + "'[" + std::to_string(i) + "] must be an array");
    std::vector<Integer> row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(integer_from_json(j[i][k], key + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  return rows;
}

EndType end_type(const Json& doc, const char* key) {
  if (!doc.contains(key)) return EndType::Elliptic;
  const std::string s = doc[key].is_string() ? doc[key].get<std::string>() : "";
  if (s == "elliptic") return EndType::Elliptic;
  if (s == "parabolic") return EndType::Parabolic;
  throw malformed(std::string("'") + key + "' must be \"elliptic\" or \"parabolic\"");
}

Json sign_json(Sign s) { return to_string(s); }

Sign sign_from_json(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s == "negative") return Sign::Negative;
  if (s == "zero") return Sign::Zero;
  if (s == "positive") return Sign::Positive;
  return Sign::Indeterminate;
}

Json point_json(const RatPoint& p) { return Json::array({to_json(p(0)), to_json(p(1))}); }

Json optional_json(const std::optional<Rational>& q) { return q ? to_json(*q) : Json(nullptr); }

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return Rational(j.get<double>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw malformed("expected a rational number");
}

Json to_json(const RatInterval& x) { return Json::array({to_json(x.lo()), to_json(x.hi())}); }

RatInterval interval_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw malformed("interval must be [lo, hi]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json to_json(const IsolatingInterval& x) {
  Json j;
  j["bracket"] = to_json(x.bracket);
  j["sign_lo"] = sign_json(x.sign_at_lo);
  j["sign_hi"] = sign_json(x.sign_at_hi);
  j["exact"] = x.exact;
  return j;
}

IsolatingInterval isolating_from_json(const Json& j) {
  return {interval_from_json(j.at("bracket")), sign_from_json(j.at("sign_lo")), sign_from_json(j.at("sign_hi")),
          j.at("exact").get<bool>()};
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (bmp::abs(v(i)) < Integer(1) << 62) {
      a.push_back(v(i).convert_to<long long>());
    } else {
      a.push_back(v(i).str());
    }
  }
  return a;
}

Json to_json(const IntMatrix& M) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) a.push_back(to_json(IntVector(M.row(i).transpose())));
  return a;
}

Json to_json(const Polygon& p) {
  Json a = Json::array();
  for (const auto& v : p.vertices()) a.push_back(point_json(v));
  return a;
}

Json to_json(const Cone& c) {
  Json j;
  Json gens = Json::array(), facets = Json::array();
  for (const auto& g : c.generators()) gens.push_back(to_json(g));
  for (const auto& f : c.facets()) facets.push_back(to_json(f));
  j["generators"] = gens;
  j["facets"] = facets;
  return j;
}

DefiningData parse_surface(const Json& doc) {
  if (!doc.is_object()) throw malformed("surface document must be a JSON object");
  DefiningData data;
  if (doc.contains("P")) {
    const auto rows = integer_rows(doc["P"], "P");
    if (rows.empty() || rows.front().empty()) throw malformed("'P' is empty");
    IntMatrix P(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.front().size()) throw malformed("rows of 'P' differ in length");
      for (std::size_t k = 0; k < rows[i].size(); ++k)
        P(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
    }
    data = defining_data_from_matrix(P);
  } else {
    if (!doc.contains("ls") || !doc.contains("ds")) throw malformed("need 'ls' and 'ds' (or 'P')");
    data.ls = integer_rows(doc["ls"], "ls");
    data.ds = integer_rows(doc["ds"], "ds");
    data.source = end_type(doc, "source");
    data.sink = end_type(doc, "sink");
  }
  if (doc.contains("A") && !doc["A"].is_null()) {
    if (!doc["A"].is_array()) throw malformed("'A' must be an array of pairs");
    std::vector<std::array<Rational, 2>> A;
    for (const auto& col : doc["A"]) {
      if (!col.is_array() || col.size() != 2) throw malformed("'A' entries must be pairs");
      A.push_back({rational_from_json(col[0]), rational_from_json(col[1])});
    }
    data.A = A;
  }
  if (doc.contains("meta")) data.metadata = doc["meta"].dump();
  return validate_defining_data(std::move(data));
}

Json report_to_json(const StabilityReport& report, const std::string& metadata) {
  Json j;
  j["fano"] = report.fano;
  Json mk = Json::array();
  for (Eigen::Index i = 0; i < report.minus_k.free.size(); ++i) mk.push_back(to_json(Rational(report.minus_k.free(i))));
  j["minus_k"] = mk;
  Json mkt = Json::array();
  for (Eigen::Index i = 0; i < report.minus_k.torsion.size(); ++i) mkt.push_back(to_json(Rational(report.minus_k.torsion(i))));
  j["minus_k_torsion"] = mkt;
  j["special"] = report.special;
  j["family_dimension"] = report.family_dimension;
  j["alpha"] = to_json(report.alpha);

  Json ke;
  ke["admits"] = report.ke.admits;
  Json bary = Json::array(), areas = Json::array();
  for (const auto& b : report.ke.barycenters) bary.push_back(point_json(b));
  for (const auto& a : report.ke.areas) areas.push_back(to_json(a));
  ke["barycenters"] = bary;
  ke["areas"] = areas;
  ke["recentered"] = report.ke.recentered;
  ke["first_coordinates_agree"] = report.ke.first_coordinates_agree;
  j["ke"] = ke;

  Json krs;
  krs["verdict"] = to_string(report.krs.verdict);
  krs["xi_root"] = report.krs.xi_root ? to_json(*report.krs.xi_root) : Json(nullptr);
  krs["xi_abs"] = report.krs.xi_abs ? to_json(*report.krs.xi_abs) : Json(nullptr);
  Json per = Json::array();
  for (const auto& pk : report.krs.per_kappa) {
    Json p;
    p["kappa"] = pk.kappa;
    p["xi_root"] = pk.xi_root ? to_json(*pk.xi_root) : Json(nullptr);
    p["second_moment"] = pk.second_moment ? to_json(*pk.second_moment) : Json(nullptr);
    p["sign"] = sign_json(pk.sign);
    per.push_back(p);
  }
  krs["second_moments"] = per;
  krs["roots_intersect"] = report.krs.roots_intersect;
  krs["diagnostic"] = report.krs.diagnostic;
  j["krs"] = krs;

  Json se;
  se["verdict"] = to_string(report.se.verdict);
  Json sper = Json::array();
  for (const auto& pk : report.se.per_kappa) {
    Json p;
    p["kappa"] = pk.kappa;
    p["domain"] = Json::array({optional_json(pk.domain.lo), optional_json(pk.domain.hi)});
    p["z"] = pk.z ? to_json(*pk.z) : Json(nullptr);
    p["d2"] = pk.d2 ? to_json(*pk.d2) : Json(nullptr);
    p["sign"] = sign_json(pk.sign);
    p["diagnostic"] = pk.diagnostic;
    sper.push_back(p);
  }
  se["per_kappa"] = sper;
  j["se"] = se;
  j["warnings"] = report.warnings;
  j["meta"] = Json::parse(metadata);
  return j;
}

StabilityReport report_from_json(const Json& doc) {
  StabilityReport r;
  r.fano = doc.at("fano").get<bool>();
  const auto& mk = doc.at("minus_k");
  r.minus_k.free = IntVector(static_cast<Eigen::Index>(mk.size()));
  for (std::size_t i = 0; i < mk.size(); ++i) r.minus_k.free(static_cast<Eigen::Index>(i)) = bmp::numerator(rational_from_json(mk[i]));
  const auto& mkt = doc.at("minus_k_torsion");
  r.minus_k.torsion = IntVector(static_cast<Eigen::Index>(mkt.size()));
  for (std::size_t i = 0; i < mkt.size(); ++i) r.minus_k.torsion(static_cast<Eigen::Index>(i)) = bmp::numerator(rational_from_json(mkt[i]));
  r.special = doc.at("special").get<std::vector<int>>();
  r.family_dimension = doc.at("family_dimension").get<int>();
  const auto& alpha = doc.at("alpha");
  r.alpha = IntVector(static_cast<Eigen::Index>(alpha.size()));
  for (std::size_t i = 0; i < alpha.size(); ++i) r.alpha(static_cast<Eigen::Index>(i)) = integer_from_json(alpha[i], "alpha");

  const auto& ke = doc.at("ke");
  r.ke.admits = ke.at("admits").get<bool>();
  for (const auto& b : ke.at("barycenters")) r.ke.barycenters.emplace_back(rational_from_json(b[0]), rational_from_json(b[1]));
  for (const auto& a : ke.at("areas")) r.ke.areas.push_back(rational_from_json(a));
  r.ke.recentered = ke.at("recentered").get<std::vector<bool>>();
  r.ke.first_coordinates_agree = ke.at("first_coordinates_agree").get<bool>();

  const auto& krs = doc.at("krs");
  const std::string kv = krs.at("verdict").get<std::string>();
  r.krs.verdict = kv == "yes" ? KrsVerdict::Yes : kv == "no" ? KrsVerdict::No : kv == "vacuous" ? KrsVerdict::Vacuous : KrsVerdict::Indeterminate;
  if (!krs.at("xi_root").is_null()) r.krs.xi_root = isolating_from_json(krs["xi_root"]);
  if (!krs.at("xi_abs").is_null()) r.krs.xi_abs = interval_from_json(krs["xi_abs"]);
  for (const auto& p : krs.at("second_moments")) {
    KrsRecord::PerKappa pk;
    pk.kappa = p.at("kappa").get<int>();
    if (!p.at("xi_root").is_null()) pk.xi_root = isolating_from_json(p["xi_root"]);
    if (!p.at("second_moment").is_null()) pk.second_moment = interval_from_json(p["second_moment"]);
    pk.sign = sign_from_json(p.at("sign"));
    r.krs.per_kappa.push_back(pk);
  }
  r.krs.roots_intersect = krs.at("roots_intersect").get<bool>();
  r.krs.diagnostic = krs.at("diagnostic").get<std::string>();

  const auto& se = doc.at("se");
  const std::string sv = se.at("verdict").get<std::string>();
  r.se.verdict = sv == "candidate" ? SeVerdict::Candidate : sv == "excluded" ? SeVerdict::Excluded : SeVerdict::Indeterminate;
  for (const auto& p : se.at("per_kappa")) {
    SeRecord::PerKappa pk;
    pk.kappa = p.at("kappa").get<int>();
    if (!p["domain"][0].is_null()) pk.domain.lo = rational_from_json(p["domain"][0]);
    if (!p["domain"][1].is_null()) pk.domain.hi = rational_from_json(p["domain"][1]);
    if (!p.at("z").is_null()) pk.z = isolating_from_json(p["z"]);
    if (!p.at("d2").is_null()) pk.d2 = interval_from_json(p["d2"]);
    pk.sign = sign_from_json(p.at("sign"));
    pk.diagnostic = p.at("diagnostic").get<std::string>();
    r.se.per_kappa.push_back(pk);
  }
  r.warnings = doc.at("warnings").get<std::vector<std::string>>();
  return r;
}

Json verdict_fields(const Json& report) {
  Json j;
  j["fano"] = report.at("fano");
  j["special"] = report.at("special");
  j["ke"] = report.at("ke").at("admits");
  j["krs"] = report.at("krs").at("verdict");
  j["se"] = report.at("se").at("verdict");
  return j;
}

Json atlas_to_json(const SurfaceContext& ctx, const DegenerationSet& degenerations) {
  Json j;
  j["P"] = to_json(ctx.P);
  j["alpha"] = to_json(degenerations.alpha);
  j["special"] = ctx.special_set;
  Json kappas = Json::array();
  for (const auto& deg : degenerations.kappas) {
    Json k;
    k["kappa"] = deg.kappa;
    k["special"] = deg.special;
    k["tau_prime"] = to_json(deg.tau_prime);
    k["omega_prime"] = to_json(deg.omega_prime);
    k["G"] = deg.G ? to_json(*deg.G) : Json(nullptr);
    k["tau"] = deg.tau ? to_json(*deg.tau) : Json(nullptr);
    k["omega"] = deg.omega ? to_json(*deg.omega) : Json(nullptr);
    k["C"] = to_json(deg.C);
    k["u"] = deg.u ? to_json(IntVector(*deg.u)) : Json(nullptr);
    k["B"] = to_json(deg.B);
    Json rays = Json::array();
    for (const auto& v : deg.fano_rays) rays.push_back(to_json(IntVector(v)));
    k["fano_rays"] = rays;
    k["P_kappa"] = to_json(pkappa_export(ctx, deg.kappa).matrix);
    kappas.push_back(k);
  }
  j["kappas"] = kappas;
  return j;
}

std::string report_to_text(const StabilityReport& r) {
  std::ostringstream os;
  auto interval = [](const RatInterval& x) { return "[" + to_decimal(x.lo(), 10) + ", " + to_decimal(x.hi(), 10) + "]"; };
  os << "fano: " << (r.fano ? "yes" : "no") << "\n";
  os << "-K (free): (";
  for (Eigen::Index i = 0; i < r.minus_k.free.size(); ++i) os << (i ? ", " : "") << r.minus_k.free(i);
  os << ")\nspecial kappa: {";
  for (std::size_t i = 0; i < r.special.size(); ++i) os << (i ? ", " : "") << r.special[i];
  os << "}\nfamily dimension: " << r.family_dimension << "\n\n";

  os << "Kaehler-Einstein: " << (r.ke.admits ? "yes" : "no") << "\n";
  for (std::size_t k = 0; k < r.ke.barycenters.size(); ++k)
    os << "  b_" << k << " = (" << to_string(r.ke.barycenters[k](0)) << ", " << to_string(r.ke.barycenters[k](1)) << ")\n";

  os << "\nKaehler-Ricci soliton: " << to_string(r.krs.verdict) << "\n";
  if (r.krs.xi_root) os << "  xi* in " << interval(r.krs.xi_root->bracket) << "  |xi*| in " << interval(*r.krs.xi_abs) << "\n";
  for (const auto& pk : r.krs.per_kappa)
    if (pk.second_moment) os << "  kappa " << pk.kappa << ": I2 in " << interval(*pk.second_moment) << " (" << to_string(pk.sign) << ")\n";

  os << "\nSasaki-Einstein: " << to_string(r.se.verdict) << "\n";
  for (const auto& pk : r.se.per_kappa) {
    os << "  kappa " << pk.kappa << ": domain (" << (pk.domain.lo ? to_string(*pk.domain.lo) : "-inf") << ", "
       << (pk.domain.hi ? to_string(*pk.domain.hi) : "inf") << ")";
    if (pk.z) os << ", z in " << interval(pk.z->bracket);
    if (pk.d2) os << ", d vol/d x2 in " << interval(*pk.d2);
    os << " (" << to_string(pk.sign) << ")\n";
  }
  if (!r.warnings.empty()) {
    os << "\nwarnings:\n";
    for (const auto& w : r.warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

Json error_to_json(const Error& e) {
  Json j;
  j["error"] = to_string(e.code());
  j["message"] = e.what();
  return j;
}

}  // namespace cstar

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qg/corpus.hpp"
#include "qg/curvefile.hpp"
#include "qg/groups.hpp"
#include "qg/qgal.hpp"

using nlohmann::ordered_json;
using qg::Errc;
using qg::Error;
using qg::num::CtxPtr;
using qg::num::FieldElement;
using qg::plane::ProjLine;
using qg::plane::ProjPoint;
using qg::plane::ProjTransform;
using qg::poly::TriForm;
using qg::qgal::CensusReport;
using qg::qgal::QGCertificate;

namespace {

std::string iso_timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

ordered_json tally_json(const std::map<long, long>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [n, c] : m) j[std::to_string(n)] = c;
  return j;
}

ordered_json census_json(const CensusReport& rep) {
  ordered_json j;
  j["degree"] = rep.degree;
  j["inner"] = tally_json(rep.inner);
  j["outer"] = tally_json(rep.outer);
  j["inner_cumulative"] = tally_json(rep.inner_cumulative);
  j["outer_cumulative"] = tally_json(rep.outer_cumulative);
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : rep.verdicts) {
    ordered_json vj;
    vj["name"] = v.name;
    vj["ok"] = v.ok;
    vj["detail"] = v.detail;
    verdicts.push_back(vj);
  }
  j["verdicts"] = verdicts;
  j["all_bounds_ok"] = rep.all_bounds_ok();
  return j;
}

ordered_json matrix_json(const ProjTransform& t) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < 3; ++j) row.push_back(t.matrix()(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

ordered_json cert_json(const QGCertificate& c) {
  ordered_json j;
  j["point"] = c.point.str();
  j["on_curve"] = c.on_curve;
  j["projection_degree"] = c.r;
  j["order"] = c.n;
  j["galois"] = c.galois();
  if (c.generator) j["generator"] = matrix_json(*c.generator);
  if (c.axis) j["axis"] = c.axis->str();
  return j;
}

std::string matrix_str(const ProjTransform& t) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < 3; ++j) {
      if (j) s += ", ";
      s += t.matrix()(i, j).str();
    }
  }
  return s + "]";
}

void print_cert(const QGCertificate& c) {
  std::cout << "point:        " << c.point.str() << "\n"
            << "on curve:     " << (c.on_curve ? "yes" : "no") << "\n"
            << "proj degree:  " << c.r << "\n"
            << "order:        " << c.n
            << (c.n >= 2 ? "  (quasi-Galois)" : "  (not quasi-Galois)") << "\n"
            << "galois:       " << (c.galois() ? "yes" : "no") << "\n";
  if (c.generator) std::cout << "generator:    " << matrix_str(*c.generator) << "\n";
  if (c.axis) std::cout << "axis:         " << c.axis->str() << "\n";
}

void print_census(const CensusReport& rep) {
  std::cout << "census (degree " << rep.degree << ")\n";
  std::cout << "  order  inner  outer\n";
  std::set<long> orders;
  for (const auto& [n, c] : rep.inner) orders.insert(n);
  for (const auto& [n, c] : rep.outer) orders.insert(n);
  for (long n : orders) {
    auto find = [n](const std::map<long, long>& m) {
      auto it = m.find(n);
      return it == m.end() ? 0L : it->second;
    };
    std::printf("  %5ld  %5ld  %5ld\n", n, find(rep.inner), find(rep.outer));
  }
  if (orders.empty()) std::cout << "  (no quasi-Galois points)\n";
  for (const auto& v : rep.verdicts)
    std::cout << "  bound " << (v.ok ? "ok " : "VIOLATED ") << v.name << ": " << v.detail
              << "\n";
}

// ------------------------------------------------------------------ scenarios

struct ScenarioResult {
  std::string id;
  bool pass = false;
  ordered_json expected;
  ordered_json computed;
  long duration_ms = 0;
};

struct FamilyRun {
  qg::corpus::NamedCurve curve;
  std::vector<QGCertificate> certs;
  CensusReport rep;
};

FamilyRun run_family(const std::string& name, const qg::corpus::Params& params = {}) {
  qg::corpus::NamedCurve c = qg::corpus::build_curve(name, params);
  std::vector<QGCertificate> certs = qg::qgal::discover(c.form, c.seeds);
  CensusReport rep = qg::qgal::census(c.form, certs);
  return {std::move(c), std::move(certs), std::move(rep)};
}

bool tallies_match(const CensusReport& got, const CensusReport& want) {
  return got.inner == want.inner && got.outer == want.outer;
}

ScenarioResult scenario_klein21() {
  ScenarioResult res;
  res.id = "klein21";
  FamilyRun fr = run_family("klein_model");
  long order2_outer = 0, galois = 0;
  for (const auto& c : fr.certs) {
    if (!c.on_curve && c.n == 2) ++order2_outer;
    if (c.galois()) ++galois;
  }
  res.expected = {{"certificates", 21}, {"outer_order_2", 21}, {"galois", 0}};
  res.computed = {{"certificates", fr.certs.size()},
                  {"outer_order_2", order2_outer},
                  {"galois", galois},
                  {"census", census_json(fr.rep)}};
  res.pass = (long)fr.certs.size() == 21 && order2_outer == 21 && galois == 0 &&
             tallies_match(fr.rep, *fr.curve.expected);
  return res;
}

ScenarioResult scenario_hessian12() {
  ScenarioResult res;
  res.id = "hessian12";
  FamilyRun fr = run_family("hessian_sextic");
  long order3_outer = 0;
  for (const auto& c : fr.certs)
    if (!c.on_curve && c.n == 3) ++order3_outer;
  res.expected = {{"certificates", 12}, {"outer_order_3", 12}};
  res.computed = {{"certificates", fr.certs.size()},
                  {"outer_order_3", order3_outer},
                  {"census", census_json(fr.rep)}};
  res.pass = (long)fr.certs.size() == 12 && order3_outer == 12 &&
             tallies_match(fr.rep, *fr.curve.expected);
  return res;
}

ScenarioResult scenario_fermat(long d) {
  ScenarioResult res;
  res.id = "fermat:" + std::to_string(d);
  FamilyRun fr = run_family("fermat", {{"d", std::to_string(d)}});
  res.expected = {{"inner", tally_json(fr.curve.expected->inner)},
                  {"outer", tally_json(fr.curve.expected->outer)}};
  res.computed = {{"census", census_json(fr.rep)}};
  res.pass = tallies_match(fr.rep, *fr.curve.expected) && fr.rep.all_bounds_ok();
  return res;
}

ScenarioResult scenario_halfdeg(long n) {
  ScenarioResult res;
  res.id = "halfdeg:" + std::to_string(n);
  qg::corpus::NamedCurve c = qg::corpus::build_curve("halfdeg_family", {{"n", std::to_string(n)}});
  std::vector<QGCertificate> certs;
  for (const ProjPoint& p : c.seeds) certs.push_back(qg::qgal::quasi_galois_order(c.form, p));
  bool orders_ok = true;
  for (const auto& cert : certs) orders_ok = orders_ok && cert.n == n;
  bool pairs_ok = true;
  for (size_t i = 0; i < certs.size(); ++i)
    for (size_t j = i + 1; j < certs.size(); ++j)
      pairs_ok = pairs_ok && qg::qgal::is_gpair(certs[i], certs[j]).is_gpair();
  ordered_json orders = ordered_json::array();
  for (const auto& cert : certs) orders.push_back(cert.n);
  res.expected = {{"vertex_orders", {n, n, n}}, {"pairwise_gpairs", true}};
  res.computed = {{"vertex_orders", orders}, {"pairwise_gpairs", pairs_ok}};
  res.pass = orders_ok && pairs_ok;
  return res;
}

ScenarioResult scenario_quartic(const std::string& a, const std::string& b,
                                const std::string& c) {
  ScenarioResult res;
  res.id = "quartic-family:" + a + "," + b + "," + c;
  FamilyRun fr = run_family("quartic_family", {{"a", a}, {"b", b}, {"c", c}});
  CtxPtr ctx = fr.curve.ctx;
  QGCertificate vert = qg::qgal::quasi_galois_order(
      fr.curve.form, ProjPoint(FieldElement::zero(ctx), FieldElement::zero(ctx),
                               FieldElement::one(ctx)));
  res.computed = {{"vertex_order", vert.n},
                  {"vertex_galois", vert.galois()},
                  {"fixpoint", fr.certs.size()},
                  {"census", census_json(fr.rep)}};
  bool special = a == "1" && b == "0" && c == "0";
  if (special) {
    long outer2 = 0;
    for (const auto& cert : fr.certs)
      if (!cert.on_curve && cert.n == 2) ++outer2;
    res.expected = {{"vertex_order", 4},
                    {"vertex_galois", true},
                    {"fixpoint", 6},
                    {"outer_order_2", 6}};
    res.computed["outer_order_2"] = outer2;
    res.pass = vert.n == 4 && vert.galois() && fr.certs.size() == 6 && outer2 == 6;
  } else {
    res.expected = {{"all_bounds_ok", true}};
    res.pass = fr.rep.all_bounds_ok();
  }
  return res;
}

ScenarioResult scenario_coprime() {
  ScenarioResult res;
  res.id = "coprime";
  qg::corpus::NamedCurve c = qg::corpus::build_curve("coprime_example");
  QGCertificate c1 = qg::qgal::quasi_galois_order(c.form, c.seeds[0]);
  QGCertificate c2 = qg::qgal::quasi_galois_order(c.form, c.seeds[1]);
  std::vector<ProjPoint> meet = qg::qgal::fixed_locus_intersection(c1, c2, c.form);
  ordered_json pts = ordered_json::array();
  for (const auto& p : meet) pts.push_back(p.str());
  res.expected = {{"orders", {3, 2}}, {"curve_locus_points", {"1:0:0", "0:1:0"}}};
  res.computed = {{"orders", {c1.n, c2.n}}, {"curve_locus_points", pts}};
  std::set<std::string> got;
  for (const auto& p : meet) got.insert(p.str());
  res.pass = c1.n == 3 && c2.n == 2 && got == std::set<std::string>{"1:0:0", "0:1:0"};
  return res;
}

ScenarioResult scenario_flex(long d) {
  ScenarioResult res;
  res.id = "flex:" + std::to_string(d);
  if (d < 4 || d % 2 != 0) throw Error(Errc::BAD_PARAMS, "flex scenario needs even d >= 4");
  CtxPtr ctx = qg::num::make_context(2 * d);
  FieldElement one = FieldElement::one(ctx), zero = FieldElement::zero(ctx);
  std::map<qg::poly::Exponents, FieldElement> terms = {
      {{d, 0, 0}, one}, {{0, d, 0}, one}, {{0, 0, d}, one}};
  TriForm F(ctx, d, terms);
  // Flexes are the curve points on the coordinate lines: eta^d = -1 rotated
  // through the three coordinates.
  FieldElement z2d = qg::num::zeta(ctx, 2 * d);
  long count = 0, total = 0;
  for (long k = 0; k < d; ++k) {
    FieldElement eta = z2d.pow(2 * k + 1);
    for (const ProjPoint& q :
         {ProjPoint(zero, eta, one), ProjPoint(eta, zero, one), ProjPoint(eta, one, zero)}) {
      total += qg::plane::flex_contribution(F, q);
      ++count;
    }
  }
  res.expected = {{"flex_count", 3 * d}, {"contribution_sum", 3 * d * (d - 2)}};
  res.computed = {{"flex_count", count}, {"contribution_sum", total}};
  res.pass = count == 3 * d && total == 3 * d * (d - 2);
  return res;
}

ScenarioResult scenario_bounds() {
  ScenarioResult res;
  res.id = "bounds";
  auto b24 = qg::qgal::galois_closure_bounds(2, 4);
  auto b36 = qg::qgal::galois_closure_bounds(3, 6);
  bool not_div = false;
  try {
    qg::qgal::galois_closure_bounds(3, 7);
  } catch (const Error& e) {
    not_div = e.code() == Errc::NOT_DIVISIBLE;
  }
  auto p36 = qg::qgal::predicted_galois_group(3, 6);
  auto p24 = qg::qgal::predicted_galois_group(2, 4);
  auto p510 = qg::qgal::predicted_galois_group(5, 10);
  res.expected = {{"bounds_2_4", {4, 8}},
                  {"bounds_3_6", {6, 18}},
                  {"bounds_3_7", "NOT_DIVISIBLE"},
                  {"group_3_6", {18, "(Z/3Z) x D_6"}},
                  {"group_2_4", {8, "order only (8)"}},
                  {"group_5_10", {50, "(Z/5Z) x D_10"}}};
  res.computed = {{"bounds_2_4", {b24.lower, b24.upper_generic}},
                  {"bounds_3_6", {b36.lower, b36.upper_generic}},
                  {"bounds_3_7", not_div ? "NOT_DIVISIBLE" : "no error"},
                  {"group_3_6", {p36.order, p36.label}},
                  {"group_2_4", {p24.order, p24.label}},
                  {"group_5_10", {p510.order, p510.label}}};
  res.pass = res.expected == res.computed;
  return res;
}

ScenarioResult scenario_dual() {
  ScenarioResult res;
  res.id = "dual";
  long checked = 0;
  bool ok = true;
  for (const auto& [name, params] :
       std::vector<std::pair<std::string, qg::corpus::Params>>{
           {"fermat", {{"d", "4"}}}, {"hessian_sextic", {}}, {"klein_model", {}}}) {
    FamilyRun fr = run_family(name, params);
    for (const auto& c : fr.certs) {
      QGCertificate dd = qg::qgal::dual_certificate(qg::qgal::dual_certificate(c));
      bool same = dd.point == c.point && dd.n == c.n && dd.r == c.r &&
                  *dd.axis == *c.axis && *dd.generator == *c.generator;
      ok = ok && same;
      ++checked;
    }
  }
  res.expected = {{"involutive", true}};
  res.computed = {{"involutive", ok}, {"certificates_checked", checked}};
  res.pass = ok && checked >= 45;
  return res;
}

ScenarioResult scenario_groups() {
  ScenarioResult res;
  res.id = "groups";

  // Klein model: closure of the 21 involution generators.
  FamilyRun klein = run_family("klein_model");
  std::vector<ProjTransform> kgens;
  for (const auto& c : klein.certs) kgens.push_back(*c.generator);
  qg::groups::MatrixGroup KG = qg::groups::closure(kgens);
  qg::groups::GroupReport krep = qg::groups::group_report(KG);
  std::set<std::string> cert_points;
  for (const auto& c : klein.certs) cert_points.insert(c.point.key());
  std::set<std::string> centers;
  for (const auto& p : krep.homology_centers) centers.insert(p.key());
  bool klein_ok = KG.order() == 168 && krep.involution_count == 21 &&
                  centers == cert_points &&
                  qg::groups::preserves_curve(KG, klein.curve.form);

  // Hessian sextic: generator closure is already the full group.
  FamilyRun hess = run_family("hessian_sextic");
  std::vector<ProjTransform> hgens;
  for (const auto& c : hess.certs) hgens.push_back(*c.generator);
  qg::groups::MatrixGroup HG = qg::groups::closure(hgens);
  CtxPtr hctx = hess.curve.ctx;
  FieldElement h1 = FieldElement::one(hctx), h0 = FieldElement::zero(hctx);
  qg::plane::Mat3 swap_yz = qg::plane::Mat3::zero(hctx);
  swap_yz(0, 0) = h1;
  swap_yz(1, 2) = h1;
  swap_yz(2, 1) = h1;
  qg::plane::Mat3 swap_xy = qg::plane::Mat3::zero(hctx);
  swap_xy(0, 1) = h1;
  swap_xy(1, 0) = h1;
  swap_xy(2, 2) = h1;
  (void)h0;
  std::vector<ProjTransform> hplus = hgens;
  hplus.emplace_back(swap_yz);
  hplus.emplace_back(swap_xy);
  qg::groups::MatrixGroup HG2 = qg::groups::closure(hplus);
  bool hess_ok = HG.order() == 216 && HG2.order() == 216 && HG.same_elements(HG2) &&
                 qg::groups::preserves_curve(HG, hess.curve.form);

  // Fermat quartic: full group vs the diagonal (order-4) subgroup.
  FamilyRun f4 = run_family("fermat", {{"d", "4"}});
  std::vector<ProjTransform> all_gens, diag_gens;
  for (const auto& c : f4.certs) {
    all_gens.push_back(*c.generator);
    if (c.n == 4) diag_gens.push_back(*c.generator);
  }
  qg::groups::MatrixGroup FG = qg::groups::closure(all_gens);
  qg::groups::MatrixGroup DG = qg::groups::closure(diag_gens);
  bool fermat_ok = FG.order() == 96 && DG.order() == 16 &&
                   qg::groups::is_normal_subgroup(DG, FG);

  res.expected = {{"klein", {{"order", 168}, {"involutions", 21}, {"centers_match", true}}},
                  {"hessian", {{"order", 216}, {"swaps_equal", true}}},
                  {"fermat4", {{"order", 96}, {"diagonal", 16}, {"diagonal_normal", true}}}};
  res.computed = {
      {"klein",
       {{"order", KG.order()},
        {"involutions", krep.involution_count},
        {"centers_match", centers == cert_points}}},
      {"hessian", {{"order", HG.order()}, {"swaps_equal", HG.same_elements(HG2)}}},
      {"fermat4",
       {{"order", FG.order()},
        {"diagonal", DG.order()},
        {"diagonal_normal", FG.order() == 96 && DG.order() == 16 &&
                                qg::groups::is_normal_subgroup(DG, FG)}}}};
  res.pass = klein_ok && hess_ok && fermat_ok;
  return res;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long_arg(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::BAD_PARAMS, what + ": not an integer: " + s);
  }
}

ScenarioResult run_scenario(const std::string& scenario_id);

std::vector<std::string> all_scenarios() {
  return {"bounds",  "coprime",  "dual",      "fermat:4", "fermat:5",
          "fermat:6", "flex:4",  "flex:6",    "groups",   "halfdeg:7",
          "hessian12", "klein21", "quartic-family:1,0,0"};
}

ScenarioResult run_scenario(const std::string& scenario_id) {
  auto head_tail = split(scenario_id, ':');
  const std::string& head = head_tail[0];
  std::vector<std::string> args;
  if (head_tail.size() > 1) args = split(head_tail[1], ',');
  if (head_tail.size() > 2) throw Error(Errc::UNKNOWN_NAME, "bad scenario: " + scenario_id);

  auto t0 = std::chrono::steady_clock::now();
  ScenarioResult res;
  if (head == "klein21" && args.empty())
    res = scenario_klein21();
  else if (head == "hessian12" && args.empty())
    res = scenario_hessian12();
  else if (head == "fermat" && args.size() == 1)
    res = scenario_fermat(parse_long_arg(args[0], "fermat degree"));
  else if (head == "halfdeg" && args.size() == 1)
    res = scenario_halfdeg(parse_long_arg(args[0], "halfdeg n"));
  else if (head == "quartic-family" && args.size() == 3)
    res = scenario_quartic(args[0], args[1], args[2]);
  else if (head == "coprime" && args.empty())
    res = scenario_coprime();
  else if (head == "flex" && args.size() == 1)
    res = scenario_flex(parse_long_arg(args[0], "flex degree"));
  else if (head == "bounds" && args.empty())
    res = scenario_bounds();
  else if (head == "dual" && args.empty())
    res = scenario_dual();
  else if (head == "groups" && args.empty())
    res = scenario_groups();
  else
    throw Error(Errc::UNKNOWN_NAME, "unknown scenario: " + scenario_id);
  auto t1 = std::chrono::steady_clock::now();
  res.duration_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return res;
}

// ------------------------------------------------------------------ commands

int cmd_analyze(const std::string& path, const std::string& point, bool json) {
  qg::io::LoadedCurve lc = qg::io::realize(qg::io::load_curve_file(path));
  ProjPoint p = qg::io::parse_point(lc.ctx, point);
  QGCertificate cert = qg::qgal::quasi_galois_order(lc.form, p);
  if (json) {
    ordered_json j;
    j["timestamp"] = iso_timestamp();
    j["command"] = "analyze";
    j["curve"] = lc.name;
    j["certificate"] = cert_json(cert);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "curve:        " << lc.name << "\n";
    print_cert(cert);
  }
  return 0;
}

int cmd_discover(const std::string& path, const std::string& seeds_path, long cap,
                 bool json) {
  qg::io::LoadedCurve lc = qg::io::realize(qg::io::load_curve_file(path));
  std::vector<ProjPoint> seeds = lc.seeds;
  if (!seeds_path.empty()) seeds = qg::io::load_seed_file(lc.ctx, seeds_path);
  if (seeds.empty())
    throw Error(Errc::BAD_PARAMS, "no seeds: curve file has none and --seeds not given");
  std::vector<QGCertificate> certs = qg::qgal::discover(lc.form, seeds, cap);
  CensusReport rep = qg::qgal::census(lc.form, certs);
  if (json) {
    ordered_json j;
    j["timestamp"] = iso_timestamp();
    j["command"] = "discover";
    j["curve"] = lc.name;
    ordered_json cj = ordered_json::array();
    for (const auto& c : certs) cj.push_back(cert_json(c));
    j["certificates"] = cj;
    j["census"] = census_json(rep);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "curve: " << lc.name << "\n"
              << "certificates: " << certs.size() << "\n";
    for (const auto& c : certs)
      std::cout << "  " << c.point.str() << "  order " << c.n << "  r " << c.r
                << (c.on_curve ? "  inner" : "  outer") << (c.galois() ? "  galois" : "")
                << "\n";
    print_census(rep);
  }
  return rep.all_bounds_ok() ? 0 : 1;
}

int cmd_group(const std::string& path, long cap, bool json) {
  qg::io::LoadedCurve lc = qg::io::realize(qg::io::load_curve_file(path));
  if (lc.seeds.empty()) throw Error(Errc::BAD_PARAMS, "curve file has no seeds");
  std::vector<QGCertificate> certs = qg::qgal::discover(lc.form, lc.seeds);
  std::vector<ProjTransform> gens;
  for (const auto& c : certs) gens.push_back(*c.generator);
  if (gens.empty()) throw Error(Errc::BAD_PARAMS, "no quasi-Galois generators discovered");
  qg::groups::MatrixGroup G = qg::groups::closure(gens, cap);
  qg::groups::GroupReport rep = qg::groups::group_report(G);
  bool preserves = qg::groups::preserves_curve(G, lc.form);
  if (json) {
    ordered_json j;
    j["timestamp"] = iso_timestamp();
    j["command"] = "group";
    j["curve"] = lc.name;
    j["order"] = rep.order;
    j["generators"] = rep.generator_count;
    j["element_order_histogram"] = tally_json(rep.element_order_histogram);
    j["involutions"] = rep.involution_count;
    ordered_json centers = ordered_json::array();
    for (const auto& p : rep.homology_centers) centers.push_back(p.str());
    j["homology_centers"] = centers;
    j["preserves_curve"] = preserves;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "curve: " << lc.name << "\n"
              << "group order: " << rep.order << " (from " << rep.generator_count
              << " generators)\n"
              << "preserves curve: " << (preserves ? "yes" : "no") << "\n"
              << "element orders:";
    for (const auto& [n, c] : rep.element_order_histogram)
      std::cout << "  " << n << "x" << c;
    std::cout << "\ninvolutions: " << rep.involution_count << "\n"
              << "homology centers (" << rep.homology_centers.size() << "):\n";
    for (const auto& p : rep.homology_centers) std::cout << "  " << p.str() << "\n";
  }
  return preserves ? 0 : 1;
}

int cmd_export(const std::string& name, const std::vector<std::string>& params,
               const std::string& out_path) {
  std::string fam = name;
  for (char& ch : fam)
    if (ch == '-') ch = '_';
  qg::corpus::Params p;
  if (fam == "fermat") {
    if (params.size() != 1) throw Error(Errc::BAD_PARAMS, "fermat needs one parameter: d");
    p["d"] = params[0];
  } else if (fam == "quartic_family") {
    if (params.size() != 3)
      throw Error(Errc::BAD_PARAMS, "quartic_family needs three parameters: a b c");
    p["a"] = params[0];
    p["b"] = params[1];
    p["c"] = params[2];
  } else if (fam == "halfdeg_family") {
    if (params.empty() || params.size() > 4)
      throw Error(Errc::BAD_PARAMS, "halfdeg_family needs parameters: n [a b c]");
    p["n"] = params[0];
    if (params.size() > 1) p["a"] = params[1];
    if (params.size() > 2) p["b"] = params[2];
    if (params.size() > 3) p["c"] = params[3];
  } else if (fam == "miura_example") {
    if (params.size() != 1) throw Error(Errc::BAD_PARAMS, "miura_example needs one parameter: n");
    p["n"] = params[0];
  } else if (!params.empty()) {
    throw Error(Errc::BAD_PARAMS, fam + " takes no parameters");
  }
  qg::corpus::NamedCurve c = qg::corpus::build_curve(fam, p);
  qg::io::CurveFile cf = qg::io::curve_file_from(c.display, c.form, c.seeds);
  qg::io::save_curve_file(cf, out_path);
  std::cout << "wrote " << out_path << " (" << c.display << ", degree "
            << c.form.degree() << ", conductor " << c.ctx->conductor << ")\n";
  return 0;
}

int cmd_verify(const std::string& scenario, const std::vector<std::string>& extra,
               bool json) {
  std::string scenario_id = scenario;
  for (const std::string& e : extra) scenario_id += (scenario_id.find(':') == std::string::npos ? ":" : ",") + e;

  std::vector<std::string> ids;
  if (scenario_id == "all")
    ids = all_scenarios();
  else
    ids.push_back(scenario_id);

  std::vector<ScenarioResult> results;
  for (const std::string& id : ids) results.push_back(run_scenario(id));

  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  if (json) {
    ordered_json j;
    j["timestamp"] = iso_timestamp();
    j["command"] = "verify";
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      ordered_json rj;
      rj["scenario"] = r.id;
      rj["pass"] = r.pass;
      rj["expected"] = r.expected;
      rj["computed"] = r.computed;
      arr.push_back(rj);
    }
    j["results"] = arr;
    j["all_pass"] = all_pass;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  (" << r.duration_ms
                << " ms)\n";
      if (!r.pass) {
        std::cout << "  expected: " << r.expected.dump() << "\n"
                  << "  computed: " << r.computed.dump() << "\n";
      }
    }
    std::cout << (all_pass ? "all scenarios passed" : "SCENARIO FAILURES") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for quasi-Galois points of plane curves"};
  app.require_subcommand(1);

  std::string curve_path, point_str, seeds_path, scenario, corpus_name, out_path;
  std::vector<std::string> extra_params;
  long cap_discover = 512, cap_group = 2048;
  bool json_an = false, json_disc = false, json_ver = false, json_grp = false;

  auto* an = app.add_subcommand("analyze", "certificate for one point of a curve");
  an->add_option("curve-file", curve_path)->required();
  an->add_option("--point", point_str, "point literal x:y:z")->required();
  an->add_flag("--json", json_an);

  auto* disc = app.add_subcommand("discover", "orbit-closure discovery plus census");
  disc->add_option("curve-file", curve_path)->required();
  disc->add_option("--seeds", seeds_path, "seed file, one x:y:z per line");
  disc->add_option("--cap", cap_discover, "certificate cap");
  disc->add_flag("--json", json_disc);

  auto* ver = app.add_subcommand("verify", "run a named verification scenario");
  ver->add_option("scenario", scenario)->required();
  ver->add_option("params", extra_params, "extra scenario parameters");
  ver->add_flag("--json", json_ver);

  auto* grp = app.add_subcommand("group", "closure of discovered generators");
  grp->add_option("curve-file", curve_path)->required();
  bool from_discovered = false;
  grp->add_flag("--from-discovered", from_discovered)->required();
  grp->add_option("--cap", cap_group, "group element cap");
  grp->add_flag("--json", json_grp);

  auto* exp = app.add_subcommand("export-corpus", "write a built-in curve to a file");
  exp->add_option("name", corpus_name)->required();
  exp->add_option("params", extra_params, "family parameters");
  exp->add_option("-o,--output", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (an->parsed()) return cmd_analyze(curve_path, point_str, json_an);
    if (disc->parsed()) return cmd_discover(curve_path, seeds_path, cap_discover, json_disc);
    if (ver->parsed()) return cmd_verify(scenario, extra_params, json_ver);
    if (grp->parsed()) return cmd_group(curve_path, cap_group, json_grp);
    if (exp->parsed()) return cmd_export(corpus_name, extra_params, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

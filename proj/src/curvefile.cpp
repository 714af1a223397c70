#include "qg/curvefile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "qg/expr.hpp"

namespace qg::io {

namespace {

using nlohmann::ordered_json;
using num::FieldElement;

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(Errc::PARSE_ERROR, "curve file: " + field + ": " + why);
}

long require_int(const ordered_json& j, const std::string& field) {
  if (!j.contains(field)) bad(field, "missing");
  const auto& v = j.at(field);
  if (!v.is_number_integer()) bad(field, "not an integer");
  return v.get<long>();
}

std::string require_str(const ordered_json& j, const std::string& field) {
  if (!j.contains(field)) bad(field, "missing");
  const auto& v = j.at(field);
  if (!v.is_string()) bad(field, "not a string");
  return v.get<std::string>();
}

}  // namespace

CurveFile parse_curve_file(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(Errc::PARSE_ERROR, std::string("curve file: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("document", "not an object");

  CurveFile cf;
  cf.name = require_str(j, "name");

  if (!j.contains("field") || !j.at("field").is_object()) bad("field", "missing object");
  const auto& f = j.at("field");
  if (!f.contains("conductor") || !f.at("conductor").is_number_integer())
    bad("field.conductor", "missing or not an integer");
  cf.conductor = f.at("conductor").get<long>();
  if (cf.conductor < 1) bad("field.conductor", "must be positive");
  if (f.contains("sqrt_adjunct")) {
    if (!f.at("sqrt_adjunct").is_string()) bad("field.sqrt_adjunct", "not a string");
    cf.sqrt_adjunct = f.at("sqrt_adjunct").get<std::string>();
  }

  cf.degree = require_int(j, "degree");
  if (cf.degree < 1) bad("degree", "must be positive");

  if (!j.contains("terms") || !j.at("terms").is_array() || j.at("terms").empty())
    bad("terms", "missing or empty array");
  std::map<poly::Exponents, bool> seen;
  size_t idx = 0;
  for (const auto& t : j.at("terms")) {
    std::string where = "terms[" + std::to_string(idx) + "]";
    if (!t.is_object()) bad(where, "not an object");
    if (!t.contains("exponents") || !t.at("exponents").is_array() ||
        t.at("exponents").size() != 3)
      bad(where + ".exponents", "need a 3-element integer array");
    poly::Exponents e{};
    long sum = 0;
    for (int i = 0; i < 3; ++i) {
      const auto& x = t.at("exponents").at(i);
      if (!x.is_number_integer()) bad(where + ".exponents", "not an integer");
      e[i] = x.get<long>();
      if (e[i] < 0) bad(where + ".exponents", "negative exponent");
      sum += e[i];
    }
    if (sum != cf.degree)
      bad(where + ".exponents",
          "sum " + std::to_string(sum) + " != degree " + std::to_string(cf.degree));
    if (seen.count(e)) bad(where + ".exponents", "duplicate exponent triple");
    seen[e] = true;
    cf.terms.emplace_back(e, require_str(t, "coefficient"));
    ++idx;
  }

  if (j.contains("seeds")) {
    if (!j.at("seeds").is_array()) bad("seeds", "not an array");
    for (const auto& s : j.at("seeds")) {
      if (!s.is_string()) bad("seeds", "entries must be strings");
      cf.seeds.push_back(s.get<std::string>());
    }
  }
  return cf;
}

CurveFile load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::PARSE_ERROR, "curve file: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve_file(buf.str());
}

LoadedCurve realize(const CurveFile& cf) {
  CtxPtr ctx;
  try {
    ctx = cf.sqrt_adjunct ? num::make_context(cf.conductor, *cf.sqrt_adjunct)
                          : num::make_context(cf.conductor);
  } catch (const Error& e) {
    throw Error(Errc::PARSE_ERROR, std::string("curve file: field: ") + e.what());
  }

  std::map<poly::Exponents, FieldElement> terms;
  for (size_t i = 0; i < cf.terms.size(); ++i) {
    FieldElement c;
    try {
      c = num::parse_element(ctx, cf.terms[i].second);
    } catch (const Error& e) {
      throw Error(Errc::PARSE_ERROR, "curve file: terms[" + std::to_string(i) +
                                         "].coefficient: " + e.what());
    }
    if (c.is_zero())
      throw Error(Errc::PARSE_ERROR,
                  "curve file: terms[" + std::to_string(i) + "].coefficient: zero");
    terms.emplace(cf.terms[i].first, c);
  }
  TriForm form(ctx, cf.degree, std::move(terms));

  std::vector<ProjPoint> seeds;
  for (size_t i = 0; i < cf.seeds.size(); ++i) {
    try {
      seeds.push_back(parse_point(ctx, cf.seeds[i]));
    } catch (const Error& e) {
      throw Error(Errc::PARSE_ERROR,
                  "curve file: seeds[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return {cf.name, ctx, form, seeds};
}

CurveFile curve_file_from(const std::string& name, const TriForm& form,
                          const std::vector<ProjPoint>& seeds) {
  CurveFile cf;
  cf.name = name;
  cf.conductor = form.context()->conductor;
  if (form.context()->adjunct) {
    // render the adjunct square as an expression in the base field
    num::CtxPtr base = num::make_context(cf.conductor);
    std::vector<num::Rational> w = *form.context()->adjunct;
    w.resize(static_cast<size_t>(base->degree));
    cf.sqrt_adjunct = FieldElement::from_parts(base, w, {}).str();
  }
  cf.degree = form.degree();
  for (auto it = form.terms().rbegin(); it != form.terms().rend(); ++it)
    cf.terms.emplace_back(it->first, it->second.str());
  for (const ProjPoint& p : seeds) cf.seeds.push_back(p.str());
  return cf;
}

std::string to_json(const CurveFile& cf) {
  ordered_json j;
  j["name"] = cf.name;
  ordered_json field;
  field["conductor"] = cf.conductor;
  if (cf.sqrt_adjunct) field["sqrt_adjunct"] = *cf.sqrt_adjunct;
  j["field"] = field;
  j["degree"] = cf.degree;
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : cf.terms) {
    ordered_json t;
    t["exponents"] = {e[0], e[1], e[2]};
    t["coefficient"] = c;
    terms.push_back(t);
  }
  j["terms"] = terms;
  if (!cf.seeds.empty()) j["seeds"] = cf.seeds;
  return j.dump(2) + "\n";
}

void save_curve_file(const CurveFile& cf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::PARSE_ERROR, "curve file: cannot write " + path);
  out << to_json(cf);
}

ProjPoint parse_point(const CtxPtr& ctx, const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw Error(Errc::PARSE_ERROR, "point literal '" + text + "': need x:y:z");
  num::Vec3 v = num::vec3_zero(ctx);
  for (int i = 0; i < 3; ++i) {
    if (parts[static_cast<size_t>(i)].empty())
      throw Error(Errc::PARSE_ERROR, "point literal '" + text + "': empty coordinate");
    v[static_cast<size_t>(i)] = num::parse_element(ctx, parts[static_cast<size_t>(i)]);
  }
  if (num::vec3_is_zero(v))
    throw Error(Errc::PARSE_ERROR, "point literal '" + text + "': all coordinates zero");
  return ProjPoint(v);
}

std::vector<ProjPoint> load_seed_file(const CtxPtr& ctx, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::PARSE_ERROR, "seed file: cannot open " + path);
  std::vector<ProjPoint> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    std::string body = line.substr(b, e - b + 1);
    if (body.empty() || body[0] == '#') continue;
    try {
      out.push_back(parse_point(ctx, body));
    } catch (const Error& err) {
      throw Error(Errc::PARSE_ERROR,
                  "seed file line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  return out;
}

}  // namespace qg::io

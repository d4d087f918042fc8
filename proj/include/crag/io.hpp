#ifndef CRAG_IO_HPP
#define CRAG_IO_HPP

#include <json.hpp>
#include <string>

#include "crag/euler.hpp"
#include "crag/zerodim.hpp"

namespace crag {

using Json = nlohmann::json;

// Wire format: a polynomial is a list of terms; a term is
// [num, den, [e_1, ..., e_n]] for rational coefficients and
// [re_num, re_den, im_num, im_den, [e...]] for Gaussian ones.

inline Json rational_to_json(const Rational& q) {
  Json t = Json::array();
  t.push_back(q.get_num().get_str());
  t.push_back(q.get_den().get_str());
  return t;
}

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  fail(ErrorCode::ParseError, "expected an integer or integer string");
}

inline Json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return Json(static_cast<int64_t>(z.get_si()));
  return Json(z.get_str());
}

inline GPoly poly_from_json(const Json& terms, int nvars) {
  require(terms.is_array(), ErrorCode::ParseError, "polynomial must be an array of terms");
  GPoly p(nvars);
  for (const auto& t : terms) {
    require(t.is_array() && (t.size() == 3 || t.size() == 5), ErrorCode::ParseError,
            "term must be [num, den, exps] or [re_n, re_d, im_n, im_d, exps]");
    GaussianRational c;
    size_t expo_at = t.size() - 1;
    if (t.size() == 3) {
      c = GaussianRational(make_rat(int_from_json(t[0]), int_from_json(t[1])));
    } else {
      c = GaussianRational(make_rat(int_from_json(t[0]), int_from_json(t[1])),
                           make_rat(int_from_json(t[2]), int_from_json(t[3])));
    }
    const Json& ev = t[expo_at];
    require(ev.is_array(), ErrorCode::ParseError, "exponent vector must be an array");
    require(static_cast<int>(ev.size()) == nvars, ErrorCode::ParseError,
            "exponent vector length must match the variable count");
    Exponents e;
    for (const auto& x : ev) {
      require(x.is_number_integer() && x.get<int64_t>() >= 0, ErrorCode::ParseError,
              "exponents must be non-negative integers");
      e.push_back(static_cast<unsigned>(x.get<int64_t>()));
    }
    p.add_term(e, c);
  }
  return p;
}

inline QPoly qpoly_from_json(const Json& terms, int nvars) {
  GPoly g = poly_from_json(terms, nvars);
  for (const auto& [e, c] : g.terms())
    require(c.im == 0, ErrorCode::ParseError, "real polynomial with a complex coefficient");
  return g.map_coeffs([](const GaussianRational& c) { return c.re; });
}

inline Json poly_to_json(const GPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t = Json::array();
    t.push_back(int_to_json(Int(c.re.get_num())));
    t.push_back(int_to_json(Int(c.re.get_den())));
    if (c.im != 0) {
      t.push_back(int_to_json(Int(c.im.get_num())));
      t.push_back(int_to_json(Int(c.im.get_den())));
    }
    Json ev = Json::array();
    for (unsigned x : e) ev.push_back(static_cast<int64_t>(x));
    t.push_back(ev);
    terms.push_back(std::move(t));
  }
  return terms;
}

inline Json poly_to_json(const QPoly& p) {
  return poly_to_json(p.map_coeffs([](const Rational& c) { return GaussianRational(c); }));
}

struct ParsedInput {
  std::optional<PolySystem> system;
  std::optional<SemialgebraicSet> set;
  std::vector<std::string> vars;
};

inline ParsedInput parse_input(const Json& doc) {
  require(doc.is_object(), ErrorCode::ParseError, "input must be a JSON object");
  require(doc.contains("vars") && doc["vars"].is_array(), ErrorCode::ParseError,
          "input needs a vars array");
  ParsedInput out;
  for (const auto& v : doc["vars"]) out.vars.push_back(v.get<std::string>());
  int n = static_cast<int>(out.vars.size());

  if (doc.contains("system")) {
    const Json& s = doc["system"];
    require(s.contains("polys") && s["polys"].is_array(), ErrorCode::ParseError,
            "system needs a polys array");
    std::string field = s.value("field", "complex");
    require(field == "real" || field == "complex", ErrorCode::ParseError,
            "field must be real or complex");
    PolySystem sys;
    sys.field = field == "real" ? Field::Real : Field::Complex;
    sys.nvars = n;
    for (const auto& pj : s["polys"]) sys.polys.push_back(poly_from_json(pj, n));
    if (sys.field == Field::Real)
      require(sys.all_real(), ErrorCode::InvariantViolation,
              "real system with complex coefficients");
    out.system = std::move(sys);
    return out;
  }
  if (doc.contains("set")) {
    const Json& s = doc["set"];
    require(s.contains("blocks") && s["blocks"].is_array() && !s["blocks"].empty(),
            ErrorCode::ParseError, "set needs a nonempty blocks array");
    std::vector<BasicBlock> blocks;
    for (const auto& bj : s["blocks"]) {
      QPoly g = QPoly::zero(n);
      if (bj.contains("eq") && !bj["eq"].empty()) g = qpoly_from_json(bj["eq"], n);
      std::vector<QPoly> gt, geq;
      if (bj.contains("gt"))
        for (const auto& pj : bj["gt"]) gt.push_back(qpoly_from_json(pj, n));
      if (bj.contains("geq"))
        for (const auto& pj : bj["geq"]) geq.push_back(qpoly_from_json(pj, n));
      blocks.push_back(BasicBlock::make(n, g, gt, geq));
    }
    out.set = SemialgebraicSet::make(n, blocks);
    return out;
  }
  fail(ErrorCode::ParseError, "input needs a system or a set");
}

inline Json serialize_system(const PolySystem& sys, const std::vector<std::string>& vars) {
  Json doc;
  doc["vars"] = vars;
  Json s;
  s["field"] = sys.field == Field::Real ? "real" : "complex";
  Json polys = Json::array();
  for (const auto& p : sys.polys) polys.push_back(poly_to_json(p));
  s["polys"] = polys;
  doc["system"] = s;
  return doc;
}

inline Json serialize_set(const SemialgebraicSet& set, const std::vector<std::string>& vars) {
  Json doc;
  doc["vars"] = vars;
  Json blocks = Json::array();
  for (const auto& b : set.blocks) {
    Json bj;
    bj["eq"] = b.g.is_zero() ? Json::array() : poly_to_json(b.g);
    Json gt = Json::array(), geq = Json::array();
    for (const auto& f : b.strict) gt.push_back(poly_to_json(f));
    for (const auto& h : b.nonstrict) geq.push_back(poly_to_json(h));
    bj["gt"] = gt;
    bj["geq"] = geq;
    blocks.push_back(std::move(bj));
  }
  Json s;
  s["blocks"] = blocks;
  doc["set"] = s;
  return doc;
}

}  // namespace crag

#endif

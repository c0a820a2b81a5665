#include "problem_file.hpp"

#include <fstream>
#include <sstream>

#include "polycone/errors.hpp"

namespace polycone::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field \"" + key + "\"");
  return *it;
}

const json* optional_field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

Rat rat(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long>());
  fail(where, "expected a rational string like \"-3/4\" or an integer");
}

RatVec vec(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != dim)
    fail(where, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  RatVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rat(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

RatMat vecs(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  RatMat m;
  for (std::size_t i = 0; i < j.size(); ++i) m.push_back(vec(j[i], dim, where + "[" + std::to_string(i) + "]"));
  return m;
}

std::vector<RowInput> rows(const json& block, std::size_t dim, const std::string& where) {
  const json& rs = field(block, "rows", where);
  if (!rs.is_array()) fail(where + ".rows", "expected an array");
  std::vector<RowInput> out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string at = where + ".rows[" + std::to_string(i) + "]";
    out.push_back({vec(field(rs[i], "a", at), dim, at + ".a"), rat(field(rs[i], "b", at), at + ".b")});
  }
  return out;
}

bool boolean(const json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected true or false");
  return j.get<bool>();
}

std::vector<AffinePiece> affine_pieces(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array");
  std::vector<AffinePiece> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    out.push_back({vec(field(j[i], "g", at), dim, at + ".g"), rat(field(j[i], "h", at), at + ".h")});
  }
  return out;
}

ObjectiveModel objective(const json& j, std::size_t dim, const std::string& where) {
  ObjectiveModel m;
  const json& kind = field(j, "kind", where);
  if (kind == "affine_max") {
    m.kind = ObjectiveModel::Kind::AffineMax;
  } else if (kind == "sqrt_abs_affine") {
    m.kind = ObjectiveModel::Kind::SqrtAbsAffine;
  } else {
    fail(where + ".kind", "expected \"affine_max\" or \"sqrt_abs_affine\"");
  }
  m.pieces = affine_pieces(field(j, "pieces", where), dim, where + ".pieces");
  if (m.kind == ObjectiveModel::Kind::SqrtAbsAffine && m.pieces.size() != 1)
    fail(where + ".pieces", "sqrt_abs_affine takes exactly one piece");
  return m;
}

BilevelProblem bilevel(const json& j, const ProblemFile& pf, const std::optional<RatVec>& lower_c) {
  const std::size_t n = pf.inst->dim();
  BilevelProblem bp;
  bp.inst = pf.inst;
  bp.candidate = pf.point;
  if (const json* c = optional_field(j, "c", "bilevel")) {
    bp.c = vec(*c, n, "bilevel.c");
  } else if (lower_c) {
    bp.c = *lower_c;
  } else {
    fail("bilevel", "missing field \"c\" (or top-level \"lower_c\")");
  }
  if (lower_c && *lower_c != bp.c) fail("bilevel.c", "disagrees with top-level \"lower_c\"");

  if (const json* f = optional_field(j, "f", "bilevel")) bp.f = objective(*f, n, "bilevel.f");

  if (const json* s = optional_field(j, "subdiff", "bilevel")) {
    const std::string at = "bilevel.subdiff";
    auto list = [&](const char* key) {
      const json* e = optional_field(*s, key, at);
      return e ? vecs(*e, n, at + "." + key) : RatMat{};
    };
    bp.subdiff.sub.dim = n;
    bp.subdiff.sub.points = list("sub_vertices");
    bp.subdiff.sub.rays = list("sub_rays");
    bp.subdiff.sub.lines = list("sub_lines");
    bp.subdiff.horizon = VCone(n);
    bp.subdiff.horizon.rays = list("sub_inf_rays");
    bp.subdiff.horizon.spans = list("sub_inf_lines");
    bp.subdiff.provenance = Provenance::UserSupplied;
    if (bp.subdiff.sub.points.empty()) fail(at + ".sub_vertices", "need at least one vertex");
  } else if (bp.f && bp.f->kind == ObjectiveModel::Kind::AffineMax) {
    bp.subdiff = affine_max_subdifferential(bp.f->pieces, bp.candidate);
  } else {
    fail("bilevel", "missing field \"subdiff\" (only affine_max objectives can derive it)");
  }

  if (const json* q = optional_field(j, "q2_asserted", "bilevel")) bp.q2_asserted = boolean(*q, "bilevel.q2_asserted");
  if (const json* q = optional_field(j, "q2_justification", "bilevel")) {
    if (!q->is_string()) fail("bilevel.q2_justification", "expected a string");
    bp.q2_justification = q->get<std::string>();
  }
  if (const json* r = optional_field(j, "robust", "bilevel")) bp.robust = boolean(*r, "bilevel.robust");

  if (const json* g = optional_field(j, "grid", "bilevel")) {
    const std::string at = "bilevel.grid";
    if (const json* d = optional_field(*g, "deltas", at)) {
      if (!d->is_array()) fail(at + ".deltas", "expected an array");
      for (std::size_t i = 0; i < d->size(); ++i) {
        Rat v = rat((*d)[i], at + ".deltas[" + std::to_string(i) + "]");
        if (sgn(v) <= 0) fail(at + ".deltas[" + std::to_string(i) + "]", "must be positive");
        bp.grid.deltas.push_back(v);
      }
    }
    if (const json* st = optional_field(*g, "step", at)) {
      Rat v = rat(*st, at + ".step");
      if (sgn(v) <= 0) fail(at + ".step", "must be positive");
      bp.grid.step = v;
    }
    if (const json* p = optional_field(*g, "points", at)) bp.grid.points = vecs(*p, n, at + ".points");
  }
  return bp;
}

}  // namespace

ProblemFile parse_problem(const json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  if (const json* s = optional_field(doc, "schema", "$"); s && *s != "polycone/1")
    fail("schema", "unsupported schema (expected \"polycone/1\")");
  const json& d = field(doc, "dim", "$");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) fail("dim", "expected a positive integer");
  const std::size_t n = d.get<std::size_t>();

  ProblemFile pf;
  try {
    pf.inst = std::make_shared<const ProblemInstance>(
        n, rows(field(doc, "theta", "$"), n, "theta"), rows(field(doc, "c_set", "$"), n, "c_set"));
  } catch (const EmptyPolyhedron& e) {
    fail("theta/c_set", e.what());
  }
  pf.point = vec(field(doc, "point", "$"), n, "point");

  const json* normal = optional_field(doc, "normal", "$");
  const json* lower = optional_field(doc, "lower_c", "$");
  if (normal && lower) fail("$", "give either \"normal\" or \"lower_c\", not both");
  std::optional<RatVec> lower_c;
  if (normal) pf.xstar = vec(*normal, n, "normal");
  if (lower) {
    lower_c = vec(*lower, n, "lower_c");
    pf.xstar = neg(*lower_c);
  }
  if (const json* b = optional_field(doc, "bilevel", "$")) {
    pf.bilevel = bilevel(*b, pf, lower_c);
    if (!pf.xstar) pf.xstar = neg(pf.bilevel->c);
  }
  return pf;
}

ProblemFile parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

RatVec parse_vector_arg(const std::string& text, std::size_t dim, const std::string& what) {
  RatVec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(parse_rat(item));
    } catch (const ParseError& e) {
      throw ParseError(what + "[" + std::to_string(v.size()) + "]: " + e.what());
    }
  }
  if (v.size() != dim)
    throw ParseError(what + ": expected " + std::to_string(dim) + " entries, got " +
                     std::to_string(v.size()));
  return v;
}

}  // namespace polycone::cli

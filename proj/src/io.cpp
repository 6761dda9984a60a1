#include "lcklab/io.hpp"

#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lcklab/error.hpp"

namespace lcklab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string text_of(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Rational rational_of(const json& j, const std::string& where) {
  const std::string s = text_of(j, where);
  const auto q = parse_rational(s);
  if (!q) fail(where, "malformed rational \"" + s + "\" (expected p or p/q with q > 0)");
  return *q;
}

std::size_t index_of(const std::map<std::string, std::size_t>& names, const json& j, const std::string& where) {
  const std::string s = text_of(j, where);
  const auto it = names.find(s);
  if (it == names.end()) fail(where, "unknown basis name '" + s + "'");
  return it->second;
}

json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(col), "invalid JSON");
  }
  if (!doc.is_object()) fail("/", "expected an object");
  if (const auto it = doc.find("schema"); it != doc.end() && *it != kAlgebraSchema)
    fail("/schema", "unsupported schema " + it->dump());

  const std::string name = doc.contains("name") ? text_of(doc["name"], "/name") : "";
  const json& basis_j = field(doc, "basis", "/");
  if (!basis_j.is_array()) fail("/basis", "expected an array");
  std::vector<std::string> basis;
  std::map<std::string, std::size_t> names;
  for (std::size_t i = 0; i < basis_j.size(); ++i) {
    const std::string where = "/basis/" + std::to_string(i);
    basis.push_back(text_of(basis_j[i], where));
    if (basis.back().empty() || !names.emplace(basis.back(), i).second)
      fail(where, "basis names must be distinct and nonempty");
  }
  const std::size_t n = basis.size();
  const json& dim_j = field(doc, "dim", "/");
  if (!dim_j.is_number_unsigned() || dim_j.get<std::size_t>() != n) fail("/dim", "must equal the number of basis names");
  if (n > 64) fail("/dim", "at most 64 basis vectors are supported");

  // (i, j) -> value and whether it was written as (j, i)
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Vector, bool>> table;
  if (doc.contains("brackets")) {
    const json& br = doc["brackets"];
    if (!br.is_array()) fail("/brackets", "expected an array");
    for (std::size_t k = 0; k < br.size(); ++k) {
      const std::string where = "/brackets/" + std::to_string(k);
      std::size_t a = index_of(names, field(br[k], "left", where), where + "/left");
      std::size_t b = index_of(names, field(br[k], "right", where), where + "/right");
      const json& val = field(br[k], "value", where);
      if (!val.is_object()) fail(where + "/value", "expected an object name -> rational");
      Vector v = zero_vector(n);
      for (const auto& [key, c] : val.items()) {
        const auto it = names.find(key);
        if (it == names.end()) fail(where + "/value/" + key, "unknown basis name '" + key + "'");
        v[it->second] = rational_of(c, where + "/value/" + key);
      }
      if (a == b) {
        if (!is_zero(v)) fail(where, "[e, e] must be zero");
        continue;
      }
      const bool flipped = a > b;
      if (flipped) {
        std::swap(a, b);
        v = Rational(-1) * v;
      }
      auto [it, inserted] = table.try_emplace({a, b}, v, flipped);
      if (!inserted) {
        if (it->second.second == flipped) fail(where, "bracket [" + basis[a] + "," + basis[b] + "] given twice");
        if (it->second.first != v)
          fail(where, "[" + basis[a] + "," + basis[b] + "] and its reverse are not negatives of each other");
      }
    }
  }
  StructureConstants sc(basis);
  for (const auto& [ij, val] : table) sc.set_bracket(ij.first, ij.second, val.first);

  AlgebraFile f{name, LieAlgebra(std::move(sc)), {}, {}};

  if (doc.contains("forms")) {
    const json& forms = doc["forms"];
    if (!forms.is_object()) fail("/forms", "expected an object");
    for (const auto& [fname, fj] : forms.items()) {
      const std::string where = "/forms/" + fname;
      const json& deg_j = field(fj, "degree", where);
      if (!deg_j.is_number_unsigned() || deg_j.get<std::size_t>() > n) fail(where + "/degree", "degree must be 0..dim");
      const std::size_t p = deg_j.get<std::size_t>();
      Cochain w(n, p);
      const json& terms = field(fj, "terms", where);
      if (!terms.is_array()) fail(where + "/terms", "expected an array");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = where + "/terms/" + std::to_string(t);
        const json& idx = field(terms[t], "index", tw);
        if (!idx.is_array() || idx.size() != p) fail(tw + "/index", "needs exactly " + std::to_string(p) + " names");
        Monomial m;
        std::set<std::size_t> seen;
        for (std::size_t q = 0; q < idx.size(); ++q) {
          m.push_back(index_of(names, idx[q], tw + "/index/" + std::to_string(q)));
          if (!seen.insert(m.back()).second) fail(tw + "/index", "repeated basis name");
        }
        w.add_term(std::move(m), rational_of(field(terms[t], "coeff", tw), tw + "/coeff"));
      }
      f.forms.emplace(fname, std::move(w));
    }
  }

  if (doc.contains("J")) {
    const json& jj = doc["J"];
    if (!jj.is_array()) fail("/J", "expected an array");
    Matrix J(n, n);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < jj.size(); ++k) {
      const std::string where = "/J/" + std::to_string(k);
      const std::size_t from = index_of(names, field(jj[k], "from", where), where + "/from");
      const std::size_t to = index_of(names, field(jj[k], "to", where), where + "/to");
      if (!seen.insert({from, to}).second) fail(where, "entry given twice");
      J(to, from) = rational_of(field(jj[k], "coeff", where), where + "/coeff");
    }
    f.J = std::move(J);
  }
  return f;
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra_file(ss.str());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw Error(ErrorCode::ParseError, path + ": " + std::string(e.what()).substr(std::strlen("ParseError: ")));
    throw;
  }
}

std::string emit_algebra_file(const AlgebraFile& f) {
  const auto& g = f.algebra;
  const auto& labels = g.labels();
  json doc;
  doc["schema"] = kAlgebraSchema;
  doc["name"] = f.name;
  doc["dim"] = g.dim();
  doc["basis"] = labels;
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto terms = g.bracket_terms(i, j);
      if (terms.empty()) continue;
      json value = json::object();
      for (const auto& t : terms) value[labels[t.index]] = rational_json(t.coeff);
      brackets.push_back({{"left", labels[i]}, {"right", labels[j]}, {"value", value}});
    }
  doc["brackets"] = brackets;
  json forms = json::object();
  for (const auto& [name, w] : f.forms) {
    json terms = json::array();
    for (const auto& [m, c] : w.terms()) {
      json idx = json::array();
      for (auto i : m) idx.push_back(labels[i]);
      terms.push_back({{"index", idx}, {"coeff", rational_json(c)}});
    }
    forms[name] = {{"degree", w.degree()}, {"terms", terms}};
  }
  doc["forms"] = forms;
  if (f.J) {
    json jj = json::array();
    for (std::size_t from = 0; from < g.dim(); ++from)
      for (std::size_t to = 0; to < g.dim(); ++to)
        if ((*f.J)(to, from) != 0)
          jj.push_back({{"from", labels[from]}, {"to", labels[to]}, {"coeff", rational_json((*f.J)(to, from))}});
    doc["J"] = jj;
  }
  return doc.dump(2) + "\n";
}

AlgebraFile to_algebra_file(const CatalogEntry& e) {
  AlgebraFile f{e.key.to_string(), e.algebra, {}, {}};
  if (e.omega) f.forms.emplace("Omega", *e.omega);
  if (e.theta) f.forms.emplace("theta", *e.theta);
  if (e.printed_theta && e.theta && *e.printed_theta != *e.theta) f.forms.emplace("theta_printed", *e.printed_theta);
  if (e.J) f.J = e.J->matrix();
  return f;
}

}  // namespace lcklab

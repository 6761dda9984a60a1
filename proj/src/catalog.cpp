#include "lcklab/catalog.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "lcklab/error.hpp"

namespace lcklab {

namespace {

struct Bracket {
  std::string a, b;
  std::vector<std::pair<std::string, Rational>> value;
};

LieAlgebra make_algebra(std::vector<std::string> labels, const std::vector<Bracket>& brackets) {
  StructureConstants sc(std::move(labels));
  for (const auto& br : brackets) {
    Vector v = zero_vector(sc.dim());
    for (const auto& [name, c] : br.value) v[sc.index_of(name)] += c;
    sc.set_bracket(br.a, br.b, v);
  }
  return LieAlgebra(std::move(sc));
}

struct JImage {
  std::string from;
  std::vector<std::pair<std::string, Rational>> to;
};

ComplexStructure make_j(const LieAlgebra& g, const std::vector<JImage>& images) {
  Matrix j(g.dim(), g.dim());
  for (const auto& im : images)
    for (const auto& [name, c] : im.to) j(g.index_of(name), g.index_of(im.from)) += c;
  return ComplexStructure(std::move(j));
}

Cochain make_form(const LieAlgebra& g, std::size_t degree,
                  const std::vector<std::pair<std::vector<std::string>, Rational>>& terms) {
  Cochain w(g.dim(), degree);
  for (const auto& [names, c] : terms) {
    Monomial m;
    for (const auto& n : names) m.push_back(g.index_of(n));
    w.add_term(std::move(m), c);
  }
  return w;
}

const std::vector<std::string> kXYZW{"X", "Y", "Z", "W"};

LieAlgebra surface_algebra(int k, const Rational& b) {
  const Rational half(1, 2);
  switch (k) {
    case 1:
      return make_algebra(kXYZW, {{"X", "Y", {{"Z", -1}}}});
    case 2:
      // rotation of (X, Y) by W, see the decisions note on the printed [W,Y]
      return make_algebra(kXYZW, {{"X", "Y", {{"Z", -1}}}, {"W", "X", {{"Y", -1}}}, {"W", "Y", {{"X", 1}}}});
    case 3:
      return make_algebra(kXYZW, {{"Y", "Z", {{"X", -1}}}, {"W", "Y", {{"Y", 1}}}, {"W", "Z", {{"Z", -1}}}});
    case 4:
      return make_algebra(kXYZW, {{"W", "X", {{"X", -half}, {"Y", -b}}},
                                  {"W", "Y", {{"X", b}, {"Y", -half}}},
                                  {"W", "Z", {{"Z", 1}}}});
    case 5:
      return make_algebra(kXYZW, {{"X", "Y", {{"Z", -1}}}, {"Z", "X", {{"Y", 1}}}, {"Z", "Y", {{"X", -1}}}});
    case 6:
      return make_algebra(kXYZW, {{"X", "Y", {{"Z", -1}}}, {"Z", "X", {{"Y", -1}}}, {"Z", "Y", {{"X", 1}}}});
    default:
      throw Error(ErrorCode::BadParameters, "surface index must be 1..6");
  }
}

ComplexStructure standard_j(const LieAlgebra& g) {
  return make_j(g, {{"X", {{"Y", 1}}}, {"Y", {{"X", -1}}}, {"Z", {{"W", 1}}}, {"W", {{"Z", -1}}}});
}

Cochain standard_omega(const LieAlgebra& g) { return make_form(g, 2, {{{"X", "Y"}, 1}, {{"Z", "W"}, 1}}); }

Matrix prop4_matrix(const std::string& v, const std::vector<Rational>& p) {
  const Rational z = 0;
  if (v == "3i") return Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  if (v == "3ii") return Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
  if (v == "4") return Matrix{{0, 0, 0}, {0, p[0], 0}, {0, 0, -p[0]}};
  if (v == "5") return Matrix{{0, 0, 0}, {0, 0, -p[0]}, {0, p[0], 0}};
  if (v == "6") return Matrix{{p[0], 0, 0}, {0, p[1], 0}, {0, 0, Rational(-(p[0] + p[1]))}};
  if (v == "7i") return Matrix{{Rational(-2 * p[0]), 0, 0}, {0, p[0], 0}, {0, 0, p[0]}};
  if (v == "7ii") return Matrix{{Rational(-2 * p[0]), 0, 0}, {0, p[0], 1}, {0, 0, p[0]}};
  if (v == "8") return Matrix{{Rational(-2 * p[0]), 0, 0}, {0, p[0], Rational(-p[1])}, {0, p[1], p[0]}};
  throw Error(ErrorCode::BadParameters, "unknown prop4_family variant '" + v + "'");
}

std::size_t prop4_arity(const std::string& v) {
  if (v == "3i" || v == "3ii") return 0;
  if (v == "4" || v == "5" || v == "7i" || v == "7ii") return 1;
  if (v == "6" || v == "8") return 2;
  throw Error(ErrorCode::BadParameters, "unknown prop4_family variant '" + v + "'");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameters, what);
}

void validate(CatalogKey& k) {
  auto nonzero = [&](std::size_t i, const char* name) {
    require(k.params.at(i) != 0, k.to_string() + ": " + name + " must be nonzero");
  };
  switch (k.family) {
    case Family::HeisenbergType:
      require(k.index >= 2 && k.index <= 16, "heisenberg_type(n) needs 2 <= n <= 16");
      require(k.params.empty(), "heisenberg_type takes one integer");
      break;
    case Family::U2JDelta:
      require(k.params.size() == 2, "u2_Jdelta(c,d,sign)");
      nonzero(0, "c");
      break;
    case Family::Surface:
      require(k.index >= 1 && k.index <= 6, "surface index must be 1..6");
      if (k.index == 4) {
        if (k.params.empty()) k.params = {Rational(1)};
        require(k.params.size() == 1, "surface(4,b)");
        nonzero(0, "b");
      } else {
        require(k.params.empty(), "only surface(4) takes a parameter");
      }
      break;
    case Family::Prop3:
      require(k.variant == "rotation" || k.variant == "hyperbolic", "prop3_family(rotation|hyperbolic)");
      require(k.params.empty(), "prop3_family takes no parameters");
      break;
    case Family::Prop4: {
      const std::size_t arity = prop4_arity(k.variant);
      if (k.params.empty()) {
        if (arity == 1) k.params = {Rational(1)};
        if (arity == 2) k.params = k.variant == "6" ? std::vector<Rational>{1, 2} : std::vector<Rational>{1, 1};
      }
      require(k.params.size() == arity, "prop4_family(" + k.variant + ") takes " + std::to_string(arity) + " parameter(s)");
      for (std::size_t i = 0; i < arity; ++i) nonzero(i, i == 0 && k.variant != "5" ? "a" : "b");
      if (k.variant == "6") {
        const Rational &a = k.params[0], &b = k.params[1];
        const Rational c = -(a + b);
        require(a != b && a != c && b != c && c != 0, "prop4_family(6) needs three distinct nonzero eigenvalues");
      }
      break;
    }
    case Family::InoueSPlusJq:
    case Family::HopfJd:
      if (k.params.empty()) k.params = {Rational(1)};
      require(k.params.size() == 1, "one parameter expected");
      nonzero(0, k.family == Family::HopfJd ? "d" : "q");
      break;
  }
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

[[noreturn]] void bad_key(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "catalog key '" + std::string(text) + "': " + why);
}

Rational parse_param(std::string_view text, const std::string& raw) {
  std::string s = raw;
  if (const auto eq = s.find('='); eq != std::string::npos) s = trim(s.substr(eq + 1));
  const auto q = parse_rational(s);
  if (!q) bad_key(text, "'" + raw + "' is not a rational");
  return *q;
}

}  // namespace

CatalogKey CatalogKey::parse(std::string_view text) {
  const std::string t = trim(text);
  const auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') bad_key(text, "expected name(args)");
  const std::string name = trim(t.substr(0, open));
  std::vector<std::string> args;
  {
    std::stringstream ss(t.substr(open + 1, t.size() - open - 2));
    std::string a;
    while (std::getline(ss, a, ',')) args.push_back(trim(a));
    if (args.size() == 1 && args[0].empty()) args.clear();
  }

  auto integer_arg = [&](const std::string& a) {
    const auto q = parse_rational(a);
    if (!q || q->get_den() != 1 || !q->get_num().fits_sint_p()) bad_key(text, "expected an integer");
    return static_cast<int>(q->get_num().get_si());
  };

  CatalogKey k;
  if (name == "heisenberg_type") {
    k.family = Family::HeisenbergType;
    if (args.size() != 1) bad_key(text, "heisenberg_type(n)");
    k.index = integer_arg(args[0]);
  } else if (name == "u2_Jdelta") {
    k.family = Family::U2JDelta;
    if (args.empty()) args = {"1", "0", "+"};
    if (args.size() != 3) bad_key(text, "u2_Jdelta(c,d,sign)");
    k.params = {parse_param(text, args[0]), parse_param(text, args[1])};
    if (args[2] == "+" || args[2] == "+1") k.sign = 1;
    else if (args[2] == "-" || args[2] == "-1") k.sign = -1;
    else bad_key(text, "sign must be + or -");
  } else if (name == "surface") {
    k.family = Family::Surface;
    if (args.empty() || args.size() > 2) bad_key(text, "surface(k)");
    k.index = integer_arg(args[0]);
    if (args.size() == 2) k.params = {parse_param(text, args[1])};
  } else if (name == "prop3_family") {
    k.family = Family::Prop3;
    if (args.size() != 1) bad_key(text, "prop3_family(rotation|hyperbolic)");
    k.variant = args[0];
  } else if (name == "prop4_family") {
    k.family = Family::Prop4;
    if (args.empty()) bad_key(text, "prop4_family(variant, params)");
    k.variant = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) k.params.push_back(parse_param(text, args[i]));
  } else if (name == "inoue_splus_Jq" || name == "hopf_Jd") {
    k.family = name == "hopf_Jd" ? Family::HopfJd : Family::InoueSPlusJq;
    if (args.size() > 1) bad_key(text, "one parameter expected");
    if (!args.empty()) k.params = {parse_param(text, args[0])};
  } else {
    bad_key(text, "unknown family '" + name + "'");
  }
  validate(k);
  return k;
}

std::string CatalogKey::to_string() const {
  std::ostringstream os;
  auto params_tail = [&] {
    for (const auto& p : params) os << "," << lcklab::to_string(p);
  };
  switch (family) {
    case Family::HeisenbergType:
      os << "heisenberg_type(" << index << ")";
      break;
    case Family::U2JDelta:
      os << "u2_Jdelta(" << lcklab::to_string(params.at(0)) << "," << lcklab::to_string(params.at(1)) << ","
         << (sign > 0 ? "+" : "-") << ")";
      break;
    case Family::Surface:
      os << "surface(" << index;
      if (index == 4 && !params.empty() && params[0] != 1) params_tail();
      os << ")";
      break;
    case Family::Prop3:
      os << "prop3_family(" << variant << ")";
      break;
    case Family::Prop4:
      os << "prop4_family(" << variant;
      params_tail();
      os << ")";
      break;
    case Family::InoueSPlusJq:
      os << "inoue_splus_Jq(" << lcklab::to_string(params.at(0)) << ")";
      break;
    case Family::HopfJd:
      os << "hopf_Jd(" << lcklab::to_string(params.at(0)) << ")";
      break;
  }
  return os.str();
}

CatalogEntry build(const CatalogKey& raw) {
  CatalogKey key = raw;
  validate(key);

  auto entry_from = [&](LieAlgebra g) { return CatalogEntry{key, std::move(g), {}, {}, {}, {}}; };
  auto attach_lee = [](CatalogEntry& e) {
    e.theta = lee_form_from_omega(e.algebra, *e.omega);
    if (!e.theta) throw Error(ErrorCode::DecompositionFails, "catalog Ω has no Lee form");
  };

  switch (key.family) {
    case Family::HeisenbergType: {
      const int m = key.index - 1;
      std::vector<std::string> labels{"A", "B"};
      for (int i = 1; i <= m; ++i) labels.push_back("X" + std::to_string(i));
      for (int i = 1; i <= m; ++i) labels.push_back("Y" + std::to_string(i));
      std::vector<Bracket> brackets;
      std::vector<JImage> j{{"A", {{"B", 1}}}, {"B", {{"A", -1}}}};
      std::vector<std::pair<std::vector<std::string>, Rational>> omega{{{"A", "B"}, 1}};
      for (int i = 1; i <= m; ++i) {
        const std::string x = "X" + std::to_string(i), y = "Y" + std::to_string(i);
        brackets.push_back({x, y, {{"B", 1}}});
        j.push_back({x, {{y, 1}}});
        j.push_back({y, {{x, -1}}});
        omega.push_back({{x, y}, 1});
      }
      auto e = entry_from(make_algebra(labels, brackets));
      e.J = make_j(e.algebra, j);
      e.omega = make_form(e.algebra, 2, omega);
      attach_lee(e);
      return e;
    }
    case Family::U2JDelta: {
      const Rational &c = key.params[0], &d = key.params[1];
      auto e = entry_from(make_algebra({"T", "X", "Y", "Z"}, {{"X", "Y", {{"Z", 1}}},
                                                             {"Y", "Z", {{"X", 1}}},
                                                             {"Z", "X", {{"Y", 1}}}}));
      // J(T - dX) = cX and J(cX) = -(T - dX), solved for J(T) and J(X).
      const Rational s = key.sign;
      e.J = make_j(e.algebra, {{"T", {{"T", Rational(-d / c)}, {"X", Rational(c + d * d / c)}}},
                               {"X", {{"T", Rational(-1 / c)}, {"X", Rational(d / c)}}},
                               {"Y", {{"Z", s}}},
                               {"Z", {{"Y", Rational(-s)}}}});
      // h(Y,Y) = ±Ω(Y,Z) and h(X,X) = Ω(T,X)/c must both be positive.
      const Rational mu = Rational(key.sign > 0 ? -1 : 1) / abs(c);
      const int kappa = -sign(mu) * sign(c);
      e.omega = make_form(e.algebra, 2, {{{"T", "X"}, Rational(-kappa * mu)}, {{"Y", "Z"}, Rational(-mu)}});
      attach_lee(e);
      return e;
    }
    case Family::Surface: {
      auto e = entry_from(surface_algebra(key.index, key.index == 4 ? key.params[0] : Rational(1)));
      e.J = standard_j(e.algebra);
      e.omega = standard_omega(e.algebra);
      e.printed_theta = Cochain::dual(4, 3);
      attach_lee(e);
      return e;
    }
    case Family::Prop3: {
      std::vector<Bracket> b{{"Y", "Z", {{"X", -1}}}};
      if (key.variant == "rotation") {
        b.push_back({"W", "Y", {{"Z", -1}}});
        b.push_back({"W", "Z", {{"Y", 1}}});
      } else {
        b.push_back({"W", "Y", {{"Y", 1}}});
        b.push_back({"W", "Z", {{"Z", -1}}});
      }
      return entry_from(make_algebra(kXYZW, b));
    }
    case Family::Prop4: {
      const Matrix a = prop4_matrix(key.variant, key.params);
      const std::vector<std::string> labels{"X1", "X2", "X3", "W"};
      StructureConstants sc(labels);
      for (std::size_t i = 0; i < 3; ++i) {
        Vector v = zero_vector(4);
        for (std::size_t j = 0; j < 3; ++j) v[j] = a(i, j);
        sc.set_bracket(3, i, v);
      }
      return entry_from(LieAlgebra(std::move(sc)));
    }
    case Family::InoueSPlusJq: {
      const Rational& q = key.params[0];
      auto e = entry_from(surface_algebra(3, 1));
      e.J = make_j(e.algebra, {{"X", {{"Y", 1}}},
                               {"Y", {{"X", -1}}},
                               {"Z", {{"W", 1}, {"Y", Rational(-q)}}},
                               {"W", {{"Z", -1}, {"X", Rational(-q)}}}});
      return e;
    }
    case Family::HopfJd: {
      const Rational& d = key.params[0];
      auto e = entry_from(surface_algebra(6, 1));
      // J(W + dZ) = -Z
      e.J = make_j(e.algebra, {{"X", {{"Y", 1}}},
                               {"Y", {{"X", -1}}},
                               {"Z", {{"W", 1}, {"Z", d}}},
                               {"W", {{"Z", Rational(-(1 + d * d))}, {"W", Rational(-d)}}}});
      e.omega = standard_omega(e.algebra);
      e.printed_theta = Cochain::dual(4, 3);
      attach_lee(e);
      return e;
    }
  }
  throw Error(ErrorCode::BadParameters, "unknown catalog family");
}

std::vector<CatalogKey> catalog_keys() {
  std::vector<CatalogKey> keys;
  for (const char* k : {"heisenberg_type(2)", "heisenberg_type(3)", "u2_Jdelta(1,0,+)", "u2_Jdelta(1,0,-)",
                        "surface(1)", "surface(2)", "surface(3)", "surface(4)", "surface(5)", "surface(6)",
                        "prop3_family(rotation)", "prop3_family(hyperbolic)", "prop4_family(3i)",
                        "prop4_family(3ii)", "prop4_family(4)", "prop4_family(5)", "prop4_family(6)",
                        "prop4_family(7i)", "prop4_family(7ii)", "prop4_family(8)", "inoue_splus_Jq(1)",
                        "inoue_splus_Jq(2)", "hopf_Jd(1)"})
    keys.push_back(CatalogKey::parse(k));
  return keys;
}

ExpectedProperties expected_properties(const CatalogKey& raw) {
  CatalogKey key = raw;
  validate(key);
  ExpectedProperties p;
  switch (key.family) {
    case Family::HeisenbergType:
      p.lck = true;
      p.vaisman = true;
      if (key.index == 2) p.label = ClassTag::Prop4_3ii;
      break;
    case Family::U2JDelta:
    case Family::HopfJd:
      p.lck = true;
      p.vaisman = true;
      p.label = ClassTag::ReductiveCompact;
      break;
    case Family::Surface: {
      static const ClassTag labels[] = {ClassTag::Prop4_3ii, ClassTag::Prop3Rotation,  ClassTag::Prop3Hyperbolic,
                                        ClassTag::Prop4_8,   ClassTag::ReductiveSplit, ClassTag::ReductiveCompact};
      p.lck = true;
      p.vaisman = key.index != 3 && key.index != 4;
      p.label = labels[key.index - 1];
      break;
    }
    case Family::Prop3:
      p.label = key.variant == "rotation" ? ClassTag::Prop3Rotation : ClassTag::Prop3Hyperbolic;
      break;
    case Family::Prop4: {
      static const std::pair<const char*, ClassTag> tags[] = {
          {"3i", ClassTag::Prop4_3i}, {"3ii", ClassTag::Prop4_3ii}, {"4", ClassTag::Prop4_4},
          {"5", ClassTag::Prop4_5},   {"6", ClassTag::Prop4_6},     {"7i", ClassTag::Prop4_7i},
          {"7ii", ClassTag::Prop4_7ii}, {"8", ClassTag::Prop4_8}};
      for (const auto& [v, t] : tags)
        if (key.variant == v) p.label = t;
      break;
    }
    case Family::InoueSPlusJq:
      p.lck = false;
      p.label = ClassTag::Prop3Hyperbolic;
      break;
  }
  if (p.label) p.lattice = lattice_verdict(*p.label);
  return p;
}

}  // namespace lcklab

#include "qsyslab/workspace.hpp"

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace qsyslab::cli {

namespace {

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string at(const std::string& ptr, const std::string& key) { return ptr + "/" + escape(key); }
std::string at(const std::string& ptr, std::size_t k) { return ptr + "/" + std::to_string(k); }

const json& need(const json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.is_object()) throw InputError(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(at(ptr, key), "missing key");
  return *it;
}

std::string as_string(const json& v, const std::string& ptr) {
  if (!v.is_string()) throw InputError(ptr, "expected a string");
  return v.get<std::string>();
}

std::size_t as_positive(const json& v, const std::string& ptr) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw InputError(ptr, "expected a positive integer");
  }
  return v.get<std::size_t>();
}

double as_double(const json& v, const std::string& ptr) {
  if (!v.is_number()) throw InputError(ptr, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InputError(ptr, "expected a finite number");
  return d;
}

Complex as_complex(const json& v, const std::string& ptr) {
  if (v.is_number()) return {as_double(v, ptr), 0.0};
  if (v.is_array() && v.size() == 2) return {as_double(v[0], at(ptr, 0)), as_double(v[1], at(ptr, 1))};
  throw InputError(ptr, "expected a number or [re, im]");
}

Vector as_vector(const json& v, const std::string& ptr, std::optional<std::size_t> len = {}) {
  if (!v.is_array()) throw InputError(ptr, "expected an array");
  if (len && v.size() != *len) {
    throw InputError(ptr, "expected " + std::to_string(*len) + " entries, got " + std::to_string(v.size()));
  }
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) out(static_cast<Eigen::Index>(k)) = as_complex(v[k], at(ptr, k));
  return out;
}

Matrix as_matrix(const json& v, const std::string& ptr, std::size_t rows, std::size_t cols) {
  if (!v.is_array() || v.size() != rows) {
    throw InputError(ptr, "expected " + std::to_string(rows) + " rows");
  }
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = as_vector(v[r], at(ptr, r), cols);
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

FiniteGroup group_from_spec(const json& v, const std::string& ptr) {
  if (!v.is_object()) throw InputError(ptr, "expected a group description");
  try {
    if (v.contains("cyclic")) return cyclic_group(as_positive(v["cyclic"], at(ptr, "cyclic")));
    if (v.contains("symmetric")) return symmetric_group(as_positive(v["symmetric"], at(ptr, "symmetric")));
    if (v.contains("table")) {
      const json& t = v["table"];
      const std::string tp = at(ptr, "table");
      if (!t.is_array()) throw InputError(tp, "expected an array of rows");
      FiniteGroup::Table table;
      for (std::size_t r = 0; r < t.size(); ++r) {
        if (!t[r].is_array()) throw InputError(at(tp, r), "expected an array");
        std::vector<std::size_t> row;
        for (std::size_t c = 0; c < t[r].size(); ++c) {
          const json& e = t[r][c];
          if (!e.is_number_integer() || e.get<long long>() < 0) {
            throw InputError(at(at(tp, r), c), "expected a nonnegative integer");
          }
          row.push_back(e.get<std::size_t>());
        }
        table.push_back(std::move(row));
      }
      return FiniteGroup::from_table(std::move(table));
    }
  } catch (const NotAGroup& e) {
    throw InputError(ptr, e.what());
  }
  throw InputError(ptr, "expected one of cyclic, symmetric, table");
}

}  // namespace

std::string CheckResult::outcome() const {
  if (passed && expect) return "pass";
  if (!passed && !expect) return "expected-fail";
  if (passed) return "unexpected-pass";
  return "fail";
}

// ---------------------------------------------------------------------------
// Loading

Workspace Workspace::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("", std::string("invalid JSON: ") + e.what());
  }
  return from_json(doc);
}

Workspace Workspace::from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("", "workspace must be a JSON object");
  static const std::set<std::string> known = {"spaces",    "morphisms",         "algebras",
                                              "quantum_groups", "qsystems", "corepresentations",
                                              "bimodules", "qbielements",       "equations",
                                              "checks",    "description"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw InputError(at("", key), "unknown section");
  }
  Workspace ws;
  ws.load_spaces(doc);
  ws.load_builtins(doc);
  ws.load_morphisms(doc);
  ws.load_algebras(doc);
  ws.load_quantum_groups(doc);
  ws.load_qsystems(doc);
  ws.load_corepresentations(doc);
  ws.load_bimodules(doc);
  ws.load_qbielements(doc);
  ws.load_equations(doc);
  ws.load_checks(doc);
  return ws;
}

namespace {

const json& section(const json& doc, const char* name) {
  static const json empty = json::object();
  auto it = doc.find(name);
  if (it == doc.end()) return empty;
  if (!it->is_object()) throw InputError(at("", name), "expected an object");
  return *it;
}

}  // namespace

void Workspace::claim(const std::string& name, const std::string& ptr) {
  if (object_names_.count(name)) {
    throw InputError(ptr, "duplicate name '" + name + "' (already a " + object_names_[name] + ")");
  }
  object_names_[name] = ptr;
}

void Workspace::add_space(const std::string& name, std::size_t dim, const std::string& ptr) {
  if (spaces_.count(name)) throw InputError(ptr, "duplicate space '" + name + "'");
  Space s(name, dim);
  spaces_.emplace(name, s);
  env_.add_space(name, s);
}

void Workspace::add_morphism(const std::string& name, LinearMap map, const std::string& ptr) {
  if (morphisms_.count(name)) throw InputError(ptr, "duplicate morphism '" + name + "'");
  env_.add_generator(name, map);
  morphisms_.emplace(name, std::move(map));
}

const Space& Workspace::space_ref(const json& v, const std::string& ptr) const {
  const std::string name = as_string(v, ptr);
  auto it = spaces_.find(name);
  if (it == spaces_.end()) throw InputError(ptr, "unknown space '" + name + "'");
  return it->second;
}

Word Workspace::word_ref(const json& v, const std::string& ptr) const {
  if (v.is_string()) return Word(space_ref(v, ptr));
  if (!v.is_array()) throw InputError(ptr, "expected a space name or an array of them");
  std::vector<Space> factors;
  for (std::size_t k = 0; k < v.size(); ++k) factors.push_back(space_ref(v[k], at(ptr, k)));
  return Word(std::move(factors));
}

const LinearMap& Workspace::morphism_ref(const json& v, const std::string& ptr) const {
  const std::string name = as_string(v, ptr);
  auto it = morphisms_.find(name);
  if (it == morphisms_.end()) throw InputError(ptr, "unknown morphism '" + name + "'");
  return it->second;
}

const FiniteQuantumGroup& Workspace::group_ref(const json& v, const std::string& ptr) const {
  const std::string name = as_string(v, ptr);
  auto it = groups_.find(name);
  if (it == groups_.end()) throw InputError(ptr, "unknown quantum group '" + name + "'");
  return it->second;
}

const QSystem& Workspace::qsystem_ref(const json& v, const std::string& ptr) const {
  const std::string name = as_string(v, ptr);
  auto it = qsystems_.find(name);
  if (it == qsystems_.end()) throw InputError(ptr, "unknown Q-system '" + name + "'");
  return it->second;
}

void Workspace::load_spaces(const json& doc) {
  for (const auto& [name, dim] : section(doc, "spaces").items()) {
    const std::string ptr = at("/spaces", name);
    add_space(name, as_positive(dim, ptr), ptr);
  }
}

// Builtin quantum groups and Q-systems bring their own spaces and maps, which
// explicit morphisms may refer to.
void Workspace::load_builtins(const json& doc) {
  for (const auto& [name, spec] : section(doc, "quantum_groups").items()) {
    const std::string ptr = at("/quantum_groups", name);
    if (!spec.is_object()) throw InputError(ptr, "expected an object");
    if (!spec.contains("builtin")) continue;
    claim(name, ptr);
    const std::string kind = as_string(spec["builtin"], at(ptr, "builtin"));
    const FiniteGroup g = group_from_spec(need(spec, "group", ptr), at(ptr, "group"));
    FiniteQuantumGroup qg = [&] {
      if (kind == "function_algebra_of_group") return function_algebra_of_group(g, name);
      if (kind == "group_algebra") return group_algebra_qg(g, name);
      throw InputError(at(ptr, "builtin"), "unknown builtin '" + kind + "'");
    }();
    if (kind == "function_algebra_of_group") finite_groups_.emplace(name, g);
    add_space(name, qg.algebra.dim(), ptr);
    add_morphism("Delta_" + name, qg.comult, ptr);
    add_morphism("mult_" + name, qg.algebra.mult, ptr);
    algebras_.emplace(name, qg.algebra);
    groups_.emplace(name, std::move(qg));
  }
  for (const auto& [name, spec] : section(doc, "qsystems").items()) {
    const std::string ptr = at("/qsystems", name);
    if (!spec.is_object()) throw InputError(ptr, "expected an object");
    if (!spec.contains("builtin")) continue;
    claim(name, ptr);
    const std::string kind = as_string(spec["builtin"], at(ptr, "builtin"));
    QSystem q = [&] {
      if (kind == "function_algebra") return function_algebra(as_positive(need(spec, "n", ptr), at(ptr, "n")), name);
      if (kind == "matrix_algebra") return matrix_algebra(as_positive(need(spec, "n", ptr), at(ptr, "n")), name);
      if (kind == "group_algebra") return group_algebra(group_from_spec(need(spec, "group", ptr), at(ptr, "group")), name);
      throw InputError(at(ptr, "builtin"), "unknown builtin '" + kind + "'");
    }();
    add_space(name, q.space.dim(), ptr);
    add_morphism("m_" + name, q.mult, ptr);
    add_morphism("i_" + name, q.unit, ptr);
    qsystems_.emplace(name, std::move(q));
  }
}

void Workspace::load_morphisms(const json& doc) {
  for (const auto& [name, spec] : section(doc, "morphisms").items()) {
    const std::string ptr = at("/morphisms", name);
    const Word dom = word_ref(need(spec, "dom", ptr), at(ptr, "dom"));
    const Word cod = word_ref(need(spec, "cod", ptr), at(ptr, "cod"));
    Matrix m = as_matrix(need(spec, "matrix", ptr), at(ptr, "matrix"), cod.dim(), dom.dim());
    add_morphism(name, LinearMap(dom, cod, std::move(m)), ptr);
  }
}

void Workspace::load_algebras(const json& doc) {
  for (const auto& [name, spec] : section(doc, "algebras").items()) {
    const std::string ptr = at("/algebras", name);
    claim(name, ptr);
    const Space& s = space_ref(need(spec, "space", ptr), at(ptr, "space"));
    const std::size_t n = s.dim();
    const std::string cp = at(ptr, "structure_constants");
    const json& c = need(spec, "structure_constants", ptr);
    if (!c.is_array() || c.size() != n) throw InputError(cp, "expected " + std::to_string(n) + " slices");
    StructureConstants sc;
    for (std::size_t j = 0; j < n; ++j) {
      if (!c[j].is_array() || c[j].size() != n) throw InputError(at(cp, j), "expected " + std::to_string(n) + " rows");
      std::vector<std::vector<Complex>> slice;
      for (std::size_t k = 0; k < n; ++k) {
        const Vector row = as_vector(c[j][k], at(at(cp, j), k), n);
        slice.emplace_back(row.data(), row.data() + row.size());
      }
      sc.push_back(std::move(slice));
    }
    const Vector unit = as_vector(need(spec, "unit", ptr), at(ptr, "unit"), n);
    const Matrix inv = as_matrix(need(spec, "involution", ptr), at(ptr, "involution"), n, n);
    algebras_.emplace(name, make_star_algebra(s, sc, unit, inv));
  }
}

void Workspace::load_quantum_groups(const json& doc) {
  for (const auto& [name, spec] : section(doc, "quantum_groups").items()) {
    if (spec.contains("builtin")) continue;
    const std::string ptr = at("/quantum_groups", name);
    claim(name, ptr);
    const std::string alg = as_string(need(spec, "algebra", ptr), at(ptr, "algebra"));
    auto it = algebras_.find(alg);
    if (it == algebras_.end()) throw InputError(at(ptr, "algebra"), "unknown algebra '" + alg + "'");
    const LinearMap& d = morphism_ref(need(spec, "comult", ptr), at(ptr, "comult"));
    const Space& s = it->second.space;
    if (!(d.domain() == Word(s)) || !(d.codomain() == Word{s, s})) {
      throw InputError(at(ptr, "comult"), "comultiplication must be " + Word(s).to_string() + " -> " +
                                              Word{s, s}.to_string());
    }
    groups_.emplace(name, FiniteQuantumGroup{it->second, d, false});
  }
}

void Workspace::load_qsystems(const json& doc) {
  for (const auto& [name, spec] : section(doc, "qsystems").items()) {
    if (spec.contains("builtin")) continue;
    const std::string ptr = at("/qsystems", name);
    claim(name, ptr);
    const Space& s = space_ref(need(spec, "space", ptr), at(ptr, "space"));
    const LinearMap& m = morphism_ref(need(spec, "mult", ptr), at(ptr, "mult"));
    const LinearMap& i = morphism_ref(need(spec, "unit", ptr), at(ptr, "unit"));
    if (!(m.domain() == Word{s, s}) || !(m.codomain() == Word(s))) {
      throw InputError(at(ptr, "mult"), "multiplication must be [" + s.name() + "," + s.name() + "] -> [" + s.name() + "]");
    }
    if (!i.domain().empty() || !(i.codomain() == Word(s))) {
      throw InputError(at(ptr, "unit"), "unit must be [] -> [" + s.name() + "]");
    }
    qsystems_.emplace(name, QSystem{s, m, i, false});
  }
}

void Workspace::load_corepresentations(const json& doc) {
  for (const auto& [name, spec] : section(doc, "corepresentations").items()) {
    const std::string ptr = at("/corepresentations", name);
    claim(name, ptr);
    const std::string gname = as_string(need(spec, "group", ptr), at(ptr, "group"));
    const FiniteQuantumGroup& g = group_ref(spec["group"], at(ptr, "group"));
    const Space& s = space_ref(need(spec, "space", ptr), at(ptr, "space"));
    const std::size_t d = s.dim();
    Corepresentation u{g, s, {}};
    if (spec.contains("entries")) {
      const json& e = spec["entries"];
      const std::string ep = at(ptr, "entries");
      if (!e.is_array() || e.size() != d) throw InputError(ep, "expected " + std::to_string(d) + " rows");
      for (std::size_t j = 0; j < d; ++j) {
        if (!e[j].is_array() || e[j].size() != d) throw InputError(at(ep, j), "expected " + std::to_string(d) + " entries");
        for (std::size_t k = 0; k < d; ++k) u.entries.push_back(as_vector(e[j][k], at(at(ep, j), k), g.algebra.dim()));
      }
    } else {
      const std::string rp = at(ptr, "representation");
      const json& r = need(spec, "representation", ptr);
      auto fg = finite_groups_.find(gname);
      if (fg == finite_groups_.end()) {
        throw InputError(at(ptr, "group"), "representations need a builtin function_algebra_of_group");
      }
      const FiniteGroup& grp = fg->second;
      Representation pi;
      if (r.is_object() && r.contains("cyclic_character")) {
        const json& kc = r["cyclic_character"];
        if (!kc.is_number_integer() || kc.get<long long>() < 0) {
          throw InputError(at(rp, "cyclic_character"), "expected a nonnegative integer");
        }
        pi = cyclic_character(grp.order(), kc.get<std::size_t>());
        if (!(grp == cyclic_group(grp.order()))) throw InputError(rp, "cyclic_character needs a cyclic group");
      } else if (r == "regular") {
        pi = regular_representation(grp);
      } else if (r == "permutation" || r == "sign") {
        std::size_t n = 1;
        while (n < 10 && !(symmetric_group(n) == grp)) ++n;
        if (n == 10) throw InputError(rp, "needs a symmetric group");
        pi = r == "sign" ? sign_representation(n) : permutation_representation(n);
      } else if (r.is_object() && r.contains("matrices")) {
        const json& ms = r["matrices"];
        const std::string mp = at(rp, "matrices");
        if (!ms.is_array() || ms.size() != grp.order()) throw InputError(mp, "expected one matrix per group element");
        for (std::size_t k = 0; k < ms.size(); ++k) pi.push_back(as_matrix(ms[k], at(mp, k), d, d));
      } else {
        throw InputError(rp, "expected regular, permutation, sign, {cyclic_character: k} or {matrices: [...]}");
      }
      if (pi.empty() || static_cast<std::size_t>(pi.front().rows()) != d) {
        throw InputError(at(ptr, "space"), "representation dimension does not match the space");
      }
      u = corep_from_group_representation(g, pi, s.name());
      u.space = s;
    }
    coreps_.emplace(name, std::move(u));
  }
}

void Workspace::load_bimodules(const json& doc) {
  for (const auto& [name, spec] : section(doc, "bimodules").items()) {
    const std::string ptr = at("/bimodules", name);
    claim(name, ptr);
    const std::string type = as_string(need(spec, "type", ptr), at(ptr, "type"));
    if (type == "qsys") {
      if (spec.contains("self")) {
        qsys_bimodules_.emplace(name, self_bimodule(qsystem_ref(spec["self"], at(ptr, "self"))));
        continue;
      }
      const QSystem& q = qsystem_ref(need(spec, "left", ptr), at(ptr, "left"));
      const QSystem& p = qsystem_ref(need(spec, "right", ptr), at(ptr, "right"));
      const Space& x = space_ref(need(spec, "space", ptr), at(ptr, "space"));
      const LinearMap& l = morphism_ref(need(spec, "lambda", ptr), at(ptr, "lambda"));
      const LinearMap& r = morphism_ref(need(spec, "rho", ptr), at(ptr, "rho"));
      if (!(l.domain() == Word{q.space, x}) || !(l.codomain() == Word(x))) {
        throw InputError(at(ptr, "lambda"), "left action has the wrong signature");
      }
      if (!(r.domain() == Word{x, p.space}) || !(r.codomain() == Word(x))) {
        throw InputError(at(ptr, "rho"), "right action has the wrong signature");
      }
      qsys_bimodules_.emplace(name, QSysBimodule{q, p, x, l, r, false});
    } else if (type == "unitary") {
      const FiniteQuantumGroup& g = group_ref(need(spec, "left_group", ptr), at(ptr, "left_group"));
      const FiniteQuantumGroup& h = group_ref(need(spec, "right_group", ptr), at(ptr, "right_group"));
      const Word v = word_ref(need(spec, "space", ptr), at(ptr, "space"));
      auto coaction = [&](const char* key, const FiniteQuantumGroup& grp, Side side) -> LinearMap {
        const std::string cp = at(ptr, key);
        const json& c = need(spec, key, ptr);
        if (c == "trivial") return trivial_coaction(v, grp, side);
        if (c.is_object()) {
          const std::string cname = as_string(need(c, "corep", cp), at(cp, "corep"));
          auto it = coreps_.find(cname);
          if (it == coreps_.end()) throw InputError(at(cp, "corep"), "unknown corepresentation '" + cname + "'");
          if (!(Word(it->second.space) == v)) throw InputError(at(cp, "corep"), "corepresentation lives on another space");
          if (!same_group(it->second.group, grp)) throw InputError(at(cp, "corep"), "corepresentation of another quantum group");
          try {
            return side == Side::left ? corep_to_left_module(it->second) : corep_to_module(it->second);
          } catch (const VerificationFailed& e) {
            throw InputError(at(cp, "corep"), e.what());
          }
        }
        const LinearMap& f = morphism_ref(c, cp);
        const Word gw(grp.algebra.space);
        const Word want = side == Side::left ? concat(gw, v) : concat(v, gw);
        if (!(f.domain() == v) || !(f.codomain() == want)) {
          throw InputError(cp, "coaction must be " + v.to_string() + " -> " + want.to_string());
        }
        return f;
      };
      UnitaryBimodule b{g, h, v, coaction("left_coaction", g, Side::left),
                        coaction("right_coaction", h, Side::right), false};
      unitary_bimodules_.emplace(name, std::move(b));
    } else {
      throw InputError(at(ptr, "type"), "expected qsys or unitary");
    }
  }
}

void Workspace::load_qbielements(const json& doc) {
  for (const auto& [name, spec] : section(doc, "qbielements").items()) {
    const std::string ptr = at("/qbielements", name);
    claim(name, ptr);
    if (spec.contains("from_qsystem")) {
      const QSystem& a = qsystem_ref(spec["from_qsystem"], at(ptr, "from_qsystem"));
      qbes_.emplace(name, QuantumBiElement{a, a, a.space, adjoint(a.mult), adjoint(a.mult), false});
    } else if (spec.contains("from_bimodule")) {
      const std::string bp = at(ptr, "from_bimodule");
      const std::string b = as_string(spec["from_bimodule"], bp);
      auto it = qsys_bimodules_.find(b);
      if (it == qsys_bimodules_.end()) throw InputError(bp, "unknown Q-system bimodule '" + b + "'");
      const QSysBimodule& m = it->second;
      qbes_.emplace(name, QuantumBiElement{m.left, m.right, m.space, adjoint(m.lambda), adjoint(m.rho), false});
    } else {
      const QSystem& a = qsystem_ref(need(spec, "left", ptr), at(ptr, "left"));
      const QSystem& b = qsystem_ref(need(spec, "right", ptr), at(ptr, "right"));
      const Space& h = space_ref(need(spec, "space", ptr), at(ptr, "space"));
      const LinearMap& q1 = morphism_ref(need(spec, "q1", ptr), at(ptr, "q1"));
      const LinearMap& q2 = morphism_ref(need(spec, "q2", ptr), at(ptr, "q2"));
      if (!(q1.domain() == Word(h)) || !(q1.codomain() == Word{a.space, h})) {
        throw InputError(at(ptr, "q1"), "Q1 must be [H] -> [A,H]");
      }
      if (!(q2.domain() == Word(h)) || !(q2.codomain() == Word{h, b.space})) {
        throw InputError(at(ptr, "q2"), "Q2 must be [H] -> [H,B]");
      }
      qbes_.emplace(name, QuantumBiElement{a, b, h, q1, q2, false});
    }
  }
}

void Workspace::load_equations(const json& doc) {
  for (const auto& [name, spec] : section(doc, "equations").items()) {
    const std::string ptr = at("/equations", name);
    std::string lhs, rhs;
    try {
      if (spec.is_string()) {
        diagram::EquationText eq = diagram::parse_equation(spec.get<std::string>());
        lhs = diagram::print(*eq.lhs);
        rhs = diagram::print(*eq.rhs);
      } else {
        lhs = as_string(need(spec, "lhs", ptr), at(ptr, "lhs"));
        rhs = as_string(need(spec, "rhs", ptr), at(ptr, "rhs"));
      }
      diagram::EquationText eq{diagram::parse(lhs), diagram::parse(rhs)};
      const auto a = diagram::typecheck(*eq.lhs, env_);
      const auto b = diagram::typecheck(*eq.rhs, env_);
      if (!(a.domain == b.domain) || !(a.codomain == b.codomain)) {
        throw diagram::SignatureMismatch("sides differ: " + a.domain.to_string() + " -> " + a.codomain.to_string() +
                                         " vs " + b.domain.to_string() + " -> " + b.codomain.to_string());
      }
      equations_.emplace(name, std::move(eq));
      equation_text_.emplace(name, std::pair{lhs, rhs});
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      throw InputError(ptr, e.what());
    }
  }
}

// ---------------------------------------------------------------------------
// Checks

namespace {

enum class Ref { qsystem, qsys_bimodule, unitary_bimodule, morphism, algebra, group, corep, qbe, equation, space };

struct Param {
  const char* key;
  Ref ref;
  bool optional = false;
};

const std::map<std::string, std::vector<Param>>& check_kinds() {
  static const std::map<std::string, std::vector<Param>> kinds = {
      {"verify_qsystem", {{"qsystem", Ref::qsystem}}},
      {"ev_coev", {{"qsystem", Ref::qsystem}}},
      {"unitarily_separable", {{"qsystem", Ref::qsystem, true}, {"morphism", Ref::morphism, true}}},
      {"split_obstruction", {{"qsystem", Ref::qsystem}}},
      {"verify_qsys_bimodule", {{"bimodule", Ref::qsys_bimodule}}},
      {"verify_qsys_intertwiner",
       {{"morphism", Ref::morphism}, {"source", Ref::qsys_bimodule}, {"target", Ref::qsys_bimodule}}},
      {"verify_star_algebra", {{"algebra", Ref::algebra}}},
      {"verify_cqg", {{"quantum_group", Ref::group}}},
      {"verify_corep", {{"corep", Ref::corep}}},
      {"corep_module_roundtrip", {{"corep", Ref::corep}}},
      {"verify_bimodule", {{"bimodule", Ref::unitary_bimodule}}},
      {"verify_intertwiner",
       {{"morphism", Ref::morphism}, {"source", Ref::unitary_bimodule}, {"target", Ref::unitary_bimodule}}},
      {"split_idempotent", {{"bimodule", Ref::unitary_bimodule}, {"projection", Ref::morphism}}},
      {"verify_qsystem_in_G", {{"qsystem", Ref::qsystem}, {"bimodule", Ref::unitary_bimodule}}},
      {"verify_qbe", {{"qbe", Ref::qbe}}},
      {"frobenius_identities", {{"qbe", Ref::qbe}}},
      {"isometries", {{"qbe", Ref::qbe}}},
      {"exchange_identity", {{"qbe", Ref::qbe}}},
      {"qbe_to_quantum_function", {{"qbe", Ref::qbe}}},
      {"verify_quantum_function",
       {{"source", Ref::qsystem}, {"target", Ref::qsystem}, {"space", Ref::space}, {"morphism", Ref::morphism}}},
      {"verify_qbe_intertwiner", {{"morphism", Ref::morphism}, {"source", Ref::qbe}, {"target", Ref::qbe}}},
      {"bimodule_to_qbe", {{"bimodule", Ref::qsys_bimodule}}},
      {"equation", {{"equation", Ref::equation}}},
  };
  return kinds;
}

}  // namespace

void Workspace::load_checks(const json& doc) {
  auto it = doc.find("checks");
  if (it == doc.end()) return;
  if (!it->is_array()) throw InputError("/checks", "expected an array");
  std::set<std::string> names;
  for (std::size_t k = 0; k < it->size(); ++k) {
    const json& c = (*it)[k];
    const std::string ptr = at("/checks", k);
    CheckSpec spec;
    spec.pointer = ptr;
    spec.kind = as_string(need(c, "kind", ptr), at(ptr, "kind"));
    spec.name = c.contains("name") ? as_string(c["name"], at(ptr, "name")) : spec.kind + "#" + std::to_string(k);
    if (!names.insert(spec.name).second) throw InputError(at(ptr, "name"), "duplicate check name '" + spec.name + "'");
    spec.params = c.contains("params") ? c["params"] : json::object();
    if (!spec.params.is_object()) throw InputError(at(ptr, "params"), "expected an object");
    if (c.contains("tol")) {
      const double t = as_double(c["tol"], at(ptr, "tol"));
      if (t < 0) throw InputError(at(ptr, "tol"), "tolerance must be nonnegative");
      spec.tol = t;
    }
    if (c.contains("expect")) {
      if (!c["expect"].is_boolean()) throw InputError(at(ptr, "expect"), "expected a boolean");
      spec.expect = c["expect"].get<bool>();
    }
    validate_check(spec);
    checks_.push_back(std::move(spec));
  }
}

void Workspace::validate_check(const CheckSpec& spec) const {
  const auto& kinds = check_kinds();
  auto kit = kinds.find(spec.kind);
  if (kit == kinds.end()) throw InputError(at(spec.pointer, "kind"), "unknown check kind '" + spec.kind + "'");
  const std::string pp = at(spec.pointer, "params");
  bool any = false;
  for (const Param& p : kit->second) {
    if (!spec.params.contains(p.key)) {
      if (p.optional) continue;
      throw InputError(at(pp, p.key), "missing parameter");
    }
    any = true;
    const std::string ptr = at(pp, p.key);
    const std::string name = as_string(spec.params[p.key], ptr);
    bool found = false;
    switch (p.ref) {
      case Ref::qsystem: found = qsystems_.count(name); break;
      case Ref::qsys_bimodule: found = qsys_bimodules_.count(name); break;
      case Ref::unitary_bimodule: found = unitary_bimodules_.count(name); break;
      case Ref::morphism: found = morphisms_.count(name); break;
      case Ref::algebra: found = algebras_.count(name); break;
      case Ref::group: found = groups_.count(name); break;
      case Ref::corep: found = coreps_.count(name); break;
      case Ref::qbe: found = qbes_.count(name); break;
      case Ref::equation: found = equations_.count(name); break;
      case Ref::space: found = spaces_.count(name); break;
    }
    if (!found) throw InputError(ptr, "unknown name '" + name + "'");
  }
  if (!any) throw InputError(pp, "no parameters given");
  if (spec.params.contains("expect_square") && !spec.params["expect_square"].is_boolean()) {
    throw InputError(at(pp, "expect_square"), "expected a boolean");
  }
  if (spec.params.contains("unital") && !spec.params["unital"].is_boolean()) {
    throw InputError(at(pp, "unital"), "expected a boolean");
  }
  if (spec.params.contains("side") && spec.params["side"] != "left" && spec.params["side"] != "right") {
    throw InputError(at(pp, "side"), "expected left or right");
  }
}

namespace {

void absorb(CheckResult& r, const VerificationReport& rep, const std::string& prefix = {}) {
  for (auto e : rep.entries()) {
    e.axiom = prefix + e.axiom;
    if (!e.passed && e.required) r.messages.push_back(e.axiom + " fails");
    r.residuals.push_back(std::move(e));
  }
}

json transcription(const std::vector<AxiomEquation>& axioms) {
  json out = json::array();
  for (const auto& a : axioms) out.push_back({{"id", a.id}, {"lhs", a.lhs}, {"rhs", a.rhs}});
  return out;
}

}  // namespace

std::vector<CheckResult> Workspace::run(Tolerance base) const {
  std::vector<CheckResult> out;
  for (const auto& spec : checks_) out.push_back(run_check(spec, spec.tol ? Tolerance(*spec.tol) : base));
  return out;
}

CheckResult Workspace::run_check(const CheckSpec& spec, Tolerance tol) const {
  CheckResult r;
  r.name = spec.name;
  r.kind = spec.kind;
  r.expect = spec.expect;
  r.tolerance = tol.eps;
  const json& p = spec.params;
  auto str = [&](const char* key) { return p[key].get<std::string>(); };
  auto finish = [&](const VerificationReport& rep) {
    absorb(r, rep);
    r.passed = rep.passed();
  };
  try {
    const std::string& k = spec.kind;
    if (k == "verify_qsystem") {
      finish(verify_qsystem(qsystems_.at(str("qsystem")), tol));
    } else if (k == "ev_coev") {
      const Duality d = ev_coev(qsystems_.at(str("qsystem")), tol);
      finish(d.zigzag);
      r.data["ev_ev_star"] = compose(d.ev, adjoint(d.ev)).matrix()(0, 0).real();
    } else if (k == "unitarily_separable") {
      const LinearMap ev = p.contains("morphism") ? morphisms_.at(str("morphism"))
                                                  : ev_coev(qsystems_.at(str("qsystem")), tol).ev;
      const bool sep = is_unitarily_separable(ev, tol);
      VerificationReport rep(tol);
      rep.add("ev_ev_star", max_abs_diff(compose(ev, adjoint(ev)), identity(Word{})));
      finish(rep);
      r.data["unitarily_separable"] = sep;
    } else if (k == "split_obstruction") {
      const SplitObstruction o = split_dimension_obstruction(qsystems_.at(str("qsystem")));
      r.data["dim"] = o.dim;
      r.data["is_perfect_square"] = o.is_perfect_square;
      r.passed = !p.contains("expect_square") || p["expect_square"].get<bool>() == o.is_perfect_square;
      if (!r.passed) r.messages.push_back("perfect-square status differs from expect_square");
    } else if (k == "verify_qsys_bimodule") {
      finish(verify_qsys_bimodule(qsys_bimodules_.at(str("bimodule")), tol));
    } else if (k == "verify_qsys_intertwiner") {
      finish(verify_qsys_intertwiner(morphisms_.at(str("morphism")), qsys_bimodules_.at(str("source")),
                                     qsys_bimodules_.at(str("target")), tol));
    } else if (k == "verify_star_algebra") {
      finish(verify_star_algebra(algebras_.at(str("algebra")), tol));
    } else if (k == "verify_cqg") {
      const FiniteQuantumGroup& g = groups_.at(str("quantum_group"));
      VerificationReport rep(tol);
      rep.merge(verify_star_algebra(g.algebra, tol), "algebra.");
      rep.merge(verify_cqg(g, tol));
      finish(rep);
    } else if (k == "verify_corep") {
      finish(verify_corep(coreps_.at(str("corep")), tol));
    } else if (k == "corep_module_roundtrip") {
      const Corepresentation& u = coreps_.at(str("corep"));
      const bool left = p.contains("side") && p["side"] == "left";
      const Corepresentation back = left ? left_module_to_corep(corep_to_left_module(u, tol), u.group, tol)
                                         : module_to_corep(corep_to_module(u, tol), u.group, tol);
      double d = 0.0;
      for (std::size_t e = 0; e < u.entries.size(); ++e) {
        d = std::max(d, (u.entries[e] - back.entries[e]).cwiseAbs().maxCoeff());
      }
      VerificationReport rep(tol);
      rep.add("roundtrip", d);
      finish(rep);
    } else if (k == "verify_bimodule") {
      finish(verify_bimodule(unitary_bimodules_.at(str("bimodule")), tol));
    } else if (k == "verify_intertwiner") {
      finish(verify_intertwiner(morphisms_.at(str("morphism")), unitary_bimodules_.at(str("source")),
                                unitary_bimodules_.at(str("target")), tol));
    } else if (k == "split_idempotent") {
      const LinearMap& proj = morphisms_.at(str("projection"));
      const BimoduleSplit s = split_idempotent(proj, unitary_bimodules_.at(str("bimodule")), tol);
      VerificationReport rep(tol);
      rep.merge(verify_bimodule(s.bimodule, tol), "bimodule.");
      rep.merge(verify_intertwiner(s.iso, s.bimodule, unitary_bimodules_.at(str("bimodule")), tol), "iso.");
      rep.add("iso_iso_star", max_abs_diff(compose(s.iso, adjoint(s.iso)), proj));
      rep.add("iso_star_iso", isometry_residual(s.iso));
      finish(rep);
      r.data["rank"] = s.iso.domain().dim();
    } else if (k == "verify_qsystem_in_G") {
      finish(verify_qsystem_in_G(qsystems_.at(str("qsystem")), unitary_bimodules_.at(str("bimodule")), tol));
    } else if (k == "verify_qbe") {
      finish(verify_qbe(qbes_.at(str("qbe")), tol));
      r.data["transcription"] = transcription(qbe_axioms());
    } else if (k == "frobenius_identities") {
      finish(check_frobenius_identities(qbes_.at(str("qbe")), tol));
    } else if (k == "isometries") {
      finish(check_isometries(qbes_.at(str("qbe")), tol));
    } else if (k == "exchange_identity") {
      const diagram::EquationReport e = check_exchange_identity(qbes_.at(str("qbe")), tol);
      VerificationReport rep(tol);
      rep.add("exchange", e.residual);
      finish(rep);
    } else if (k == "qbe_to_quantum_function") {
      const QuantumFunction f = qbe_to_quantum_function(qbes_.at(str("qbe")), tol);
      const VerificationReport rep = verify_quantum_function(f, tol);
      finish(rep);
      r.data["unital"] = false;
      r.data["QF2_holds"] = rep.at("QF2").passed;
    } else if (k == "verify_quantum_function") {
      const bool unital = p.contains("unital") && p["unital"].get<bool>();
      QuantumFunction f{qsystems_.at(str("source")), qsystems_.at(str("target")), spaces_.at(str("space")),
                        morphisms_.at(str("morphism")), unital, false};
      finish(verify_quantum_function(f, tol));
      r.data["transcription"] = transcription(quantum_function_axioms());
    } else if (k == "verify_qbe_intertwiner") {
      finish(verify_qbe_intertwiner(morphisms_.at(str("morphism")), qbes_.at(str("source")),
                                    qbes_.at(str("target")), tol));
    } else if (k == "bimodule_to_qbe") {
      const QuantumBiElement e = bimodule_to_qbe(qsys_bimodules_.at(str("bimodule")), tol);
      finish(verify_qbe(e, tol));
    } else if (k == "equation") {
      const diagram::EquationReport e = check_equation(str("equation"), tol);
      VerificationReport rep(tol);
      rep.add("equation", e.residual);
      finish(rep);
      const auto& text = equation_text_.at(str("equation"));
      r.data["lhs"] = text.first;
      r.data["rhs"] = text.second;
    }
  } catch (const Error& e) {
    r.passed = false;
    r.messages.push_back(e.what());
  }
  return r;
}

diagram::EquationReport Workspace::check_equation(const std::string& name, Tolerance tol) const {
  auto it = equations_.find(name);
  if (it == equations_.end()) throw InputError(at("/equations", name), "unknown equation");
  return diagram::check_equation(*it->second.lhs, *it->second.rhs, env_, tol);
}

std::vector<std::string> Workspace::equation_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : equations_) out.push_back(name);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

json make_report_body(const std::vector<CheckResult>& results, Tolerance tol) {
  json checks = json::array();
  bool all = true;
  for (const auto& r : results) {
    json residuals = json::object();
    for (const auto& e : r.residuals) residuals[e.axiom] = e.residual;
    checks.push_back({{"name", r.name},
                      {"kind", r.kind},
                      {"passed", r.passed},
                      {"expect", r.expect},
                      {"outcome", r.outcome()},
                      {"tolerance", r.tolerance},
                      {"residuals", residuals},
                      {"data", r.data},
                      {"messages", r.messages}});
    all = all && r.ok();
  }
  return {{"tolerance", tol.eps}, {"passed", all}, {"checks", checks}};
}

json make_report(const std::vector<CheckResult>& results, Tolerance tol, const std::string& input) {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream ts;
  ts << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return {{"header", {{"tool", "qsyslab"}, {"version", kVersion}, {"input", input}, {"generated_at", ts.str()}}},
          {"body", make_report_body(results, tol)}};
}

std::string human_summary(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& r : results) {
    double worst = 0.0;
    for (const auto& e : r.residuals) {
      if (e.required) worst = std::max(worst, e.residual);
    }
    os << (r.ok() ? "ok    " : "FAIL  ") << r.name << " [" << r.kind << "] " << r.outcome();
    if (!r.residuals.empty()) os << "  max residual " << std::scientific << std::setprecision(3) << worst;
    os << '\n';
    for (const auto& m : r.messages) os << "        " << m << '\n';
    ok += r.ok();
  }
  os << ok << "/" << results.size() << " checks as expected\n";
  return os.str();
}

Tolerance resolve_tolerance(std::optional<double> flag) {
  if (flag) {
    if (!(*flag >= 0.0) || !std::isfinite(*flag)) throw InputError("--tol", "tolerance must be a nonnegative number");
    return Tolerance(*flag);
  }
  if (const char* env = std::getenv("QSYSLAB_TOL"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0) || !std::isfinite(v)) {
      throw InputError("QSYSLAB_TOL", std::string("not a nonnegative number: ") + env);
    }
    return Tolerance(v);
  }
  return Tolerance();
}

}  // namespace qsyslab::cli

#include "lnz/catalog.hpp"

#include <json.hpp>

#include "lnz/error.hpp"

namespace lnz {

namespace {

Slot k(Rational c) { return Slot{Slot::Kind::Const, std::move(c), 0}; }
Slot v(std::size_t var, Rational c = 1) { return Slot{Slot::Kind::Scaled, std::move(c), var}; }
Slot sq4(std::size_t var) { return Slot{Slot::Kind::QuarterSquare, 1, var}; }
Slot inv(std::size_t var, Rational c) { return Slot{Slot::Kind::Reciprocal, std::move(c), var}; }

ParamDomain any(const char* sym, std::vector<Rational> excluded = {}) { return {sym, false, std::move(excluded)}; }
ParamDomain set(const char* sym, std::vector<Rational> values) { return {sym, true, std::move(values)}; }

const char* const kLambda = "λ";
const char* const kMu = "μ";
const char* const kGamma = "γ";

CatalogRow second(const char* label, int eps, std::vector<Slot> slots, std::vector<ParamDomain> domains = {},
                  Rational beta = -1) {
  CatalogRow r;
  r.type = 2;
  r.label = label;
  r.epsilon = eps;
  r.beta = std::move(beta);
  r.even_only = eps == 1;
  r.slots = std::move(slots);
  r.domains = std::move(domains);
  return r;
}

CatalogRow first(int family, std::vector<Slot> slots, std::vector<ParamDomain> domains) {
  CatalogRow r;
  r.type = 1;
  r.label = std::to_string(family);
  r.family = family;
  r.slots = std::move(slots);
  r.domains = std::move(domains);
  return r;
}

std::vector<CatalogRow> make_rows() {
  const Rational q(1, 4);
  std::vector<CatalogRow> rows = {
      second("0.1", 0, {k(0), k(0), k(0), k(0)}, {}, 0),
      second("0.2", 0, {k(0), k(0), k(0), v(0)}, {set(kLambda, {0, 1})}),
      second("0.3", 0, {k(1), k(0), k(0), v(0)}, {any(kLambda)}),
      second("0.4", 0, {k(1), k(0), k(q), v(0)}, {any(kLambda)}),
      second("0.5", 0, {k(0), k(0), k(1), v(0)}, {any(kLambda)}),
      second("0.6", 0, {k(0), k(1), k(0), v(0)}, {set(kLambda, {0, 1})}),
      second("0.6", 0, {v(1), k(1), k(0), v(0)}, {any(kLambda), set(kMu, {1, 2})}),
      second("0.7", 0, {k(0), k(1), v(1), v(0)}, {any(kLambda), any(kMu, {0})}),
      second("0.8", 0, {v(0, -2), k(1), v(0, -1), k(2)}, {set(kLambda, {-2, Rational(-4, 3)})}),
      second("0.9", 0, {v(0, 2), k(1), v(0), k(0)}, {any(kLambda, {0, 1})}),
      second("0.10", 0, {k(1), k(1), k(q), k(q)}),
      second("0.10", 0, {k(1), k(1), k(q), k(Rational(1, 2))}),
      second("0.10", 0, {k(2), k(1), k(1), k(1)}),
      second("0.10", 0, {k(2), k(1), k(1), k(0)}),
      second("0.11", 0, {k(1), v(0), k(q), k(0)}, {any(kLambda, {0, Rational(1, 2)})}),
      second("1.2", 1, {k(0), k(0), k(0), v(0)}, {set(kLambda, {0, 1})}),
      second("1.3", 1, {k(1), k(0), k(0), v(0)}, {any(kLambda)}),
      second("1.4", 1, {k(1), k(0), k(q), v(0)}, {any(kLambda)}),
      second("1.6", 1, {v(1), k(1), k(0), v(0)}, {any(kLambda), any(kMu)}),
      second("1.7", 1, {k(0), v(1), v(2), v(0)}, {any(kLambda), any(kGamma, {0}), any(kMu, {0})}),
      second("1.9", 1, {v(0, -2), k(1), v(0), v(1)}, {any(kLambda, {0, 1}), any(kMu)}),
      second("1.11", 1, {v(0), k(1), sq4(0), v(1)}, {any(kLambda, {-2, 0}), any(kMu)}),
      second("1.12", 1, {k(-1), k(0), k(0), v(0)}, {set(kLambda, {0, 1})}),
      second("1.13", 1, {k(-2), k(0), k(1), v(0)}, {any(kLambda)}),
      second("1.14", 1, {k(-4), k(0), k(2), v(0)}, {any(kLambda)}),
      second("1.15", 1, {k(0), k(0), k(-1), v(0)}, {any(kLambda)}),
      second("1.16", 1, {k(-2), k(0), k(-1), v(0)}, {any(kLambda)}),
      second("1.17", 1, {k(0), k(-1), k(0), v(0)}, {set(kLambda, {0, 1})}),
      second("1.18", 1, {k(-1), k(-1), k(0), v(0)}, {any(kLambda)}),
      second("1.19", 1, {k(-2), k(-1), k(0), k(1)}),
      second("1.20", 1, {k(1), k(-1), k(0), v(0)}, {any(kLambda, {Rational(-1, 2)})}),
      second("1.21", 1, {k(1), k(Rational(1, 3)), k(0), v(0)}, {any(kLambda)}),
      second("1.22", 1, {k(-2), k(-1), k(1), v(0)}, {set(kLambda, {0, 1})}),
      second("1.23", 1, {k(1), k(Rational(1, 2)), k(q), v(0)}, {any(kLambda)}),
      second("1.24", 1, {k(-4), k(-1), k(2), v(0)}, {any(kLambda)}),
      second("1.25", 1, {k(-3), k(Rational(-4, 3)), k(2), v(0)}, {any(kLambda)}),
      second("1.26", 1, {k(Rational(2, 5)), k(2), k(Rational(2, 5)), v(0)}, {any(kLambda)}),
      second("1.27", 1, {inv(0, 2), v(0), k(1), v(1)}, {any(kLambda, {-1, 0, 1}), any(kMu)}),
      second("1.28", 1, {k(Rational(8, 5)), k(Rational(1, 2)), k(Rational(-4, 5)), v(0)}, {any(kLambda)}),
      second("1.29", 1, {v(0), k(-1), sq4(0), k(0)}, {any(kLambda, {-2, 0})}),
      second("1.30", 1, {k(1), k(-1), k(q), v(0)}, {set(kLambda, {Rational(-1, 2), q})}),
      second("1.31", 1, {k(-8), k(2), k(16), v(0)}, {any(kLambda)}),
      second("1.32", 1, {k(-2), v(0), k(1), k(0)}, {any(kLambda, {-1, 0})}),
      second("1.33", 1, {k(-2), k(1), k(1), v(0)}, {set(kLambda, {-1, 1})}),
      first(34, {k(0), v(0), k(0)}, {any(kLambda)}),
      first(35, {v(1), v(0), k(1)}, {set(kLambda, {0, 1}), set(kMu, {0, 1})}),
      first(36, {k(1), v(0), k(0)}, {set(kLambda, {-1, 0})}),
      first(37, {k(1), v(0), k(2)}, {any(kLambda)}),
      first(38, {k(0), k(0), v(0)}, {any(kLambda)}),
      first(39, {k(0), k(1), v(0)}, {set(kLambda, {-1, 0})}),
      first(40, {k(1), v(0), v(1)}, {set(kLambda, {0, 1}), any(kMu)}),
      first(41, {k(1), k(-1), v(0)}, {set(kLambda, {-1, 0})}),
  };
  return rows;
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].str();
  return out;
}

std::optional<RowMatch> match(const CatalogRow& row, const std::vector<Rational>& tuple) {
  if (tuple.size() != row.slots.size()) return std::nullopt;
  std::vector<std::optional<Rational>> assigned(row.domains.size());
  auto assign = [&](std::size_t var, const Rational& value) {
    if (assigned[var] && *assigned[var] != value) return false;
    assigned[var] = value;
    return true;
  };
  for (std::size_t s = 0; s < tuple.size(); ++s) {
    const Slot& sl = row.slots[s];
    if (sl.kind == Slot::Kind::Scaled && !sl.c.is_zero() && !assign(sl.var, tuple[s] / sl.c)) return std::nullopt;
  }
  for (std::size_t s = 0; s < tuple.size(); ++s) {
    const Slot& sl = row.slots[s];
    if (sl.kind == Slot::Kind::Reciprocal && !assigned[sl.var]) {
      if (tuple[s].is_zero()) return std::nullopt;
      assigned[sl.var] = sl.c / tuple[s];
    }
  }
  RowMatch m{&row, {}};
  for (const auto& a : assigned) {
    if (!a) return std::nullopt;
    m.free.push_back(*a);
  }
  for (std::size_t d = 0; d < row.domains.size(); ++d)
    if (!row.domains[d].contains(m.free[d])) return std::nullopt;
  for (std::size_t s = 0; s < tuple.size(); ++s) {
    const Slot& sl = row.slots[s];
    if (sl.kind == Slot::Kind::Reciprocal && m.free[sl.var].is_zero()) return std::nullopt;
    if (sl.eval(m.free) != tuple[s]) return std::nullopt;
  }
  return m;
}

void check_dimension(std::size_t n) {
  if (n < 9) throw Error(ErrorCode::DimensionTooSmall, "the classification needs n >= 9, got n = " + std::to_string(n));
}

}  // namespace

FirstTypeBranch branch_of(int family) {
  if (family < 34 || family > 41) throw Error(ErrorCode::UnknownFamily, "unknown first-type family " + std::to_string(family));
  return family <= 37 ? FirstTypeBranch::A : FirstTypeBranch::B;
}

bool ParamDomain::contains(const Rational& x) const {
  bool listed = std::find(values.begin(), values.end(), x) != values.end();
  return finite ? listed : !listed;
}

std::string ParamDomain::describe() const {
  std::string list;
  for (std::size_t i = 0; i < values.size(); ++i) list += (i ? "," : "") + values[i].str();
  if (finite) return symbol + " ∈ {" + list + "}";
  if (values.empty()) return symbol + " ∈ ℂ";
  return symbol + " ∈ ℂ∖{" + list + "}";
}

Rational Slot::eval(const std::vector<Rational>& free) const {
  switch (kind) {
    case Kind::Const: return c;
    case Kind::Scaled: return c * free.at(var);
    case Kind::QuarterSquare: return free.at(var) * free.at(var) / 4;
    case Kind::Reciprocal: return c / free.at(var);
  }
  return c;
}

std::string Slot::str(const std::vector<ParamDomain>& domains) const {
  if (kind == Kind::Const) return c.str();
  const std::string& sym = domains.at(var).symbol;
  switch (kind) {
    case Kind::Scaled:
      if (c == 1) return sym;
      if (c == -1) return "-" + sym;
      return c.str() + sym;
    case Kind::QuarterSquare: return sym + "^2/4";
    case Kind::Reciprocal: return c.str() + "/" + sym;
    default: return c.str();
  }
}

std::vector<Rational> CatalogRow::tuple(const std::vector<Rational>& free) const {
  std::vector<Rational> out;
  for (const auto& s : slots) out.push_back(s.eval(free));
  return out;
}

std::string CatalogRow::display_name(const std::vector<Rational>& free) const {
  std::vector<Rational> t = tuple(free);
  if (type == 2) {
    t.push_back(beta);
    std::string sup = label;
    sup[sup.find('.')] = ',';
    return "l^{" + sup + "}(" + join(t) + ")";
  }
  return "l^{" + label + "}(" + join(t) + ")";
}

const std::vector<CatalogRow>& catalog_rows() {
  static const std::vector<CatalogRow> rows = make_rows();
  return rows;
}

std::optional<Violation> validate_params(const CatalogRow& row, const std::vector<Rational>& free,
                                         std::optional<std::size_t> n) {
  if (free.size() != row.domains.size())
    return Violation{"row " + row.label + " takes " + std::to_string(row.domains.size()) + " free parameter(s), got " +
                     std::to_string(free.size())};
  for (std::size_t d = 0; d < free.size(); ++d)
    if (!row.domains[d].contains(free[d])) return Violation{row.domains[d].describe()};
  for (const auto& s : row.slots)
    if (s.kind == Slot::Kind::Reciprocal && free[s.var].is_zero()) return Violation{row.domains[s.var].symbol + " ≠ 0"};
  if (n && row.even_only && *n % 2 != 0) return Violation{"dim(L) even"};
  return std::nullopt;
}

std::optional<RowMatch> match_second_type(const SecondTypeParams& p) {
  const std::vector<Rational> t = p.alphas();
  for (const auto& row : catalog_rows()) {
    if (row.type != 2 || row.epsilon != p.epsilon || row.beta != p.beta) continue;
    if (!p.label.empty() && row.label != p.label) continue;
    if (auto m = match(row, t)) return m;
  }
  return std::nullopt;
}

std::optional<RowMatch> match_first_type(const FirstTypeParams& p) {
  for (const auto& row : catalog_rows())
    if (row.type == 1 && row.family == p.family) return match(row, p.slots());
  return std::nullopt;
}

StructureTensor build_second_type(std::size_t n, const SecondTypeParams& p, bool strict) {
  check_dimension(n);
  if (p.epsilon != 0 && p.epsilon != 1) throw Error(ErrorCode::InadmissibleParams, "epsilon must be 0 or 1");
  if (p.beta != 0 && p.beta != -1) throw Error(ErrorCode::InadmissibleParams, "beta must be 0 or -1");
  if (p.epsilon == 1 && n % 2 != 0)
    throw Error(ErrorCode::ParityViolation, "epsilon = 1 rows exist only for even n, got n = " + std::to_string(n));
  std::string name;
  if (strict) {
    auto m = match_second_type(p);
    if (!m)
      throw Error(ErrorCode::InadmissibleParams, "no catalog row " + (p.label.empty() ? std::string() : p.label + " ") +
                                                     "has epsilon = " + std::to_string(p.epsilon) + ", alpha = (" +
                                                     join(p.alphas()) + "), beta = " + p.beta.str());
    name = m->row->display_name(m->free);
  }
  StructureTensor a(n, name);
  const Rational& b = p.beta;
  for (std::size_t i = 1; i < n; ++i)
    if (i != 3) a.add(i, 1, i + 1, 1);
  a.add(1, 4, 2, p.alpha1);
  a.add(1, 4, 5, b);
  a.add(2, 4, 3, p.alpha2);
  a.add(4, 4, 2, p.alpha3);
  a.add(5, 4, 3, p.alpha4);
  a.add(1, 5, 3, p.alpha1 - p.alpha2);
  a.add(1, 5, 6, b);
  a.add(4, 5, 3, p.alpha3 - p.alpha4);
  for (std::size_t i = 6; i < n; ++i) a.add(1, i, i + 1, b);
  if (p.epsilon == 1)
    for (std::size_t i = 4; i < n; ++i) a.add(i, n + 3 - i, n, i % 2 == 0 ? 1 : -1);
  return a;
}

StructureTensor build_first_type_branch(std::size_t n, FirstTypeBranch branch, const Rational& p1, const Rational& p2,
                                        const Rational& p3) {
  check_dimension(n);
  StructureTensor a(n);
  for (std::size_t i = 1; i < n; ++i)
    if (i != n - 3) a.add(i, 1, i + 1, 1);
  const Rational& alpha1 = p1;
  a.add(1, n - 2, 2, alpha1);
  a.add(2, n - 2, 3, alpha1);
  for (std::size_t i = 3; i <= n - 4; ++i) a.add(i, n - 2, i + 1, alpha1);
  if (branch == FirstTypeBranch::A) {
    const Rational &alpha2 = p2, &beta2 = p3;
    a.add(1, n - 2, n - 1, alpha2);
    a.add(2, n - 2, n, alpha2);
    a.add(n - 2, n - 2, n - 1, beta2);
    a.add(n - 1, n - 2, n, beta2);
  } else {
    const Rational &b2 = p2, &a2 = p3;
    a.add(1, n - 2, n - 1, -1);
    a.add(2, n - 2, n, -(1 + a2));
    a.add(n - 1, n - 2, n, -b2);
    a.add(1, n - 1, n, a2);
    a.add(n - 2, n - 1, n, b2);
  }
  return a;
}

StructureTensor build_first_type(std::size_t n, const FirstTypeParams& p) {
  const FirstTypeBranch branch = branch_of(p.family);
  check_dimension(n);
  auto m = match_first_type(p);
  if (!m) {
    const CatalogRow* row = nullptr;
    for (const auto& r : catalog_rows())
      if (r.type == 1 && r.family == p.family) row = &r;
    std::string shape = "(";
    for (std::size_t s = 0; s < row->slots.size(); ++s) shape += (s ? "," : "") + row->slots[s].str(row->domains);
    shape += ")";
    std::string domains;
    for (const auto& d : row->domains) domains += (domains.empty() ? "" : ", ") + d.describe();
    throw Error(ErrorCode::InadmissibleParams, "family " + row->label + " needs slots " + shape + " with " + domains +
                                                   ", got (" + join(p.slots()) + ")");
  }
  StructureTensor a = build_first_type_branch(n, branch, p.p1, p.p2, p.p3);
  a.set_name(m->row->display_name(m->free));
  return a;
}

std::vector<CatalogInstance> enumerate_catalog(const std::vector<std::size_t>& dims,
                                               const std::vector<Rational>& samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "free parameter samples must be nonempty");
  std::vector<CatalogInstance> out;
  for (const auto& row : catalog_rows()) {
    std::vector<std::vector<Rational>> choices;
    for (const auto& d : row.domains) {
      std::vector<Rational> c;
      if (d.finite) {
        c = d.values;
      } else {
        for (const auto& s : samples)
          if (d.contains(s)) c.push_back(s);
      }
      choices.push_back(std::move(c));
    }
    for (std::size_t n : dims) {
      if (n < 9 || (row.even_only && n % 2 != 0)) continue;
      std::vector<std::size_t> idx(choices.size(), 0);
      bool done = std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); });
      while (!done) {
        std::vector<Rational> free;
        for (std::size_t d = 0; d < choices.size(); ++d) free.push_back(choices[d][idx[d]]);
        if (!validate_params(row, free, n)) {
          const std::vector<Rational> t = row.tuple(free);
          CatalogInstance inst;
          inst.row = &row;
          inst.n = n;
          inst.free = free;
          if (row.type == 2) {
            SecondTypeParams p{row.epsilon, t[0], t[1], t[2], t[3], row.beta, row.label};
            inst.tensor = build_second_type(n, p, false);
            inst.params = p;
          } else {
            FirstTypeParams p{row.family, t[0], t[1], t[2]};
            inst.tensor = build_first_type_branch(n, branch_of(row.family), t[0], t[1], t[2]);
            inst.params = p;
          }
          inst.tensor.set_name(row.display_name(free));
          out.push_back(std::move(inst));
        }
        // Odometer, last parameter fastest.
        done = true;
        for (std::size_t d = choices.size(); d-- > 0;) {
          if (++idx[d] < choices[d].size()) {
            done = false;
            break;
          }
          idx[d] = 0;
        }
      }
    }
  }
  return out;
}

std::string serialize_catalog_index() {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : catalog_rows()) {
    nlohmann::json r;
    r["type"] = row.type;
    r["label"] = row.label;
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& s : row.slots) slots.push_back(s.str(row.domains));
    r["slots"] = slots;
    nlohmann::json domains = nlohmann::json::array();
    for (const auto& d : row.domains) domains.push_back(d.describe());
    r["constraints"] = domains;
    if (row.type == 2) {
      r["epsilon"] = row.epsilon;
      r["beta"] = row.beta.str();
      r["parity"] = row.even_only ? "even" : "odd or even";
    } else {
      r["family"] = row.family;
      r["parity"] = "odd or even";
    }
    rows.push_back(r);
  }
  nlohmann::json doc;
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

}  // namespace lnz

#include "edl/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace edl {

std::map<char, Int> ParameterBinding::vars() const {
  std::map<char, Int> v;
  if (n) v['n'] = *n;
  if (p) v['p'] = *p;
  if (q) v['q'] = *q;
  return v;
}

std::string ParameterBinding::str() const {
  std::string s;
  auto app = [&](char c, const std::optional<long>& v) {
    if (!v) return;
    if (!s.empty()) s += ",";
    s += std::string(1, c) + "=" + std::to_string(*v);
  };
  app('n', n);
  app('p', p);
  app('q', q);
  return s;
}

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

ParameterBinding parse_binding(std::string_view text) {
  ParameterBinding b;
  if (trim(text).empty()) return b;
  for (const auto& part : split(text, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("bad binding '" + part + "'");
    char var = trim(part.substr(0, eq))[0];
    long val = std::stol(part.substr(eq + 1));
    if (var == 'n') b.n = val;
    else if (var == 'p') b.p = val;
    else if (var == 'q') b.q = val;
    else throw std::invalid_argument(std::string("unknown parameter '") + var + "'");
  }
  return b;
}

PeriodSpec parse_period(const std::string& value) {
  PeriodSpec ps;
  auto colon = value.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("period: missing ':'");
  std::string head = trim(value.substr(0, colon));
  ps.formula_text = trim(value.substr(colon + 1));
  auto space = head.find(' ');
  if (space == std::string::npos) {
    ps.location = head;
  } else {
    ps.location = trim(head.substr(0, space));
    ps.index_text = trim(head.substr(space + 1));
  }
  try {
    ps.formula = Expr::parse(ps.formula_text);
  } catch (const std::exception&) {
    ps.formula = std::nullopt;  // kept verbatim (e.g. the undeclared index)
  }
  return ps;
}

}  // namespace

std::vector<CatalogRow> parse_catalog(std::string_view text) {
  std::vector<CatalogRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_version = false;
  CatalogRow* cur = nullptr;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (!have_version) {
        if (t.find("edl-catalog v1") == std::string::npos)
          throw std::invalid_argument("catalog: missing 'edl-catalog v1' header");
        have_version = true;
      }
      continue;
    }
    if (!have_version) throw std::invalid_argument("catalog: header must precede records");
    if (t.front() == '[') {
      if (t.back() != ']') throw std::invalid_argument("catalog: bad record start " + t);
      rows.emplace_back();
      cur = &rows.back();
      cur->label = t.substr(1, t.size() - 2);
      continue;
    }
    if (!cur) throw std::invalid_argument("catalog: field before any record");
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": no '='");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));

    if (key == "g") {
      auto colon = value.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("g: missing ':'");
      cur->g_family = family_from_string(trim(value.substr(0, colon)));
      cur->g_rank = Expr::parse(trim(value.substr(colon + 1)));
    }
    else if (key == "compact") cur->compact_name = value;
    else if (key == "noncompact") cur->noncompact_name = value;
    else if (key == "dim_g") cur->dim_g = Expr::parse(value);
    else if (key == "center") cur->center = value;
    else if (key == "h") cur->h_name = value;
    else if (key == "dim_h") cur->dim_h = Expr::parse(value);
    else if (key == "restricted") {
      auto colon = value.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("restricted: missing ':'");
      cur->restricted_family = family_from_string(trim(value.substr(0, colon)));
      cur->restricted_rank = Expr::parse(trim(value.substr(colon + 1)));
    }
    else if (key == "highest") cur->highest_pattern = value;
    else if (key == "ratio_gh") cur->ratio_gh = value;
    else if (key == "ratio_g_gh") cur->ratio_g_gh = value;
    else if (key == "ratio_hk") cur->ratio_hk = value;
    else if (key == "m_lambda" || key == "m_2lambda") {
      auto& dst = key == "m_lambda" ? cur->m_lambda : cur->m_2lambda;
      for (const auto& part : split(value, ',')) dst.push_back(Expr::parse(part));
      if (dst.empty() || dst.size() > 2)
        throw std::invalid_argument(key + ": expected one or two entries");
    }
    else if (key == "k") cur->k_name = value;
    else if (key == "dim_k") cur->dim_k = Expr::parse(value);
    else if (key == "period") cur->periods.push_back(parse_period(value));
    else if (key == "special") {
      auto sep = value.find("::");
      if (sep == std::string::npos) throw std::invalid_argument("special: missing '::'");
      SpecialCase sc;
      sc.condition = Condition::parse(trim(value.substr(0, sep)));
      sc.note = trim(value.substr(sep + 2));
      cur->specials.push_back(std::move(sc));
    }
    else if (key == "note") cur->source_notes.push_back(value);
    else if (key == "constraint") cur->constraint = Condition::parse(value);
    else if (key == "audit") {
      for (const auto& part : split(value, ';'))
        cur->audit_bindings.push_back(parse_binding(part));
    }
    else throw std::invalid_argument("catalog: unknown key '" + key + "'");
  }
  if (rows.empty()) throw std::invalid_argument("catalog: no records");
  return rows;
}

const std::vector<CatalogRow>& catalog() {
  static const std::vector<CatalogRow> rows = parse_catalog(default_catalog_text());
  return rows;
}

const CatalogRow& catalog_row(std::string_view label) {
  for (const auto& row : catalog())
    if (row.label == label) return row;
  throw std::invalid_argument("unknown catalog label '" + std::string(label) + "'");
}

std::vector<std::string> catalog_labels() {
  std::vector<std::string> out;
  for (const auto& row : catalog()) out.push_back(row.label);
  return out;
}

namespace {

std::vector<int> expand_highest(const std::string& pattern, int rank) {
  // "a,b...,c,d": literal prefix, one filler element repeated, literal suffix
  std::vector<int> prefix, suffix;
  std::optional<int> filler;
  bool after_filler = false;
  for (auto part : split(pattern, ',')) {
    bool fills = part.size() > 3 && part.substr(part.size() - 3) == "...";
    if (fills) {
      if (filler) throw std::invalid_argument("highest pattern: two fillers");
      filler = std::stoi(part.substr(0, part.size() - 3));
      after_filler = true;
    } else {
      (after_filler ? suffix : prefix).push_back(std::stoi(part));
    }
  }
  const int fixed = static_cast<int>(prefix.size() + suffix.size());
  if (!filler) {
    if (fixed != rank)
      throw std::invalid_argument("highest pattern does not match rank " + std::to_string(rank));
    prefix.insert(prefix.end(), suffix.begin(), suffix.end());
    return prefix;
  }
  if (rank < fixed)
    throw std::invalid_argument("highest pattern does not fit rank " + std::to_string(rank));
  std::vector<int> out = prefix;
  out.insert(out.end(), rank - fixed, *filler);
  out.insert(out.end(), suffix.begin(), suffix.end());
  return out;
}

std::string resolve_center(const std::string& center, const std::map<char, Int>& vars) {
  if (center.rfind("Z(", 0) == 0) {
    Int m = Expr::parse(center.substr(2, center.size() - 3)).eval_int(vars);
    return "Z" + m.str();
  }
  if (center.rfind("spin(", 0) == 0) {
    // caption rule for Spin(m): Z4 when m = 4k+2, Z2xZ2 when m = 4k
    Int m = Expr::parse(center.substr(5, center.size() - 6)).eval_int(vars);
    return (m % 4 == 2) ? "Z4" : "Z2xZ2";
  }
  return center;
}

}  // namespace

SymmetricSpaceEntry lookup(std::string_view label, const ParameterBinding& binding) {
  const CatalogRow& row = catalog_row(label);
  const auto vars = binding.vars();

  if (!row.constraint.text().empty() && !row.constraint.eval(vars))
    throw std::invalid_argument("binding " + binding.str() + " violates constraint '" +
                                row.constraint.text() + "' of " + row.label);

  SymmetricSpaceEntry e;
  e.label = row.label;
  e.binding = binding;
  e.g_family = row.g_family;
  e.g_rank = static_cast<int>(row.g_rank.eval_int(vars).convert_to<long>());
  e.compact_name = row.compact_name;
  e.noncompact_name = row.noncompact_name;
  e.dim_g = static_cast<long>(row.dim_g.eval_int(vars).convert_to<long>());
  e.dim_h = static_cast<long>(row.dim_h.eval_int(vars).convert_to<long>());
  e.dim_k = static_cast<long>(row.dim_k.eval_int(vars).convert_to<long>());
  e.center = resolve_center(row.center, vars);
  e.h_name = row.h_name;
  e.k_name = row.k_name;
  e.restricted_family = row.restricted_family;
  e.restricted_rank = static_cast<int>(row.restricted_rank.eval_int(vars).convert_to<long>());
  try {
    e.highest_printed = expand_highest(row.highest_pattern, e.restricted_rank);
  } catch (const std::exception& ex) {
    e.notes.push_back(std::string("highest-root pattern not applicable: ") + ex.what());
  }
  for (const auto& m : row.m_lambda) e.m_lambda.push_back(m.eval_exact(vars));
  for (const auto& m : row.m_2lambda) e.m_2lambda.push_back(m.eval_exact(vars));
  e.ratio_gh = row.ratio_gh;
  e.ratio_g_gh = row.ratio_g_gh;
  e.ratio_hk = row.ratio_hk;
  e.periods = row.periods;
  for (const auto& sc : row.specials)
    if (sc.condition.eval(vars)) e.notes.push_back(sc.note);
  for (const auto& n : row.source_notes) e.notes.push_back(n);
  return e;
}

NonReducedRootSystem restricted_root_system(const SymmetricSpaceEntry& entry) {
  const RootFamily printed{entry.restricted_family, entry.restricted_rank};
  const RootFamily canon = canonical_family(printed);

  bool has_doubles = false;
  for (const auto& m : entry.m_2lambda)
    if (m != 0) has_doubles = true;

  auto slot = [&](const std::vector<Rat>& v, bool short_slot) -> Rat {
    if (v.size() == 1) return v[0];
    return short_slot ? v[1] : v[0];
  };

  MultiplicityFunction mult;
  const RootSystem probe = build_root_system(canon);
  const bool two_lengths = probe.simple_roots().size() > 1 &&
                           [&] {
                             Rat mn = probe.max_norm_sq();
                             for (const auto& r : probe.positive_roots())
                               if (r.norm_sq != mn) return true;
                             return false;
                           }();
  if (two_lengths) {
    mult.long_orbit = slot(entry.m_lambda, false);
    mult.short_orbit = slot(entry.m_lambda, true);
    if (has_doubles) {
      Rat dl = slot(entry.m_2lambda, false), ds = slot(entry.m_2lambda, true);
      if (dl != 0)
        throw std::invalid_argument(entry.label + ": doubled long roots are not in the lattice");
      mult.double_short = ds;
    }
  } else {
    // Single root length after canonicalization: the surviving orbit is the
    // short one of B1 and the long one otherwise (C1, A, D, E).
    const bool from_b1 = entry.restricted_family == Family::B && entry.restricted_rank == 1;
    mult.long_orbit = slot(entry.m_lambda, from_b1);
    if (has_doubles) mult.double_long = slot(entry.m_2lambda, from_b1);
  }

  auto nr = has_doubles ? build_nonreduced({Family::BC, canon.rank}, mult)
                        : build_nonreduced(canon, mult);

  // The multiplicity sum must reproduce dim H - dim K.
  Rat sum = 0;
  for (const auto& [root, orbit] : positive_orbit_roots(nr)) sum += nr.multiplicity[orbit];
  if (sum != entry.dim_h - entry.dim_k)
    throw std::invalid_argument(entry.label + ": multiplicity sum " + sum.str() +
                                " != dim H - dim K = " +
                                std::to_string(entry.dim_h - entry.dim_k));
  return nr;
}

DimensionReport check_dimensions(const SymmetricSpaceEntry& entry) {
  DimensionReport rep;
  rep.h_minus_k = entry.dim_h - entry.dim_k;
  rep.dim_split_lhs = entry.dim_g - entry.dim_h;
  rep.dim_split_rhs = entry.restricted_rank + rep.h_minus_k;
  try {
    auto nr = restricted_root_system(entry);
    Rat sum = 0;
    for (const auto& [root, orbit] : positive_orbit_roots(nr)) sum += nr.multiplicity[orbit];
    rep.mult_sum = to_integer(sum);
  } catch (const std::exception& ex) {
    rep.pass = false;
    rep.detail = ex.what();
    return rep;
  }
  rep.pass = (rep.dim_split_lhs == rep.dim_split_rhs) && (rep.mult_sum == rep.h_minus_k);
  if (!rep.pass)
    rep.detail = "dim split " + std::to_string(rep.dim_split_lhs) + " vs " +
                 std::to_string(rep.dim_split_rhs) + ", mult sum " + rep.mult_sum.str() +
                 " vs " + std::to_string(rep.h_minus_k);
  return rep;
}

std::vector<AuditRecord> catalog_audit() {
  std::vector<AuditRecord> out;
  for (const auto& row : catalog()) {
    std::vector<ParameterBinding> bindings = row.audit_bindings;
    if (bindings.empty()) bindings.push_back({});
    for (const auto& b : bindings) {
      AuditRecord rec;
      rec.label = row.label;
      rec.binding = b.str();
      try {
        auto entry = lookup(row.label, b);
        auto rep = check_dimensions(entry);
        rec.pass = rep.pass;
        rec.detail = rep.pass ? "dim split " + std::to_string(rep.dim_split_lhs) + " = " +
                                    std::to_string(entry.restricted_rank) + " + " +
                                    std::to_string(rep.h_minus_k) + ", mult sum " +
                                    rep.mult_sum.str()
                              : rep.detail;
        rec.notes = entry.notes;
      } catch (const std::exception& ex) {
        rec.pass = false;
        rec.detail = ex.what();
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace edl

#pragma once

#include "edl/expression.hpp"
#include "edl/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edl {

struct ParameterBinding {
  std::optional<long> n, p, q;

  std::map<char, Int> vars() const;
  std::string str() const;  // "n=3" / "p=2,q=4" / "" for fixed rows
};

struct PeriodSpec {
  std::string location;      // "H" or "K"
  std::string index_text;    // e.g. "i=1..p-1", empty if not indexed
  std::string formula_text;  // verbatim
  std::optional<Expr> formula;  // absent when the printed text does not parse
  std::string note;
};

struct SpecialCase {
  Condition condition;
  std::string note;
};

// One record of the symmetric-space table, fields still parametric.
struct CatalogRow {
  std::string label;
  Family g_family{};
  Expr g_rank;
  std::string compact_name, noncompact_name;
  Expr dim_g;
  std::string center;  // "1", "Z2", "Z3", "Z4", "Z2xZ2", "Z(expr)", "spin(expr)"
  std::string h_name;
  Expr dim_h;
  Family restricted_family;
  Expr restricted_rank;
  std::string highest_pattern;  // e.g. "1,2...", "2...,1", "2,3,4,2"
  std::string ratio_gh, ratio_g_gh, ratio_hk;
  std::vector<Expr> m_lambda, m_2lambda;  // one entry, or [long, short]
  std::string k_name;
  Expr dim_k;
  std::vector<PeriodSpec> periods;
  std::vector<SpecialCase> specials;
  std::vector<std::string> source_notes;
  Condition constraint;
  std::vector<ParameterBinding> audit_bindings;
};

// A row evaluated at a concrete binding.
struct SymmetricSpaceEntry {
  std::string label;
  ParameterBinding binding;
  Family g_family{};
  int g_rank = 0;
  std::string compact_name, noncompact_name;
  long dim_g = 0, dim_h = 0, dim_k = 0;
  std::string center;
  std::string h_name, k_name;
  Family restricted_family{};
  int restricted_rank = 0;
  std::vector<int> highest_printed;
  std::vector<Rat> m_lambda, m_2lambda;
  std::string ratio_gh, ratio_g_gh, ratio_hk;
  std::vector<PeriodSpec> periods;  // with binding-evaluable values via vars()
  std::vector<std::string> notes;   // triggered special cases + source notes

  bool split() const { return dim_k == 0; }
  std::map<char, Int> vars() const { return binding.vars(); }
};

std::string default_catalog_text();
std::vector<CatalogRow> parse_catalog(std::string_view text);
const std::vector<CatalogRow>& catalog();  // parsed embedded table, cached

const CatalogRow& catalog_row(std::string_view label);
std::vector<std::string> catalog_labels();

SymmetricSpaceEntry lookup(std::string_view label, const ParameterBinding& binding);

struct DimensionReport {
  bool pass = false;
  long dim_split_lhs = 0;   // dim G - dim H
  long dim_split_rhs = 0;   // l + (dim H - dim K)
  Int mult_sum;             // sum of multiplicities over positive restricted roots
  long h_minus_k = 0;
  std::string detail;
};

DimensionReport check_dimensions(const SymmetricSpaceEntry& entry);

// Builds the (possibly non-reduced) restricted system with the row's
// multiplicities attached per orbit; throws on inconsistent data.
NonReducedRootSystem restricted_root_system(const SymmetricSpaceEntry& entry);

struct AuditRecord {
  std::string label;
  std::string binding;
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

std::vector<AuditRecord> catalog_audit();

}  // namespace edl

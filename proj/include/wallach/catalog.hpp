#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wallach/rational.hpp"

namespace wallach {

/// One compact simple algebra with the squared length of its maximal root
/// under its own Killing form.
struct KillingTableEntry {
  std::string name;
  long long dim;
  long long b_max;
};

KillingTableEntry killing_entry_so(int n);  // n >= 3: dim n(n-1)/2, b_max 4(n-2)
KillingTableEntry killing_entry_su(int n);  // n >= 2: dim n^2-1,    b_max 4n
KillingTableEntry killing_entry_sp(int n);  // n >= 1: dim 2n^2+n,   b_max 4(n+1)
KillingTableEntry killing_entry_exceptional(const std::string& name);  // g2 f4 e6 e7 e8

enum class ParamScheme { None, KLM, L };

struct ExactInvariants {
  std::array<long long, 3> d{};
  std::array<Rational, 3> a{};
  Rational A;
};

/// A row of the 15-line family table: symbolic names, the parameter scheme,
/// and (through closed_form) the exact dimension and a-value formulas.
struct WallachRecord {
  int line;
  std::string g_desc;
  std::string h_desc;
  ParamScheme scheme;
  std::string constraints;
};

const std::vector<WallachRecord>& table1();
const WallachRecord& table1_line(int line);

/// Exact rational evaluation of a row's (d1,d2,d3,a1,a2,a3,A). Parameters:
/// {k,l,m} for KLM rows, {l} for L rows, {} for fixed rows. Throws InputError
/// on constraint violations.
ExactInvariants closed_form(const WallachRecord& rec, const std::vector<int>& params);
ExactInvariants closed_form(int line, const std::vector<int>& params);

/// gamma = B_k(beta'_m, beta'_m) / (j * B_g(beta_m, beta_m)) for a simple
/// subalgebra of Dynkin index j.
Rational gamma_from_dynkin(const KillingTableEntry& sub, const KillingTableEntry& amb,
                           int j);

/// From B_k = gamma * B_g on an irreducible symmetric pair with d-dimensional
/// isotropy module: c = gamma/2, A = d(1-gamma)/2, a = (1-gamma)/2.
/// Requires 0 < gamma < 1.
std::pair<Rational, Rational> a_from_gamma(const Rational& gamma, long long d);

/// Killing-ratio route data for one table row: per module, the simple
/// effective subalgebra entry and its Dynkin index, or nullopt where that
/// subalgebra is absent or not simple (then the tabulated value stands alone).
std::array<std::optional<std::pair<KillingTableEntry, int>>, 3> ktilde_route(
    int line, const std::vector<int>& params);
std::optional<KillingTableEntry> ambient_entry(int line, const std::vector<int>& params);

/// A row of the 37-line involution-pair table with its filter verdict.
struct SymTriple {
  int line;
  std::string g_desc;
  std::string h_desc;
  std::array<std::string, 3> k_desc;
  int param_count;       // 0, 1, 2, or 4
  bool ever_accepts;     // false: rejected for every parameter choice
  int target_line;       // Table-1 line reached when the filter accepts (0 otherwise)
  std::string filter_note;  // constraint or rejection reason
};

const std::vector<SymTriple>& table2();
const SymTriple& table2_line(int line);

struct FilterOutcome {
  bool accepted = false;
  int target_line = 0;
  std::vector<int> mapped_params;
  std::string reason;
};

/// Applies the irreducibility filter to one table-2 row at the given
/// parameters; an accept names the table-1 row and its parameters.
FilterOutcome filter_table2(const SymTriple& triple, const std::vector<int>& params);

struct CatalogEntry {
  const WallachRecord* record;
  std::vector<int> sample_params;  // smallest admissible values for parametric rows
  ExactInvariants invariants;
};

/// All 15 rows, parametric ones evaluated at their smallest admissible
/// parameters.
std::vector<CatalogEntry> enumerate_catalog();

std::string catalog_json();   // {"table1": [...], "table2": [...]}
std::string catalog_text(bool include_table2 = true);

}  // namespace wallach

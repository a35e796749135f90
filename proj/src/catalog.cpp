#include "wallach/catalog.hpp"

#include <algorithm>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "wallach/errors.hpp"

namespace wallach {

using nlohmann::json;

KillingTableEntry killing_entry_so(int n) {
  if (n < 3) throw InputError("killing_entry_so: n >= 3");
  return {"so(" + std::to_string(n) + ")", static_cast<long long>(n) * (n - 1) / 2,
          4LL * (n - 2)};
}

KillingTableEntry killing_entry_su(int n) {
  if (n < 2) throw InputError("killing_entry_su: n >= 2");
  return {"su(" + std::to_string(n) + ")", static_cast<long long>(n) * n - 1, 4LL * n};
}

KillingTableEntry killing_entry_sp(int n) {
  if (n < 1) throw InputError("killing_entry_sp: n >= 1");
  return {"sp(" + std::to_string(n) + ")", 2LL * n * n + n, 4LL * (n + 1)};
}

KillingTableEntry killing_entry_exceptional(const std::string& name) {
  if (name == "g2") return {"g2", 14, 16};
  if (name == "f4") return {"f4", 52, 36};
  if (name == "e6") return {"e6", 78, 48};
  if (name == "e7") return {"e7", 133, 72};
  if (name == "e8") return {"e8", 248, 120};
  throw InputError("unknown exceptional algebra '" + name + "'");
}

const std::vector<WallachRecord>& table1() {
  static const std::vector<WallachRecord> rows = {
      {1, "so(k+l+m)", "so(k)+so(l)+so(m)", ParamScheme::KLM, "k,l,m >= 1"},
      {2, "su(k+l+m)", "s(u(k)+u(l)+u(m))", ParamScheme::KLM, "k,l,m >= 1"},
      {3, "sp(k+l+m)", "sp(k)+sp(l)+sp(m)", ParamScheme::KLM, "k,l,m >= 1"},
      {4, "su(2l)", "u(l)", ParamScheme::L, "l >= 2"},
      {5, "so(2l)", "u(1)+u(l-1)", ParamScheme::L, "l >= 4"},
      {6, "e6", "su(4)+2sp(1)+R", ParamScheme::None, ""},
      {7, "e6", "so(8)+R^2", ParamScheme::None, ""},
      {8, "e6", "sp(3)+sp(1)", ParamScheme::None, ""},
      {9, "e7", "so(8)+3sp(1)", ParamScheme::None, ""},
      {10, "e7", "su(6)+sp(1)+R", ParamScheme::None, ""},
      {11, "e7", "so(8)", ParamScheme::None, ""},
      {12, "e8", "so(12)+2sp(1)", ParamScheme::None, ""},
      {13, "e8", "so(8)+so(8)", ParamScheme::None, ""},
      {14, "f4", "so(5)+2sp(1)", ParamScheme::None, ""},
      {15, "f4", "so(8)", ParamScheme::None, ""},
  };
  return rows;
}

const WallachRecord& table1_line(int line) {
  if (line < 1 || line > 15) throw InputError("table1 line must be 1..15");
  return table1()[static_cast<std::size_t>(line - 1)];
}

namespace {

ExactInvariants fixed_row(std::array<long long, 3> d, std::array<Rational, 3> a) {
  ExactInvariants inv;
  inv.d = d;
  inv.a = a;
  inv.A = a[0] * d[0];
  return inv;
}

void need_params(const std::vector<int>& params, std::size_t n, const char* what) {
  if (params.size() != n)
    throw InputError(std::string(what) + ": expected " + std::to_string(n) +
                     " parameter(s), got " + std::to_string(params.size()));
}

}  // namespace

ExactInvariants closed_form(const WallachRecord& rec, const std::vector<int>& params) {
  switch (rec.line) {
    case 1:
    case 2:
    case 3: {
      need_params(params, 3, "flag family row");
      long long k = params[0], l = params[1], m = params[2];
      if (k < 1 || l < 1 || m < 1) throw InputError("flag family: k,l,m >= 1");
      long long n = k + l + m;
      long long mult = rec.line == 1 ? 1 : (rec.line == 2 ? 2 : 4);
      long long den = rec.line == 1 ? 2 * (n - 2) : (rec.line == 2 ? 2 * n : 2 * (n + 1));
      if (den <= 0) throw InputError("flag family: degenerate denominator");
      ExactInvariants inv;
      inv.d = {mult * k * l, mult * k * m, mult * l * m};
      inv.a = {Rational(m, den), Rational(l, den), Rational(k, den)};
      inv.A = inv.a[0] * inv.d[0];
      return inv;
    }
    case 4: {
      need_params(params, 1, "row 4");
      long long l = params[0];
      if (l < 2) throw InputError("row 4: l >= 2");
      ExactInvariants inv;
      inv.d = {l * (l - 1), l * (l + 1), l * l - 1};
      inv.a = {Rational(l + 1, 4 * l), Rational(l - 1, 4 * l), Rational(1, 4)};
      inv.A = inv.a[0] * inv.d[0];
      return inv;
    }
    case 5: {
      need_params(params, 1, "row 5");
      long long l = params[0];
      if (l < 4) throw InputError("row 5: l >= 4");
      ExactInvariants inv;
      inv.d = {2 * (l - 1), 2 * (l - 1), (l - 1) * (l - 2)};
      inv.a = {Rational(l - 2, 4 * (l - 1)), Rational(l - 2, 4 * (l - 1)),
               Rational(1, 2 * (l - 1))};
      inv.A = inv.a[0] * inv.d[0];
      return inv;
    }
    case 6:
      need_params(params, 0, "row 6");
      return fixed_row({16, 16, 24}, {Rational(1, 4), Rational(1, 4), Rational(1, 6)});
    case 7:
      need_params(params, 0, "row 7");
      return fixed_row({16, 16, 16}, {Rational(1, 6), Rational(1, 6), Rational(1, 6)});
    case 8:
      need_params(params, 0, "row 8");
      return fixed_row({14, 28, 12}, {Rational(1, 4), Rational(1, 8), Rational(7, 24)});
    case 9:
      need_params(params, 0, "row 9");
      return fixed_row({32, 32, 32}, {Rational(2, 9), Rational(2, 9), Rational(2, 9)});
    case 10:
      need_params(params, 0, "row 10");
      return fixed_row({30, 40, 24}, {Rational(2, 9), Rational(1, 6), Rational(5, 18)});
    case 11:
      need_params(params, 0, "row 11");
      return fixed_row({35, 35, 35}, {Rational(5, 18), Rational(5, 18), Rational(5, 18)});
    case 12:
      need_params(params, 0, "row 12");
      return fixed_row({64, 64, 48}, {Rational(1, 5), Rational(1, 5), Rational(4, 15)});
    case 13:
      need_params(params, 0, "row 13");
      return fixed_row({64, 64, 64}, {Rational(4, 15), Rational(4, 15), Rational(4, 15)});
    case 14:
      need_params(params, 0, "row 14");
      return fixed_row({8, 8, 20}, {Rational(5, 18), Rational(5, 18), Rational(1, 9)});
    case 15:
      need_params(params, 0, "row 15");
      return fixed_row({8, 8, 8}, {Rational(1, 9), Rational(1, 9), Rational(1, 9)});
  }
  throw InputError("unknown table-1 line");
}

ExactInvariants closed_form(int line, const std::vector<int>& params) {
  return closed_form(table1_line(line), params);
}

Rational gamma_from_dynkin(const KillingTableEntry& sub, const KillingTableEntry& amb,
                           int j) {
  if (j < 1) throw InputError("gamma_from_dynkin: Dynkin index must be >= 1");
  return Rational(sub.b_max, j * amb.b_max);
}

std::pair<Rational, Rational> a_from_gamma(const Rational& gamma, long long d) {
  if (!(gamma > 0 && gamma < 1))
    throw InputError("a_from_gamma: gamma must lie in (0,1)");
  Rational a = (1 - gamma) / 2;
  return {a * d, a};
}

namespace {

std::optional<std::pair<KillingTableEntry, int>> so_sub(long long n, int j = 1) {
  if (n < 3) return std::nullopt;  // so(2) is abelian
  return std::make_pair(killing_entry_so(static_cast<int>(n)), j);
}
std::optional<std::pair<KillingTableEntry, int>> su_sub(long long n, int j = 1) {
  if (n < 2) return std::nullopt;
  return std::make_pair(killing_entry_su(static_cast<int>(n)), j);
}
std::optional<std::pair<KillingTableEntry, int>> sp_sub(long long n, int j = 1) {
  if (n < 1) return std::nullopt;
  return std::make_pair(killing_entry_sp(static_cast<int>(n)), j);
}
std::optional<std::pair<KillingTableEntry, int>> exc_sub(const std::string& name) {
  return std::make_pair(killing_entry_exceptional(name), 1);
}

}  // namespace

std::array<std::optional<std::pair<KillingTableEntry, int>>, 3> ktilde_route(
    int line, const std::vector<int>& params) {
  closed_form(line, params);  // parameter validation
  switch (line) {
    case 1: {
      long long k = params[0], l = params[1], m = params[2];
      return {so_sub(k + l), so_sub(k + m), so_sub(l + m)};
    }
    case 2: {
      long long k = params[0], l = params[1], m = params[2];
      return {su_sub(k + l), su_sub(k + m), su_sub(l + m)};
    }
    case 3: {
      long long k = params[0], l = params[1], m = params[2];
      return {sp_sub(k + l), sp_sub(k + m), sp_sub(l + m)};
    }
    case 4: {
      long long l = params[0];
      // k~3 = su(l)+su(l) is not simple; its a3 = 1/4 is tabulated directly
      return {so_sub(2 * l, 2), sp_sub(l), std::nullopt};
    }
    case 5: {
      long long l = params[0];
      return {su_sub(l), su_sub(l), so_sub(2 * l - 2)};
    }
    case 6: return {su_sub(6), su_sub(6), so_sub(10)};
    case 7: return {so_sub(10), so_sub(10), so_sub(10)};
    case 8: return {su_sub(6), exc_sub("f4"), sp_sub(4)};
    case 9: return {so_sub(12), so_sub(12), so_sub(12)};
    case 10: return {so_sub(12), exc_sub("e6"), su_sub(8)};
    case 11: return {su_sub(8), su_sub(8), su_sub(8)};
    case 12: return {exc_sub("e7"), exc_sub("e7"), so_sub(16)};
    case 13: return {so_sub(16), so_sub(16), so_sub(16)};
    case 14: return {sp_sub(3), sp_sub(3), so_sub(9)};
    case 15: return {so_sub(9), so_sub(9), so_sub(9)};
  }
  throw InputError("unknown table-1 line");
}

std::optional<KillingTableEntry> ambient_entry(int line, const std::vector<int>& params) {
  closed_form(line, params);
  switch (line) {
    case 1: {
      long long n = params[0] + params[1] + params[2];
      if (n < 3) return std::nullopt;
      return killing_entry_so(static_cast<int>(n));
    }
    case 2: return killing_entry_su(params[0] + params[1] + params[2]);
    case 3: return killing_entry_sp(params[0] + params[1] + params[2]);
    case 4: return killing_entry_su(2 * params[0]);
    case 5: return killing_entry_so(2 * params[0]);
    case 6:
    case 7:
    case 8: return killing_entry_exceptional("e6");
    case 9:
    case 10:
    case 11: return killing_entry_exceptional("e7");
    case 12:
    case 13: return killing_entry_exceptional("e8");
    case 14:
    case 15: return killing_entry_exceptional("f4");
  }
  throw InputError("unknown table-1 line");
}

const std::vector<SymTriple>& table2() {
  static const std::vector<SymTriple> rows = {
      {1, "su(p+q)", "so(p)+so(q)", {"so(p+q)", "so(p+q)", "s(u(p)+u(q))"}, 2, false, 0,
       "(k~3,h~3) = (s(u(p)+u(q)), so(p)+so(q)) is not irreducible symmetric"},
      {2, "su(2p)", "u(p)", {"so(2p)", "sp(p)", "s(u(p)+u(p))"}, 1, true, 4,
       "p >= 2"},
      {3, "su(2p+2q)", "sp(p)+sp(q)", {"sp(p+q)", "sp(p+q)", "s(u(2p)+u(2q))"}, 2, false,
       0, "(k~3,h~3) = (s(u(2p)+u(2q)), sp(p)+sp(q)) is not irreducible symmetric"},
      {4, "su(p+q+r+s)", "s(u(p)+u(q)+u(r)+u(s))",
       {"s(u(p+q)+u(r+s))", "s(u(p+r)+u(q+s))", "s(u(p+s)+u(q+r))"}, 4, true, 2,
       "exactly one parameter must vanish"},
      {5, "su(2p)", "su(p)", {"s(u(p)+u(p))", "s(u(p)+u(p))", "s(u(p)+u(p))"}, 1, false,
       0, "no pair (k~i,h~i) is irreducible"},
      {6, "so(p+q+r+s)", "so(p)+so(q)+so(r)+so(s)",
       {"so(p+q)+so(r+s)", "so(p+r)+so(q+s)", "so(p+s)+so(q+r)"}, 4, true, 1,
       "exactly one parameter must vanish"},
      {7, "so(2p)", "so(p)", {"so(p)+so(p)", "so(p)+so(p)", "u(p)"}, 1, false, 0,
       "(k~3,h~3) = (u(p), so(p)) is not irreducible"},
      {8, "so(2p+2q)", "u(p)+u(q)", {"so(2p)+so(2q)", "u(p+q)", "u(p+q)"}, 2, true, 5,
       "p = 1 or q = 1, with p+q >= 4"},
      {9, "so(4p)", "sp(p)", {"u(2p)", "u(2p)", "u(2p)"}, 1, false, 0,
       "no pair (k~i,h~i) is irreducible"},
      {10, "sp(p)", "so(p)", {"u(p)", "u(p)", "u(p)"}, 1, false, 0,
       "no pair (k~i,h~i) is irreducible"},
      {11, "sp(p+q)", "u(p)+u(q)", {"u(p+q)", "u(p+q)", "sp(p)+sp(q)"}, 2, false, 0,
       "(k~3,h~3) = (sp(p)+sp(q), u(p)+u(q)) is not irreducible"},
      {12, "sp(2p)", "sp(p)", {"u(2p)", "sp(p)+sp(p)", "sp(p)+sp(p)"}, 1, false, 0,
       "(k~1,h~1) = (u(2p), sp(p)) is not irreducible"},
      {13, "sp(p+q+r+s)", "sp(p)+sp(q)+sp(r)+sp(s)",
       {"sp(p+q)+sp(r+s)", "sp(p+r)+sp(q+s)", "sp(p+s)+sp(q+r)"}, 4, true, 3,
       "exactly one parameter must vanish"},
      {14, "e6", "2su(3)+R^2", {"su(6)+sp(1)", "su(6)+sp(1)", "su(6)+sp(1)"}, 0, false,
       0, "some (k~i,h~i) is not irreducible symmetric"},
      {15, "e6", "su(4)+2sp(1)+R", {"su(6)+sp(1)", "su(6)+sp(1)", "so(10)+R"}, 0, true,
       6, ""},
      {16, "e6", "su(5)+R^2", {"su(6)+sp(1)", "so(10)+R", "so(10)+R"}, 0, false, 0,
       "some (k~i,h~i) is not irreducible symmetric"},
      {17, "e6", "so(8)+R^2", {"so(10)+R", "so(10)+R", "so(10)+R"}, 0, true, 7, ""},
      {18, "e6", "sp(3)+sp(1)", {"su(6)+sp(1)", "f4", "sp(4)"}, 0, true, 8, ""},
      {19, "e6", "so(6)+R", {"su(6)+sp(1)", "sp(4)", "sp(4)"}, 0, false, 0,
       "some (k~i,h~i) is not irreducible symmetric"},
      {20, "e6", "so(9)", {"so(10)+R", "f4", "f4"}, 0, false, 0,
       "some (k~i,h~i) is not irreducible symmetric"},
      {21, "e6", "so(5)+so(5)", {"so(10)+R", "sp(4)", "sp(4)"}, 0, false, 0,
       "rejected; no machine-checkable reason recorded"},
      {22, "e7", "su(6)+R^2", {"so(12)+sp(1)", "so(12)+sp(1)", "so(12)+sp(1)"}, 0,
       false, 0, "some (k~i,h~i) is not irreducible symmetric"},
      {23, "e7", "so(8)+3sp(1)", {"so(12)+sp(1)", "so(12)+sp(1)", "so(12)+sp(1)"}, 0,
       true, 9, ""},
      {24, "e7", "so(10)+R^2", {"so(12)+sp(1)", "e6+R", "e6+R"}, 0, false, 0,
       "some (k~i,h~i) is not irreducible symmetric"},
      {25, "e7", "su(6)+sp(1)+R", {"so(12)+sp(1)", "e6+R", "su(8)"}, 0, true, 10, ""},
      {26, "e7", "su(4)+su(4)+R", {"so(12)+sp(1)", "su(8)", "su(8)"}, 0, false, 0,
       "some (k~i,h~i) is not irreducible symmetric"},
      {27, "e7", "f4", {"e6+R", "e6+R", "e6+R"}, 0, false, 0,
       "some (k~i,h~i) is not irreducible symmetric"},
      {28, "e7", "sp(4)", {"e6+R", "su(8)", "su(8)"}, 0, false, 0,
       "some (k~i,h~i) is not irreducible symmetric"},
      {29, "e7", "so(8)", {"su(8)", "su(8)", "su(8)"}, 0, true, 11, ""},
      {30, "e8", "e6+R^2", {"e7+sp(1)", "e7+sp(1)", "e7+sp(1)"}, 0, false, 0,
       "some (k~i,h~i) is not irreducible symmetric"},
      {31, "e8", "so(12)+2sp(1)", {"e7+sp(1)", "e7+sp(1)", "so(16)"}, 0, true, 12, ""},
      {32, "e8", "su(8)+R", {"e7+sp(1)", "so(16)", "so(16)"}, 0, false, 0,
       "some (k~i,h~i) is not irreducible symmetric"},
      {33, "e8", "so(8)+so(8)", {"so(16)", "so(16)", "so(16)"}, 0, true, 13, ""},
      {34, "f4", "su(3)+R^2", {"sp(3)+sp(1)", "sp(3)+sp(1)", "sp(3)+sp(1)"}, 0, false,
       0, "some (k~i,h~i) is not irreducible symmetric"},
      {35, "f4", "so(5)+2sp(1)", {"sp(3)+sp(1)", "sp(3)+sp(1)", "so(9)"}, 0, true, 14,
       ""},
      {36, "f4", "so(8)", {"so(9)", "so(9)", "so(9)"}, 0, true, 15, ""},
      {37, "g2", "R^2", {"sp(1)+sp(1)", "sp(1)+sp(1)", "sp(1)+sp(1)"}, 0, false, 0,
       "some (k~i,h~i) is not irreducible symmetric"},
  };
  return rows;
}

const SymTriple& table2_line(int line) {
  if (line < 1 || line > 37) throw InputError("table2 line must be 1..37");
  return table2()[static_cast<std::size_t>(line - 1)];
}

FilterOutcome filter_table2(const SymTriple& triple, const std::vector<int>& params) {
  if (static_cast<int>(params.size()) != triple.param_count)
    throw InputError("filter_table2: line " + std::to_string(triple.line) + " takes " +
                     std::to_string(triple.param_count) + " parameter(s)");
  FilterOutcome out;
  out.reason = triple.filter_note;

  switch (triple.line) {
    case 2: {
      int p = params[0];
      if (p < 1) throw InputError("filter_table2: p >= 1");
      if (p == 1) {
        out.reason = "degenerate at p = 1: module p3 is trivial";
        return out;
      }
      out.accepted = true;
      out.target_line = 4;
      out.mapped_params = {p};
      return out;
    }
    case 4:
    case 6:
    case 13: {
      int zeros = 0;
      std::vector<int> positive;
      for (int v : params) {
        if (v < 0) throw InputError("filter_table2: parameters must be >= 0");
        if (v == 0)
          ++zeros;
        else
          positive.push_back(v);
      }
      if (zeros >= 2)
        throw InputError("filter_table2: at least three parts must be positive");
      if (zeros == 0) {
        out.reason = "all four parts positive: each (k_i, h) splits into two symmetric pairs";
        return out;
      }
      out.accepted = true;
      out.target_line = triple.line == 4 ? 2 : (triple.line == 6 ? 1 : 3);
      out.mapped_params = positive;
      return out;
    }
    case 8: {
      int p = params[0], q = params[1];
      if (p < 1 || q < 1) throw InputError("filter_table2: p, q >= 1");
      if (p != 1 && q != 1) {
        out.reason = "(k~1,h~1) = (so(2p)+so(2q), u(p)+u(q)) is reducible unless p = 1 or q = 1";
        return out;
      }
      if (p + q < 4) {
        out.reason = "l = p+q below the table-1 row 5 range (l >= 4)";
        return out;
      }
      out.accepted = true;
      out.target_line = 5;
      out.mapped_params = {p + q};
      return out;
    }
    default: {
      for (int v : params)
        if (v < 1) throw InputError("filter_table2: parameters must be >= 1");
      if (triple.ever_accepts) {
        out.accepted = true;
        out.target_line = triple.target_line;
      }
      return out;
    }
  }
}

std::vector<CatalogEntry> enumerate_catalog() {
  std::vector<CatalogEntry> out;
  for (const WallachRecord& rec : table1()) {
    CatalogEntry e;
    e.record = &rec;
    switch (rec.scheme) {
      case ParamScheme::KLM: e.sample_params = {1, 1, 1}; break;
      case ParamScheme::L: e.sample_params = {rec.line == 4 ? 2 : 4}; break;
      case ParamScheme::None: break;
    }
    e.invariants = closed_form(rec, e.sample_params);
    out.push_back(std::move(e));
  }
  return out;
}

std::string catalog_json() {
  json t1 = json::array();
  for (const CatalogEntry& e : enumerate_catalog()) {
    json row;
    row["line"] = e.record->line;
    row["g"] = e.record->g_desc;
    row["h"] = e.record->h_desc;
    row["constraints"] = e.record->constraints;
    row["params"] = e.sample_params;
    row["d"] = {e.invariants.d[0], e.invariants.d[1], e.invariants.d[2]};
    json a_num = json::array(), a_den = json::array();
    for (const Rational& a : e.invariants.a) {
      a_num.push_back(boost::multiprecision::numerator(a).convert_to<long long>());
      a_den.push_back(boost::multiprecision::denominator(a).convert_to<long long>());
    }
    row["a_num"] = a_num;
    row["a_den"] = a_den;
    row["A"] = rational_str(e.invariants.A);
    t1.push_back(row);
  }
  json t2 = json::array();
  for (const SymTriple& s : table2()) {
    json row;
    row["line"] = s.line;
    row["g"] = s.g_desc;
    row["h"] = s.h_desc;
    row["k"] = {s.k_desc[0], s.k_desc[1], s.k_desc[2]};
    row["param_count"] = s.param_count;
    row["accepts"] = s.ever_accepts;
    row["target_line"] = s.target_line;
    row["note"] = s.filter_note;
    t2.push_back(row);
  }
  json root;
  root["table1"] = t1;
  root["table2"] = t2;
  return root.dump(2);
}

std::string catalog_text(bool include_table2) {
  std::ostringstream os;
  os << std::left;
  os << std::setw(4) << "N" << std::setw(12) << "g" << std::setw(22) << "h"
     << std::setw(14) << "params" << std::setw(15) << "d1,d2,d3"
     << "a1, a2, a3\n";
  os << std::string(88, '-') << "\n";
  for (const CatalogEntry& e : enumerate_catalog()) {
    std::string params;
    for (std::size_t i = 0; i < e.sample_params.size(); ++i)
      params += (i ? "," : "") + std::to_string(e.sample_params[i]);
    std::string dims = std::to_string(e.invariants.d[0]) + "," +
                       std::to_string(e.invariants.d[1]) + "," +
                       std::to_string(e.invariants.d[2]);
    os << std::setw(4) << e.record->line << std::setw(12) << e.record->g_desc
       << std::setw(22) << e.record->h_desc << std::setw(14)
       << (params.empty() ? "-" : params) << std::setw(15) << dims
       << rational_str(e.invariants.a[0]) << ", " << rational_str(e.invariants.a[1])
       << ", " << rational_str(e.invariants.a[2]) << "\n";
  }
  if (include_table2) {
    os << "\n";
    os << std::setw(4) << "N" << std::setw(14) << "g" << std::setw(24) << "h"
       << std::setw(9) << "verdict" << "note\n";
    os << std::string(88, '-') << "\n";
    for (const SymTriple& s : table2()) {
      std::string verdict = s.ever_accepts
                                ? ("-> " + std::to_string(s.target_line))
                                : "reject";
      os << std::setw(4) << s.line << std::setw(14) << s.g_desc << std::setw(24)
         << s.h_desc << std::setw(9) << verdict << s.filter_note << "\n";
    }
  }
  return os.str();
}

}  // namespace wallach

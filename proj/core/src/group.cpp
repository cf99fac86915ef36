#include "qg/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "qg/error.hpp"

namespace qg {

namespace {

std::string idx(std::initializer_list<int> v) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int x : v) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

void flag(VerifyReport& r, const char* name, const char* anchor, const std::string& failure) {
  CheckCase& c = r.add_flag(name, anchor, failure.empty());
  c.note = failure;
}

std::string check_shape(const std::vector<std::string>& labels,
                        const std::vector<std::vector<int>>& table) {
  const std::size_t d = labels.size();
  if (d == 0) return "empty group";
  if (table.size() != d) return "table has " + std::to_string(table.size()) + " rows, expected " +
                                std::to_string(d);
  for (std::size_t i = 0; i < d; ++i)
    if (table[i].size() != d)
      return "row " + std::to_string(i) + " has " + std::to_string(table[i].size()) + " entries";
  return {};
}

}  // namespace

VerifyReport validate_group(const std::string& name, const std::vector<std::string>& labels,
                            const std::vector<std::vector<int>>& table) {
  VerifyReport r;
  r.suite = "group";
  r.group = name;
  const std::string shape = check_shape(labels, table);
  flag(r, "group.shape", "table is d x d with d = |labels| >= 1", shape);
  if (!shape.empty()) return r;
  const int d = static_cast<int>(labels.size());

  std::string fail;
  std::set<std::string> seen;
  for (int i = 0; i < d && fail.empty(); ++i)
    if (!seen.insert(labels[i]).second) fail = "label '" + labels[i] + "' repeated at " + idx({i});
  flag(r, "group.labels_distinct", "labels are distinct", fail);

  fail.clear();
  for (int i = 0; i < d && fail.empty(); ++i)
    for (int j = 0; j < d && fail.empty(); ++j)
      if (table[i][j] < 0 || table[i][j] >= d)
        fail = "entry " + idx({i, j}) + " = " + std::to_string(table[i][j]) + " out of range";
  flag(r, "group.closure", "table[i][j] in 0..d-1", fail);
  if (!fail.empty()) return r;

  fail.clear();
  for (int i = 0; i < d && fail.empty(); ++i) {
    std::vector<int> cnt(d, 0);
    for (int j = 0; j < d; ++j)
      if (++cnt[table[i][j]] > 1 && fail.empty())
        fail = "row " + std::to_string(i) + " repeats " + std::to_string(table[i][j]);
  }
  flag(r, "group.latin_rows", "every row is a permutation", fail);

  fail.clear();
  for (int j = 0; j < d && fail.empty(); ++j) {
    std::vector<int> cnt(d, 0);
    for (int i = 0; i < d; ++i)
      if (++cnt[table[i][j]] > 1 && fail.empty())
        fail = "column " + std::to_string(j) + " repeats " + std::to_string(table[i][j]);
  }
  flag(r, "group.latin_columns", "every column is a permutation", fail);

  fail.clear();
  for (int j = 0; j < d && fail.empty(); ++j)
    if (table[0][j] != j || table[j][0] != j)
      fail = "element 0 is not an identity at " + idx({j});
  flag(r, "group.identity", "table[0][j] = j = table[j][0]", fail);

  fail.clear();
  for (int i = 0; i < d && fail.empty(); ++i)
    for (int j = 0; j < d && fail.empty(); ++j)
      for (int k = 0; k < d && fail.empty(); ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          fail = "associativity fails at triple " + idx({i, j, k});
  flag(r, "group.associativity", "(g_i g_j) g_k = g_i (g_j g_k)", fail);

  fail.clear();
  for (int i = 0; i < d && fail.empty(); ++i) {
    int found = -1;
    for (int j = 0; j < d; ++j)
      if (table[i][j] == 0 && table[j][i] == 0) found = j;
    if (found < 0) fail = "no two-sided inverse for " + idx({i});
  }
  flag(r, "group.inverses", "g_i g_i^-1 = e = g_i^-1 g_i", fail);
  return r;
}

VerifyReport validate_group(const FiniteGroup& g) {
  return validate_group(g.name(), g.labels(), g.table());
}

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels,
                         std::vector<std::vector<int>> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  const VerifyReport r = validate_group(name_, labels_, table_);
  for (const CheckCase& c : r.cases)
    if (!c.pass) throw GroupError(name_ + ": " + c.name + ": " + c.note);
  const int d = order();
  inverse_.assign(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (table_[i][j] == 0) inverse_[i] = j;
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j)
      if (table_[i][j] != table_[j][i]) return false;
  return true;
}

int max_group_order() {
  if (const char* env = std::getenv("QG_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000000) return static_cast<int>(v);
  }
  return 64;
}

namespace {

std::string power_label(const std::string& gen, int k) {
  if (k == 0) return "";
  if (k == 1) return gen;
  return gen + "^" + std::to_string(k);
}

long long spec_order(const GroupSpec& s) {
  switch (s.family) {
    case GroupFamily::cyclic: return s.n;
    case GroupFamily::dihedral: return 2LL * s.n;
    case GroupFamily::dicyclic: return 4LL * s.n;
    case GroupFamily::symmetric: {
      long long f = 1;
      for (int k = 2; k <= s.n; ++k) {
        f *= k;
        if (f > (1LL << 40)) return f;
      }
      return f;
    }
    case GroupFamily::direct_product: {
      long long o = 1;
      for (const GroupSpec& f : s.factors) {
        o *= spec_order(f);
        if (o > (1LL << 40)) return o;
      }
      return o;
    }
  }
  return 0;
}

FiniteGroup cyclic(int n) {
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : power_label("a", i);
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return FiniteGroup("Z" + std::to_string(n), labels, t);
}

// r^k s^f at index f·n + k
FiniteGroup dihedral(int n) {
  const int d = 2 * n;
  std::vector<std::string> labels(d);
  std::vector<std::vector<int>> t(d, std::vector<int>(d));
  for (int i = 0; i < d; ++i) {
    const int a = i % n, f = i / n;
    const std::string l = power_label("r", a) + (f ? "s" : "");
    labels[i] = l.empty() ? "e" : l;
    for (int j = 0; j < d; ++j) {
      const int b = j % n, g = j / n;
      const int k = ((a + (f ? -b : b)) % n + n) % n;
      t[i][j] = ((f + g) % 2) * n + k;
    }
  }
  return FiniteGroup("D" + std::to_string(n), labels, t);
}

// a^k x^f at index f·2n + k, with a^{2n} = 1, x² = a^n, x a x⁻¹ = a⁻¹
FiniteGroup dicyclic(int n) {
  const int m = 2 * n, d = 4 * n;
  std::vector<std::string> labels(d);
  std::vector<std::vector<int>> t(d, std::vector<int>(d));
  for (int i = 0; i < d; ++i) {
    const int k = i % m, f = i / m;
    const std::string l = power_label("a", k) + (f ? "x" : "");
    labels[i] = l.empty() ? "e" : l;
    for (int j = 0; j < d; ++j) {
      const int q = j % m, g = j / m;
      int e, h;
      if (f == 0) {
        e = k + q;
        h = g;
      } else if (g == 0) {
        e = k - q;
        h = 1;
      } else {
        e = k - q + n;
        h = 0;
      }
      t[i][j] = h * m + ((e % m) + m) % m;
    }
  }
  return FiniteGroup(n == 2 ? "Q8" : "Dic" + std::to_string(n), labels, t);
}

FiniteGroup symmetric(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int d = static_cast<int>(perms.size());
  std::vector<std::string> labels(d);
  for (int i = 0; i < d; ++i) {
    std::string l;
    for (int x : perms[i]) l += std::to_string(x + 1);
    labels[i] = n == 0 ? "e" : l;
  }
  std::vector<std::vector<int>> t(d, std::vector<int>(d));
  std::vector<int> c(n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < n; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup("S" + std::to_string(n), labels, t);
}

FiniteGroup product(const std::vector<FiniteGroup>& fs) {
  std::vector<int> orders;
  int d = 1;
  std::string name;
  for (const FiniteGroup& f : fs) {
    orders.push_back(f.order());
    d *= f.order();
    name += (name.empty() ? "" : "x") + f.name();
  }
  auto digits = [&](int i) {
    std::vector<int> v(fs.size());
    for (int k = static_cast<int>(fs.size()) - 1; k >= 0; --k) {
      v[k] = i % orders[k];
      i /= orders[k];
    }
    return v;
  };
  std::vector<std::string> labels(d);
  std::vector<std::vector<int>> t(d, std::vector<int>(d));
  for (int i = 0; i < d; ++i) {
    const auto a = digits(i);
    std::string l = "(";
    for (std::size_t k = 0; k < fs.size(); ++k) l += (k ? "," : "") + fs[k].labels()[a[k]];
    labels[i] = l + ")";
    for (int j = 0; j < d; ++j) {
      const auto b = digits(j);
      int r = 0;
      for (std::size_t k = 0; k < fs.size(); ++k) r = r * orders[k] + fs[k].mul(a[k], b[k]);
      t[i][j] = r;
    }
  }
  return FiniteGroup(name, labels, t);
}

FiniteGroup build_unchecked_order(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::cyclic: return cyclic(spec.n);
    case GroupFamily::dihedral: return dihedral(spec.n);
    case GroupFamily::dicyclic: return dicyclic(spec.n);
    case GroupFamily::symmetric: return symmetric(spec.n);
    case GroupFamily::direct_product: {
      std::vector<FiniteGroup> fs;
      for (const GroupSpec& f : spec.factors) fs.push_back(build_unchecked_order(f));
      return product(fs);
    }
  }
  throw GroupError("unsupported group family");
}

void check_params(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::cyclic:
    case GroupFamily::dihedral:
    case GroupFamily::dicyclic:
    case GroupFamily::symmetric:
      if (spec.n < 1) throw GroupError("parameter n must be >= 1, got " + std::to_string(spec.n));
      return;
    case GroupFamily::direct_product:
      if (spec.factors.empty()) throw GroupError("direct product needs at least one factor");
      for (const GroupSpec& f : spec.factors) check_params(f);
      return;
  }
  throw GroupError("unsupported group family");
}

}  // namespace

FiniteGroup build_standard(const GroupSpec& spec) { return build_standard(spec, max_group_order()); }

FiniteGroup build_standard(const GroupSpec& spec, int max_order) {
  check_params(spec);
  const long long o = spec_order(spec);
  if (o > max_order)
    throw GroupError("group order " + std::to_string(o) + " exceeds the maximum " +
                     std::to_string(max_order));
  return build_unchecked_order(spec);
}

GroupFamily parse_family(const std::string& text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "cyclic") return GroupFamily::cyclic;
  if (s == "dihedral") return GroupFamily::dihedral;
  if (s == "symmetric") return GroupFamily::symmetric;
  if (s == "dicyclic") return GroupFamily::dicyclic;
  if (s == "direct_product" || s == "product") return GroupFamily::direct_product;
  throw GroupError("unsupported group family '" + text + "'");
}

namespace {

int parse_positive(const std::string& s, const std::string& whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw GroupError("cannot parse group spec '" + whole + "'");
  if (s.size() > 6) throw GroupError("parameter overflow in '" + whole + "'");
  return std::stoi(s);
}

GroupSpec parse_factor(const std::string& f, const std::string& whole) {
  if (const auto colon = f.find(':'); colon != std::string::npos) {
    const GroupFamily fam = parse_family(f.substr(0, colon));
    if (fam == GroupFamily::direct_product) throw GroupError("nested product in '" + whole + "'");
    return {fam, parse_positive(f.substr(colon + 1), whole), {}};
  }
  if (f == "trivial" || f == "e") return GroupSpec::cyclic(1);
  if (f == "Q8") return GroupSpec::dicyclic(2);
  if (f.rfind("Dic", 0) == 0) return GroupSpec::dicyclic(parse_positive(f.substr(3), whole));
  if (f.size() >= 2) {
    const std::string rest = f.substr(1);
    switch (f[0]) {
      case 'Z': case 'C': return GroupSpec::cyclic(parse_positive(rest, whole));
      case 'D': return GroupSpec::dihedral(parse_positive(rest, whole));
      case 'S': return GroupSpec::symmetric(parse_positive(rest, whole));
      default: break;
    }
  }
  throw GroupError("cannot parse group spec '" + whole + "'");
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == 'x' || c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1) return parse_factor(parts[0], text);
  std::vector<GroupSpec> fs;
  for (const std::string& p : parts) fs.push_back(parse_factor(p, text));
  return GroupSpec::product(std::move(fs));
}

}  // namespace qg

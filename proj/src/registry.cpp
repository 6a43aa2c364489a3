#include "antiram/registry.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace antiram {

extern const char* kBuiltinRegistryJson;  // generated from data/registry.json

namespace {

using nlohmann::json;

// ex(n,C4) for n = 1..21 and ex(n,{C3,C4}) for n = 1..10; the prefixes up
// to n = 8 are re-derived by brute force in the test suite.
constexpr long long kExC4[] = {0,  1,  3,  4,  6,  7,  9,  11, 13, 16, 18,
                               21, 24, 27, 30, 33, 36, 39, 42, 46, 50};
constexpr long long kExC3C4[] = {0, 1, 2, 3, 5, 6, 8, 10, 12, 15};

Formula formula_from_json(const json& j);

Formula leaf_formula(Formula::Op op) {
  Formula f;
  f.op = op;
  return f;
}

Formula args_formula(Formula::Op op, const json& j) {
  Formula f;
  f.op = op;
  for (const auto& a : j.at("args")) f.args.push_back(formula_from_json(a));
  return f;
}

Formula formula_from_json(const json& j) {
  if (j.is_number_integer()) {
    Formula f;
    f.op = Formula::Op::Const;
    f.value = j.get<long long>();
    return f;
  }
  std::string op = j.at("op").get<std::string>();
  if (op == "int") {
    Formula f;
    f.op = Formula::Op::Const;
    f.value = j.at("value").get<long long>();
    return f;
  }
  if (op == "n") return leaf_formula(Formula::Op::N);
  if (op == "add") return args_formula(Formula::Op::Add, j);
  if (op == "sub") return args_formula(Formula::Op::Sub, j);
  if (op == "mul") return args_formula(Formula::Op::Mul, j);
  if (op == "floordiv" || op == "ceildiv") {
    Formula f;
    f.op = op == "floordiv" ? Formula::Op::FloorDiv : Formula::Op::CeilDiv;
    f.value = j.at("den").get<long long>();
    f.args.push_back(formula_from_json(j.at("num")));
    return f;
  }
  if (op == "ex") {
    Formula f;
    f.op = Formula::Op::Ex;
    f.value = j.at("k").get<long long>();
    return f;
  }
  if (op == "ex_c4") return leaf_formula(Formula::Op::ExC4);
  if (op == "ex_c3c4") return leaf_formula(Formula::Op::ExC3C4);
  if (op == "ceil_sqrt") {
    Formula f;
    f.op = Formula::Op::CeilSqrt;
    f.args.push_back(formula_from_json(j.at("arg")));
    return f;
  }
  throw error("unknown formula op: " + op);
}

}  // namespace

std::optional<long long> eval_formula(const Formula& f, long long n) {
  using Op = Formula::Op;
  auto arg = [&](size_t i) { return eval_formula(f.args.at(i), n); };
  switch (f.op) {
    case Op::Const: return f.value;
    case Op::N: return n;
    case Op::Add: {
      long long s = 0;
      for (size_t i = 0; i < f.args.size(); ++i) {
        auto v = arg(i);
        if (!v) return std::nullopt;
        s += *v;
      }
      return s;
    }
    case Op::Sub: {
      auto a = arg(0), b = arg(1);
      if (!a || !b) return std::nullopt;
      return *a - *b;
    }
    case Op::Mul: {
      long long s = 1;
      for (size_t i = 0; i < f.args.size(); ++i) {
        auto v = arg(i);
        if (!v) return std::nullopt;
        s *= *v;
      }
      return s;
    }
    case Op::FloorDiv: {
      auto a = arg(0);
      if (!a) return std::nullopt;
      long long q = *a / f.value, r = *a % f.value;
      return (r != 0 && (r < 0) != (f.value < 0)) ? q - 1 : q;
    }
    case Op::CeilDiv: {
      auto a = arg(0);
      if (!a) return std::nullopt;
      long long q = *a / f.value, r = *a % f.value;
      return (r != 0 && (r < 0) == (f.value < 0)) ? q + 1 : q;
    }
    case Op::Ex: return turan_ex(n, static_cast<int>(f.value));
    case Op::ExC4:
      if (n < 1 || n > static_cast<long long>(std::size(kExC4)))
        return std::nullopt;
      return kExC4[n - 1];
    case Op::ExC3C4:
      if (n < 1 || n > static_cast<long long>(std::size(kExC3C4)))
        return std::nullopt;
      return kExC3C4[n - 1];
    case Op::CeilSqrt: {
      auto a = arg(0);
      if (!a || *a < 0) return std::nullopt;
      long long r = static_cast<long long>(std::sqrt(static_cast<double>(*a)));
      while (r * r < *a) ++r;
      while (r > 0 && (r - 1) * (r - 1) >= *a) --r;
      return r;
    }
  }
  return std::nullopt;
}

Formula parse_formula(const std::string& json_text) {
  return formula_from_json(json::parse(json_text));
}

Registry Registry::load_text(const std::string& json_text) {
  Registry reg;
  json doc = json::parse(json_text);
  for (const auto& j : doc.at("entries")) {
    Entry e;
    e.pattern = j.at("pattern").get<std::string>();
    auto kind = phi_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw error("registry entry with unknown kind");
    e.kind = *kind;
    if (j.contains("exact")) e.exact = formula_from_json(j.at("exact"));
    if (j.contains("lower")) e.lower = formula_from_json(j.at("lower"));
    if (j.contains("upper")) e.upper = formula_from_json(j.at("upper"));
    e.n_min = j.value("n_min", 0LL);
    e.caveat = j.value("caveat", false);
    e.asymptotic = j.value("asymptotic", false);
    if (j.contains("small_values"))
      for (auto& [k, v] : j.at("small_values").items())
        e.small_values[std::stoll(k)] = v.get<long long>();
    e.source = j.value("source", "");
    if (!e.exact && !e.lower && !e.upper && e.small_values.empty())
      throw error("registry entry carries no formula: " + e.pattern);
    reg.entries_.push_back(std::move(e));
  }
  return reg;
}

Registry Registry::load_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw error("cannot open registry file: " + path);
  std::string text;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
  std::fclose(f);
  return load_text(text);
}

const Registry& Registry::builtin() {
  static Registry reg = load_text(kBuiltinRegistryJson);
  return reg;
}

std::vector<std::string> Registry::patterns() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (std::find(out.begin(), out.end(), e.pattern) == out.end())
      out.push_back(e.pattern);
  return out;
}

namespace {

const std::map<std::string, std::string>& pattern_aliases() {
  static const std::map<std::string, std::string> aliases = {
      {"K3", "C3"}, {"K1,1", "P2"}, {"K1,2", "P3"}, {"K2,2", "C4"},
      {"union:P3+P2", "P3+P2"}, {"union:K1,3+P2", "K1,3+P2"},
      {"union:P3+2P2", "P3+2P2"}, {"union:C3+P2", "C3+P2"},
      {"union:P4+P2", "P4+P2"}};
  return aliases;
}

std::optional<int> star_degree(const std::string& pattern) {
  if (pattern.rfind("K1,", 0) != 0) return std::nullopt;
  std::string rest = pattern.substr(3);
  if (rest.empty() ||
      !std::all_of(rest.begin(), rest.end(),
                    [](unsigned char c) { return std::isdigit(c); }))
    return std::nullopt;
  return std::stoi(rest);
}

}  // namespace

KnownValue Registry::star_rule(PhiKind kind, int r, long long n) const {
  KnownValue kv;
  kv.source = "star family rule";
  bool odd = r % 2 == 1;
  switch (kind) {
    case PhiKind::AR:
    case PhiKind::LR: {
      // floor(n(r-2)/2) + floor(n/(n-r+2)) + eps, eps in {0,1};
      // eps = 1 is known when r = n-1.
      if (n < r + 1 || n - r + 2 <= 0) return kv;
      long long base = n * (r - 2) / 2 + n / (n - r + 2);
      kv.small_n_caveat = true;
      if (r == n - 1) {
        kv.status = KnownValue::Status::Exact;
        kv.value = base + 1;
      } else {
        kv.status = KnownValue::Status::Bounds;
        kv.lower = base;
        kv.upper = base + 1;
      }
      return kv;
    }
    case PhiKind::OD:
      if (odd) {
        if (n >= r + 1) { kv.status = KnownValue::Status::Exact; kv.value = 1; }
      } else if (n >= 2 * r) {
        kv.status = KnownValue::Status::Exact;
        kv.value = 2;
      }
      return kv;
    case PhiKind::SOD:
    case PhiKind::SP:
    case PhiKind::CP:
      if (n >= 2 * r) {
        kv.status = KnownValue::Status::Exact;
        kv.value = odd ? 1 : 2;
      }
      return kv;
    case PhiKind::CF:
      if (n >= 2 * r - 2) {
        kv.status = KnownValue::Status::Exact;
        kv.value = 2;
      }
      return kv;
    case PhiKind::LP:
      if (odd) {
        if (n >= 2 * r) { kv.status = KnownValue::Status::Exact; kv.value = 1; }
      } else {
        kv.status = KnownValue::Status::Exact;
        kv.value = 1;
        kv.asymptotic = true;  // bipartite, threshold unknown
      }
      return kv;
  }
  return kv;
}

KnownValue Registry::known(PhiKind kind, const std::string& pattern,
                           long long n) const {
  std::string key = pattern;
  if (auto it = pattern_aliases().find(key); it != pattern_aliases().end())
    key = it->second;
  for (const auto& e : entries_) {
    if (e.pattern != key || e.kind != kind) continue;
    KnownValue kv;
    kv.source = e.source;
    kv.small_n_caveat = e.caveat;
    kv.asymptotic = e.asymptotic;
    if (auto it = e.small_values.find(n); it != e.small_values.end()) {
      kv.status = KnownValue::Status::Exact;
      kv.value = it->second;
      kv.asymptotic = false;
      return kv;
    }
    if (n < e.n_min) return kv;  // Unknown: never extrapolate below validity
    if (e.exact) {
      if (auto v = eval_formula(*e.exact, n)) {
        kv.status = KnownValue::Status::Exact;
        kv.value = *v;
      }
      return kv;
    }
    auto lo = e.lower ? eval_formula(*e.lower, n) : std::nullopt;
    auto hi = e.upper ? eval_formula(*e.upper, n) : std::nullopt;
    if (lo || hi) {
      kv.status = KnownValue::Status::Bounds;
      kv.lower = lo;
      kv.upper = hi;
    }
    return kv;
  }
  if (auto r = star_degree(key); r && *r >= 3) return star_rule(kind, *r, n);
  try {
    (void)parse_graph(key);
  } catch (const error&) {
    throw error("unknown pattern: " + pattern);
  }
  return KnownValue{};  // in the catalog, but nothing is claimed
}

long long cf_upper_bound(long long p, long long n) {
  if (p < 2) throw error("cf_upper_bound needs p >= 2");
  if (n < p) throw error("cf_upper_bound needs n >= p");
  return (p - 2) * n - (p * p) / 2 + p + 1;
}

const std::vector<std::pair<PhiKind, PhiKind>>& hierarchy_edges() {
  using K = PhiKind;
  static const std::vector<std::pair<K, K>> edges = {
      {K::AR, K::LR},  {K::LR, K::SOD}, {K::LR, K::CF}, {K::SOD, K::SP},
      {K::SOD, K::OD}, {K::CF, K::OD},  {K::SP, K::CP}, {K::SP, K::LP}};
  return edges;
}

std::vector<std::string> check_hierarchy(
    const std::map<PhiKind, long long>& values) {
  // Transitive closure over the eight nodes.
  bool reach[kPhiKindCount][kPhiKindCount] = {};
  for (auto [a, b] : hierarchy_edges())
    reach[static_cast<int>(a)][static_cast<int>(b)] = true;
  for (int k = 0; k < kPhiKindCount; ++k)
    for (int i = 0; i < kPhiKindCount; ++i)
      for (int j = 0; j < kPhiKindCount; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  std::vector<std::string> violations;
  for (int i = 0; i < kPhiKindCount; ++i)
    for (int j = 0; j < kPhiKindCount; ++j) {
      if (!reach[i][j]) continue;
      auto a = values.find(static_cast<PhiKind>(i));
      auto b = values.find(static_cast<PhiKind>(j));
      if (a == values.end() || b == values.end()) continue;
      if (a->second < b->second)
        violations.push_back(std::string(to_string(a->first)) + "->" +
                             std::string(to_string(b->first)));
    }
  return violations;
}

}  // namespace antiram

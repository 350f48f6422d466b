#include "dualhfk/knot_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hfk {

std::string ValidationReport::to_string() const {
  std::string out;
  for (auto& v : violations) out += v + "\n";
  return out;
}

int KnotComplex::index_of(const std::string& symbol) const {
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i] == symbol) return int(i);
  return -1;
}

void KnotComplex::sort_arrows() { std::sort(arrows.begin(), arrows.end()); }

ValidationReport KnotComplex::validate() const {
  ValidationReport rep;
  auto say = [&](const std::string& s) { rep.violations.push_back(s); };

  std::size_t n = symbols.size();
  if (alexander.size() != n) say("alexander gradings do not match symbol count");
  if (flip.size() != n) say("flip not an involution on all symbols");
  if (!rep.ok()) return rep;

  for (std::size_t x = 0; x < n; ++x) {
    int fx = flip[x];
    if (fx < 0 || std::size_t(fx) >= n || std::size_t(flip[fx]) != x) {
      say("flip not an involution on all symbols");
      break;
    }
  }
  if (!rep.ok()) return rep;

  for (std::size_t x = 0; x < n; ++x)
    if (alexander[flip[x]] != -alexander[x])
      say("flip does not negate the Alexander grading at " + symbols[x]);

  std::set<KnotArrow> arrow_set;
  for (auto& ar : arrows) {
    if (ar.src < 0 || std::size_t(ar.src) >= n || ar.dst < 0 || std::size_t(ar.dst) >= n) {
      say("arrow endpoint outside the symbol list");
      continue;
    }
    if (ar.a < 0 || ar.b < 0) say("negative drop on arrow " + symbols[ar.src] + " -> " + symbols[ar.dst]);
    if (ar.a == 0 && ar.b == 0)
      say("not reduced: arrow " + symbols[ar.src] + " -> " + symbols[ar.dst] + " has drop (0,0)");
    if (alexander[ar.src] - alexander[ar.dst] != ar.a - ar.b) {
      std::ostringstream os;
      os << "grading rule violated on " << symbols[ar.src] << " -> " << symbols[ar.dst]
         << ": A(x)-A(y) = " << alexander[ar.src] - alexander[ar.dst] << " but a-b = "
         << ar.a - ar.b;
      say(os.str());
    }
    if (!arrow_set.insert(ar).second)
      say("duplicate arrow " + symbols[ar.src] + " -> " + symbols[ar.dst]);
  }
  if (!rep.ok()) return rep;

  // Mirror symmetry of the arrow set under the flip.
  for (auto& ar : arrows) {
    KnotArrow m{flip[ar.src], flip[ar.dst], ar.b, ar.a};
    if (!arrow_set.count(m))
      say("arrow " + symbols[ar.src] + " -> " + symbols[ar.dst] +
          " has no mirror under the flip");
  }

  // d^2 = 0 on the lifted complex: two-step paths with equal total drop
  // must cancel in pairs.
  std::map<std::tuple<int, int, int, int>, int> paths;
  for (auto& a1 : arrows)
    for (auto& a2 : arrows)
      if (a1.dst == a2.src)
        paths[{a1.src, a2.dst, a1.a + a2.a, a1.b + a2.b}] ^= 1;
  for (auto& [key, parity] : paths)
    if (parity) {
      auto [x, z, da, db] = key;
      std::ostringstream os;
      os << "d^2 != 0: odd number of paths " << symbols[x] << " => " << symbols[z]
         << " with total drop (" << da << "," << db << ")";
      say(os.str());
    }
  return rep;
}

void KnotComplex::require_valid() const {
  auto rep = validate();
  if (!rep.ok()) throw CfkSemanticError(rep.to_string());
}

int KnotComplex::genus() const {
  int g = 0;
  for (int a : alexander) g = std::max(g, a);
  return g;
}

bool HomologySphereContext::valid() const {
  return p >= 1 && q >= 1 && std::gcd(p, q) == 1;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& s, int line) {
  std::size_t pos = 0;
  int v;
  try {
    v = std::stoi(s, &pos);
  } catch (...) {
    throw CfkSyntaxError(line, "expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) throw CfkSyntaxError(line, "expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

KnotComplex parse_cfk(const std::string& text, const std::string& name) {
  KnotComplex k;
  k.name = name;
  struct PendingArrow {
    std::string src, dst;
    int a, b, line;
  };
  struct PendingFlip {
    std::string x, y;
    int line;
  };
  std::vector<PendingArrow> arrs;
  std::vector<PendingFlip> flips;

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "gen") {
      if (toks.size() != 3 || toks[2].rfind("A=", 0) != 0)
        throw CfkSyntaxError(lineno, "expected 'gen <name> A=<int>'");
      if (k.index_of(toks[1]) >= 0)
        throw CfkSyntaxError(lineno, "duplicate generator '" + toks[1] + "'");
      k.symbols.push_back(toks[1]);
      k.alexander.push_back(parse_int(toks[2].substr(2), lineno));
    } else if (toks[0] == "arr") {
      if (toks.size() != 5) throw CfkSyntaxError(lineno, "expected 'arr <src> <dst> <a> <b>'");
      arrs.push_back({toks[1], toks[2], parse_int(toks[3], lineno), parse_int(toks[4], lineno), lineno});
    } else if (toks[0] == "flip") {
      if (toks.size() != 3) throw CfkSyntaxError(lineno, "expected 'flip <x> <y>'");
      flips.push_back({toks[1], toks[2], lineno});
    } else {
      throw CfkSyntaxError(lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (k.symbols.empty()) throw CfkSyntaxError(lineno, "empty file: no generators");

  std::set<KnotArrow> arrow_set;
  for (auto& pa : arrs) {
    int s = k.index_of(pa.src), d = k.index_of(pa.dst);
    if (s < 0) throw CfkSemanticError("arrow references unknown symbol '" + pa.src + "'");
    if (d < 0) throw CfkSemanticError("arrow references unknown symbol '" + pa.dst + "'");
    if (pa.a < 0 || pa.b < 0) throw CfkSemanticError("negative drop on arrow " + pa.src + " -> " + pa.dst);
    KnotArrow ar{s, d, pa.a, pa.b};
    if (!arrow_set.insert(ar).second) arrow_set.erase(ar);  // mod 2
  }
  k.arrows.assign(arrow_set.begin(), arrow_set.end());

  k.flip.assign(k.symbols.size(), -1);
  for (auto& pf : flips) {
    int x = k.index_of(pf.x), y = k.index_of(pf.y);
    if (x < 0) throw CfkSemanticError("flip references unknown symbol '" + pf.x + "'");
    if (y < 0) throw CfkSemanticError("flip references unknown symbol '" + pf.y + "'");
    if ((k.flip[x] >= 0 && k.flip[x] != y) || (k.flip[y] >= 0 && k.flip[y] != x))
      throw CfkSemanticError("conflicting flip declarations at '" + pf.x + "'");
    k.flip[x] = y;
    k.flip[y] = x;
  }
  for (std::size_t x = 0; x < k.symbols.size(); ++x)
    if (k.flip[x] < 0) throw CfkSemanticError("flip not an involution on all symbols");

  k.require_valid();
  return k;
}

std::string serialize_cfk(const KnotComplex& k) {
  // Canonical order: descending Alexander grading, then name.
  std::vector<int> order(k.symbols.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (k.alexander[a] != k.alexander[b]) return k.alexander[a] > k.alexander[b];
    return k.symbols[a] < k.symbols[b];
  });

  std::ostringstream os;
  for (int s : order) os << "gen " << k.symbols[s] << " A=" << k.alexander[s] << "\n";

  std::vector<std::tuple<std::string, std::string, int, int>> arrs;
  for (auto& ar : k.arrows)
    arrs.emplace_back(k.symbols[ar.src], k.symbols[ar.dst], ar.a, ar.b);
  std::sort(arrs.begin(), arrs.end());
  for (auto& [s, d, a, b] : arrs) os << "arr " << s << " " << d << " " << a << " " << b << "\n";

  std::set<std::pair<std::string, std::string>> flips;
  for (std::size_t x = 0; x < k.symbols.size(); ++x) {
    auto a = k.symbols[x], b = k.symbols[k.flip[x]];
    flips.insert({std::min(a, b), std::max(a, b)});
  }
  for (auto& [x, y] : flips) os << "flip " << x << " " << y << "\n";
  return os.str();
}

KnotComplex staircase(const std::vector<int>& delta_coeffs) {
  auto reject = [](const std::string& why) {
    throw CfkSemanticError("staircase: " + why +
                           " (use the figure8 builtin or a .cfk file for thin knots)");
  };
  std::size_t n = delta_coeffs.size();
  if (n == 0 || n % 2 == 0) reject("coefficient list must have odd length");
  for (std::size_t i = 0; i < n; ++i)
    if (delta_coeffs[i] != delta_coeffs[n - 1 - i]) reject("coefficient list must be symmetric");

  int top = int(n - 1) / 2;  // exponent of the first entry
  std::vector<int> exps;     // exponents of the nonzero coefficients
  int expect = +1;
  for (std::size_t i = 0; i < n; ++i) {
    int c = delta_coeffs[i];
    if (c == 0) continue;
    if (c != 1 && c != -1) reject("coefficients must be +-1");
    if (c != expect) reject("nonzero coefficients must alternate starting from +1");
    expect = -expect;
    exps.push_back(top - int(i));
  }
  if (exps.empty()) reject("no nonzero coefficients");
  if (exps.size() % 2 == 0) reject("nonzero coefficients must start and end with +1");
  if (delta_coeffs.front() == 0) reject("leading coefficient must be +1");

  KnotComplex k;
  k.name = "staircase";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    std::string nm = exps.size() <= 26 ? std::string(1, char('a' + i))
                                       : "s" + std::to_string(i);
    k.symbols.push_back(nm);
    k.alexander.push_back(exps[i]);
  }
  // Each -1 symbol maps to its two +1 neighbours, drops matching the gaps.
  for (std::size_t i = 1; i + 1 < exps.size(); i += 2) {
    int gap_left = exps[i - 1] - exps[i];
    int gap_right = exps[i] - exps[i + 1];
    k.arrows.push_back({int(i), int(i - 1), 0, gap_left});
    k.arrows.push_back({int(i), int(i + 1), gap_right, 0});
  }
  k.sort_arrows();
  for (std::size_t i = 0; i < exps.size(); ++i)
    k.flip.push_back(int(exps.size() - 1 - i));
  k.require_valid();
  return k;
}

KnotComplex builtin_knot(const std::string& name) {
  KnotComplex k;
  if (name == "unknot") {
    k.name = name;
    k.symbols = {"a"};
    k.alexander = {0};
    k.flip = {0};
  } else if (name == "trefoil-rh") {
    k = staircase({1, -1, 1});
    k.name = name;
  } else if (name == "trefoil-lh") {
    // Mirror of the staircase: arrows run into the middle symbol.
    k.name = name;
    k.symbols = {"a", "b", "c"};
    k.alexander = {1, 0, -1};
    k.arrows = {{0, 1, 1, 0}, {2, 1, 0, 1}};
    k.flip = {2, 1, 0};
  } else if (name == "figure8") {
    // Unknot summand plus one box.
    k.name = name;
    k.symbols = {"u", "a", "b", "c", "d"};
    k.alexander = {0, 0, 1, -1, 0};
    k.arrows = {{1, 2, 0, 1}, {1, 3, 1, 0}, {2, 4, 1, 0}, {3, 4, 0, 1}};
    k.flip = {0, 1, 3, 2, 4};
  } else if (name == "t25") {
    k = staircase({1, -1, 1, -1, 1});
    k.name = name;
  } else {
    throw std::invalid_argument("unknown builtin knot '" + name + "'");
  }
  k.sort_arrows();
  k.require_valid();
  return k;
}

std::vector<std::string> builtin_names() {
  return {"unknot", "trefoil-rh", "trefoil-lh", "figure8", "t25"};
}

}  // namespace hfk

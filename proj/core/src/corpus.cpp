#include "nacent/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nacent/errors.hpp"
#include "nacent/predicates.hpp"

namespace nacent {

namespace {

using json = nlohmann::json;

struct Signature {
  std::vector<std::string> params;
  std::size_t operands = 0;
  bool action = false;
};

const std::map<std::string, Signature>& signatures() {
  static const std::map<std::string, Signature> table = {
      {"cyclic", {{"n"}}},
      {"dihedral", {{"n"}}},
      {"dicyclic", {{"n"}}},
      {"symmetric", {{"n"}}},
      {"alternating", {{"n"}}},
      {"heisenberg", {{"p"}}},
      {"heisenberg_frobenius", {{"p", "q"}}},
      {"agl1", {{"q"}}},
      {"sl23", {{}}},
      {"direct_product", {{}, 2}},
      {"semidirect_product", {{}, 2, true}},
  };
  return table;
}

const Signature& signature_of(const std::string& name) {
  const auto it = signatures().find(name);
  if (it == signatures().end()) throw InvalidParams("unknown constructor '" + name + "'");
  return it->second;
}

template <typename Mul>
FiniteGroup tabulate(std::size_t n, Mul&& mul) {
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>(mul(i, j));
  return FiniteGroup::from_cayley_table(std::move(table), n, Validation::kAuto);
}

std::uint64_t mult_order(std::uint64_t l, std::uint64_t p) {
  std::uint64_t k = 1;
  for (std::uint64_t v = l % p; v != 1; v = v * l % p) ++k;
  return k;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParams(message);
}

std::int64_t param(const GroupSpec& s, const std::string& key) {
  const auto it = s.params.find(key);
  if (it == s.params.end()) throw InvalidParams(s.name + ": missing parameter '" + key + "'");
  return it->second;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Multiplication-by-r automorphism of cyclic(n), as an action row.
std::vector<std::uint32_t> scaling(std::uint64_t n, std::uint64_t r) {
  std::vector<std::uint32_t> perm(n);
  for (std::uint64_t k = 0; k < n; ++k) perm[k] = static_cast<std::uint32_t>(k * r % n);
  return perm;
}

GroupSpec construction(std::string name, std::map<std::string, std::int64_t> params = {}) {
  GroupSpec s;
  s.name = std::move(name);
  s.params = std::move(params);
  return s;
}

GroupSpec pair_spec(std::string name, GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.name = std::move(name);
  s.operands = {std::move(a), std::move(b)};
  return s;
}

// --- constructor-notation parser ---

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = spec();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("spec '" + std::string(text_) + "' column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a constructor name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 12) fail("integer too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<std::uint32_t> int_list() {
    expect('[');
    std::vector<std::uint32_t> out;
    if (!peek(']')) {
      do {
        out.push_back(static_cast<std::uint32_t>(integer()));
      } while (peek(',') && (++pos_, true));
    }
    expect(']');
    return out;
  }

  GroupSpec spec() {
    GroupSpec s;
    s.name = ident();
    auto it = signatures().find(s.name);
    if (it == signatures().end()) fail("unknown constructor '" + s.name + "'");
    const Signature& sig = it->second;
    if (!peek('(')) {
      if (!sig.params.empty() || sig.operands) fail("expected '('");
      return s;
    }
    expect('(');
    bool first = true;
    auto comma = [&] {
      if (!first) expect(',');
      first = false;
    };
    for (const auto& p : sig.params) {
      comma();
      s.params[p] = integer();
    }
    for (std::size_t i = 0; i < sig.operands; ++i) {
      comma();
      s.operands.push_back(spec());
    }
    if (sig.action) {
      comma();
      expect('[');
      if (!peek(']')) {
        do {
          s.action.push_back(int_list());
        } while (peek(',') && (++pos_, true));
      }
      expect(']');
    }
    expect(')');
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string field_path(const std::string& origin, const std::string& field) { return origin + ": field '" + field + "'"; }

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

std::vector<std::uint32_t> as_index_row(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of integers");
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::int64_t x = as_int(v[i], where + "[" + std::to_string(i) + "]");
    if (x < 0 || x > std::numeric_limits<std::uint32_t>::max())
      throw ParseError(where + "[" + std::to_string(i) + "]: index out of range");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

GroupSpec spec_from_json(const json& doc, const std::string& origin) {
  const std::string where = field_path(origin, "construction");
  if (!doc.contains("construction") || !doc["construction"].is_string()) throw ParseError(where + ": expected a string");
  const std::string name = doc["construction"].get<std::string>();
  const auto it = signatures().find(name);
  if (it == signatures().end()) throw ParseError(where + ": unknown constructor '" + name + "'");
  const Signature& sig = it->second;
  const json params = doc.value("params", json::object());
  if (!params.is_object()) throw ParseError(field_path(origin, "params") + ": expected an object");

  GroupSpec s;
  s.name = name;
  for (const auto& p : sig.params) {
    if (!params.contains(p)) throw ParseError(field_path(origin, "params." + p) + ": missing");
    s.params[p] = as_int(params[p], field_path(origin, "params." + p));
  }
  const char* operand_keys[2] = {"left", "right"};
  const char* semidirect_keys[2] = {"kernel", "complement"};
  for (std::size_t i = 0; i < sig.operands; ++i) {
    const std::string key = sig.action ? semidirect_keys[i] : operand_keys[i];
    if (!params.contains(key) || !params[key].is_string())
      throw ParseError(field_path(origin, "params." + key) + ": expected a constructor string");
    s.operands.push_back(parse_spec(params[key].get<std::string>()));
  }
  if (sig.action) {
    if (!params.contains("action") || !params["action"].is_array())
      throw ParseError(field_path(origin, "params.action") + ": expected an array of permutations");
    for (std::size_t i = 0; i < params["action"].size(); ++i)
      s.action.push_back(as_index_row(params["action"][i], field_path(origin, "params.action") + "[" + std::to_string(i) + "]"));
  }
  return s;
}

}  // namespace

std::string GroupSpec::to_string() const {
  if (kind != SpecKind::kConstruction) return path ? path->string() : name;
  const Signature& sig = signature_of(name);
  if (sig.params.empty() && operands.empty() && action.empty()) return name;
  std::string out = name + "(";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ",";
    first = false;
  };
  for (const auto& p : sig.params) {
    sep();
    out += std::to_string(param(*this, p));
  }
  for (const auto& o : operands) {
    sep();
    out += o.to_string();
  }
  if (sig.action) {
    sep();
    out += "[";
    for (std::size_t i = 0; i < action.size(); ++i) {
      if (i) out += ",";
      out += "[";
      for (std::size_t j = 0; j < action[i].size(); ++j) {
        if (j) out += ",";
        out += std::to_string(action[i][j]);
      }
      out += "]";
    }
    out += "]";
  }
  return out + ")";
}

GroupSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

const std::vector<std::string>& constructor_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : signatures()) v.push_back(k);
    return v;
  }();
  return names;
}

std::optional<std::uint64_t> element_of_order_mod(std::uint64_t p, std::uint64_t q) {
  for (std::uint64_t l = 2; l < p; ++l)
    if (mult_order(l, p) == q) return l;
  return std::nullopt;
}

std::size_t spec_order(const GroupSpec& s) {
  if (s.kind != SpecKind::kConstruction) throw InvalidParams("order of a file spec is not known before loading");
  signature_of(s.name);
  auto n = [&](const char* key) {
    const std::int64_t v = param(s, key);
    require(v >= 1 && v <= 1'000'000, s.name + ": parameter '" + key + "' out of range");
    return static_cast<std::size_t>(v);
  };
  if (s.name == "cyclic") return n("n");
  if (s.name == "dihedral") return 2 * n("n");
  if (s.name == "dicyclic") return 4 * n("n");
  if (s.name == "symmetric") {
    require(n("n") <= 6, "symmetric: n must be at most 6");
    return factorial(n("n"));
  }
  if (s.name == "alternating") {
    require(n("n") <= 6, "alternating: n must be at most 6");
    return n("n") < 2 ? 1 : factorial(n("n")) / 2;
  }
  if (s.name == "heisenberg") return n("p") * n("p") * n("p");
  if (s.name == "heisenberg_frobenius") return n("p") * n("p") * n("p") * n("q");
  if (s.name == "agl1") return n("q") * (n("q") - 1);
  if (s.name == "sl23") return 24;
  require(s.operands.size() == 2, s.name + ": expected two operands");
  return spec_order(s.operands[0]) * spec_order(s.operands[1]);
}

FiniteGroup cyclic(std::size_t n) {
  require(n >= 1, "cyclic: n must be positive");
  return tabulate(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

FiniteGroup dihedral(std::size_t n) {
  require(n >= 1, "dihedral: n must be positive");
  // r^k s^e at index k + n e.
  return tabulate(2 * n, [n](std::size_t i, std::size_t j) {
    const std::size_t a = i % n, e = i / n, b = j % n, f = j / n;
    const std::size_t k = e ? (a + n - b) % n : (a + b) % n;
    return k + n * (e ^ f);
  });
}

FiniteGroup dicyclic(std::size_t n) {
  require(n >= 1, "dicyclic: n must be positive");
  // a^k x^e at index k + 2n e, with x^2 = a^n and x^-1 a x = a^-1.
  const std::size_t m = 2 * n;
  return tabulate(2 * m, [n, m](std::size_t i, std::size_t j) {
    const std::size_t a = i % m, e = i / m, b = j % m, f = j / m;
    std::size_t k = e ? (a + m - b) % m : (a + b) % m;
    if (e && f) k = (k + n) % m;
    return k + m * (e ^ f);
  });
}

FiniteGroup symmetric(std::size_t n) {
  require(n >= 1 && n <= 6, "symmetric: n must be in 1..6");
  std::vector<std::vector<std::uint32_t>> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> t(n), c(n);
    std::iota(t.begin(), t.end(), 0u);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens = {t, c};
  }
  return FiniteGroup::from_permutations(gens);
}

FiniteGroup alternating(std::size_t n) {
  require(n >= 1 && n <= 6, "alternating: n must be in 1..6");
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<std::uint32_t> c(n);
    std::iota(c.begin(), c.end(), 0u);
    c[0] = 1;
    c[1] = static_cast<std::uint32_t>(i);
    c[i] = 0;
    gens.push_back(std::move(c));
  }
  return FiniteGroup::from_permutations(gens);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t max_order) {
  const std::size_t na = a.order(), nb = b.order();
  if (na * nb > max_order) throw OrderLimitExceeded("direct product of order " + std::to_string(na * nb));
  return tabulate(na * nb, [&](std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(a.mul(static_cast<Element>(i / nb), static_cast<Element>(j / nb))) * nb +
           b.mul(static_cast<Element>(i % nb), static_cast<Element>(j % nb));
  });
}

FiniteGroup semidirect_product(const FiniteGroup& kernel, const FiniteGroup& complement,
                               const std::vector<std::vector<std::uint32_t>>& action, std::size_t max_order) {
  const std::size_t nk = kernel.order(), nh = complement.order();
  if (nk * nh > max_order) throw OrderLimitExceeded("semidirect product of order " + std::to_string(nk * nh));
  const auto hgens = complement.generators();
  if (action.size() != hgens.size())
    throw InvalidAction("expected " + std::to_string(hgens.size()) + " action rows (one per complement generator), got " +
                        std::to_string(action.size()));

  for (std::size_t g = 0; g < action.size(); ++g) {
    const auto& perm = action[g];
    if (perm.size() != nk) throw InvalidAction("action row " + std::to_string(g) + " has wrong length");
    std::vector<char> hit(nk, 0);
    for (auto v : perm) {
      if (v >= nk || hit[v]) throw InvalidAction("action row " + std::to_string(g) + " is not a permutation");
      hit[v] = 1;
    }
    for (Element x = 0; x < nk; ++x)
      for (Element y = 0; y < nk; ++y)
        if (perm[kernel.mul(x, y)] != kernel.mul(perm[x], perm[y]))
          throw InvalidAction("action row " + std::to_string(g) + " is not an automorphism: fails on (" +
                              std::to_string(x) + ", " + std::to_string(y) + ")");
  }

  // phi(h g) = phi(h) o phi(g), checked for every h and generator g.
  std::vector<std::vector<std::uint32_t>> phi(nh);
  phi[kIdentity].resize(nk);
  std::iota(phi[kIdentity].begin(), phi[kIdentity].end(), 0u);
  std::vector<Element> queue{kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element h = queue[head];
    for (std::size_t s = 0; s < hgens.size(); ++s) {
      std::vector<std::uint32_t> composed(nk);
      for (std::size_t k = 0; k < nk; ++k) composed[k] = phi[h][action[s][k]];
      const Element hg = complement.mul(h, hgens[s]);
      if (phi[hg].empty()) {
        phi[hg] = std::move(composed);
        queue.push_back(hg);
      } else if (phi[hg] != composed) {
        throw InvalidAction("action does not define a homomorphism: conflict at complement element " +
                            std::to_string(hg));
      }
    }
  }

  return tabulate(nk * nh, [&](std::size_t i, std::size_t j) {
    const auto k1 = static_cast<Element>(i % nk), h1 = static_cast<Element>(i / nk);
    const auto k2 = static_cast<Element>(j % nk), h2 = static_cast<Element>(j / nk);
    return kernel.mul(k1, phi[h1][k2]) + nk * static_cast<std::size_t>(complement.mul(h1, h2));
  });
}

FiniteGroup heisenberg(std::uint64_t p) {
  require(is_prime(p), "heisenberg: p must be prime");
  const std::size_t n = p * p * p;
  return tabulate(n, [p](std::size_t i, std::size_t j) {
    const std::size_t x = i % p, y = i / p % p, z = i / (p * p);
    const std::size_t x2 = j % p, y2 = j / p % p, z2 = j / (p * p);
    return (x + x2) % p + p * ((y + y2) % p) + p * p * ((z + z2 + x * y2) % p);
  });
}

FiniteGroup heisenberg_frobenius(std::uint64_t p, std::uint64_t q, std::size_t max_order) {
  require(is_prime(p), "heisenberg_frobenius: p must be prime");
  require(is_prime(q) && q % 2 == 1, "heisenberg_frobenius: q must be an odd prime");
  require((p - 1) % q == 0, "heisenberg_frobenius: q must divide p - 1");
  if (p * p * p * q > max_order) throw OrderLimitExceeded("heisenberg_frobenius of order " + std::to_string(p * p * p * q));
  const std::uint64_t l = *element_of_order_mod(p, q);
  const std::uint64_t l2 = l * l % p;

  const std::size_t nk = p * p * p;
  std::vector<std::uint32_t> alpha(nk);
  for (std::size_t i = 0; i < nk; ++i) {
    const std::size_t x = i % p, y = i / p % p, z = i / (p * p);
    alpha[i] = static_cast<std::uint32_t>(x * l % p + p * (y * l % p) + p * p * (z * l2 % p));
  }
  // No non-trivial power of alpha may fix a non-identity point.
  std::vector<std::uint32_t> power = alpha;
  for (std::uint64_t i = 1; i < q; ++i) {
    for (std::size_t k = 1; k < nk; ++k)
      if (power[k] == k) throw InvalidAction("complement action has a non-trivial fixed point");
    std::vector<std::uint32_t> next(nk);
    for (std::size_t k = 0; k < nk; ++k) next[k] = alpha[power[k]];
    power = std::move(next);
  }
  return semidirect_product(heisenberg(p), cyclic(q), {alpha}, max_order);
}

FiniteGroup agl1(std::uint64_t q) {
  require(is_prime(q), "agl1: q must be prime");
  if (q == 2) return cyclic(2);
  const std::uint64_t root = *element_of_order_mod(q, q - 1);
  return semidirect_product(cyclic(q), cyclic(q - 1), {scaling(q, root)});
}

FiniteGroup sl23() {
  // Action on the eight non-zero vectors of F_3^2 of [[1,1],[0,1]] and [[0,-1],[1,0]].
  static const std::vector<std::vector<std::uint32_t>> gens = {{3, 7, 2, 6, 1, 5, 0, 4}, {5, 2, 0, 6, 3, 1, 7, 4}};
  return FiniteGroup::from_permutations(gens);
}

FiniteGroup build(const GroupSpec& s, std::size_t max_order) {
  if (s.kind != SpecKind::kConstruction) {
    if (!s.path) throw InvalidParams("file spec without a path");
    return load_group(*s.path, max_order);
  }
  const std::size_t order = spec_order(s);
  if (order > max_order)
    throw OrderLimitExceeded(s.to_string() + " has order " + std::to_string(order) + " above the limit " +
                             std::to_string(max_order));
  auto u = [&](const char* key) { return static_cast<std::uint64_t>(param(s, key)); };
  if (s.name == "cyclic") return cyclic(u("n"));
  if (s.name == "dihedral") return dihedral(u("n"));
  if (s.name == "dicyclic") return dicyclic(u("n"));
  if (s.name == "symmetric") return symmetric(u("n"));
  if (s.name == "alternating") return alternating(u("n"));
  if (s.name == "heisenberg") return heisenberg(u("p"));
  if (s.name == "heisenberg_frobenius") return heisenberg_frobenius(u("p"), u("q"), max_order);
  if (s.name == "agl1") return agl1(u("q"));
  if (s.name == "sl23") return sl23();
  const FiniteGroup a = build(s.operands.at(0), max_order);
  const FiniteGroup b = build(s.operands.at(1), max_order);
  if (s.name == "direct_product") return direct_product(a, b, max_order);
  return semidirect_product(a, b, s.action, max_order);
}

std::vector<GroupSpec> builtin_catalog(std::size_t max_order) {
  if (max_order == 0) throw InvalidParams("catalog max order must be at least 1");
  std::vector<GroupSpec> out;
  std::vector<std::string> seen;
  auto add = [&](GroupSpec s) {
    if (spec_order(s) > max_order) return;
    const std::string id = s.to_string();
    if (std::find(seen.begin(), seen.end(), id) != seen.end()) return;
    seen.push_back(id);
    out.push_back(std::move(s));
  };
  auto one = [](const char* name, std::int64_t v) { return construction(name, {{signature_of(name).params.front(), v}}); };

  for (std::size_t n = 1; n <= max_order; ++n) add(one("cyclic", static_cast<std::int64_t>(n)));
  for (std::size_t n = 3; 2 * n <= max_order; ++n) add(one("dihedral", static_cast<std::int64_t>(n)));
  for (std::size_t n = 2; 4 * n <= max_order; ++n) add(one("dicyclic", static_cast<std::int64_t>(n)));
  add(one("symmetric", 3));
  add(one("symmetric", 4));
  add(one("alternating", 4));
  add(one("alternating", 5));

  const std::vector<GroupSpec> primaries = {one("cyclic", 2),    one("cyclic", 3),    one("cyclic", 4),
                                            one("cyclic", 5),    one("symmetric", 3), one("dihedral", 4),
                                            one("dicyclic", 2),  one("alternating", 4), one("heisenberg", 3)};
  for (std::size_t i = 0; i < primaries.size(); ++i)
    for (std::size_t j = i; j < primaries.size(); ++j) {
      if (spec_order(primaries[i]) * spec_order(primaries[j]) > max_order) continue;
      add(pair_spec("direct_product", primaries[i], primaries[j]));
    }

  for (std::int64_t p : {3, 5, 7}) add(one("heisenberg", p));
  add(construction("heisenberg_frobenius", {{"p", 7}, {"q", 3}}));
  add(construction("heisenberg_frobenius", {{"p", 13}, {"q", 3}}));
  add(pair_spec("direct_product", construction("heisenberg_frobenius", {{"p", 7}, {"q", 3}}), one("cyclic", 2)));
  for (std::int64_t q : {2, 3, 5, 7, 11, 13}) add(one("agl1", q));
  add(construction("sl23"));

  // cyclic(p) x| cyclic(k) with k | p - 1, acting faithfully by scaling.
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (std::uint64_t k = 2; k < p; ++k) {
      if ((p - 1) % k != 0 || p * k > max_order) continue;
      GroupSpec s = pair_spec("semidirect_product", one("cyclic", static_cast<std::int64_t>(p)),
                              one("cyclic", static_cast<std::int64_t>(k)));
      s.action = {scaling(p, *element_of_order_mod(p, k))};
      add(std::move(s));
    }
  }
  return out;
}

FiniteGroup parse_group_document(std::string_view text, std::string_view origin_view, std::string* name_out,
                                 std::size_t max_order) {
  const std::string origin(origin_view);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseError(origin + " line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw ParseError(origin + ": top level must be an object");
  if (!doc.contains("name") || !doc["name"].is_string()) throw ParseError(field_path(origin, "name") + ": expected a string");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw ParseError(field_path(origin, "kind") + ": expected a string");
  if (name_out) *name_out = doc["name"].get<std::string>();
  const std::string kind = doc["kind"].get<std::string>();

  if (kind == "cayley") {
    if (!doc.contains("cayley") || !doc["cayley"].is_array()) throw ParseError(field_path(origin, "cayley") + ": expected an array of rows");
    const json& rows = doc["cayley"];
    const std::size_t n = rows.size();
    if (n > max_order) throw OrderLimitExceeded(origin + ": table of order " + std::to_string(n) + " above the limit");
    if (doc.contains("order") && as_int(doc["order"], field_path(origin, "order")) != static_cast<std::int64_t>(n))
      throw ParseError(field_path(origin, "order") + ": does not match the number of rows");
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = as_index_row(rows[i], field_path(origin, "cayley") + " row " + std::to_string(i));
      if (row.size() != n)
        throw ParseError(field_path(origin, "cayley") + " row " + std::to_string(i) + ": has " +
                         std::to_string(row.size()) + " entries, expected " + std::to_string(n));
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return FiniteGroup::from_cayley_table(std::move(flat), n);
  }
  if (kind == "permutations") {
    if (!doc.contains("degree")) throw ParseError(field_path(origin, "degree") + ": missing");
    const std::int64_t degree = as_int(doc["degree"], field_path(origin, "degree"));
    if (!doc.contains("permutations") || !doc["permutations"].is_array())
      throw ParseError(field_path(origin, "permutations") + ": expected an array");
    std::vector<std::vector<std::uint32_t>> gens;
    for (std::size_t i = 0; i < doc["permutations"].size(); ++i) {
      auto perm = as_index_row(doc["permutations"][i], field_path(origin, "permutations") + "[" + std::to_string(i) + "]");
      if (static_cast<std::int64_t>(perm.size()) != degree)
        throw ParseError(field_path(origin, "permutations") + "[" + std::to_string(i) + "]: length differs from degree");
      gens.push_back(std::move(perm));
    }
    return FiniteGroup::from_permutations(gens, max_order);
  }
  if (kind == "construction") return build(spec_from_json(doc, origin), max_order);
  throw ParseError(field_path(origin, "kind") + ": unknown kind '" + kind + "'");
}

LoadedGroup read_group_file(const std::filesystem::path& path, std::size_t max_order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::string name;
  FiniteGroup g = parse_group_document(text, path.string(), &name, max_order);
  return LoadedGroup{std::move(name), std::move(g), fnv1a_hex(text)};
}

FiniteGroup load_group(const std::filesystem::path& path, std::size_t max_order) {
  return read_group_file(path, max_order).group;
}

std::string serialize_group(const FiniteGroup& g, std::string_view name) {
  std::ostringstream os;
  os << "{\n  \"name\": " << json(std::string(name)).dump() << ",\n  \"kind\": \"cayley\",\n  \"order\": " << g.order()
     << ",\n  \"cayley\": [\n";
  for (Element i = 0; i < g.order(); ++i) {
    os << "    [";
    const auto row = g.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j];
    os << "]" << (i + 1 < g.order() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

void save_group(const FiniteGroup& g, const std::filesystem::path& path, std::string_view name) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize_group(g, name);
}

}  // namespace nacent

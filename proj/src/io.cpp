#include "qsymkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "qsymkit/error.hpp"

namespace qsym::io {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InvalidArgument(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  auto v = j.get<long long>();
  if (v < INT_MIN || v > INT_MAX) bad(where, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Integer big_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad(where, "not an integer string");
    return v;
  }
  bad(where, "expected an integer");
}

Json big_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Param param_from_name(const std::string& s, const std::string& where) {
  if (s == "q") return Param::q;
  if (s == "y") return Param::y;
  if (s == "z") return Param::z;
  bad(where, "unknown parameter \"" + s + "\"");
}

std::vector<std::pair<int, int>> pairs_1based(const Json& j, int n, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string w = where + "[" + std::to_string(i) + "]";
    auto v = int_array(j[i], w);
    if (v.size() != 2) bad(w, "expected a pair");
    for (int x : v)
      if (x < 1 || x > n) bad(w, "vertex " + std::to_string(x) + " outside 1.." + std::to_string(n));
    out.emplace_back(v[0] - 1, v[1] - 1);
  }
  return out;
}

int size_field(const Json& j, const std::string& where) {
  int n = as_int(field(j, "n", where), where + ".n");
  if (n < 0 || n > posets::kMaxPosetSize) bad(where + ".n", "size must lie in 0.." + std::to_string(posets::kMaxPosetSize));
  return n;
}

bool is_sym_basis_name(const std::string& s) {
  return s == "m" || s == "p" || s == "h" || s == "e" || s == "s";
}

// Recursive descent over the canonical text form.
class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  struct Token {
    std::string basis;
    std::vector<int> index;
    bool normalised = false;
  };

  ParamPoly poly_only() {
    ParamPoly p = sum(nullptr);
    finish();
    return p;
  }

  AnyElement element() {
    skip();
    std::vector<std::pair<Token, ParamPoly>> terms;
    if (peek() == '0' && rest_is_zero()) {
      pos_ = text_.size();
      return QSymElement(0, Basis::Monomial);
    }
    sum(&terms);
    finish();
    if (terms.empty()) fail("expected at least one basis term");
    const std::string& basis = terms.front().first.basis;
    int degree = -1;
    for (const auto& [tok, c] : terms) {
      if (tok.basis != basis) fail("terms mix bases " + basis + " and " + tok.basis);
      int d = 0;
      for (int x : tok.index) d += x;
      if (degree >= 0 && d != degree) fail("terms have different degrees");
      degree = d;
    }
    if (is_sym_basis_name(basis)) {
      SymElement e(degree, parse_sym_basis(basis));
      for (const auto& [tok, c] : terms) {
        Partition lambda(tok.index);
        ParamPoly coeff = c;
        if (tok.normalised) coeff *= Rational(1, z_of(tok.index));
        e.add(lambda, coeff);
      }
      return e;
    }
    QSymElement e(degree, parse_basis(basis));
    for (const auto& [tok, c] : terms) {
      ParamPoly coeff = c;
      if (tok.normalised) coeff *= Rational(1, z_of(tok.index));
      e.add(Composition(tok.index), coeff);
    }
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    auto [l, c] = line_column(text_, pos_);
    throw ParseError(what, l, c);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool rest_is_zero() const {
    std::size_t i = pos_ + 1;
    while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
    return i == text_.size();
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void finish() {
    if (peek() != '\0') fail("unexpected character");
  }

  Integer number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // sum := ['-'] product {('+'|'-') product}
  ParamPoly sum(std::vector<std::pair<Token, ParamPoly>>* terms) {
    ParamPoly acc;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      std::optional<Token> tok;
      ParamPoly t = product(terms ? &tok : nullptr);
      if (neg) t = -t;
      if (terms) {
        if (!tok) fail("term has no basis element");
        terms->emplace_back(std::move(*tok), t);
      } else {
        acc += t;
      }
      char c = peek();
      if (c != '+' && c != '-') break;
      neg = c == '-';
      ++pos_;
    }
    return acc;
  }

  ParamPoly product(std::optional<Token>* tok) {
    ParamPoly acc(1);
    while (true) {
      acc = acc * factor(tok);
      if (peek() != '*') break;
      ++pos_;
    }
    return acc;
  }

  ParamPoly factor(std::optional<Token>* tok) {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ParamPoly inner = sum(nullptr);
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = number();
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = number();
        if (den == 0) fail("zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      return ParamPoly(r);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string w = word();
      if (w == "q" || w == "y" || w == "z") {
        unsigned k = 1;
        if (peek() == '^') {
          ++pos_;
          Integer e = number();
          if (!e.fits_uint_p() || e > 65535) fail("exponent too large");
          k = static_cast<unsigned>(e.get_ui());
        }
        return ParamPoly::var(param_from_name(w, "text"), k);
      }
      if (w == "M" || w == "F" || w == "Psi" || is_sym_basis_name(w)) {
        if (!tok) {
          pos_ = at;
          fail("basis element inside a coefficient");
        }
        if (*tok) {
          pos_ = at;
          fail("two basis elements in one term");
        }
        Token t;
        t.basis = w;
        expect('[');
        if (peek() != ']') {
          while (true) {
            Integer part = number();
            if (part < 1 || part > kMaxDegree) fail("part out of range");
            t.index.push_back(static_cast<int>(part.get_si()));
            if (peek() != ',') break;
            ++pos_;
          }
        }
        expect(']');
        if (peek() == '/') {
          ++pos_;
          skip();
          std::size_t z_at = pos_;
          if (word() != "z") {
            pos_ = z_at;
            fail("expected /z");
          }
          if (w != "Psi" && w != "p") fail("/z applies to Psi and p only");
          t.normalised = true;
        }
        if (is_sym_basis_name(w)) {
          for (std::size_t i = 1; i < t.index.size(); ++i)
            if (t.index[i] > t.index[i - 1]) fail("partition parts must be weakly decreasing");
        }
        *tok = std::move(t);
        return ParamPoly(1);
      }
      pos_ = at;
      fail("unknown symbol \"" + w + "\"");
    }
    fail("unexpected character");
  }
};

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [l, c] = line_column(text, offset);
    std::string msg = e.what();
    // Drop the library's own "[json.exception...] " prefix.
    if (auto p = msg.find("] "); p != std::string::npos) msg = msg.substr(p + 2);
    throw ParseError(source.empty() ? msg : source + ": " + msg, l, c);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  return parse_json(read_file(path), path);
}

Json to_json(const ParamPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::object();
    for (std::size_t i = 0; i < kParamCount; ++i)
      if (e.e[i] != 0) exps[param_name(static_cast<Param>(i))] = e.e[i];
    terms.push_back({{"exps", exps}, {"num", big_to_json(c.get_num())}, {"den", big_to_json(c.get_den())}});
  }
  return {{"terms", terms}};
}

ParamPoly poly_from_json(const Json& j) {
  const std::string where = "coeff";
  if (j.is_number_integer()) return ParamPoly(Rational(big_from_json(j, where)));
  if (j.is_string()) return parse_poly_text(j.get<std::string>());
  const Json& terms = field(j, "terms", where);
  if (!terms.is_array()) bad(where + ".terms", "expected an array");
  ParamPoly p;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string w = where + ".terms[" + std::to_string(i) + "]";
    const Json& t = terms[i];
    Integer num = big_from_json(field(t, "num", w), w + ".num");
    Integer den = t.contains("den") ? big_from_json(t["den"], w + ".den") : Integer(1);
    if (den == 0) bad(w + ".den", "zero denominator");
    Exponent e;
    if (t.contains("exps")) {
      const Json& ex = t["exps"];
      if (!ex.is_object()) bad(w + ".exps", "expected an object");
      for (auto it = ex.begin(); it != ex.end(); ++it) {
        int k = as_int(it.value(), w + ".exps." + it.key());
        if (k < 0 || k > 65535) bad(w + ".exps." + it.key(), "exponent out of range");
        e.e[static_cast<std::size_t>(param_from_name(it.key(), w + ".exps"))] = static_cast<std::uint16_t>(k);
      }
    }
    Rational r(num, den);
    r.canonicalize();
    p.add_term(e, r);
  }
  return p;
}

namespace {

template <class Index>
Json terms_json(const std::map<Index, ParamPoly>& terms) {
  Json out = Json::array();
  for (const auto& [a, c] : terms) out.push_back({{"index", a.parts()}, {"coeff", to_json(c)}});
  return out;
}

}  // namespace

Json to_json(const QSymElement& e) {
  return {{"basis", basis_name(e.basis())}, {"degree", e.degree()}, {"terms", terms_json(e.terms())}};
}

Json to_json(const SymElement& e) {
  return {{"basis", sym_basis_name(e.basis())}, {"degree", e.degree()}, {"terms", terms_json(e.terms())}};
}

Json to_json(const AnyElement& e) {
  return std::visit([](const auto& x) { return to_json(x); }, e);
}

AnyElement element_from_json(const Json& j) {
  const std::string where = "element";
  const Json& b = field(j, "basis", where);
  if (!b.is_string()) bad(where + ".basis", "expected a string");
  const std::string basis = b.get<std::string>();
  int degree = as_int(field(j, "degree", where), where + ".degree");
  if (degree < 0 || degree > kMaxDegree) bad(where + ".degree", "degree out of range");
  const Json& terms = field(j, "terms", where);
  if (!terms.is_array()) bad(where + ".terms", "expected an array");

  auto index_of = [&](const Json& t, const std::string& w, bool allow_set) {
    if (allow_set && t.contains("set") && !t.contains("index")) {
      auto s = int_array(t["set"], w + ".set");
      for (int x : s)
        if (x < 1 || x >= degree) bad(w + ".set", "element " + std::to_string(x) + " outside [n-1]");
      return Composition::from_set(s, degree).parts();
    }
    auto parts = int_array(field(t, "index", w), w + ".index");
    int sum = 0;
    for (int x : parts) {
      if (x < 1) bad(w + ".index", "parts must be positive");
      sum += x;
    }
    if (sum != degree) bad(w + ".index", "parts sum to " + std::to_string(sum) + ", degree is " + std::to_string(degree));
    return parts;
  };

  if (is_sym_basis_name(basis)) {
    SymElement e(degree, parse_sym_basis(basis));
    for (std::size_t i = 0; i < terms.size(); ++i) {
      std::string w = where + ".terms[" + std::to_string(i) + "]";
      auto parts = index_of(terms[i], w, false);
      for (std::size_t k = 1; k < parts.size(); ++k)
        if (parts[k] > parts[k - 1]) bad(w + ".index", "partition parts must be weakly decreasing");
      e.add(Partition(parts), poly_from_json(field(terms[i], "coeff", w)));
    }
    return e;
  }
  if (basis != "M" && basis != "F" && basis != "Psi") bad(where + ".basis", "unknown basis \"" + basis + "\"");
  QSymElement e(degree, parse_basis(basis));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string w = where + ".terms[" + std::to_string(i) + "]";
    auto parts = index_of(terms[i], w, basis == "F");
    e.add(Composition(parts), poly_from_json(field(terms[i], "coeff", w)));
  }
  return e;
}

QSymElement qsym_from_json(const Json& j) {
  AnyElement e = element_from_json(j);
  if (auto* q = std::get_if<QSymElement>(&e)) return *q;
  return from_sym(std::get<SymElement>(e));
}

AnyElement parse_element_text(std::string_view text) { return TextParser(text).element(); }

ParamPoly parse_poly_text(std::string_view text) { return TextParser(text).poly_only(); }

std::string to_text(const AnyElement& e, View view) {
  return std::visit([view](const auto& x) { return x.to_string(view); }, e);
}

Json to_json(const pp::Certificates& c) {
  Json out = Json::array();
  for (const auto& [a, p] : c) out.push_back({{"index", a.parts()}, {"coeff", to_json(p)}});
  return out;
}

Json to_json(const posets::LabeledPoset& p) {
  Json covers = Json::array();
  for (auto [x, y] : p.poset().covers()) covers.push_back({x + 1, y + 1});
  return {{"n", p.size()}, {"covers", covers}, {"labels", p.labels()}};
}

posets::LabeledPoset poset_from_json(const Json& j) {
  const std::string where = "poset";
  int n = size_field(j, where);
  auto rel = j.contains("covers") ? pairs_1based(j["covers"], n, where + ".covers")
                                  : std::vector<std::pair<int, int>>{};
  for (auto [x, y] : rel)
    if (x == y) bad(where + ".covers", "relation " + std::to_string(x + 1) + " < " + std::to_string(x + 1));
  posets::Poset p = posets::Poset::from_relations(n, rel);
  if (!j.contains("labels")) return posets::naturally_labeled(p);
  auto labels = int_array(j["labels"], where + ".labels");
  if (static_cast<int>(labels.size()) != n) bad(where + ".labels", "expected " + std::to_string(n) + " labels");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int l : labels) {
    if (l < 1 || l > n || seen[static_cast<std::size_t>(l)]) bad(where + ".labels", "labels must be a permutation of 1..n");
    seen[static_cast<std::size_t>(l)] = true;
  }
  return posets::LabeledPoset(p, labels);
}

Json to_json(const posets::DirectedGraph& g) {
  Json edges = Json::array();
  for (auto [x, y] : g.edges) edges.push_back({x + 1, y + 1});
  return {{"n", g.n}, {"edges", edges}};
}

posets::DirectedGraph graph_from_json(const Json& j) {
  const std::string where = "graph";
  posets::DirectedGraph g;
  g.n = size_field(j, where);
  g.edges = pairs_1based(field(j, "edges", where), g.n, where + ".edges");
  g.validate();
  return g;
}

Json to_json(const posets::Equivalence& e) {
  Json blocks = Json::array();
  for (const auto& b : e.blocks()) {
    Json bl = Json::array();
    for (int x : b) bl.push_back(x + 1);
    blocks.push_back(bl);
  }
  return {{"blocks", blocks}};
}

posets::Equivalence equivalence_from_json(const Json& j, int n) {
  const std::string where = "equivalence";
  const Json& blocks = field(j, "blocks", where);
  if (!blocks.is_array()) bad(where + ".blocks", "expected an array");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::string w = where + ".blocks[" + std::to_string(i) + "]";
    std::vector<int> b;
    for (int x : int_array(blocks[i], w)) {
      if (x < 1 || x > n) bad(w, "element " + std::to_string(x) + " outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(x - 1)]) bad(w, "element " + std::to_string(x) + " listed twice");
      seen[static_cast<std::size_t>(x - 1)] = true;
      b.push_back(x - 1);
    }
    if (!b.empty()) out.push_back(std::move(b));
  }
  for (int x = 0; x < n; ++x)
    if (!seen[static_cast<std::size_t>(x)]) out.push_back({x});
  return posets::Equivalence::from_blocks(n, out);
}

families::Matroid matroid_from_json(const Json& j) {
  const std::string where = "matroid";
  int n = size_field(j, where);
  const Json& bases = field(j, "bases", where);
  if (!bases.is_array()) bad(where + ".bases", "expected an array");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    std::string w = where + ".bases[" + std::to_string(i) + "]";
    std::vector<int> b;
    for (int x : int_array(bases[i], w)) {
      if (x < 1 || x > n) bad(w, "element " + std::to_string(x) + " outside 1.." + std::to_string(n));
      b.push_back(x - 1);
    }
    out.push_back(std::move(b));
  }
  return families::Matroid(n, out);
}

std::vector<int> edge_subset_from_json(const Json& j, const posets::DirectedGraph& g) {
  const Json& list = j.is_object() ? field(j, "edges", "edge subset") : j;
  auto pairs = pairs_1based(list, g.n, "edge subset");
  std::vector<bool> used(g.edges.size(), false);
  std::vector<int> out;
  for (auto [x, y] : pairs) {
    bool found = false;
    for (std::size_t e = 0; e < g.edges.size() && !found; ++e) {
      if (used[e] || g.edges[e] != std::pair{x, y}) continue;
      used[e] = true;
      out.push_back(static_cast<int>(e));
      found = true;
    }
    if (!found)
      bad("edge subset", "no unused edge " + std::to_string(x + 1) + "->" + std::to_string(y + 1) + " in the graph");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    auto [l, c] = line_column(text, i);
    throw ParseError(what, l, c);
  };
  if (text.empty()) return out;
  while (true) {
    std::size_t start = i;
    bool neg = i < text.size() && text[i] == '-';
    if (neg) ++i;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > INT_MAX) fail("number too large");
      ++i;
    }
    if (i == start + (neg ? 1 : 0)) fail("expected a number");
    out.push_back(static_cast<int>(neg ? -v : v));
    if (i == text.size()) break;
    if (text[i] != ',') fail("expected ','");
    ++i;
  }
  return out;
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace qsym::io

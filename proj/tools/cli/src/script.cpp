#include "hdeg/cli/script.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "hdeg/monomial.hpp"
#include "hdeg/parse.hpp"

namespace hdeg::cli {

namespace {

const char* const kKeywords[] = {"ring", "ideal", "algebra", "module", "params", "example", "check",
                                 "intersect", "power", "product", "coker", "twists", "QQ", "ZZ", "GF"};

bool is_keyword(const std::string& s) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), s) != std::end(kKeywords);
}

std::string blank_comments(std::string_view in) {
  std::string s(in);
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool hash = s[i] == '#';
    bool slashes = s[i] == '/' && i + 1 < s.size() && s[i + 1] == '/';
    if (!hash && !slashes) continue;
    while (i < s.size() && s[i] != '\n') s[i++] = ' ';
  }
  return s;
}

/// What a check statement will run on.
struct Scope {
  std::string module_ring;  // "" when no module is in scope
  std::string params_ring;  // "" when no parameters are in scope
};

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view text) : src_(blank_comments(text)) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < src_.size(); ++i)
      if (src_[i] == '\n') line_starts_.push_back(i + 1);
  }

  InputScript run() {
    InputScript out;
    for (;;) {
      skip();
      if (at_end()) break;
      out.statements.push_back(statement());
    }
    return out;
  }

 private:
  [[noreturn]] void fail_at(std::size_t off, const std::string& msg) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), off);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    std::size_t col = off - line_starts_[line - 1] + 1;
    throw ScriptError(static_cast<int>(line), static_cast<int>(col), msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (at_end()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
  }

  bool ident_start() const { return std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'; }

  std::string identifier(const char* what) {
    skip();
    if (!ident_start()) fail(std::string("expected ") + what);
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return src_.substr(start, pos_ - start);
  }

  long long integer(const char* what) {
    skip();
    std::size_t start = pos_;
    bool neg = accept('-');
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at(start, std::string("expected ") + what);
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (src_[pos_++] - '0');
      if (v > (1ll << 40)) fail_at(start, std::string(what) + " out of range");
    }
    return neg ? -v : v;
  }

  void expect_word(const std::string& w) {
    std::size_t at = (skip(), pos_);
    std::string got = ident_start() ? identifier("") : "";
    if (got != w) fail_at(at, "expected '" + w + "'");
  }

  std::string new_name(const char* kind) {
    skip();
    std::size_t at = pos_;
    std::string n = identifier(kind);
    if (is_keyword(n)) fail_at(at, "'" + n + "' is a reserved word");
    if (kinds_.count(n)) fail_at(at, "'" + n + "' is already declared as " + kinds_[n]);
    return n;
  }

  void declare(const std::string& n, const char* kind) { kinds_[n] = kind; }

  const RingPtr& current_ring(std::size_t at) const {
    if (current_ring_.empty()) fail_at(at, "no ring declared");
    return rings_.at(current_ring_);
  }

  Statement statement() {
    std::size_t at = pos_;
    std::string kw = identifier("a statement");
    Statement st;
    if (kw == "ring")
      st = ring_decl();
    else if (kw == "ideal")
      st = ideal_decl(at);
    else if (kw == "algebra")
      st = algebra_decl();
    else if (kw == "module")
      st = module_decl(at);
    else if (kw == "params")
      st = params_decl(at);
    else if (kw == "example")
      st = example_decl();
    else if (kw == "check")
      st = check_cmd(at);
    else
      fail_at(at, "unknown statement '" + kw + "'");
    expect(';');
    return st;
  }

  RingDecl ring_decl() {
    RingDecl r;
    r.name = new_name("a ring name");
    expect('=');
    skip();
    std::size_t at = pos_;
    std::string f = identifier("a field (QQ, ZZ/p or GF(p))");
    if (f == "QQ") {
      r.characteristic = 0;
    } else if (f == "ZZ" || f == "GF") {
      bool gf = f == "GF";
      if (gf) expect('(');
      else expect('/');
      std::size_t pat = (skip(), pos_);
      long long p = integer("a characteristic");
      if (gf) expect(')');
      try {
        if (p <= 0 || p > 0x7fffffff) throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
        (void)Field::prime(static_cast<std::uint32_t>(p));
      } catch (const InputError& e) {
        fail_at(pat, e.what());
      }
      r.characteristic = static_cast<std::uint32_t>(p);
    } else {
      fail_at(at, "unknown field '" + f + "'");
    }
    expect('[');
    if (!accept(']')) {
      do {
        std::size_t vat = (skip(), pos_);
        std::string v = identifier("a variable name");
        if (is_keyword(v)) fail_at(vat, "'" + v + "' is a reserved word");
        if (std::find(r.vars.begin(), r.vars.end(), v) != r.vars.end()) fail_at(vat, "duplicate variable '" + v + "'");
        if (static_cast<int>(r.vars.size()) == kMaxVars) fail_at(vat, "at most " + std::to_string(kMaxVars) + " variables are supported");
        r.vars.push_back(v);
      } while (accept(','));
      expect(']');
    }
    if (r.vars.empty()) fail_at(at, "a ring needs at least one variable");
    Field k = r.characteristic ? Field::prime(r.characteristic) : Field::rationals();
    rings_[r.name] = make_ring(k, r.vars);
    declare(r.name, "a ring");
    current_ring_ = r.name;
    current_algebra_.clear();
    return r;
  }

  /// Polynomial at the cursor, canonicalized and checked for homogeneity.
  std::string polynomial(const RingPtr& ring) {
    skip();
    std::size_t start = pos_;
    Polynomial p(ring);
    try {
      p = parse_polynomial_at(ring, src_, pos_);
    } catch (const ParseError& e) {
      fail_at(e.offset(), e.what());
    } catch (const InputError& e) {
      fail_at(start, e.what());
    }
    if (!p.is_homogeneous()) fail_at(start, "inhomogeneous generator '" + p.to_string() + "'");
    return p.to_string();
  }

  IdealExpr ideal_expr(const RingPtr& ring) {
    skip();
    std::size_t at = pos_;
    if (peek() == '(') return ideal_list(ring);
    std::string id = identifier("an ideal expression");
    if (id == "intersect" || id == "product") {
      IdealExpr e;
      e.kind = id == "intersect" ? IdealExpr::Kind::intersect : IdealExpr::Kind::product;
      expect('(');
      e.args.push_back(ideal_expr(ring));
      expect(',');
      e.args.push_back(ideal_expr(ring));
      expect(')');
      return e;
    }
    if (id == "power") {
      IdealExpr e;
      e.kind = IdealExpr::Kind::power;
      expect('(');
      e.args.push_back(ideal_expr(ring));
      expect(',');
      std::size_t kat = (skip(), pos_);
      long long k = integer("an exponent");
      if (k < 0 || k > 64) fail_at(kat, "exponent must be between 0 and 64");
      e.exponent = static_cast<int>(k);
      expect(')');
      return e;
    }
    check_ideal_name(id, at);
    IdealExpr e;
    e.kind = IdealExpr::Kind::name;
    e.text = id;
    return e;
  }

  void check_ideal_name(const std::string& id, std::size_t at) const {
    auto it = ideals_.find(id);
    if (it == ideals_.end()) {
      if (kinds_.count(id)) fail_at(at, "'" + id + "' is " + kinds_.at(id) + ", not an ideal");
      fail_at(at, "undeclared ideal '" + id + "'");
    }
    if (it->second != current_ring_) fail_at(at, "ideal '" + id + "' is over ring " + it->second + ", not " + current_ring_);
  }

  bool item_end() {
    skip();
    return peek() == ',' || peek() == ')';
  }

  IdealExpr ideal_list(const RingPtr& ring) {
    expect('(');
    IdealExpr e;
    e.kind = IdealExpr::Kind::list;
    if (accept(')')) return e;
    do e.args.push_back(list_item(ring));
    while (accept(','));
    expect(')');
    return e;
  }

  IdealExpr list_item(const RingPtr& ring) {
    skip();
    const std::size_t start = pos_;
    if (ident_start()) {
      std::string id = identifier("");
      bool op = id == "intersect" || id == "power" || id == "product";
      if (op && (skip(), peek() == '(')) {
        pos_ = start;
        return ideal_expr(ring);
      }
      if (ideals_.count(id) && ideals_.at(id) == current_ring_ && item_end()) {
        IdealExpr e;
        e.kind = IdealExpr::Kind::name;
        e.text = id;
        return e;
      }
      pos_ = start;
    }
    if (peek() == '(') {
      // a parenthesized polynomial, or a nested ideal
      std::optional<ScriptError> poly_err;
      try {
        IdealExpr e;
        e.kind = IdealExpr::Kind::poly;
        e.text = polynomial(ring);
        if (item_end()) return e;
      } catch (const ScriptError& err) {
        poly_err = err;
      }
      std::size_t poly_stop = pos_;
      pos_ = start;
      try {
        return ideal_list(ring);
      } catch (const ScriptError& err) {
        if (poly_err && pos_ < poly_stop) throw *poly_err;
        throw;
      }
    }
    IdealExpr e;
    e.kind = IdealExpr::Kind::poly;
    e.text = polynomial(ring);
    return e;
  }

  IdealDecl ideal_decl(std::size_t at) {
    IdealDecl d;
    d.name = new_name("an ideal name");
    const RingPtr& ring = current_ring(at);
    if (ring->index_of(d.name) >= 0) fail_at(at, "ideal name '" + d.name + "' clashes with a variable");
    expect('=');
    d.ring = current_ring_;
    d.expr = ideal_expr(ring);
    declare(d.name, "an ideal");
    ideals_[d.name] = d.ring;
    return d;
  }

  AlgebraDecl algebra_decl() {
    AlgebraDecl a;
    a.name = new_name("an algebra name");
    expect('=');
    skip();
    std::size_t rat = pos_;
    a.ring = identifier("a ring name");
    if (!rings_.count(a.ring)) fail_at(rat, "undeclared ring '" + a.ring + "'");
    current_ring_ = a.ring;
    expect('/');
    a.ideal = ideal_expr(rings_.at(a.ring));
    declare(a.name, "an algebra");
    algebras_[a.name] = a.ring;
    current_algebra_ = a.name;
    scope_ = {a.ring, scope_.params_ring};
    return a;
  }

  ModuleDecl module_decl(std::size_t at) {
    ModuleDecl m;
    m.name = new_name("a module name");
    if (current_algebra_.empty()) fail_at(at, "no algebra declared for this module");
    m.algebra = current_algebra_;
    const RingPtr& ring = rings_.at(algebras_.at(m.algebra));
    expect('=');
    expect_word("coker");
    skip();
    std::size_t mat = pos_;
    std::vector<std::vector<std::size_t>> where;
    expect('[');
    do {
      expect('[');
      std::vector<std::string> row;
      std::vector<std::size_t> offs;
      if (!accept(']')) {
        do {
          offs.push_back((skip(), pos_));
          row.push_back(polynomial(ring));
        } while (accept(','));
        expect(']');
      }
      if (!m.matrix.empty() && row.size() != m.matrix.front().size())
        fail_at(offs.empty() ? pos_ : offs.front(), "matrix rows have different lengths");
      m.matrix.push_back(std::move(row));
      where.push_back(std::move(offs));
    } while (accept(','));
    expect(']');
    skip();
    if (ident_start()) {
      expect_word("twists");
      expect('(');
      do m.twists.push_back(static_cast<int>(integer("a twist")));
      while (accept(','));
      expect(')');
      if (m.twists.size() != m.matrix.size()) fail_at(mat, "twists must list one degree per matrix row");
      for (int t : m.twists)
        if (t < -64 || t > 64) fail_at(mat, "twists must lie in [-64, 64]");
    }
    // every column must be homogeneous in the twisted grading
    const std::size_t cols = m.matrix.front().size();
    for (std::size_t j = 0; j < cols; ++j) {
      std::optional<int> deg;
      for (std::size_t i = 0; i < m.matrix.size(); ++i) {
        Polynomial p = parse_polynomial(ring, m.matrix[i][j]);
        if (p.is_zero()) continue;
        int d = *p.degree() + (m.twists.empty() ? 0 : m.twists[i]);
        if (deg && *deg != d) fail_at(where[i][j], "column " + std::to_string(j + 1) + " is not homogeneous");
        deg = d;
      }
    }
    declare(m.name, "a module");
    scope_.module_ring = algebras_.at(m.algebra);
    return m;
  }

  ParamsDecl params_decl(std::size_t at) {
    ParamsDecl p;
    p.name = new_name("a parameter ideal name");
    const RingPtr& ring = current_ring(at);
    p.ring = current_ring_;
    expect('=');
    expect('(');
    if (!accept(')')) {
      do p.gens.push_back(polynomial(ring));
      while (accept(','));
      expect(')');
    }
    declare(p.name, "a parameter ideal");
    scope_.params_ring = p.ring;
    return p;
  }

  ExampleDecl example_decl() {
    ExampleDecl e;
    skip();
    std::size_t at = pos_;
    e.family = identifier("an example family");
    std::vector<std::string> want;
    if (e.family == "ex39")
      want = {"l", "m"};
    else if (e.family == "ex46")
      want = {"l"};
    else
      fail_at(at, "unknown example '" + e.family + "' (expected ex39 or ex46)");
    std::map<std::string, int> got;
    for (;;) {
      skip();
      if (!ident_start()) break;
      std::size_t kat = pos_;
      std::string k = identifier("");
      if (std::find(want.begin(), want.end(), k) == want.end()) fail_at(kat, "unknown parameter '" + k + "' for " + e.family);
      if (got.count(k)) fail_at(kat, "parameter '" + k + "' given twice");
      expect('=');
      std::size_t vat = (skip(), pos_);
      long long v = integer("an integer");
      if (v < -1000 || v > 1000) fail_at(vat, "parameter out of range");
      got[k] = static_cast<int>(v);
    }
    for (const auto& k : want) {
      if (!got.count(k)) fail_at(at, "example " + e.family + " needs parameter '" + k + "'");
      e.args.emplace_back(k, got[k]);
    }
    if (e.family == "ex39") {
      int l = got["l"], m = got["m"];
      if (l < 2 || m < 1) fail_at(at, "ex39 needs l >= 2 and m >= 1");
      if (2 * l + m > kMaxVars) fail_at(at, "ex39 needs 2l+m <= " + std::to_string(kMaxVars));
    } else if (got["l"] < 1 || got["l"] > 255) {
      fail_at(at, "ex46 needs 1 <= l <= 255");
    }
    ++examples_;
    std::string label = "#example" + std::to_string(examples_);
    scope_ = {label, label};
    return e;
  }

  CheckCmd check_cmd(std::size_t at) {
    CheckCmd c;
    skip();
    std::size_t wat = pos_;
    c.what = identifier("thm1, thm2, invariants or audit");
    if (c.what != "thm1" && c.what != "thm2" && c.what != "invariants" && c.what != "audit")
      fail_at(wat, "unknown check '" + c.what + "' (expected thm1, thm2, invariants or audit)");
    if (scope_.module_ring.empty()) fail_at(at, "no module or algebra in scope");
    if (c.what != "invariants") {
      if (scope_.params_ring.empty()) fail_at(at, "no parameter ideal in scope");
      if (scope_.params_ring != scope_.module_ring) fail_at(at, "parameters and module are over different rings");
    } else if (!scope_.params_ring.empty() && scope_.params_ring != scope_.module_ring) {
      fail_at(at, "parameters and module are over different rings");
    }
    return c;
  }

  std::string src_;
  std::vector<std::size_t> line_starts_;
  std::size_t pos_ = 0;

  std::map<std::string, std::string> kinds_;
  std::map<std::string, RingPtr> rings_;
  std::map<std::string, std::string> ideals_;
  std::map<std::string, std::string> algebras_;
  std::string current_ring_;
  std::string current_algebra_;
  Scope scope_;
  int examples_ = 0;
};

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

struct Printer {
  std::string& out;

  void operator()(const RingDecl& r) const {
    out += "ring " + r.name + " = " + (r.characteristic ? "ZZ/" + std::to_string(r.characteristic) : std::string("QQ")) +
           "[" + join(r.vars, ",") + "];\n";
  }
  void operator()(const IdealDecl& d) const { out += "ideal " + d.name + " = " + print_expr(d.expr) + ";\n"; }
  void operator()(const AlgebraDecl& a) const { out += "algebra " + a.name + " = " + a.ring + " / " + print_expr(a.ideal) + ";\n"; }
  void operator()(const ModuleDecl& m) const {
    std::vector<std::string> rows;
    for (const auto& r : m.matrix) rows.push_back("[" + join(r) + "]");
    out += "module " + m.name + " = coker [" + join(rows) + "]";
    if (!m.twists.empty()) {
      std::vector<std::string> t;
      for (int x : m.twists) t.push_back(std::to_string(x));
      out += " twists (" + join(t) + ")";
    }
    out += ";\n";
  }
  void operator()(const ParamsDecl& p) const { out += "params " + p.name + " = (" + join(p.gens) + ");\n"; }
  void operator()(const ExampleDecl& e) const {
    out += "example " + e.family;
    for (const auto& [k, v] : e.args) out += " " + k + "=" + std::to_string(v);
    out += ";\n";
  }
  void operator()(const CheckCmd& c) const { out += "check " + c.what + ";\n"; }
};

}  // namespace

std::size_t InputScript::command_count() const {
  return static_cast<std::size_t>(
      std::count_if(statements.begin(), statements.end(), [](const Statement& s) { return std::holds_alternative<CheckCmd>(s); }));
}

InputScript parse_input(std::string_view text) { return ScriptParser(text).run(); }

std::string print_expr(const IdealExpr& e) {
  using K = IdealExpr::Kind;
  switch (e.kind) {
    case K::poly:
    case K::name:
      return e.text;
    case K::list: {
      std::vector<std::string> items;
      for (const auto& a : e.args) items.push_back(print_expr(a));
      return "(" + join(items) + ")";
    }
    case K::intersect:
      return "intersect(" + print_expr(e.args[0]) + ", " + print_expr(e.args[1]) + ")";
    case K::product:
      return "product(" + print_expr(e.args[0]) + ", " + print_expr(e.args[1]) + ")";
    case K::power:
      return "power(" + print_expr(e.args[0]) + ", " + std::to_string(e.exponent) + ")";
  }
  return {};
}

std::string print_script(const InputScript& s) {
  std::string out;
  for (const auto& st : s.statements) std::visit(Printer{out}, st);
  return out;
}

}  // namespace hdeg::cli

#include "gensub/types.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gensub/error.hpp"
#include "gensub/judge.hpp"

namespace gensub {

// ---------------------------------------------------------------------------
// TypeExpr / BoundExpr

TypeExpr TypeExpr::named(std::string cls) {
  TypeExpr t;
  t.kind_ = Kind::kClass;
  t.name_ = std::move(cls);
  return t;
}

TypeExpr TypeExpr::app(std::string cls, IntervalArg arg) {
  TypeExpr t;
  t.kind_ = Kind::kApp;
  t.name_ = std::move(cls);
  t.arg_ = std::make_shared<const IntervalArg>(std::move(arg));
  return t;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.kind_ != b.kind_ || a.name_ != b.name_) return false;
  if (a.kind_ != TypeExpr::Kind::kApp) return true;
  return a.arg_ == b.arg_ || *a.arg_ == *b.arg_;
}

BoundExpr BoundExpr::var(std::string name) {
  BoundExpr b;
  b.kind_ = Kind::kVar;
  b.name_ = std::move(name);
  return b;
}

BoundExpr BoundExpr::null() { return BoundExpr(); }

BoundExpr BoundExpr::named(std::string cls) {
  BoundExpr b;
  b.kind_ = Kind::kClass;
  b.name_ = std::move(cls);
  return b;
}

BoundExpr BoundExpr::app(std::string cls, BoundExpr lo, BoundExpr hi) {
  BoundExpr b;
  b.kind_ = Kind::kApp;
  b.name_ = std::move(cls);
  b.arg_ = std::make_shared<const std::pair<BoundExpr, BoundExpr>>(std::move(lo), std::move(hi));
  return b;
}

BoundExpr BoundExpr::from(const TypeExpr& t) {
  switch (t.kind()) {
    case TypeExpr::Kind::kNull: return null();
    case TypeExpr::Kind::kClass: return named(t.name());
    case TypeExpr::Kind::kApp: return app(t.name(), from(t.arg().lo), from(t.arg().hi));
  }
  return null();
}

bool BoundExpr::mentions(std::string_view param) const {
  switch (kind_) {
    case Kind::kVar: return name_ == param;
    case Kind::kApp: return lo().mentions(param) || hi().mentions(param);
    default: return false;
  }
}

TypeExpr substitute(const BoundExpr& bound, std::string_view param, const TypeExpr& value) {
  switch (bound.kind()) {
    case BoundExpr::Kind::kVar:
      if (bound.name() != param) throw Error("unbound type variable " + bound.name());
      return value;
    case BoundExpr::Kind::kNull: return TypeExpr::null();
    case BoundExpr::Kind::kClass: return TypeExpr::named(bound.name());
    case BoundExpr::Kind::kApp:
      return TypeExpr::app(bound.name(), {substitute(bound.lo(), param, value),
                                          substitute(bound.hi(), param, value)});
  }
  return TypeExpr::null();
}

namespace {

bool is_null_bound(const BoundExpr& b) { return b.kind() == BoundExpr::Kind::kNull; }
bool is_object_bound(const BoundExpr& b) {
  return b.kind() == BoundExpr::Kind::kClass && b.name() == kObject;
}

bool same_bound(const BoundExpr& a, const BoundExpr& b) { return render(a) == render(b); }

}  // namespace

std::string render(const BoundExpr& b) {
  switch (b.kind()) {
    case BoundExpr::Kind::kVar:
    case BoundExpr::Kind::kNull:
    case BoundExpr::Kind::kClass: return b.name();
    case BoundExpr::Kind::kApp: break;
  }
  const BoundExpr& lo = b.lo();
  const BoundExpr& hi = b.hi();
  std::string arg;
  if (same_bound(lo, hi)) arg = render(lo);
  else if (is_null_bound(lo) && is_object_bound(hi)) arg = "?";
  else if (is_null_bound(lo)) arg = "? extends " + render(hi);
  else if (is_object_bound(hi)) arg = "? super " + render(lo);
  else arg = "[" + render(lo) + "," + render(hi) + "]";
  return b.name() + "<" + arg + ">";
}

std::string render(const IntervalArg& a) {
  if (a.lo == a.hi) return render(a.lo);
  if (a.lo.is_null() && a.hi.is_object()) return "?";
  if (a.lo.is_null()) return "? extends " + render(a.hi);
  if (a.hi.is_object()) return "? super " + render(a.lo);
  return "[" + render(a.lo) + "," + render(a.hi) + "]";
}

std::string render(const TypeExpr& t) {
  if (!t.is_app()) return t.name();
  return t.name() + "<" + render(t.arg()) + ">";
}

std::string erasure(const TypeExpr& t) { return t.name(); }

TypeExpr free_type(std::string_view cls, const ClassTable& table) {
  if (cls == kNull) return TypeExpr::null();
  const ClassDecl* decl = table.find(cls);
  if (decl == nullptr) throw UnknownElement(std::string(cls));
  if (decl->is_generic) return TypeExpr::app(decl->name, IntervalArg::any());
  return TypeExpr::named(decl->name);
}

std::size_t depth(const TypeExpr& t) {
  if (!t.is_app()) return 0;
  return 1 + std::max(depth(t.arg().lo), depth(t.arg().hi));
}

// ---------------------------------------------------------------------------
// Lexing and recursive-descent parsing

namespace {

struct Token {
  enum class Kind { kIdent, kSymbol, kEnd };
  Kind kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      const std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                src[i] == '_' || src[i] == '$' || src[i] == '.'))
        ++i;
      out.push_back({Token::Kind::kIdent, std::string(src.substr(start, i - start)), start + 1});
    } else if (std::string_view("<>,[]?").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::kSymbol, std::string(1, c), i + 1});
      ++i;
    } else {
      std::string where = line ? "line " + std::to_string(line) + ", " : std::string();
      throw ParseError(ParseError::Kind::kSyntax, where + "column " + std::to_string(i + 1) +
                                                      ": unexpected character '" + c + "'");
    }
  }
  out.push_back({Token::Kind::kEnd, "", src.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::size_t line, std::optional<std::string> param)
      : tokens_(tokenize(src, line)), line_(line), param_(std::move(param)) {}

  void set_param(std::optional<std::string> param) { param_ = std::move(param); }

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::kEnd; }
  bool at(std::string_view text) const { return peek().kind != Token::Kind::kEnd && peek().text == text; }

  bool accept(std::string_view text) {
    if (!at(text)) return false;
    ++pos_;
    return true;
  }

  void expect(std::string_view text) {
    if (!accept(text)) fail("expected '" + std::string(text) + "'");
  }

  std::string ident() {
    if (peek().kind != Token::Kind::kIdent || is_keyword(peek().text)) fail("expected identifier");
    return tokens_[pos_++].text;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::string where = line_ ? "line " + std::to_string(line_) + ", " : std::string();
    const Token& t = peek();
    std::string found = t.kind == Token::Kind::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError(ParseError::Kind::kSyntax,
                     where + "column " + std::to_string(t.column) + ": " + msg + ", found " + found);
  }

  // type := Ident [ '<' arg '>' ]
  BoundExpr type() {
    const std::string name = ident();
    if (param_ && name == *param_) {
      if (at("<")) fail("type parameter " + name + " takes no argument");
      return BoundExpr::var(name);
    }
    if (!accept("<")) return name == kNull ? BoundExpr::null() : BoundExpr::named(name);
    auto [lo, hi] = arg();
    expect(">");
    return BoundExpr::app(name, std::move(lo), std::move(hi));
  }

  // arg := '?' [('extends' | 'super') type] | '[' type ',' type ']' | type
  std::pair<BoundExpr, BoundExpr> arg() {
    if (accept("?")) {
      if (accept("extends")) return {BoundExpr::null(), type()};
      if (accept("super")) return {type(), BoundExpr::named(std::string(kObject))};
      return {BoundExpr::null(), BoundExpr::named(std::string(kObject))};
    }
    if (accept("[")) {
      BoundExpr lo = type();
      expect(",");
      BoundExpr hi = type();
      expect("]");
      return {std::move(lo), std::move(hi)};
    }
    BoundExpr t = type();
    return {t, t};
  }

 private:
  static bool is_keyword(std::string_view s) {
    return s == "class" || s == "extends" || s == "super";
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::optional<std::string> param_;
};

// Class-existence and arity checks on a parsed expression.
void check_shape(const BoundExpr& b, const ClassTable& table) {
  switch (b.kind()) {
    case BoundExpr::Kind::kVar:
    case BoundExpr::Kind::kNull: return;
    case BoundExpr::Kind::kClass:
    case BoundExpr::Kind::kApp: break;
  }
  if (b.name() == kNull)
    throw ParseError(ParseError::Kind::kAdmittability, "admittability: Null takes no type argument");
  const ClassDecl* decl = table.find(b.name());
  if (decl == nullptr) throw ParseError(ParseError::Kind::kUnknownClass, "unknown class " + b.name());
  if (b.kind() == BoundExpr::Kind::kClass && decl->is_generic)
    throw ParseError(ParseError::Kind::kAdmittability,
                     "admittability: generic class " + b.name() + " requires a type argument");
  if (b.kind() == BoundExpr::Kind::kApp) {
    if (!decl->is_generic)
      throw ParseError(ParseError::Kind::kAdmittability,
                       "admittability: non-generic class " + b.name() + " takes no type argument");
    check_shape(b.lo(), table);
    check_shape(b.hi(), table);
  }
}

TypeExpr to_ground(const BoundExpr& b, const ClassTable& table) {
  switch (b.kind()) {
    case BoundExpr::Kind::kVar: throw ParseError(ParseError::Kind::kSyntax, "unexpected type variable " + b.name());
    case BoundExpr::Kind::kNull: return TypeExpr::null();
    case BoundExpr::Kind::kClass: return TypeExpr::named(b.name());
    case BoundExpr::Kind::kApp: break;
  }
  IntervalArg a{to_ground(b.lo(), table), to_ground(b.hi(), table)};
  if (!subtype(table, a.lo, a.hi))
    throw ParseError(ParseError::Kind::kMalformedInterval,
                     "malformed interval: " + render(a.hi) + " is not a supertype of " + render(a.lo));
  return TypeExpr::app(b.name(), std::move(a));
}

}  // namespace

TypeExpr parse_type(std::string_view text, const ClassTable& table) {
  Parser p(text, 0, std::nullopt);
  BoundExpr b = p.type();
  p.expect_end();
  check_shape(b, table);
  return to_ground(b, table);
}

IntervalArg parse_arg(std::string_view text, const ClassTable& table) {
  Parser p(text, 0, std::nullopt);
  auto [lo, hi] = p.arg();
  p.expect_end();
  check_shape(lo, table);
  check_shape(hi, table);
  IntervalArg a{to_ground(lo, table), to_ground(hi, table)};
  if (!subtype(table, a.lo, a.hi))
    throw ParseError(ParseError::Kind::kMalformedInterval,
                     "malformed interval: " + render(a.hi) + " is not a supertype of " + render(a.lo));
  return a;
}

BoundExpr parse_bound(std::string_view text, const ClassTable& table, std::string_view param) {
  Parser p(text, 0, std::string(param));
  BoundExpr b = p.type();
  p.expect_end();
  check_shape(b, table);
  return b;
}

// ---------------------------------------------------------------------------
// Class tables

const ClassDecl* ClassTable::find(std::string_view name) const {
  auto it = decls_.find(std::string(name));
  return it == decls_.end() ? nullptr : &it->second;
}

bool ClassTable::is_generic(std::string_view name) const {
  return generic_set_.count(std::string(name)) != 0;
}

std::vector<std::string> ClassTable::non_generic() const {
  std::vector<std::string> out;
  for (const auto& [name, decl] : decls_)
    if (!decl.is_generic) out.push_back(name);
  return out;
}

ClassTable ClassTable::from_decls(std::vector<ClassDecl> decls) {
  using K = ParseError::Kind;
  ClassTable table;
  for (auto& d : decls) {
    if (d.name == kNull) throw ParseError(K::kDeclaration, "Null cannot be declared");
    if (d.name == kObject) {
      if (d.is_generic) throw ParseError(K::kDeclaration, "Object cannot be generic");
      if (!d.superclass.empty() && d.superclass != kObject)
        throw ParseError(K::kDeclaration, "Object has no superclass");
      d.superclass.clear();
    } else if (d.superclass.empty()) {
      d.superclass = std::string(kObject);
    }
    if (!d.is_generic && (d.lower_bound || d.upper_bound))
      throw ParseError(K::kDeclaration, "bounds on non-generic class " + d.name);
    const std::string name = d.name;
    if (!table.decls_.emplace(name, std::move(d)).second)
      throw ParseError(K::kDeclaration, "duplicate class " + name);
  }
  table.decls_.try_emplace(std::string(kObject), ClassDecl{std::string(kObject), false, "", {}, {}, ""});

  for (const auto& [name, d] : table.decls_) {
    if (d.is_generic) table.generic_set_.insert(name);
    if (d.superclass.empty()) continue;
    const ClassDecl* super = table.find(d.superclass);
    if (super == nullptr)
      throw ParseError(K::kUnknownClass, "unknown superclass " + d.superclass + " of class " + name);
    if (!d.is_generic && super->is_generic)
      throw ParseError(K::kDeclaration, "non-generic class cannot extend generic class (" + name +
                                            " extends " + super->name + ")");
  }

  // Bound expressions: classes and arity only; the bounds' own arguments are
  // never checked against bounds.
  for (const auto& [name, d] : table.decls_) {
    for (const auto* bound : {&d.lower_bound, &d.upper_bound}) {
      if (*bound) check_shape(**bound, table);
    }
  }

  std::vector<std::string> names{std::string(kNull)};
  std::vector<Pair> rel;
  std::set<std::string> has_sub;
  for (const auto& [name, d] : table.decls_) {
    names.push_back(name);
    if (!d.superclass.empty()) {
      rel.emplace_back(name, d.superclass);
      has_sub.insert(d.superclass);
    }
  }
  for (const auto& [name, d] : table.decls_)
    if (!has_sub.count(name)) rel.emplace_back(std::string(kNull), name);
  try {
    table.class_poset_ = transitive_reduction(rel, std::move(names));
  } catch (const CycleError& e) {
    throw ParseError(K::kDeclaration, std::string("cyclic inheritance: ") + e.what());
  }
  return table;
}

ClassTable parse_class_table(std::string_view text) {
  std::vector<ClassDecl> decls;
  // Generic superclasses must receive the parameter verbatim; checked once all
  // names are known.
  std::vector<std::pair<std::size_t, bool>> super_args;  // (line, has argument)

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    Parser p(line, line_no, std::nullopt);
    p.expect("class");
    ClassDecl d;
    d.name = p.ident();
    if (p.accept("<")) {
      d.is_generic = true;
      d.param_name = p.ident();
      p.set_param(d.param_name);
      while (!p.accept(">")) {
        if (p.accept("super")) {
          if (d.lower_bound) p.fail("duplicate lower bound");
          d.lower_bound = p.type();
        } else if (p.accept("extends")) {
          if (d.upper_bound) p.fail("duplicate upper bound");
          d.upper_bound = p.type();
        } else {
          p.fail("expected 'super', 'extends' or '>'");
        }
      }
    }
    bool super_arg = false;
    if (p.accept("extends")) {
      p.set_param(std::nullopt);
      d.superclass = p.ident();
      if (p.accept("<")) {
        super_arg = true;
        if (!d.is_generic) {
          // Rejected below once the superclass is known.
          p.arg();
          p.expect(">");
          p.expect_end();
          super_args.emplace_back(line_no, super_arg);
          decls.push_back(std::move(d));
          continue;
        }
        const std::string forwarded = p.ident();
        if (forwarded != d.param_name)
          throw ParseError(ParseError::Kind::kDeclaration,
                           "line " + std::to_string(line_no) + ": superclass " + d.superclass +
                               " must receive the type parameter of " + d.name + " verbatim");
        p.expect(">");
      }
    }
    p.expect_end();
    super_args.emplace_back(line_no, super_arg);
    decls.push_back(std::move(d));
  }

  for (std::size_t i = 0; i < decls.size(); ++i) {
    const auto& d = decls[i];
    auto super = std::find_if(decls.begin(), decls.end(),
                              [&](const ClassDecl& o) { return o.name == d.superclass; });
    if (super == decls.end()) continue;
    const auto [line, has_arg] = super_args[i];
    if (super->is_generic && !d.is_generic)
      throw ParseError(ParseError::Kind::kDeclaration,
                       "line " + std::to_string(line) + ": non-generic class cannot extend generic class (" +
                           d.name + " extends " + super->name + ")");
    if (super->is_generic && d.is_generic && !has_arg)
      throw ParseError(ParseError::Kind::kDeclaration,
                       "line " + std::to_string(line) + ": generic superclass " + super->name +
                           " must receive the type parameter of " + d.name);
    if (!super->is_generic && has_arg)
      throw ParseError(ParseError::Kind::kAdmittability,
                       "line " + std::to_string(line) + ": admittability: non-generic class " +
                           super->name + " takes no type argument");
  }
  return ClassTable::from_decls(std::move(decls));
}

ClassTable load_class_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read class table " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_class_table(buf.str());
}

}  // namespace gensub

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gensub/poset.hpp"

namespace gensub {

inline constexpr std::string_view kObject = "Object";
inline constexpr std::string_view kNull = "Null";

struct IntervalArg;

/// Ground type: Null, a non-generic class, or a generic class applied to one
/// interval argument. Construction is unchecked; parse_type and
/// is_admittable validate against a table.
class TypeExpr {
 public:
  enum class Kind { kNull, kClass, kApp };

  TypeExpr() = default;  // Null

  static TypeExpr null() { return TypeExpr(); }
  static TypeExpr object() { return named(std::string(kObject)); }
  static TypeExpr named(std::string cls);
  static TypeExpr app(std::string cls, IntervalArg arg);

  Kind kind() const { return kind_; }
  bool is_null() const { return kind_ == Kind::kNull; }
  bool is_app() const { return kind_ == Kind::kApp; }
  bool is_object() const { return kind_ == Kind::kClass && name_ == kObject; }

  /// Class name; "Null" for the null type.
  const std::string& name() const { return name_; }
  /// Precondition: is_app().
  const IntervalArg& arg() const { return *arg_; }

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);

 private:
  Kind kind_ = Kind::kNull;
  std::string name_{kNull};
  std::shared_ptr<const IntervalArg> arg_;
};

/// Canonical type argument [lo, hi]. Exact arguments are [t, t]; wildcards
/// are the intervals with lo = Null or hi = Object.
struct IntervalArg {
  TypeExpr lo;
  TypeExpr hi;

  static IntervalArg exact(const TypeExpr& t) { return {t, t}; }
  static IntervalArg any() { return {TypeExpr::null(), TypeExpr::object()}; }
  static IntervalArg extends(const TypeExpr& hi) { return {TypeExpr::null(), hi}; }
  static IntervalArg super(const TypeExpr& lo) { return {lo, TypeExpr::object()}; }

  bool is_exact() const { return lo == hi; }

  friend bool operator==(const IntervalArg&, const IntervalArg&) = default;
};

/// Type expression that may mention one type parameter; used for declared
/// bounds (F-bounds) and dfbg bound specs.
class BoundExpr {
 public:
  enum class Kind { kVar, kNull, kClass, kApp };

  static BoundExpr var(std::string name);
  static BoundExpr null();
  static BoundExpr named(std::string cls);
  static BoundExpr app(std::string cls, BoundExpr lo, BoundExpr hi);
  static BoundExpr from(const TypeExpr& t);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const BoundExpr& lo() const { return arg_->first; }
  const BoundExpr& hi() const { return arg_->second; }

  bool mentions(std::string_view param) const;

 private:
  Kind kind_ = Kind::kNull;
  std::string name_{kNull};
  std::shared_ptr<const std::pair<BoundExpr, BoundExpr>> arg_;
};

/// Replaces the parameter by `value` (an occurrence inside an argument
/// becomes the singleton [value, value]). Throws Error if the expression
/// mentions any other variable.
TypeExpr substitute(const BoundExpr& bound, std::string_view param, const TypeExpr& value);

std::string render(const BoundExpr& b);

struct ClassDecl {
  std::string name;
  bool is_generic = false;
  std::string param_name;
  std::optional<BoundExpr> lower_bound;
  std::optional<BoundExpr> upper_bound;
  /// Empty only for Object.
  std::string superclass;
};

/// The declared subclassing relation together with its generic subset.
class ClassTable {
 public:
  /// Validates declarations; auto-declares Object and synthesizes Null.
  /// Throws ParseError.
  static ClassTable from_decls(std::vector<ClassDecl> decls);

  const std::map<std::string, ClassDecl>& decls() const { return decls_; }
  const ClassDecl* find(std::string_view name) const;

  /// Subclassing order over all class names plus Null.
  const Poset& class_poset() const { return class_poset_; }
  const std::set<std::string>& generic_set() const { return generic_set_; }
  bool is_generic(std::string_view name) const;
  /// Declared non-generic classes (Object included, Null excluded).
  std::vector<std::string> non_generic() const;
  /// Every class name in the class poset, Null included.
  const std::vector<std::string>& classes() const { return class_poset_.elements(); }

 private:
  std::map<std::string, ClassDecl> decls_;
  Poset class_poset_;
  std::set<std::string> generic_set_;
};

/// Line-oriented class-table DSL:
///   class Name[<P [super LB] [extends UB]>] [extends Super[<P>]]
/// `#` starts a comment. Throws ParseError with the offending line number.
ClassTable parse_class_table(std::string_view text);
ClassTable load_class_table(const std::string& path);

/// Parses a ground type, folding wildcard syntax into intervals. Throws
/// ParseError (kAdmittability for arity problems).
TypeExpr parse_type(std::string_view text, const ClassTable& table);
/// Parses a type argument: a type, `?`, `? extends T`, `? super T`, `[L,U]`.
IntervalArg parse_arg(std::string_view text, const ClassTable& table);
/// Parses a bound expression in which `param` may occur.
BoundExpr parse_bound(std::string_view text, const ClassTable& table, std::string_view param);

std::string erasure(const TypeExpr& t);
/// Throws UnknownElement for undeclared classes.
TypeExpr free_type(std::string_view cls, const ClassTable& table);
std::size_t depth(const TypeExpr& t);

/// Canonical text: exact arguments print bare, [Null,u] as `? extends u`,
/// [l,Object] as `? super l`, [Null,Object] as `?`, otherwise `[l,u]`.
std::string render(const TypeExpr& t);
std::string render(const IntervalArg& a);

}  // namespace gensub

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace tel {

/// Connectives of the core language. Everything the parser accepts is
/// desugared into the six primitives (Prop, Not, And, Know, Box, Bel);
/// Meta leaves occur only in axiom-scheme templates.
enum class Conn { Prop, Not, And, Know, Box, Bel, Meta };

/// Immutable formula tree with shared subterms. Copies are cheap; all
/// operations are pure, so formulas are safe to share across threads.
class Formula {
 public:
  Formula() = default;

  static Formula prop(std::string name);
  static Formula meta(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula know(Formula f);
  static Formula box(Formula f);
  static Formula bel(Formula f);

  // Defined connectives, expanded immediately. Bottom uses the reserved
  // proposition name "p0".
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula bottom();
  static Formula top();
  static Formula dia(Formula f);
  static Formula hat_k(Formula f);
  static Formula hat_b(Formula f);

  Conn kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Formula& child() const { return node_->a; }
  const Formula& left() const { return node_->a; }
  const Formula& right() const { return node_->b; }

  bool is_null() const { return node_ == nullptr; }
  /// Stable node identity, usable as a memoization key.
  const void* id() const { return node_.get(); }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    Conn kind;
    std::string name;  // Prop / Meta only
    Formula a, b;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Conn k, std::string name, Formula a, Formula b);

  std::shared_ptr<const Node> node_;
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t offset);
  std::size_t offset;
};

/// Parses the ASCII surface syntax and returns the desugared formula.
/// Grammar tokens: identifiers [a-z][a-z0-9_]*, ~ or !, &, |, ->, <->,
/// K, B, [] or box, <> or dia, true, false, parentheses.
/// Precedence: unary > & > | > -> (right) > <-> (right).
Formula parse_formula(const std::string& text);

/// Canonical fully-parenthesized rendering; parse_formula(render(f)) == f.
std::string render(const Formula& f);

struct Measure {
  std::set<std::string> props;
  int modal_depth = 0;
  int size = 0;
};
Measure measure(const Formula& f);

enum class TranslationKind { T, E, Alpha };

/// t: every Box becomes Know. e: every Bel f becomes Know Dia Box f.
/// alpha: every Bel f becomes Bel Dia Box f. All three rewrite bottom-up,
/// so nested occurrences are handled.
Formula translate(TranslationKind kind, const Formula& f);

bool contains_kind(const Formula& f, Conn k);

using Substitution = std::map<std::string, Formula>;

/// Matches a scheme template (a formula with Meta leaves) against a
/// concrete formula. Metavariables bind on first occurrence; later
/// occurrences must match exactly.
std::optional<Substitution> match_scheme(const Formula& pattern, const Formula& f);

/// Replaces every Meta leaf by its binding; throws std::out_of_range if a
/// metavariable is unbound.
Formula instantiate(const Formula& pattern, const Substitution& subst);

}  // namespace tel

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "overfix/frontend/types.hpp"
#include "overfix/smt/formula.hpp"
#include "overfix/support/error.hpp"

namespace overfix::smt {

using frontend::CType;

enum class Tag { Path, Checker, Repair };
std::string_view tagName(Tag t);

struct SsaVar {
  std::string name;
  CType type = CType::Int;
  bool operator==(const SsaVar&) const = default;
};

struct Assert {
  Formula formula;
  Tag tag = Tag::Path;
  std::vector<std::string> vars;
  /// Variable this assert gives a value to, if it is a definition.
  std::string defines;
};

class UndeclaredVariable : public Error {
 public:
  explicit UndeclaredVariable(const std::string& symbol)
      : Error("UndeclaredVariable: " + symbol), symbol_(symbol) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// Ordered declarations and tagged asserts. Copies are cheap enough to be
/// used as immutable snapshots (formulas are shared).
class SmtScript {
 public:
  const std::vector<SsaVar>& decls() const noexcept { return decls_; }
  const std::vector<Assert>& asserts() const noexcept { return asserts_; }

  /// Declares the variable unless it already is.
  void declare(const SsaVar& v);
  bool declared(std::string_view name) const;
  const SsaVar* find(std::string_view name) const;
  void add(Formula f, Tag tag = Tag::Path);
  void define(const std::string& var, Formula f, Tag tag = Tag::Path);

  /// Drops declarations and asserts beyond the given counts.
  void truncate(std::size_t declCount, std::size_t assertCount);
  /// Copy without asserts carrying `tag`.
  SmtScript without(Tag tag) const;
  /// Copy restricted to asserts transitively sharing variables with
  /// `seeds`, keeping the original order. Variable-free asserts are kept.
  SmtScript slice(const std::set<std::string>& seeds) const;
  /// Variables transitively connected to `seeds` through asserts.
  std::set<std::string> closure(const std::set<std::string>& seeds) const;
  /// Variables the seeds depend on: definitions are followed from the
  /// defined variable to the ones it is computed from, and any other
  /// assert links all of its variables.
  std::set<std::string> dependencies(const std::set<std::string>& seeds) const;

  std::vector<std::string> assertLines() const;

 private:
  void indexAssert(std::size_t i);

  std::vector<SsaVar> decls_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<Assert> asserts_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> uses_;
};

/// Canonical SMT-LIB v2 text: logic header, one declare-const per
/// variable in declaration order, asserts in order, `(check-sat)`.
/// Throws UndeclaredVariable.
std::string emit(const SmtScript& script);

/// Hands out versioned SSA names: `base_1`, `base_2`, ...
class SsaFactory {
 public:
  SsaVar fresh(const std::string& base, CType type);
  /// Latest version created for `base`, if any.
  std::optional<SsaVar> current(const std::string& base) const;

  struct Mark {
    std::map<std::string, std::pair<int, CType>> versions;
  };
  Mark mark() const { return {versions_}; }
  void reset(const Mark& m) { versions_ = m.versions; }

 private:
  std::map<std::string, std::pair<int, CType>> versions_;
};

}  // namespace overfix::smt

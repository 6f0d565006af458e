#pragma once

#include <map>
#include <optional>
#include <string>

#include "overfix/frontend/ast.hpp"
#include "overfix/frontend/types.hpp"

namespace oracle {

/// Concrete C evaluation of an expression tree: truncating division,
/// short-circuit && and ||, `sqrt` over doubles, limit constants from
/// `table`. Values are mathematical (no wrapping). Returns nullopt on an
/// unbound name or a division by zero that is actually reached.
std::optional<double> evalExpr(const overfix::frontend::AstNode& e, const std::map<std::string, long long>& env,
                               const overfix::frontend::LimitsTable& table);

/// Parses `expr` as the condition of an `if` inside a function whose
/// integer parameters are `params` (all of type `type`), and evaluates it.
class GuardEvaluator {
 public:
  GuardEvaluator(const std::string& expr, const std::vector<std::string>& params, overfix::frontend::CType type,
                 overfix::frontend::LimitsTable table);
  bool operator()(const std::map<std::string, long long>& env) const;

 private:
  std::unique_ptr<overfix::frontend::SourceUnit> unit_;
  const overfix::frontend::AstNode* cond_ = nullptr;
  overfix::frontend::LimitsTable table_;
};

}  // namespace oracle

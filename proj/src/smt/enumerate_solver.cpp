#include <algorithm>
#include <map>

#include "overfix/smt/solver.hpp"

namespace overfix::smt {

namespace {

class EnumerateSolver final : public Solver {
 public:
  explicit EnumerateSolver(EnumerateOptions o) : opts_(std::move(o)) {}

  std::string name() const override { return "enumerate"; }

  SolveResult check(const SmtScript& script) override {
    plan(script);
    steps_ = 0;
    exhausted_ = false;
    Model m;
    SolveResult r;
    if (assign(0, m)) {
      r.status = Status::Sat;
      r.model = std::move(m);
    } else if (exhausted_) {
      r.status = Status::Unknown;
      r.reason = "enumeration budget exhausted";
    } else {
      r.status = Status::Unsat;
    }
    return r;
  }

 private:
  struct Step {
    std::string var;
    bool computed = false;
    Formula definition;
    Int lo = 0;
    Int hi = 0;
    /// Asserts whose variables are all bound once this step is done.
    std::vector<Formula> checks;
  };

  static bool boundOf(const Formula& f, std::string& v, Int& lo, Int& hi) {
    if (f->args.size() != 2) return false;
    const Formula& a = f->args[0];
    const Formula& b = f->args[1];
    Op op = f->op;
    const Formula* x = nullptr;
    Int c = 0;
    if (a->op == Op::Var && b->op == Op::Const) {
      x = &a;
      c = b->value;
    } else if (a->op == Op::Const && b->op == Op::Var) {
      x = &b;
      c = a->value;
      switch (op) {
        case Op::Lt: op = Op::Gt; break;
        case Op::Le: op = Op::Ge; break;
        case Op::Gt: op = Op::Lt; break;
        case Op::Ge: op = Op::Le; break;
        default: break;
      }
    } else {
      return false;
    }
    v = (*x)->var;
    switch (op) {
      case Op::Lt: hi = std::min(hi, c - 1); return true;
      case Op::Le: hi = std::min(hi, c); return true;
      case Op::Gt: lo = std::max(lo, c + 1); return true;
      case Op::Ge: lo = std::max(lo, c); return true;
      case Op::Eq:
        lo = std::max(lo, c);
        hi = std::min(hi, c);
        return true;
      default: return false;
    }
  }

  void plan(const SmtScript& script) {
    steps_list_.clear();
    preChecks_.clear();
    std::map<std::string, Formula, std::less<>> defs;
    std::map<std::string, std::pair<Int, Int>, std::less<>> ranges;
    for (const auto& d : script.decls()) {
      auto b = opts_.limits.bounds(d.type == CType::Void || d.type == CType::Ptr ? CType::Int : d.type);
      ranges[d.name] = {b.minVal, b.maxVal};
    }
    std::vector<Formula> rest;
    for (const auto& a : script.asserts()) {
      const Formula& f = a.formula;
      if (f->op == Op::Eq && f->args[0]->op == Op::Var && !defs.count(f->args[0]->var)) {
        std::set<std::string> vs;
        collectVars(f->args[1], vs);
        const std::string& v = f->args[0]->var;
        if (!vs.count(v)) {
          defs.emplace(v, f->args[1]);
          continue;
        }
      }
      std::string v;
      auto it = ranges.end();
      Int lo = -kIntInfinity, hi = kIntInfinity;
      if (boundOf(f, v, lo, hi) && (it = ranges.find(v)) != ranges.end()) {
        it->second.first = std::max(it->second.first, lo);
        it->second.second = std::min(it->second.second, hi);
      }
      rest.push_back(f);
    }
    // Definitions must not be cyclic; a variable whose definition depends on
    // itself transitively is enumerated instead.
    std::set<std::string> bound;
    std::set<std::string> pending;
    for (const auto& d : script.decls()) pending.insert(d.name);
    auto ready = [&](const Formula& f) {
      std::set<std::string> vs;
      collectVars(f, vs);
      return std::all_of(vs.begin(), vs.end(), [&](const std::string& v) { return bound.count(v) > 0; });
    };
    auto addComputed = [&]() {
      bool progress = true;
      while (progress) {
        progress = false;
        for (const auto& d : script.decls()) {
          if (!pending.count(d.name)) continue;
          auto it = defs.find(d.name);
          if (it == defs.end() || !ready(it->second)) continue;
          Step s;
          s.var = d.name;
          s.computed = true;
          s.definition = it->second;
          steps_list_.push_back(std::move(s));
          bound.insert(d.name);
          pending.erase(d.name);
          progress = true;
        }
      }
    };
    addComputed();
    for (const auto& d : script.decls()) {
      if (!pending.count(d.name)) continue;
      Step s;
      s.var = d.name;
      s.lo = ranges[d.name].first;
      s.hi = ranges[d.name].second;
      if (defs.count(d.name)) rest.push_back(eq(var(d.name), defs[d.name]));
      steps_list_.push_back(std::move(s));
      bound.insert(d.name);
      pending.erase(d.name);
      addComputed();
    }
    std::vector<bool> placed(rest.size(), false);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      std::set<std::string> vs;
      collectVars(rest[i], vs);
      if (vs.empty()) {
        preChecks_.push_back(rest[i]);
        placed[i] = true;
      }
    }
    std::set<std::string> seen;
    for (auto& s : steps_list_) {
      seen.insert(s.var);
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (placed[i]) continue;
        std::set<std::string> vs;
        collectVars(rest[i], vs);
        if (std::all_of(vs.begin(), vs.end(), [&](const std::string& v) { return seen.count(v) > 0; })) {
          s.checks.push_back(rest[i]);
          placed[i] = true;
        }
      }
    }
  }

  static bool holds(const Formula& f, const Model& m) {
    auto v = evaluate(f, m);
    return v && *v != 0;
  }

  bool assign(std::size_t k, Model& m) {
    if (k == 0) {
      for (const auto& c : preChecks_) {
        if (!holds(c, m)) return false;
      }
    }
    if (k == steps_list_.size()) return true;
    const Step& s = steps_list_[k];
    auto tryValue = [&](Int v) {
      m[s.var] = v;
      for (const auto& c : s.checks) {
        if (!holds(c, m)) return false;
      }
      return assign(k + 1, m);
    };
    if (s.computed) {
      auto v = evaluate(s.definition, m);
      if (!v) return false;
      if (tryValue(*v)) return true;
      m.erase(s.var);
      return false;
    }
    for (Int v = s.lo; v <= s.hi; ++v) {
      if (++steps_ > opts_.budget) {
        exhausted_ = true;
        return false;
      }
      if (tryValue(v)) return true;
      if (exhausted_) return false;
    }
    m.erase(s.var);
    return false;
  }

  EnumerateOptions opts_;
  std::vector<Step> steps_list_;
  std::vector<Formula> preChecks_;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::unique_ptr<Solver> makeEnumerateSolver(EnumerateOptions options) {
  return std::make_unique<EnumerateSolver>(std::move(options));
}

}  // namespace overfix::smt

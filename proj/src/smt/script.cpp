#include "overfix/smt/script.hpp"

#include <sstream>

namespace overfix::smt {

std::string_view tagName(Tag t) {
  switch (t) {
    case Tag::Path: return "path";
    case Tag::Checker: return "checker";
    case Tag::Repair: return "repair";
  }
  return "?";
}

void SmtScript::declare(const SsaVar& v) {
  if (index_.count(v.name)) return;
  index_.emplace(v.name, decls_.size());
  decls_.push_back(v);
}

bool SmtScript::declared(std::string_view name) const { return index_.find(name) != index_.end(); }

const SsaVar* SmtScript::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &decls_[it->second];
}

void SmtScript::add(Formula f, Tag tag) {
  std::set<std::string> vs;
  collectVars(f, vs);
  asserts_.push_back({std::move(f), tag, {vs.begin(), vs.end()}, {}});
  indexAssert(asserts_.size() - 1);
}

void SmtScript::define(const std::string& var, Formula f, Tag tag) {
  add(std::move(f), tag);
  asserts_.back().defines = var;
}

// Variable-free asserts are indexed under the empty name so that slices
// keep them.
void SmtScript::indexAssert(std::size_t i) {
  if (asserts_[i].vars.empty()) uses_[""].push_back(i);
  for (const auto& v : asserts_[i].vars) uses_[v].push_back(i);
}

void SmtScript::truncate(std::size_t declCount, std::size_t assertCount) {
  while (decls_.size() > declCount) {
    index_.erase(decls_.back().name);
    decls_.pop_back();
  }
  while (asserts_.size() > assertCount) {
    std::vector<std::string> keys = asserts_.back().vars;
    if (keys.empty()) keys.emplace_back();
    for (const auto& v : keys) {
      auto it = uses_.find(v);
      it->second.pop_back();
      if (it->second.empty()) uses_.erase(it);
    }
    asserts_.pop_back();
  }
}

SmtScript SmtScript::without(Tag tag) const {
  SmtScript out;
  out.decls_ = decls_;
  out.index_ = index_;
  for (const auto& a : asserts_) {
    if (a.tag != tag) {
      out.asserts_.push_back(a);
      out.indexAssert(out.asserts_.size() - 1);
    }
  }
  return out;
}

std::set<std::string> SmtScript::closure(const std::set<std::string>& seeds) const {
  std::set<std::string> reached = seeds;
  std::vector<std::string> work(seeds.begin(), seeds.end());
  std::set<std::size_t> seen;
  while (!work.empty()) {
    std::string v = std::move(work.back());
    work.pop_back();
    auto it = uses_.find(v);
    if (it == uses_.end()) continue;
    for (std::size_t i : it->second) {
      if (!seen.insert(i).second) continue;
      for (const auto& w : asserts_[i].vars) {
        if (reached.insert(w).second) work.push_back(w);
      }
    }
  }
  return reached;
}

std::set<std::string> SmtScript::dependencies(const std::set<std::string>& seeds) const {
  std::set<std::string> reached = seeds;
  std::vector<std::string> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    std::string v = std::move(work.back());
    work.pop_back();
    auto it = uses_.find(v);
    if (it == uses_.end()) continue;
    for (std::size_t i : it->second) {
      const Assert& a = asserts_[i];
      if (!a.defines.empty() && a.defines != v) continue;
      for (const auto& w : a.vars) {
        if (reached.insert(w).second) work.push_back(w);
      }
    }
  }
  return reached;
}

SmtScript SmtScript::slice(const std::set<std::string>& seeds) const {
  std::set<std::string> keep = closure(seeds);
  std::set<std::size_t> picked;
  if (auto it = uses_.find(""); it != uses_.end()) picked.insert(it->second.begin(), it->second.end());
  for (const auto& v : keep) {
    auto it = uses_.find(v);
    if (it != uses_.end()) picked.insert(it->second.begin(), it->second.end());
  }
  std::set<std::size_t> declIdx;
  for (const auto& v : keep) {
    auto it = index_.find(v);
    if (it != index_.end()) declIdx.insert(it->second);
  }
  SmtScript out;
  for (std::size_t i : declIdx) out.declare(decls_[i]);
  for (std::size_t i : picked) {
    out.asserts_.push_back(asserts_[i]);
    out.indexAssert(out.asserts_.size() - 1);
  }
  return out;
}

std::vector<std::string> SmtScript::assertLines() const {
  std::vector<std::string> out;
  out.reserve(asserts_.size());
  for (const auto& a : asserts_) out.push_back("(assert " + toSmt(a.formula) + ")");
  return out;
}

std::string emit(const SmtScript& script) {
  std::ostringstream os;
  os << "(set-logic QF_NIA)\n";
  for (const auto& d : script.decls()) os << "(declare-const " << d.name << " Int)\n";
  for (const auto& a : script.asserts()) {
    std::set<std::string> vs;
    collectVars(a.formula, vs);
    for (const auto& v : vs) {
      if (!script.declared(v)) throw UndeclaredVariable(v);
    }
    os << "(assert " << toSmt(a.formula) << ")\n";
  }
  os << "(check-sat)\n";
  return os.str();
}

SsaVar SsaFactory::fresh(const std::string& base, CType type) {
  auto& slot = versions_[base];
  slot = {slot.first + 1, type};
  return {base + "_" + std::to_string(slot.first), type};
}

std::optional<SsaVar> SsaFactory::current(const std::string& base) const {
  auto it = versions_.find(base);
  if (it == versions_.end()) return std::nullopt;
  return SsaVar{base + "_" + std::to_string(it->second.first), it->second.second};
}

}  // namespace overfix::smt

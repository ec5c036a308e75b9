#include "core/formula.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace strictmodal {

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula::NodePtr Formula::make(Kind kind, unsigned var, NodePtr a, NodePtr b) {
  std::size_t h = hash_mix(static_cast<std::size_t>(kind) + 1, var);
  unsigned max_var = var;
  if (a) {
    h = hash_mix(h, a->hash);
    max_var = std::max(max_var, a->max_var);
  }
  if (b) {
    h = hash_mix(h, b->hash);
    max_var = std::max(max_var, b->max_var);
  }
  return std::make_shared<const Node>(Node{kind, var, std::move(a), std::move(b), h, max_var});
}

Formula Formula::var(unsigned index) { return Formula(make(Kind::Var, index, nullptr, nullptr)); }

Formula Formula::neg(Formula f) {
  return Formula(make(Kind::Neg, 0, std::move(f.node_), nullptr));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(make(Kind::Impl, 0, std::move(lhs.node_), std::move(rhs.node_)));
}

Formula Formula::box(Formula f) {
  return Formula(make(Kind::Box, 0, std::move(f.node_), nullptr));
}

Formula Formula::truth() { return implies(var(0), var(0)); }

Formula Formula::falsity() { return neg(truth()); }

Formula Formula::conj(Formula lhs, Formula rhs) {
  return neg(implies(std::move(lhs), neg(std::move(rhs))));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return conj(implies(lhs, rhs), implies(rhs, lhs));
}

Formula Formula::equiv(Formula lhs, Formula rhs) {
  return conj(box(implies(lhs, rhs)), box(implies(rhs, lhs)));
}

unsigned Formula::var_index() const {
  assert(kind() == Kind::Var);
  return node_->var;
}

Formula Formula::child() const {
  assert(kind() == Kind::Neg || kind() == Kind::Box);
  return Formula(node_->a);
}

Formula Formula::lhs() const {
  assert(kind() == Kind::Impl);
  return Formula(node_->a);
}

Formula Formula::rhs() const {
  assert(kind() == Kind::Impl);
  return Formula(node_->b);
}

bool Formula::equal(const Node* x, const Node* y) {
  if (x == y) return true;
  if (x->kind != y->kind || x->hash != y->hash || x->var != y->var) return false;
  if (x->a && !equal(x->a.get(), y->a.get())) return false;
  if (x->b && !equal(x->b.get(), y->b.get())) return false;
  return true;
}

bool Formula::operator==(const Formula& other) const {
  return equal(node_.get(), other.node_.get());
}

unsigned Formula::max_var_index() const { return node_->max_var; }

namespace {

void collect_vars(const Formula& f, std::set<unsigned>& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out.insert(f.var_index());
      break;
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
      collect_vars(f.child(), out);
      break;
    case Formula::Kind::Impl:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
      break;
  }
}

}  // namespace

std::vector<unsigned> Formula::variables() const {
  std::set<unsigned> vars;
  collect_vars(*this, vars);
  return {vars.begin(), vars.end()};
}

bool Formula::contains_var(unsigned index) const {
  if (index > max_var_index()) return false;
  switch (kind()) {
    case Kind::Var:
      return var_index() == index;
    case Kind::Neg:
    case Kind::Box:
      return child().contains_var(index);
    case Kind::Impl:
      return lhs().contains_var(index) || rhs().contains_var(index);
  }
  return false;
}

std::optional<std::pair<Formula, Formula>> Formula::as_conj() const {
  // a & b is ~(a -> ~b)
  if (kind() != Kind::Neg) return std::nullopt;
  const Formula& inner = child();
  if (inner.kind() != Kind::Impl) return std::nullopt;
  if (inner.rhs().kind() != Kind::Neg) return std::nullopt;
  return std::make_pair(inner.lhs(), inner.rhs().child());
}

std::optional<std::pair<Formula, Formula>> Formula::as_iff() const {
  auto parts = as_conj();
  if (!parts) return std::nullopt;
  const auto& [fwd, bwd] = *parts;
  if (fwd.kind() != Kind::Impl || bwd.kind() != Kind::Impl) return std::nullopt;
  if (fwd.lhs() != bwd.rhs() || fwd.rhs() != bwd.lhs()) return std::nullopt;
  return std::make_pair(fwd.lhs(), fwd.rhs());
}

std::optional<std::pair<Formula, Formula>> Formula::as_equiv() const {
  auto parts = as_conj();
  if (!parts) return std::nullopt;
  const auto& [fwd, bwd] = *parts;
  if (fwd.kind() != Kind::Box || bwd.kind() != Kind::Box) return std::nullopt;
  const Formula& fi = fwd.child();
  const Formula& bi = bwd.child();
  if (fi.kind() != Kind::Impl || bi.kind() != Kind::Impl) return std::nullopt;
  if (fi.lhs() != bi.rhs() || fi.rhs() != bi.lhs()) return std::nullopt;
  return std::make_pair(fi.lhs(), fi.rhs());
}

bool Formula::is_truth() const {
  return kind() == Kind::Impl && lhs() == Formula::var(0) && rhs() == Formula::var(0);
}

bool Formula::is_falsity() const { return kind() == Kind::Neg && child().is_truth(); }

Formula substitute(const Formula& phi, unsigned var, const Formula& psi) {
  if (!phi.contains_var(var)) return phi;
  switch (phi.kind()) {
    case Formula::Kind::Var:
      return phi.var_index() == var ? psi : phi;
    case Formula::Kind::Neg:
      return Formula::neg(substitute(phi.child(), var, psi));
    case Formula::Kind::Box:
      return Formula::box(substitute(phi.child(), var, psi));
    case Formula::Kind::Impl:
      return Formula::implies(substitute(phi.lhs(), var, psi), substitute(phi.rhs(), var, psi));
  }
  return phi;
}

}  // namespace strictmodal

#include "bssbp/nn_compile.hpp"

#include <algorithm>
#include <string>

namespace bssbp {

namespace {

void check_network(const std::vector<RatMatrix>& weights, const std::vector<RatVec>& biases) {
  if (weights.empty()) throw ShapeMismatchError("network needs at least one layer");
  if (weights.size() != biases.size())
    throw ShapeMismatchError("layer count mismatch: " + std::to_string(weights.size()) +
                             " weight matrices, " + std::to_string(biases.size()) + " bias vectors");
  for (std::size_t l = 0; l < weights.size(); ++l) {
    if (weights[l].rows() == 0 || weights[l].cols() == 0)
      throw ShapeMismatchError("layer " + std::to_string(l) + " is empty");
    if (weights[l].rows() != biases[l].size())
      throw ShapeMismatchError("layer " + std::to_string(l) + " bias length " +
                               std::to_string(biases[l].size()) + " does not match width " +
                               std::to_string(weights[l].rows()));
    if (l > 0 && weights[l].cols() != weights[l - 1].rows())
      throw ShapeMismatchError("layer " + std::to_string(l) + " expects " +
                               std::to_string(weights[l].cols()) + " inputs, previous width is " +
                               std::to_string(weights[l - 1].rows()));
  }
}

}  // namespace

RatVec relu_network_value(const std::vector<RatMatrix>& weights, const std::vector<RatVec>& biases,
                          const RatVec& input) {
  check_network(weights, biases);
  if (input.size() != weights[0].cols())
    throw ShapeMismatchError("input length " + std::to_string(input.size()) +
                             " does not match first layer");
  RatVec cur = input;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    RatVec next = mat_vec(weights[l], cur);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] += biases[l][i];
      if (l + 1 < weights.size() && next[i].sign() < 0) next[i] = Rational(0);
    }
    cur = std::move(next);
  }
  return cur;
}

// Tape layout: cells [0, wmax) hold the current layer's values, cells
// [wmax, 2*wmax) receive the next layer. The head never moves, so relative
// and absolute cell indices coincide.
BssProgram compile_relu_network(const std::vector<RatMatrix>& weights,
                                const std::vector<RatVec>& biases) {
  check_network(weights, biases);
  const std::size_t layers = weights.size();
  std::size_t wmax = weights[0].cols();
  for (const auto& w : weights) wmax = std::max(wmax, w.rows());
  const long base = static_cast<long>(wmax);

  BssProgram prog;
  auto& ns = prog.nodes;
  auto chain = [&](BssNode n) {
    n.successors = {ns.size() + 1};
    ns.push_back(std::move(n));
  };

  BssNode input;
  input.kind = BssNode::Kind::Input;
  chain(std::move(input));

  for (std::size_t l = 0; l < layers; ++l) {
    const RatMatrix& w = weights[l];
    const std::size_t width = w.rows();
    for (std::size_t i = 0; i < width; ++i) {
      ExprPtr e = expr_const(biases[l][i]);
      for (std::size_t j = 0; j < w.cols(); ++j)
        e = expr_add(e, expr_mul(expr_const(w.at(i, j)), expr_cell(static_cast<long>(j))));
      BssNode node;
      node.kind = BssNode::Kind::Computation;
      node.target = base + static_cast<long>(i);
      node.expr = std::move(e);
      chain(std::move(node));
    }
    if (l + 1 == layers) break;
    for (std::size_t i = 0; i < width; ++i) {
      // ReLU: negative cells are zeroed, the rest pass through untouched.
      std::size_t id = ns.size();
      BssNode branch;
      branch.kind = BssNode::Kind::Branch;
      branch.cell = base + static_cast<long>(i);
      branch.rel = BranchRelation::Less;
      branch.successors = {id + 1, id + 2};
      ns.push_back(std::move(branch));
      BssNode zero;
      zero.kind = BssNode::Kind::Computation;
      zero.target = base + static_cast<long>(i);
      zero.expr = expr_const(Rational(0));
      chain(std::move(zero));
    }
    for (std::size_t i = 0; i < width; ++i) {
      BssNode copy;
      copy.kind = BssNode::Kind::Computation;
      copy.target = static_cast<long>(i);
      copy.expr = expr_cell(base + static_cast<long>(i));
      chain(std::move(copy));
    }
  }

  BssNode out;
  out.kind = BssNode::Kind::Output;
  out.out_start = base;
  out.out_count = weights.back().rows();
  ns.push_back(std::move(out));
  return prog;
}

namespace {

ExprPtr poly_expr(const MultivariatePolynomial& p) {
  ExprPtr acc;
  for (const auto& [exps, coeff] : p.terms()) {
    ExprPtr t = expr_const(coeff);
    for (std::size_t v = 0; v < exps.size(); ++v)
      for (unsigned e = 0; e < exps[v]; ++e) t = expr_mul(t, expr_cell(static_cast<long>(v)));
    acc = acc ? expr_add(std::move(acc), std::move(t)) : std::move(t);
  }
  return acc ? acc : expr_const(Rational(0));
}

}  // namespace

BssProgram compile_membership(const SemialgebraicDescription& desc) {
  desc.validate();
  const long scratch = static_cast<long>(desc.variable_count);

  // Node ids are laid out up front: two nodes per atom, then the 1-writer,
  // the 0-writer and the shared output.
  const std::size_t disjuncts = desc.disjuncts.size();
  std::vector<std::size_t> start(disjuncts + 1);
  start[0] = 1;
  for (std::size_t d = 0; d < disjuncts; ++d) start[d + 1] = start[d] + 2 * desc.disjuncts[d].size();
  const std::size_t write1 = start[disjuncts];
  const std::size_t write0 = write1 + 1;
  const std::size_t out = write1 + 2;
  // An empty conjunction holds everywhere, so entering such a disjunct is an
  // immediate success.
  auto entry_of = [&](std::size_t d) {
    if (d >= disjuncts) return write0;
    return desc.disjuncts[d].empty() ? write1 : start[d];
  };

  BssProgram prog;
  auto& ns = prog.nodes;
  BssNode input;
  input.kind = BssNode::Kind::Input;
  input.successors = {entry_of(0)};
  ns.push_back(std::move(input));

  for (std::size_t d = 0; d < disjuncts; ++d) {
    const auto& conj = desc.disjuncts[d];
    for (std::size_t a = 0; a < conj.size(); ++a) {
      std::size_t pass = a + 1 < conj.size() ? start[d] + 2 * (a + 1) : write1;
      std::size_t fail = entry_of(d + 1);
      BssNode eval;
      eval.kind = BssNode::Kind::Computation;
      eval.target = scratch;
      eval.expr = poly_expr(conj[a].poly);
      eval.successors = {ns.size() + 1};
      ns.push_back(std::move(eval));

      BssNode br;
      br.kind = BssNode::Kind::Branch;
      br.cell = scratch;
      switch (conj[a].rel) {
        case Relation::Less:
          br.rel = BranchRelation::Less;
          br.successors = {pass, fail};
          break;
        case Relation::LessEq:
          br.rel = BranchRelation::Greater;
          br.successors = {fail, pass};
          break;
        case Relation::Eq:
          br.rel = BranchRelation::Equal;
          br.successors = {pass, fail};
          break;
        case Relation::GreaterEq:
          br.rel = BranchRelation::Less;
          br.successors = {fail, pass};
          break;
        case Relation::Greater:
          br.rel = BranchRelation::Greater;
          br.successors = {pass, fail};
          break;
      }
      ns.push_back(std::move(br));
    }
  }

  BssNode one;
  one.kind = BssNode::Kind::Computation;
  one.target = scratch;
  one.expr = expr_const(Rational(1));
  one.successors = {out};
  ns.push_back(std::move(one));
  BssNode zero;
  zero.kind = BssNode::Kind::Computation;
  zero.target = scratch;
  zero.expr = expr_const(Rational(0));
  zero.successors = {out};
  ns.push_back(std::move(zero));
  BssNode output;
  output.kind = BssNode::Kind::Output;
  output.out_start = scratch;
  output.out_count = 1;
  ns.push_back(std::move(output));
  return prog;
}

BssProgram identity_program(std::size_t arity) {
  if (arity == 0) throw ValidationError("identity program needs at least one cell");
  BssProgram prog;
  BssNode input;
  input.kind = BssNode::Kind::Input;
  input.successors = {1};
  prog.nodes.push_back(std::move(input));
  BssNode out;
  out.kind = BssNode::Kind::Output;
  out.out_start = 0;
  out.out_count = arity;
  prog.nodes.push_back(std::move(out));
  return prog;
}

BssProgram nonneg_indicator() {
  BssProgram prog;
  auto& ns = prog.nodes;
  ns.resize(5);
  ns[0].kind = BssNode::Kind::Input;
  ns[0].successors = {1};
  ns[1].kind = BssNode::Kind::Branch;
  ns[1].cell = 0;
  ns[1].rel = BranchRelation::Less;
  ns[1].successors = {2, 3};
  ns[2].kind = BssNode::Kind::Computation;
  ns[2].target = 0;
  ns[2].expr = expr_const(Rational(0));
  ns[2].successors = {4};
  ns[3].kind = BssNode::Kind::Computation;
  ns[3].target = 0;
  ns[3].expr = expr_const(Rational(1));
  ns[3].successors = {4};
  ns[4].kind = BssNode::Kind::Output;
  ns[4].out_start = 0;
  ns[4].out_count = 1;
  return prog;
}

BssProgram square_minus_two_indicator() {
  BssProgram prog;
  auto& ns = prog.nodes;
  ns.resize(6);
  ns[0].kind = BssNode::Kind::Input;
  ns[0].successors = {1};
  ns[1].kind = BssNode::Kind::Computation;
  ns[1].target = 0;
  ns[1].expr = expr_sub(expr_mul(expr_cell(0), expr_cell(0)), expr_const(Rational(2)));
  ns[1].successors = {2};
  ns[2].kind = BssNode::Kind::Branch;
  ns[2].cell = 0;
  ns[2].rel = BranchRelation::Greater;
  ns[2].successors = {3, 4};
  ns[3].kind = BssNode::Kind::Computation;
  ns[3].target = 0;
  ns[3].expr = expr_const(Rational(1));
  ns[3].successors = {5};
  ns[4].kind = BssNode::Kind::Computation;
  ns[4].target = 0;
  ns[4].expr = expr_const(Rational(0));
  ns[4].successors = {5};
  ns[5].kind = BssNode::Kind::Output;
  ns[5].out_start = 0;
  ns[5].out_count = 1;
  return prog;
}

}  // namespace bssbp

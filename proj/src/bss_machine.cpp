#include "bssbp/bss_machine.hpp"

#include <ostream>
#include <string>

#include "bssbp/quadratic_number.hpp"

namespace bssbp {

ExprPtr expr_const(Rational v) {
  auto e = std::make_shared<Expr>();
  e->op = Expr::Op::Constant;
  e->value = std::move(v);
  return e;
}

ExprPtr expr_cell(long rel) {
  auto e = std::make_shared<Expr>();
  e->op = Expr::Op::Cell;
  e->cell = rel;
  return e;
}

namespace {

ExprPtr binary(Expr::Op op, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->left = std::move(l);
  e->right = std::move(r);
  return e;
}

}  // namespace

ExprPtr expr_add(ExprPtr l, ExprPtr r) { return binary(Expr::Op::Add, std::move(l), std::move(r)); }
ExprPtr expr_sub(ExprPtr l, ExprPtr r) { return binary(Expr::Op::Sub, std::move(l), std::move(r)); }
ExprPtr expr_mul(ExprPtr l, ExprPtr r) { return binary(Expr::Op::Mul, std::move(l), std::move(r)); }
ExprPtr expr_div(ExprPtr l, ExprPtr r) { return binary(Expr::Op::Div, std::move(l), std::move(r)); }

ExprPtr expr_neg(ExprPtr e) {
  auto n = std::make_shared<Expr>();
  n->op = Expr::Op::Neg;
  n->left = std::move(e);
  return n;
}

namespace {

void validate_expr(const ExprPtr& e) {
  if (!e) throw InvalidProgramError("computation node holds an empty expression");
  switch (e->op) {
    case Expr::Op::Constant:
    case Expr::Op::Cell:
      return;
    case Expr::Op::Neg:
      validate_expr(e->left);
      return;
    default:
      validate_expr(e->left);
      validate_expr(e->right);
      return;
  }
}

}  // namespace

void validate(const BssProgram& prog) {
  if (prog.nodes.empty()) throw InvalidProgramError("program has no nodes");
  if (prog.entry >= prog.nodes.size()) throw InvalidProgramError("entry id out of range");
  std::size_t inputs = 0, outputs = 0;
  for (std::size_t i = 0; i < prog.nodes.size(); ++i) {
    const BssNode& n = prog.nodes[i];
    std::size_t want = 1;
    switch (n.kind) {
      case BssNode::Kind::Input:
        ++inputs;
        if (i != prog.entry) throw InvalidProgramError("input node is not the entry");
        break;
      case BssNode::Kind::Computation:
        validate_expr(n.expr);
        break;
      case BssNode::Kind::Branch:
        want = 2;
        break;
      case BssNode::Kind::Shift:
        if (n.direction != 1 && n.direction != -1)
          throw InvalidProgramError("shift direction must be +1 or -1");
        break;
      case BssNode::Kind::Output:
        ++outputs;
        if (n.out_count == 0) throw InvalidProgramError("output node has an empty cell range");
        want = 0;
        break;
    }
    if (n.successors.size() != want)
      throw InvalidProgramError("node " + std::to_string(i) + " has " +
                                std::to_string(n.successors.size()) + " successors, expected " +
                                std::to_string(want));
    for (std::size_t s : n.successors)
      if (s >= prog.nodes.size())
        throw InvalidProgramError("successor id out of range at node " + std::to_string(i));
  }
  if (inputs != 1) throw InvalidProgramError("program must have exactly one input node");
  if (outputs == 0) throw InvalidProgramError("program must have an output node");
}

namespace {

struct ZeroDivisorHalt {};

template <class Scalar>
Scalar read_cell(const std::map<long, Scalar>& tape, long index) {
  auto it = tape.find(index);
  return it == tape.end() ? Scalar(Rational(0)) : it->second;
}

template <class Scalar>
Scalar eval(const Expr& e, const std::map<long, Scalar>& tape, long head, OpCounters& k) {
  switch (e.op) {
    case Expr::Op::Constant:
      return Scalar(e.value);
    case Expr::Op::Cell:
      return read_cell(tape, head + e.cell);
    case Expr::Op::Add:
      ++k.adds;
      return eval(*e.left, tape, head, k) + eval(*e.right, tape, head, k);
    case Expr::Op::Sub:
      ++k.adds;
      return eval(*e.left, tape, head, k) - eval(*e.right, tape, head, k);
    case Expr::Op::Mul:
      ++k.muls;
      return eval(*e.left, tape, head, k) * eval(*e.right, tape, head, k);
    case Expr::Op::Div: {
      Scalar num = eval(*e.left, tape, head, k);
      Scalar den = eval(*e.right, tape, head, k);
      if (den.is_zero()) throw ZeroDivisorHalt{};
      ++k.divs;
      return num / den;
    }
    case Expr::Op::Neg:
      ++k.adds;
      return -eval(*e.left, tape, head, k);
  }
  throw InvalidProgramError("unknown expression operation");
}

void trace_step(std::ostream* trace, std::size_t node, long head, const OpCounters& k) {
  if (!trace) return;
  *trace << "{\"node\":" << node << ",\"head\":" << head << ",\"counters\":{\"adds\":" << k.adds
         << ",\"muls\":" << k.muls << ",\"divs\":" << k.divs << ",\"comparisons\":" << k.comparisons
         << ",\"steps\":" << k.steps << "}}\n";
}

}  // namespace

template <class Scalar>
RunResult<Scalar> run(const BssProgram& prog, const std::vector<Scalar>& input, long budget,
                      std::ostream* trace) {
  if (budget <= 0) throw ValidationError("step budget must be positive");
  validate(prog);

  RunResult<Scalar> res;
  std::map<long, Scalar> tape;
  long head = 0;
  std::size_t current = prog.entry;

  while (true) {
    res.node = current;
    if (res.counters.steps + 1 > static_cast<unsigned long>(budget)) {
      res.status = RunStatus::BudgetExceeded;
      return res;
    }
    ++res.counters.steps;
    const BssNode& n = prog.nodes[current];
    switch (n.kind) {
      case BssNode::Kind::Input:
        for (std::size_t i = 0; i < input.size(); ++i) tape[static_cast<long>(i)] = input[i];
        current = n.successors[0];
        break;
      case BssNode::Kind::Computation:
        try {
          tape[head + n.target] = eval(*n.expr, tape, head, res.counters);
        } catch (const ZeroDivisorHalt&) {
          res.status = RunStatus::DivisionByZero;
          res.head = head;
          trace_step(trace, res.node, head, res.counters);
          return res;
        }
        current = n.successors[0];
        break;
      case BssNode::Kind::Branch: {
        ++res.counters.comparisons;
        int sg = read_cell(tape, head + n.cell).sign();
        bool holds = n.rel == BranchRelation::Less      ? sg < 0
                     : n.rel == BranchRelation::Greater ? sg > 0
                                                        : sg == 0;
        current = holds ? n.successors[0] : n.successors[1];
        break;
      }
      case BssNode::Kind::Shift:
        head += n.direction;
        current = n.successors[0];
        break;
      case BssNode::Kind::Output:
        res.output.reserve(n.out_count);
        for (std::size_t i = 0; i < n.out_count; ++i)
          res.output.push_back(read_cell(tape, head + n.out_start + static_cast<long>(i)));
        res.status = RunStatus::Halted;
        res.head = head;
        trace_step(trace, res.node, head, res.counters);
        return res;
    }
    res.head = head;
    trace_step(trace, res.node, head, res.counters);
  }
}

template <class Scalar>
int decide(const BssProgram& prog, const std::vector<Scalar>& point, long budget) {
  RunResult<Scalar> res = run(prog, point, budget);
  if (res.status == RunStatus::BudgetExceeded)
    throw BudgetExceededError("decision program exceeded " + std::to_string(budget) + " steps");
  if (res.status == RunStatus::DivisionByZero)
    throw DivisionByZeroError("decision program divided by zero");
  if (res.output.size() != 1) throw NonBooleanOutputError("decision program output is not one cell");
  const Scalar& v = res.output[0];
  if (v.is_zero()) return 0;
  if ((v - Scalar(Rational(1))).is_zero()) return 1;
  throw NonBooleanOutputError("decision program output is neither 0 nor 1");
}

template RunResult<Rational> run(const BssProgram&, const std::vector<Rational>&, long,
                                 std::ostream*);
template RunResult<QuadraticNumber> run(const BssProgram&, const std::vector<QuadraticNumber>&,
                                        long, std::ostream*);
template int decide(const BssProgram&, const std::vector<Rational>&, long);
template int decide(const BssProgram&, const std::vector<QuadraticNumber>&, long);

}  // namespace bssbp

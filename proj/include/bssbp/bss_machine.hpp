#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <vector>

#include "bssbp/errors.hpp"
#include "bssbp/rational.hpp"

namespace bssbp {

// Expression tree for computation nodes: a rational function of finitely
// many tape cells. Cell indices are relative to the head register.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op { Constant, Cell, Add, Sub, Mul, Div, Neg };
  Op op = Op::Constant;
  Rational value;        // Constant
  long cell = 0;         // Cell
  ExprPtr left, right;   // operands; Neg uses left only
};

ExprPtr expr_const(Rational v);
ExprPtr expr_cell(long rel);
ExprPtr expr_add(ExprPtr l, ExprPtr r);
ExprPtr expr_sub(ExprPtr l, ExprPtr r);
ExprPtr expr_mul(ExprPtr l, ExprPtr r);
ExprPtr expr_div(ExprPtr l, ExprPtr r);
ExprPtr expr_neg(ExprPtr e);

enum class BranchRelation { Less, Greater, Equal };

struct BssNode {
  enum class Kind { Input, Computation, Branch, Shift, Output };
  Kind kind = Kind::Input;
  long target = 0;       // Computation: destination cell, relative to head
  ExprPtr expr;          // Computation
  long cell = 0;         // Branch: tested cell, relative to head
  BranchRelation rel = BranchRelation::Less;
  int direction = 0;     // Shift: +1 or -1
  long out_start = 0;    // Output: first cell, relative to head
  std::size_t out_count = 0;
  // successors[0] is the fall-through; branches use successors[1] when the
  // relation fails. Output nodes are terminal and have none.
  std::vector<std::size_t> successors;
};

struct BssProgram {
  std::vector<BssNode> nodes;
  std::size_t entry = 0;
};

// Structural check: one input node placed at the entry, at least one output
// node, successor counts by kind (1, except branches 2 and outputs 0), ids in
// range, well-formed payloads. Throws InvalidProgramError.
void validate(const BssProgram& prog);

struct OpCounters {
  unsigned long adds = 0;  // additions, subtractions and negations
  unsigned long muls = 0;
  unsigned long divs = 0;
  unsigned long comparisons = 0;
  unsigned long steps = 0;  // node visits
};

enum class RunStatus { Halted, BudgetExceeded, DivisionByZero };

template <class Scalar>
struct RunResult {
  RunStatus status = RunStatus::Halted;
  std::vector<Scalar> output;  // meaningful when Halted
  OpCounters counters;
  long head = 0;          // state at stop
  std::size_t node = 0;   // last node visited (or about to be visited)
};

// Executes the program on a bi-infinite sparse tape initialized with the
// input at cells 0..k-1, head at 0. Every node visit costs one step; the
// visit that would push steps past the budget is not executed. A zero
// divisor halts the machine in a distinct error state instead of throwing.
// With a trace stream, one JSON line {"node","head","counters"} is written
// per executed step.
template <class Scalar>
RunResult<Scalar> run(const BssProgram& prog, const std::vector<Scalar>& input, long budget,
                      std::ostream* trace = nullptr);

// Runs a characteristic-function program and returns its {0,1} verdict.
// Throws NonBooleanOutputError when the output is not a single 0/1 cell,
// BudgetExceededError / DivisionByZeroError on the corresponding halts.
template <class Scalar>
int decide(const BssProgram& prog, const std::vector<Scalar>& point, long budget);

}  // namespace bssbp

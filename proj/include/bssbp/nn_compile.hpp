#pragma once

#include "bssbp/bss_machine.hpp"
#include "bssbp/linalg.hpp"
#include "bssbp/polynomial.hpp"

namespace bssbp {

// Compiles the layered map T_L rho(T_{L-1} rho(... rho(T_1 x))) into a
// program: one computation node per neuron's affine form, ReLU as a branch
// that zeroes negative cells, no activation after the last layer. Layer l is
// weights[l] (rows = layer width, cols = previous width) plus biases[l].
// Throws ShapeMismatchError on incompatible dimensions.
BssProgram compile_relu_network(const std::vector<RatMatrix>& weights,
                                const std::vector<RatVec>& biases);

// Exact evaluation of the same map, the reference the compiled program is
// tested against.
RatVec relu_network_value(const std::vector<RatMatrix>& weights, const std::vector<RatVec>& biases,
                          const RatVec& input);

// Characteristic-function program of a semialgebraic set: evaluates each
// atom's polynomial into a scratch cell and branches on its sign; outputs 1
// on the first disjunct whose atoms all hold, 0 when none does.
BssProgram compile_membership(const SemialgebraicDescription& desc);

// Small fixed programs used as interpreter references.
BssProgram identity_program(std::size_t arity);
BssProgram nonneg_indicator();          // x >= 0, one branch
BssProgram square_minus_two_indicator();  // x*x - 2 > 0

}  // namespace bssbp

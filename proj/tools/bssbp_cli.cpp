#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bssbp/nn_compile.hpp"
#include "bssbp/serialize.hpp"

namespace {

using namespace bssbp;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ValidationError("cannot write " + out_path);
  out << text;
}

void emit(const Json& j, const std::string& out_path) { emit_text(j.dump(2) + "\n", out_path); }

// BSSBP_BUDGET overrides the built-in default; an explicit --budget flag
// overrides both.
long pick_budget(long flag_value, long fallback) {
  if (flag_value > 0) return flag_value;
  const char* env = std::getenv("BSSBP_BUDGET");
  if (!env || !*env) return fallback;
  try {
    return std::stol(env);
  } catch (...) {
    throw ValidationError("BSSBP_BUDGET must be an integer");
  }
}

Rendering make_mode(int approx_digits) {
  Rendering mode;
  if (approx_digits >= 0) {
    mode.approx = true;
    mode.digits = static_cast<unsigned>(approx_digits);
  }
  return mode;
}

RatVec parse_rational_list(const std::string& text) {
  RatVec vals;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) vals.push_back(Rational::parse(item));
  }
  return vals;
}

std::vector<RatMatrix> parse_weight_list(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("weights must be a nonempty array");
  std::vector<RatMatrix> ws;
  for (const Json& mj : j) {
    if (!mj.is_array() || mj.empty() || !mj[0].is_array() || mj[0].empty())
      throw ValidationError("each weight matrix must be a nonempty array of rows");
    RatMatrix m(mj.size(), mj[0].size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!mj[r].is_array() || mj[r].size() != m.cols())
        throw ValidationError("ragged weight matrix");
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = parse_rational(mj[r][c]);
    }
    ws.push_back(std::move(m));
  }
  return ws;
}

std::vector<RatVec> parse_bias_list(const Json& j) {
  if (!j.is_array()) throw ValidationError("biases must be an array");
  std::vector<RatVec> bs;
  for (const Json& vj : j) {
    if (!vj.is_array()) throw ValidationError("each bias must be an array");
    RatVec v(vj.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = parse_rational(vj[i]);
    bs.push_back(std::move(v));
  }
  return bs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for quadratically constrained basis pursuit"};
  app.require_subcommand(1);

  std::string input_path, output_path, eps_text, input_values, tol_text;
  int approx_digits = -1;
  long budget_flag = 0, gap_n = 0;
  bool serial = false, trace = false;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", input_path, "input file")->required();
    sub->add_option("-o,--output", output_path, "write the result here instead of stdout");
    sub->add_option("--approx", approx_digits,
                    "render values as decimals with this many digits instead of exact forms");
  };

  CLI::App* c_solve = app.add_subcommand("solve", "solve a real instance exactly");
  add_common(c_solve, true);
  c_solve->add_flag("--serial", serial, "disable parallel candidate evaluation");

  CLI::App* c_solvec = app.add_subcommand("solve-complex", "solve a complex instance exactly");
  add_common(c_solvec, true);
  c_solvec->add_flag("--serial", serial, "disable parallel candidate evaluation");

  CLI::App* c_reduce =
      app.add_subcommand("reduce", "rewrite an instance as a polynomial optimization problem");
  add_common(c_reduce, true);

  CLI::App* c_empty = app.add_subcommand("check-empty", "decide whether the feasible set is empty");
  add_common(c_empty, true);

  CLI::App* c_gap = app.add_subcommand("demo-gap", "build and verify the discontinuity witness");
  add_common(c_gap, false);
  c_gap->add_option("--epsilon", eps_text, "noise level in (0,1), e.g. 1/2")->required();
  c_gap->add_option("--n", gap_n, "sequence length")->required();

  CLI::App* c_nn = app.add_subcommand("compile-nn", "compile a ReLU network to a machine program");
  add_common(c_nn, true);

  CLI::App* c_run = app.add_subcommand("run-bss", "run a machine program on rational inputs");
  add_common(c_run, true);
  c_run->add_option("--args", input_values, "comma-separated rational machine inputs, e.g. 3/2,-1");
  c_run->add_option("--budget", budget_flag, "step budget (default 100000)");
  c_run->add_flag("--trace", trace, "write one JSON line per step to stderr");

  CLI::App* c_oracle = app.add_subcommand("oracle", "bracket the optimum by interval search");
  add_common(c_oracle, true);
  c_oracle->add_option("--tolerance", tol_text, "bracket width target (default 1/1000000)");
  c_oracle->add_option("--budget", budget_flag, "box expansion budget");

  try {
    app.parse(argc, argv);

    Rendering mode = make_mode(approx_digits);
    ExecutionPolicy policy = serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;

    if (*c_solve) {
      Json doc = parse_document(read_file(input_path));
      if (is_complex_instance(doc))
        throw ValidationError("complex instance given; use solve-complex");
      RealInstance inst = parse_real_instance(doc);
      Solution sol = solve(inst, policy);
      emit(solution_json(sol, certify(inst, sol), mode), output_path);
    } else if (*c_solvec) {
      Json doc = parse_document(read_file(input_path));
      if (!is_complex_instance(doc)) throw ValidationError("real instance given; use solve");
      ComplexInstance inst = parse_complex_instance(doc);
      Solution sol = solve_complex(inst, policy);
      emit(solution_json(sol, certify(inst, sol), mode), output_path);
    } else if (*c_reduce) {
      Json doc = parse_document(read_file(input_path));
      ReducedProblem rp = is_complex_instance(doc) ? lift_complex(parse_complex_instance(doc))
                                                   : split_abs(parse_real_instance(doc));
      emit(reduced_json(rp, mode), output_path);
    } else if (*c_empty) {
      Json doc = parse_document(read_file(input_path));
      FeasibilityReport rep = is_complex_instance(doc)
                                  ? check_feasible(parse_complex_instance(doc))
                                  : check_feasible(parse_real_instance(doc));
      emit(feasibility_json(rep, mode), output_path);
    } else if (*c_gap) {
      if (gap_n < 1) throw ValidationError("--n must be at least 1");
      GapReport rep = verify_gap(build_sequences(Rational::parse(eps_text),
                                                 static_cast<std::size_t>(gap_n)));
      emit(gap_report_json(rep, mode), output_path);
      if (!output_path.empty()) std::cout << gap_table(rep);
    } else if (*c_nn) {
      Json doc = parse_document(read_file(input_path));
      if (!doc.is_object()) throw ValidationError("network file must be an object");
      BssProgram prog =
          compile_relu_network(parse_weight_list(doc.at("weights")), parse_bias_list(doc.at("biases")));
      emit(program_json(prog), output_path);
    } else if (*c_run) {
      BssProgram prog = parse_program(parse_document(read_file(input_path)));
      RatVec vals = parse_rational_list(input_values);
      long budget = pick_budget(budget_flag, 100000);
      RunResult<Rational> res = run(prog, vals, budget, trace ? &std::cerr : nullptr);
      emit(run_result_json(res, mode), output_path);
    } else if (*c_oracle) {
      Json doc = parse_document(read_file(input_path));
      Rational tol = tol_text.empty() ? Rational(1, 1000000) : Rational::parse(tol_text);
      long budget = pick_budget(budget_flag, kDefaultOracleBudget);
      OracleBracket br = is_complex_instance(doc)
                             ? oracle_solve(parse_complex_instance(doc), tol, budget)
                             : oracle_solve(parse_real_instance(doc), tol, budget);
      emit(bracket_json(br, mode), output_path);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}

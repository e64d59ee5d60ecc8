#include "bssbp/serialize.hpp"

namespace bssbp {

namespace {

Json scalar_json(const Rational& r, const Rendering& mode) {
  return mode.approx ? Json(r.decimal(mode.digits)) : Json(r.to_string());
}

// Missing or mistyped fields surface from nlohmann as its own exception
// hierarchy; fold them into ValidationError so callers see one error family.
template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json rational_json(const Rational& r, const Rendering& mode) { return scalar_json(r, mode); }

Rational parse_rational(const Json& j) {
  if (!j.is_string()) throw ValidationError("expected a rational \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Json quadratic_json(const QuadraticNumber& q, const Rendering& mode) {
  if (mode.approx) return Json(q.decimal(mode.digits));
  Json j;
  j["a"] = q.rational_part().to_string();
  j["b"] = q.radical_coefficient().to_string();
  j["d"] = q.radicand().to_string();
  return j;
}

QuadraticNumber parse_quadratic(const Json& j) {
  return guarded("quadratic number", [&] {
    if (j.is_string()) return QuadraticNumber(parse_rational(j));
    if (!j.is_object()) throw ValidationError("expected a quadratic-number object {a,b,d}");
    Rational a = parse_rational(j.at("a"));
    Rational b = parse_rational(j.at("b"));
    Rational d = parse_rational(j.at("d"));
    if (b.is_zero()) return QuadraticNumber(a);
    return QuadraticNumber(a) + QuadraticNumber(b) * QuadraticNumber::sqrt_of(d);
  });
}

namespace {

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const char* key) {
  if (!j.is_array() || j.size() != rows)
    throw ValidationError(std::string(key) + " must be an array of " + std::to_string(rows) +
                          " rows");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw ValidationError(std::string(key) + " row " + std::to_string(i) + " must have " +
                            std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = parse_rational(row[c]);
  }
  return m;
}

Json vector_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

RatVec parse_vector(const Json& j, std::size_t len, const char* key) {
  if (!j.is_array() || j.size() != len)
    throw ValidationError(std::string(key) + " must be an array of " + std::to_string(len) +
                          " entries");
  RatVec v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = parse_rational(j[i]);
  return v;
}

std::pair<std::size_t, std::size_t> parse_shape(const Json& j) {
  if (!j.is_object()) throw ValidationError("instance must be a JSON object");
  const Json& m = j.at("m");
  const Json& n = j.at("N");
  if (!m.is_number_unsigned() || !n.is_number_unsigned())
    throw ValidationError("m and N must be nonnegative integers");
  return {m.get<std::size_t>(), n.get<std::size_t>()};
}

}  // namespace

Json instance_json(const RealInstance& inst) {
  Json j;
  j["m"] = inst.rows();
  j["N"] = inst.cols();
  j["A"] = matrix_json(inst.A);
  j["y"] = vector_json(inst.y);
  j["epsilon"] = inst.epsilon.to_string();
  return j;
}

Json instance_json(const ComplexInstance& inst) {
  Json j;
  j["m"] = inst.rows();
  j["N"] = inst.cols();
  j["A_re"] = matrix_json(inst.A_re);
  j["A_im"] = matrix_json(inst.A_im);
  j["y_re"] = vector_json(inst.y_re);
  j["y_im"] = vector_json(inst.y_im);
  j["epsilon"] = inst.epsilon.to_string();
  return j;
}

bool is_complex_instance(const Json& j) { return j.is_object() && j.contains("A_re"); }

RealInstance parse_real_instance(const Json& j) {
  return guarded("instance", [&] {
    auto [m, n] = parse_shape(j);
    RealInstance inst;
    inst.A = parse_matrix(j.at("A"), m, n, "A");
    inst.y = parse_vector(j.at("y"), m, "y");
    inst.epsilon = parse_rational(j.at("epsilon"));
    inst.validate();
    return inst;
  });
}

ComplexInstance parse_complex_instance(const Json& j) {
  return guarded("instance", [&] {
    auto [m, n] = parse_shape(j);
    ComplexInstance inst;
    inst.A_re = parse_matrix(j.at("A_re"), m, n, "A_re");
    inst.A_im = parse_matrix(j.at("A_im"), m, n, "A_im");
    inst.y_re = parse_vector(j.at("y_re"), m, "y_re");
    inst.y_im = parse_vector(j.at("y_im"), m, "y_im");
    inst.epsilon = parse_rational(j.at("epsilon"));
    inst.validate();
    return inst;
  });
}

Json polynomial_json(const MultivariatePolynomial& p, const Rendering& mode) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    Json t;
    t["exponents"] = exps;
    t["coefficient"] = scalar_json(coeff, mode);
    terms.push_back(std::move(t));
  }
  return terms;
}

namespace {

const char* relation_name(Relation rel) {
  switch (rel) {
    case Relation::Less:
      return "<";
    case Relation::LessEq:
      return "<=";
    case Relation::Eq:
      return "==";
    case Relation::GreaterEq:
      return ">=";
    case Relation::Greater:
      return ">";
  }
  return "?";
}

}  // namespace

Json reduced_json(const ReducedProblem& rp, const Rendering& mode) {
  Json j;
  j["variable_count"] = rp.feasible_set.variable_count;
  j["objective"] = polynomial_json(rp.objective, mode);
  Json disjuncts = Json::array();
  for (const auto& conj : rp.feasible_set.disjuncts) {
    Json atoms = Json::array();
    for (const auto& atom : conj) {
      Json a;
      a["poly"] = polynomial_json(atom.poly, mode);
      a["relation"] = relation_name(atom.rel);
      atoms.push_back(std::move(a));
    }
    disjuncts.push_back(std::move(atoms));
  }
  j["feasible_set"] = std::move(disjuncts);
  Json rec;
  rec["kind"] = rp.recover.kind == RecoverMap::Kind::RealSplit ? "real_split" : "complex_split";
  rec["n"] = rp.recover.n;
  j["recover"] = std::move(rec);
  return j;
}

Json solution_json(const Solution& sol, std::optional<bool> certificate_ok,
                   const Rendering& mode) {
  Json j;
  j["status"] = "Solved";
  j["objective"] = quadratic_json(sol.objective_value, mode);
  Json point = Json::array();
  if (sol.complex_lift) {
    for (std::size_t k = 0; k + 1 < sol.point.size(); k += 2) {
      Json entry;
      entry["re"] = quadratic_json(sol.point[k], mode);
      entry["im"] = quadratic_json(sol.point[k + 1], mode);
      point.push_back(std::move(entry));
    }
  } else {
    for (const auto& x : sol.point) point.push_back(quadratic_json(x, mode));
  }
  j["point"] = std::move(point);
  j["active_set"] = sol.active_set;
  if (certificate_ok) j["certificate_ok"] = *certificate_ok;
  Json mult;
  mult["ball"] = quadratic_json(sol.ball_multiplier, mode);
  Json nn = Json::array();
  for (const auto& m : sol.nonneg_multipliers) nn.push_back(quadratic_json(m, mode));
  mult["nonneg"] = std::move(nn);
  Json eq = Json::array();
  for (const auto& m : sol.equality_multipliers) eq.push_back(quadratic_json(m, mode));
  mult["equality"] = std::move(eq);
  j["multipliers"] = std::move(mult);
  j["degenerate"] = sol.degenerate;
  return j;
}

Json feasibility_json(const FeasibilityReport& rep, const Rendering& mode) {
  Json j;
  j["status"] = rep.status == FeasibilityStatus::Empty ? "Empty" : "Feasible";
  j["min_residual_sq"] = scalar_json(rep.min_residual_sq, mode);
  return j;
}

Json bracket_json(const OracleBracket& br, const Rendering& mode) {
  Json j;
  j["lower"] = scalar_json(br.lower, mode);
  j["upper"] = scalar_json(br.upper, mode);
  return j;
}

Json gap_report_json(const GapReport& rep, const Rendering& mode) {
  Json j;
  j["kappa"] = scalar_json(rep.kappa, mode);
  j["conditions_a_b_hold"] = rep.conditions_a_b_hold;
  Json records = Json::array();
  for (const auto& rec : rep.records) {
    Json r;
    r["n"] = rec.n;
    r["input_distance"] = scalar_json(rec.input_distance, mode);
    r["separation_sq"] = scalar_json(rec.separation_sq, mode);
    r["solution1"] = solution_json(rec.solution1, std::nullopt, mode);
    r["solution2"] = solution_json(rec.solution2, std::nullopt, mode);
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  return j;
}

std::string gap_table(const GapReport& rep) {
  std::string out = "   n  input_distance  separation_sq  kappa_sq\n";
  Rational ksq = rep.kappa * rep.kappa;
  for (const auto& rec : rep.records) {
    std::string n = std::to_string(rec.n);
    out += std::string(4 > n.size() ? 4 - n.size() : 0, ' ') + n;
    std::string d = rec.input_distance.to_string();
    out += "  " + d + std::string(d.size() < 14 ? 14 - d.size() : 0, ' ');
    std::string s = rec.separation_sq.to_string();
    out += "  " + s + std::string(s.size() < 13 ? 13 - s.size() : 0, ' ');
    out += "  " + ksq.to_string() + "\n";
  }
  out += rep.conditions_a_b_hold ? "conditions (a) and (b): hold\n"
                                 : "conditions (a) and (b): VIOLATED\n";
  return out;
}

namespace {

Json expr_json(const ExprPtr& e) {
  Json j;
  switch (e->op) {
    case Expr::Op::Constant:
      j["op"] = "const";
      j["value"] = e->value.to_string();
      break;
    case Expr::Op::Cell:
      j["op"] = "cell";
      j["cell"] = e->cell;
      break;
    case Expr::Op::Neg:
      j["op"] = "neg";
      j["arg"] = expr_json(e->left);
      break;
    case Expr::Op::Add:
    case Expr::Op::Sub:
    case Expr::Op::Mul:
    case Expr::Op::Div:
      j["op"] = e->op == Expr::Op::Add   ? "add"
                : e->op == Expr::Op::Sub ? "sub"
                : e->op == Expr::Op::Mul ? "mul"
                                         : "div";
      j["left"] = expr_json(e->left);
      j["right"] = expr_json(e->right);
      break;
  }
  return j;
}

ExprPtr parse_expr(const Json& j) {
  if (!j.is_object()) throw ValidationError("expression must be an object");
  std::string op = j.at("op").get<std::string>();
  if (op == "const") return expr_const(parse_rational(j.at("value")));
  if (op == "cell") return expr_cell(j.at("cell").get<long>());
  if (op == "neg") return expr_neg(parse_expr(j.at("arg")));
  ExprPtr l = parse_expr(j.at("left"));
  ExprPtr r = parse_expr(j.at("right"));
  if (op == "add") return expr_add(std::move(l), std::move(r));
  if (op == "sub") return expr_sub(std::move(l), std::move(r));
  if (op == "mul") return expr_mul(std::move(l), std::move(r));
  if (op == "div") return expr_div(std::move(l), std::move(r));
  throw ValidationError("unknown expression op \"" + op + "\"");
}

const char* kind_name(BssNode::Kind k) {
  switch (k) {
    case BssNode::Kind::Input:
      return "Input";
    case BssNode::Kind::Computation:
      return "Computation";
    case BssNode::Kind::Branch:
      return "Branch";
    case BssNode::Kind::Shift:
      return "Shift";
    case BssNode::Kind::Output:
      return "Output";
  }
  return "?";
}

const char* branch_name(BranchRelation r) {
  switch (r) {
    case BranchRelation::Less:
      return "<";
    case BranchRelation::Greater:
      return ">";
    case BranchRelation::Equal:
      return "=";
  }
  return "?";
}

}  // namespace

Json program_json(const BssProgram& prog) {
  Json j;
  j["entry"] = prog.entry;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < prog.nodes.size(); ++i) {
    const BssNode& n = prog.nodes[i];
    Json node;
    node["id"] = i;
    node["kind"] = kind_name(n.kind);
    Json params = Json::object();
    switch (n.kind) {
      case BssNode::Kind::Input:
        break;
      case BssNode::Kind::Computation:
        params["target"] = n.target;
        params["expr"] = expr_json(n.expr);
        break;
      case BssNode::Kind::Branch:
        params["cell"] = n.cell;
        params["relation"] = branch_name(n.rel);
        break;
      case BssNode::Kind::Shift:
        params["direction"] = n.direction;
        break;
      case BssNode::Kind::Output:
        params["start"] = n.out_start;
        params["count"] = n.out_count;
        break;
    }
    node["params"] = std::move(params);
    node["successors"] = n.successors;
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

BssProgram parse_program(const Json& j) {
  return guarded("program", [&] {
    if (!j.is_object() || !j.contains("nodes"))
      throw ValidationError("program must be an object with a node list");
    BssProgram prog;
    prog.entry = j.value("entry", std::size_t{0});
    const Json& nodes = j.at("nodes");
    if (!nodes.is_array()) throw ValidationError("nodes must be an array");
    prog.nodes.resize(nodes.size());
    for (const Json& nj : nodes) {
      std::size_t id = nj.at("id").get<std::size_t>();
      if (id >= prog.nodes.size()) throw InvalidProgramError("node id out of range");
      BssNode& n = prog.nodes[id];
      std::string kind = nj.at("kind").get<std::string>();
      if (kind == "Input") {
        n.kind = BssNode::Kind::Input;
      } else if (kind == "Computation") {
        const Json& params = nj.at("params");
        n.kind = BssNode::Kind::Computation;
        n.target = params.at("target").get<long>();
        n.expr = parse_expr(params.at("expr"));
      } else if (kind == "Branch") {
        const Json& params = nj.at("params");
        n.kind = BssNode::Kind::Branch;
        n.cell = params.at("cell").get<long>();
        std::string rel = params.at("relation").get<std::string>();
        if (rel == "<")
          n.rel = BranchRelation::Less;
        else if (rel == ">")
          n.rel = BranchRelation::Greater;
        else if (rel == "=")
          n.rel = BranchRelation::Equal;
        else
          throw InvalidProgramError("unknown branch relation \"" + rel + "\"");
      } else if (kind == "Shift") {
        const Json& params = nj.at("params");
        n.kind = BssNode::Kind::Shift;
        n.direction = params.at("direction").get<int>();
      } else if (kind == "Output") {
        const Json& params = nj.at("params");
        n.kind = BssNode::Kind::Output;
        n.out_start = params.at("start").get<long>();
        n.out_count = params.at("count").get<std::size_t>();
      } else {
        throw InvalidProgramError("unknown node kind \"" + kind + "\"");
      }
      n.successors = nj.at("successors").get<std::vector<std::size_t>>();
    }
    return prog;
  });
}

template <class Scalar>
Json run_result_json(const RunResult<Scalar>& res, const Rendering& mode) {
  Json j;
  j["status"] = res.status == RunStatus::Halted           ? "Halted"
                : res.status == RunStatus::BudgetExceeded ? "BudgetExceeded"
                                                          : "DivisionByZero";
  if (res.status == RunStatus::Halted) {
    Json out = Json::array();
    for (const auto& v : res.output) {
      if constexpr (std::is_same_v<Scalar, Rational>)
        out.push_back(scalar_json(v, mode));
      else
        out.push_back(quadratic_json(v, mode));
    }
    j["output"] = std::move(out);
  }
  Json k;
  k["adds"] = res.counters.adds;
  k["muls"] = res.counters.muls;
  k["divs"] = res.counters.divs;
  k["comparisons"] = res.counters.comparisons;
  k["steps"] = res.counters.steps;
  j["counters"] = std::move(k);
  return j;
}

template Json run_result_json(const RunResult<Rational>&, const Rendering&);
template Json run_result_json(const RunResult<QuadraticNumber>&, const Rendering&);

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace bssbp

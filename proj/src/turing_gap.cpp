#include "bssbp/turing_gap.hpp"

#include <string>

namespace bssbp {

namespace {

Rational instance_distance_sq(const RealInstance& a, const RealInstance& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("sequence members must share the limit's shape");
  Rational s(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational d = a.A.at(i, j) - b.A.at(i, j);
      s += d * d;
    }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational d = a.y[i] - b.y[i];
    s += d * d;
  }
  return s;
}

}  // namespace

void GapSequences::validate() const {
  if (kappa.sign() <= 0) throw ValidationError("separation constant must be positive");
  if (omega1.size() != omega2.size()) throw ValidationError("sequences must have equal length");
  if (omega1.empty()) throw ValidationError("sequences are empty");
  omega_star.validate();
  Rational bound(1, 4);  // 4^-n for n = 1
  for (std::size_t i = 0; i < omega1.size(); ++i, bound /= Rational(4)) {
    omega1[i].validate();
    omega2[i].validate();
    if (instance_distance_sq(omega1[i], omega_star) > bound ||
        instance_distance_sq(omega2[i], omega_star) > bound)
      throw ValidationError("member " + std::to_string(i + 1) +
                            " is farther than 2^-n from the limit");
  }
}

GapSequences build_sequences(const Rational& epsilon, std::size_t n_max) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1))
    throw EpsilonOutOfRangeError("noise level must lie strictly between 0 and 1, got " +
                                 epsilon.to_string());
  if (n_max < 1) throw ValidationError("need at least one sequence member");

  GapSequences seq;
  seq.epsilon = epsilon;
  seq.kappa = Rational(1) - epsilon;
  seq.omega_star.A = RatMatrix::from_rows({{Rational(1), Rational(1)}});
  seq.omega_star.y = {Rational(1)};
  seq.omega_star.epsilon = epsilon;

  Rational step(1, 2);  // 2^-n
  for (std::size_t n = 1; n <= n_max; ++n, step /= Rational(2)) {
    Rational low = Rational(1) - step;
    RealInstance one;
    one.A = RatMatrix::from_rows({{Rational(1), low}});
    one.y = {Rational(1)};
    one.epsilon = epsilon;
    seq.omega1.push_back(std::move(one));
    RealInstance two;
    two.A = RatMatrix::from_rows({{low, Rational(1)}});
    two.y = {Rational(1)};
    two.epsilon = epsilon;
    seq.omega2.push_back(std::move(two));
  }
  return seq;
}

GapReport verify_gap(const GapSequences& seq) {
  seq.validate();
  GapReport rep;
  rep.kappa = seq.kappa;
  rep.conditions_a_b_hold = true;
  Rational kappa_sq = seq.kappa * seq.kappa;
  Rational step(1, 2);  // 2^-n

  for (std::size_t i = 0; i < seq.omega1.size(); ++i, step /= Rational(2)) {
    GapRecord rec;
    rec.n = i + 1;
    Rational dist_sq = instance_distance_sq(seq.omega1[i], seq.omega_star);
    Rational dist_sq2 = instance_distance_sq(seq.omega2[i], seq.omega_star);
    if (dist_sq2 > dist_sq) dist_sq = dist_sq2;
    if (!exact_sqrt(dist_sq, rec.input_distance))
      throw ValidationError("input distance is irrational at n = " + std::to_string(rec.n));
    rec.solution1 = solve(seq.omega1[i]);
    rec.solution2 = solve(seq.omega2[i]);

    QuadraticNumber sep(0);
    for (std::size_t j = 0; j < rec.solution1.point.size(); ++j) {
      QuadraticNumber d = rec.solution1.point[j] - rec.solution2.point[j];
      sep += d * d;
    }
    rec.separation_sq = sep.as_rational();

    if (rec.input_distance > step || rec.separation_sq <= kappa_sq)
      rep.conditions_a_b_hold = false;
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace bssbp

#include "parrondo/game_analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace parrondo {
namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " = " +
                                std::to_string(p) + " is outside [0, 1]");
  }
}

}  // namespace

void GameAParams::validate() const { check_probability(pa, "pa"); }

void GameBParams::validate() const {
  check_probability(p0, "p0");
  check_probability(p1, "p1");
}

GameAParams BiasOffset::apply(const GameAParams& fair) const {
  GameAParams out{fair.pa - epsilon};
  out.validate();
  return out;
}

GameBParams BiasOffset::apply(const GameBParams& fair) const {
  GameBParams out{fair.p0 - epsilon, fair.p1 - epsilon};
  out.validate();
  return out;
}

TransitionMatrix3::TransitionMatrix3(const Matrix3& entries) : m_(entries) {
  for (int j = 0; j < 3; ++j) {
    double col = 0.0;
    for (int i = 0; i < 3; ++i) {
      check_probability(m_[i][j], "transition entry");
      col += m_[i][j];
    }
    if (m_[j][j] != 0.0) {
      throw std::invalid_argument("transition matrix diagonal must be zero");
    }
    if (std::abs(col - 1.0) > 1e-12) {
      throw std::invalid_argument("transition matrix column " +
                                  std::to_string(j) + " does not sum to 1");
    }
  }
}

TransitionMatrix3 build_transition_matrix(const GameBParams& params) {
  params.validate();
  const double p0 = params.p0;
  const double p1 = params.p1;
  return TransitionMatrix3(Matrix3{{
      {0.0, 1.0 - p1, p1},
      {p0, 0.0, 1.0 - p1},
      {1.0 - p0, p1, 0.0},
  }});
}

namespace detail {

std::array<double, 3> solve3(Matrix3 a, std::array<double, 3> rhs,
                             double singular_tol) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < singular_tol) {
      throw std::domain_error("3x3 system is numerically singular");
    }
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<double, 3> x{};
  for (int r = 2; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < 3; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

double det3(const Matrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace detail

EquilibriumVector stationary_distribution(const TransitionMatrix3& t) {
  Matrix3 a{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a[i][j] = t(i, j) - (i == j ? 1.0 : 0.0);
  }
  a[2] = {1.0, 1.0, 1.0};
  const auto v = detail::solve3(a, {0.0, 0.0, 1.0});
  EquilibriumVector out;
  for (int i = 0; i < 3; ++i) {
    // Rounding can leave -0.0 or tiny negatives on transient states.
    out.v[i] = v[i] < 0.0 && v[i] > -1e-14 ? 0.0 : v[i];
  }
  return out;
}

double long_run_rate_B(const GameBParams& params) {
  const auto v = stationary_distribution(build_transition_matrix(params));
  return (2.0 * params.p0 - 1.0) * v[0] +
         (2.0 * params.p1 - 1.0) * (v[1] + v[2]);
}

double fairness_determinant(const GameBParams& params) {
  params.validate();
  const double p0 = params.p0;
  const double p1 = params.p1;
  return detail::det3(Matrix3{{
      {-1.0, 1.0 - p1, p1},
      {p0, -1.0, 1.0 - p1},
      {2.0 * p0 - 1.0, 2.0 * p1 - 1.0, 2.0 * p1 - 1.0},
  }});
}

double fair_p0_of_p1(double p1) {
  check_probability(p1, "p1");
  const double p0 =
      (1.0 - 2.0 * p1 + p1 * p1) / (1.0 - 2.0 * p1 + 2.0 * p1 * p1);
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw std::domain_error("no fair p0 in [0, 1] for p1 = " +
                            std::to_string(p1));
  }
  return p0;
}

double ratchet_break_b(const GameBParams& params) {
  params.validate();
  const double p0 = params.p0;
  const double p1 = params.p1;
  if (!(p0 >= 0.0)) throw std::domain_error("ratchet requires 0 <= p0");
  if (!(p0 < 0.5)) throw std::domain_error("ratchet requires p0 < 1/2");
  if (!(p1 > 0.5)) throw std::domain_error("ratchet requires 1/2 < p1");
  if (!(p1 < 1.0)) throw std::domain_error("ratchet requires p1 < 1");
  if (!(p1 < (3.0 - 4.0 * p0) / 2.0)) {
    throw std::domain_error("ratchet requires p1 < (3 - 4 p0) / 2");
  }
  return 3.0 * (2.0 * p1 - 1.0) / (4.0 * (p1 - p0));
}

ClassicalPotential ClassicalPotential::linear(double slope_a, double scale) {
  ClassicalPotential pot;
  pot.kind_ = Kind::linear;
  pot.slope_a_ = slope_a;
  pot.scale_ = scale;
  return pot;
}

ClassicalPotential ClassicalPotential::ratchet(const GameBParams& fair,
                                               double slope_a, double scale) {
  ClassicalPotential pot;
  pot.kind_ = Kind::ratchet;
  pot.b_ = ratchet_break_b(fair);
  pot.inner_slope_ = -(2.0 * fair.p0 - 1.0);
  pot.outer_slope_ = -(2.0 * fair.p1 - 1.0);
  pot.slope_a_ = slope_a;
  pot.scale_ = scale;
  return pot;
}

double ClassicalPotential::operator()(double x) const {
  double v = -slope_a_ * x;
  if (kind_ == Kind::ratchet) {
    const double u = x - 3.0 * std::round(x / 3.0);  // u in [-1.5, 1.5]
    const double au = std::abs(u);
    const double periodic =
        au <= b_ ? inner_slope_ * u
                 : std::copysign(inner_slope_ * b_ + outer_slope_ * (au - b_),
                                 u);
    v += periodic;
  }
  return v * scale_;
}

double eval_classical_potential(const ClassicalPotential& pot, double x) {
  return pot(x);
}

}  // namespace parrondo

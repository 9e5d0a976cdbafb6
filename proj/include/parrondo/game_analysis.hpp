#pragma once

#include <array>

namespace parrondo {

// Canonical residue of x modulo 3 in {0, 1, 2}, also for negative x.
constexpr int residue3(long long x) {
  const int r = static_cast<int>(x % 3);
  return r < 0 ? r + 3 : r;
}

struct GameAParams {
  double pa = 0.5;  // heads probability of coin A

  void validate() const;
};

struct GameBParams {
  double p0 = 0.5;  // coin B0, used when x = 0 (mod 3)
  double p1 = 0.5;  // coin B1, used otherwise

  void validate() const;
};

// Uniform subtraction from fair-game probabilities.
struct BiasOffset {
  double epsilon = 0.0;

  GameAParams apply(const GameAParams& fair) const;
  GameBParams apply(const GameBParams& fair) const;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

// Column-stochastic transition matrix over payoff residues mod 3.
// Entry (to, from) is the probability of moving to residue `to` from `from`.
class TransitionMatrix3 {
 public:
  // Validates: entries in [0,1], zero diagonal, columns summing to 1.
  explicit TransitionMatrix3(const Matrix3& entries);

  double operator()(int to, int from) const { return m_[to][from]; }
  const Matrix3& entries() const { return m_; }

 private:
  Matrix3 m_;
};

struct EquilibriumVector {
  std::array<double, 3> v{};

  double operator[](int i) const { return v[i]; }
};

// Piecewise-linear potential geometry of the classical games.
//
// A linear potential is -slope_a * x. A ratchet potential adds the continuous
// 3-periodic sawtooth built from the fair coins: slope -(2p0-1) on
// |x - 3n| <= b, slope -(2p1-1) elsewhere, anchored at V(0) = 0. `scale` is a
// display factor only.
class ClassicalPotential {
 public:
  enum class Kind { linear, ratchet };

  static ClassicalPotential linear(double slope_a, double scale = 1.0);
  // `fair` must satisfy the ratchet_break_b ordering.
  static ClassicalPotential ratchet(const GameBParams& fair, double slope_a,
                                    double scale = 1.0);

  Kind kind() const { return kind_; }
  double slope_a() const { return slope_a_; }
  double b() const { return b_; }
  double scale() const { return scale_; }
  static constexpr int period() { return 3; }

  double operator()(double x) const;

 private:
  ClassicalPotential() = default;

  Kind kind_ = Kind::linear;
  double slope_a_ = 0.0;
  double inner_slope_ = 0.0;  // -(2p0-1), on |x-3n| <= b
  double outer_slope_ = 0.0;  // -(2p1-1)
  double b_ = 0.0;
  double scale_ = 1.0;
};

TransitionMatrix3 build_transition_matrix(const GameBParams& params);

// Direct 3x3 solve of (T - I)v = 0 with the last row replaced by sum(v) = 1.
// Throws std::domain_error when the system is numerically singular.
EquilibriumVector stationary_distribution(const TransitionMatrix3& t);

// Long-run payoff per play of game B.
double long_run_rate_B(const GameBParams& params);

// Determinant of the fairness matrix; zero iff game B is fair.
double fairness_determinant(const GameBParams& params);

// p0 making game B fair for the given p1.
double fair_p0_of_p1(double p1);

// Breakpoint half-width b = 3(2p1-1) / (4(p1-p0)) of the continuous ratchet.
// Requires 0 <= p0 < 1/2 < p1 < min{1, (3-4p0)/2}; throws std::domain_error
// naming the violated inequality otherwise.
double ratchet_break_b(const GameBParams& params);

double eval_classical_potential(const ClassicalPotential& pot, double x);

namespace detail {
// Gaussian elimination with partial pivoting. Throws std::domain_error if a
// pivot falls below `singular_tol`.
std::array<double, 3> solve3(Matrix3 a, std::array<double, 3> rhs,
                             double singular_tol = 1e-12);
double det3(const Matrix3& a);
}  // namespace detail

}  // namespace parrondo

#pragma once

#include <array>

namespace dirng {

/// The tilted-CHSH game. Alice receives x in {0,1}, Bob y in {0,1,2}; the
/// pair is drawn from a distribution that mixes the CHSH game (four pairs in
/// {0,1}^2) with a trivial single-player clause at (x,y) = (0,2) whose weight
/// grows with the tilting parameter beta.
struct GameSpec {
  double beta = 0.0;     // tilting parameter in [0,2); saturates to 2 only by
                         // rounding when built from very small theta
  double theta = 0.0;    // Schmidt angle of the optimal state, in (0, pi/4]
  double omega_q = 0.0;  // maximal quantum winning probability
  double omega_c = 0.0;  // maximal classical winning probability
  double i_q = 0.0;      // maximal quantum value of the tilted-CHSH expression
  double kappa = 0.0;    // 4*sqrt(4+beta)*(4*sqrt(2)+61)/ln 2
};

/// Build the game from beta in [0, 2). Throws std::domain_error otherwise.
GameSpec game_from_beta(double beta);

/// Build the game from theta in (0, pi/4]. Inverse of the beta -> theta map.
GameSpec game_from_theta(double theta);

/// omega_q - omega_c evaluated without cancellation; usable down to
/// theta ~ 1e-15, where the difference underflows the naive formula.
double classical_quantum_gap(const GameSpec& spec);

/// Input distribution p(x, y). Zero outside the support
/// {0,1}^2 u {(0,2)}; the trivial pair carries weight beta/(4+beta).
struct InputDistribution {
  double pair_weight = 0.0;     // each (x,y) in {0,1}^2
  double trivial_weight = 0.0;  // (x,y) = (0,2)

  double prob(int x, int y) const;

  /// Canonical sampling order: (0,0), (0,1), (1,0), (1,1), (0,2).
  static constexpr std::array<std::array<int, 2>, 5> kSupport = {
      {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}}};
};

InputDistribution input_distribution(const GameSpec& spec);

/// True iff the pair (x, y) can occur (possibly with zero probability).
bool in_support(int x, int y);

/// Game predicate: win iff a xor b = x*y on the CHSH pairs, or a = 0 on the
/// trivial pair. Throws std::domain_error outside the support.
bool predicate(int a, int b, int x, int y);

/// Winning probability from a tilted-CHSH expectation value:
/// omega = 1/2 + i_value/(8+2 beta). Requires |i_value| <= i_q.
double omega_from_tilted_value(const GameSpec& spec, double i_value);

/// Conditional outcome table p(a,b | x,y), indexed [x][y][a][b].
using ConditionalTable =
    std::array<std::array<std::array<std::array<double, 2>, 2>, 3>, 2>;

/// Game value sum_{a,b,x,y} V(a,b,x,y) p(x,y) p(a,b|x,y).
double game_value(const GameSpec& spec, const ConditionalTable& table);

/// Tilted-CHSH expression beta<A0> + <A0B0> + <A0B1> + <A1B0> - <A1B1>,
/// with Alice's marginal <A0> read from the (x,y) = (0,2) block so the
/// identity with game_value holds for arbitrary (even signaling) tables.
double tilted_chsh_value(const GameSpec& spec, const ConditionalTable& table);

}  // namespace dirng

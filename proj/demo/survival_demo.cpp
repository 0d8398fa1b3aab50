// Three cops chase the strategy robber on GP(28,8); a fourth cop catches it.

#include <iostream>
#include <memory>

#include "gpcops/gpcops.hpp"

int main() {
  using namespace gpcops;
  GPGraph g(28, 8);

  auto three = std::make_shared<const WinTable>(solve(g, 3, {.distances = true}));
  CopSet start = strongest_placement(*three);
  auto record = play_strategy_robber(g, start, optimal_cops(three), 200);
  std::cout << "3 cops from " << format_state(g, {start, initial_placement(g, start), Side::Cops}) << '\n';
  std::cout << "  plies " << record.plies << ", captured " << record.captured << ", trapped " << record.trapped
            << '\n';

  auto four = solve(g, 4, {.distances = true});
  CopSet p = *four.winning_placement();
  GameState s{p, optimal_robber_placement(four, g, p), Side::Cops};
  std::cout << "4 cops from " << format_state(g, s) << '\n';
  int plies = 0;
  while (!is_capture(s)) {
    if (s.to_move == Side::Cops) {
      s.cops = optimal_cop_policy(four, g, s);
      s.to_move = Side::Robber;
    } else {
      s.robber = optimal_robber_policy(four, g, s);
      s.to_move = Side::Cops;
    }
    ++plies;
  }
  std::cout << "  captured after " << plies << " plies at " << g.name(s.robber) << '\n';
}

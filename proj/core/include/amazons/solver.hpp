#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "amazons/board.hpp"

namespace amazons {

class MixedColors : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exact two-player verdict. Unknown is a first-class result carrying the
// node count at exhaustion; verdicts never silently degrade.
struct Verdict {
    enum class Kind { MoverWins, MoverLoses, Unknown } kind;
    uint64_t nodes = 0;

    bool operator==(const Verdict& o) const { return kind == o.kind; }
};

std::string to_string(Verdict::Kind k);

// Exact normal-play solve for board.to_move within a node budget.
// Memoizes on the canonical cell/to-move key; deterministic.
Verdict solve(const Board& board, uint64_t node_budget);

// Reference implementation with no memoization and no early pruning beyond
// the game rules; used to cross-validate solve() on small boards.
bool blind_mover_wins(const Board& board);

// Maximum number of moves `color` can make alone. The board must contain no
// amazons of the other color (MixedColors otherwise). Exact, memoized.
int max_moves(const Board& board, Player color);

// A decidable condition on boards: a conjunction of cell atoms.
struct GoalAtom {
    enum class Kind { AmazonAt, EmptyAt, BurnedAt } kind;
    Player color = Player::White;  // only meaningful for AmazonAt
    Coord square;
};

struct GoalPredicate {
    std::vector<GoalAtom> atoms;

    bool eval(const Board& b) const;
    bool trivially_true() const { return atoms.empty(); }
    std::string text() const;

    static GoalPredicate amazon_at(Player color, Coord c);
    static GoalPredicate empty_at(Coord c);
    GoalPredicate& and_amazon_at(Player color, Coord c);
    GoalPredicate& and_empty_at(Coord c);
    GoalPredicate& and_burned_at(Coord c);

    // Grammar: comma-joined atoms `amazon@x,y` / `wamazon@x,y` /
    // `bamazon@x,y` / `empty@x,y` / `burned@x,y`.
    static GoalPredicate parse(const std::string& text);
};

struct ReachResult {
    enum class Status { Yes, No, Unknown } status;
    std::vector<Move> trace;  // shortest witness when status == Yes
    uint64_t nodes = 0;
};

// Single-color reachability: can `color`, moving alone, reach a state where
// `goal` holds? Breadth-first over the single-color state graph, so a Yes
// carries a shortest witness; No means the state graph was exhausted.
// The board must contain only `color` amazons.
ReachResult reachable(const Board& board, Player color, const GoalPredicate& goal,
                      uint64_t node_budget);

// Like reachable, but the trace must pass through states satisfying every
// goal in `goals` (in any order, not necessarily simultaneously). Search
// state is (board, satisfied-set) so exhaustion is still exact.
ReachResult reachable_visit_all(const Board& board, Player color,
                                const std::vector<GoalPredicate>& goals,
                                uint64_t node_budget);

// Exhaustive single-color exploration reporting, per goal, whether it is
// individually reachable, plus the maximum number of goals satisfied
// simultaneously in any reachable state.
struct SimultaneousReport {
    std::vector<bool> individually_reachable;
    int max_simultaneous = 0;
    bool exact = false;  // false iff budget was exhausted
    uint64_t nodes = 0;
};
SimultaneousReport max_simultaneous_goals(const Board& board, Player color,
                                          const std::vector<GoalPredicate>& goals,
                                          uint64_t node_budget);

// Replays a single-color trace: before each move the side to move is forced
// to `color` (the other side conceptually passes). Throws IllegalMove if the
// trace does not replay.
Board replay_single_color(Board board, Player color, const std::vector<Move>& trace);

// Enumerates color's moves in deterministic scan order without sorting;
// the hot-path equivalent of legal_moves for the search engines.
void for_each_move(const Board& board, Player color,
                   const std::function<bool(const Move&)>& fn);

}  // namespace amazons

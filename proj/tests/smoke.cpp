#include <cstdio>
#include "amazons/board.hpp"
#include "amazons/solver.hpp"
using namespace amazons;
int main() {
    Board b = standard_start();
    std::printf("start moves (white): %zu\n", b.legal_moves(Player::White).size());
    Board tiny = Board::parse("3 1 W\nW.B\n");
    auto v = solve(tiny, 1000);
    std::printf("1x3 verdict: %s\n", to_string(v.kind).c_str());
    Board corridor = Board::parse("3 1 W\nW..\n");
    std::printf("1x3 maxmoves: %d\n", max_moves(corridor, Player::White));
    return 0;
}

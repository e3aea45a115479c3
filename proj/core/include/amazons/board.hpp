#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace amazons {

enum class Player : uint8_t { White, Black };

constexpr Player opponent(Player p) {
    return p == Player::White ? Player::Black : Player::White;
}

// Cell contents. Burned squares are permanent: no operation un-burns.
enum class Square : uint8_t { Empty, Burned, WhiteAmazon, BlackAmazon };

constexpr Square amazon_of(Player p) {
    return p == Player::White ? Square::WhiteAmazon : Square::BlackAmazon;
}

struct Coord {
    int x = 0;  // grows rightward
    int y = 0;  // grows downward; row 0 is the top line of the text format

    friend bool operator==(const Coord&, const Coord&) = default;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

// Row-major ordering used for the deterministic move-generation contract.
constexpr bool row_major_less(const Coord& a, const Coord& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

struct Move {
    Coord from;
    Coord to;
    Coord arrow;

    friend bool operator==(const Move&, const Move&) = default;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string msg, int line, int col)
        : std::runtime_error(std::move(msg)), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_;
    int col_;
};

class IllegalMove : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Generalized Amazons position: a w x h grid plus the side to move.
// Value semantics throughout; apply() returns a new board.
class Board {
  public:
    Board(int width, int height, Player to_move = Player::White);

    int width() const { return width_; }
    int height() const { return height_; }
    Player to_move() const { return to_move_; }
    void set_to_move(Player p) { to_move_ = p; }

    bool in_bounds(Coord c) const {
        return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
    }
    Square at(Coord c) const { return cells_[index(c)]; }
    void set(Coord c, Square s) { cells_[index(c)] = s; }

    std::vector<Coord> amazons(Player p) const;
    int count(Square s) const;

    // All legal moves for `player`, in row-major order by from, then to,
    // then arrow. Empty if the player has no amazons or no mobility.
    std::vector<Move> legal_moves(Player player) const;

    bool has_any_move(Player player) const;

    // True iff the side to move has no legal move (normal play: they lose).
    bool is_loss_for_mover() const { return !has_any_move(to_move_); }

    // Validates `move` for the side to move and returns the successor
    // position. Throws IllegalMove naming the failing leg otherwise.
    Board apply(Move move) const;

    // Validation used by apply and by the movegen soundness tests.
    // Returns an empty string if legal, else a description of the failure.
    std::string why_illegal(Move move, Player mover) const;

    std::string serialize() const;
    static Board parse(const std::string& text);

    const std::vector<Square>& cells() const { return cells_; }

    // Packed canonical key of (cells, to_move); used as transposition key.
    std::string state_key() const;
    // Key of the cells only; single-color searches ignore to_move.
    std::string cells_key() const;

    friend bool operator==(const Board&, const Board&) = default;

  private:
    size_t index(Coord c) const;

    int width_;
    int height_;
    Player to_move_;
    std::vector<Square> cells_;
};

// The eight queen directions, fixed order: N, NE, E, SE, S, SW, W, NW.
struct Dir {
    int dx;
    int dy;
    friend bool operator==(const Dir&, const Dir&) = default;
};
inline constexpr Dir kQueenDirs[8] = {{0, -1}, {1, -1}, {1, 0},  {1, 1},
                                      {0, 1},  {-1, 1}, {-1, 0}, {-1, -1}};

char to_char(Square s);
Square square_from_char(char c);  // throws std::invalid_argument on bad char

std::string to_string(Player p);
std::string to_string(Coord c);
std::string to_string(const Move& m);

// Standard 10x10 starting position (amazons on the classical squares).
Board standard_start();

}  // namespace amazons

#include "amazons/board.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace amazons {

Board::Board(int width, int height, Player to_move)
    : width_(width), height_(height), to_move_(to_move) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("board dimensions must be positive");
    cells_.assign(static_cast<size_t>(width) * height, Square::Empty);
}

size_t Board::index(Coord c) const {
    if (!in_bounds(c))
        throw std::out_of_range("coordinate (" + std::to_string(c.x) + "," +
                                std::to_string(c.y) + ") out of bounds");
    return static_cast<size_t>(c.y) * width_ + c.x;
}

std::vector<Coord> Board::amazons(Player p) const {
    std::vector<Coord> out;
    const Square want = amazon_of(p);
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x)
            if (cells_[static_cast<size_t>(y) * width_ + x] == want)
                out.push_back({x, y});
    return out;
}

int Board::count(Square s) const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), s));
}

namespace {

// Walks the ray from `from` in direction d, appending empty squares until a
// blocker. `skip` is treated as empty (the square the amazon vacated).
void ray_targets(const Board& b, Coord from, Dir d, Coord skip,
                 std::vector<Coord>& out) {
    Coord c{from.x + d.dx, from.y + d.dy};
    while (b.in_bounds(c) && (b.at(c) == Square::Empty || c == skip)) {
        out.push_back(c);
        c = {c.x + d.dx, c.y + d.dy};
    }
}

}  // namespace

std::vector<Move> Board::legal_moves(Player player) const {
    std::vector<Move> moves;
    std::vector<Coord> tos, arrows;
    const Coord no_skip{-1, -1};
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            const Coord from{x, y};
            if (at(from) != amazon_of(player)) continue;
            tos.clear();
            for (const Dir& d : kQueenDirs) ray_targets(*this, from, d, no_skip, tos);
            std::sort(tos.begin(), tos.end(), row_major_less);
            for (const Coord& to : tos) {
                arrows.clear();
                for (const Dir& d : kQueenDirs) ray_targets(*this, to, d, from, arrows);
                std::sort(arrows.begin(), arrows.end(), row_major_less);
                for (const Coord& a : arrows) moves.push_back({from, to, a});
            }
        }
    }
    return moves;
}

bool Board::has_any_move(Player player) const {
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            const Coord from{x, y};
            if (at(from) != amazon_of(player)) continue;
            for (const Dir& d : kQueenDirs) {
                const Coord to{from.x + d.dx, from.y + d.dy};
                // Any step to an empty square suffices: the arrow can always
                // land on the vacated square.
                if (in_bounds(to) && at(to) == Square::Empty) return true;
            }
        }
    }
    return false;
}

namespace {

// Checks that from -> to is a clear nonzero queen line. `skip` is treated as
// empty. Returns "" on success.
std::string check_queen_line(const Board& b, Coord from, Coord to, Coord skip,
                             const char* leg) {
    if (!b.in_bounds(to)) return std::string(leg) + ": target out of bounds";
    const int dx = to.x - from.x, dy = to.y - from.y;
    if (dx == 0 && dy == 0) return std::string(leg) + ": zero-length line";
    if (dx != 0 && dy != 0 && std::abs(dx) != std::abs(dy))
        return std::string(leg) + ": not a queen line";
    const int steps = std::max(std::abs(dx), std::abs(dy));
    const Dir d{dx == 0 ? 0 : dx / std::abs(dx), dy == 0 ? 0 : dy / std::abs(dy)};
    Coord c = from;
    for (int i = 0; i < steps; ++i) {
        c = {c.x + d.dx, c.y + d.dy};
        if (b.at(c) != Square::Empty && c != skip)
            return std::string(leg) + ": blocked at " + to_string(c);
    }
    return "";
}

}  // namespace

std::string Board::why_illegal(Move m, Player mover) const {
    if (!in_bounds(m.from)) return "from out of bounds";
    if (at(m.from) != amazon_of(mover)) return "no " + to_string(mover) + " amazon on " + to_string(m.from);
    if (auto err = check_queen_line(*this, m.from, m.to, {-1, -1}, "amazon leg"); !err.empty())
        return err;
    if (auto err = check_queen_line(*this, m.to, m.arrow, m.from, "arrow leg"); !err.empty())
        return err;
    return "";
}

Board Board::apply(Move m) const {
    if (auto err = why_illegal(m, to_move_); !err.empty())
        throw IllegalMove("illegal move " + to_string(m) + ": " + err);
    Board next = *this;
    next.set(m.from, Square::Empty);
    next.set(m.to, amazon_of(to_move_));
    next.set(m.arrow, Square::Burned);
    next.to_move_ = opponent(to_move_);
    return next;
}

char to_char(Square s) {
    switch (s) {
        case Square::Empty: return '.';
        case Square::Burned: return '#';
        case Square::WhiteAmazon: return 'W';
        case Square::BlackAmazon: return 'B';
    }
    return '?';
}

Square square_from_char(char c) {
    switch (c) {
        case '.': return Square::Empty;
        case '#': return Square::Burned;
        case 'W': return Square::WhiteAmazon;
        case 'B': return Square::BlackAmazon;
        default: throw std::invalid_argument(std::string("bad square character '") + c + "'");
    }
}

std::string Board::serialize() const {
    std::ostringstream os;
    os << width_ << ' ' << height_ << ' ' << (to_move_ == Player::White ? 'W' : 'B') << '\n';
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) os << to_char(cells_[static_cast<size_t>(y) * width_ + x]);
        os << '\n';
    }
    return os.str();
}

Board Board::parse(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw ParseError("empty board text", 0, 0);
    std::istringstream hs(header);
    int w = 0, h = 0;
    char mover = 0;
    if (!(hs >> w >> h >> mover) || (mover != 'W' && mover != 'B'))
        throw ParseError("bad header, expected \"width height W|B\": " + header, 0, 0);
    if (w <= 0 || h <= 0) throw ParseError("non-positive dimensions in header", 0, 0);

    Board b(w, h, mover == 'W' ? Player::White : Player::Black);
    for (int y = 0; y < h; ++y) {
        std::string row;
        if (!std::getline(is, row)) throw ParseError("missing row " + std::to_string(y), y + 1, 0);
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (static_cast<int>(row.size()) != w)
            throw ParseError("row " + std::to_string(y) + " has length " +
                                 std::to_string(row.size()) + ", expected " + std::to_string(w),
                             y + 1, static_cast<int>(row.size()));
        for (int x = 0; x < w; ++x) {
            try {
                b.set({x, y}, square_from_char(row[x]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), y + 1, x);
            }
        }
    }
    return b;
}

std::string Board::state_key() const {
    std::string key = cells_key();
    key.push_back(to_move_ == Player::White ? 'w' : 'b');
    return key;
}

std::string Board::cells_key() const {
    // 2 bits per cell, packed four to a byte.
    std::string key;
    key.reserve(cells_.size() / 4 + 3);
    key.push_back(static_cast<char>(width_));
    uint8_t acc = 0;
    int n = 0;
    for (Square s : cells_) {
        acc = static_cast<uint8_t>(acc << 2 | static_cast<uint8_t>(s));
        if (++n == 4) {
            key.push_back(static_cast<char>(acc));
            acc = 0;
            n = 0;
        }
    }
    if (n) key.push_back(static_cast<char>(acc << 2 * (4 - n)));
    return key;
}

std::string to_string(Player p) { return p == Player::White ? "White" : "Black"; }

std::string to_string(Coord c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

std::string to_string(const Move& m) {
    return to_string(m.from) + "->" + to_string(m.to) + " arrow " + to_string(m.arrow);
}

Board standard_start() {
    Board b(10, 10, Player::White);
    // Classical placement: white on a4 d1 g1 j4, black on a7 d10 g10 j7,
    // with row 0 as the top (rank 10).
    for (Coord c : {Coord{0, 6}, Coord{3, 9}, Coord{6, 9}, Coord{9, 6}})
        b.set(c, Square::WhiteAmazon);
    for (Coord c : {Coord{0, 3}, Coord{3, 0}, Coord{6, 0}, Coord{9, 3}})
        b.set(c, Square::BlackAmazon);
    return b;
}

}  // namespace amazons

#include "amazons/solver.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace amazons {

std::string to_string(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::MoverWins: return "MoverWins";
        case Verdict::Kind::MoverLoses: return "MoverLoses";
        case Verdict::Kind::Unknown: return "Unknown";
    }
    return "?";
}

void for_each_move(const Board& b, Player color, const std::function<bool(const Move&)>& fn) {
    const Square mine = amazon_of(color);
    for (int y = 0; y < b.height(); ++y) {
        for (int x = 0; x < b.width(); ++x) {
            const Coord from{x, y};
            if (b.at(from) != mine) continue;
            for (const Dir& md : kQueenDirs) {
                Coord to{from.x + md.dx, from.y + md.dy};
                while (b.in_bounds(to) && b.at(to) == Square::Empty) {
                    for (const Dir& ad : kQueenDirs) {
                        Coord ar{to.x + ad.dx, to.y + ad.dy};
                        while (b.in_bounds(ar) && (b.at(ar) == Square::Empty || ar == from)) {
                            if (!fn({from, to, ar})) return;
                            ar = {ar.x + ad.dx, ar.y + ad.dy};
                        }
                    }
                    to = {to.x + md.dx, to.y + md.dy};
                }
            }
        }
    }
}

namespace {

struct BudgetExhausted {};

Board apply_unchecked(const Board& b, const Move& m, Player mover) {
    Board next = b;
    next.set(m.from, Square::Empty);
    next.set(m.to, amazon_of(mover));
    next.set(m.arrow, Square::Burned);
    next.set_to_move(opponent(mover));
    return next;
}

class SolveContext {
  public:
    explicit SolveContext(uint64_t budget) : budget_(budget) {}

    bool mover_wins(const Board& b) {
        if (++nodes_ > budget_) throw BudgetExhausted{};
        const std::string key = b.state_key();
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        bool win = false;
        const Player mover = b.to_move();
        for_each_move(b, mover, [&](const Move& m) {
            if (!mover_wins(apply_unchecked(b, m, mover))) {
                win = true;
                return false;  // stop: a losing reply for the opponent found
            }
            return true;
        });
        memo_.emplace(key, win);
        return win;
    }

    uint64_t nodes() const { return nodes_; }

  private:
    uint64_t budget_;
    uint64_t nodes_ = 0;
    std::unordered_map<std::string, bool> memo_;
};

}  // namespace

Verdict solve(const Board& board, uint64_t node_budget) {
    SolveContext ctx(node_budget);
    try {
        const bool win = ctx.mover_wins(board);
        return {win ? Verdict::Kind::MoverWins : Verdict::Kind::MoverLoses, ctx.nodes()};
    } catch (const BudgetExhausted&) {
        return {Verdict::Kind::Unknown, node_budget};
    }
}

bool blind_mover_wins(const Board& b) {
    const Player mover = b.to_move();
    bool win = false;
    for_each_move(b, mover, [&](const Move& m) {
        if (!blind_mover_wins(apply_unchecked(b, m, mover))) {
            win = true;
            return false;
        }
        return true;
    });
    return win;
}

namespace {

void require_single_color(const Board& b, Player color, const char* op) {
    if (b.count(amazon_of(opponent(color))) != 0)
        throw MixedColors(std::string(op) + " requires a single-color position, but " +
                          to_string(opponent(color)) + " amazons are present");
}

}  // namespace

namespace {

class MaxMovesContext {
  public:
    explicit MaxMovesContext(Player color) : color_(color) {}

    int longest(const Board& b) {
        const std::string key = b.cells_key();
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        int best = 0;
        for_each_move(b, color_, [&](const Move& m) {
            best = std::max(best, 1 + longest(apply_unchecked(b, m, color_)));
            return true;
        });
        memo_.emplace(key, best);
        return best;
    }

  private:
    Player color_;
    std::unordered_map<std::string, int> memo_;
};

}  // namespace

int max_moves(const Board& board, Player color) {
    require_single_color(board, color, "max_moves");
    MaxMovesContext ctx(color);
    return ctx.longest(board);
}

bool GoalPredicate::eval(const Board& b) const {
    for (const GoalAtom& a : atoms) {
        if (!b.in_bounds(a.square)) return false;
        const Square s = b.at(a.square);
        switch (a.kind) {
            case GoalAtom::Kind::AmazonAt:
                if (s != amazon_of(a.color)) return false;
                break;
            case GoalAtom::Kind::EmptyAt:
                if (s != Square::Empty) return false;
                break;
            case GoalAtom::Kind::BurnedAt:
                if (s != Square::Burned) return false;
                break;
        }
    }
    return true;
}

GoalPredicate GoalPredicate::amazon_at(Player color, Coord c) {
    GoalPredicate g;
    g.and_amazon_at(color, c);
    return g;
}

GoalPredicate GoalPredicate::empty_at(Coord c) {
    GoalPredicate g;
    g.and_empty_at(c);
    return g;
}

GoalPredicate& GoalPredicate::and_amazon_at(Player color, Coord c) {
    atoms.push_back({GoalAtom::Kind::AmazonAt, color, c});
    return *this;
}

GoalPredicate& GoalPredicate::and_empty_at(Coord c) {
    atoms.push_back({GoalAtom::Kind::EmptyAt, Player::White, c});
    return *this;
}

GoalPredicate& GoalPredicate::and_burned_at(Coord c) {
    atoms.push_back({GoalAtom::Kind::BurnedAt, Player::White, c});
    return *this;
}

std::string GoalPredicate::text() const {
    std::string out;
    for (const GoalAtom& a : atoms) {
        if (!out.empty()) out += ",";
        switch (a.kind) {
            case GoalAtom::Kind::AmazonAt:
                out += a.color == Player::White ? "wamazon@" : "bamazon@";
                break;
            case GoalAtom::Kind::EmptyAt: out += "empty@"; break;
            case GoalAtom::Kind::BurnedAt: out += "burned@"; break;
        }
        out += std::to_string(a.square.x) + "," + std::to_string(a.square.y);
    }
    return out;
}

GoalPredicate GoalPredicate::parse(const std::string& text) {
    GoalPredicate g;
    size_t pos = 0;
    while (pos < text.size()) {
        const size_t at = text.find('@', pos);
        if (at == std::string::npos)
            throw std::invalid_argument("goal atom missing '@': " + text.substr(pos));
        const std::string name = text.substr(pos, at - pos);
        size_t next = at + 1;
        auto read_int = [&](char terminator) {
            size_t end = next;
            while (end < text.size() && text[end] != terminator) ++end;
            if (terminator == ',' && end == text.size())
                throw std::invalid_argument("goal atom missing coordinate in: " + text);
            const int v = std::stoi(text.substr(next, end - next));
            next = end + (end < text.size() ? 1 : 0);
            return v;
        };
        const int x = read_int(',');
        const int y = read_int(',');
        const Coord c{x, y};
        if (name == "amazon" || name == "wamazon")
            g.and_amazon_at(Player::White, c);
        else if (name == "bamazon")
            g.and_amazon_at(Player::Black, c);
        else if (name == "empty")
            g.and_empty_at(c);
        else if (name == "burned")
            g.and_burned_at(c);
        else
            throw std::invalid_argument("unknown goal atom '" + name + "'");
        pos = next;
    }
    if (g.atoms.empty()) throw std::invalid_argument("empty goal");
    return g;
}

namespace {

// Shared breadth-first exploration over the single-color state graph.
// `state_tag` augments the key (used by visit-all); `on_state` may finish
// the search by returning a goal-satisfying signal.
struct BfsNode {
    Board board;
    int tag;
};

std::vector<Move> rebuild_trace(
    const std::unordered_map<std::string, std::pair<std::string, Move>>& parent,
    std::string key) {
    std::vector<Move> trace;
    while (true) {
        auto it = parent.find(key);
        if (it == parent.end()) break;
        trace.push_back(it->second.second);
        key = it->second.first;
    }
    std::reverse(trace.begin(), trace.end());
    return trace;
}

}  // namespace

ReachResult reachable(const Board& board, Player color, const GoalPredicate& goal,
                      uint64_t node_budget) {
    require_single_color(board, color, "reachable");
    if (goal.eval(board)) return {ReachResult::Status::Yes, {}, 0};

    std::deque<Board> frontier{board};
    std::unordered_map<std::string, std::pair<std::string, Move>> parent;
    std::unordered_set<std::string> seen{board.cells_key()};
    uint64_t nodes = 0;

    while (!frontier.empty()) {
        if (++nodes > node_budget) return {ReachResult::Status::Unknown, {}, nodes - 1};
        const Board cur = std::move(frontier.front());
        frontier.pop_front();
        const std::string cur_key = cur.cells_key();

        std::optional<ReachResult> found;
        for_each_move(cur, color, [&](const Move& m) {
            Board next = apply_unchecked(cur, m, color);
            std::string key = next.cells_key();
            if (!seen.insert(key).second) return true;
            parent.emplace(key, std::make_pair(cur_key, m));
            if (goal.eval(next)) {
                found = ReachResult{ReachResult::Status::Yes, rebuild_trace(parent, key), nodes};
                return false;
            }
            frontier.push_back(std::move(next));
            return true;
        });
        if (found) return *found;
    }
    return {ReachResult::Status::No, {}, nodes};
}

ReachResult reachable_visit_all(const Board& board, Player color,
                                const std::vector<GoalPredicate>& goals,
                                uint64_t node_budget) {
    require_single_color(board, color, "reachable");
    const int full = (1 << goals.size()) - 1;
    auto mask_of = [&](const Board& b, int mask) {
        for (size_t i = 0; i < goals.size(); ++i)
            if (!(mask & (1 << i)) && goals[i].eval(b)) mask |= 1 << i;
        return mask;
    };

    const int root_mask = mask_of(board, 0);
    if (root_mask == full) return {ReachResult::Status::Yes, {}, 0};

    auto keyed = [](const Board& b, int mask) {
        return b.cells_key() + static_cast<char>('0' + mask);
    };

    std::deque<BfsNode> frontier{{board, root_mask}};
    std::unordered_map<std::string, std::pair<std::string, Move>> parent;
    std::unordered_set<std::string> seen{keyed(board, root_mask)};
    uint64_t nodes = 0;

    while (!frontier.empty()) {
        if (++nodes > node_budget) return {ReachResult::Status::Unknown, {}, nodes - 1};
        const BfsNode cur = std::move(frontier.front());
        frontier.pop_front();
        const std::string cur_key = keyed(cur.board, cur.tag);

        std::optional<ReachResult> found;
        for_each_move(cur.board, color, [&](const Move& m) {
            Board next = apply_unchecked(cur.board, m, color);
            const int mask = mask_of(next, cur.tag);
            std::string key = keyed(next, mask);
            if (!seen.insert(key).second) return true;
            parent.emplace(key, std::make_pair(cur_key, m));
            if (mask == full) {
                found = ReachResult{ReachResult::Status::Yes, rebuild_trace(parent, key), nodes};
                return false;
            }
            frontier.push_back({std::move(next), mask});
            return true;
        });
        if (found) return *found;
    }
    return {ReachResult::Status::No, {}, nodes};
}

SimultaneousReport max_simultaneous_goals(const Board& board, Player color,
                                          const std::vector<GoalPredicate>& goals,
                                          uint64_t node_budget) {
    require_single_color(board, color, "reachable");
    SimultaneousReport rep;
    rep.individually_reachable.assign(goals.size(), false);

    auto absorb = [&](const Board& b) {
        int simul = 0;
        for (size_t i = 0; i < goals.size(); ++i) {
            if (goals[i].eval(b)) {
                rep.individually_reachable[i] = true;
                ++simul;
            }
        }
        rep.max_simultaneous = std::max(rep.max_simultaneous, simul);
    };

    std::deque<Board> frontier{board};
    std::unordered_set<std::string> seen{board.cells_key()};
    absorb(board);
    uint64_t nodes = 0;
    while (!frontier.empty()) {
        if (++nodes > node_budget) {
            rep.exact = false;
            rep.nodes = nodes - 1;
            return rep;
        }
        const Board cur = std::move(frontier.front());
        frontier.pop_front();
        for_each_move(cur, color, [&](const Move& m) {
            Board next = apply_unchecked(cur, m, color);
            if (seen.insert(next.cells_key()).second) {
                absorb(next);
                frontier.push_back(std::move(next));
            }
            return true;
        });
    }
    rep.exact = true;
    rep.nodes = nodes;
    return rep;
}

Board replay_single_color(Board board, Player color, const std::vector<Move>& trace) {
    for (const Move& m : trace) {
        board.set_to_move(color);
        board = board.apply(m);
    }
    board.set_to_move(color);
    return board;
}

}  // namespace amazons

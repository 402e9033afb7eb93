#ifndef DELP_GAMES_HPP
#define DELP_GAMES_HPP

#include <functional>
#include <optional>

#include "delp/setting.hpp"

namespace delp {

/// One move of an argument game. The root carries no resolution; every other
/// move carries the resolution it answers with and claims vuls(resolution).
struct Move {
    bool pro = true;
    std::optional<ConflictResolution> rho;
    std::set<Vulnerability> claim;

    std::string text() const;
};

/// Outcome of one acceptance query for a foreign literal (contextual games).
struct QueryOutcome {
    Literal literal;    // the classical literal queried in the owning context
    bool negated;       // true when a foreign default literal was resolved
    bool success;       // after negation
    bool timeout = false;
};

struct GameNode {
    Move move;
    std::vector<QueryOutcome> queries;
    bool won_by_query_failure = false;  // OPP move whose own query failed
    std::vector<GameNode> children;
};

struct GameTree {
    bool skeptical = true;
    GameNode root;

    std::string to_json() const;
    std::string to_dot() const;
    std::string to_text() const;
};

/// Re-parses an exported game; resolutions are resolved by text against `s`.
GameTree game_from_json(const std::string& json_text, const Strategy& s);

/// Callback answering acceptance queries for the foreign literals of a move.
/// Monolithic proving passes none; every foreign set is then empty.
using QueryFn =
    std::function<std::vector<QueryOutcome>(const std::set<Literal>& foreigns, bool mover_is_pro)>;

/// Resolutions the player opposite to `node`'s player may answer with.
/// `branch` is the dialogue from the root up to and including `node`;
/// `pro_moves` are all PRO moves already in the tree (root included).
std::vector<ConflictResolution> legal_responses(const Strategy& s, bool skeptical,
                                                const Move& node,
                                                const std::vector<Move>& branch,
                                                const std::vector<Move>& pro_moves);

struct GameResult {
    enum class Outcome { proved, not_provable, no_argument };
    Outcome outcome = Outcome::not_provable;
    std::optional<GameTree> tree;      // present iff proved
    std::vector<std::string> trace;    // losing branches explored by the search

    bool success() const { return outcome == Outcome::proved; }
};

/// Backtracking search for a successful game for argument `a`.
GameResult prove(const Setting& st, const ArgPtr& a, bool skeptical,
                 const QueryFn* query = nullptr);

/// Tries every argument concluding `l` in canonical order.
GameResult prove_literal(const Setting& st, const Literal& l, bool skeptical,
                         const QueryFn* query = nullptr);

/// Structural re-validation of a finished tree against the game definitions;
/// independent of the search path that produced it.
bool validate_game(const Setting& st, const GameTree& t);

}  // namespace delp

#endif

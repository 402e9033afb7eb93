#ifndef DELP_MCS_HPP
#define DELP_MCS_HPP

#include <cstdint>
#include <memory>

#include "delp/games.hpp"

namespace delp {

struct CyclicSystemError : std::runtime_error {
    std::vector<std::string> cycle;  // context ids forming one cycle
    explicit CyclicSystemError(std::vector<std::string> c);
};

/// A vocabulary-scoped defeasible logic program with its own strategy.
/// The derived layers (contextual arguments, conflicts, instantiation) are
/// built once, with foreign body literals as knowledge-base leaves.
struct Context {
    std::string id;
    std::set<std::string> vocabulary;
    Setting setting;
};

Context make_context(std::string id, std::set<std::string> vocabulary, Program p, Strategy s);

struct MultiContextSystem {
    std::vector<Context> contexts;

    const Context* by_id(const std::string& id) const;
    const Context* owner_of_atom(const std::string& atom) const;
};

/// Validates the vocabulary partition and local rule heads.
MultiContextSystem make_mcs(std::vector<Context> contexts);

/// Returns a cycle of context ids in the foreign-literal dependency graph,
/// or nothing when the system is acyclic.
std::optional<std::vector<std::string>> find_cycle(const MultiContextSystem& mcs);

// Wire messages of the simulated network; JSON round-trips bit-exactly.
struct WireQuery {
    std::string target;
    std::string literal;  // classical literal text
    std::string mode;     // "skeptical" | "credulous"
    std::string cid;

    std::string to_json() const;
    static WireQuery from_json(const std::string& text);
};

struct WireAnswer {
    std::string cid;
    bool success = false;
    std::string cause;  // "", "timeout", "unknown-target", "foreign-literal"
    std::string game;   // optional remote game export for tracing

    std::string to_json() const;
    static WireAnswer from_json(const std::string& text);
};

class Transport {
public:
    virtual ~Transport() = default;
    /// Exactly one answer per correlation id; delivery order is the
    /// transport's business and must not affect the answers.
    virtual std::vector<WireAnswer> exchange(std::vector<WireQuery> queries) = 0;
};

enum class DeliveryOrder { fifo, lifo, shuffle };

/// Runs contextual argument games across the contexts of an acyclic system,
/// passing acceptance queries through the transport.
class McsEngine {
public:
    explicit McsEngine(MultiContextSystem mcs, DeliveryOrder order = DeliveryOrder::fifo,
                       uint64_t seed = 0);

    const MultiContextSystem& system() const { return mcs_; }

    /// Services one wire query locally (the transport's callback).
    WireAnswer serve(const WireQuery& q);

    GameResult prove_contextual(const std::string& ctx_id, const Literal& l, bool skeptical);
    GameResult prove_in_system(const Literal& l, bool skeptical);

    /// Simulated timeouts: queries to these targets never get an answer.
    void set_timeout_targets(std::set<std::string> targets) { timeouts_ = std::move(targets); }

private:
    friend class SimTransport;
    MultiContextSystem mcs_;
    std::unique_ptr<Transport> transport_;
    std::set<std::string> timeouts_;
};

/// Splits a monolithic program and strategy over a vocabulary partition.
/// Throws when an atom is uncovered, covered twice, or a strategy member is
/// not expressible in its owning context.
MultiContextSystem contextualize(const Program& p, const Strategy& s,
                                 const std::vector<std::pair<std::string, std::set<std::string>>>& partition);

/// The contextual counterpart of a monolithic argument for the given
/// vocabulary: maximal foreign-headed subtrees become foreign leaves.
/// Returns the canonical text of the counterpart.
std::string contextual_version_text(const ArgPtr& a, const std::set<std::string>& vocabulary);

/// Inverse of contextualization, for cross-checking: merges all programs and
/// expands each contextual resolution to the monolithic resolutions whose
/// contextual version it is.
std::pair<Program, Strategy> merge_monolithic(const MultiContextSystem& mcs);

/// Loads the MCS config document; program and strategy paths are resolved
/// relative to the config file. A strategy entry of "full" generates the
/// full strategy over the context's conflicts.
MultiContextSystem load_mcs_config(const std::string& config_path);

/// Context program rendering with `ctx:` annotations on foreign body literals.
std::string serialize_context_program(const Context& c, const MultiContextSystem& mcs);

}  // namespace delp

#endif

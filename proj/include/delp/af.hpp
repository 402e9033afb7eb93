#ifndef DELP_AF_HPP
#define DELP_AF_HPP

#include <set>
#include <string>
#include <vector>

#include "delp/resolution.hpp"

namespace delp {

struct SizeGuardError : std::runtime_error {
    SizeGuardError(size_t n, size_t limit)
        : std::runtime_error("framework has " + std::to_string(n) +
                             " nodes, exceeding the enumeration guard of " +
                             std::to_string(limit)) {}
};

/// A finite abstract argumentation framework. Nodes carry display labels;
/// semantics operate on indices.
struct Framework {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> att;  // att[i][j]: i attacks j

    size_t n() const { return labels.size(); }
    bool attacks(size_t i, size_t j) const { return att[i][j]; }
    std::vector<int> attackers_of(size_t j) const;

    std::string to_dot() const;
    std::string to_json() const;
};

Framework make_framework(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& edges);

/// Nodes of the strategy, edges per the attack definition.
Framework instantiate(const Strategy& s);

using NodeSet = std::set<int>;

bool set_attacks(const Framework& fw, const NodeSet& s, int node);
bool defends(const Framework& fw, const NodeSet& s, int node);
bool attack_free(const Framework& fw, const NodeSet& s);

/// F(S) = { a | S defends a }.
NodeSet characteristic(const Framework& fw, const NodeSet& s);

/// Least fixpoint of the characteristic function from the empty set.
NodeSet grounded(const Framework& fw);

constexpr size_t kDefaultMaxNodes = 24;

/// All complete extensions, by exhaustive subset enumeration with
/// attack-free pruning. Throws SizeGuardError above `max_nodes`.
std::vector<NodeSet> complete_extensions(const Framework& fw,
                                         size_t max_nodes = kDefaultMaxNodes);
std::vector<NodeSet> preferred_extensions(const Framework& fw,
                                          size_t max_nodes = kDefaultMaxNodes);
std::vector<NodeSet> stable_extensions(const Framework& fw,
                                       size_t max_nodes = kDefaultMaxNodes);

/// Checks, at fixpoint stage i: A in F^{i+1} iff every attacker of A is
/// countered by some Z in F^i with Z != A.
bool check_stagewise_defense(const Framework& fw, size_t i);
/// Number of iterations until the grounded fixpoint is reached.
size_t grounded_fixpoint_stage(const Framework& fw);

enum class Status { in, out, undec };
std::string status_text(Status s);

/// Indices of strategy members attacking the given item.
std::vector<int> attackers_of_vulnerability(const Strategy& s, const Vulnerability& v);
std::vector<int> attackers_of_argument(const Strategy& s, const Argument& a);

/// Status relative to one complete extension, given the item's attackers.
Status status_of(const Framework& inst, const NodeSet& e,
                 const std::vector<int>& item_attackers);

Status status_of_vulnerability(const Strategy& s, const Framework& inst, const NodeSet& e,
                               const Vulnerability& v);
Status status_of_argument(const Strategy& s, const Framework& inst, const NodeSet& e,
                          const Argument& a);
Status status_of_resolution(const Framework& inst, const NodeSet& e, int idx);

/// Classical conclusions of in-status arguments (default literals omitted).
std::set<Literal> output(const ArgumentSet& args, const Strategy& s, const Framework& inst,
                         const NodeSet& e);

bool entails(const ArgumentSet& args, const Strategy& s, const Literal& l, bool skeptical,
             size_t max_nodes = kDefaultMaxNodes);

}  // namespace delp

#endif

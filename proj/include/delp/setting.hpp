#ifndef DELP_SETTING_HPP
#define DELP_SETTING_HPP

#include "delp/af.hpp"

namespace delp {

/// One program plus one strategy, with the derived layers built once:
/// arguments, conflicts, and the instantiated framework.
struct Setting {
    Program program;
    ArgumentSet args;
    std::vector<Conflict> conflicts;
    Strategy strategy;
    Framework inst;

    /// `extra_leaves` extends the implicit knowledge base (e.g. a queried
    /// default literal not occurring in any rule body).
    static Setting build(Program p, Strategy s, const std::set<Literal>& extra_leaves = {},
                         const std::set<std::string>* vocabulary = nullptr);
    /// Builds with the generated full strategy.
    static Setting build_full(Program p, const std::set<Literal>& extra_leaves = {});
};

}  // namespace delp

#endif

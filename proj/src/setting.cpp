#include "delp/setting.hpp"

namespace delp {

Setting Setting::build(Program p, Strategy s, const std::set<Literal>& extra_leaves,
                       const std::set<std::string>* vocabulary) {
    Setting out;
    out.program = std::move(p);
    std::set<Literal> k = default_knowledge(out.program);
    k.insert(extra_leaves.begin(), extra_leaves.end());
    if (vocabulary) {
        // foreign classical literals in rule bodies belong to the knowledge base
        for (const auto& r : out.program.rules)
            for (const auto& l : r.body)
                if (!vocabulary->count(l.atom)) k.insert(l);
    }
    out.args = build_arguments(out.program, k, vocabulary);
    out.conflicts = find_conflicts(out.args);
    out.strategy = std::move(s);
    out.inst = instantiate(out.strategy);
    return out;
}

Setting Setting::build_full(Program p, const std::set<Literal>& extra_leaves) {
    Setting tmp = build(std::move(p), Strategy{}, extra_leaves);
    tmp.strategy = generate_full_strategy(tmp.conflicts).strategy;
    tmp.inst = instantiate(tmp.strategy);
    return tmp;
}

}  // namespace delp

#include "delp/mcs.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace delp {

namespace {
std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += " -> ";
        out += ids[i];
    }
    return out;
}
}  // namespace

CyclicSystemError::CyclicSystemError(std::vector<std::string> c)
    : std::runtime_error("cyclic multi-context system: " + join_ids(c)), cycle(std::move(c)) {}

Context make_context(std::string id, std::set<std::string> vocabulary, Program p, Strategy s) {
    for (const auto& r : p.rules)
        if (!vocabulary.count(r.head.atom))
            throw std::invalid_argument("context " + id + ": rule head " + r.head.text() +
                                        " is not in the vocabulary");
    Context c;
    c.id = std::move(id);
    c.setting = Setting::build(std::move(p), std::move(s), {}, &vocabulary);
    c.vocabulary = std::move(vocabulary);
    return c;
}

const Context* MultiContextSystem::by_id(const std::string& id) const {
    for (const auto& c : contexts)
        if (c.id == id) return &c;
    return nullptr;
}

const Context* MultiContextSystem::owner_of_atom(const std::string& atom) const {
    for (const auto& c : contexts)
        if (c.vocabulary.count(atom)) return &c;
    return nullptr;
}

MultiContextSystem make_mcs(std::vector<Context> contexts) {
    if (contexts.empty()) throw std::invalid_argument("a multi-context system is nonempty");
    MultiContextSystem mcs;
    mcs.contexts = std::move(contexts);
    std::set<std::string> seen;
    for (const auto& c : mcs.contexts) {
        for (const auto& a : c.vocabulary)
            if (!seen.insert(a).second)
                throw std::invalid_argument("vocabularies overlap on atom " + a);
    }
    for (const auto& c : mcs.contexts)
        for (const auto& a : c.setting.program.atoms())
            if (!seen.count(a))
                throw std::invalid_argument("atom " + a + " is owned by no context");
    return mcs;
}

std::optional<std::vector<std::string>> find_cycle(const MultiContextSystem& mcs) {
    // edge i -> j iff context i references a foreign literal owned by j
    size_t n = mcs.contexts.size();
    std::vector<std::vector<size_t>> adj(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& ci = mcs.contexts[i];
        for (const auto& r : ci.setting.program.rules)
            for (const auto& l : r.body) {
                if (ci.vocabulary.count(l.atom)) continue;
                for (size_t j = 0; j < n; ++j)
                    if (j != i && mcs.contexts[j].vocabulary.count(l.atom))
                        adj[i].push_back(j);
            }
    }
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<size_t> stack;
    std::optional<std::vector<std::string>> cycle;
    std::function<bool(size_t)> dfs = [&](size_t u) {
        state[u] = 1;
        stack.push_back(u);
        for (size_t v : adj[u]) {
            if (state[v] == 1) {
                std::vector<std::string> ids;
                auto it = std::find(stack.begin(), stack.end(), v);
                for (; it != stack.end(); ++it) ids.push_back(mcs.contexts[*it].id);
                ids.push_back(mcs.contexts[v].id);
                cycle = std::move(ids);
                return true;
            }
            if (state[v] == 0 && dfs(v)) return true;
        }
        stack.pop_back();
        state[u] = 2;
        return false;
    };
    for (size_t i = 0; i < n && !cycle; ++i)
        if (state[i] == 0) dfs(i);
    return cycle;
}

std::string WireQuery::to_json() const {
    nlohmann::json j;
    j["type"] = "query";
    j["target"] = target;
    j["literal"] = literal;
    j["mode"] = mode;
    j["cid"] = cid;
    return j.dump();
}

WireQuery WireQuery::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("type").get<std::string>() != "query")
        throw std::invalid_argument("wire: expected type=query");
    return {j.at("target").get<std::string>(), j.at("literal").get<std::string>(),
            j.at("mode").get<std::string>(), j.at("cid").get<std::string>()};
}

std::string WireAnswer::to_json() const {
    nlohmann::json j;
    j["type"] = "answer";
    j["cid"] = cid;
    j["success"] = success;
    if (!cause.empty()) j["cause"] = cause;
    if (!game.empty()) j["game"] = game;
    return j.dump();
}

WireAnswer WireAnswer::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("type").get<std::string>() != "answer")
        throw std::invalid_argument("wire: expected type=answer");
    WireAnswer a;
    a.cid = j.at("cid").get<std::string>();
    a.success = j.at("success").get<bool>();
    a.cause = j.value("cause", "");
    a.game = j.value("game", "");
    return a;
}

/// In-process network: queries pass through the wire format, get delivered
/// in a configurable order, and are served synchronously by the engine.
class SimTransport : public Transport {
public:
    SimTransport(McsEngine* engine, DeliveryOrder order, uint64_t seed)
        : engine_(engine), order_(order), seed_(seed) {}

    std::vector<WireAnswer> exchange(std::vector<WireQuery> queries) override {
        switch (order_) {
            case DeliveryOrder::fifo:
                break;
            case DeliveryOrder::lifo:
                std::reverse(queries.begin(), queries.end());
                break;
            case DeliveryOrder::shuffle: {
                std::mt19937_64 rng(seed_ + ++round_);
                std::shuffle(queries.begin(), queries.end(), rng);
                break;
            }
        }
        std::vector<WireAnswer> answers;
        for (const auto& q : queries) {
            if (engine_->timeouts_.count(q.target)) {
                WireAnswer a;
                a.cid = q.cid;
                a.success = false;
                a.cause = "timeout";
                answers.push_back(a);
                continue;
            }
            // round-trip through the wire encoding
            WireQuery delivered = WireQuery::from_json(q.to_json());
            WireAnswer a = engine_->serve(delivered);
            answers.push_back(WireAnswer::from_json(a.to_json()));
        }
        return answers;
    }

private:
    McsEngine* engine_;
    DeliveryOrder order_;
    uint64_t seed_;
    uint64_t round_ = 0;
};

McsEngine::McsEngine(MultiContextSystem mcs, DeliveryOrder order, uint64_t seed)
    : mcs_(std::move(mcs)) {
    if (auto cycle = find_cycle(mcs_)) throw CyclicSystemError(*cycle);
    transport_ = std::make_unique<SimTransport>(this, order, seed);
}

WireAnswer McsEngine::serve(const WireQuery& q) {
    WireAnswer a;
    a.cid = q.cid;
    const Context* ctx = mcs_.by_id(q.target);
    if (!ctx) {
        a.cause = "unknown-target";
        return a;
    }
    Literal l = parse_literal(q.literal);
    if (!ctx->vocabulary.count(l.atom)) {
        a.cause = "foreign-literal";
        return a;
    }
    GameResult r = prove_contextual(q.target, l, q.mode == "skeptical");
    a.success = r.success();
    if (r.tree) a.game = r.tree->to_json();
    return a;
}

GameResult McsEngine::prove_contextual(const std::string& ctx_id, const Literal& l,
                                       bool skeptical) {
    const Context* ctx = mcs_.by_id(ctx_id);
    if (!ctx) throw std::invalid_argument("unknown context " + ctx_id);
    if (!ctx->vocabulary.count(l.atom))
        throw std::invalid_argument("literal " + l.text() + " is foreign to context " + ctx_id);

    QueryFn qf = [&](const std::set<Literal>& foreigns, bool mover_is_pro) {
        bool sub_skeptical = mover_is_pro ? skeptical : !skeptical;
        std::vector<WireQuery> queries;
        std::vector<QueryOutcome> outcomes;
        uint64_t n = 0;
        for (const auto& f : foreigns) {
            Literal cl = f.classical_part();
            const Context* owner = mcs_.owner_of_atom(cl.atom);
            WireQuery q;
            q.target = owner ? owner->id : "?" + cl.atom;
            q.literal = cl.text();
            q.mode = sub_skeptical ? "skeptical" : "credulous";
            q.cid = ctx_id + "#" + std::to_string(++n);
            queries.push_back(std::move(q));
            QueryOutcome o;
            o.literal = cl;
            o.negated = f.def;
            o.success = false;
            outcomes.push_back(o);
        }
        auto answers = transport_->exchange(queries);
        for (size_t i = 0; i < queries.size(); ++i) {
            const WireAnswer* ans = nullptr;
            for (const auto& a : answers)
                if (a.cid == queries[i].cid) ans = &a;
            if (!ans) continue;
            if (ans->cause == "timeout") {
                outcomes[i].timeout = true;
                outcomes[i].success = false;
            } else {
                outcomes[i].success = outcomes[i].negated ? !ans->success : ans->success;
            }
        }
        return outcomes;
    };

    // a queried default literal may need its leaf added to the knowledge base
    if (l.def && ctx->setting.args.concluding(l).empty()) {
        Setting local = Setting::build(ctx->setting.program, ctx->setting.strategy, {l},
                                       &ctx->vocabulary);
        return prove_literal(local, l, skeptical, &qf);
    }
    return prove_literal(ctx->setting, l, skeptical, &qf);
}

GameResult McsEngine::prove_in_system(const Literal& l, bool skeptical) {
    const Context* owner = mcs_.owner_of_atom(l.atom);
    if (!owner) throw std::invalid_argument("no context owns atom " + l.atom);
    return prove_contextual(owner->id, l, skeptical);
}

std::string contextual_version_text(const ArgPtr& a, const std::set<std::string>& vocabulary) {
    if (a->deductive() && vocabulary.count(a->conclusion.atom)) {
        std::string inner;
        for (size_t i = 0; i < a->children.size(); ++i) {
            if (i) inner += ',';
            inner += contextual_version_text(a->children[i], vocabulary);
        }
        return "[" + inner + (inner.empty() ? "" : " ") +
               (a->rule->defeasible ? "=> " : "-> ") + a->conclusion.text() + "]";
    }
    // leaf, or a foreign-headed subtree collapsing into a foreign leaf
    return "[" + a->conclusion.text() + "]";
}

MultiContextSystem contextualize(
    const Program& p, const Strategy& s,
    const std::vector<std::pair<std::string, std::set<std::string>>>& partition) {
    for (const auto& atom : p.atoms()) {
        size_t owners = 0;
        for (const auto& [id, vocab] : partition) owners += vocab.count(atom);
        if (owners != 1)
            throw std::invalid_argument("atom " + atom + " is covered by " +
                                        std::to_string(owners) + " partition blocks");
    }
    std::vector<Context> contexts;
    for (const auto& [id, vocab] : partition) {
        Program pi;
        for (const auto& r : p.rules)
            if (vocab.count(r.head.atom)) pi.add(r);
        contexts.push_back(make_context(id, vocab, std::move(pi), Strategy{}));
    }
    // route each strategy member to the context owning its conflict
    for (const auto& r : s.resolutions) {
        const std::string& atom = r.conflict.first->conclusion.atom;
        Context* owner = nullptr;
        for (auto& c : contexts)
            if (c.vocabulary.count(atom)) owner = &c;
        if (!owner) throw std::invalid_argument("conflict over unowned atom " + atom);
        ArgPtr ca = owner->setting.args.find(
            contextual_version_text(r.conflict.first, owner->vocabulary));
        ArgPtr cb = owner->setting.args.find(
            contextual_version_text(r.conflict.second, owner->vocabulary));
        if (!ca || !cb)
            throw std::invalid_argument("resolution " + r.text() +
                                        " has no contextual counterpart in " + owner->id);
        const Conflict* cc = nullptr;
        for (const auto& c : owner->setting.conflicts)
            if ((c.first == ca && c.second == cb) || (c.first == cb && c.second == ca)) cc = &c;
        if (!cc)
            throw std::invalid_argument("contextual arguments of " + r.text() +
                                        " are not in conflict in " + owner->id);
        auto cv = cc->vuls();
        if (!cv.count(r.vulnerability))
            throw std::invalid_argument("vulnerability " + r.vulnerability.text() +
                                        " of " + r.text() + " is not local to " + owner->id);
        owner->setting.strategy.add(make_resolution(*cc, r.vulnerability));
    }
    for (auto& c : contexts) c.setting.inst = instantiate(c.setting.strategy);
    return make_mcs(std::move(contexts));
}

std::pair<Program, Strategy> merge_monolithic(const MultiContextSystem& mcs) {
    Program p;
    for (const auto& c : mcs.contexts)
        for (const auto& r : c.setting.program.rules) p.add(r);
    Setting merged = Setting::build(p, Strategy{});
    Strategy s;
    for (const auto& c : mcs.contexts) {
        for (const auto& r : c.setting.strategy.resolutions) {
            // all monolithic arguments whose contextual version matches
            std::vector<ArgPtr> firsts, seconds;
            for (const auto& ma : merged.args.args) {
                std::string cv = contextual_version_text(ma, c.vocabulary);
                if (cv == r.conflict.first->text) firsts.push_back(ma);
                if (cv == r.conflict.second->text) seconds.push_back(ma);
            }
            for (const auto& ma : firsts) {
                for (const auto& mb : seconds) {
                    for (const auto& mc : merged.conflicts) {
                        if (!((mc.first == ma && mc.second == mb) ||
                              (mc.first == mb && mc.second == ma)))
                            continue;
                        if (mc.vuls().count(r.vulnerability))
                            s.add(make_resolution(mc, r.vulnerability));
                    }
                }
            }
        }
    }
    return {std::move(p), std::move(s)};
}

MultiContextSystem load_mcs_config(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config " + config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("MCS config: ") + e.what());
    }
    auto base = std::filesystem::path(config_path).parent_path();
    auto slurp = [&](const std::string& rel) {
        auto path = base / rel;
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot open " + path.string());
        std::stringstream b;
        b << f.rdbuf();
        return b.str();
    };
    std::vector<Context> contexts;
    for (const auto& e : doc.at("contexts")) {
        std::string id = e.at("id").get<std::string>();
        std::set<std::string> vocab;
        for (const auto& v : e.at("vocabulary")) vocab.insert(v.get<std::string>());
        Program p = parse_program(slurp(e.at("program").get<std::string>()));
        Context c = make_context(id, vocab, std::move(p), Strategy{});
        std::string strat = e.at("strategy").get<std::string>();
        if (strat == "full") {
            c.setting.strategy = generate_full_strategy(c.setting.conflicts).strategy;
        } else {
            c.setting.strategy =
                load_strategy_json(slurp(strat), c.setting.args, c.setting.conflicts);
        }
        c.setting.inst = instantiate(c.setting.strategy);
        contexts.push_back(std::move(c));
    }
    return make_mcs(std::move(contexts));
}

std::string serialize_context_program(const Context& c, const MultiContextSystem& mcs) {
    std::string out;
    for (const auto& r : c.setting.program.rules) {
        out += r.head.text();
        out += r.defeasible ? " -< " : " <- ";
        for (size_t i = 0; i < r.body.size(); ++i) {
            if (i) out += ", ";
            const Literal& l = r.body[i];
            if (!c.vocabulary.count(l.atom)) {
                const Context* owner = mcs.owner_of_atom(l.atom);
                if (l.def) out += '~';
                if (owner) out += owner->id + ":";
                out += (l.neg ? "-" : "") + l.atom;
                continue;
            }
            out += l.text();
        }
        out += ".\n";
    }
    return out;
}

}  // namespace delp

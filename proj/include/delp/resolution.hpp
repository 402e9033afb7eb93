#ifndef DELP_RESOLUTION_HPP
#define DELP_RESOLUTION_HPP

#include <string>
#include <vector>

#include "delp/arguments.hpp"

namespace delp {

/// "Resolve this conflict by defeating this vulnerability."
struct ConflictResolution {
    Conflict conflict;
    Vulnerability vulnerability;

    std::string text() const {
        return "(" + conflict.text() + ", " + vulnerability.text() + ")";
    }
    friend bool operator==(const ConflictResolution& a, const ConflictResolution& b) {
        return a.text() == b.text();
    }
    friend bool operator<(const ConflictResolution& a, const ConflictResolution& b) {
        return a.text() < b.text();
    }
};

ConflictResolution make_resolution(Conflict c, Vulnerability v);

/// A finite chosen set of conflict resolutions, sorted and deduplicated.
struct Strategy {
    std::vector<ConflictResolution> resolutions;

    void add(ConflictResolution r);
    size_t size() const { return resolutions.size(); }
};

std::set<Vulnerability> con_vuls(const Conflict& c);

const Conflict& con(const ConflictResolution& r);
const Vulnerability& res(const ConflictResolution& r);

/// (Vuls(A)\{v}) u (Vuls(B)\{v}) u (Vuls(A) n Vuls(B) n {v}).
std::set<Vulnerability> vuls_of_resolution(const ConflictResolution& r);

bool attacks_vulnerability(const ConflictResolution& r, const Vulnerability& v);
bool attacks_argument(const ConflictResolution& r, const Argument& a);
/// The two-clause attack definition, evaluated literally.
bool attacks_resolution(const ConflictResolution& r, const ConflictResolution& r2);
/// The characterization res(r) in vuls(r2); must agree with the above.
bool attacks_resolution_characterized(const ConflictResolution& r, const ConflictResolution& r2);

bool is_total(const Strategy& s, const std::vector<Conflict>& conflicts);

struct FullStrategyResult {
    Strategy strategy;
    std::vector<Conflict> unresolvable;  // conflicts with no vulnerability at all
};
FullStrategyResult generate_full_strategy(const std::vector<Conflict>& conflicts);

/// Loads the strategy JSON document, validating every entry against the
/// built arguments and conflicts of the program.
Strategy load_strategy_json(const std::string& json_text, const ArgumentSet& args,
                            const std::vector<Conflict>& conflicts);
std::string strategy_to_json(const Strategy& s);

}  // namespace delp

#endif

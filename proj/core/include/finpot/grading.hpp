#pragma once

#include <json.hpp>

#include <vector>

#include "finpot/answer.hpp"

namespace finpot {

// Answer-matching knobs. The defaults are calibrated so published worked
// examples grade the way they are presented; all four are config-exposed and
// the reconstruction is flagged in the README.
struct MatchConfig {
    double rel_tol = 5e-3;
    double abs_tol = 1e-6;
    bool percent_scale_equivalence = true;
    bool gold_precision_rounding = true;

    nlohmann::json to_json() const;
    static MatchConfig from_json(const nlohmann::json& j);
};

// Numeric pair: |p - g| <= max(abs_tol, rel_tol*|g|) after optionally
// rounding p (half away from zero) to the gold literal's printed decimals;
// with percent_scale_equivalence, p/100 and p*100 are also accepted under
// the same rule. Both-text non-numeric pairs compare case-insensitively
// with whitespace collapsed. Anything unparseable is false, never a throw.
bool compare_answers(const Answer& predicted, const Answer& gold, const MatchConfig& cfg);

// 100 * matched / total, rounded to 2 decimals. Throws AggregationError on
// an empty list.
double accuracy(const std::vector<bool>& matches);

// Half-away-from-zero rounding to `decimals` places; passes v through when
// decimals < 0 or the scaled value would overflow.
double round_to_decimals(double v, int decimals);

}  // namespace finpot

#pragma once

#include "prefixcomp/core.hpp"

namespace prefixcomp {

/// Outcome of a one-on-one competition of profile a against profile b:
/// wins/losses/ties partition the alphabet; advantage = P(wins) - P(losses).
struct CompetitionResult {
    SymbolSet wins;
    SymbolSet losses;
    SymbolSet ties;
    Rational p_win;
    Rational p_loss;
    Rational advantage;
};

enum class Dominance { Strict, Weak, Dominated };

CompetitionResult compete(const Source& s, const LengthProfile& a, const LengthProfile& b);

Dominance dominates(const CompetitionResult& r);

}  // namespace prefixcomp

#include "prefixcomp/competition.hpp"

namespace prefixcomp {

CompetitionResult compete(const Source& s, const LengthProfile& a, const LengthProfile& b) {
    if (s.size() != a.size() || s.size() != b.size())
        throw DomainError(Errc::SizeMismatch, "source and profile sizes differ");
    CompetitionResult r{};
    r.p_win = r.p_loss = Rational(0);
    for (int i = 0; i < s.size(); ++i) {
        if (a.length(i) < b.length(i)) {
            r.wins.add(i);
            r.p_win += s.probability(i);
        } else if (a.length(i) > b.length(i)) {
            r.losses.add(i);
            r.p_loss += s.probability(i);
        } else {
            r.ties.add(i);
        }
    }
    r.advantage = r.p_win - r.p_loss;
    return r;
}

Dominance dominates(const CompetitionResult& r) {
    if (r.advantage > 0) return Dominance::Strict;
    if (r.advantage == 0) return Dominance::Weak;
    return Dominance::Dominated;
}

}  // namespace prefixcomp

#include "prefixcomp/errors.hpp"
#include "prefixcomp/verdict.hpp"

namespace prefixcomp {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::NonPositiveProbability: return "NonPositiveProbability";
        case Errc::BadTotal: return "BadTotal";
        case Errc::TooLarge: return "TooLarge";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::BadSubset: return "BadSubset";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::KraftOrderViolated: return "KraftOrderViolated";
        case Errc::NotOptimalProfile: return "NotOptimalProfile";
        case Errc::BadEpsilon: return "BadEpsilon";
        case Errc::WrongSize: return "WrongSize";
        case Errc::NotSorted: return "NotSorted";
        case Errc::BadConfig: return "BadConfig";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

const char* optimality_status_name(OptimalityStatus s) {
    switch (s) {
        case OptimalityStatus::Optimal: return "optimal";
        case OptimalityStatus::NotOptimal: return "not-optimal";
        case OptimalityStatus::Unknown: return "unknown";
    }
    return "unknown";
}

const char* verdict_method_name(VerdictMethod m) {
    switch (m) {
        case VerdictMethod::SubsetExact: return "subset";
        case VerdictMethod::LeafCondition: return "leaf";
        case VerdictMethod::BruteForce: return "brute";
        case VerdictMethod::Hexahedron: return "hexahedron";
        case VerdictMethod::SmallN: return "small-n";
    }
    return "unknown";
}

std::optional<VerdictMethod> verdict_method_from_name(const std::string& name) {
    for (VerdictMethod m : {VerdictMethod::SubsetExact, VerdictMethod::LeafCondition,
                            VerdictMethod::BruteForce, VerdictMethod::Hexahedron,
                            VerdictMethod::SmallN})
        if (name == verdict_method_name(m)) return m;
    return std::nullopt;
}

}  // namespace prefixcomp

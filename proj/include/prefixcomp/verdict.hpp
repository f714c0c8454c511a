#pragma once

#include <optional>
#include <string>
#include <variant>

#include "prefixcomp/core.hpp"

namespace prefixcomp {

/// Machine-checkable evidence of non-optimality.
struct SubsetPairCertificate {
    SymbolSet u;  // K(u) < K(v), P(u) > P(v)
    SymbolSet v;
};

struct DominatingProfileCertificate {
    LengthProfile profile;  // positive advantage over the profile under test
};

struct LeafTripleCertificate {
    int y;       // tree node id
    int y_sib;   // sibling node id
    int z;       // symbol index of a leaf under y with P(z) < P(y) - P(y_sib)
};

using Certificate =
    std::variant<SubsetPairCertificate, DominatingProfileCertificate, LeafTripleCertificate>;

enum class OptimalityStatus { Optimal, NotOptimal, Unknown };

enum class VerdictMethod { SubsetExact, LeafCondition, BruteForce, Hexahedron, SmallN };

struct OptimalityVerdict {
    OptimalityStatus status = OptimalityStatus::Unknown;
    std::optional<Certificate> certificate;
    VerdictMethod method = VerdictMethod::SubsetExact;
};

const char* optimality_status_name(OptimalityStatus s);
const char* verdict_method_name(VerdictMethod m);
std::optional<VerdictMethod> verdict_method_from_name(const std::string& name);

}  // namespace prefixcomp

#include "prefixcomp/coding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "prefixcomp/oracle.hpp"

namespace prefixcomp {

HuffmanResult huffman(const Source& s, TieBreak) {
    HuffmanTree tree = build_huffman_tree(s.probabilities());
    return {tree, LengthProfile(tree.leaf_depths(s.size()))};
}

namespace {

struct MergeNode {
    Rational prob;
    std::vector<std::pair<int, int>> symbol_depths;  // sorted by symbol
};

std::string state_key(const std::vector<MergeNode>& nodes) {
    std::vector<std::string> parts;
    parts.reserve(nodes.size());
    for (const auto& nd : nodes) {
        std::ostringstream os;
        os << format_rational(nd.prob);
        for (auto [sym, d] : nd.symbol_depths) os << ';' << sym << ':' << d;
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (auto& p : parts) key += p + '|';
    return key;
}

void explore_merges(std::vector<MergeNode> nodes, std::set<LengthProfile>& out,
                    std::set<std::string>& visited) {
    if (nodes.size() == 1) {
        std::vector<int> lens(nodes[0].symbol_depths.size());
        for (auto [sym, d] : nodes[0].symbol_depths) lens[sym] = d;
        out.insert(LengthProfile(std::move(lens)));
        return;
    }
    if (!visited.insert(state_key(nodes)).second) return;

    std::vector<Rational> sorted_probs;
    sorted_probs.reserve(nodes.size());
    for (const auto& nd : nodes) sorted_probs.push_back(nd.prob);
    std::sort(sorted_probs.begin(), sorted_probs.end());
    const Rational& lo = sorted_probs[0];
    const Rational& hi = sorted_probs[1];

    for (size_t i = 0; i < nodes.size(); ++i) {
        for (size_t j = i + 1; j < nodes.size(); ++j) {
            const Rational& a = std::min(nodes[i].prob, nodes[j].prob);
            const Rational& b = std::max(nodes[i].prob, nodes[j].prob);
            if (a != lo || b != hi) continue;
            std::vector<MergeNode> next;
            next.reserve(nodes.size() - 1);
            MergeNode merged{nodes[i].prob + nodes[j].prob, {}};
            for (size_t k = 0; k < nodes.size(); ++k) {
                if (k == i || k == j) {
                    for (auto [sym, d] : nodes[k].symbol_depths)
                        merged.symbol_depths.emplace_back(sym, d + 1);
                } else {
                    next.push_back(nodes[k]);
                }
            }
            std::sort(merged.symbol_depths.begin(), merged.symbol_depths.end());
            next.push_back(std::move(merged));
            explore_merges(std::move(next), out, visited);
        }
    }
}

}  // namespace

std::set<LengthProfile> huffman_profiles_all(const Source& s, int max_n) {
    if (s.size() > max_n)
        throw DomainError(Errc::TooLarge, "tie enumeration guarded at n <= " +
                                              std::to_string(max_n));
    std::vector<MergeNode> nodes;
    for (int i = 0; i < s.size(); ++i)
        nodes.push_back({s.probability(i), {{i, 0}}});
    std::set<LengthProfile> out;
    std::set<std::string> visited;
    explore_merges(std::move(nodes), out, visited);
    return out;
}

std::set<LengthProfile> all_optimal_profiles(const Source& s, int max_n) {
    if (s.size() > max_n)
        throw DomainError(Errc::TooLarge, "profile enumeration guarded at n <= " +
                                              std::to_string(max_n));
    std::set<LengthProfile> best;
    Rational best_len(-1);
    for_each_complete_profile(s.size(), s.size() - 1, [&](const LengthProfile& p) {
        Rational len = expected_length(s, p);
        if (best_len < 0 || len < best_len) {
            best_len = len;
            best.clear();
        }
        if (len == best_len) best.insert(p);
    });
    return best;
}

LengthProfile shannon_fano(const Source& s) {
    std::vector<int> lens;
    lens.reserve(s.size());
    for (const auto& p : s.probabilities()) {
        int m = 0;
        Rational w(1);
        while (w > p) {
            w /= 2;
            ++m;
        }
        lens.push_back(m);
    }
    return LengthProfile(std::move(lens));
}

Rational expected_length(const Source& s, const LengthProfile& p) {
    if (s.size() != p.size())
        throw DomainError(Errc::SizeMismatch, "source and profile sizes differ");
    Rational total(0);
    for (int i = 0; i < s.size(); ++i) total += p.length(i) * s.probability(i);
    return total;
}

bool is_complete(const LengthProfile& p) { return kraft_sum(p) == 1; }

HuffmanTree canonical_tree(const Source& s, const LengthProfile& p) {
    if (s.size() != p.size())
        throw DomainError(Errc::SizeMismatch, "source and profile sizes differ");
    const int n = s.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.length(a) < p.length(b); });

    HuffmanTree tree;
    tree.nodes.push_back({Rational(0), Rational(0), 0, -1, -1, n == 1 ? order[0] : -1});
    tree.root = 0;
    if (n == 1) {
        tree.nodes[0].prob = tree.nodes[0].min_leaf = s.probability(order[0]);
        return tree;
    }

    std::uint64_t code = 0;
    int prev_len = p.length(order[0]);
    for (int idx = 0; idx < n; ++idx) {
        int sym = order[idx];
        int len = p.length(sym);
        if (idx > 0) code = (code + 1) << (len - prev_len);
        prev_len = len;
        int node = tree.root;
        for (int bit = len - 1; bit >= 0; --bit) {
            int& slot = ((code >> bit) & 1) ? tree.nodes[node].right : tree.nodes[node].left;
            if (slot < 0) {
                slot = tree.size();
                tree.nodes.push_back({Rational(0), Rational(0), len - bit, -1, -1, -1});
            }
            node = slot;
        }
        tree.nodes[node].symbol = sym;
    }

    // Children always carry larger indices here, so a reverse pass folds
    // probabilities and minimum leaf probabilities upward.
    for (int i = tree.size() - 1; i >= 0; --i) {
        auto& nd = tree.nodes[i];
        if (nd.is_leaf()) {
            nd.prob = nd.min_leaf = s.probability(nd.symbol);
            continue;
        }
        bool first = true;
        for (int child : {nd.left, nd.right}) {
            if (child < 0) continue;
            nd.prob += tree.nodes[child].prob;
            if (first || tree.nodes[child].min_leaf < nd.min_leaf)
                nd.min_leaf = tree.nodes[child].min_leaf;
            first = false;
        }
    }
    return tree;
}

bool is_monotone(const Source& s, const LengthProfile& p) {
    HuffmanTree tree = canonical_tree(s, p);
    int max_depth = 0;
    for (const auto& nd : tree.nodes) max_depth = std::max(max_depth, nd.depth);
    std::vector<Rational> min_at(max_depth + 1, Rational(2));
    std::vector<Rational> max_at(max_depth + 1, Rational(-1));
    for (const auto& nd : tree.nodes) {
        min_at[nd.depth] = std::min(min_at[nd.depth], nd.prob);
        max_at[nd.depth] = std::max(max_at[nd.depth], nd.prob);
    }
    Rational deeper_max(-1);
    for (int d = max_depth; d >= 0; --d) {
        if (min_at[d] < deeper_max) return false;
        deeper_max = std::max(deeper_max, max_at[d]);
    }
    return true;
}

bool is_strongly_monotone(const Source& s, const LengthProfile& p, int max_n) {
    if (s.size() != p.size())
        throw DomainError(Errc::SizeMismatch, "source and profile sizes differ");
    const int n = s.size();
    if (n > max_n)
        throw DomainError(Errc::TooLarge, "subset enumeration guarded at n <= " +
                                              std::to_string(max_n));
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<Rational> kraft(total), prob(total);
    // min and max subset probability per power-of-two Kraft exponent
    std::map<int, std::pair<Rational, Rational>> buckets;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        int low = __builtin_ctzll(mask);
        std::uint64_t rest = mask & (mask - 1);
        kraft[mask] = kraft[rest] + kraft_weight(p.length(low));
        prob[mask] = prob[rest] + s.probability(low);
        if (!is_power_of_half(kraft[mask])) continue;
        int exp = static_cast<int>(boost::multiprecision::msb(denominator(kraft[mask])));
        auto it = buckets.find(exp);
        if (it == buckets.end()) {
            buckets.emplace(exp, std::make_pair(prob[mask], prob[mask]));
        } else {
            it->second.first = std::min(it->second.first, prob[mask]);
            it->second.second = std::max(it->second.second, prob[mask]);
        }
    }
    Rational running_min(2);
    bool any = false;
    for (const auto& [exp, mm] : buckets) {  // ascending exponent = descending K
        if (any && running_min < mm.second) return false;
        running_min = std::min(running_min, mm.first);
        any = true;
    }
    return true;
}

}  // namespace prefixcomp

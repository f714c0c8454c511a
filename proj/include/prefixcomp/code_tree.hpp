#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

namespace prefixcomp {

/// Binary code tree templated on the probability scalar so the exact path
/// (Rational) and the Monte Carlo path (double) share one construction.
template <class T>
struct CodeTree {
    struct Node {
        T prob{};
        T min_leaf{};  // smallest leaf probability in this subtree
        int depth = 0;
        int left = -1;
        int right = -1;
        int symbol = -1;  // >= 0 for leaves
        bool is_leaf() const { return symbol >= 0; }
    };

    std::vector<Node> nodes;
    int root = -1;
    int size() const { return static_cast<int>(nodes.size()); }

    void assign_depths() {
        // Parents always follow children in creation order, so a reverse
        // pass propagates depths top-down.
        nodes[root].depth = 0;
        for (int i = root; i >= 0; --i) {
            const auto& nd = nodes[i];
            if (nd.left >= 0) nodes[nd.left].depth = nd.depth + 1;
            if (nd.right >= 0) nodes[nd.right].depth = nd.depth + 1;
        }
    }

    std::vector<int> leaf_depths(int n) const {
        std::vector<int> lens(n, 0);
        for (const auto& nd : nodes)
            if (nd.is_leaf()) lens[nd.symbol] = nd.depth;
        return lens;
    }
};

/// Canonical Huffman construction: the merge queue orders candidates by
/// (probability ascending, creation index ascending); leaves are created
/// first, in symbol order.
template <class T>
CodeTree<T> build_huffman_tree(const std::vector<T>& probs) {
    CodeTree<T> tree;
    const int n = static_cast<int>(probs.size());
    tree.nodes.reserve(2 * n - 1);
    for (int i = 0; i < n; ++i)
        tree.nodes.push_back({probs[i], probs[i], 0, -1, -1, i});
    if (n == 1) {
        tree.root = 0;
        return tree;
    }

    struct Entry {
        T prob;
        int id;
    };
    auto later = [](const Entry& a, const Entry& b) {
        return a.prob > b.prob || (a.prob == b.prob && a.id > b.id);
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
    for (int i = 0; i < n; ++i) queue.push({probs[i], i});

    while (queue.size() > 1) {
        Entry a = queue.top();
        queue.pop();
        Entry b = queue.top();
        queue.pop();
        int id = tree.size();
        tree.nodes.push_back({a.prob + b.prob,
                              std::min(tree.nodes[a.id].min_leaf, tree.nodes[b.id].min_leaf),
                              0, a.id, b.id, -1});
        queue.push({tree.nodes.back().prob, id});
    }
    tree.root = tree.size() - 1;
    tree.assign_depths();
    return tree;
}

struct LeafViolation {
    int y = -1;      // node whose subtree holds the cheap leaf
    int y_sib = -1;  // its sibling
    int z = -1;      // symbol of a leaf under y with P(z) < P(y) - P(y_sib)
};

template <class T>
int min_leaf_symbol(const CodeTree<T>& tree, int node) {
    while (!tree.nodes[node].is_leaf()) {
        const auto& nd = tree.nodes[node];
        node = (nd.right >= 0 &&
                tree.nodes[nd.right].min_leaf < tree.nodes[nd.left].min_leaf)
                   ? nd.right
                   : nd.left;
    }
    return tree.nodes[node].symbol;
}

/// Sufficient non-optimality test at the root sibling pair (y, y'): a leaf z
/// under y with P(z) < P(y) - P(y'). Deeper sibling pairs would give a valid
/// (and strictly stronger) test as well, but the reference survival curve
/// this library reproduces is defined by the root pair alone, so the scan
/// stops there.
template <class T>
std::optional<LeafViolation> scan_leaf_condition(const CodeTree<T>& tree) {
    const auto& nd = tree.nodes[tree.root];
    if (nd.left < 0) return std::nullopt;
    for (auto [y, sib] : {std::pair{nd.left, nd.right}, std::pair{nd.right, nd.left}}) {
        if (tree.nodes[y].min_leaf + tree.nodes[sib].prob < tree.nodes[y].prob)
            return LeafViolation{y, sib, min_leaf_symbol(tree, y)};
    }
    return std::nullopt;
}

}  // namespace prefixcomp

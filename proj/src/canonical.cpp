#include "tap/canonical.hpp"

#include <algorithm>

namespace tap {

std::vector<CanonicalCode> subtree_codes(const DecoratedTree& t) {
    std::vector<CanonicalCode> codes(t.nodes.size());

    // Arena order does not put parents before children once moves have
    // rebuilt a tree, so walk from the root and process in reverse.
    std::vector<std::uint32_t> order;
    order.reserve(t.nodes.size());
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::uint32_t c : t.nodes[order[i]].children) {
            order.push_back(c);
        }
    }
    std::reverse(order.begin(), order.end());

    for (std::uint32_t v : order) {
        std::vector<const CanonicalCode*> child_codes;
        child_codes.reserve(t.nodes[v].children.size());
        for (std::uint32_t c : t.nodes[v].children) {
            child_codes.push_back(&codes[c]);
        }
        std::sort(child_codes.begin(), child_codes.end(),
                  [](const CanonicalCode* a, const CanonicalCode* b) { return *a < *b; });
        CanonicalCode code = symbol_token(t.nodes[v].type);
        code += '(';
        for (const CanonicalCode* c : child_codes) {
            code += *c;
        }
        code += ')';
        codes[v] = std::move(code);
    }
    return codes;
}

CanonicalCode canonical_code(const DecoratedTree& t) {
    if (t.empty()) {
        return "";
    }
    return subtree_codes(t)[0];
}

std::vector<std::uint32_t> canonical_preorder(const DecoratedTree& t) {
    std::vector<CanonicalCode> codes = subtree_codes(t);
    std::vector<std::uint32_t> position(t.nodes.size(), 0);
    std::uint32_t next = 0;

    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        position[v] = next++;
        std::vector<std::uint32_t> children = t.nodes[v].children;
        std::sort(children.begin(), children.end(), [&](std::uint32_t a, std::uint32_t b) {
            return codes[a] != codes[b] ? codes[a] < codes[b] : a < b;
        });
        // Push in reverse so the smallest code is visited first.
        for (auto it = children.rbegin(); it != children.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    return position;
}

bool isomorphic(const DecoratedTree& a, const DecoratedTree& b) {
    return canonical_code(a) == canonical_code(b);
}

} // namespace tap

#pragma once

#include <cstddef>
#include <vector>

namespace jt::detail {

struct SccResult {
    std::vector<int> component; // per node
    std::vector<bool> cyclic;   // per component: size > 1 or a self-loop
    int count = 0;
};

/// Tarjan's algorithm, iterative.
inline SccResult strongly_connected(const std::vector<std::vector<int>>& adj)
{
    const int n = static_cast<int>(adj.size());
    SccResult out;
    out.component.assign(n, -1);
    std::vector<int> index(n, -1);
    std::vector<int> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> frames; // node, next child
    int counter = 0;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child < adj[v].size()) {
                const int w = adj[v][child++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const int done = v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            if (low[done] != index[done])
                continue;
            const int id = out.count++;
            std::size_t members = 0;
            int w = -1;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                out.component[w] = id;
                ++members;
            } while (w != done);
            out.cyclic.push_back(members > 1);
        }
    }
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (w == v)
                out.cyclic[out.component[v]] = true;
    return out;
}

inline bool has_cycle(const std::vector<std::vector<int>>& adj)
{
    const SccResult scc = strongly_connected(adj);
    for (bool c : scc.cyclic)
        if (c)
            return true;
    return false;
}

} // namespace jt::detail

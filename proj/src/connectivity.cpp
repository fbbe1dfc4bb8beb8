#include "onep/connectivity.hpp"

#include <algorithm>
#include <queue>

#include "onep/error.hpp"

namespace onep {

namespace {

// Unit-capacity flow on the split graph: vertex v becomes v_in = 2v, v_out = 2v+1.
class SplitFlow {
public:
    SplitFlow(const SimpleGraph& g, VertexId s, VertexId t) : s_(s), t_(t) {
        const std::size_t n = g.order();
        head_.assign(2 * n, -1);
        for (VertexId v = 0; v < n; ++v) {
            add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? 2 * n : 1);
            for (VertexId w : g.neighbors(v)) add_arc(2 * v + 1, 2 * w, 2 * n);
        }
    }

    std::size_t run(std::size_t limit) {
        std::size_t flow = 0;
        while (flow < limit && augment()) ++flow;
        return flow;
    }

    // Vertices whose in-copy is reachable but out-copy is not, after a maximum flow.
    std::vector<VertexId> cut() {
        const auto seen = reachable();
        std::vector<VertexId> out;
        for (VertexId v = 0; 2 * v < seen.size(); ++v) {
            if (seen[2 * v] && !seen[2 * v + 1]) out.push_back(v);
        }
        return out;
    }

private:
    struct Arc {
        int to;
        int next;
        std::size_t cap;
    };

    void add_arc(int a, int b, std::size_t cap) {
        arcs_.push_back({b, head_[a], cap});
        head_[a] = static_cast<int>(arcs_.size() - 1);
        arcs_.push_back({a, head_[b], 0});
        head_[b] = static_cast<int>(arcs_.size() - 1);
    }

    std::vector<char> reachable() const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(static_cast<int>(2 * s_ + 1));
        seen[2 * s_ + 1] = 1;
        while (!q.empty()) {
            const int a = q.front();
            q.pop();
            for (int i = head_[a]; i != -1; i = arcs_[i].next) {
                if (arcs_[i].cap > 0 && !seen[arcs_[i].to]) {
                    seen[arcs_[i].to] = 1;
                    q.push(arcs_[i].to);
                }
            }
        }
        return seen;
    }

    bool augment() {
        const int src = static_cast<int>(2 * s_ + 1);
        const int dst = static_cast<int>(2 * t_);
        std::vector<int> via(head_.size(), -1);
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(src);
        seen[src] = 1;
        while (!q.empty() && !seen[dst]) {
            const int a = q.front();
            q.pop();
            for (int i = head_[a]; i != -1; i = arcs_[i].next) {
                const int b = arcs_[i].to;
                if (arcs_[i].cap > 0 && !seen[b]) {
                    seen[b] = 1;
                    via[b] = i;
                    q.push(b);
                }
            }
        }
        if (!seen[dst]) return false;
        for (int b = dst; b != src;) {
            const int i = via[b];
            --arcs_[i].cap;
            ++arcs_[i ^ 1].cap;
            b = arcs_[i ^ 1].to;
        }
        return true;
    }

    VertexId s_;
    VertexId t_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

struct Best {
    std::size_t value;
    VertexId s = kNone;
    VertexId t = kNone;
};

Best search(const SimpleGraph& g) {
    const std::size_t n = g.order();
    if (n < 2) return {0};
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
    if (g.is_complete()) return {n - 1};

    VertexId v = 0;
    for (VertexId w = 1; w < n; ++w) {
        if (g.degree(w) < g.degree(v)) v = w;
    }
    Best best{g.degree(v)};
    auto consider = [&](VertexId a, VertexId b) {
        const std::size_t k = local_connectivity(g, a, b, best.value);
        if (k < best.value || best.s == kNone) best = {std::min(k, best.value), a, b};
    };
    for (VertexId w = 0; w < n; ++w) {
        if (w != v && !g.adjacent(v, w)) consider(v, w);
    }
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (!g.adjacent(nb[i], nb[j])) consider(nb[i], nb[j]);
        }
    }
    return best;
}

}  // namespace

std::size_t local_connectivity(const SimpleGraph& g, VertexId s, VertexId t, std::size_t limit) {
    SplitFlow flow(g, s, t);
    return flow.run(limit);
}

std::vector<VertexId> minimum_separator(const SimpleGraph& g, VertexId s, VertexId t) {
    SplitFlow flow(g, s, t);
    flow.run(static_cast<std::size_t>(-1));
    return flow.cut();
}

std::size_t vertex_connectivity(const SimpleGraph& g) { return search(g).value; }

std::vector<VertexId> minimum_vertex_cut(const SimpleGraph& g) {
    const Best b = search(g);
    if (b.s == kNone) return {};
    return minimum_separator(g, b.s, b.t);
}

}  // namespace onep

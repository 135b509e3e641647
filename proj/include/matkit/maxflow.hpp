#ifndef MATKIT_MAXFLOW_HPP
#define MATKIT_MAXFLOW_HPP

#include <limits>
#include <queue>
#include <vector>

namespace matkit {

// Dinic max-flow with integer capacities. Small and exact; all uses in this
// project are desk scale.
class MaxFlow {
public:
    static constexpr int INF = std::numeric_limits<int>::max() / 2;

    explicit MaxFlow(int n) : head_(n, -1) {}

    void add_edge(int u, int v, int cap) {
        es_.push_back({v, head_[u], cap});
        head_[u] = int(es_.size()) - 1;
        es_.push_back({u, head_[v], 0});
        head_[v] = int(es_.size()) - 1;
    }

    int run(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            int f;
            while ((f = dfs(s, t, INF)) > 0) flow += f;
        }
        return flow;
    }

    // After run(): vertices reachable from s in the residual graph.
    std::vector<bool> min_cut_side(int s) const {
        std::vector<bool> vis(head_.size(), false);
        std::vector<int> q{s};
        vis[s] = true;
        while (!q.empty()) {
            int u = q.back();
            q.pop_back();
            for (int i = head_[u]; i >= 0; i = es_[i].next)
                if (es_[i].cap > 0 && !vis[es_[i].to]) {
                    vis[es_[i].to] = true;
                    q.push_back(es_[i].to);
                }
        }
        return vis;
    }

private:
    struct E {
        int to, next, cap;
    };
    std::vector<int> head_, level_, iter_;
    std::vector<E> es_;

    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int i = head_[u]; i >= 0; i = es_[i].next)
                if (es_[i].cap > 0 && level_[es_[i].to] < 0) {
                    level_[es_[i].to] = level_[u] + 1;
                    q.push(es_[i].to);
                }
        }
        return level_[t] >= 0;
    }

    int dfs(int u, int t, int f) {
        if (u == t) return f;
        for (int& i = iter_[u]; i >= 0; i = es_[i].next) {
            E& e = es_[i];
            if (e.cap > 0 && level_[e.to] == level_[u] + 1) {
                int d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    es_[i ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }
};

} // namespace matkit

#endif

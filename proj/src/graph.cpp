#include "ensemble/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace ensemble {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n <= 0) throw std::invalid_argument("graph needs at least one node");
}

void Graph::set_edge(int i, int j, bool present) {
    if (i == j) throw std::invalid_argument("no self-loops");
    adj_[idx(i, j)] = present ? 1 : 0;
    adj_[idx(j, i)] = present ? 1 : 0;
}

int Graph::degree(int i) const {
    int deg = 0;
    for (int j = 0; j < n_; ++j) deg += adj_[idx(i, j)];
    return deg;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) deg[static_cast<std::size_t>(i)] = degree(i);
    return deg;
}

int Graph::edge_count() const {
    int m = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) m += adj_[idx(i, j)];
    return m;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) g.set_edge(i, j, !edge(i, j));
    return g;
}

int Graph::pair_index(int n, int i, int j) {
    // (i,j), i<j, lexicographic: all pairs starting at 0..i-1 come first.
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    if (n * (n - 1) / 2 > 64) throw std::invalid_argument("edge mask limited to n(n-1)/2 <= 64");
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1ULL) g.set_edge(i, j, true);
        }
    }
    return g;
}

std::uint64_t Graph::edge_mask() const {
    if (n_ * (n_ - 1) / 2 > 64) throw std::invalid_argument("edge mask limited to n(n-1)/2 <= 64");
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j, ++bit) {
            if (edge(i, j)) mask |= (1ULL << bit);
        }
    }
    return mask;
}

Graph realize(const DegreeSequence& d) {
    const int n = d.n();
    Graph g(n);
    std::vector<std::pair<int, int>> residual;  // (remaining degree, node)
    residual.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) residual.emplace_back(d.k(i), i);

    for (;;) {
        std::sort(residual.begin(), residual.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        const int r = residual[0].first;
        const int v = residual[0].second;
        if (r == 0) break;
        if (r >= static_cast<int>(residual.size())) {
            throw std::invalid_argument("degree sequence is not graphical");
        }
        for (int t = 1; t <= r; ++t) {
            if (residual[static_cast<std::size_t>(t)].first <= 0) {
                throw std::invalid_argument("degree sequence is not graphical");
            }
            g.set_edge(v, residual[static_cast<std::size_t>(t)].second, true);
            residual[static_cast<std::size_t>(t)].first -= 1;
        }
        residual[0].first = 0;
    }
    return g;
}

}  // namespace ensemble

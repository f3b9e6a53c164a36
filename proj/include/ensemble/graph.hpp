#pragma once

#include <cstdint>
#include <vector>

#include "ensemble/degree_sequence.hpp"

namespace ensemble {

// Simple undirected graph with dense adjacency, no self-loops.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    bool edge(int i, int j) const { return adj_[idx(i, j)] != 0; }
    void set_edge(int i, int j, bool present);
    int degree(int i) const;
    std::vector<int> degrees() const;
    int edge_count() const;
    Graph complement() const;

    // Pairs (i,j), i<j, in lexicographic order; this fixes the bit layout of
    // edge masks and the draw order of the sampler.
    static int pair_index(int n, int i, int j);
    static Graph from_edge_mask(int n, std::uint64_t mask);  // needs n(n-1)/2 <= 64
    std::uint64_t edge_mask() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<std::uint8_t> adj_;
};

// Havel-Hakimi construction of one realising graph.
// Throws std::invalid_argument when d is not graphical.
Graph realize(const DegreeSequence& d);

}  // namespace ensemble

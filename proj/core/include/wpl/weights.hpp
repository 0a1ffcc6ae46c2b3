#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wpl/errors.hpp"

namespace wpl {

// Vertex of the star graph attached to a weight sequence: the central vertex
// `*` plus, for every weight w_i >= 2, an arm of vertices (i,1) .. (i,w_i-1).
// The total order (star first, then arms lexicographically) is the tie-break
// order used by the reflection algorithms.
struct Vertex {
    int i = 0;  // 0 = star, otherwise 1-based arm index
    int j = 0;  // 1-based position along the arm, 0 for the star

    static Vertex star() { return {}; }
    static Vertex arm(int i, int j) { return {i, j}; }
    bool is_star() const { return i == 0; }

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

// Weight sequence w_1..w_k. Weights equal to 1 are legal and contribute no
// vertices; k = 0 is the unweighted projective line with I = {*}.
class WeightConfig {
public:
    WeightConfig() = default;
    explicit WeightConfig(std::vector<int> weights);

    int k() const { return static_cast<int>(weights_.size()); }
    const std::vector<int>& weights() const { return weights_; }
    int weight(int i) const;  // 1-based arm index
    int arm_len(int i) const { return weight(i) - 1; }

    int vertex_count() const;               // |I| = 1 + sum(w_i - 1)
    std::vector<Vertex> vertices() const;   // in the fixed total order

    bool valid_vertex(const Vertex& v) const;
    void require_vertex(const Vertex& v) const;
    bool adjacent(const Vertex& u, const Vertex& v) const;

    friend bool operator==(const WeightConfig&, const WeightConfig&) = default;

private:
    std::vector<int> weights_;
};

// Generalized Cartan matrix entry of the star graph: 2 on the diagonal, -1
// for adjacent vertices, 0 otherwise.
int cartan(const WeightConfig& cfg, const Vertex& u, const Vertex& v);

} // namespace wpl

#include "wpl/weights.hpp"

#include <cstdlib>

namespace wpl {

std::string to_string(const Vertex& v) {
    if (v.is_star()) return "*";
    return std::to_string(v.i) + "," + std::to_string(v.j);
}

WeightConfig::WeightConfig(std::vector<int> weights) : weights_(std::move(weights)) {
    for (int w : weights_)
        if (w < 1) throw DomainError("weights must be >= 1");
}

int WeightConfig::weight(int i) const {
    if (i < 1 || i > k()) throw DomainError("arm index out of range");
    return weights_[static_cast<size_t>(i) - 1];
}

int WeightConfig::vertex_count() const {
    int n = 1;
    for (int w : weights_) n += w - 1;
    return n;
}

std::vector<Vertex> WeightConfig::vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(vertex_count()));
    out.push_back(Vertex::star());
    for (int i = 1; i <= k(); ++i)
        for (int j = 1; j <= arm_len(i); ++j) out.push_back(Vertex::arm(i, j));
    return out;
}

bool WeightConfig::valid_vertex(const Vertex& v) const {
    if (v.is_star()) return v.j == 0;
    return v.i >= 1 && v.i <= k() && v.j >= 1 && v.j <= arm_len(v.i);
}

void WeightConfig::require_vertex(const Vertex& v) const {
    if (!valid_vertex(v)) throw DomainError("invalid vertex " + to_string(v));
}

bool WeightConfig::adjacent(const Vertex& u, const Vertex& v) const {
    if (u == v) return false;
    if (u.is_star()) return v.j == 1;
    if (v.is_star()) return u.j == 1;
    return u.i == v.i && std::abs(u.j - v.j) == 1;
}

int cartan(const WeightConfig& cfg, const Vertex& u, const Vertex& v) {
    cfg.require_vertex(u);
    cfg.require_vertex(v);
    if (u == v) return 2;
    return cfg.adjacent(u, v) ? -1 : 0;
}

} // namespace wpl

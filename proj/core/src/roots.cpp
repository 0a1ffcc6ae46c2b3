#include "wpl/roots.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wpl {

namespace {

bool support_connected(const WeightConfig& cfg, const GammaHatVec& alpha) {
    const auto verts = cfg.vertices();
    std::vector<Vertex> supp;
    for (const auto& v : verts)
        if (alpha.coeff(v) != 0) supp.push_back(v);
    if (supp.empty()) return false;
    std::set<Vertex> todo(supp.begin() + 1, supp.end());
    std::deque<Vertex> queue{supp.front()};
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (auto it = todo.begin(); it != todo.end();) {
            if (cfg.adjacent(u, *it)) {
                queue.push_back(*it);
                it = todo.erase(it);
            } else {
                ++it;
            }
        }
    }
    return todo.empty();
}

std::optional<Vertex> as_simple(const WeightConfig& cfg, const GammaHatVec& alpha) {
    std::optional<Vertex> found;
    for (const auto& v : cfg.vertices()) {
        const std::int64_t c = alpha.coeff(v);
        if (c == 0) continue;
        if (c != 1 || found) return std::nullopt;
        found = v;
    }
    return found;
}

} // namespace

RootVerdict classify_gamma_root(const WeightConfig& cfg, const GammaHatVec& alpha_in) {
    require_shape(cfg, alpha_in);
    if (alpha_in.delta != 0) throw DomainError("root classification expects delta = 0");
    if (alpha_in.is_zero()) throw DomainError("zero vector is not classified");

    RootVerdict out;
    GammaHatVec alpha = alpha_in;
    if (alpha.nonpos()) {
        alpha = -alpha;
        out.negated = true;
    }

    const auto verts = cfg.vertices();
    for (;;) {
        if (!alpha.nonneg()) {
            out.kind = RootVerdict::Kind::NotRoot;
            out.trace.clear();
            return out;
        }
        if (auto v = as_simple(cfg, alpha)) {
            out.kind = RootVerdict::Kind::Real;
            out.target = *v;
            return out;
        }
        bool reflected = false;
        for (const auto& v : verts) {
            if (pair_simple(cfg, alpha, v) > 0) {
                alpha = reflect(cfg, v, alpha);
                out.trace.push_back(v);
                reflected = true;
                break;
            }
        }
        if (reflected) continue;
        // all pairings <= 0 on a positive vector: fundamental region test
        if (support_connected(cfg, alpha)) {
            out.kind = RootVerdict::Kind::Imaginary;
            out.representative = alpha;
        } else {
            out.kind = RootVerdict::Kind::NotRoot;
            out.trace.clear();
        }
        return out;
    }
}

LoopRootInfo classify_loop_root(const WeightConfig& cfg, const GammaHatVec& phi) {
    require_shape(cfg, phi);
    LoopRootInfo info;
    info.positive = cone_member(cfg, phi).has_value();
    GammaHatVec alpha = phi;
    alpha.delta = 0;
    if (alpha.is_zero()) {
        info.is_root = phi.delta != 0;
        info.real = false;
        return info;
    }
    const RootVerdict rv = classify_gamma_root(cfg, alpha);
    info.is_root = rv.kind != RootVerdict::Kind::NotRoot;
    info.real = rv.kind == RootVerdict::Kind::Real;
    return info;
}

KacVerdict kac_verdict(const WeightConfig& cfg, const GammaHatVec& phi) {
    const LoopRootInfo info = classify_loop_root(cfg, phi);
    if (!info.is_root || !info.positive) return KacVerdict::NoIndecomposable;
    return info.real ? KacVerdict::Unique : KacVerdict::InfinitelyMany;
}

KacVerdict parabolic_verdict(const WeightConfig& cfg, const GammaHatVec& alpha, std::int64_t d) {
    require_shape(cfg, alpha);
    if (alpha.delta != 0) throw DomainError("dimension vector must have delta = 0");
    (void)d;  // the verdict is degree-independent
    if (alpha.is_zero() || !is_strict(cfg, alpha)) return KacVerdict::NoIndecomposable;
    const RootVerdict rv = classify_gamma_root(cfg, alpha);
    switch (rv.kind) {
        case RootVerdict::Kind::Real: return KacVerdict::Unique;
        case RootVerdict::Kind::Imaginary: return KacVerdict::InfinitelyMany;
        case RootVerdict::Kind::NotRoot: return KacVerdict::NoIndecomposable;
    }
    return KacVerdict::NoIndecomposable;
}

std::vector<GammaHatVec> enumerate_positive_roots(const WeightConfig& cfg, std::int64_t bound) {
    if (bound < 1) throw DomainError("bound must be >= 1");
    const auto verts = cfg.vertices();
    const size_t nv = verts.size();

    double box = 1;
    for (size_t t = 0; t < nv; ++t) box *= static_cast<double>(bound + 1);
    if (box > 6.0e7) throw ResourceError("coefficient box too large to scan");

    std::set<GammaHatVec> seeds;
    for (const auto& v : verts) seeds.insert(GammaHatVec::simple(cfg, v));

    // fundamental-region vectors inside the box
    GammaHatVec cur = GammaHatVec::zero(cfg);
    for (;;) {
        // advance odometer
        size_t t = 0;
        while (t < nv) {
            auto& c = cur.coeff(verts[t]);
            if (++c <= bound) break;
            c = 0;
            ++t;
        }
        if (t == nv) break;
        if (cur.is_zero()) continue;
        bool fundamental = true;
        for (const auto& v : verts)
            if (pair_simple(cfg, cur, v) > 0) {
                fundamental = false;
                break;
            }
        if (fundamental && support_connected(cfg, cur)) seeds.insert(cur);
    }

    // close under reflections inside the box
    std::set<GammaHatVec> roots(seeds.begin(), seeds.end());
    std::deque<GammaHatVec> queue(seeds.begin(), seeds.end());
    auto in_box = [&](const GammaHatVec& a) {
        for (const auto& v : verts) {
            const std::int64_t c = a.coeff(v);
            if (c < 0 || c > bound) return false;
        }
        return true;
    };
    while (!queue.empty()) {
        const GammaHatVec a = queue.front();
        queue.pop_front();
        for (const auto& v : verts) {
            GammaHatVec b = reflect(cfg, v, a);
            if (b.is_zero() || !in_box(b)) continue;
            if (roots.insert(b).second) queue.push_back(b);
        }
    }
    return {roots.begin(), roots.end()};
}

} // namespace wpl

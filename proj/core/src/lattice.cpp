#include "wpl/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wpl {

GammaHatVec GammaHatVec::zero(const WeightConfig& cfg) {
    GammaHatVec v;
    v.arms.resize(static_cast<size_t>(cfg.k()));
    for (int i = 1; i <= cfg.k(); ++i)
        v.arms[static_cast<size_t>(i) - 1].assign(static_cast<size_t>(cfg.arm_len(i)), 0);
    return v;
}

GammaHatVec GammaHatVec::simple(const WeightConfig& cfg, const Vertex& v) {
    cfg.require_vertex(v);
    GammaHatVec out = zero(cfg);
    out.coeff(v) = 1;
    return out;
}

GammaHatVec GammaHatVec::delta_vec(const WeightConfig& cfg, std::int64_t m) {
    GammaHatVec out = zero(cfg);
    out.delta = m;
    return out;
}

bool GammaHatVec::shape_matches(const WeightConfig& cfg) const {
    if (arms.size() != static_cast<size_t>(cfg.k())) return false;
    for (int i = 1; i <= cfg.k(); ++i)
        if (arms[static_cast<size_t>(i) - 1].size() != static_cast<size_t>(cfg.arm_len(i)))
            return false;
    return true;
}

std::int64_t GammaHatVec::coeff(const Vertex& v) const {
    if (v.is_star()) return star;
    return arms[static_cast<size_t>(v.i) - 1][static_cast<size_t>(v.j) - 1];
}

std::int64_t& GammaHatVec::coeff(const Vertex& v) {
    if (v.is_star()) return star;
    return arms[static_cast<size_t>(v.i) - 1][static_cast<size_t>(v.j) - 1];
}

bool GammaHatVec::is_zero() const { return gamma_zero() && delta == 0; }

bool GammaHatVec::gamma_zero() const {
    if (star != 0) return false;
    for (const auto& a : arms)
        for (auto n : a)
            if (n != 0) return false;
    return true;
}

bool GammaHatVec::nonneg() const {
    if (star < 0) return false;
    for (const auto& a : arms)
        for (auto n : a)
            if (n < 0) return false;
    return true;
}

bool GammaHatVec::nonpos() const {
    if (star > 0) return false;
    for (const auto& a : arms)
        for (auto n : a)
            if (n > 0) return false;
    return true;
}

std::int64_t GammaHatVec::height() const {
    std::int64_t h = star;
    for (const auto& a : arms)
        for (auto n : a) h += n;
    return h;
}

GammaHatVec& GammaHatVec::operator+=(const GammaHatVec& o) {
    star += o.star;
    delta += o.delta;
    for (size_t i = 0; i < arms.size(); ++i)
        for (size_t j = 0; j < arms[i].size(); ++j) arms[i][j] += o.arms[i][j];
    return *this;
}

GammaHatVec& GammaHatVec::operator-=(const GammaHatVec& o) {
    star -= o.star;
    delta -= o.delta;
    for (size_t i = 0; i < arms.size(); ++i)
        for (size_t j = 0; j < arms[i].size(); ++j) arms[i][j] -= o.arms[i][j];
    return *this;
}

GammaHatVec& GammaHatVec::operator*=(std::int64_t c) {
    star *= c;
    delta *= c;
    for (auto& a : arms)
        for (auto& n : a) n *= c;
    return *this;
}

GammaHatVec GammaHatVec::operator-() const {
    GammaHatVec out = *this;
    out *= -1;
    return out;
}

void require_shape(const WeightConfig& cfg, const GammaHatVec& v) {
    if (!v.shape_matches(cfg)) throw DomainError("vector shape does not match weight sequence");
}

std::int64_t sym_form(const WeightConfig& cfg, const GammaHatVec& a, const GammaHatVec& b) {
    require_shape(cfg, a);
    require_shape(cfg, b);
    // 2 sum_v a_v b_v - sum_{edges uv} (a_u b_v + a_v b_u)
    std::int64_t acc = 2 * a.star * b.star;
    for (int i = 1; i <= cfg.k(); ++i) {
        const auto& ai = a.arms[static_cast<size_t>(i) - 1];
        const auto& bi = b.arms[static_cast<size_t>(i) - 1];
        const int len = cfg.arm_len(i);
        if (len == 0) continue;
        for (int j = 0; j < len; ++j) acc += 2 * ai[j] * bi[j];
        acc -= a.star * bi[0] + ai[0] * b.star;
        for (int j = 0; j + 1 < len; ++j) acc -= ai[j] * bi[j + 1] + ai[j + 1] * bi[j];
    }
    return acc;
}

std::int64_t pair_simple(const WeightConfig& cfg, const GammaHatVec& phi, const Vertex& v) {
    require_shape(cfg, phi);
    cfg.require_vertex(v);
    std::int64_t acc = 2 * phi.coeff(v);
    if (v.is_star()) {
        for (int i = 1; i <= cfg.k(); ++i)
            if (cfg.arm_len(i) >= 1) acc -= phi.arms[static_cast<size_t>(i) - 1][0];
    } else {
        if (v.j == 1) acc -= phi.star;
        const auto& ai = phi.arms[static_cast<size_t>(v.i) - 1];
        if (v.j - 2 >= 0) acc -= ai[static_cast<size_t>(v.j) - 2];
        if (v.j < cfg.arm_len(v.i)) acc -= ai[static_cast<size_t>(v.j)];
    }
    return acc;
}

GammaHatVec reflect(const WeightConfig& cfg, const Vertex& v, const GammaHatVec& phi) {
    GammaHatVec out = phi;
    out.coeff(v) -= pair_simple(cfg, phi, v);
    return out;
}

// --- cone -------------------------------------------------------------------

GammaHatVec ConeGen::expand(const WeightConfig& cfg) const {
    switch (kind) {
        case Kind::StarDelta: {
            GammaHatVec v = GammaHatVec::simple(cfg, Vertex::star());
            v.delta = r;
            return v;
        }
        case Kind::Delta:
            return GammaHatVec::delta_vec(cfg);
        case Kind::ArmSimple:
            return GammaHatVec::simple(cfg, Vertex::arm(i, j));
        case Kind::PointClass: {
            GammaHatVec v = GammaHatVec::delta_vec(cfg);
            for (int p = 1; p <= cfg.arm_len(i); ++p) v.coeff(Vertex::arm(i, p)) -= 1;
            return v;
        }
    }
    throw DomainError("bad cone generator");
}

GammaHatVec ConeWitness::expand(const WeightConfig& cfg) const {
    GammaHatVec acc = GammaHatVec::zero(cfg);
    for (const auto& [gen, mult] : parts) {
        GammaHatVec g = gen.expand(cfg);
        g *= mult;
        acc += g;
    }
    return acc;
}

// Minimal multiplicity of the point class of arm i forced by negative arm
// coefficients.
static std::int64_t arm_deficit(const WeightConfig& cfg, const GammaHatVec& phi, int i) {
    std::int64_t d = 0;
    for (int j = 1; j <= cfg.arm_len(i); ++j)
        d = std::max(d, -phi.coeff(Vertex::arm(i, j)));
    return d;
}

std::optional<ConeWitness> cone_member(const WeightConfig& cfg, const GammaHatVec& phi) {
    require_shape(cfg, phi);
    if (phi.star < 0) return std::nullopt;

    std::vector<std::int64_t> deficit(static_cast<size_t>(cfg.k()) + 1, 0);
    std::int64_t total_deficit = 0;
    for (int i = 1; i <= cfg.k(); ++i) {
        deficit[static_cast<size_t>(i)] = arm_deficit(cfg, phi, i);
        total_deficit += deficit[static_cast<size_t>(i)];
    }

    if (phi.star == 0 && phi.delta < total_deficit) return std::nullopt;

    ConeWitness w;
    auto push = [&w](ConeGen g, std::int64_t mult) {
        if (mult > 0) w.parts.emplace_back(g, mult);
    };

    for (int i = 1; i <= cfg.k(); ++i) {
        const std::int64_t d = deficit[static_cast<size_t>(i)];
        push({ConeGen::Kind::PointClass, 0, i, 0}, d);
        for (int j = 1; j <= cfg.arm_len(i); ++j)
            push({ConeGen::Kind::ArmSimple, 0, i, j}, phi.coeff(Vertex::arm(i, j)) + d);
    }
    if (phi.star >= 1) {
        // one twisted generator absorbs the leftover delta coefficient
        const std::int64_t target = phi.delta - total_deficit;
        push({ConeGen::Kind::StarDelta, target, 0, 0}, 1);
        push({ConeGen::Kind::StarDelta, 0, 0, 0}, phi.star - 1);
    } else {
        push({ConeGen::Kind::Delta, 0, 0, 0}, phi.delta - total_deficit);
    }
    return w;
}

bool cone_member_oracle(const WeightConfig& cfg, const GammaHatVec& phi, std::int64_t bound) {
    require_shape(cfg, phi);
    if (bound < 0) throw DomainError("oracle bound must be >= 0");

    // Exhaust multiplicities a_r <= bound of the generators alpha_* + r delta
    // (|r| <= bound): record which (count, delta-sum) pairs are reachable.
    const std::int64_t n_star = phi.star;
    if (n_star < 0) return false;
    const std::int64_t max_sum = n_star * bound;
    const size_t width = static_cast<size_t>(2 * max_sum + 1);
    // reach[c][s + max_sum] : c generators used so far, delta-sum s
    std::vector<std::vector<char>> reach(static_cast<size_t>(n_star) + 1,
                                         std::vector<char>(std::max<size_t>(width, 1), 0));
    reach[0][static_cast<size_t>(max_sum)] = 1;
    for (std::int64_t r = -bound; r <= bound; ++r) {
        // add up to `bound` copies of alpha_* + r delta; iterate counts upward
        for (std::int64_t c = n_star - 1; c >= 0; --c) {
            for (std::int64_t s = -max_sum; s <= max_sum; ++s) {
                if (!reach[static_cast<size_t>(c)][static_cast<size_t>(s + max_sum)]) continue;
                std::int64_t cc = c, ss = s;
                for (std::int64_t m = 1; m <= bound; ++m) {
                    cc += 1;
                    ss += r;
                    if (cc > n_star || ss < -max_sum || ss > max_sum) break;
                    reach[static_cast<size_t>(cc)][static_cast<size_t>(ss + max_sum)] = 1;
                }
            }
        }
    }

    // Enumerate point-class multiplicities d_i, then the arm-simple
    // multiplicities are forced coordinate by coordinate, and finally the
    // delta generator count c closes the budget.
    const int k = cfg.k();
    std::vector<std::int64_t> d(static_cast<size_t>(k) + 1, 0);

    auto arms_ok = [&](int i) {
        for (int j = 1; j <= cfg.arm_len(i); ++j) {
            const std::int64_t b = phi.coeff(Vertex::arm(i, j)) + d[static_cast<size_t>(i)];
            if (b < 0 || b > bound) return false;
        }
        return true;
    };

    // depth-first over d_1..d_k
    std::vector<std::int64_t> stack(static_cast<size_t>(k) + 1, 0);
    int lvl = 1;
    if (k == 0) {
        for (std::int64_t c = 0; c <= bound; ++c) {
            const std::int64_t need = phi.delta - c;
            if (need < -max_sum || need > max_sum) continue;
            if (reach[static_cast<size_t>(n_star)][static_cast<size_t>(need + max_sum)]) return true;
        }
        return false;
    }
    while (lvl >= 1) {
        if (lvl > k) {
            std::int64_t dsum = 0;
            for (int i = 1; i <= k; ++i) dsum += d[static_cast<size_t>(i)];
            for (std::int64_t c = 0; c <= bound; ++c) {
                const std::int64_t need = phi.delta - c - dsum;
                if (need < -max_sum || need > max_sum) continue;
                if (reach[static_cast<size_t>(n_star)][static_cast<size_t>(need + max_sum)])
                    return true;
            }
            --lvl;
            continue;
        }
        if (stack[static_cast<size_t>(lvl)] > bound) {
            stack[static_cast<size_t>(lvl)] = 0;
            --lvl;
            continue;
        }
        d[static_cast<size_t>(lvl)] = stack[static_cast<size_t>(lvl)]++;
        if (!arms_ok(lvl)) continue;
        ++lvl;
    }
    return false;
}

bool is_strict(const WeightConfig& cfg, const GammaHatVec& alpha) {
    require_shape(cfg, alpha);
    if (alpha.delta != 0) throw DomainError("strictness is defined on the delta = 0 slice");
    for (int i = 1; i <= cfg.k(); ++i) {
        std::int64_t prev = alpha.star;
        for (int j = 1; j <= cfg.arm_len(i); ++j) {
            const std::int64_t n = alpha.coeff(Vertex::arm(i, j));
            if (n > prev) return false;
            prev = n;
        }
        if (prev < 0) return false;
    }
    return alpha.star >= 0;
}

// --- classes ----------------------------------------------------------------

static int mod_pos(std::int64_t a, int m) {
    int r = static_cast<int>(a % m);
    return r < 0 ? r + m : r;
}

GammaHatVec class_of_uniserial(const WeightConfig& cfg, int i, int j, std::int64_t r) {
    if (i < 1 || i > cfg.k()) throw DomainError("arm index out of range");
    if (r == 0) throw DomainError("uniserial length must be nonzero");
    const int w = cfg.weight(i);
    if (r < 0) return -class_of_uniserial(cfg, i, mod_pos(j - r, w), -r);

    GammaHatVec out = GammaHatVec::zero(cfg);
    const std::int64_t full = r / w;
    out.delta = full;
    // leftover composition factors S_{i,j}, S_{i,j-1}, ...
    for (std::int64_t l = 0; l < r % w; ++l) {
        const int jj = mod_pos(j - l, w);
        if (jj == 0) {
            out.delta += 1;
            for (int p = 1; p <= cfg.arm_len(i); ++p) out.coeff(Vertex::arm(i, p)) -= 1;
        } else {
            out.coeff(Vertex::arm(i, jj)) += 1;
        }
    }
    return out;
}

// --- L(w) -------------------------------------------------------------------

PicElt pic_normalize(const WeightConfig& cfg, std::int64_t r, const std::vector<std::int64_t>& t) {
    if (t.size() != static_cast<size_t>(cfg.k())) throw DomainError("pic coordinate count mismatch");
    PicElt out;
    out.r = r;
    out.s.resize(t.size());
    for (int i = 1; i <= cfg.k(); ++i) {
        const int w = cfg.weight(i);
        const std::int64_t ti = t[static_cast<size_t>(i) - 1];
        const std::int64_t m = mod_pos(ti, w);
        out.s[static_cast<size_t>(i) - 1] = m;
        out.r += (ti - m) / w;
    }
    return out;
}

PicElt pic_add(const WeightConfig& cfg, const PicElt& a, const PicElt& b) {
    std::vector<std::int64_t> t(static_cast<size_t>(cfg.k()), 0);
    for (size_t i = 0; i < t.size(); ++i) t[i] = a.s[i] + b.s[i];
    return pic_normalize(cfg, a.r + b.r, t);
}

PicElt pic_c(const WeightConfig& cfg, std::int64_t r) {
    PicElt out;
    out.r = r;
    out.s.assign(static_cast<size_t>(cfg.k()), 0);
    return out;
}

std::int64_t pic_degree(const WeightConfig& cfg, const PicElt& xi) {
    std::int64_t p = 1;
    for (int i = 1; i <= cfg.k(); ++i) p = std::lcm(p, static_cast<std::int64_t>(cfg.weight(i)));
    std::int64_t deg = xi.r * p;
    for (int i = 1; i <= cfg.k(); ++i)
        deg += xi.s[static_cast<size_t>(i) - 1] * (p / cfg.weight(i));
    return deg;
}

PicElt pic_omega(const WeightConfig& cfg) {
    std::vector<std::int64_t> t(static_cast<size_t>(cfg.k()), -1);
    return pic_normalize(cfg, cfg.k() - 2, t);
}

GammaHatVec class_of_line_bundle(const WeightConfig& cfg, const PicElt& xi) {
    if (xi.s.size() != static_cast<size_t>(cfg.k())) throw DomainError("pic coordinate count mismatch");
    GammaHatVec out = GammaHatVec::simple(cfg, Vertex::star());
    out.delta = xi.r;
    for (int i = 1; i <= cfg.k(); ++i) {
        const std::int64_t si = xi.s[static_cast<size_t>(i) - 1];
        if (si < 0 || si >= cfg.weight(i)) throw DomainError("pic element not in normal form");
        for (std::int64_t j = 1; j <= si; ++j) out.coeff(Vertex::arm(i, static_cast<int>(j))) += 1;
    }
    return out;
}

GammaHatVec parabolic_type(const WeightConfig& cfg, const GammaHatVec& alpha, std::int64_t d) {
    require_shape(cfg, alpha);
    if (alpha.delta != 0) throw DomainError("dimension vector must have delta = 0");
    GammaHatVec out = alpha;
    out.delta = d;
    return out;
}

} // namespace wpl

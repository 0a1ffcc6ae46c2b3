#pragma once

#include <optional>
#include <vector>

#include "wpl/lattice.hpp"

namespace wpl {

// Outcome of reducing a delta = 0 vector by simple reflections. The trace
// records the reflections in the order they were applied; replaying it in
// reverse from the target (or representative) recovers the sign-normalized
// input.
struct RootVerdict {
    enum class Kind { NotRoot, Real, Imaginary };
    Kind kind = Kind::NotRoot;
    std::vector<Vertex> trace;
    std::optional<Vertex> target;              // Real: the simple root reached
    std::optional<GammaHatVec> representative; // Imaginary: fundamental-region vector
    bool negated = false;                      // input was <= 0 and got sign-flipped
};

enum class KacVerdict { NoIndecomposable, Unique, InfinitelyMany };

struct LoopRootInfo {
    bool is_root = false;
    bool real = false;
    bool positive = false;
};

// Reduction loop on the delta = 0 slice. Ties are broken at the least vertex
// (star first, then arms lexicographically). Throws on alpha = 0.
RootVerdict classify_gamma_root(const WeightConfig& cfg, const GammaHatVec& alpha);

// phi = alpha + m delta is a root iff alpha is a (plus or minus) root of the
// star diagram, or alpha = 0 and m != 0; real iff alpha is real.
LoopRootInfo classify_loop_root(const WeightConfig& cfg, const GammaHatVec& phi);

// Dimension-type verdict: Unique for positive real roots, InfinitelyMany for
// positive imaginary roots, NoIndecomposable otherwise.
KacVerdict kac_verdict(const WeightConfig& cfg, const GammaHatVec& phi);

// Same verdict for every degree d: decided by strictness of alpha alone.
KacVerdict parabolic_verdict(const WeightConfig& cfg, const GammaHatVec& alpha, std::int64_t d);

// All positive roots of the star diagram whose coefficients are <= bound:
// reflection closure of the simple roots together with the Weyl orbits of
// the fundamental-region vectors inside the box.
std::vector<GammaHatVec> enumerate_positive_roots(const WeightConfig& cfg, std::int64_t bound);

} // namespace wpl

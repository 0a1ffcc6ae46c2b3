#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wpl/matfq.hpp"

namespace wpl {

// One tube: nilpotent representations of the cyclic quiver with w vertices
// over the prime field F_q. Arrows go from vertex j to vertex j-1, so that
// extensions of S_j by S_{j-1} exist.
struct TubeContext {
    int w = 1;
    int q = 3;
    TubeContext(int w_, int q_);
};

// Scan budget on the total length, per the default configuration.
int default_scan_budget(int q);

// The uniserial S_top[len]; top is reduced mod w, len >= 1.
struct Segment {
    int top = 0;
    int len = 1;
    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

// Isomorphism class of a tube object: a multiset of segments, kept sorted.
struct TubeClass {
    int w = 1;
    std::vector<Segment> segs;

    TubeClass() = default;
    TubeClass(int w_, std::vector<Segment> segs_);
    static TubeClass zero(int w) { return TubeClass(w, {}); }
    static TubeClass uniserial(int w, int top, int len);

    std::int64_t total() const;
    std::vector<std::int64_t> dimvec() const;  // per-vertex dimensions
    bool is_uniserial() const { return segs.size() == 1; }

    friend bool operator==(const TubeClass&, const TubeClass&) = default;
    friend auto operator<=>(const TubeClass&, const TubeClass&) = default;
};

// AR translate: shift every top by -1.
TubeClass tau(const TubeClass& cls);

// Explicit matrix realization: per-vertex dimensions and arrow matrices
// arrow[m] : V_m -> V_{m-1} (size dim[m-1] x dim[m]). The composite around
// the cycle must be nilpotent.
struct TubeRealization {
    int w = 1;
    int q = 3;
    std::vector<int> dim;
    std::vector<MatFq> arrow;
};

// All isomorphism classes of total length n, sorted.
std::vector<TubeClass> enumerate_tube_classes(const TubeContext& ctx, int n);

// Canonical block-diagonal realization, one shift-style block per segment.
TubeRealization realize(const TubeContext& ctx, const TubeClass& cls);

// Recover the class from the rank profile of arrow-path composites; rejects
// non-nilpotent input.
TubeClass iso_class_of(const TubeContext& ctx, const TubeRealization& M);

// dim Hom computed as the nullity of the intertwining equations; independent
// of q. ext_dim(X,Y) = hom_dim(Y, tau X).
int hom_dim(const TubeContext& ctx, const TubeClass& X, const TubeClass& Y);
int ext_dim(const TubeContext& ctx, const TubeClass& X, const TubeClass& Y);

// |Aut(X)| over F_q via the local-algebra count
//   q^(dim End - sum m_i^2) * prod_i |GL_{m_i}(F_q)|,
// which the brute-force unit count must reproduce.
std::uint64_t aut_order(const TubeContext& ctx, const TubeClass& X, int budget);
// Explicit enumeration of End(X), counting invertibles. Only for very small
// endomorphism algebras.
std::uint64_t aut_order_bruteforce(const TubeContext& ctx, const TubeClass& X);

struct SubQuot {
    TubeClass sub;
    TubeClass quot;
    std::int64_t count = 0;
};

// Enumerate all arrow-invariant subspace tuples of realize(Z), classified by
// (sub, quot) isomorphism class. Exact counts over F_q.
std::vector<SubQuot> submodule_scan(const TubeContext& ctx, const TubeClass& Z, int budget);

// Hall number F^Z_{XY} = #{ U <= Z : U iso Y, Z/U iso X }, via the scan.
std::int64_t hall_F(const TubeContext& ctx, const TubeClass& X, const TubeClass& Y,
                    const TubeClass& Z, int budget);

// Same number for uniserial Z through its composition chain (uniserials have
// exactly one submodule per length); length-unbounded.
std::int64_t hall_F_uniserial(const TubeContext& ctx, const TubeClass& X, const TubeClass& Y,
                              const TubeClass& Z);

} // namespace wpl

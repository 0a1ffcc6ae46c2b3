#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wpl/weights.hpp"

namespace wpl {

// Element of the loop root lattice: a coefficient for alpha_*, ragged
// coefficients for the arm simple roots alpha_{ij}, and a coefficient for
// the null root delta. Immutable value semantics; shape must match the
// WeightConfig it was built for.
struct GammaHatVec {
    std::int64_t star = 0;
    std::vector<std::vector<std::int64_t>> arms;  // arms[i-1][j-1]
    std::int64_t delta = 0;

    static GammaHatVec zero(const WeightConfig& cfg);
    static GammaHatVec simple(const WeightConfig& cfg, const Vertex& v);
    static GammaHatVec delta_vec(const WeightConfig& cfg, std::int64_t m = 1);

    bool shape_matches(const WeightConfig& cfg) const;
    std::int64_t coeff(const Vertex& v) const;
    std::int64_t& coeff(const Vertex& v);

    bool is_zero() const;
    bool gamma_zero() const;        // all coefficients except delta vanish
    bool nonneg() const;            // star and arm coefficients all >= 0 (delta ignored)
    bool nonpos() const;
    std::int64_t height() const;    // sum of star and arm coefficients

    GammaHatVec& operator+=(const GammaHatVec& o);
    GammaHatVec& operator-=(const GammaHatVec& o);
    GammaHatVec& operator*=(std::int64_t c);
    friend GammaHatVec operator+(GammaHatVec a, const GammaHatVec& b) { return a += b; }
    friend GammaHatVec operator-(GammaHatVec a, const GammaHatVec& b) { return a -= b; }
    friend GammaHatVec operator*(std::int64_t c, GammaHatVec a) { return a *= c; }
    GammaHatVec operator-() const;

    friend bool operator==(const GammaHatVec&, const GammaHatVec&) = default;
    friend auto operator<=>(const GammaHatVec&, const GammaHatVec&) = default;
};

void require_shape(const WeightConfig& cfg, const GammaHatVec& v);

// Symmetric bilinear form induced by the Cartan matrix; (delta, -) = 0.
std::int64_t sym_form(const WeightConfig& cfg, const GammaHatVec& a, const GammaHatVec& b);
// (phi, alpha_v), the pairing against one simple root.
std::int64_t pair_simple(const WeightConfig& cfg, const GammaHatVec& phi, const Vertex& v);
// Simple reflection s_v(phi) = phi - (phi, alpha_v) alpha_v; delta untouched.
GammaHatVec reflect(const WeightConfig& cfg, const Vertex& v, const GammaHatVec& phi);

// --- positivity cone -------------------------------------------------------
//
// The cone is the N-span of alpha_* + r delta (r in Z), delta, the arm
// simples alpha_{ij}, and the point classes delta - sum_l alpha_{il}.

struct ConeGen {
    enum class Kind { StarDelta, Delta, ArmSimple, PointClass };
    Kind kind;
    std::int64_t r = 0;  // StarDelta only
    int i = 0, j = 0;    // ArmSimple: (i,j); PointClass: i

    GammaHatVec expand(const WeightConfig& cfg) const;
    friend bool operator==(const ConeGen&, const ConeGen&) = default;
};

struct ConeWitness {
    std::vector<std::pair<ConeGen, std::int64_t>> parts;  // generator, multiplicity >= 1
    GammaHatVec expand(const WeightConfig& cfg) const;
};

// Closed-form membership test; returns an explicit N-combination on success.
std::optional<ConeWitness> cone_member(const WeightConfig& cfg, const GammaHatVec& phi);

// Exhaustive bounded search over N-combinations: every generator multiplicity
// and the |r| of the alpha_* + r delta generators are capped by `bound`.
// Agrees with cone_member whenever the witness fits the bound.
bool cone_member_oracle(const WeightConfig& cfg, const GammaHatVec& phi, std::int64_t bound);

// Strictness of a dimension vector: n_* >= n_{i1} >= ... >= n_{i,w_i-1} >= 0.
bool is_strict(const WeightConfig& cfg, const GammaHatVec& alpha);

// --- classes of standard sheaves ------------------------------------------

// Class of the uniserial of length r with top the tube simple S_{ij}
// (j taken mod w_i); negative r denotes the shifted object.
GammaHatVec class_of_uniserial(const WeightConfig& cfg, int i, int j, std::int64_t r);

// --- the grading group L(w) ------------------------------------------------
//
// Generated by x_1..x_k and c with w_i x_i = c; elements are kept in the
// normal form r c + sum s_i x_i with 0 <= s_i < w_i.

struct PicElt {
    std::int64_t r = 0;
    std::vector<std::int64_t> s;
    friend bool operator==(const PicElt&, const PicElt&) = default;
};

PicElt pic_normalize(const WeightConfig& cfg, std::int64_t r, const std::vector<std::int64_t>& t);
PicElt pic_add(const WeightConfig& cfg, const PicElt& a, const PicElt& b);
PicElt pic_c(const WeightConfig& cfg, std::int64_t r = 1);

// Degree homomorphism normalized by deg(c) = lcm(w), deg(x_i) = lcm(w)/w_i;
// for k = 0 the normalization is deg(c) = 1.
std::int64_t pic_degree(const WeightConfig& cfg, const PicElt& xi);
// Normal form of (k-2) c - sum_i x_i.
PicElt pic_omega(const WeightConfig& cfg);

// Class of the line bundle O(r c + sum s_i x_i).
GammaHatVec class_of_line_bundle(const WeightConfig& cfg, const PicElt& xi);

// Class of a parabolic bundle with dimension vector alpha and degree d.
GammaHatVec parabolic_type(const WeightConfig& cfg, const GammaHatVec& alpha, std::int64_t d);

} // namespace wpl

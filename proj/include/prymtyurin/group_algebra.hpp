#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "character_table.hpp"
#include "double_coset.hpp"
#include "errors.hpp"
#include "hecke.hpp"
#include "perm_group.hpp"

namespace prymtyurin
{

//---------------------------------------------------------------------------//
/*!
 * Elements of Z[G] stored densely by element index.
 *
 * Products are formed by composing the underlying permutations and looking
 * the result up, so they never touch the multiplication table used by the
 * rest of the library.
 */
class GroupAlgebraElement
{
  public:
    explicit GroupAlgebraElement(PermGroup const& group) : group_(&group), coeffs_(group.order(), 0) {}

    PermGroup const& group() const noexcept { return *group_; }
    std::vector<std::int64_t> const& coefficients() const noexcept { return coeffs_; }
    std::int64_t operator[](Elem x) const { return coeffs_[x]; }
    std::int64_t& operator[](Elem x) { return coeffs_[x]; }

    friend GroupAlgebraElement operator*(GroupAlgebraElement const& a, GroupAlgebraElement const& b)
    {
        PermGroup const& G = a.group();
        GroupAlgebraElement out(G);
        for (Elem x = 0; x < G.order(); ++x) {
            if (a.coeffs_[x] == 0)
                continue;
            Permutation const& px = G.element(x);
            for (Elem y = 0; y < G.order(); ++y) {
                if (b.coeffs_[y] == 0)
                    continue;
                Elem const xy = G.index_of(px * G.element(y));
                out.coeffs_[xy] += a.coeffs_[x] * b.coeffs_[y];
            }
        }
        return out;
    }

    friend bool operator==(GroupAlgebraElement const& a, GroupAlgebraElement const& b)
    {
        return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
    }

  private:
    PermGroup const* group_;
    std::vector<std::int64_t> coeffs_;
};

//! |H| p_H, the indicator of H.
inline GroupAlgebraElement subgroup_sum(Subgroup const& h)
{
    GroupAlgebraElement out(h.group());
    for (Elem x : h.elements())
        out[x] = 1;
    return out;
}

//! (|G| / n) e_W = sum_g tr(chi_V(g^-1)) g, with tr the trace down to Q.
inline GroupAlgebraElement scaled_central_idempotent(RationalIrrep const& w, PermGroup const& G)
{
    GroupAlgebraElement out(G);
    for (Elem g = 0; g < G.order(); ++g) {
        Elem const gi = G.index_of(G.element(g).inverse());
        out[g] = w.trace_values[G.class_of(gi)];
    }
    return out;
}

//! |H| F = sum_i a_i sum_j g_ij (sum_{h in H} h), built from the representatives.
inline GroupAlgebraElement scaled_hecke_element(DoubleCosetData const& dc, std::vector<std::int64_t> const& a)
{
    PermGroup const& G = *dc.group;
    GroupAlgebraElement out(G);
    for (std::size_t i = 0; i < dc.d; ++i) {
        for (Elem g : dc.reps[i]) {
            Permutation const& pg = G.element(g);
            for (Elem h : dc.subgroup.elements())
                out[G.index_of(pg * G.element(h))] += a[i];
        }
    }
    return out;
}

struct ConvolutionCheck
{
    bool right_product = false;  //!< e_W p_H = (n/|G|) F
    bool left_product = false;   //!< p_H e_W = (n/|G|) F
};

//! Both sides scaled by |G||H|/n so that every coefficient is an integer.
inline ConvolutionCheck convolution_oracle(DoubleCosetData const& dc, RationalIrrep const& w,
                                           std::vector<std::int64_t> const& a)
{
    PermGroup const& G = *dc.group;
    auto const e = scaled_central_idempotent(w, G);
    auto const p = subgroup_sum(dc.subgroup);
    auto const F = scaled_hecke_element(dc, a);
    return {e * p == F, p * e == F};
}

}  // namespace prymtyurin

#pragma once
// Central Rankin-Selberg values via the approximate functional equation,
// the auxiliary edge values L(1,.), the diagonal term D_k, and the
// leading-constant table.

#include <cstdint>

#include "rslab/afe.hpp"
#include "rslab/forms.hpp"

namespace rslab {

struct LValue {
    double value = 0.0;
    double trunc_bound = 0.0;
    std::int64_t terms = 0;
};

// L(1/2, f x g) = 2 sum_{m<=M} lambda_{fxg}(m) m^{-1/2} U(m,k) with M from
// the certified tail bound (< eps).  g must be holomorphic (the averaged
// form); f is the fixed form.  Throws naming the needed range when tables
// are too short.
LValue central_lvalue(const FormTable& f, const FormTable& g, double eps = 1e-8);

enum class LOneMode { kRankin, kSym2 };
struct LOneValue {
    double value = 0.0;
    double error_estimate = 0.0;  // from cutoff-doubling
};
// mode kRankin: L(1, f x h) (h ignored for kSym2); mode kSym2: L(1, Ad^2 f).
// Throws on the polar cases (f = h cuspidal; both Eisenstein).
LOneValue l_one(const FormTable& f, const FormTable& h, LOneMode mode);

struct DiagonalValue {
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t a_cut = 0;
};
// D_k = sum_{a,b1,b2} lambda_f(a) lambda_h(a) / (a b1 b2) U(a b1^2,k) V(a b2^2,k)
DiagonalValue diagonal_dk(const FormTable& f, const FormTable& h, int k, double eps = 1e-8);

struct LeadingConstant {
    double lemma_value = 0.0;    // the residue-computation normalization
    double theorem_value = 0.0;  // 2x (the two normalizations are both emitted)
    int degree = 0;              // expected log-polynomial degree of D_k
    const char* kase = "";
};
// four-case table; throws when (f,h) matches no case (distinct Eisenstein
// parameters)
LeadingConstant leading_constant(const FormTable& f, const FormTable& h);

}  // namespace rslab

#pragma once

#include <string>
#include <vector>

#include "dualhfk/gf2_complex.hpp"
#include "dualhfk/knot_complex.hpp"

namespace hfk {

// Generator [x,i,j,k,l] (x) zeta^t of the Z^4-indexed extension of the
// knot complex, tensored with Z[zeta]/(zeta^q - 1).  The surgery cones
// live on the Delta = 1 slice.
struct DGen {
  int sym = 0;
  int i = 0, j = 0, k = 0, l = 0;
  int t = 0;
  friend auto operator<=>(const DGen&, const DGen&) = default;
};

// Generator [x,i,j] (x) T^tbar of the stabilized target complex; tbar is
// valued in Z identified with the relative spin-c structures of the dual
// knot.
struct BGen {
  int sym = 0;
  int i = 0, j = 0;
  long long tbar = 0;
  friend auto operator<=>(const BGen&, const BGen&) = default;
};

inline int delta_grading(const DGen& g) { return g.i - g.j + g.k - g.l; }

Gi gi_up(const DGen& g);                 // (max(i,l), max(j,k))
inline Gi gi_down(const DGen& g) { return {g.i, g.j}; }
inline Gi gi_b(const BGen& g) { return {g.i, g.j}; }

// The differential on 4-tuples induced by the knot complex: an arrow
// x -> y with drop (a,b) sends [x,i,j,k,l] to [y,i-b,j-b,k-a,l-a], same
// zeta power.  It preserves Delta, t, the spin-c class and A(x)+j-k.
std::vector<DGen> d_differential(const DGen& g, const KnotComplex& K);

// Target-side differential: [x,i,j] -> [y,i-b,j-b], same T power.
std::vector<BGen> b_differential(const BGen& g, const KnotComplex& K);

// Spin-c assignments under RelSpinc = Z.
long long spinc_d(const DGen& g, int p, int q, const KnotComplex& K);
inline long long spinc_b(const BGen& g, int p) { return g.tbar + (long long)p * (g.i - g.j); }
// Integer-surgery view, used on both copies of the Delta=1 slice.
long long spinc_integer_view(const DGen& g, int n, const KnotComplex& K);

// The two cone maps.  Both are chain maps and preserve spin-c.
BGen h_map(const DGen& g, int p, int q, const KnotComplex& K);
BGen v_map(const DGen& g, int p, int q, const KnotComplex& K);

// Index-level isomorphism between the Delta=1 slice and the target
// complex (chain iso, forgets the filtration and the spin-c splitting).
BGen psi(const DGen& g, const KnotComplex& K);
DGen psi_inverse(const BGen& g, const KnotComplex& K);

// Strict realization of the marked-point flip on 4-tuples, conjugated
// through psi: [x,i,j,k,l] -> [flip(x), i, j, k-2A(x), l-2A(x)].
DGen extended_flip(const DGen& g, const KnotComplex& K);

// The rational-surgery mirror map on the Delta=1 slice: flip composed
// with the index map [x,l,k,2k-j-c,2l-i-c], c = floor((t+p)/q), with
// zeta power (t+p) mod q.  For q = 1 this is the integer mirror map.
DGen g_pq_map(const DGen& g, int p, int q, const KnotComplex& K);
DGen integer_mirror_map(const DGen& g, int n, const KnotComplex& K);

std::string dgen_id(const DGen& g, const KnotComplex& K, char tag = 'D');
std::string bgen_id(const BGen& g, const KnotComplex& K);

}  // namespace hfk

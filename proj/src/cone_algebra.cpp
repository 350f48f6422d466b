#include "dualhfk/cone_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace hfk {

Gi gi_up(const DGen& g) { return {std::max(g.i, g.l), std::max(g.j, g.k)}; }

std::vector<DGen> d_differential(const DGen& g, const KnotComplex& K) {
  std::vector<DGen> out;
  for (auto& ar : K.arrows)
    if (ar.src == g.sym)
      out.push_back({ar.dst, g.i - ar.b, g.j - ar.b, g.k - ar.a, g.l - ar.a, g.t});
  return out;
}

std::vector<BGen> b_differential(const BGen& g, const KnotComplex& K) {
  std::vector<BGen> out;
  for (auto& ar : K.arrows)
    if (ar.src == g.sym) out.push_back({ar.dst, g.i - ar.b, g.j - ar.b, g.tbar});
  return out;
}

long long spinc_d(const DGen& g, int p, int q, const KnotComplex& K) {
  return (long long)q * K.alex(g.sym) + (long long)p * (g.i - g.j) +
         (long long)q * (g.j - g.k) + g.t;
}

long long spinc_integer_view(const DGen& g, int n, const KnotComplex& K) {
  return (long long)K.alex(g.sym) + (g.j - g.k) + (long long)n * (g.i - g.j);
}

BGen h_map(const DGen& g, int p, int q, const KnotComplex& K) {
  (void)p;
  long long tb = (long long)q * (K.alex(g.sym) + g.j - g.k) + g.t;
  return {g.sym, g.i, g.j, tb};
}

BGen v_map(const DGen& g, int p, int q, const KnotComplex& K) {
  long long tb = (long long)q * (K.alex(g.sym) + g.j - g.k) + g.t + p;
  return {K.flipped(g.sym), g.l, g.k, tb};
}

BGen psi(const DGen& g, const KnotComplex& K) {
  return {g.sym, g.i, g.j, (long long)-K.alex(g.sym) + g.k - g.j};
}

DGen psi_inverse(const BGen& g, const KnotComplex& K) {
  int k = int(g.tbar) + K.alex(g.sym) + g.j;
  return {g.sym, g.i, g.j, k, g.i - g.j + k - 1, 0};
}

DGen extended_flip(const DGen& g, const KnotComplex& K) {
  int shift = 2 * K.alex(g.sym);
  return {K.flipped(g.sym), g.i, g.j, g.k - shift, g.l - shift, g.t};
}

DGen g_pq_map(const DGen& g, int p, int q, const KnotComplex& K) {
  int c = (g.t + p) / q;  // t, p >= 0 so plain division is the floor
  DGen swapped{g.sym, g.l, g.k, 2 * g.k - g.j - c, 2 * g.l - g.i - c,
               (g.t + p) % q};
  return extended_flip(swapped, K);
}

DGen integer_mirror_map(const DGen& g, int n, const KnotComplex& K) {
  return g_pq_map(g, n, 1, K);
}

std::string dgen_id(const DGen& g, const KnotComplex& K, char tag) {
  std::ostringstream os;
  os << tag << '[' << K.symbols[g.sym] << '|' << g.i << '|' << g.j << '|' << g.k << '|'
     << g.l << "]z" << g.t;
  return os.str();
}

std::string bgen_id(const BGen& g, const KnotComplex& K) {
  std::ostringstream os;
  os << "B[" << K.symbols[g.sym] << '|' << g.i << '|' << g.j << "]T" << g.tbar;
  return os.str();
}

}  // namespace hfk

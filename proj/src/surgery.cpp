#include "dualhfk/surgery.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hfk {

namespace {

long long floor_mod(long long a, long long m) { return ((a % m) + m) % m; }

// Candidate i-values for a one-parameter family of generators whose Gi
// level is (i + u1, i - sigma + u2).
std::vector<int> candidate_i(const TestDomain& dom, int sigma, int u1, int u2) {
  std::vector<int> cand;
  switch (dom.kind()) {
    case TestDomain::Kind::Singleton:
    case TestDomain::Kind::LineI:
      cand.push_back(dom.first_range()->first - u1);
      break;
    case TestDomain::Kind::Box: {
      auto [i0, i1] = *dom.first_range();
      auto [j0, j1] = *dom.second_range();
      int lo = std::max(i0 - u1, j0 + sigma - u2);
      int hi = std::min(i1 - u1, j1 + sigma - u2);
      for (int i = lo; i <= hi; ++i) cand.push_back(i);
      break;
    }
    case TestDomain::Kind::Explicit:
      for (auto& p : dom.points()) cand.push_back(p.first - u1);
      break;
    default:
      throw EnumerationError("unbounded enumeration: domain " + dom.describe() +
                             " has infinite fibers");
  }
  return cand;
}

}  // namespace

TruncationParams default_truncation(const KnotComplex& K, int p, int q) {
  return {q * K.genus() + p + q + 4, 3};
}

void ConeSpec::require_valid() const {
  if (!K) throw PreconditionError("cone spec has no knot complex");
  K->require_valid();
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw PreconditionError("surgery coefficient must be a positive reduced fraction p/q");
  if (trunc.bound < 0) throw PreconditionError("negative truncation bound");
  if (!domain.validate()) throw PreconditionError("domain fails the positive test domain axioms");
  if (!domain.finite_fibers())
    throw EnumerationError("unbounded enumeration: domain " + domain.describe() +
                           " has infinite fibers");
}

ConeParts enumerate_cone(const ConeSpec& spec) {
  spec.require_valid();
  const KnotComplex& K = *spec.K;
  const int p = spec.p, q = spec.q, B = spec.trunc.bound;
  const long long sbar = spec.sbar;
  ConeParts parts;
  std::map<DGen, int> dmap;
  std::map<BGen, int> bmap;

  // Source side: one i-parameter family per (sigma, x); the zeta power
  // and the level A(x)+j-k are forced by the spin-c class.
  for (int sigma = -B; sigma <= B; ++sigma) {
    int t = int(floor_mod(sbar - (long long)p * sigma, q));
    long long s_level = (sbar - (long long)p * sigma - t) / q;
    for (int x = 0; x < int(K.symbols.size()); ++x) {
      long long w = s_level - K.alex(x);  // j - k on this family
      int u1 = int(std::max<long long>(0, -w - 1));
      int u2 = int(std::max<long long>(0, -w));
      for (int i : candidate_i(spec.domain, sigma, u1, u2)) {
        DGen g{x, i, i - sigma, int(i - sigma - w), int(i - w - 1), t};
        if (!spec.domain.contains(gi_up(g))) continue;
        if (dmap.count(g)) continue;
        if (spinc_d(g, p, q, K) != sbar)
          throw std::logic_error("cone enumeration produced a wrong spin-c class");
        dmap[g] = int(parts.source.size());
        parts.source.push_back(g);
      }
    }
  }

  // Target side: slices i-j in [-B, B-1], pairing each discarded source
  // slice with its isomorphic image.
  for (int sigma = -B; sigma < B; ++sigma) {
    long long m = sbar - (long long)p * sigma;
    for (int x = 0; x < int(K.symbols.size()); ++x) {
      for (int i : candidate_i(spec.domain, sigma, 0, 0)) {
        BGen g{x, i, i - sigma, m};
        if (!spec.domain.contains(gi_b(g))) continue;
        if (bmap.count(g)) continue;
        bmap[g] = int(parts.target.size());
        parts.target.push_back(g);
      }
    }
  }
  return parts;
}

Gf2Complex build_cone(const ConeSpec& spec) {
  const KnotComplex& K = *spec.K;
  const int p = spec.p, q = spec.q;
  const long long sbar = spec.sbar;

  ConeParts parts = enumerate_cone(spec);
  const std::vector<DGen>& dgens = parts.source;
  const std::vector<BGen>& bgens = parts.target;
  std::map<DGen, int> dmap;
  std::map<BGen, int> bmap;
  for (std::size_t n = 0; n < dgens.size(); ++n) dmap[dgens[n]] = int(n);
  for (std::size_t n = 0; n < bgens.size(); ++n) bmap[bgens[n]] = int(n);

  Gf2Complex cone;
  std::vector<int> didx(dgens.size()), bidx(bgens.size());
  for (std::size_t n = 0; n < dgens.size(); ++n)
    didx[n] = cone.add_generator(dgen_id(dgens[n], K), sbar, gi_up(dgens[n]));
  for (std::size_t n = 0; n < bgens.size(); ++n)
    bidx[n] = cone.add_generator(bgen_id(bgens[n], K), sbar, gi_b(bgens[n]));

  for (std::size_t n = 0; n < dgens.size(); ++n) {
    for (auto& img : d_differential(dgens[n], K)) {
      auto it = dmap.find(img);
      if (it != dmap.end()) cone.toggle_arrow(didx[n], didx[it->second]);
    }
    BGen hb = h_map(dgens[n], p, q, K);
    if (auto it = bmap.find(hb); it != bmap.end()) cone.toggle_arrow(didx[n], bidx[it->second]);
    BGen vb = v_map(dgens[n], p, q, K);
    if (auto it = bmap.find(vb); it != bmap.end()) cone.toggle_arrow(didx[n], bidx[it->second]);
  }
  for (std::size_t n = 0; n < bgens.size(); ++n)
    for (auto& img : b_differential(bgens[n], K)) {
      auto it = bmap.find(img);
      if (it != bmap.end()) cone.toggle_arrow(bidx[n], bidx[it->second]);
    }

  cone.set_filtered(true);
  if (!cone.d_squared_check().ok) throw std::logic_error("built cone fails d^2 = 0");
  return cone;
}

Gf2Complex build_integer_view_cone(const KnotComplex& K, int n, long long sbar,
                                   const TestDomain& domain, const TruncationParams& trunc,
                                   bool use_intro_map) {
  K.require_valid();
  if (n < 1) throw PreconditionError("integer view needs n >= 1");
  if (!domain.finite_fibers())
    throw EnumerationError("unbounded enumeration: domain " + domain.describe() +
                           " has infinite fibers");
  const int B = trunc.bound;

  std::map<DGen, int> up_map, down_map;
  std::vector<DGen> up, down;

  for (int sigma = -B; sigma <= B; ++sigma) {
    long long s_level = sbar - (long long)n * sigma;
    for (int x = 0; x < int(K.symbols.size()); ++x) {
      long long w = s_level - K.alex(x);
      int u1 = int(std::max<long long>(0, -w - 1));
      int u2 = int(std::max<long long>(0, -w));
      for (int i : candidate_i(domain, sigma, u1, u2)) {
        DGen g{x, i, i - sigma, int(i - sigma - w), int(i - w - 1), 0};
        if (!domain.contains(gi_up(g))) continue;
        if (up_map.count(g)) continue;
        if (spinc_integer_view(g, n, K) != sbar)
          throw std::logic_error("integer view enumeration produced a wrong class");
        up_map[g] = int(up.size());
        up.push_back(g);
      }
    }
  }
  for (int sigma = -B; sigma < B; ++sigma) {
    long long s_level = sbar - (long long)n * sigma;
    for (int x = 0; x < int(K.symbols.size()); ++x) {
      long long w = s_level - K.alex(x);
      for (int i : candidate_i(domain, sigma, 0, 0)) {
        DGen g{x, i, i - sigma, int(i - sigma - w), int(i - w - 1), 0};
        if (!domain.contains(gi_down(g))) continue;
        if (down_map.count(g)) continue;
        down_map[g] = int(down.size());
        down.push_back(g);
      }
    }
  }

  Gf2Complex cone;
  std::vector<int> uidx(up.size()), widx(down.size());
  for (std::size_t m = 0; m < up.size(); ++m)
    uidx[m] = cone.add_generator(dgen_id(up[m], K, 'U'), sbar, gi_up(up[m]));
  for (std::size_t m = 0; m < down.size(); ++m)
    widx[m] = cone.add_generator(dgen_id(down[m], K, 'W'), sbar, gi_down(down[m]));

  for (std::size_t m = 0; m < up.size(); ++m) {
    for (auto& img : d_differential(up[m], K))
      if (auto it = up_map.find(img); it != up_map.end())
        cone.toggle_arrow(uidx[m], uidx[it->second]);
    // identity part of the cone map
    if (auto it = down_map.find(up[m]); it != down_map.end())
      cone.toggle_arrow(uidx[m], widx[it->second]);
    DGen mg = use_intro_map ? g_pq_map(up[m], n, 1, K) : integer_mirror_map(up[m], n, K);
    if (auto it = down_map.find(mg); it != down_map.end())
      cone.toggle_arrow(uidx[m], widx[it->second]);
  }
  for (std::size_t m = 0; m < down.size(); ++m)
    for (auto& img : d_differential(down[m], K))
      if (auto it = down_map.find(img); it != down_map.end())
        cone.toggle_arrow(widx[m], widx[it->second]);

  cone.set_filtered(true);
  if (!cone.d_squared_check().ok) throw std::logic_error("integer view cone fails d^2 = 0");
  return cone;
}

Gf2Complex large_n_model(const KnotComplex& K, int n, int s, const TestDomain& domain) {
  K.require_valid();
  if (n < 2 * K.genus() + 1)
    throw PreconditionError("large-surgery model needs n >= 2g+1 = " +
                            std::to_string(2 * K.genus() + 1));
  if (!(2 * s >= -n && 2 * s < n))
    throw PreconditionError("class index s must satisfy -n/2 <= s < n/2");
  if (!domain.finite_fibers())
    throw EnumerationError("unbounded enumeration: domain " + domain.describe() +
                           " has infinite fibers");

  const int B = default_truncation(K, n, 1).bound;
  std::map<DGen, int> gmap;
  std::vector<DGen> gens;
  for (int sigma = -B; sigma <= B; ++sigma)
    for (int x = 0; x < int(K.symbols.size()); ++x) {
      int w = s - K.alex(x);
      int u1 = std::max(0, -w - 1);
      int u2 = std::max(0, -w);
      for (int i : candidate_i(domain, sigma, u1, u2)) {
        DGen g{x, i, i - sigma, i - sigma - w, i - w - 1, 0};
        if (!domain.contains(gi_up(g))) continue;
        if (gmap.count(g)) continue;
        gmap[g] = int(gens.size());
        gens.push_back(g);
      }
    }

  Gf2Complex model;
  std::vector<int> idx(gens.size());
  for (std::size_t m = 0; m < gens.size(); ++m)
    idx[m] = model.add_generator(dgen_id(gens[m], K), spinc_integer_view(gens[m], n, K),
                                 gi_up(gens[m]));
  for (std::size_t m = 0; m < gens.size(); ++m)
    for (auto& img : d_differential(gens[m], K))
      if (auto it = gmap.find(img); it != gmap.end())
        model.toggle_arrow(idx[m], idx[it->second]);

  model.set_filtered(true);
  if (!model.d_squared_check().ok) throw std::logic_error("large-surgery model fails d^2 = 0");
  return model;
}

bool stabilization_check(const ConeSpec& spec) {
  ConeSpec wider = spec;
  wider.trunc.bound += spec.trunc.stabilization_step;
  return build_cone(spec).homology_ranks() == build_cone(wider).homology_ranks();
}

}  // namespace hfk

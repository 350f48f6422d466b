#include "dualhfk/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hfk {

int HomologyReport::total() const {
  int t = 0;
  for (auto& [cls, r] : ranks) t += r;
  return t;
}

std::optional<std::pair<long long, long long>> HomologyReport::support() const {
  std::optional<std::pair<long long, long long>> sup;
  for (auto& [cls, r] : ranks)
    if (r > 0) {
      if (!sup)
        sup = {cls, cls};
      else
        sup->second = cls;
    }
  return sup;
}

HomologyReport hfk_hat_dual(const KnotComplex& K, int p, int q) {
  return hfk_hat_dual(K, p, q, default_truncation(K, p, q));
}

HomologyReport hfk_hat_dual(const KnotComplex& K, int p, int q,
                            const TruncationParams& trunc) {
  return dual_class_scan(K, p, q, TestDomain::singleton(0, 0), trunc);
}

HomologyReport dual_class_scan(const KnotComplex& K, int p, int q,
                               const TestDomain& domain, const TruncationParams& trunc) {
  HomologyReport rep;
  rep.knot = K.name;
  rep.p = p;
  rep.q = q;
  rep.provenance = "rational-cone/" + domain.describe();
  rep.truncation_bound = trunc.bound;
  int g = K.genus();
  rep.scan_lo = -(long long)q * g - p - q;
  rep.scan_hi = (long long)q * g + 2 * p + q;
  for (long long sbar = rep.scan_lo; sbar <= rep.scan_hi; ++sbar) {
    ConeSpec spec{&K, p, q, sbar, domain, trunc};
    auto cone = build_cone(spec);
    auto ranks = cone.homology_ranks();
    rep.ranks[sbar] = ranks.count(sbar) ? ranks[sbar] : 0;
    if (!stabilization_check(spec)) rep.stable = false;
  }
  return rep;
}

int hfk_hat_dual_split_route(const KnotComplex& K, int p, int q, long long sbar) {
  return hfk_hat_dual_split_route(K, p, q, sbar, default_truncation(K, p, q));
}

int hfk_hat_dual_split_route(const KnotComplex& K, int p, int q, long long sbar,
                             const TruncationParams& trunc) {
  ConeSpec spec{&K, p, q, sbar, TestDomain::singleton(0, 0), trunc};
  ConeParts parts = enumerate_cone(spec);

  std::map<DGen, int> dmap;
  std::map<BGen, int> bmap;
  Gf2Complex src, tgt;
  for (auto& g : parts.source) {
    dmap[g] = src.add_generator(dgen_id(g, K), sbar, gi_up(g));
  }
  for (auto& g : parts.target) {
    bmap[g] = tgt.add_generator(bgen_id(g, K), sbar, gi_b(g));
  }
  for (auto& g : parts.source)
    for (auto& img : d_differential(g, K))
      if (auto it = dmap.find(img); it != dmap.end()) src.toggle_arrow(dmap[g], it->second);
  for (auto& g : parts.target)
    for (auto& img : b_differential(g, K))
      if (auto it = bmap.find(img); it != bmap.end()) tgt.toggle_arrow(bmap[g], it->second);

  std::vector<std::pair<int, int>> f;
  for (auto& g : parts.source) {
    if (auto it = bmap.find(h_map(g, p, q, K)); it != bmap.end())
      f.emplace_back(dmap[g], it->second);
    if (auto it = bmap.find(v_map(g, p, q, K)); it != bmap.end())
      f.emplace_back(dmap[g], it->second);
  }

  int ha = src.total_homology_rank();
  int hb = tgt.total_homology_rank();
  int rk = induced_homology_rank(src, tgt, f);
  return ha + hb - 2 * rk;
}

std::pair<long long, long long> predicted_window(int genus, int p, int q) {
  return {-(long long)q * genus, (long long)q * genus + p - 1};
}

std::optional<std::pair<long long, long long>> hfk_window(const HomologyReport& rep) {
  return rep.support();
}

bool AhatReport::ok() const {
  return delta_dichotomy && bhat_rank_one && h_vanishes_on_a1 && v_vanishes_on_a0 &&
         count_a0 == predicted_a0 && count_a1 == predicted_a1 && count_bhat == predicted_bhat;
}

std::string AhatReport::to_string() const {
  std::ostringstream os;
  os << "class " << sbar << ": A0 " << count_a0 << "/" << predicted_a0 << ", A1 " << count_a1
     << "/" << predicted_a1 << ", Bhat " << count_bhat << "/" << predicted_bhat
     << (delta_dichotomy ? "" : ", delta outside {0,1}")
     << (bhat_rank_one ? "" : ", Bhat rank != 1")
     << (h_vanishes_on_a1 ? "" : ", h nonzero on A1")
     << (v_vanishes_on_a0 ? "" : ", v nonzero on A0");
  return os.str();
}

namespace {

long long floor_div(long long a, long long b) {
  long long d = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? d - 1 : d;
}

}  // namespace

AhatReport ahat_split_check(const KnotComplex& K, int p, int q, long long sbar) {
  AhatReport rep;
  rep.sbar = sbar;
  ConeSpec spec{&K, p, q, sbar, TestDomain::singleton(0, 0), default_truncation(K, p, q)};
  ConeParts parts = enumerate_cone(spec);

  std::set<BGen> target_set(parts.target.begin(), parts.target.end());
  for (auto& g : parts.source) {
    int delta = g.i - g.j;
    if (delta == 0) {
      ++rep.count_a0;
      if (target_set.count(v_map(g, p, q, K))) rep.v_vanishes_on_a0 = false;
    } else if (delta == 1) {
      ++rep.count_a1;
      if (target_set.count(h_map(g, p, q, K))) rep.h_vanishes_on_a1 = false;
    } else {
      rep.delta_dichotomy = false;
    }
  }
  rep.count_bhat = int(parts.target.size());

  // Piece sizes forced by the class: the delta=0 piece is the symbols
  // with A(x) <= floor(sbar/q), the delta=1 piece those with
  // A(x) >= 1 + floor((sbar-p)/q); the target has one generator per
  // symbol.
  long long s0 = floor_div(sbar, q);
  long long s1 = floor_div(sbar - p, q);
  for (int a : K.alexander) {
    if (a <= s0) ++rep.predicted_a0;
    if (a >= s1 + 1) ++rep.predicted_a1;
  }
  rep.predicted_bhat = int(K.symbols.size());

  Gf2Complex tgt;
  std::map<BGen, int> bmap;
  for (auto& g : parts.target) bmap[g] = tgt.add_generator(bgen_id(g, K), sbar, gi_b(g));
  for (auto& g : parts.target)
    for (auto& img : b_differential(g, K))
      if (auto it = bmap.find(img); it != bmap.end()) tgt.toggle_arrow(bmap[g], it->second);
  rep.bhat_rank_one = tgt.total_homology_rank() == 1;
  return rep;
}

HomologyReport hf_hat_ambient(const KnotComplex& K, int p, int q) {
  return hf_hat_ambient(K, p, q, default_truncation(K, p, q));
}

HomologyReport hf_hat_ambient(const KnotComplex& K, int p, int q,
                              const TruncationParams& trunc) {
  HomologyReport rep;
  rep.knot = K.name;
  rep.p = p;
  rep.q = q;
  rep.provenance = "rational-cone/ambient-line";
  rep.truncation_bound = trunc.bound;
  rep.scan_lo = 0;
  rep.scan_hi = p - 1;
  for (long long c = 0; c < p; ++c) {
    ConeSpec spec{&K, p, q, c, TestDomain::line_i(0), trunc};
    rep.ranks[c] = build_cone(spec).total_homology_rank();
    if (!stabilization_check(spec)) {
      rep.stable = false;
      throw StabilizationError("ambient ranks not stabilized at bound " +
                               std::to_string(trunc.bound) + " for class " + std::to_string(c));
    }
  }
  return rep;
}

ZetaProfile zeta_cone_plus(const KnotComplex& K, int n, int s, int max_trunc) {
  K.require_valid();
  if (n < 1) throw PreconditionError("zeta cone needs n >= 1");
  if (!(2 * s >= -n && 2 * s < n))
    throw PreconditionError("class index s must satisfy -n/2 <= s < n/2");
  if (max_trunc < 0) throw PreconditionError("negative truncation");

  ZetaProfile prof;
  prof.n = n;
  prof.s = s;

  int amax = 0;
  for (int a : K.alexander) amax = std::max(amax, std::abs(a));

  struct APair {
    int sym, P, Q, sigma;
    auto operator<=>(const APair&) const = default;
  };
  struct RGen {
    int sym, R, sigma;
    auto operator<=>(const RGen&) const = default;
  };

  for (int N = 0; N <= max_trunc; ++N) {
    // Slice window: one of the two maps is an index bijection once
    // |level| exceeds amax + N, and the target side carries one extra
    // slice at the bottom so the discarded tails pair off exactly.
    int shi = (amax + N + 1 + std::abs(s)) / n + 2;
    int slo = -shi;

    std::map<APair, int> amap;
    std::map<RGen, int> rmap;
    std::vector<APair> agens;
    std::vector<RGen> rgens;
    for (int sigma = slo; sigma <= shi; ++sigma) {
      long long t = s + (long long)n * sigma;
      for (int x = 0; x < int(K.symbols.size()); ++x) {
        long long d = t - K.alex(x);  // P - Q
        for (int m = 0; m <= N; ++m) {
          APair g = d >= 0 ? APair{x, m, int(m - d), sigma} : APair{x, int(m + d), m, sigma};
          if (!amap.count(g)) {
            amap[g] = int(agens.size());
            agens.push_back(g);
          }
        }
      }
    }
    for (int sigma = slo - 1; sigma <= shi; ++sigma)
      for (int x = 0; x < int(K.symbols.size()); ++x)
        for (int m = 0; m <= N; ++m) {
          RGen g{x, m, sigma};
          rmap[g] = int(rgens.size());
          rgens.push_back(g);
        }

    Gf2Complex cone;
    std::vector<int> ai(agens.size()), ri(rgens.size());
    for (std::size_t m = 0; m < agens.size(); ++m) {
      auto& g = agens[m];
      std::ostringstream os;
      os << "A[" << K.symbols[g.sym] << '|' << g.P << '|' << g.Q << "]s" << g.sigma;
      ai[m] = cone.add_generator(os.str(), 0, {g.P, g.Q});
    }
    for (std::size_t m = 0; m < rgens.size(); ++m) {
      auto& g = rgens[m];
      std::ostringstream os;
      os << "R[" << K.symbols[g.sym] << '|' << g.R << "]s" << g.sigma;
      ri[m] = cone.add_generator(os.str(), 0, {g.R, 0});
    }
    for (std::size_t m = 0; m < agens.size(); ++m) {
      auto& g = agens[m];
      for (auto& ar : K.arrows)
        if (ar.src == g.sym) {
          APair img{ar.dst, g.P - ar.b, g.Q - ar.a, g.sigma};
          if (std::max(img.P, img.Q) >= 0 && std::max(img.P, img.Q) <= N)
            if (auto it = amap.find(img); it != amap.end()) cone.toggle_arrow(ai[m], ai[it->second]);
        }
      if (g.P >= 0)
        if (auto it = rmap.find({g.sym, g.P, g.sigma}); it != rmap.end())
          cone.toggle_arrow(ai[m], ri[it->second]);
      if (g.Q >= 0)
        if (auto it = rmap.find({K.flipped(g.sym), g.Q, g.sigma - 1}); it != rmap.end())
          cone.toggle_arrow(ai[m], ri[it->second]);
    }
    for (std::size_t m = 0; m < rgens.size(); ++m) {
      auto& g = rgens[m];
      for (auto& ar : K.arrows)
        if (ar.src == g.sym && g.R - ar.b >= 0)
          if (auto it = rmap.find({ar.dst, g.R - ar.b, g.sigma}); it != rmap.end())
            cone.toggle_arrow(ri[m], ri[it->second]);
    }
    if (!cone.d_squared_check().ok) throw std::logic_error("zeta cone fails d^2 = 0");
    prof.rank_by_trunc.push_back(cone.total_homology_rank());
  }
  return prof;
}

std::string S3Report::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < q_list.size(); ++i)
    os << "q=" << q_list[i] << ": window [" << windows[i].first << ", " << windows[i].second
       << "]\n";
  os << (consistent_with_s3 ? "consistent with the S3 pattern"
                            : "not the S3 pattern (window grows with q)")
     << "\n";
  return os.str();
}

S3Report s3_pattern_check(const KnotComplex& K, const std::vector<int>& q_list) {
  S3Report rep;
  rep.q_list = q_list;
  rep.consistent_with_s3 = true;
  for (int q : q_list) {
    if (q < 1) throw PreconditionError("q must be positive");
    auto hk = hfk_hat_dual(K, 1, q);
    auto sup = hk.support();
    std::pair<long long, long long> w = sup ? *sup : std::pair<long long, long long>{0, 0};
    rep.windows.push_back(w);
    if (w != std::pair<long long, long long>{0, 0}) rep.consistent_with_s3 = false;
  }
  return rep;
}

std::optional<long long> crosscheck_large_n(const KnotComplex& K, int n) {
  K.require_valid();
  int g = K.genus();
  if (n < 2 * g + 1)
    throw PreconditionError("crosscheck needs n >= 2g+1 = " + std::to_string(2 * g + 1));

  auto dom = TestDomain::singleton(0, 0);
  auto trunc = default_truncation(K, n, 1);
  std::map<int, std::map<long long, int>> model_ranks;  // by representative s
  long long lo = -(long long)g - n - 1, hi = (long long)g + 2 * n + 1;
  for (long long sbar = lo; sbar <= hi; ++sbar) {
    int s = int(((sbar % n) + n) % n);  // representative with -n/2 <= s < n/2
    if (2 * s >= n) s -= n;
    if (!model_ranks.count(s))
      model_ranks[s] = large_n_model(K, n, s, dom).homology_ranks();

    ConeSpec spec{&K, n, 1, sbar, dom, trunc};
    int cone_rank = build_cone(spec).total_homology_rank();
    auto& mr = model_ranks[s];
    int model_rank = mr.count(sbar) ? mr[sbar] : 0;
    if (cone_rank != model_rank) return sbar;
  }
  return std::nullopt;
}

}  // namespace hfk

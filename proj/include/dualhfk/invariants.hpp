#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualhfk/surgery.hpp"

namespace hfk {

class StabilizationError : public std::runtime_error {
 public:
  explicit StabilizationError(const std::string& what) : std::runtime_error(what) {}
};

struct HomologyReport {
  std::string knot;
  int p = 1, q = 1;
  std::map<long long, int> ranks;  // per relative spin-c class
  long long scan_lo = 0, scan_hi = 0;
  bool stable = true;
  std::string provenance;
  int truncation_bound = 0;

  int total() const;
  // support of the nonzero ranks; nullopt when everything vanishes
  std::optional<std::pair<long long, long long>> support() const;
};

// Knot Floer homology (hat) of the dual knot of p/q surgery, one rank per
// relative spin-c class over the scan window
// [-q g - p - q, q g + 2p + q]; ranks vanish outside it.
HomologyReport hfk_hat_dual(const KnotComplex& K, int p, int q);
HomologyReport hfk_hat_dual(const KnotComplex& K, int p, int q, const TruncationParams& trunc);

// Per-class cone ranks over the same scan window at an arbitrary finite
// test domain; hfk_hat_dual is the singleton(0,0) instance.
HomologyReport dual_class_scan(const KnotComplex& K, int p, int q,
                               const TestDomain& domain, const TruncationParams& trunc);

// Second route to the same ranks: homology of the two cone sides and the
// rank of the induced map, glued by the long exact sequence.
int hfk_hat_dual_split_route(const KnotComplex& K, int p, int q, long long sbar);
int hfk_hat_dual_split_route(const KnotComplex& K, int p, int q, long long sbar,
                             const TruncationParams& trunc);

std::pair<long long, long long> predicted_window(int genus, int p, int q);
// computed (min,max) class with nonzero rank
std::optional<std::pair<long long, long long>> hfk_window(const HomologyReport& rep);

// Structural checks of the hat-level cone at one class: the source side
// splits by delta = i-j in {0,1}, the piece sizes are counted by
// Alexander gradings, the target complex has homology rank one, and each
// cone map vanishes on one piece.
struct AhatReport {
  long long sbar = 0;
  int count_a0 = 0, count_a1 = 0, count_bhat = 0;
  int predicted_a0 = 0, predicted_a1 = 0, predicted_bhat = 0;
  bool delta_dichotomy = true;
  bool bhat_rank_one = true;
  bool h_vanishes_on_a1 = true;
  bool v_vanishes_on_a0 = true;
  bool ok() const;
  std::string to_string() const;
};
AhatReport ahat_split_check(const KnotComplex& K, int p, int q, long long sbar);

// Ambient Heegaard Floer homology (hat) of the surgered manifold: ranks
// per ambient spin-c class c in [0,p), computed from the cone at the
// line domain {i = 0} with the representative class c.  Throws
// StabilizationError if the truncation has not stabilized.
HomologyReport hf_hat_ambient(const KnotComplex& K, int p, int q);
HomologyReport hf_hat_ambient(const KnotComplex& K, int p, int q, const TruncationParams& trunc);

// Truncated rank profile of the plus-flavoured cone for integer surgery:
// rank_by_trunc[N] is the GF(2) homology rank of the cone of h'+v' with
// all tower coordinates capped at N.  A single tower shows slope 1.
struct ZetaProfile {
  int n = 1, s = 0;
  std::vector<int> rank_by_trunc;  // index N = 0..Nmax
};
ZetaProfile zeta_cone_plus(const KnotComplex& K, int n, int s, int max_trunc);

// The computational shadow of the property-P argument: for p = 1 the
// support window is (-q g, q g); it degenerates to (0,0) for all q only
// when g = 0.
struct S3Report {
  std::vector<int> q_list;
  std::vector<std::pair<long long, long long>> windows;
  bool consistent_with_s3 = false;
  std::string to_string() const;
};
S3Report s3_pattern_check(const KnotComplex& K, const std::vector<int>& q_list);

// Per-class comparison of the direct large-surgery model against the
// cone; returns the first disagreeing class, if any.
std::optional<long long> crosscheck_large_n(const KnotComplex& K, int n);

}  // namespace hfk

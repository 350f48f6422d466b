#pragma once

#include <string>

#include "dualhfk/cone_algebra.hpp"
#include "dualhfk/knot_complex.hpp"
#include "dualhfk/test_domain.hpp"

namespace hfk {

class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

class EnumerationError : public std::runtime_error {
 public:
  explicit EnumerationError(const std::string& what) : std::runtime_error(what) {}
};

// Truncation of the auxiliary summand index (equivalently the i-j range
// of the cone generators).  Outside the bound one of the two cone maps
// is an index bijection, so the discarded pairs form acyclic pieces.
struct TruncationParams {
  int bound = 0;
  int stabilization_step = 3;
};
TruncationParams default_truncation(const KnotComplex& K, int p, int q);

struct ConeSpec {
  const KnotComplex* K = nullptr;
  int p = 1, q = 1;            // coprime, positive
  long long sbar = 0;          // relative spin-c class of the dual knot
  TestDomain domain = TestDomain::singleton(0, 0);
  TruncationParams trunc;

  void require_valid() const;
};

// Generator lists of the cone in one spin-c class, before assembly.
struct ConeParts {
  std::vector<DGen> source;
  std::vector<BGen> target;
};
ConeParts enumerate_cone(const ConeSpec& spec);

// The rational-surgery mapping cone in one relative spin-c class,
// restricted to a test domain: source side are the Delta=1 tuples with
// Gi = (max(i,l), max(j,k)) in the domain, target side the [x,i,j] (x)
// T^tbar generators with (i,j) in the domain, differential the internal
// ones plus the two cone maps.  Source slices keep |i-j| <= bound, target
// slices i-j in [-bound, bound-1]; the asymmetric cut pairs each
// discarded slice with its image under the map that is an isomorphism
// there.
Gf2Complex build_cone(const ConeSpec& spec);

// The same cone presented on two copies of the Delta=1 slice (integer
// surgery view, q = 1): identity plus the mirror map.  `use_intro_map`
// selects the rational-surgery formula specialized at q=1 instead of the
// integer mirror map; the two must agree.
Gf2Complex build_integer_view_cone(const KnotComplex& K, int n, long long sbar,
                                   const TestDomain& domain, const TruncationParams& trunc,
                                   bool use_intro_map);

// Direct large-surgery model: Delta=1 tuples with A(x)+j-k = s restricted
// to the domain, no cone.  Splits by spin-c class s + n(i-j).
Gf2Complex large_n_model(const KnotComplex& K, int n, int s, const TestDomain& domain);

// True iff per-class homology ranks agree at trunc.bound and
// trunc.bound + stabilization_step.
bool stabilization_check(const ConeSpec& spec);

}  // namespace hfk

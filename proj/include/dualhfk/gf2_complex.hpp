#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfk {

using Gi = std::pair<int, int>;

struct DSquaredReport {
  bool ok = true;
  // ordered pairs (start, end) whose two-step path count is odd
  std::vector<std::pair<std::string, std::string>> violations;
};

// Finite chain complex over GF(2).  Each generator carries an opaque id
// (used for deterministic ordering), a spin-c label and a Z+Z filtration
// level.  Arrows all have coefficient 1; toggling the same arrow twice
// removes it again.
class Gf2Complex {
 public:
  int add_generator(const std::string& id, long long spinc, Gi gi);
  void toggle_arrow(int src, int dst);
  // Filtered complexes must not let arrows increase either Gi coordinate.
  void set_filtered(bool f);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(int g) const { return ids_.at(g); }
  int index_of(const std::string& id) const;  // -1 if absent
  long long spinc_of(int g) const { return spinc_.at(g); }
  Gi gi_of(int g) const { return gi_.at(g); }
  bool filtered() const { return filtered_; }
  const std::vector<int>& arrows_from(int g) const { return out_.at(g); }
  std::size_t arrow_count() const;

  DSquaredReport d_squared_check() const;

  // Rank of ker/im over GF(2), split by spin-c class.  All arrows must
  // preserve the class; throws if d^2 != 0.
  std::map<long long, int> homology_ranks() const;
  int total_homology_rank() const;

  // Generators of one spin-c class with the restricted differential.
  Gf2Complex spinc_slice(long long cls) const;

  // Kept generators with the projected differential.  Throws when the
  // projection breaks d^2 = 0 (keep-set not order-convex in Gi).
  Gf2Complex induced_subquotient(const std::function<bool(int)>& keep) const;

 private:
  std::vector<std::string> ids_;
  std::vector<long long> spinc_;
  std::vector<Gi> gi_;
  std::vector<std::vector<int>> out_;  // sorted, mod-2 reduced
  std::map<std::string, int> index_;
  bool filtered_ = false;

  void check_chain_classes() const;
};

// Mapping cone of a chain map f : A -> B given by generator-level arrows
// (index in A, index in B).  Generator ids get "A:" / "B:" prefixes.
// Throws unless f d_A = d_B f, reporting the first violating generator.
Gf2Complex mapping_cone(const Gf2Complex& a, const Gf2Complex& b,
                        const std::vector<std::pair<int, int>>& f);

// Rank of the map induced in homology by the chain map f : A -> B.
// Used to compute cone homology along a second route:
//   dim H(cone f) = dim H(A) + dim H(B) - 2 rank f_*.
int induced_homology_rank(const Gf2Complex& a, const Gf2Complex& b,
                          const std::vector<std::pair<int, int>>& f);

}  // namespace hfk

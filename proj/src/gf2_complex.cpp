#include "dualhfk/gf2_complex.hpp"

#include <algorithm>
#include <numeric>

namespace hfk {

namespace {

// Dense GF(2) column for Gaussian elimination.
struct BitCol {
  std::vector<std::uint64_t> w;
  explicit BitCol(std::size_t bits) : w((bits + 63) / 64, 0) {}
  void flip(std::size_t i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int lowest() const {
    for (std::size_t b = 0; b < w.size(); ++b)
      if (w[b]) return int(b * 64 + std::countr_zero(w[b]));
    return -1;
  }
  void operator^=(const BitCol& o) {
    for (std::size_t b = 0; b < w.size(); ++b) w[b] ^= o.w[b];
  }
};

// Columns are consumed in the given order; pivot rows are chosen as the
// lowest set bit, so the result is deterministic.
int gf2_rank(std::vector<BitCol>& cols) {
  std::map<int, int> pivot;  // pivot row -> column index
  int rank = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int p = cols[c].lowest();
    while (p >= 0 && pivot.count(p)) {
      cols[c] ^= cols[pivot[p]];
      p = cols[c].lowest();
    }
    if (p >= 0) {
      pivot[p] = int(c);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

int Gf2Complex::add_generator(const std::string& id, long long spinc, Gi gi) {
  if (index_.count(id)) throw std::invalid_argument("duplicate generator id: " + id);
  int g = int(ids_.size());
  ids_.push_back(id);
  spinc_.push_back(spinc);
  gi_.push_back(gi);
  out_.emplace_back();
  index_.emplace(id, g);
  return g;
}

void Gf2Complex::toggle_arrow(int src, int dst) {
  if (src < 0 || dst < 0 || std::size_t(src) >= size() || std::size_t(dst) >= size())
    throw std::out_of_range("arrow endpoint outside basis");
  if (filtered_) {
    Gi a = gi_[src], b = gi_[dst];
    if (b.first > a.first || b.second > a.second)
      throw std::logic_error("arrow increases Gi in a filtered complex: " + ids_[src] +
                             " -> " + ids_[dst]);
  }
  auto& row = out_[src];
  auto it = std::lower_bound(row.begin(), row.end(), dst);
  if (it != row.end() && *it == dst)
    row.erase(it);  // mod 2
  else
    row.insert(it, dst);
}

void Gf2Complex::set_filtered(bool f) {
  filtered_ = f;
  if (!f) return;
  for (std::size_t g = 0; g < size(); ++g)
    for (int d : out_[g]) {
      if (gi_[d].first > gi_[g].first || gi_[d].second > gi_[g].second)
        throw std::logic_error("arrow increases Gi in a filtered complex: " + ids_[g] +
                               " -> " + ids_[d]);
    }
}

int Gf2Complex::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

std::size_t Gf2Complex::arrow_count() const {
  std::size_t n = 0;
  for (auto& row : out_) n += row.size();
  return n;
}

DSquaredReport Gf2Complex::d_squared_check() const {
  DSquaredReport rep;
  for (std::size_t g = 0; g < size(); ++g) {
    std::map<int, int> two_step;
    for (int m : out_[g])
      for (int e : out_[m]) two_step[e] ^= 1;
    for (auto [e, parity] : two_step)
      if (parity) {
        rep.ok = false;
        rep.violations.emplace_back(ids_[g], ids_[e]);
      }
  }
  return rep;
}

void Gf2Complex::check_chain_classes() const {
  for (std::size_t g = 0; g < size(); ++g)
    for (int d : out_[g])
      if (spinc_[d] != spinc_[g])
        throw std::logic_error("arrow crosses spin-c classes: " + ids_[g] + " -> " + ids_[d]);
}

std::map<long long, int> Gf2Complex::homology_ranks() const {
  if (!d_squared_check().ok) throw std::logic_error("homology_ranks: d^2 != 0");
  check_chain_classes();

  // Sort generators by id inside each class so elimination order is fixed.
  std::map<long long, std::vector<int>> classes;
  for (std::size_t g = 0; g < size(); ++g) classes[spinc_[g]].push_back(int(g));

  std::map<long long, int> ranks;
  for (auto& [cls, gens] : classes) {
    std::sort(gens.begin(), gens.end(),
              [&](int a, int b) { return ids_[a] < ids_[b]; });
    std::map<int, int> pos;
    for (std::size_t i = 0; i < gens.size(); ++i) pos[gens[i]] = int(i);
    std::vector<BitCol> cols;
    cols.reserve(gens.size());
    for (int g : gens) {
      BitCol col(gens.size());
      for (int d : out_[g]) col.flip(pos.at(d));
      cols.push_back(std::move(col));
    }
    int r = gf2_rank(cols);
    ranks[cls] = int(gens.size()) - 2 * r;
  }
  return ranks;
}

int Gf2Complex::total_homology_rank() const {
  // Unsplit rank: no class bookkeeping required of the arrows.
  if (!d_squared_check().ok) throw std::logic_error("total_homology_rank: d^2 != 0");
  std::vector<int> order(size());
  for (std::size_t g = 0; g < size(); ++g) order[g] = int(g);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ids_[a] < ids_[b]; });
  std::vector<int> pos(size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = int(i);
  std::vector<BitCol> cols;
  cols.reserve(size());
  for (int g : order) {
    BitCol col(size());
    for (int d : out_[g]) col.flip(pos[d]);
    cols.push_back(std::move(col));
  }
  return int(size()) - 2 * gf2_rank(cols);
}

Gf2Complex Gf2Complex::spinc_slice(long long cls) const {
  return induced_subquotient([&](int g) { return spinc_[g] == cls; });
}

Gf2Complex Gf2Complex::induced_subquotient(const std::function<bool(int)>& keep) const {
  Gf2Complex sub;
  std::vector<int> map(size(), -1);
  for (std::size_t g = 0; g < size(); ++g)
    if (keep(int(g))) map[g] = sub.add_generator(ids_[g], spinc_[g], gi_[g]);
  for (std::size_t g = 0; g < size(); ++g) {
    if (map[g] < 0) continue;
    for (int d : out_[g])
      if (map[d] >= 0) sub.toggle_arrow(map[g], map[d]);
  }
  sub.filtered_ = filtered_;
  auto rep = sub.d_squared_check();
  if (!rep.ok)
    throw std::logic_error("induced_subquotient: projected differential fails d^2=0 "
                           "(keep-set not admissible), first violation " +
                           rep.violations.front().first + " => " +
                           rep.violations.front().second);
  return sub;
}

Gf2Complex mapping_cone(const Gf2Complex& a, const Gf2Complex& b,
                        const std::vector<std::pair<int, int>>& f) {
  std::vector<std::vector<int>> fmap(a.size());
  for (auto [s, d] : f) {
    auto& row = fmap.at(s);
    auto it = std::lower_bound(row.begin(), row.end(), d);
    if (it != row.end() && *it == d)
      row.erase(it);
    else
      row.insert(it, d);
  }

  // f d_A = d_B f, generator by generator.
  for (std::size_t g = 0; g < a.size(); ++g) {
    std::map<int, int> acc;
    for (int m : a.arrows_from(int(g)))
      for (int d : fmap[m]) acc[d] ^= 1;
    for (int m : fmap[g])
      for (int d : b.arrows_from(m)) acc[d] ^= 1;
    for (auto [d, parity] : acc)
      if (parity)
        throw std::logic_error("mapping_cone: not a chain map at generator " + a.id(int(g)));
  }

  Gf2Complex cone;
  std::vector<int> amap(a.size()), bmap(b.size());
  for (std::size_t g = 0; g < a.size(); ++g)
    amap[g] = cone.add_generator("A:" + a.id(int(g)), a.spinc_of(int(g)), a.gi_of(int(g)));
  for (std::size_t g = 0; g < b.size(); ++g)
    bmap[g] = cone.add_generator("B:" + b.id(int(g)), b.spinc_of(int(g)), b.gi_of(int(g)));
  for (std::size_t g = 0; g < a.size(); ++g) {
    for (int d : a.arrows_from(int(g))) cone.toggle_arrow(amap[g], amap[d]);
    for (int d : fmap[g]) cone.toggle_arrow(amap[g], bmap[d]);
  }
  for (std::size_t g = 0; g < b.size(); ++g)
    for (int d : b.arrows_from(int(g))) cone.toggle_arrow(bmap[g], bmap[d]);
  return cone;
}

int induced_homology_rank(const Gf2Complex& a, const Gf2Complex& b,
                          const std::vector<std::pair<int, int>>& f) {
  // Cycle space of A: kernel basis of the boundary matrix.
  std::size_t na = a.size(), nb = b.size();
  std::vector<BitCol> cols;
  std::vector<BitCol> track;  // expresses each reduced column in the originals
  cols.reserve(na);
  for (std::size_t g = 0; g < na; ++g) {
    BitCol col(na);
    for (int d : a.arrows_from(int(g))) col.flip(d);
    cols.push_back(std::move(col));
    BitCol t(na);
    t.flip(g);
    track.push_back(std::move(t));
  }
  std::map<int, int> pivot;
  std::vector<BitCol> cycles;  // kernel vectors, as generator sets
  for (std::size_t c = 0; c < na; ++c) {
    int p = cols[c].lowest();
    while (p >= 0 && pivot.count(p)) {
      int pc = pivot[p];
      cols[c] ^= cols[pc];
      track[c] ^= track[pc];
      p = cols[c].lowest();
    }
    if (p >= 0)
      pivot[p] = int(c);
    else
      cycles.push_back(track[c]);
  }

  std::vector<std::vector<int>> fmap(na);
  for (auto [s, d] : f) {
    auto& row = fmap.at(s);
    auto it = std::lower_bound(row.begin(), row.end(), d);
    if (it != row.end() && *it == d)
      row.erase(it);
    else
      row.insert(it, d);
  }

  // Boundary space of B, then the span of f(cycles) modulo it.
  std::vector<BitCol> bcols;
  for (std::size_t g = 0; g < nb; ++g) {
    BitCol col(nb);
    for (int d : b.arrows_from(int(g))) col.flip(d);
    if (col.any()) bcols.push_back(std::move(col));
  }
  int rank_bd = gf2_rank(bcols);  // bcols now holds reduced pivot columns
  std::vector<BitCol> fz;
  for (auto& z : cycles) {
    BitCol img(nb);
    for (std::size_t g = 0; g < na; ++g)
      if (z.w[g >> 6] >> (g & 63) & 1)
        for (int d : fmap[g]) img.flip(d);
    fz.push_back(std::move(img));
  }
  std::vector<BitCol> joint;
  for (auto& col : bcols) joint.push_back(col);
  for (auto& col : fz) joint.push_back(col);
  return gf2_rank(joint) - rank_bd;
}

}  // namespace hfk

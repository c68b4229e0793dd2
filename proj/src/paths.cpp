#include "paths.hpp"

#include <limits>
#include <numeric>

namespace wtrop {

std::optional<Marking> derive_marking(const LatticePath& path, const std::set<int>& w_set,
                                      int r_imag) {
  const int n = path.n();
  if (n < 1) throw std::invalid_argument("path must have at least one segment");
  if (r_imag < 0) throw std::invalid_argument("negative number of imaginary pairs");
  for (int i : w_set) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("marking index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(n));
    }
  }
  const int r_real = n - r_imag;
  if (static_cast<int>(w_set.size()) != r_real) {
    throw std::invalid_argument("marking W has " + std::to_string(w_set.size()) +
                                " indices, expected r'=" + std::to_string(r_real));
  }

  Marking mk;
  mk.r_real = r_real;
  mk.r_imag = r_imag;
  mk.w_set = w_set;
  for (int i = 1; i <= n; ++i) {
    if (!w_set.contains(i) && path.segment_length(i) % 2 != 0) mk.v_set.insert(i);
  }
  // Guard: any leftover index must sit on an even segment.
  for (int i = 1; i <= n; ++i) {
    if (!mk.w_set.contains(i) && !mk.v_set.contains(i) && path.segment_length(i) % 2 != 0) {
      return std::nullopt;
    }
  }
  internal_check(mk.s_imag_vertices() <= r_imag, "more forced vertices than imaginary pairs");
  return mk;
}

PathEnumerator::PathEnumerator(const LatticePolygon& poly, Direction dir, int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("path length must be at least 1");
  ordered_ = ordered_points(poly, dir);
  middle_ = static_cast<int>(ordered_.size()) - 2;
  reset();
}

std::uint64_t PathEnumerator::count() const {
  const int k = n_ - 1;
  if (k < 0 || k > middle_) return 0;
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned __int128>(middle_ - k + i) / static_cast<unsigned>(i);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(c);
}

void PathEnumerator::reset() {
  const int k = n_ - 1;
  exhausted_ = k < 0 || k > middle_;
  started_ = false;
  rank_ = 0;
  comb_.assign(static_cast<std::size_t>(std::max(k, 0)), 0);
  std::iota(comb_.begin(), comb_.end(), 0);
}

bool PathEnumerator::next(LatticePath& out, std::uint64_t& rank) {
  if (exhausted_) return false;
  if (started_) {
    // Advance to the next combination in lexicographic order.
    const int k = n_ - 1;
    int i = k - 1;
    while (i >= 0 && comb_[static_cast<std::size_t>(i)] == middle_ - k + i) --i;
    if (i < 0) {
      exhausted_ = true;
      return false;
    }
    ++comb_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      comb_[static_cast<std::size_t>(j)] = comb_[static_cast<std::size_t>(j - 1)] + 1;
    }
    ++rank_;
  }
  started_ = true;

  out.vertices.clear();
  out.vertices.reserve(static_cast<std::size_t>(n_) + 1);
  out.vertices.push_back(ordered_.front());
  for (int idx : comb_) out.vertices.push_back(ordered_[static_cast<std::size_t>(idx) + 1]);
  out.vertices.push_back(ordered_.back());
  rank = rank_;
  return true;
}

}  // namespace wtrop

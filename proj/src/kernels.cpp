#include "gensub/kernels.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gensub {

std::size_t BitMatrix::count() const {
  std::size_t total = 0;
  for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

namespace kernels {

namespace {

using Word = BitMatrix::Word;
constexpr std::size_t kBits = BitMatrix::kWordBits;

// Signed loop bounds keep older OpenMP runtimes happy.
using Index = std::ptrdiff_t;

}  // namespace

void close(BitMatrix& rel) {
  const Index n = static_cast<Index>(rel.size());
  for (Index i = 0; i < n; ++i) rel.set(i, i);
  for (Index k = 0; k < n; ++k) {
    const auto pivot = rel.row(k);
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) {
      if (i == k || !rel.test(i, k)) continue;
      auto target = rel.row(i);
      for (std::size_t w = 0; w < target.size(); ++w) target[w] |= pivot[w];
    }
  }
}

BitMatrix covers(const BitMatrix& closed) {
  const Index n = static_cast<Index>(closed.size());
  BitMatrix out(closed.size());
#pragma omp parallel
  {
    std::vector<Word> redundant(closed.words_per_row());
#pragma omp for schedule(dynamic, 16)
    for (Index a = 0; a < n; ++a) {
      std::fill(redundant.begin(), redundant.end(), Word{0});
      const auto up = closed.row(a);
      for (Index c = 0; c < n; ++c) {
        if (c == a || !closed.test(a, c)) continue;
        const auto above = closed.row(c);
        for (std::size_t w = 0; w < redundant.size(); ++w) {
          Word bits = above[w];
          if (static_cast<std::size_t>(c) / kBits == w) bits &= ~(Word{1} << (c % kBits));
          redundant[w] |= bits;
        }
      }
      auto dst = out.row(a);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = up[w] & ~redundant[w];
      out.reset(a, a);
    }
  }
  return out;
}

BitMatrix fill(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& pred) {
  BitMatrix out(n);
  const Index rows = static_cast<Index>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (Index i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (pred(i, j)) out.set(i, j);
    }
  }
  return out;
}

std::size_t count_pairs(std::size_t n,
                        const std::function<bool(std::size_t, std::size_t)>& pred) {
  std::size_t total = 0;
  const Index rows = static_cast<Index>(n);
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total)
  for (Index i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (pred(i, j)) ++total;
    }
  }
  return total;
}

std::vector<std::size_t> find_cycle(const BitMatrix& rel) {
  const std::size_t n = rel.size();
  enum class Mark { kFresh, kOpen, kDone };
  std::vector<Mark> mark(n, Mark::kFresh);
  std::vector<std::size_t> parent(n, n);

  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::kFresh) continue;
    // (node, next successor to try)
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::kOpen;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == n) {
        mark[v] = Mark::kDone;
        stack.pop_back();
        continue;
      }
      const std::size_t w = next++;
      if (w == v || !rel.test(v, w)) continue;
      if (mark[w] == Mark::kOpen) {
        std::vector<std::size_t> cycle{w};
        for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin() + 1, cycle.end());
        cycle.push_back(w);
        return cycle;
      }
      if (mark[w] == Mark::kFresh) {
        mark[w] = Mark::kOpen;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

void close(BitMatrix& rel) {
  // Independent route: depth-first reachability from every source.
  const std::size_t n = rel.size();
  BitMatrix reach(n);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    reach.set(s, s);
    stack.assign(1, s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (rel.test(v, w) && !reach.test(s, w)) {
          reach.set(s, w);
          stack.push_back(w);
        }
      }
    }
  }
  rel = std::move(reach);
}

BitMatrix covers(const BitMatrix& closed) {
  const std::size_t n = closed.size();
  BitMatrix out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !closed.test(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c) {
        if (c != a && c != b && closed.test(a, c) && closed.test(c, b)) direct = false;
      }
      if (direct) out.set(a, b);
    }
  }
  return out;
}

BitMatrix fill(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& pred) {
  BitMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pred(i, j)) out.set(i, j);
  return out;
}

std::size_t count_pairs(std::size_t n,
                        const std::function<bool(std::size_t, std::size_t)>& pred) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pred(i, j)) ++total;
  return total;
}

}  // namespace serial
}  // namespace kernels
}  // namespace gensub

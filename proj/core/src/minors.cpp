#include "zdci/minors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <unordered_map>

#include "zdci/error.hpp"

namespace zdci {

namespace {

class LaplaceExpander {
 public:
  explicit LaplaceExpander(const SyzygyMatrix& w) : w_(w) {}

  const Polynomial& det(std::uint64_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    const RingPtr& ring = w_.row_labels.front().ring();
    Polynomial out(ring);
    int k = std::popcount(mask);
    if (k == 0) {
      out = Polynomial::from_int(ring, 1);
    } else {
      std::size_t row = static_cast<std::size_t>(k - 1);
      int position = 0;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1, ++position) {
        std::size_t col = static_cast<std::size_t>(std::countr_zero(rest));
        const Polynomial& a = w_.at(row, col);
        if (a.is_zero()) continue;
        const Polynomial& sub = det(mask & ~(std::uint64_t{1} << col));
        if (sub.is_zero()) continue;
        if ((static_cast<int>(row) + position) % 2 == 0) {
          out += a * sub;
        } else {
          out -= a * sub;
        }
      }
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

 private:
  const SyzygyMatrix& w_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

std::uint64_t mask_of(std::span<const std::size_t> columns) {
  std::uint64_t mask = 0;
  for (std::size_t c : columns) mask |= std::uint64_t{1} << c;
  return mask;
}

void require_shape(const SyzygyMatrix& w) {
  if (w.rows() == 0) raise(ErrorKind::InvalidArgument, "matrix has no rows");
  if (w.cols() > 64) raise(ErrorKind::InvalidArgument, "more than 64 columns");
}

MinorReport report(LaplaceExpander& laplace, const Reducer& reduce,
                   std::vector<std::size_t> subset) {
  Polynomial minor = laplace.det(mask_of(subset));
  Polynomial residue = reduce(minor);
  bool nonzero = !residue.is_zero();
  return {std::move(subset), std::move(minor), std::move(residue), nonzero};
}

}  // namespace

SyzygyMatrix build_w_matrix(std::span<const Polynomial> f, std::span<const Polynomial> g,
                            std::span<const std::size_t> divisor_order) {
  if (g.empty()) raise(ErrorKind::InvalidArgument, "empty row generators");
  const RingPtr& ring = g.front().ring();
  RingPtr lex = ring->with_order(TermOrder::lex());
  std::vector<std::size_t> order(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) order[i] = i;
  if (!divisor_order.empty()) {
    if (divisor_order.size() != g.size()) raise(ErrorKind::InvalidArgument, "bad divisor order");
    order.assign(divisor_order.begin(), divisor_order.end());
    std::vector<std::size_t> check = order;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i) {
      if (check[i] != i) raise(ErrorKind::InvalidArgument, "bad divisor order");
    }
  }
  std::vector<Polynomial> divisors;
  for (std::size_t i : order) {
    require_same_ring(g[i], g.front());
    divisors.push_back(g[i].in_ring(lex));
  }
  SyzygyMatrix w;
  w.row_labels.assign(g.begin(), g.end());
  w.col_labels.assign(f.begin(), f.end());
  w.entries.assign(g.size(), std::vector<Polynomial>(f.size(), Polynomial(ring)));
  for (std::size_t j = 0; j < f.size(); ++j) {
    require_same_ring(f[j], g.front());
    DivisionResult d = divide_with_quotients(f[j].in_ring(lex), divisors);
    if (!d.remainder.is_zero()) {
      raise(ErrorKind::NotInIdeal, "generator " + std::to_string(j + 1) + " is not in the ideal");
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      w.entries[order[k]][j] = d.quotients[k].in_ring(ring);
    }
  }
  return w;
}

SyzygyMatrix w_matrix_from_columns(std::vector<Polynomial> row_labels,
                                   std::vector<Polynomial> col_labels,
                                   const std::vector<std::vector<Polynomial>>& columns) {
  if (row_labels.empty()) raise(ErrorKind::InvalidArgument, "empty row labels");
  if (columns.size() != col_labels.size()) raise(ErrorKind::InvalidArgument, "column count");
  SyzygyMatrix w;
  const RingPtr& ring = row_labels.front().ring();
  w.entries.assign(row_labels.size(), std::vector<Polynomial>(columns.size(), Polynomial(ring)));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != row_labels.size()) raise(ErrorKind::InvalidArgument, "column length");
    for (std::size_t i = 0; i < row_labels.size(); ++i) w.entries[i][j] = columns[j][i];
  }
  w.row_labels = std::move(row_labels);
  w.col_labels = std::move(col_labels);
  return w;
}

std::vector<std::vector<std::size_t>> lexicographic_subsets(std::size_t r, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > r) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == r - k + (i - 1)) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

Polynomial minor_determinant(const SyzygyMatrix& w, std::span<const std::size_t> columns) {
  require_shape(w);
  if (columns.size() != w.rows()) raise(ErrorKind::InvalidArgument, "minor size");
  LaplaceExpander laplace(w);
  return laplace.det(mask_of(columns));
}

std::vector<MinorReport> fitting_minor_residues(const SyzygyMatrix& w,
                                                const GroebnerBasis& modulus,
                                                const MinorOptions& options) {
  return fitting_minor_residues(
      w, [&modulus](const Polynomial& f) { return normal_form(f, modulus); }, options);
}

std::vector<MinorReport> fitting_minor_residues(const SyzygyMatrix& w, const Reducer& reduce,
                                                const MinorOptions& options) {
  require_shape(w);
  auto subsets = lexicographic_subsets(w.cols(), w.rows());
  std::vector<MinorReport> out;
  if (subsets.empty()) return out;
  unsigned threads = std::max(1u, options.threads);
  if (options.short_circuit || threads == 1 || subsets.size() < 2) {
    LaplaceExpander laplace(w);
    for (auto& s : subsets) {
      out.push_back(report(laplace, reduce, std::move(s)));
      if (options.short_circuit && out.back().nonzero) break;
    }
    return out;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, subsets.size()));
  std::vector<std::vector<MinorReport>> parts(threads);
  std::size_t chunk = (subsets.size() + threads - 1) / threads;
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        LaplaceExpander laplace(w);
        std::size_t begin = t * chunk;
        std::size_t end = std::min(subsets.size(), begin + chunk);
        for (std::size_t k = begin; k < end; ++k) {
          parts[t].push_back(report(laplace, reduce, subsets[k]));
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& worker : workers) worker.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& part : parts) {
    for (auto& m : part) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace zdci

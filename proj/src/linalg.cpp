#include "powerhom/linalg.hpp"

#include <algorithm>

namespace powerhom {

SparseVec sparse_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scaled(const SparseVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVec out = a;
  for (auto& [i, v] : out) v *= c;
  return out;
}

SparseVec sparse_from(std::vector<std::pair<int, Scalar>> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!e.second.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

// Reduction driver shared by Echelon and the kernel computation: walks the
// accumulator in increasing index order and clears every pivot it meets.
template <class RowLookup, class OnStep>
SparseVec reduce_with(SparseVec v, RowLookup row_at, OnStep on_step) {
  if (v.empty()) return v;
  std::map<int, Scalar> acc;
  for (auto& [i, x] : v) acc.emplace(i, std::move(x));
  SparseVec rest;
  auto it = acc.begin();
  while (it != acc.end()) {
    if (it->second.is_zero()) {
      it = acc.erase(it);
      continue;
    }
    const SparseVec* row = row_at(it->first);
    if (!row) {
      rest.emplace_back(it->first, it->second);
      ++it;
      continue;
    }
    Scalar c = it->second;  // rows are monic at their pivot
    on_step(it->first, c);
    for (std::size_t k = 1; k < row->size(); ++k) {
      auto [pos, inserted] = acc.try_emplace((*row)[k].first, -(c * (*row)[k].second));
      if (!inserted) {
        pos->second -= c * (*row)[k].second;
      }
    }
    it = acc.erase(it);
  }
  return rest;
}

}  // namespace

SparseVec Echelon::reduce(SparseVec v) const {
  return reduce_with(
      std::move(v),
      [&](int idx) -> const SparseVec* {
        auto it = rows_.find(idx);
        return it == rows_.end() ? nullptr : &it->second;
      },
      [](int, const Scalar&) {});
}

SparseVec Echelon::reduce(SparseVec v, std::vector<std::pair<int, Scalar>>& used) const {
  used.clear();
  return reduce_with(
      std::move(v),
      [&](int idx) -> const SparseVec* {
        auto it = rows_.find(idx);
        return it == rows_.end() ? nullptr : &it->second;
      },
      [&](int p, const Scalar& c) { used.emplace_back(p, c); });
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Scalar inv = r.front().second.inverse();
  int pivot = r.front().first;
  rows_.emplace(pivot, sparse_scaled(r, inv));
  return true;
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& images, Field K) {
  struct Row {
    SparseVec v;
    SparseVec track;
  };
  std::map<int, Row> rows;
  std::vector<SparseVec> kernel;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::vector<std::pair<int, Scalar>> used;
    SparseVec rem = reduce_with(
        images[i],
        [&](int idx) -> const SparseVec* {
          auto it = rows.find(idx);
          return it == rows.end() ? nullptr : &it->second.v;
        },
        [&](int p, const Scalar& c) { used.emplace_back(p, c); });
    SparseVec track{{static_cast<int>(i), Scalar::one(K)}};
    for (const auto& [p, c] : used) track = sparse_axpy(track, -c, rows.at(p).track);
    if (rem.empty()) {
      kernel.push_back(std::move(track));
    } else {
      Scalar inv = rem.front().second.inverse();
      int pivot = rem.front().first;
      rows.emplace(pivot, Row{sparse_scaled(rem, inv), sparse_scaled(track, inv)});
    }
  }
  return kernel;
}

std::size_t span_rank(const std::vector<SparseVec>& vectors) {
  Echelon e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace powerhom

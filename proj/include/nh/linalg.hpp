#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nh/rational.hpp"

namespace nh {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// In-place reduced row echelon form. Returns the pivot column of each pivot
// row, in order; rank = pivots.size().
std::vector<int> rref(RatMat& m);

int matrix_rank(RatMat m);

// Basis of the null space of A (solutions of A x = 0), one vector per free
// column, normalized with the free coordinate set to 1.
std::vector<RatVec> kernel_basis(RatMat a);

// One exact solution of A x = b, or nullopt when the system is inconsistent.
std::optional<RatVec> solve_linear(RatMat a, RatVec b);

// Incremental Gaussian elimination over sparse rows keyed by an ordered
// coordinate type. Tracks the expressed combination of input rows, so a row
// that reduces to zero yields an exact kernel vector of the row family.
template <typename Key>
class SparseGauss {
 public:
  using Row = std::map<Key, Rational>;

  // Adds a row; returns the kernel combination (in terms of all rows added so
  // far, including this one) when the row is dependent, nullopt otherwise.
  std::optional<RatVec> add_row(Row row) {
    RatVec combo(count_ + 1, Rational(0));
    combo[count_] = 1;
    reduce(row, combo);
    ++count_;
    if (row.empty()) {
      combo.resize(count_, Rational(0));
      return combo;
    }
    // Normalize so the pivot coefficient is 1.
    const Key pivot = row.begin()->first;
    Rational lead = row.begin()->second;
    for (auto& [k, v] : row) v /= lead;
    for (auto& v : combo) v /= lead;
    combo.resize(count_, Rational(0));
    pivots_.emplace(pivot, Entry{std::move(row), std::move(combo)});
    return std::nullopt;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  int rows_added() const { return count_; }

 private:
  struct Entry {
    Row row;
    RatVec combo;
  };

  void reduce(Row& row, RatVec& combo) const {
    // Eliminate at the minimal pivot coordinate present; each pass introduces
    // only larger coordinates, so the loop terminates.
    while (!row.empty()) {
      auto hit = pivots_.end();
      for (const auto& [k, v] : row) {
        auto jt = pivots_.find(k);
        if (jt != pivots_.end()) {
          hit = jt;
          break;
        }
      }
      if (hit == pivots_.end()) return;
      eliminate(row, combo, hit->second, row.at(hit->first));
    }
  }

  static void eliminate(Row& row, RatVec& combo, const Entry& e,
                        const Rational& factor) {
    for (const auto& [k, v] : e.row) {
      auto [it, inserted] = row.try_emplace(k, 0);
      it->second -= factor * v;
      if (it->second == 0) row.erase(it);
    }
    for (std::size_t i = 0; i < e.combo.size() && i < combo.size(); ++i)
      combo[i] -= factor * e.combo[i];
  }

  std::map<Key, Entry> pivots_;
  int count_ = 0;
};

}  // namespace nh

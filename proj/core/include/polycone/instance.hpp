#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polycone/polyhedron.hpp"
#include "polycone/rational.hpp"

namespace polycone {

// Sorted row indices. Internal indices are 0-based positions in
// ProblemInstance::rows(); reports print the 1-based original labels.
using IndexSet = std::vector<std::size_t>;

IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_minus(const IndexSet& a, const IndexSet& b);
IndexSet set_intersect(const IndexSet& a, const IndexSet& b);
bool is_subset(const IndexSet& a, const IndexSet& b);
bool contains_index(const IndexSet& s, std::size_t i);
// All subsets ordered by (cardinality, lexicographic).
std::vector<IndexSet> subsets_of(const IndexSet& base);

enum class Group { I1, I2 };

struct RowInput {
  RatVec a;
  Rat b;
};

struct Row {
  RatVec a;
  Rat b;
  Group group;
  std::size_t label;  // 0-based position in the original theta-then-C listing
};

// Theta = {x : <a_i,x> <= b_i, i in I1}, C = {x : <a_i,x> <= b_i, i in I2}.
// Zero-normal rows with b >= 0 are dropped (their labels are remembered);
// a zero-normal row with b < 0 makes the instance invalid.
class ProblemInstance {
 public:
  ProblemInstance() = default;
  ProblemInstance(std::size_t dim, const std::vector<RowInput>& theta,
                  const std::vector<RowInput>& cset);

  std::size_t dim() const { return dim_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  const RatVec& a(std::size_t i) const { return rows_.at(i).a; }
  const Rat& b(std::size_t i) const { return rows_.at(i).b; }
  Group group(std::size_t i) const { return rows_.at(i).group; }
  std::size_t label(std::size_t i) const { return rows_.at(i).label; }
  bool in_i1(std::size_t i) const { return group(i) == Group::I1; }

  const IndexSet& i1() const { return i1_; }
  const IndexSet& i2() const { return i2_; }
  const IndexSet& all() const { return all_; }
  const std::vector<std::size_t>& dropped_labels() const { return dropped_; }
  std::size_t theta_rows() const { return n_theta_; }

  bool homogeneous() const;  // every b_i = 0
  RatMat normals(const IndexSet& s) const;
  IndexSet restrict_i1(const IndexSet& s) const;
  IndexSet restrict_i2(const IndexSet& s) const;

  HPolyhedron theta() const;
  HPolyhedron cset() const;
  HPolyhedron theta_cap_c() const;

  std::string format(const IndexSet& s) const;  // "{1,3}" with 1-based labels

 private:
  std::size_t dim_ = 0;
  std::size_t n_theta_ = 0;
  std::vector<Row> rows_;
  IndexSet i1_, i2_, all_;
  std::vector<std::size_t> dropped_;
};

}  // namespace polycone

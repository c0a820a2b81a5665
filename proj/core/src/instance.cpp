#include "polycone/instance.hpp"

#include <algorithm>
#include <iterator>

#include "polycone/errors.hpp"

namespace polycone {

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
  IndexSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

IndexSet set_intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains_index(const IndexSet& s, std::size_t i) {
  return std::binary_search(s.begin(), s.end(), i);
}

std::vector<IndexSet> subsets_of(const IndexSet& base) {
  const std::size_t n = base.size();
  std::vector<IndexSet> out;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k <= n; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      IndexSet s;
      for (auto i : idx) s.push_back(base[i]);
      out.push_back(std::move(s));
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

ProblemInstance::ProblemInstance(std::size_t dim, const std::vector<RowInput>& theta,
                                 const std::vector<RowInput>& cset)
    : dim_(dim), n_theta_(theta.size()) {
  if (dim == 0) throw DimensionMismatch("instance dimension must be positive");
  std::size_t label = 0;
  auto take = [&](const std::vector<RowInput>& rows, Group g, const char* what) {
    for (const auto& r : rows) {
      check_dim(r.a, dim, what);
      if (is_zero(r.a)) {
        if (sgn(r.b) < 0)
          throw EmptyPolyhedron("row " + std::to_string(label + 1) +
                                " has a zero normal and negative right-hand side");
        dropped_.push_back(label);
      } else {
        const std::size_t i = rows_.size();
        rows_.push_back({r.a, r.b, g, label});
        (g == Group::I1 ? i1_ : i2_).push_back(i);
        all_.push_back(i);
      }
      ++label;
    }
  };
  take(theta, Group::I1, "theta row");
  take(cset, Group::I2, "C row");
}

bool ProblemInstance::homogeneous() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return sgn(r.b) == 0; });
}

RatMat ProblemInstance::normals(const IndexSet& s) const {
  RatMat m;
  for (auto i : s) m.push_back(a(i));
  return m;
}

IndexSet ProblemInstance::restrict_i1(const IndexSet& s) const { return set_intersect(s, i1_); }
IndexSet ProblemInstance::restrict_i2(const IndexSet& s) const { return set_intersect(s, i2_); }

HPolyhedron ProblemInstance::theta() const {
  HPolyhedron p(dim_);
  for (auto i : i1_) p.add(a(i), RelKind::LE, b(i));
  return p;
}

HPolyhedron ProblemInstance::cset() const {
  HPolyhedron p(dim_);
  for (auto i : i2_) p.add(a(i), RelKind::LE, b(i));
  return p;
}

HPolyhedron ProblemInstance::theta_cap_c() const {
  HPolyhedron p(dim_);
  for (auto i : all_) p.add(a(i), RelKind::LE, b(i));
  return p;
}

std::string ProblemInstance::format(const IndexSet& s) const {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(label(s[k]) + 1);
  }
  return out + "}";
}

}  // namespace polycone

#include "polycone/lp.hpp"

#include <limits>

#include "polycone/errors.hpp"

namespace polycone {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Row 0..m-1 are constraints, obj holds reduced costs; last column is rhs.
struct Tableau {
  std::size_t m = 0, n = 0;
  RatMat a;
  RatVec obj;  // obj[n] is minus the current objective value
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = 1 / a[r][c];
    for (std::size_t j = 0; j <= n; ++j)
      if (sgn(a[r][j]) != 0) a[r][j] *= inv;
    auto eliminate = [&](RatVec& row) {
      if (sgn(row[c]) == 0) return;
      Rat f = row[c];
      for (std::size_t j = 0; j <= n; ++j)
        if (sgn(a[r][j]) != 0) row[j] -= f * a[r][j];
    };
    for (std::size_t i = 0; i < m; ++i)
      if (i != r) eliminate(a[i]);
    eliminate(obj);
    basis[r] = c;
  }

  void load_objective(const RatVec& cost) {
    obj = cost;
    obj.resize(n + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
      const Rat f = obj[basis[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j <= n; ++j)
        if (sgn(a[i][j]) != 0) obj[j] -= f * a[i][j];
    }
  }

  // Returns false on unboundedness.
  bool run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < n; ++j)
        if (allowed[j] && sgn(obj[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(a[i][enter]) <= 0) continue;
        Rat ratio = a[i][n] / a[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LinearProgram::LinearProgram(std::size_t nvars) : n_(nvars), nonneg_(nvars, false) {}

void LinearProgram::add(RatVec coeffs, Sense sense, Rat rhs) {
  check_dim(coeffs, n_, "LinearProgram::add");
  rows_.push_back({std::move(coeffs), sense, std::move(rhs)});
}

void LinearProgram::set_nonneg(std::size_t j, bool nonneg) { nonneg_.at(j) = nonneg; }

LpSolution LinearProgram::maximize(const RatVec& c) const {
  LpSolution s = solve(neg(c));
  if (s.status == LpStatus::Optimal) s.objective = -s.objective;
  return s;
}

LpSolution LinearProgram::minimize(const RatVec& c) const { return solve(c); }

LpSolution LinearProgram::find_feasible() const { return solve(zeros(n_)); }

LpSolution LinearProgram::solve(const RatVec& cost) const {
  check_dim(cost, n_, "LinearProgram objective");
  // Column layout: structural (x+ and, for free vars, x-), slacks, artificials.
  std::vector<std::size_t> pos(n_), negcol(n_, kNone);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    pos[j] = cols++;
    if (!nonneg_[j]) negcol[j] = cols++;
  }
  const std::size_t m = rows_.size();
  std::vector<std::size_t> slack(m, kNone);
  for (std::size_t i = 0; i < m; ++i)
    if (rows_[i].sense != Sense::EQ) slack[i] = cols++;

  // Normalise every row to rhs >= 0; a slack with coefficient +1 can start basic.
  std::vector<int> flip(m, 1);
  std::vector<bool> needs_art(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(rows_[i].b) < 0) flip[i] = -1;
    const Sense s = rows_[i].sense;
    const int slack_sign = s == Sense::LE ? 1 : (s == Sense::GE ? -1 : 0);
    if (slack_sign * flip[i] > 0) needs_art[i] = false;
  }
  std::vector<std::size_t> art(m, kNone);
  for (std::size_t i = 0; i < m; ++i)
    if (needs_art[i]) art[i] = cols++;
  const std::size_t first_art = cols - [&] {
    std::size_t k = 0;
    for (bool b : needs_art) k += b;
    return k;
  }();

  Tableau t;
  t.m = m;
  t.n = cols;
  t.a.assign(m, zeros(cols + 1));
  t.basis.assign(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    const Row& r = rows_[i];
    RatVec& row = t.a[i];
    for (std::size_t j = 0; j < n_; ++j) {
      if (sgn(r.a[j]) == 0) continue;
      row[pos[j]] = flip[i] * r.a[j];
      if (negcol[j] != kNone) row[negcol[j]] = -flip[i] * r.a[j];
    }
    if (slack[i] != kNone) row[slack[i]] = (r.sense == Sense::LE ? 1 : -1) * flip[i];
    row[cols] = flip[i] * r.b;
    if (art[i] != kNone) {
      row[art[i]] = 1;
      t.basis[i] = art[i];
    } else {
      t.basis[i] = slack[i];
    }
  }

  // Phase 1.
  RatVec phase1 = zeros(cols);
  for (std::size_t j = first_art; j < cols; ++j) phase1[j] = 1;
  t.load_objective(phase1);
  std::vector<bool> allowed(cols, true);
  t.run(allowed);
  LpSolution out;
  if (sgn(t.obj[cols]) != 0) return out;  // minimum of artificials is positive

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.m;) {
    if (t.basis[i] < first_art) {
      ++i;
      continue;
    }
    std::size_t c = kNone;
    for (std::size_t j = 0; j < first_art; ++j)
      if (sgn(t.a[i][j]) != 0) {
        c = j;
        break;
      }
    if (c != kNone) {
      t.pivot(i, c);
      ++i;
    } else {
      t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --t.m;
    }
  }

  // Phase 2.
  RatVec phase2 = zeros(cols);
  for (std::size_t j = 0; j < n_; ++j) {
    phase2[pos[j]] = cost[j];
    if (negcol[j] != kNone) phase2[negcol[j]] = -cost[j];
  }
  for (std::size_t j = first_art; j < cols; ++j) allowed[j] = false;
  t.load_objective(phase2);
  const bool bounded = t.run(allowed);

  RatVec colval = zeros(cols);
  for (std::size_t i = 0; i < t.m; ++i) colval[t.basis[i]] = t.a[i][cols];
  out.x = zeros(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    out.x[j] = colval[pos[j]];
    if (negcol[j] != kNone) out.x[j] -= colval[negcol[j]];
  }
  if (!bounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.objective = dot(cost, out.x);
  return out;
}

}  // namespace polycone

#include "gkz/linprog.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gkz {

namespace {

// Scale so coefficients are coprime integers; makes duplicate detection
// exact across equivalent constraints.
LinCon normalize(const LinCon& c) {
  Int den_lcm = 1;
  for (const auto& x : c.a) den_lcm = lcm(den_lcm, Int(x.get_den()));
  den_lcm = lcm(den_lcm, Int(c.rhs.get_den()));
  LinCon out = c;
  Int g = 0;
  for (auto& x : out.a) {
    x *= Rat(den_lcm);
    g = gcd(g, Int(x.get_num()));
  }
  out.rhs *= Rat(den_lcm);
  g = gcd(g, Int(out.rhs.get_num()));
  if (g > 1) {
    for (auto& x : out.a) x /= Rat(g);
    out.rhs /= Rat(g);
  }
  return out;
}

std::string key_of(const LinCon& c) {
  std::string k;
  for (const auto& x : c.a) k += rat_str(x) + ",";
  k += ";" + rat_str(c.rhs) + (c.strict ? "s" : "w");
  return k;
}

LinSystem eliminate(const LinSystem& sys, int j) {
  std::vector<const LinCon*> pos, neg, zero;
  for (const auto& c : sys) {
    int s = sgn(c.a[j]);
    (s > 0 ? pos : s < 0 ? neg : zero).push_back(&c);
  }
  LinSystem out;
  std::set<std::string> seen;
  auto push = [&](LinCon c) {
    c.a[j] = 0;
    c = normalize(c);
    if (seen.insert(key_of(c)).second) out.push_back(std::move(c));
  };
  for (const auto* z : zero) push(*z);
  for (const auto* p : pos)
    for (const auto* q : neg) {
      Rat cp = -q->a[j];  // > 0
      Rat cq = p->a[j];   // > 0
      LinCon c;
      c.a.resize(p->a.size());
      for (size_t i = 0; i < c.a.size(); ++i)
        c.a[i] = cp * p->a[i] + cq * q->a[i];
      c.rhs = cp * p->rhs + cq * q->rhs;
      c.strict = p->strict || q->strict;
      push(std::move(c));
    }
  return out;
}

bool constant_feasible(const LinSystem& sys) {
  for (const auto& c : sys) {
    bool all_zero = true;
    for (const auto& x : c.a)
      if (x != 0) { all_zero = false; break; }
    if (!all_zero) continue;
    if (c.strict ? !(0 > c.rhs) : !(0 >= c.rhs)) return false;
  }
  return true;
}

}  // namespace

std::optional<RatVec> FourierMotzkin::feasible_point(const LinSystem& sys) const {
  for (const auto& c : sys)
    if (int(c.a.size()) != nvars_)
      throw Error("SHAPE-MISMATCH", "constraint arity mismatch");
  std::vector<LinSystem> stages(nvars_ + 1);
  stages[nvars_] = sys;
  for (int j = nvars_ - 1; j >= 0; --j)
    stages[j] = eliminate(stages[j + 1], j);
  if (!constant_feasible(stages[0])) return std::nullopt;

  RatVec x(nvars_, Rat(0));
  for (int j = 0; j < nvars_; ++j) {
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& c : stages[j + 1]) {
      if (c.a[j] == 0) continue;
      Rat rest = c.rhs;
      for (int k = 0; k < j; ++k) rest -= c.a[k] * x[k];
      Rat bound = rest / c.a[j];
      if (c.a[j] > 0) {
        if (!lo || bound > *lo) { lo = bound; lo_strict = c.strict; }
        else if (bound == *lo) lo_strict = lo_strict || c.strict;
      } else {
        if (!hi || bound < *hi) { hi = bound; hi_strict = c.strict; }
        else if (bound == *hi) hi_strict = hi_strict || c.strict;
      }
    }
    if (lo && hi) {
      if (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict)))
        throw Error("INTERNAL", "FM back-substitution inconsistent");
      x[j] = (*lo == *hi) ? *lo : (*lo + *hi) / 2;
    } else if (lo) {
      x[j] = lo_strict ? *lo + 1 : *lo;
    } else if (hi) {
      x[j] = hi_strict ? *hi - 1 : *hi;
    } else {
      x[j] = 0;
    }
  }
  return x;
}

FourierMotzkin::Interval FourierMotzkin::project_interval(const LinSystem& sys,
                                                          int j) const {
  LinSystem cur = sys;
  for (int k = nvars_ - 1; k >= 0; --k) {
    if (k == j) continue;
    cur = eliminate(cur, k);
  }
  Interval iv;
  if (!constant_feasible(cur)) {
    iv.empty = true;
    return iv;
  }
  for (const auto& c : cur) {
    if (c.a[j] == 0) continue;
    Rat bound = c.rhs / c.a[j];
    if (c.a[j] > 0) {
      if (!iv.lo || bound > *iv.lo) { iv.lo = bound; iv.lo_strict = c.strict; }
      else if (bound == *iv.lo) iv.lo_strict = iv.lo_strict || c.strict;
    } else {
      if (!iv.hi || bound < *iv.hi) { iv.hi = bound; iv.hi_strict = c.strict; }
      else if (bound == *iv.hi) iv.hi_strict = iv.hi_strict || c.strict;
    }
  }
  if (iv.lo && iv.hi &&
      (*iv.lo > *iv.hi || (*iv.lo == *iv.hi && (iv.lo_strict || iv.hi_strict))))
    iv.empty = true;
  return iv;
}

std::optional<RatVec> strong_convexity_certificate(const IntMatrix& A) {
  FourierMotzkin fm(A.rows);
  LinSystem sys;
  for (int j = 0; j < A.cols; ++j) {
    LinCon c;
    c.a.resize(A.rows);
    for (int i = 0; i < A.rows; ++i) c.a[i] = Rat(A.at(i, j));
    c.rhs = 1;  // h . a_j >= 1 iff h . a_j > 0, by scaling
    sys.push_back(std::move(c));
  }
  return fm.feasible_point(sys);
}

bool zero_in_positive_hull(const IntMatrix& A) {
  FourierMotzkin fm(A.cols);
  LinSystem sys;
  for (int j = 0; j < A.cols; ++j) {
    LinCon c;
    c.a.assign(A.cols, Rat(0));
    c.a[j] = 1;
    c.rhs = 0;
    sys.push_back(std::move(c));
  }
  for (int i = 0; i < A.rows; ++i) {
    LinCon ge;
    ge.a.resize(A.cols);
    for (int j = 0; j < A.cols; ++j) ge.a[j] = Rat(A.at(i, j));
    ge.rhs = 0;
    LinCon le = ge;
    for (auto& x : le.a) x = -x;
    sys.push_back(ge);
    sys.push_back(le);
  }
  LinCon sum;
  sum.a.assign(A.cols, Rat(1));
  sum.rhs = 1;
  sys.push_back(sum);
  return fm.feasible_point(sys).has_value();
}

std::optional<std::vector<long>> positive_grading(
    const std::vector<std::vector<long>>& lattice_vectors, int n) {
  FourierMotzkin fm(n);
  LinSystem sys;
  for (int j = 0; j < n; ++j) {
    LinCon c;
    c.a.assign(n, Rat(0));
    c.a[j] = 1;
    c.rhs = 1;
    sys.push_back(std::move(c));
  }
  for (const auto& v : lattice_vectors) {
    LinCon ge;
    ge.a = to_rat_vec(v);
    ge.rhs = 0;
    LinCon le = ge;
    for (auto& x : le.a) x = -x;
    sys.push_back(ge);
    sys.push_back(le);
  }
  auto pt = fm.feasible_point(sys);
  if (!pt) return std::nullopt;
  Int den_lcm = 1;
  for (const auto& x : *pt) den_lcm = lcm(den_lcm, Int(x.get_den()));
  std::vector<long> g(n);
  for (int j = 0; j < n; ++j) {
    Rat s = (*pt)[j] * Rat(den_lcm);
    if (!s.get_num().fits_slong_p())
      throw Error("OVERFLOW", "grading entry out of long range");
    g[j] = s.get_num().get_si();
  }
  return g;
}

std::vector<std::vector<long>> integer_points(const LinSystem& sys, int nvars) {
  if (nvars == 0) {
    if (constant_feasible(sys)) return {std::vector<long>{}};
    return {};
  }
  FourierMotzkin fm(nvars);
  std::vector<long> lo(nvars), hi(nvars);
  for (int j = 0; j < nvars; ++j) {
    auto iv = fm.project_interval(sys, j);
    if (iv.empty) return {};
    if (!iv.lo || !iv.hi)
      throw Error("UNBOUNDED-SLICE", "polyhedron unbounded in coordinate " +
                                          std::to_string(j));
    Int l = iv.lo_strict && is_integer(*iv.lo) ? rat_floor(*iv.lo) + 1
                                               : rat_ceil(*iv.lo);
    Int h = iv.hi_strict && is_integer(*iv.hi) ? rat_ceil(*iv.hi) - 1
                                               : rat_floor(*iv.hi);
    if (l > h) return {};
    if (!l.fits_slong_p() || !h.fits_slong_p())
      throw Error("OVERFLOW", "integer point range too large");
    lo[j] = l.get_si();
    hi[j] = h.get_si();
  }
  auto satisfies = [&](const std::vector<long>& x) {
    for (const auto& c : sys) {
      Rat v = 0;
      for (int j = 0; j < nvars; ++j) v += c.a[j] * Rat(x[j]);
      if (c.strict ? !(v > c.rhs) : !(v >= c.rhs)) return false;
    }
    return true;
  };
  long total = 1;
  for (int j = 0; j < nvars; ++j) {
    long span = hi[j] - lo[j] + 1;
    if (span > 2'000'000 / total)
      throw Error("OVERFLOW", "integer point box too large");
    total *= span;
  }
  std::vector<std::vector<long>> out;
  std::vector<long> cur(nvars, 0);
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    for (int j = 0; j < nvars; ++j) {
      long span = hi[j] - lo[j] + 1;
      cur[j] = lo[j] + rem % span;
      rem /= span;
    }
    if (satisfies(cur)) out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<long>> recession_rays(const LinSystem& sys, int nvars) {
  FourierMotzkin fm(nvars);
  LinSystem cone;
  for (const auto& c : sys) {
    LinCon h;
    h.a = c.a;
    h.rhs = 0;
    cone.push_back(std::move(h));
  }
  std::vector<std::vector<long>> rays;
  std::set<std::vector<long>> seen;
  for (int j = 0; j < nvars; ++j)
    for (int s : {+1, -1}) {
      LinSystem probe = cone;
      LinCon c;
      c.a.assign(nvars, Rat(0));
      c.a[j] = s;
      c.rhs = 1;
      probe.push_back(std::move(c));
      auto pt = fm.feasible_point(probe);
      if (!pt) continue;
      Int den_lcm = 1;
      for (const auto& x : *pt) den_lcm = lcm(den_lcm, Int(x.get_den()));
      std::vector<Int> num(nvars);
      Int g = 0;
      for (int k = 0; k < nvars; ++k) {
        Rat v = (*pt)[k] * Rat(den_lcm);
        num[k] = v.get_num();
        g = gcd(g, num[k]);
      }
      if (g == 0) continue;
      std::vector<long> r(nvars);
      for (int k = 0; k < nvars; ++k) {
        Int q = num[k] / g;
        if (!q.fits_slong_p()) throw Error("OVERFLOW", "ray entry too large");
        r[k] = q.get_si();
      }
      if (seen.insert(r).second) rays.push_back(std::move(r));
    }
  return rays;
}

}  // namespace gkz

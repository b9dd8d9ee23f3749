#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

// Self-contained integration toolkit: a 7/15 Gauss-Kronrod panel rule with
// globally adaptive (worst-panel-first) refinement, Gauss-Legendre node
// generation, and compensated accumulation.  Everything here is strictly
// deterministic: panel selection, splitting and the final spatial-order
// summation depend only on the inputs, never on timing or thread count.

namespace mirrorqed::detail {

// Kahan compensated accumulator; works for real and complex value types.
template <typename T>
struct KahanSum {
  T s{};
  T c{};
  void add(const T& x) {
    const T y = x - c;
    const T t = s + y;
    c = (t - s) - y;
    s = t;
  }
  const T& get() const { return s; }
};

inline long double abs_of(long double v) { return std::fabs(v); }
inline long double abs_of(double v) { return std::fabs(v); }
inline long double abs_of(const std::complex<long double>& v) { return std::abs(v); }
inline long double abs_of(const std::complex<double>& v) { return std::abs(std::complex<long double>(v)); }

// 7/15 Gauss-Kronrod nodes and weights on [-1, 1] (positive half; the last
// node is the center).  Odd indices are the embedded Gauss-7 points.
inline constexpr long double kGK15Nodes[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.0L};
inline constexpr long double kK15Weights[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
inline constexpr long double kG7Weights[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <typename V>
struct Panel {
  long double a = 0, b = 0;
  V val{};
  long double err = 0;
  std::size_t id = 0;  // insertion order; breaks heap ties deterministically
};

template <typename V, typename F>
Panel<V> gk15_panel(F&& f, long double a, long double b) {
  const long double h = 0.5L * (b - a);
  const long double c = 0.5L * (a + b);
  const V fc = f(c);
  V k15 = fc * kK15Weights[7];
  V g7 = fc * kG7Weights[3];
  for (int i = 0; i < 7; ++i) {
    const V lo = f(c - h * kGK15Nodes[i]);
    const V hi = f(c + h * kGK15Nodes[i]);
    const V sum = lo + hi;
    k15 = k15 + sum * kK15Weights[i];
    if (i % 2 == 1) g7 = g7 + sum * kG7Weights[i / 2];
  }
  Panel<V> p;
  p.a = a;
  p.b = b;
  p.val = k15 * h;
  p.err = abs_of((k15 - g7) * h);
  return p;
}

struct AdaptiveOptions {
  long double abs_tol = 1e-12L;
  long double rel_tol = 1e-12L;
  std::size_t max_panels = 20000;
};

// Globally adaptive integration over the sorted breakpoint partition.  The
// panel with the largest error estimate is bisected until the summed error
// estimate meets max(abs_tol, rel_tol * |integral|) or the panel budget is
// exhausted.  The final value is the compensated sum of panel values in
// spatial order (deterministic and well conditioned).
template <typename V, typename F>
V adaptive_gk15(F&& f, const std::vector<long double>& breakpoints,
                const AdaptiveOptions& opt, long double* err_out = nullptr) {
  std::vector<Panel<V>> panels;
  std::size_t next_id = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) continue;
    Panel<V> p = gk15_panel<V>(f, breakpoints[i], breakpoints[i + 1]);
    p.id = next_id++;
    panels.push_back(p);
  }

  auto worse = [](const Panel<V>& x, const Panel<V>& y) {
    if (x.err != y.err) return x.err < y.err;  // max-heap on err
    return x.id > y.id;
  };
  std::make_heap(panels.begin(), panels.end(), worse);

  auto totals = [&panels]() {
    KahanSum<V> v;
    long double e = 0;
    for (const auto& p : panels) {
      v.add(p.val);
      e += p.err;
    }
    return std::pair<V, long double>(v.get(), e);
  };

  auto [total_val, total_err] = totals();
  const long double min_width = 0x1p-52L * std::max(std::fabs(breakpoints.front()),
                                                    std::fabs(breakpoints.back())) +
                                1e-300L;
  while (panels.size() < opt.max_panels) {
    const long double target =
        std::max(opt.abs_tol, opt.rel_tol * abs_of(total_val));
    if (total_err <= target) break;
    std::pop_heap(panels.begin(), panels.end(), worse);
    Panel<V> worst = panels.back();
    panels.pop_back();
    if (worst.b - worst.a <= min_width) {
      // cannot refine further; keep it and stop
      panels.push_back(worst);
      std::push_heap(panels.begin(), panels.end(), worse);
      break;
    }
    const long double mid = 0.5L * (worst.a + worst.b);
    Panel<V> left = gk15_panel<V>(f, worst.a, mid);
    Panel<V> right = gk15_panel<V>(f, mid, worst.b);
    left.id = next_id++;
    right.id = next_id++;
    total_err += left.err + right.err - worst.err;
    panels.push_back(left);
    std::push_heap(panels.begin(), panels.end(), worse);
    panels.push_back(right);
    std::push_heap(panels.begin(), panels.end(), worse);
    // refresh the exact totals periodically; the incremental error drifts
    if ((panels.size() & 0x3f) == 0) {
      auto t = totals();
      total_val = t.first;
      total_err = t.second;
    } else {
      total_val = total_val - worst.val + left.val + right.val;
    }
  }

  std::sort(panels.begin(), panels.end(),
            [](const Panel<V>& x, const Panel<V>& y) { return x.a < y.a; });
  KahanSum<V> v;
  long double e = 0;
  for (const auto& p : panels) {
    v.add(p.val);
    e += p.err;
  }
  if (err_out) *err_out = e;
  return v.get();
}

// Newton-iterated Gauss-Legendre nodes and weights on [-1, 1].
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const double pi = 3.141592653589793238462643383279502884;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double xi = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (xi * p0 - p1) / (xi * xi - 1.0);
      const double dx = p0 / pp;
      xi -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    x[i] = -xi;
    x[n - 1 - i] = xi;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * pp * pp);
  }
}

}  // namespace mirrorqed::detail

// Copyright 2026 The direct-variants Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "direct/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace direct {

namespace {

using Vec = Eigen::VectorXd;
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

using BoundFn = std::function<double(int)>;  // 1-based index

Domain cube(int n, double lo, double hi) {
  return Domain(Vec::Constant(n, lo), Vec::Constant(n, hi));
}

Domain box(int n, const BoundFn& lo, const BoundFn& hi) {
  Vec a(n), b(n);
  for (int i = 1; i <= n; ++i) {
    a[i - 1] = lo(i);
    b[i - 1] = hi(i);
  }
  return Domain(a, b);
}

Domain box2(double a1, double b1, double a2, double b2) {
  return Domain(Vec{{a1, a2}}, Vec{{b1, b2}});
}

double root_i(double base, int i) { return std::pow(base, 1.0 / i); }

double sq(double v) { return v * v; }

// ---- objectives ------------------------------------------------------------

double ackley(const Vec& x) {
  const double n = static_cast<double>(x.size());
  const double s1 = x.squaredNorm() / n;
  const double s2 = (2.0 * kPi * x.array()).cos().sum() / n;
  return -20.0 * std::exp(-0.2 * std::sqrt(s1)) - std::exp(s2) + 20.0 + kE;
}

double alpine(const Vec& x) {
  double p = 1.0;
  for (double v : x) p *= std::sqrt(v) * std::sin(v);
  return -p;
}

double beale(const Vec& x) {
  const double a = x[0], b = x[1];
  return sq(1.5 - a + a * b) + sq(2.25 - a + a * b * b) + sq(2.625 - a + a * b * b * b);
}

double bohachevsky1(const Vec& x) {
  return x[0] * x[0] + 2 * x[1] * x[1] - 0.3 * std::cos(3 * kPi * x[0]) - 0.4 * std::cos(4 * kPi * x[1]) + 0.7;
}

double bohachevsky2(const Vec& x) {
  return x[0] * x[0] + 2 * x[1] * x[1] - 0.3 * std::cos(3 * kPi * x[0]) * std::cos(4 * kPi * x[1]) + 0.3;
}

double bohachevsky3(const Vec& x) {
  return x[0] * x[0] + 2 * x[1] * x[1] - 0.3 * std::cos(3 * kPi * x[0] + 4 * kPi * x[1]) + 0.3;
}

double booth(const Vec& x) { return sq(x[0] + 2 * x[1] - 7) + sq(2 * x[0] + x[1] - 5); }

double branin(const Vec& x) {
  const double b = 5.1 / (4 * kPi * kPi), c = 5 / kPi, t = 1 / (8 * kPi);
  return sq(x[1] - b * x[0] * x[0] + c * x[0] - 6) + 10 * (1 - t) * std::cos(x[0]) + 10;
}

double bukin6(const Vec& x) {
  return 100 * std::sqrt(std::abs(x[1] - 0.01 * x[0] * x[0])) + 0.01 * std::abs(x[0] + 10);
}

double colville(const Vec& x) {
  return 100 * sq(x[0] * x[0] - x[1]) + sq(x[0] - 1) + sq(x[2] - 1) + 90 * sq(x[2] * x[2] - x[3]) +
         10.1 * (sq(x[1] - 1) + sq(x[3] - 1)) + 19.8 * (x[1] - 1) * (x[3] - 1);
}

double cross_in_tray(const Vec& x) {
  const double g = std::sin(x[0]) * std::sin(x[1]) * std::exp(std::abs(100 - x.norm() / kPi));
  return -1e-4 * std::pow(std::abs(g) + 1, 0.1);
}

double crosslegtable(const Vec& x) {
  const double g = std::sin(x[0]) * std::sin(x[1]) * std::exp(std::abs(100 - x.norm() / kPi));
  return -1.0 / std::pow(std::abs(g) + 1, 0.1);
}

double csendes(const Vec& x) {
  double s = 0;
  for (double v : x) {
    if (v != 0.0) s += std::pow(v, 6) * (2 + std::sin(1 / v));
  }
  return s;
}

double damavandi(const Vec& x) {
  auto sinc = [](double t) { return t == 0.0 ? 1.0 : std::sin(kPi * t) / (kPi * t); };
  const double s = std::abs(sinc(x[0] - 2) * sinc(x[1] - 2));
  return (1 - std::pow(s, 5)) * (2 + sq(x[0] - 7) + 2 * sq(x[1] - 7));
}

double deb01(const Vec& x) {
  double s = 0;
  for (double v : x) s += std::pow(std::sin(5 * kPi * v), 6);
  return -s / static_cast<double>(x.size());
}

// Offset inside the sine of the second Deb function; with 0.1 both cube
// vertices 0 and 1 are global minimizers.
constexpr double kDeb02Offset = 0.1;

double deb02(const Vec& x) {
  double s = 0;
  for (double v : x) s += std::pow(std::sin(5 * kPi * (std::pow(v, 0.75) - kDeb02Offset)), 6);
  return -s / static_cast<double>(x.size());
}

double dixon_price(const Vec& x) {
  double s = sq(x[0] - 1);
  for (Eigen::Index i = 1; i < x.size(); ++i) s += static_cast<double>(i + 1) * sq(2 * x[i] * x[i] - x[i - 1]);
  return s;
}

double drop_wave(const Vec& x) {
  const double r2 = x.squaredNorm();
  return -(1 + std::cos(12 * std::sqrt(r2))) / (0.5 * r2 + 2);
}

double easom(const Vec& x) {
  return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-(sq(x[0] - kPi) + sq(x[1] - kPi)));
}

double eggholder(const Vec& x) {
  const double a = x[0], b = x[1] + 47;
  return -b * std::sin(std::sqrt(std::abs(b + a / 2))) - a * std::sin(std::sqrt(std::abs(a - b)));
}

double goldstein_price(const Vec& x) {
  const double a = x[0], b = x[1];
  const double t1 = 1 + sq(a + b + 1) * (19 - 14 * a + 3 * a * a - 14 * b + 6 * a * b + 3 * b * b);
  const double t2 = 30 + sq(2 * a - 3 * b) * (18 - 32 * a + 12 * a * a + 48 * b - 36 * a * b + 27 * b * b);
  return t1 * t2;
}

double griewank(const Vec& x) {
  double s = 0, p = 1;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s / 4000 - p + 1;
}

constexpr std::array<double, 4> kHartmanC{1.0, 1.2, 3.0, 3.2};

double hartman3(const Vec& x) {
  static const double a[4][3] = {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
  static const double p[4][3] = {{0.3689, 0.1170, 0.2673},
                                 {0.4699, 0.4387, 0.7470},
                                 {0.1091, 0.8732, 0.5547},
                                 {0.0381, 0.5743, 0.8828}};
  double s = 0;
  for (int i = 0; i < 4; ++i) {
    double e = 0;
    for (int j = 0; j < 3; ++j) e += a[i][j] * sq(x[j] - p[i][j]);
    s += kHartmanC[i] * std::exp(-e);
  }
  return -s;
}

double hartman6(const Vec& x) {
  static const double a[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                 {0.05, 10, 17, 0.1, 8, 14},
                                 {3, 3.5, 1.7, 10, 17, 8},
                                 {17, 8, 0.05, 10, 0.1, 14}};
  static const double p[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                 {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                 {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
                                 {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
  double s = 0;
  for (int i = 0; i < 4; ++i) {
    double e = 0;
    for (int j = 0; j < 6; ++j) e += a[i][j] * sq(x[j] - p[i][j]);
    s += kHartmanC[i] * std::exp(-e);
  }
  return -s;
}

double holder_table(const Vec& x) {
  return -std::abs(std::sin(x[0]) * std::cos(x[1]) * std::exp(std::abs(1 - x.norm() / kPi)));
}

double hump(const Vec& x) {
  const double a = x[0], b = x[1];
  return (4 - 2.1 * a * a + a * a * a * a / 3) * a * a + a * b + (-4 + 4 * b * b) * b * b;
}

double langermann(const Vec& x) {
  static const double a[5][2] = {{3, 5}, {5, 2}, {2, 1}, {1, 4}, {7, 9}};
  static const double c[5] = {1, 2, 5, 2, 3};
  double s = 0;
  for (int i = 0; i < 5; ++i) {
    const double d = sq(x[0] - a[i][0]) + sq(x[1] - a[i][1]);
    s += c[i] * std::exp(-d / kPi) * std::cos(kPi * d);
  }
  return s;
}

double levy(const Vec& x) {
  const Eigen::Index n = x.size();
  auto w = [&](Eigen::Index i) { return 1 + (x[i] - 1) / 4; };
  double s = sq(std::sin(kPi * w(0)));
  for (Eigen::Index i = 0; i + 1 < n; ++i) s += sq(w(i) - 1) * (1 + 10 * sq(std::sin(kPi * w(i) + 1)));
  s += sq(w(n - 1) - 1) * (1 + sq(std::sin(2 * kPi * w(n - 1))));
  return s;
}

double matyas(const Vec& x) { return 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1]; }

double mccormick(const Vec& x) {
  return std::sin(x[0] + x[1]) + sq(x[0] - x[1]) - 1.5 * x[0] + 2.5 * x[1] + 1;
}

double michalewicz(const Vec& x) {
  double s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += std::sin(x[i]) * std::pow(std::sin(static_cast<double>(i + 1) * x[i] * x[i] / kPi), 20);
  }
  return -s;
}

double permdb(const Vec& x) {
  constexpr double beta = 0.5;
  const Eigen::Index n = x.size();
  double s = 0;
  for (Eigen::Index k = 1; k <= n; ++k) {
    double inner = 0;
    for (Eigen::Index j = 1; j <= n; ++j) {
      const double jd = static_cast<double>(j), kd = static_cast<double>(k);
      inner += (std::pow(jd, kd) + beta) * (std::pow(x[j - 1] / jd, kd) - 1);
    }
    s += inner * inner;
  }
  return s;
}

double pinter(const Vec& x) {
  const Eigen::Index n = x.size();
  double s = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double i = static_cast<double>(k + 1);
    const double prev = x[(k + n - 1) % n], next = x[(k + 1) % n];
    const double a = prev * std::sin(x[k]) + std::sin(next);
    const double b = prev * prev - 2 * x[k] + 3 * next - std::cos(x[k]) + 1;
    s += i * x[k] * x[k] + 20 * i * sq(std::sin(a)) + i * std::log10(1 + i * b * b);
  }
  return s;
}

double powell(const Vec& x) {
  double s = 0;
  for (Eigen::Index k = 0; k + 3 < x.size(); k += 4) {
    s += sq(x[k] + 10 * x[k + 1]) + 5 * sq(x[k + 2] - x[k + 3]) + std::pow(x[k + 1] - 2 * x[k + 2], 4) +
         10 * std::pow(x[k] - x[k + 3], 4);
  }
  return s;
}

double power_sum(const Vec& x) {
  static const double b[4] = {8, 18, 44, 114};
  double s = 0;
  for (int k = 1; k <= 4; ++k) s += sq((x.array().pow(static_cast<double>(k))).sum() - b[k - 1]);
  return s;
}

double qing(const Vec& x) {
  double s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += sq(x[i] * x[i] - static_cast<double>(i + 1));
  return s;
}

double rastrigin(const Vec& x) {
  return 10.0 * static_cast<double>(x.size()) + (x.array().square() - 10 * (2 * kPi * x.array()).cos()).sum();
}

double rosenbrock(const Vec& x) {
  double s = 0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) s += 100 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1);
  return s;
}

double rotated_ellipsoid(const Vec& x) {
  double s = 0, partial = 0;
  for (double v : x) {
    partial += v * v;
    s += partial;
  }
  return s;
}

constexpr double kSchwefelShift = 418.9828872724338;

double schwefel(const Vec& x) {
  double s = 0;
  for (double v : x) s += v * std::sin(std::sqrt(std::abs(v)));
  return kSchwefelShift * static_cast<double>(x.size()) - s;
}

double shekel(const Vec& x, int m) {
  static const double c[4][10] = {{4, 1, 8, 6, 3, 2, 5, 8, 6, 7},
                                  {4, 1, 8, 6, 7, 9, 3, 1, 2, 3.6},
                                  {4, 1, 8, 6, 3, 2, 5, 8, 6, 7},
                                  {4, 1, 8, 6, 7, 9, 3, 1, 2, 3.6}};
  static const double beta[10] = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
  double s = 0;
  for (int i = 0; i < m; ++i) {
    double d = beta[i];
    for (int j = 0; j < 4; ++j) d += sq(x[j] - c[j][i]);
    s += 1 / d;
  }
  return -s;
}

double shubert(const Vec& x) {
  double p = 1;
  for (int i = 0; i < 2; ++i) {
    double s = 0;
    for (int j = 1; j <= 5; ++j) s += j * std::cos((j + 1) * x[i] + j);
    p *= s;
  }
  return p;
}

double sphere(const Vec& x) { return x.squaredNorm(); }

double styblinski_tang(const Vec& x) {
  return 0.5 * (x.array().pow(4) - 16 * x.array().square() + 5 * x.array()).sum();
}

double sum_of_powers(const Vec& x) {
  double s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]), static_cast<double>(i + 2));
  return s;
}

double sum_squares(const Vec& x) {
  double s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * x[i] * x[i];
  return s;
}

double trefethen(const Vec& x) {
  const double a = x[0], b = x[1];
  return std::exp(std::sin(50 * a)) + std::sin(60 * std::exp(b)) + std::sin(70 * std::sin(a)) +
         std::sin(std::sin(80 * b)) - std::sin(10 * (a + b)) + (a * a + b * b) / 4;
}

double trid(const Vec& x) {
  double s = sq(x[0] - 1);
  for (Eigen::Index i = 1; i < x.size(); ++i) s += sq(x[i] - 1) - x[i] * x[i - 1];
  return s;
}

double vincent(const Vec& x) { return -(10 * x.array().log()).sin().sum(); }

double zakharov(const Vec& x) {
  double s1 = 0, s2 = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s1 += x[i] * x[i];
    s2 += 0.5 * static_cast<double>(i + 1) * x[i];
  }
  return s1 + s2 * s2 + s2 * s2 * s2 * s2;
}

// ---- families --------------------------------------------------------------

struct Family {
  std::string name;
  std::vector<int> roster_dims;
  std::function<bool(int)> supports;
  std::function<Problem(int)> build;
};

std::function<bool(int)> fixed(int n) {
  return [n](int m) { return m == n; };
}
std::function<bool(int)> any_from(int lo) {
  return [lo](int m) { return m >= lo; };
}

Problem base(std::string name, int n, double (*f)(const Vec&), Domain d, Convexity c, Modality m) {
  Problem p;
  p.name = std::move(name);
  p.n = n;
  p.f = f;
  p.domain = d;
  p.perturbed_domain = d;
  p.convexity = c;
  p.modality = m;
  return p;
}

Problem with(Problem p, std::optional<Domain> perturbed, double f_star, std::optional<Vec> x_star) {
  if (perturbed) p.perturbed_domain = *perturbed;
  p.f_star = f_star;
  p.x_star = std::move(x_star);
  return p;
}

constexpr auto C = Convexity::Convex;
constexpr auto NC = Convexity::NonConvex;
constexpr auto U = Modality::UniModal;
constexpr auto M = Modality::MultiModal;

const std::vector<Family>& families() {
  static const std::vector<Family> table = [] {
    std::vector<Family> t;
    const std::vector<int> d2510{2, 5, 10};
    auto add = [&](std::string name, std::vector<int> dims, std::function<bool(int)> ok,
                   std::function<Problem(int)> build) {
      t.push_back({std::move(name), std::move(dims), std::move(ok), std::move(build)});
    };

    add("Ackley", d2510, any_from(1), [](int n) {
      return with(base("Ackley", n, ackley, cube(n, -15, 35), NC, M), cube(n, -18, 47), 0.0, Vec::Zero(n));
    });
    add("Alpine", d2510, any_from(1), [](int n) {
      const double xs = 7.917052686515451;
      return with(base("Alpine", n, alpine, cube(n, 0, 10), NC, M),
                  box(n, [](int i) { return root_i(2, i); }, [](int i) { return 8 + root_i(2, i); }),
                  -std::pow(2.8081311800070052, n), Vec::Constant(n, xs));
    });
    add("Beale", {2}, fixed(2), [](int n) {
      return with(base("Beale", n, beale, cube(n, -4.5, 4.5), NC, M), {}, 0.0, Vec{{3.0, 0.5}});
    });
    add("Bohachevsky1", {2}, fixed(2), [](int n) {
      return with(base("Bohachevsky1", n, bohachevsky1, cube(n, -100, 110), C, U), cube(n, -55, 145), 0.0,
                  Vec::Zero(n));
    });
    add("Bohachevsky2", {2}, fixed(2), [](int n) {
      return with(base("Bohachevsky2", n, bohachevsky2, cube(n, -100, 110), NC, M), cube(n, -55, 145), 0.0,
                  Vec::Zero(n));
    });
    add("Bohachevsky3", {2}, fixed(2), [](int n) {
      return with(base("Bohachevsky3", n, bohachevsky3, cube(n, -100, 110), NC, M), cube(n, -55, 145), 0.0,
                  Vec::Zero(n));
    });
    add("Booth", {2}, fixed(2), [](int n) {
      return with(base("Booth", n, booth, cube(n, -10, 10), C, U), {}, 0.0, Vec{{1.0, 3.0}});
    });
    add("Branin", {2}, fixed(2), [](int n) {
      return with(base("Branin", n, branin, box2(-5, 10, 0, 15), NC, M), {}, 5.0 / (4.0 * kPi),
                  Vec{{kPi, 2.275}});
    });
    add("Bukin6", {2}, fixed(2), [](int n) {
      return with(base("Bukin6", n, bukin6, box2(-15, 5, -3, 3), C, M), {}, 0.0, Vec{{-10.0, 1.0}});
    });
    add("Colville", {4}, fixed(4), [](int n) {
      return with(base("Colville", n, colville, cube(n, -10, 10), NC, M), {}, 0.0, Vec::Ones(n));
    });
    add("Cross_in_Tray", {2}, fixed(2), [](int n) {
      return with(base("Cross_in_Tray", n, cross_in_tray, cube(n, 0, 10), NC, M), {}, -2.0626118708227397,
                  Vec::Constant(n, 1.349406608602084));
    });
    add("Crosslegtable", {2}, fixed(2), [](int n) {
      return with(base("Crosslegtable", n, crosslegtable, cube(n, -10, 15), NC, M), {}, -1.0, Vec::Zero(n));
    });
    add("Csendes", d2510, any_from(1), [](int n) {
      return with(base("Csendes", n, csendes, cube(n, -10, 21), C, M), cube(n, -10, 25), 0.0, Vec::Zero(n));
    });
    add("Damavandi", {2}, fixed(2), [](int n) {
      return with(base("Damavandi", n, damavandi, cube(n, 0, 14), NC, M), {}, 0.0, Vec::Constant(n, 2.0));
    });
    add("Deb01", d2510, any_from(1), [](int n) {
      return with(base("Deb01", n, deb01, cube(n, -1, 1), NC, M), cube(n, -0.55, 1.45), -1.0,
                  Vec::Constant(n, 0.1));
    });
    add("Deb02", d2510, any_from(1), [](int n) {
      return with(base("Deb02", n, deb02, cube(n, 0, 1), NC, M), cube(n, 0.225, 1.225), -1.0, std::nullopt);
    });
    add("Dixon_and_Price", d2510, any_from(1), [](int n) {
      Vec xs(n);
      for (int i = 1; i <= n; ++i) xs[i - 1] = std::pow(2.0, -(std::pow(2.0, i) - 2) / std::pow(2.0, i));
      Problem p = with(base("Dixon_and_Price", n, dixon_price, cube(n, -10, 10), C, M), {}, 0.0, xs);
      if (n == 5) {
        // Each step moves one more minimizer coordinate onto a bound,
        // alternating upper and lower.
        p.boundary_chain = {{-19, xs[0]}, {xs[1], 21}, {-19, xs[2]}, {xs[3], 21}, {-19, xs[4]}};
      }
      return p;
    });
    add("Drop_wave", {2}, fixed(2), [](int n) {
      return with(base("Drop_wave", n, drop_wave, cube(n, -5.12, 6.12), NC, M), cube(n, -4, 6), -1.0,
                  Vec::Zero(n));
    });
    add("Easom", {2}, fixed(2), [](int n) {
      return with(base("Easom", n, easom, cube(n, -100, 100), NC, M),
                  box(n, [](int i) { return -100.0 / (i + 1); }, [](int i) { return 100.0 * i; }), -1.0,
                  Vec::Constant(n, kPi));
    });
    add("Eggholder", {2}, fixed(2), [](int n) {
      return with(base("Eggholder", n, eggholder, cube(n, -512, 512), NC, M), {}, -959.6406627208041,
                  Vec{{512.0, 404.2317986996423}});
    });
    add("Goldstein_and_Price", {2}, fixed(2), [](int n) {
      return with(base("Goldstein_and_Price", n, goldstein_price, cube(n, -2, 2), NC, M), cube(n, -1.1, 2.9), 3.0,
                  Vec{{0.0, -1.0}});
    });
    add("Griewank", d2510, any_from(1), [](int n) {
      return with(base("Griewank", n, griewank, cube(n, -600, 700), NC, M),
                  box(n, [](int i) { return -std::sqrt(600.0 * i); }, [](int i) { return 600.0 / std::sqrt(i); }),
                  0.0, Vec::Zero(n));
    });
    add("Hartman3", {3}, fixed(3), [](int n) {
      return with(base("Hartman3", n, hartman3, cube(n, 0, 1), NC, M), {}, -3.8627797873326624,
                  Vec{{0.11458886393366602, 0.5556488938279182, 0.8525469828917507}});
    });
    add("Hartman6", {6}, fixed(6), [](int n) {
      return with(base("Hartman6", n, hartman6, cube(n, 0, 1), NC, M), {}, -3.322368011415514,
                  Vec{{0.20168950725118004, 0.1500106893892869, 0.4768739742753169, 0.27533242839143834,
                       0.31165161679374564, 0.6573005288140765}});
    });
    add("Holder_Table", {2}, fixed(2), [](int n) {
      return with(base("Holder_Table", n, holder_table, cube(n, -10, 10), NC, M), {}, -19.208502567886743,
                  Vec{{8.055023457759134, 9.664590005599322}});
    });
    add("Hump", {2}, fixed(2), [](int n) {
      return with(base("Hump", n, hump, cube(n, -5, 5), NC, M), {}, -1.0316284534898774,
                  Vec{{0.08984200893527233, -0.712656403019058}});
    });
    add("Langermann", {2}, fixed(2), [](int n) {
      return with(base("Langermann", n, langermann, cube(n, 0, 10), NC, M), {}, -4.155809291847786,
                  Vec{{2.793402207578141, 1.597232500122663}});
    });
    add("Levy", d2510, any_from(1), [](int n) {
      Problem p = with(base("Levy", n, levy, cube(n, -5, 5), NC, M), {}, 0.0, Vec::Ones(n));
      if (n == 10) {
        p.boundary_chain = {{-5, 1}, {1, 5}, {-10, 1}, {1, 10}, {-2, 1}, {1, 4}, {-7, 1}, {1, 15}, {-13, 1}, {1, 10}};
      }
      return p;
    });
    add("Matyas", {2}, fixed(2), [](int n) {
      return with(base("Matyas", n, matyas, cube(n, -10, 15), C, U), cube(n, -5.5, 14.5), 0.0, Vec::Zero(n));
    });
    add("McCormick", {2}, fixed(2), [](int n) {
      return with(base("McCormick", n, mccormick, box2(-1.5, 4, -3, 4), C, M), {}, -1.9132229549810367,
                  Vec{{-0.5471975511965976, -1.5471975511965976}});
    });
    add("Michalewicz", d2510, any_from(1), [](int n) {
      static const double xs[10] = {2.202905526196856,  1.5707963273848946, 1.2849915687773616, 1.9230584708362486,
                                    1.7204697733388188, 1.5707963275270833, 1.4544139708709136, 1.7560865213052594,
                                    1.6557174168851578, 1.5707963271656746};
      Problem p = base("Michalewicz", n, michalewicz, cube(n, 0, kPi), NC, M);
      if (n == 2) return with(p, {}, -1.8013034100985532, Vec{{xs[0], xs[1]}});
      if (n == 5) return with(p, {}, -4.687658179088148, Vec(Eigen::Map<const Vec>(xs, 5)));
      if (n == 10) return with(p, {}, -9.660151715641344, Vec(Eigen::Map<const Vec>(xs, 10)));
      return p;
    });
    add("Permdb4", {4}, any_from(1), [](int n) {
      return with(base("Permdb4", n, permdb, cube(n, -n, n), NC, M), {}, 0.0,
                  Vec::LinSpaced(n, 1.0, static_cast<double>(n)));
    });
    add("Pinter", d2510, any_from(2), [](int n) {
      return with(base("Pinter", n, pinter, cube(n, -10, 10), NC, M), cube(n, -5.5, 14.5), 0.0, Vec::Zero(n));
    });
    add("Powell", {4}, [](int m) { return m > 0 && m % 4 == 0; }, [](int n) {
      return with(base("Powell", n, powell, cube(n, -4, 5), C, M), {}, 0.0, Vec::Zero(n));
    });
    add("Power_Sum", {4}, fixed(4), [](int n) {
      return with(base("Power_Sum", n, power_sum, cube(n, 0, 4), C, M),
                  box(n, [](int) { return 1.0; }, [](int i) { return 4 + root_i(2, i); }), 0.0,
                  Vec{{1.0, 2.0, 2.0, 3.0}});
    });
    add("Qing", d2510, any_from(1), [](int n) {
      Vec xs(n);
      for (int i = 1; i <= n; ++i) xs[i - 1] = std::sqrt(static_cast<double>(i));
      return with(base("Qing", n, qing, cube(n, -500, 500), NC, M), {}, 0.0, xs);
    });
    add("Rastrigin", d2510, any_from(1), [](int n) {
      return with(base("Rastrigin", n, rastrigin, cube(n, -6.12, 5.12), NC, M),
                  box(n, [](int i) { return -5 * root_i(2, i); }, [](int i) { return 7 + root_i(2, i); }), 0.0,
                  Vec::Zero(n));
    });
    add("Rosenbrock", d2510, any_from(2), [](int n) {
      return with(base("Rosenbrock", n, rosenbrock, cube(n, -5, 10), NC, U),
                  box(n, [](int i) { return -5 / std::sqrt(i); }, [](int i) { return 10 * std::sqrt(i); }), 0.0,
                  Vec::Ones(n));
    });
    add("Rotated_H_Ellip", d2510, any_from(1), [](int n) {
      return with(base("Rotated_H_Ellip", n, rotated_ellipsoid, cube(n, -65.536, 66.536), C, U), cube(n, -35, 96),
                  0.0, Vec::Zero(n));
    });
    add("Schwefel", d2510, any_from(1), [](int n) {
      return with(base("Schwefel", n, schwefel, cube(n, -500, 500), NC, M),
                  box(n, [](int i) { return -500 + 100 / std::sqrt(i); }, [](int i) { return 500 - 40 / std::sqrt(i); }),
                  0.0, Vec::Constant(n, 420.96874603892866));
    });
    add("Shekel5", {4}, fixed(4), [](int n) {
      return with(base("Shekel5", n, [](const Vec& x) { return shekel(x, 5); }, cube(n, 0, 10), NC, M), {},
                  -10.153199679058227,
                  Vec{{4.000037152834448, 4.00013327529068, 4.000037152606513, 4.000133274587558}});
    });
    add("Shekel7", {4}, fixed(4), [](int n) {
      return with(base("Shekel7", n, [](const Vec& x) { return shekel(x, 7); }, cube(n, 0, 10), NC, M), {},
                  -10.402915336777745,
                  Vec{{4.000572819262806, 3.9996062087346966, 4.000572820931518, 3.9996062086894426}});
    });
    add("Shekel10", {4}, fixed(4), [](int n) {
      return with(base("Shekel10", n, [](const Vec& x) { return shekel(x, 10); }, cube(n, 0, 10), NC, M), {},
                  -10.536443153483527,
                  Vec{{4.000746863039923, 3.9995094778742266, 4.000746863890597, 3.9995094778769897}});
    });
    add("Shubert", {2}, fixed(2), [](int n) {
      return with(base("Shubert", n, shubert, cube(n, -10, 10), NC, M), {}, -186.73090883102392,
                  Vec{{-7.083506406576803, 4.858056877836853}});
    });
    add("Sphere", d2510, any_from(1), [](int n) {
      return with(base("Sphere", n, sphere, cube(n, -5.12, 6.12), C, U), cube(n, -2.75, 7.25), 0.0, Vec::Zero(n));
    });
    add("Styblinski_Tang", d2510, any_from(1), [](int n) {
      return with(base("Styblinski_Tang", n, styblinski_tang, cube(n, -5, 5), NC, M),
                  box(n, [](int) { return -5.0; }, [](int i) { return 5 + root_i(3, i); }),
                  -39.166165703771426 * n, Vec::Constant(n, -2.903534019679525));
    });
    add("Sum_of_Powers", d2510, any_from(1), [](int n) {
      return with(base("Sum_of_Powers", n, sum_of_powers, cube(n, -1, 2.5), C, U), cube(n, -0.55, 1.45), 0.0,
                  Vec::Zero(n));
    });
    add("Sum_Square", d2510, any_from(1), [](int n) {
      return with(base("Sum_Square", n, sum_squares, cube(n, -10, 15), C, U), cube(n, -5.5, 14.5), 0.0,
                  Vec::Zero(n));
    });
    add("Trefethen", {2}, fixed(2), [](int n) {
      return with(base("Trefethen", n, trefethen, cube(n, -2, 2), NC, M), {}, -3.3068686474752407,
                  Vec{{-0.024403079770565408, 0.21061242709566716}});
    });
    add("Trid", d2510, any_from(1), [](int n) {
      const double nd = n;
      Vec xs(n);
      for (int i = 1; i <= n; ++i) xs[i - 1] = i * (nd + 1 - i);
      const double theta = -nd * nd * nd / 6 - nd * nd / 2 + 2 * nd / 3;
      return with(base("Trid", n, trid, cube(n, -100, 100), C, M), {}, theta, xs);
    });
    add("Vincent", d2510, any_from(1), [](int n) {
      return with(base("Vincent", n, vincent, cube(n, 0.25, 10), NC, M), {}, -static_cast<double>(n),
                  Vec::Constant(n, std::exp(0.65 * kPi)));
    });
    add("Zakharov", d2510, any_from(1), [](int n) {
      return with(base("Zakharov", n, zakharov, cube(n, -5, 11), C, M), cube(n, -1.625, 13.375), 0.0, Vec::Zero(n));
    });
    return t;
  }();
  return table;
}

const Family& family(std::string_view name) {
  for (const auto& f : families()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown problem: " + std::string(name));
}

std::string join(const Vec& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += format_real(v[i]);
  }
  return s;
}

const std::set<std::string>& known_tags() {
  static const std::set<std::string> tags{"n<=4", "n>4", "convex", "non-convex", "uni-modal", "multi-modal"};
  return tags;
}

}  // namespace

std::string_view convexity_name(Convexity c) { return c == Convexity::Convex ? "convex" : "non-convex"; }
std::string_view modality_name(Modality m) { return m == Modality::UniModal ? "uni-modal" : "multi-modal"; }

std::string DomainVariant::name() const {
  switch (kind) {
    case DomainKind::Default: return "default";
    case DomainKind::Perturbed: return "perturbed";
    case DomainKind::Boundary: return "boundary:" + std::to_string(nu);
  }
  return "?";
}

DomainVariant DomainVariant::parse(std::string_view text) {
  if (text == "default") return standard();
  if (text == "perturbed") return perturbed();
  constexpr std::string_view prefix = "boundary:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string rest(text.substr(prefix.size()));
    std::size_t used = 0;
    int nu = -1;
    try {
      nu = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == rest.size() && !rest.empty() && nu >= 0) return boundary(nu);
  }
  throw std::invalid_argument("unknown domain variant: " + std::string(text));
}

std::string Problem::id() const { return name + "-" + std::to_string(n); }

double evaluate(const Problem& problem, const Eigen::VectorXd& x, const Domain& domain) {
  if (!domain.contains(x, 1e-12)) {
    std::ostringstream os;
    os << problem.id() << ": point [" << x.transpose() << "] lies outside the domain";
    throw std::invalid_argument(os.str());
  }
  return problem.f(x);
}

double evaluate(const Problem& problem, const Eigen::VectorXd& x) { return evaluate(problem, x, problem.domain); }

Domain domain_of(const Problem& problem, const DomainVariant& variant) {
  switch (variant.kind) {
    case DomainKind::Default: return problem.domain;
    case DomainKind::Perturbed: return problem.perturbed_domain;
    case DomainKind::Boundary: {
      const auto& chain = problem.boundary_chain;
      if (chain.empty()) throw std::invalid_argument(problem.id() + " has no boundary variants");
      if (variant.nu < 0 || variant.nu > static_cast<int>(chain.size())) {
        throw std::invalid_argument(problem.id() + ": boundary count out of range");
      }
      Domain d = problem.domain;
      for (int j = 0; j < variant.nu; ++j) {
        d.lower[j] = chain[j].first;
        d.upper[j] = chain[j].second;
      }
      return Domain(d.lower, d.upper);
    }
  }
  throw std::invalid_argument("unknown domain variant");
}

Objective bind(const Problem& problem, const DomainVariant& variant) {
  Objective o;
  o.domain = domain_of(problem, variant);
  o.f = [problem, d = o.domain](const Eigen::VectorXd& x) { return evaluate(problem, x, d); };
  o.f_star = problem.f_star;
  if (problem.x_star && o.domain.contains(*problem.x_star)) o.x_star = problem.x_star;
  return o;
}

std::vector<std::string> problem_names() {
  std::vector<std::string> out;
  for (const auto& f : families()) out.push_back(f.name);
  return out;
}

Problem make_problem(std::string_view name, int n) {
  const Family& f = family(name);
  if (!f.supports(n)) {
    throw std::invalid_argument(std::string(name) + " is not defined for n = " + std::to_string(n));
  }
  return f.build(n);
}

std::vector<Problem> problems_by_name(std::string_view name) {
  for (const auto& f : families()) {
    if (f.name == name) {
      std::vector<Problem> out;
      for (int n : f.roster_dims) out.push_back(f.build(n));
      return out;
    }
  }
  const auto dash = name.rfind('-');
  if (dash != std::string_view::npos) {
    const std::string digits(name.substr(dash + 1));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return {make_problem(name.substr(0, dash), std::stoi(digits))};
    }
  }
  throw std::invalid_argument("unknown problem: " + std::string(name));
}

bool RosterFilter::matches(const Problem& p) const {
  for (const auto& t : tags) {
    if (t == "n<=4" && p.n > 4) return false;
    if (t == "n>4" && p.n <= 4) return false;
    if (t == "convex" && p.convexity != Convexity::Convex) return false;
    if (t == "non-convex" && p.convexity != Convexity::NonConvex) return false;
    if (t == "uni-modal" && p.modality != Modality::UniModal) return false;
    if (t == "multi-modal" && p.modality != Modality::MultiModal) return false;
  }
  if (names.empty()) return true;
  return std::any_of(names.begin(), names.end(), [&](const std::string& s) { return s == p.id() || s == p.name; });
}

void RosterFilter::validate() const {
  for (const auto& t : tags) {
    if (!known_tags().count(t)) throw std::invalid_argument("unknown problem tag: " + t);
  }
  for (const auto& n : names) problems_by_name(n);
}

std::vector<Problem> roster(const RosterFilter& filter) {
  filter.validate();
  std::vector<Problem> out;
  if (filter.names.empty()) {
    for (const auto& f : families()) {
      for (int n : f.roster_dims) {
        Problem p = f.build(n);
        if (filter.matches(p)) out.push_back(std::move(p));
      }
    }
    return out;
  }
  std::set<std::string> seen;
  for (const auto& name : filter.names) {
    for (auto& p : problems_by_name(name)) {
      if (filter.matches(p) && seen.insert(p.id()).second) out.push_back(std::move(p));
    }
  }
  return out;
}

void write_roster_csv(std::ostream& os, const std::vector<Problem>& problems) {
  os << "id,name,n,convexity,modality,f_star,lower,upper,perturbed_lower,perturbed_upper,x_star\n";
  for (const auto& p : problems) {
    os << p.id() << ',' << p.name << ',' << p.n << ',' << convexity_name(p.convexity) << ','
       << modality_name(p.modality) << ',' << (p.f_star ? format_real(*p.f_star) : "") << ','
       << join(p.domain.lower) << ',' << join(p.domain.upper) << ',' << join(p.perturbed_domain.lower) << ','
       << join(p.perturbed_domain.upper) << ',' << (p.x_star ? join(*p.x_star) : "") << '\n';
  }
}

}  // namespace direct

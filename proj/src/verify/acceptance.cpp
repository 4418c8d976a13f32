#include "verify/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "cq/errors.hpp"
#include "cq/gauge_circle.hpp"
#include "cq/induction.hpp"
#include "cq/lattice.hpp"
#include "cq/reduction.hpp"
#include "cq/sphere.hpp"
#include "cq/theta.hpp"

namespace cq::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

GroupPtr make(const char* name) { return std::make_shared<const FiniteGroup>(FiniteGroup::preset(name)); }

// Runtime limits are checked but never printed, so reports stay byte-stable.
class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::mt19937_64 stream(const Options& opt, int criterion) {
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(criterion)};
  return std::mt19937_64(seq);
}

// Smallest eigenvalue straight from Eigen, bypassing the library's solver wrapper.
double min_eigenvalue(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// Class index of every element, by brute-force conjugation.
std::vector<int> class_ids(const FiniteGroup& g) {
  std::vector<int> id(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (id[static_cast<std::size_t>(x)] >= 0) continue;
    for (int h = 0; h < g.order(); ++h) id[static_cast<std::size_t>(g.mul(g.mul(h, x), g.inverse(h)))] = next;
    ++next;
  }
  return id;
}

int count_of(const std::vector<int>& ids) { return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1; }

// ---------------------------------------------------------------------------

CriterionResult jordan_lie(const Options& opt) {
  CriterionResult r{1, "jordan-lie-identity", false, ""};
  Timer t;
  auto rng = stream(opt, 1);
  std::uniform_int_distribution<int> dim(2, 8);
  std::uniform_real_distribution<double> scale(0.5, 3.0);
  const double hbars[] = {0.1, 1.0, 2.0};
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = dim(rng);
    const double sa = scale(rng), sb = scale(rng), sc = scale(rng);
    const auto a = random_hermitian(n, rng, sa), b = random_hermitian(n, rng, sb), c = random_hermitian(n, rng, sc);
    const double hbar = hbars[trial % 3];
    // Direct evaluation: x o y = (xy + yx)/2, {x, y} = i(xy - yx)/hbar.
    const ComplexMatrix &A = a.matrix(), &B = b.matrix(), &C = c.matrix();
    auto o = [](const ComplexMatrix& x, const ComplexMatrix& y) -> ComplexMatrix { return 0.5 * (x * y + y * x); };
    auto br = [hbar](const ComplexMatrix& x, const ComplexMatrix& y) -> ComplexMatrix {
      return Complex(0, 1.0 / hbar) * (x * y - y * x);
    };
    const ComplexMatrix direct = o(o(A, B), C) - o(A, o(B, C)) - (hbar * hbar / 4.0) * br(br(A, C), B);
    const double lib = associator_defect(a, b, c, ScaledBracketContext(hbar));
    worst = std::max(worst, std::max(direct.norm(), lib) / (sa * sb * sc));
  }
  r.pass = worst <= 1e-10 && t.seconds() < 5.0;
  r.detail = "200 triples, max defect/scale " + sci(worst) + " (limit 1e-10)";
  return r;
}

CriterionResult strict_quantization(const Options&) {
  CriterionResult r{2, "strict-quantization", false, ""};
  Timer t;
  const std::vector<int> two_js = {4, 8, 16, 32, 64};
  std::vector<SpinLevel> levels;
  for (int tj : two_js) levels.emplace_back(tj);
  const auto nx = PolynomialObservable::coordinate(0), ny = PolynomialObservable::coordinate(1),
             nz = PolynomialObservable::coordinate(2);
  struct Pair {
    const char* name;
    PolynomialObservable f, g;
  };
  const std::vector<Pair> pairs = {{"(nx,ny)", nx, ny}, {"(nz,nx^2)", nz, nx * nx}};
  constexpr double kFloor = 1e-12;  // defects below this are rounding noise
  bool ok = true;
  double worst_ratio = 0.0, worst_norm = 0.0, max_dirac = 0.0;
  std::ostringstream notes;
  for (const auto& p : pairs) {
    const auto rows = strict_quantization_report(p.f, p.g, levels);
    bool dirac_ok = true, jordan_ok = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double d0 = rows[i - 1].dirac_defect, d1 = rows[i].dirac_defect;
      max_dirac = std::max({max_dirac, d0, d1});
      if (d0 > kFloor) {
        worst_ratio = std::max(worst_ratio, d1 / d0);
        dirac_ok = dirac_ok && d1 / d0 <= 0.6;
      } else {
        dirac_ok = dirac_ok && d1 <= kFloor;
      }
      const double j0 = rows[i - 1].jordan_defect, j1 = rows[i].jordan_defect;
      jordan_ok = jordan_ok && (j0 > kFloor ? j1 < j0 : j1 <= kFloor);
    }
    // ||Q(f)|| = j/(j+1) for f = nz and nx, so the norm defect is 1/(j+1).
    for (const auto& row : rows) {
      const double oracle = 1.0 / (0.5 * row.two_j + 1.0);
      worst_norm = std::max(worst_norm, std::abs(row.norm_defect - oracle));
    }
    notes << " " << p.name << " dirac " << (dirac_ok ? "ok" : "FAIL") << " jordan "
          << (jordan_ok ? "decreasing" : "FAIL") << " [" << sci(rows.front().jordan_defect) << " -> "
          << sci(rows.back().jordan_defect) << "];";
    ok = ok && dirac_ok && jordan_ok;
  }
  ok = ok && worst_norm <= 1e-10;
  r.pass = ok && t.seconds() < 60.0;
  r.detail = "2j in {4..64}, max dirac defect " + sci(max_dirac) + " (floor 1e-12), worst ratio " + sci(worst_ratio) + ", norm defect error " + sci(worst_norm) + ";" +
             notes.str();
  return r;
}

PolynomialObservable random_quadratic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  PolynomialObservable p = PolynomialObservable::constant(c(rng));
  for (int a = 0; a < 3; ++a) {
    p = p + PolynomialObservable::coordinate(a) * c(rng);
    for (int b = a; b < 3; ++b) p = p + PolynomialObservable::coordinate(a) * PolynomialObservable::coordinate(b) * c(rng);
  }
  return p;
}

CriterionResult identity_and_positivity(const Options& opt) {
  CriterionResult r{3, "resolution-of-identity-positivity", false, ""};
  auto rng = stream(opt, 3);
  double worst_identity = 0.0;
  const auto one = PolynomialObservable::constant(1.0);
  for (int tj = 1; tj <= 64; ++tj) {
    const SpinLevel level(tj);
    const ComplexMatrix q = quantize(level, one).matrix();
    worst_identity = std::max(worst_identity, (q - ComplexMatrix::Identity(level.dim(), level.dim())).norm());
  }
  double worst_min = 1e300;
  for (int i = 0; i < 20; ++i) {
    const auto p1 = random_quadratic(rng), p2 = random_quadratic(rng);
    const auto f = p1 * p1 + p2 * p2;  // nonnegative everywhere
    const SpinLevel level(1 + 3 * i);
    worst_min = std::min(worst_min, min_eigenvalue(quantize(level, f).matrix()));
  }
  r.pass = worst_identity <= 1e-10 && worst_min >= -1e-9;
  r.detail = "||Q(1)-I|| max " + sci(worst_identity) + " over 2j<=64; min eig over 20 sums of squares " + sci(worst_min);
  return r;
}

std::array<double, 3> random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  double v[3] = {g(rng), g(rng), g(rng)};
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

CriterionResult transition_limit(const Options& opt) {
  CriterionResult r{4, "transition-probability-limit", false, ""};
  auto rng = stream(opt, 4);
  double worst = 0.0;
  for (int pair = 0; pair < 100; ++pair) {
    const auto a = random_unit(rng), b = random_unit(rng);
    const SpherePoint pa(a[0], a[1], a[2]), pb(b[0], b[1], b[2]);
    const double cosg = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    for (int tj = 1; tj <= 64; ++tj) {
      const SpinLevel level(tj);
      const double p = transition_probability(coherent_state(level, pa), coherent_state(level, pb));
      worst = std::max(worst, std::abs(p - std::pow(0.5 * (1.0 + cosg), tj)));
    }
  }
  // Orthogonal directions: p = 2^{-2j}.
  const auto a = random_unit(rng);
  auto v = random_unit(rng);
  const double d = a[0] * v[0] + a[1] * v[1] + a[2] * v[2];
  for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] -= d * a[static_cast<std::size_t>(i)];
  const double vn = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  const SpherePoint pa(a[0], a[1], a[2]), pb(v[0] / vn, v[1] / vn, v[2] / vn);
  double worst_orth = 0.0;
  for (int tj = 14; tj <= 64; ++tj) {
    const SpinLevel level(tj);
    worst_orth = std::max(worst_orth, transition_probability(coherent_state(level, pa), coherent_state(level, pb)));
  }
  r.pass = worst <= 1e-10 && worst_orth < 0.01;
  r.detail = "100 pairs x 2j<=64 max error " + sci(worst) + "; max p at gamma=pi/2, 2j>=14: " + sci(worst_orth);
  return r;
}

RealMatrix gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  RealMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  return m;
}

CriterionResult reduction_vs_mw(const Options& opt) {
  CriterionResult r{5, "reduction-marsden-weinstein", false, ""};
  auto rng = stream(opt, 5);
  bool dims_ok = true;
  double worst_congruence = 0.0;
  int problems = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto j = LinearRealization::translations(n, gaussian(n, k, rng));
      const auto general = reduce(j, LinearRealization::point(k));
      const auto mw = marsden_weinstein(j);
      dims_ok = dims_ok && general.quotient_dim == 2 * (n - k) && mw.quotient_dim == 2 * (n - k);
      worst_congruence = std::max(worst_congruence, congruence_residual(general, mw));
      ++problems;
    }
  bool stages_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const int k1 = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const int k2 = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - k1));
    const RealMatrix d = gaussian(n, k1 + k2, rng);
    const auto direct = reduce(LinearRealization::translations(n, d), LinearRealization::point(k1 + k2));
    const auto first = reduce(LinearRealization::translations(n, d.leftCols(k1)), LinearRealization::point(k1));
    const auto second = reduce(descend(LinearRealization::translations(n, d.rightCols(k2)), first),
                               LinearRealization::point(k2));
    const auto staged = compose_stages(first, second);
    stages_ok = stages_ok && staged.quotient_dim == direct.quotient_dim && direct.quotient_dim == 2 * (n - k1 - k2);
  }
  r.pass = dims_ok && stages_ok && worst_congruence <= 1e-9;
  r.detail = std::to_string(problems) + " translation problems, dims " + (dims_ok ? "= 2(n-k)" : "WRONG") +
             ", congruence max " + sci(worst_congruence) + "; 20 staged problems " + (stages_ok ? "equal" : "DIFFER");
  return r;
}

CriterionResult lattice_gauss_law(const Options&) {
  CriterionResult r{6, "lattice-gauss-law", false, ""};
  bool ok = true;
  long long pairs = 0;
  std::ostringstream notes;
  for (const char* name : {"Z4", "S3", "Q8"}) {
    const auto g = make(name);
    const auto cls = class_ids(*g);
    notes << " " << name << ":";
    for (int links = 1; links <= 3; ++links) {
      const auto labels = gauge_orbit_labels(g, links);
      const auto configs = static_cast<std::int64_t>(labels.size());
      // Holonomy class of each configuration, multiplied out here.
      std::vector<int> hol(labels.size());
      for (std::int64_t c = 0; c < configs; ++c) {
        std::int64_t rest = c;
        int h = g->identity();
        for (int i = 0; i < links; ++i) {
          h = g->mul(h, static_cast<int>(rest % g->order()));
          rest /= g->order();
        }
        hol[static_cast<std::size_t>(c)] = cls[static_cast<std::size_t>(h)];
      }
      const bool count_ok = count_of(labels) == count_of(cls);
      bool pairs_ok = true;
      for (std::int64_t a = 0; a < configs; ++a)
        for (std::int64_t b = a + 1; b < configs; ++b) {
          const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
          pairs_ok = pairs_ok && ((labels[ua] == labels[ub]) == (hol[ua] == hol[ub]));
          ++pairs;
        }
      notes << " N=" << links << " " << count_of(labels) << "/" << count_of(cls);
      ok = ok && count_ok && pairs_ok;
    }
  }
  r.pass = ok;
  r.detail = "orbits/classes" + notes.str() + "; " + std::to_string(pairs) + " pairs checked exhaustively";
  return r;
}

CriterionResult induction_dimension(const Options& opt) {
  CriterionResult r{7, "induction-dimension-law", false, ""};
  auto rng = stream(opt, 7);
  const Tolerances tol = Tolerances{}.scaled(opt.tol_scale);
  bool dims_ok = true;
  double worst_iso = 0.0, worst_func = 0.0;
  int cases = 0;
  for (const char* name : {"Z4", "S3", "D4", "Q8"}) {
    const auto g = make(name);
    const auto u = regular_rep(g);
    for (const auto& rho : builtin_irreps(g)) {
      // (1/|G|) sum_x tr U(x) tr rho(x), from the matrices.
      Complex s = 0.0;
      for (int x = 0; x < g->order(); ++x) s += u(x).trace() * rho(x).trace();
      const auto oracle = static_cast<Eigen::Index>(std::llround(s.real() / g->order()));
      const auto ind = group_average_induction(u, rho, tol);
      dims_ok = dims_ok && ind.induced_dim == oracle && oracle == rho.dim();
      worst_iso = std::max(worst_iso, ind.isometry_residual(rng));
      auto avg = [&](const ComplexMatrix& h) {
        ComplexMatrix a = ComplexMatrix::Zero(u.dim(), u.dim());
        for (int x = 0; x < g->order(); ++x) a += u(x) * h * u(x).adjoint();
        return ComplexMatrix(a / static_cast<double>(g->order()));
      };
      const ComplexMatrix a = avg(random_hermitian(u.dim(), rng).matrix());
      const ComplexMatrix b = avg(random_hermitian(u.dim(), rng).matrix());
      const ComplexMatrix pa = ind.induce(a).matrix, pb = ind.induce(b).matrix;
      worst_func = std::max({worst_func, operator_norm(ind.induce(a * b).matrix - pa * pb),
                             operator_norm(ind.induce(a + 2.0 * b).matrix - pa - 2.0 * pb)});
      ++cases;
    }
  }
  r.pass = dims_ok && worst_iso <= 1e-10 && worst_func <= 1e-8;
  r.detail = std::to_string(cases) + " (group, irrep) cases, dims " + (dims_ok ? "match" : "MISMATCH") + ", isometry " +
             sci(worst_iso) + ", functoriality " + sci(worst_func);
  return r;
}

CriterionResult gauge_circle(const Options& opt) {
  CriterionResult r{8, "gauge-circle", false, ""};
  Timer t;
  const Tolerances tol = Tolerances{}.scaled(opt.tol_scale);
  const auto s3 = make("S3");
  const auto full = physical_space(LatticeGaugeModel::finite(s3, 3, false), tol);
  const auto based = physical_space(LatticeGaugeModel::finite(s3, 3, true), tol);
  const int classes = count_of(class_ids(*s3));
  const bool dims_ok = full.induction.induced_dim == classes && based.induction.induced_dim == s3->order();
  const double inter = std::max(full.intertwiner_residual, based.intertwiner_residual);

  const int cutoff = 3, links = 2;
  const auto u1 = physical_space(LatticeGaugeModel::u1(cutoff, links), tol);
  const auto e = induced_observable(u1, Observable{ObservableKind::electric, 0});
  std::vector<double> oracle;
  for (int k = -cutoff; k <= cutoff; ++k) oracle.push_back(double(links) * k * k);
  std::sort(oracle.begin(), oracle.end());
  double spec_err = u1.induction.induced_dim == 2 * cutoff + 1 ? 0.0 : 1e300;
  if (e.spectrum.size() == static_cast<Eigen::Index>(oracle.size()))
    for (Eigen::Index i = 0; i < e.spectrum.size(); ++i)
      spec_err = std::max(spec_err, std::abs(e.spectrum(i) - oracle[static_cast<std::size_t>(i)]));
  else
    spec_err = 1e300;
  r.pass = dims_ok && inter <= 1e-9 && spec_err <= 1e-9 && t.seconds() < 30.0;
  r.detail = "S3 N=3 full " + std::to_string(full.induction.induced_dim) + " based " +
             std::to_string(based.induction.induced_dim) + ", intertwiner " + sci(inter) + "; U(1) K=3 N=2 dim " +
             std::to_string(u1.induction.induced_dim) + ", electric spectrum error " + sci(spec_err);
  return r;
}

CriterionResult theta_sectors(const Options& opt) {
  CriterionResult r{9, "theta-sectors", false, ""};
  const Tolerances tol = Tolerances{}.scaled(opt.tol_scale);
  const int n = 8, m = 4, l = n * m;
  double worst = 0.0;
  std::vector<double> all;
  for (int k = 0; k < m; ++k) {
    const auto s = theta_sector({n, m, k}, tol);
    std::vector<double> oracle;
    for (int j = 0; j < n; ++j) oracle.push_back(2.0 - 2.0 * std::cos(2.0 * kPi * (k + m * j) / l));
    std::sort(oracle.begin(), oracle.end());
    if (s.spectrum.size() != n) return r.detail = "sector dimension wrong", r;
    for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(s.spectrum(j) - oracle[static_cast<std::size_t>(j)]));
    for (int j = 0; j < n; ++j) all.push_back(s.spectrum(j));
  }
  // Full ring: 2 - 2cos(2 pi p / L).
  std::vector<double> full;
  for (int p = 0; p < l; ++p) full.push_back(2.0 - 2.0 * std::cos(2.0 * kPi * p / l));
  std::sort(all.begin(), all.end());
  std::sort(full.begin(), full.end());
  double union_err = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i) union_err = std::max(union_err, std::abs(all[i] - full[i]));

  const auto u = theta_gauge_rep(n, m);
  const auto triv = group_average_induction(u, trivial_rep(u.group_ptr()), tol);
  const auto s0 = theta_sector({n, m, 0}, tol);
  const RealVector direct = eigenvalues(HermitianOperator(triv.induce(ring_laplacian(l)).matrix, 1e-9));
  const double k0_err = triv.induced_dim == s0.induction.induced_dim ? (direct - s0.spectrum).cwiseAbs().maxCoeff() : 1e300;

  const auto st = theta_stages_demo(true, 3, opt.seed);
  const bool stages_ok = st.equivalent && st.direct.induced_dim == st.stage2.induced_dim && st.spectral_mismatch <= 1e-9;
  r.pass = worst <= 1e-9 && union_err <= 1e-9 && k0_err <= 1e-9 && stages_ok;
  r.detail = "N=8 M=4 closed form " + sci(worst) + ", union " + sci(union_err) + ", k=0 vs trivial " + sci(k0_err) +
             "; D4/Z4 stages dims " + std::to_string(st.stage2.induced_dim) + "/" + std::to_string(st.direct.induced_dim) +
             " mismatch " + sci(st.spectral_mismatch);
  return r;
}

CriterionResult anomaly(const Options& opt) {
  CriterionResult r{10, "anomaly-detection", false, ""};
  Timer t;
  auto rng = stream(opt, 10);
  const auto pauli = pauli_projective_rep();
  const auto v = is_anomalous(pauli);
  const auto probe = anomalous_induction_probe(pauli, trivial_rep(pauli.group));
  const bool pauli_ok = v.anomalous && v.witness_pair.has_value() && std::abs(v.witness_value + 1.0) <= 1e-12 &&
                        probe.idempotency_defect > 0.1;

  bool genuine_ok = true, twists_ok = true;
  double worst_beta = 0.0;
  int genuine = 0, twisted = 0;
  std::uniform_int_distribution<int> pick(0, 3);
  for (const char* name : {"Z4", "S3", "Q8", "D4", "Z2xZ2"}) {
    const auto g = make(name);
    auto reps = builtin_irreps(g);
    reps.push_back(regular_rep(g));
    for (const auto& rho : reps) {
      const auto p = multiplier_of(g, rho.matrices());
      genuine_ok = genuine_ok && !is_anomalous(p).anomalous;
      ++genuine;
      std::vector<Complex> beta;
      for (int x = 0; x < g->order(); ++x) beta.push_back(x == g->identity() ? 1.0 : std::polar(1.0, kPi / 2 * pick(rng)));
      const auto tw = twist(p, beta);
      const auto tv = is_anomalous(tw);
      ++twisted;
      if (tv.anomalous || !tv.beta) {
        twists_ok = false;
        continue;
      }
      const Complex norm = tw.omega(g->identity(), g->identity());
      const auto& b = *tv.beta;
      for (int x = 0; x < g->order(); ++x)
        for (int y = 0; y < g->order(); ++y)
          worst_beta = std::max(worst_beta, std::abs(tw.omega(x, y) / norm -
                                                     b[static_cast<std::size_t>(x)] * b[static_cast<std::size_t>(y)] /
                                                         b[static_cast<std::size_t>(g->mul(x, y))]));
    }
  }
  twists_ok = twists_ok && worst_beta <= 1e-9;
  r.pass = pauli_ok && genuine_ok && twists_ok && t.seconds() < 10.0;
  r.detail = std::string("Pauli ") + (v.anomalous ? "anomalous" : "NOT anomalous") + " witness " +
             sci(v.witness_value.real()) + " ||P^2-P|| " + sci(probe.idempotency_defect) + "; " + std::to_string(genuine) +
             " genuine reps " + (genuine_ok ? "clean" : "FLAGGED") + "; " + std::to_string(twisted) + " twists, beta error " +
             sci(worst_beta);
  return r;
}

CriterionResult guarded(const std::function<CriterionResult(const Options&)>& f, int id, const char* name,
                        const Options& opt) {
  try {
    return f(opt);
  } catch (const std::exception& e) {
    return {id, name, false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

std::vector<CriterionResult> run_criteria(const Options& opt) {
  return {
      guarded(jordan_lie, 1, "jordan-lie-identity", opt),
      guarded(strict_quantization, 2, "strict-quantization", opt),
      guarded(identity_and_positivity, 3, "resolution-of-identity-positivity", opt),
      guarded(transition_limit, 4, "transition-probability-limit", opt),
      guarded(reduction_vs_mw, 5, "reduction-marsden-weinstein", opt),
      guarded(lattice_gauss_law, 6, "lattice-gauss-law", opt),
      guarded(induction_dimension, 7, "induction-dimension-law", opt),
      guarded(gauge_circle, 8, "gauge-circle", opt),
      guarded(theta_sectors, 9, "theta-sectors", opt),
      guarded(anomaly, 10, "anomaly-detection", opt),
  };
}

CriterionResult determinism(const Options& opt, const std::string& first_report) {
  const std::string second = render(run_criteria(opt));
  CriterionResult r{11, "determinism", first_report == second, ""};
  r.detail = r.pass ? "second in-process run byte-identical (" + std::to_string(second.size()) + " bytes)"
                    : "second in-process run differs";
  return r;
}

std::vector<CriterionResult> run_all(const Options& opt) {
  auto results = run_criteria(opt);
  results.push_back(determinism(opt, render(results)));
  return results;
}

std::string render(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& c : results)
    out << (c.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << c.detail << "\n";
  return out.str();
}

Json to_json(const std::vector<CriterionResult>& results) {
  Json list = Json::array();
  bool all = true;
  for (const auto& c : results) {
    list.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all = all && c.pass;
  }
  return Json{{"all_pass", all}, {"criteria", list}};
}

}  // namespace cq::verify

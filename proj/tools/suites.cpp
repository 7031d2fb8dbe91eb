#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <set>
#include <stdexcept>

#include "spinrep/dirac.hpp"
#include "spinrep/grassmann.hpp"
#include "spinrep/random.hpp"

namespace spinrep::cli {
namespace {

using clifford::CliffordAlgebra;

// Largest value seen and the inputs that produced it.
struct Worst {
  double value = 0.0;
  Json input;

  template <class F>
  void see(double r, F&& describe) {
    if (!(r <= value)) {  // also catches NaN
      value = r;
      input = describe();
    }
  }
};

// Smallest value seen, for checks with a lower bound.
struct Least {
  double value = std::numeric_limits<double>::infinity();
  Json input;

  template <class F>
  void see(double r, F&& describe) {
    if (!(r >= value)) {
      value = r;
      input = describe();
    }
  }
};

CheckRecord upper(const Worst& w, double threshold, int samples, std::string detail = {}) {
  CheckRecord c;
  c.residual = w.value;
  c.threshold = threshold;
  c.samples = samples;
  c.status = w.value < threshold ? Status::Pass : Status::Fail;
  if (c.status == Status::Fail) c.replay = w.input;
  c.detail = std::move(detail);
  return c;
}

CheckRecord lower(const Least& l, double threshold, int samples, std::string detail = {}) {
  CheckRecord c;
  c.residual = l.value;
  c.threshold = threshold;
  c.lower_bound = true;
  c.samples = samples;
  c.status = l.value > threshold ? Status::Pass : Status::Fail;
  if (c.status == Status::Fail) c.replay = l.input;
  c.detail = std::move(detail);
  return c;
}

// Structural checks: anything but an exact zero fails.
CheckRecord exact(const Worst& w, int samples) {
  CheckRecord c;
  c.residual = w.value;
  c.samples = samples;
  c.status = w.value == 0.0 ? Status::Pass : Status::Fail;
  if (c.status == Status::Fail) c.replay = w.input;
  c.detail = "exact";
  return c;
}

class SuiteRun {
 public:
  SuiteRun(std::string_view suite, const SuiteContext& ctx) : suite_(suite), ctx_(ctx) {}

  // Every check draws from its own stream so adding or reordering checks
  // leaves the others unchanged.
  template <class F>
  void check(std::string_view name, F&& body) {
    const std::string id = suite_ + "/" + std::string(name);
    Rng rng = Rng::derived(ctx_.seed, id);
    const auto start = std::chrono::steady_clock::now();
    CheckRecord rec;
    try {
      rec = body(rng);
    } catch (const std::exception& e) {
      rec = CheckRecord{};
      rec.status = Status::Fail;
      rec.detail = std::string("exception: ") + e.what();
    }
    rec.suite = suite_;
    rec.name = std::string(name);
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    records_.push_back(std::move(rec));
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  std::string suite_;
  const SuiteContext& ctx_;
  std::vector<CheckRecord> records_;
};

double rel(double err, double scale) { return err / std::max(1.0, scale); }

Json to_json(const Vec4c& v) {
  Json a = Json::array();
  for (int i = 0; i < kDim; ++i) a.push_back({v[i].real(), v[i].imag()});
  return a;
}

Json to_json(const Coeffs16& c) {
  Json a = Json::array();
  for (int i = 0; i < kBlades; ++i) a.push_back({c[i].real(), c[i].imag()});
  return a;
}

template <class Tag>
Json to_json(const BladeVector<Tag>& x) {
  return to_json(x.coeffs());
}

std::uint64_t child_seed(Rng& rng) {
  return static_cast<std::uint64_t>(rng.uniform(0.0, 9007199254740992.0));
}

// Coefficients of op applied to m. With g-orthogonal generators the Grassmann
// and Clifford blade bases coincide under Λ_C; otherwise the comparison goes
// through the symbol map of the algebra.
CliffordElement transport(const CliffordAlgebra& cl, const EndoOp& op, const CliffordElement& m) {
  if (cl.metric().is_diagonal()) return iso::to_clifford(apply_op(op, iso::to_grassmann(m)));
  const EndoOp& s = cl.symbol_matrix();
  return CliffordElement(s.partialPivLu().solve(op * (s * m.coeffs())));
}

const char* transport_note(const Metric& g) {
  return g.is_diagonal() ? "" : "compared through the symbol map (non-diagonal metric)";
}

// The exterior action reproduces conjugation only when the ordered gamma
// products coincide with their antisymmetrisations, i.e. for g-orthogonal
// generators. For other metrics the residual is reported, not judged.
CheckRecord orthogonal_only(CheckRecord c, const Metric& g) {
  if (g.is_diagonal()) return c;
  c.status = Status::Info;
  c.replay = nullptr;
  c.detail = "non-diagonal metric: ordered gamma products differ from wedge products, residual reported only";
  return c;
}

// ---------------------------------------------------------------------------

void grassmann_suite(SuiteRun& run, const SuiteContext& ctx) {
  const Metric& g = ctx.metric;
  const auto o = Orientation::Positive;

  run.check("anticommutator", [&](Rng& rng) {
    const int n = ctx.count(200);
    Worst w;
    auto probe = [&](const Metric& m) {
      std::array<EndoOp, kDim> gh;
      for (int mu = 0; mu < kDim; ++mu) gh[mu] = grassmann::gamma_op(mu, m);
      double worst = 0;
      for (int mu = 0; mu < kDim; ++mu) {
        for (int nu = 0; nu < kDim; ++nu) {
          const EndoOp ac = gh[mu] * gh[nu] + gh[nu] * gh[mu] - 2.0 * m(mu, nu) * EndoOp::Identity();
          worst = std::max(worst, max_abs(ac));
        }
      }
      w.see(worst, [&] { return Json{{"metric", cli::to_json(m.matrix())}}; });
    };
    probe(g);
    for (int i = 0; i < n; ++i) probe(sample::metric(rng));
    return upper(w, 1e-12, n + 1);
  });

  run.check("wedge_associativity", [&](Rng& rng) {
    const int n = ctx.count(100);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const auto a = rng.grassmann();
      const auto b = rng.grassmann();
      const auto c = rng.grassmann();
      const auto lhs = grassmann::wedge(grassmann::wedge(a, b), c);
      const auto rhs = grassmann::wedge(a, grassmann::wedge(b, c));
      w.see(rel(max_abs_diff(lhs, rhs), lhs.max_abs()),
            [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}; });
    }
    return upper(w, 1e-12, n);
  });

  run.check("grade_shift", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Vec4c v = rng.vec4c();
      const int k = rng.index(kDim + 1);
      const auto omega = rng.grassmann().grade_part(k);
      const double up = grassmann::delta(v, omega).off_grade_norm(k + 1);
      const double down = grassmann::delta_star(v, omega, g).off_grade_norm(k - 1);
      w.see(std::max(up, down), [&] { return Json{{"v", to_json(v)}, {"omega", to_json(omega)}}; });
    }
    return exact(w, n);
  });

  run.check("hodge_bijection", [&](Rng&) {
    const Eigen::FullPivLU<EndoOp> lu(grassmann::hodge_op(g, o));
    CheckRecord c;
    c.samples = 1;
    c.residual = static_cast<double>(kBlades - lu.rank());
    c.status = lu.rank() == kBlades ? Status::Pass : Status::Fail;
    c.detail = "rank " + std::to_string(lu.rank());
    return c;
  });

  run.check("hodge_double_star", [&](Rng&) {
    const EndoOp star = grassmann::hodge_op(g, o);
    const EndoOp twice = star * star;
    const auto s = grassmann::double_hodge_scalars(g, o);
    Worst w;
    for (BladeIndex b = 0; b < kBlades; ++b) {
      w.see(max_abs(twice.col(b) - s[grade(b)] * Coeffs16::Unit(b)), [&] { return Json{{"blade", b}}; });
    }
    CheckRecord c = upper(w, 1e-10, 1, "star-star is a scalar on each grade; scalars in values");
    c.values = Json::array();
    for (const Complex x : s) c.values.push_back(x.real());
    return c;
  });

  run.check("contraction_vee_table", [&](Rng& rng) {
    const auto lt = grassmann::contraction_sign_table(g, o);
    const auto rt = grassmann::right_contraction_sign_table(g, o);
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Vec4c v = rng.vec4c();
      const int k = 1 + i % kDim;
      const auto omega = rng.grassmann().grade_part(k);
      const auto gv = GrassmannElement::vector(v);
      const auto left = grassmann::delta_star(v, omega, g);
      const auto right = grassmann::right_delta_star(v, omega, g);
      const double err = std::max(
          max_abs_diff(left, static_cast<double>(lt[k]) * grassmann::vee(gv, omega, g, o)),
          max_abs_diff(right, static_cast<double>(rt[k]) * grassmann::right_vee(omega, gv, g, o)));
      w.see(rel(err, std::max(left.max_abs(), right.max_abs())),
            [&] { return Json{{"v", to_json(v)}, {"omega", to_json(omega)}}; });
    }
    CheckRecord c = upper(w, 1e-10, n, "per-grade signs s_k with contraction = s_k * vee");
    c.values = {{"left", lt}, {"right", rt}};
    return c;
  });
}

// ---------------------------------------------------------------------------

void clifford_suite(SuiteRun& run, const SuiteContext& ctx) {
  const Metric& g = ctx.metric;
  const CliffordAlgebra cl(g);

  run.check("associativity", [&](Rng& rng) {
    const int n = ctx.count(100);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Metric m = i == 0 ? g : sample::metric(rng);
      const CliffordAlgebra alg(m);
      const auto a = rng.clifford();
      const auto b = rng.clifford();
      const auto c = rng.clifford();
      const auto lhs = alg.product(alg.product(a, b), c);
      const auto rhs = alg.product(a, alg.product(b, c));
      w.see(rel(max_abs_diff(lhs, rhs), lhs.max_abs()), [&] {
        return Json{{"metric", cli::to_json(m.matrix())}, {"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}};
      });
    }
    return upper(w, 1e-11, n);
  });

  run.check("anticommutator", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Metric m = i == 0 ? g : sample::metric(rng);
      const CliffordAlgebra alg(m);
      double worst = 0;
      for (int mu = 0; mu < kDim; ++mu) {
        for (int nu = 0; nu < kDim; ++nu) {
          const auto gm = CliffordElement::generator(mu);
          const auto gn = CliffordElement::generator(nu);
          const auto ac = alg.product(gm, gn) + alg.product(gn, gm);
          worst = std::max(worst, max_abs_diff(ac, CliffordElement::scalar(2.0 * m(mu, nu))));
        }
      }
      w.see(worst, [&] { return Json{{"metric", cli::to_json(m.matrix())}}; });
    }
    return upper(w, 1e-12, n);
  });

  run.check("unit_law", [&](Rng& rng) {
    const int n = ctx.count(20);
    Worst w;
    const auto one = CliffordElement::scalar(1.0);
    for (int i = 0; i < n; ++i) {
      const auto a = rng.clifford();
      const double err = std::max(max_abs_diff(cl.product(one, a), a), max_abs_diff(cl.product(a, one), a));
      w.see(err, [&] { return Json{{"a", to_json(a)}}; });
    }
    return upper(w, 1e-12, n);
  });

  run.check("even_closure", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const auto a = clifford::even_part(rng.clifford());
      const auto b = clifford::even_part(rng.clifford());
      const auto p = cl.product(a, b);
      w.see(rel(clifford::odd_part(p).max_abs(), p.max_abs()),
            [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}}; });
    }
    return upper(w, 1e-12, n);
  });

  run.check("reversion_antiautomorphism", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const auto a = rng.clifford();
      const auto b = rng.clifford();
      const auto lhs = cl.reversion(cl.product(a, b));
      const auto rhs = cl.product(cl.reversion(b), cl.reversion(a));
      w.see(rel(max_abs_diff(lhs, rhs), lhs.max_abs()),
            [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}}; });
    }
    return upper(w, 1e-11, n);
  });

  run.check("matrix_table", [&](Rng&) {
    if (!ctx.basis) {
      CheckRecord c;
      c.status = Status::Info;
      c.detail = "not run: " + ctx.basis_error;
      return c;
    }
    const GammaBasis& basis = *ctx.basis;
    Worst w;
    for (BladeIndex i = 0; i < kBlades; ++i) {
      for (BladeIndex j = 0; j < kBlades; ++j) {
        const MatrixElem direct = basis.blade_matrix(i) * basis.blade_matrix(j);
        const MatrixElem via = basis.compose(cl.product(CliffordElement::blade(i), CliffordElement::blade(j)));
        w.see(rel(max_abs(direct - via), max_abs(direct)), [&] { return Json{{"i", i}, {"j", j}}; });
      }
    }
    return upper(w, 1e-12, kBlades * kBlades);
  });
}

// ---------------------------------------------------------------------------

void iso_suite(SuiteRun& run, const SuiteContext& ctx) {
  const Metric& g = ctx.metric;
  const GammaBasis& basis = *ctx.basis;
  const CliffordAlgebra cl(g);

  run.check("lmr_intertwining", [&](Rng& rng) {
    const int n = ctx.count(100);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const auto l = rng.clifford();
      const auto m = rng.clifford();
      const auto r = rng.clifford();
      const auto lhs = cl.product(cl.product(l, m), r);
      const auto rhs = transport(cl, cl.left_op(l) * cl.right_op(r), m);
      w.see(rel(max_abs_diff(lhs, rhs), lhs.max_abs()),
            [&] { return Json{{"L", to_json(l)}, {"M", to_json(m)}, {"R", to_json(r)}}; });
    }
    return upper(w, 1e-11, n, transport_note(g));
  });

  run.check("left_right_commute", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Metric m = i == 0 ? g : sample::metric(rng);
      const auto a = rng.clifford();
      const auto b = rng.clifford();
      const EndoOp l = iso::left_rep(a, m);
      const EndoOp r = iso::right_rep(b, m);
      w.see(rel(max_abs(l * r - r * l), max_abs(l * r)), [&] {
        return Json{{"metric", cli::to_json(m.matrix())}, {"a", to_json(a)}, {"b", to_json(b)}};
      });
    }
    return upper(w, 1e-11, n);
  });

  run.check("matrix_homomorphism", [&](Rng& rng) {
    const int n = ctx.count(100);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const auto a = rng.clifford();
      const auto b = rng.clifford();
      const MatrixElem lhs = iso::clifford_to_matrix(cl.product(a, b), basis);
      const MatrixElem rhs = iso::clifford_to_matrix(a, basis) * iso::clifford_to_matrix(b, basis);
      w.see(rel(max_abs(lhs - rhs), max_abs(lhs)), [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}}; });
    }
    return upper(w, 1e-11, n);
  });

  run.check("blade_rank", [&](Rng&) {
    CheckRecord c;
    c.samples = 1;
    c.residual = static_cast<double>(kBlades - basis.blade_rank());
    c.status = basis.blade_rank() == kBlades ? Status::Pass : Status::Fail;
    c.detail = "rank " + std::to_string(basis.blade_rank());
    return c;
  });

  run.check("matrix_wedge_associativity", [&](Rng& rng) {
    const int n = ctx.count(100);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const MatrixElem a = rng.matrix();
      const MatrixElem b = rng.matrix();
      const MatrixElem c = rng.matrix();
      const MatrixElem lhs = iso::matrix_wedge(iso::matrix_wedge(a, b, basis), c, basis);
      const MatrixElem rhs = iso::matrix_wedge(a, iso::matrix_wedge(b, c, basis), basis);
      w.see(rel(max_abs(lhs - rhs), max_abs(lhs)), [&] {
        return Json{{"a", cli::to_json(a)}, {"b", cli::to_json(b)}, {"c", cli::to_json(c)}};
      });
    }
    return upper(w, 1e-11, n);
  });

  run.check("matrix_wedge_odd_anticommute", [&](Rng& rng) {
    const int n = ctx.count(100);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const MatrixElem a = basis.compose(clifford::odd_part(rng.clifford()));
      const MatrixElem b = basis.compose(clifford::odd_part(rng.clifford()));
      const MatrixElem ab = iso::matrix_wedge(a, b, basis);
      const MatrixElem ba = iso::matrix_wedge(b, a, basis);
      w.see(rel(max_abs(ab + ba), max_abs(ab)), [&] { return Json{{"a", cli::to_json(a)}, {"b", cli::to_json(b)}}; });
    }
    return upper(w, 1e-11, n);
  });

  run.check("left_rep_triangle", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const auto l = rng.clifford();
      const auto m = rng.clifford();
      const MatrixElem via = iso::clifford_to_matrix(transport(cl, iso::left_rep(l, g), m), basis);
      const MatrixElem direct = iso::clifford_to_matrix(l, basis) * iso::clifford_to_matrix(m, basis);
      w.see(rel(max_abs(via - direct), max_abs(direct)),
            [&] { return Json{{"L", to_json(l)}, {"M", to_json(m)}}; });
    }
    return upper(w, 1e-11, n, transport_note(g));
  });
}

// ---------------------------------------------------------------------------

double conjugation_gap(const MatrixElem& s1, const MatrixElem& s1_inv, const MatrixElem& s2,
                       const MatrixElem& s2_inv, const GammaBasis& basis) {
  double worst = 0;
  for (BladeIndex b = 0; b < kBlades; ++b) {
    const MatrixElem& m = basis.blade_matrix(b);
    worst = std::max(worst, max_abs(s1 * m * s1_inv - s2 * m * s2_inv));
  }
  return worst;
}

void transforms_suite(SuiteRun& run, const SuiteContext& ctx) {
  const Metric& g = ctx.metric;
  const GammaBasis& basis = *ctx.basis;
  const LiftOptions opts = ctx.lift_options();

  run.check("spin_lift", [&](Rng& rng) {
    const int n = ctx.count(50);
    std::vector<Mat4r> maps;
    for (int i = 0; i < n; ++i) maps.push_back(sample::isometry(rng, g));
    if (g.is_diagonal()) {
      maps.push_back(parity());
      maps.push_back(time_reversal());
    }
    Worst w;
    for (const Mat4r& a : maps) {
      const SpinElement s = transforms::spin_lift(LinearMap4(a), g, basis, opts);
      w.see(s.residual, [&] { return Json{{"A", cli::to_json(a)}}; });
    }
    return upper(w, ctx.tol, static_cast<int>(maps.size()),
                 g.is_diagonal() ? "random isometries plus P and T" : "random isometries");
  });

  run.check("projective_homomorphism", [&](Rng& rng) {
    const int n = ctx.count(30);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Mat4r a = sample::isometry(rng, g);
      const Mat4r b = sample::isometry(rng, g);
      const SpinElement sa = transforms::spin_lift(LinearMap4(a), g, basis, opts);
      const SpinElement sb = transforms::spin_lift(LinearMap4(b), g, basis, opts);
      const SpinElement sab = transforms::spin_lift(LinearMap4(a * b), g, basis, opts);
      const double gap = conjugation_gap(sa.matrix * sb.matrix, sb.inverse * sa.inverse, sab.matrix,
                                         sab.inverse, basis);
      w.see(gap, [&] { return Json{{"A", cli::to_json(a)}, {"B", cli::to_json(b)}}; });
    }
    return upper(w, ctx.tol, n);
  });

  run.check("no_lift_for_non_isometries", [&](Rng& rng) {
    const int n = ctx.count(30);
    Least l;
    for (int i = 0; i < n; ++i) {
      const Mat4r a = sample::non_isometry(rng, g);
      const double s = transforms::conjugation_spectrum(LinearMap4(a), basis).smallest();
      l.see(s, [&] { return Json{{"A", cli::to_json(a)}}; });
    }
    return lower(l, 1e-6, n, "smallest normalised singular value of the conjugation system");
  });

  run.check("pushforward_functorial", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Mat4r a = sample::invertible(rng);
      const Mat4r b = sample::invertible(rng);
      const EndoOp lhs = transforms::exterior_pushforward(LinearMap4(a * b));
      const EndoOp rhs =
          transforms::exterior_pushforward(LinearMap4(a)) * transforms::exterior_pushforward(LinearMap4(b));
      w.see(rel(max_abs(lhs - rhs), max_abs(lhs)),
            [&] { return Json{{"A", cli::to_json(a)}, {"B", cli::to_json(b)}}; });
    }
    return upper(w, 1e-12, n);
  });

  run.check("pushforward_blocks", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Mat4r a = rng.mat4r();
      const EndoOp push = transforms::exterior_pushforward(LinearMap4(a));
      double err = 0;
      for (int mu = 0; mu < kDim; ++mu) {
        for (int nu = 0; nu < kDim; ++nu) err = std::max(err, std::abs(push(1u << mu, 1u << nu) - a(mu, nu)));
      }
      err = std::max(err, std::abs(push(0, 0) - 1.0));
      err = std::max(err, std::abs(push(kPseudoscalar, kPseudoscalar) - a.determinant()));
      for (BladeIndex r = 0; r < kBlades; ++r) {
        for (BladeIndex c = 0; c < kBlades; ++c) {
          if (grade(r) != grade(c)) err = std::max(err, std::abs(push(r, c)));
        }
      }
      w.see(err, [&] { return Json{{"A", cli::to_json(a)}}; });
    }
    return upper(w, 1e-12, n, "grade-1 block is A, grade-4 block is det A, no cross-grade entries");
  });
}

// ---------------------------------------------------------------------------

void dirac_suite(SuiteRun& run, const SuiteContext& ctx) {
  const Metric& g = ctx.metric;
  const GammaBasis& basis = *ctx.basis;
  const CliffordAlgebra cl(g);
  const LiftOptions opts = ctx.lift_options();

  auto on_shell = [&](Rng& rng) {
    const Vec4c lambda = rng.vec4c();
    Complex m = std::sqrt(g.form(lambda, lambda));
    if (rng.index(2)) m = -m;
    return std::pair{lambda, m};
  };

  run.check("symbol_square", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Vec4c lambda = rng.vec4c();
      const MatrixElem s = dirac::symbol_matrix(lambda, basis);
      const Complex q = g.form(lambda, lambda);
      w.see(rel(max_abs(s * s - q * MatrixElem::Identity()), std::abs(q)),
            [&] { return Json{{"lambda", to_json(lambda)}}; });
    }
    return upper(w, 1e-11, n);
  });

  run.check("hodge_dirac_equivalence", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Vec4c lambda = rng.vec4c();
      const auto omega = rng.clifford();
      const auto lhs = transport(cl, dirac::hodge_dirac_symbol(lambda, g), omega);
      const auto rhs = cl.product(dirac::symbol_element(lambda), omega);
      w.see(rel(max_abs_diff(lhs, rhs), rhs.max_abs()),
            [&] { return Json{{"lambda", to_json(lambda)}, {"omega", to_json(omega)}}; });
    }
    return upper(w, 1e-11, n, transport_note(g));
  });

  run.check("hodge_dirac_square", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Vec4c lambda = rng.vec4c();
      const EndoOp d = dirac::hodge_dirac_symbol(lambda, g);
      const Complex q = g.form(lambda, lambda);
      w.see(rel(max_abs(d * d - q * EndoOp::Identity()), std::abs(q)),
            [&] { return Json{{"lambda", to_json(lambda)}}; });
    }
    return upper(w, 1e-11, n);
  });

  run.check("solution_dimension", [&](Rng& rng) {
    const int n = ctx.count(20);
    Worst w;
    // Brute-force kernel of N ↦ (symbol − m)N on all of Mat(4, ℂ).
    auto brute = [&](const MatrixElem& s, Complex m) {
      Eigen::Matrix<Complex, kBlades, kBlades> op;
      for (int col = 0; col < kBlades; ++col) {
        MatrixElem e = MatrixElem::Zero();
        e(col % kDim, col / kDim) = 1.0;
        const MatrixElem r = s * e - m * e;
        op.col(col) = Eigen::Map<const Coeffs16>(r.data());
      }
      Eigen::JacobiSVD<decltype(op)> svd(op);
      const auto& sv = svd.singularValues();
      const double tol = 1e-9 * std::max(1.0, sv[0]);
      return static_cast<int>((sv.array() < tol).count());
    };
    int mismatches = 0;
    auto probe = [&](const Vec4c& lambda, Complex m, int expect) {
      const auto sol = dirac::plane_wave_solutions(lambda, m, basis);
      const int matrix_dim = brute(dirac::symbol_matrix(lambda, basis), m);
      const bool ok = sol.column_dimension() == expect && matrix_dim == kDim * expect &&
                      static_cast<int>(sol.matrices.size()) == kDim * expect;
      if (!ok) ++mismatches;
      w.see(ok ? 0.0 : 1.0, [&] {
        return Json{{"lambda", to_json(lambda)}, {"m", {m.real(), m.imag()}}, {"expected", expect},
                    {"found", sol.column_dimension()}, {"brute_force", matrix_dim}};
      });
    };
    for (int i = 0; i < n; ++i) {
      const auto [lambda, m] = on_shell(rng);
      probe(lambda, m, 2);
    }
    for (int i = 0; i < n; ++i) {
      const auto [lambda, m0] = on_shell(rng);
      Complex m = m0 + rng.complex(0.3, 1.0);
      while (std::abs(m + m0) < 0.1) m += 0.5;
      probe(lambda, m, 0);
    }
    CheckRecord c = exact(w, 2 * n);
    c.residual = mismatches;
    c.detail = "column dimension 2 on shell and 0 off shell, matched by a brute-force kernel";
    return c;
  });

  run.check("right_multiplication_closure", [&](Rng& rng) {
    const int n = ctx.count(20);
    const auto [lambda, m] = on_shell(rng);
    const auto sol = dirac::plane_wave_solutions(lambda, m, basis);
    Worst w;
    for (int i = 0; i < n; ++i) {
      MatrixElem nn = MatrixElem::Zero();
      for (const MatrixElem& b : sol.matrices) nn += rng.complex() * b;
      const MatrixElem r = rng.matrix();
      const dirac::PlaneWave wave{nn * r, lambda, m};
      w.see(rel(wave.residual(basis), max_abs(nn * r)),
            [&] { return Json{{"lambda", to_json(lambda)}, {"R", cli::to_json(r)}}; });
    }
    return upper(w, 1e-11, n);
  });

  run.check("covariance", [&](Rng& rng) {
    const int waves = ctx.count(10);
    const int per_wave = 5;
    Worst w;
    for (int i = 0; i < waves; ++i) {
      const auto [lambda, m] = on_shell(rng);
      const auto sol = dirac::plane_wave_solutions(lambda, m, basis);
      MatrixElem nn = MatrixElem::Zero();
      for (const MatrixElem& b : sol.matrices) nn += rng.complex() * b;
      const dirac::PlaneWave wave{nn, lambda, m};
      for (int j = 0; j < per_wave; ++j) {
        const Mat4r a = sample::isometry(rng, g);
        const double r = dirac::covariance_residual(LinearMap4(a), wave, g, basis, opts);
        w.see(rel(r, max_abs(nn)), [&] {
          return Json{{"A", cli::to_json(a)}, {"lambda", to_json(lambda)}, {"m", {m.real(), m.imag()}},
                      {"N", cli::to_json(nn)}};
        });
      }
    }
    return upper(w, ctx.tol, waves * per_wave);
  });

  run.check("product_state_lmr", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Spinor psi = rng.vec4c();
      const Spinor alpha = rng.vec4c();
      const MatrixElem l = rng.matrix();
      const MatrixElem r = rng.matrix();
      const MatrixElem lhs = l * dirac::make_product_state(psi, alpha) * r;
      const MatrixElem rhs = dirac::make_product_state(l * psi, r.transpose() * alpha);
      w.see(rel(max_abs(lhs - rhs), max_abs(lhs)), [&] {
        return Json{{"psi", to_json(psi)}, {"alpha", to_json(alpha)}, {"L", cli::to_json(l)}, {"R", cli::to_json(r)}};
      });
    }
    return upper(w, 1e-12, n);
  });

  run.check("lorentz_keeps_rank_one", [&](Rng& rng) {
    const int n = ctx.count(30);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Mat4r a = sample::isometry(rng, g);
      const dirac::ProductState st{rng.vec4c(), rng.vec4c()};
      const Eigen::Vector4d sv = dirac::entanglement_probe(LinearMap4(a), st, basis);
      w.see(sv[1] / sv[0], [&] {
        return Json{{"A", cli::to_json(a)}, {"psi", to_json(st.psi)}, {"alpha", to_json(st.alpha)}};
      });
    }
    return orthogonal_only(upper(w, 1e-9, n, "sigma2/sigma1 of the transformed product state"), g);
  });

  run.check("generic_map_entangles", [&](Rng& rng) {
    const int n = ctx.count(20);
    const LinearMap4 fixed(Vec4r(1, 2, 3, 4).asDiagonal().toDenseMatrix());
    const dirac::ProductState e11{Spinor::Unit(1), Spinor::Unit(1)};
    const Eigen::Vector4d base = dirac::entanglement_probe(fixed, e11, basis);
    double best = base[1] / base[0];
    Json witness = {{"A", cli::to_json(fixed.matrix())}, {"psi", "e1"}, {"alpha", "e1"}};
    int tried = 1;
    for (int i = 0; i < n && !(best > 1e-3); ++i, ++tried) {
      const Mat4r a = sample::non_isometry(rng, g);
      const dirac::ProductState st{rng.vec4c(), rng.vec4c()};
      const Eigen::Vector4d sv = dirac::entanglement_probe(LinearMap4(a), st, basis);
      if (sv[1] / sv[0] > best) {
        best = sv[1] / sv[0];
        witness = {{"A", cli::to_json(a)}, {"psi", to_json(st.psi)}, {"alpha", to_json(st.alpha)}};
      }
    }
    Least l;
    l.value = best;
    l.input = witness;
    CheckRecord c = lower(l, 1e-3, tried, "largest sigma2/sigma1 found; witness in values");
    c.values = {{"diag(1,2,3,4) on e1 x e1", base[1] / base[0]}, {"witness", witness}};
    return c;
  });
}

// ---------------------------------------------------------------------------

void proposition_suite(SuiteRun& run, const SuiteContext& ctx) {
  const Metric& g = ctx.metric;
  const GammaBasis& basis = *ctx.basis;
  transforms::PropositionTolerances tol;
  tol.residual = ctx.tol;
  tol.lift = ctx.lift_options();
  const int inner = 4;

  run.check("isometry_conjugation", [&](Rng& rng) {
    const int n = ctx.count(50);
    Worst w;
    for (int i = 0; i < n; ++i) {
      const Mat4r a = sample::isometry(rng, g);
      const auto rep = transforms::proposition_check(LinearMap4(a), g, basis, inner, child_seed(rng), tol);
      const double r = rep.lift_found ? std::max({rep.conjugation_residual, rep.homomorphism_residual,
                                                  rep.inverse_residual})
                                      : std::numeric_limits<double>::infinity();
      w.see(r, [&] { return Json{{"A", cli::to_json(a)}, {"lift_found", rep.lift_found}}; });
    }
    return orthogonal_only(upper(w, ctx.tol, n, "exterior action equals conjugation on all 16 blades"), g);
  });

  run.check("non_isometry_homomorphism", [&](Rng& rng) {
    const int n = ctx.count(30);
    Worst w;
    double smallest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const Mat4r a = sample::non_isometry(rng, g);
      const auto rep = transforms::proposition_check(LinearMap4(a), g, basis, inner, child_seed(rng), tol);
      smallest = std::min(smallest, rep.smallest_singular);
      const double r = rep.pass ? std::max(rep.homomorphism_residual, rep.inverse_residual)
                                : std::numeric_limits<double>::infinity();
      w.see(r, [&] {
        return Json{{"A", cli::to_json(a)}, {"null_space_trivial", rep.null_space_trivial},
                    {"smallest_singular", rep.smallest_singular}};
      });
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "no conjugation form; smallest singular value %.3e", smallest);
    return upper(w, ctx.tol, n, buf);
  });

  run.check("named_cases", [&](Rng& rng) {
    std::vector<std::pair<std::string, Mat4r>> cases = {
        {"identity", Mat4r::Identity()},
        {"boost*rotation", boost(1, 0.8) * rotation(2, 3, 1.3)},
        {"diag(1,2,3,4)", Vec4r(1, 2, 3, 4).asDiagonal().toDenseMatrix()},
    };
    Worst w;
    Json values = Json::object();
    for (const auto& [label, a] : cases) {
      const auto rep = transforms::proposition_check(LinearMap4(a), g, basis, inner, child_seed(rng), tol);
      values[label] = {{"isometry", rep.isometry}, {"lift_found", rep.lift_found}, {"pass", rep.pass}};
      const double r = rep.pass ? std::max({rep.conjugation_residual, rep.homomorphism_residual,
                                            rep.inverse_residual})
                                : std::numeric_limits<double>::infinity();
      w.see(r, [&] { return Json{{"case", label}, {"A", cli::to_json(a)}}; });
    }
    CheckRecord c = upper(w, ctx.tol, static_cast<int>(cases.size()));
    c.values = values;
    return c;
  });
}

}  // namespace

bool is_suite(std::string_view name) {
  return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) != kSuiteNames.end();
}

SuiteContext SuiteContext::make(const Metric& g, std::uint64_t seed, double tol, int samples) {
  SuiteContext ctx;
  ctx.metric = g;
  ctx.seed = seed;
  ctx.tol = tol;
  ctx.samples = samples;
  try {
    ctx.basis = iso::dirac_matrices(g);
  } catch (const NoRealFactorization& e) {
    ctx.basis_error = e.what();
  }
  return ctx;
}

int SuiteContext::count(int at_fifty) const {
  return std::max(1, static_cast<int>(std::lround(static_cast<double>(samples) * at_fifty / 50.0)));
}

LiftOptions SuiteContext::lift_options() const {
  LiftOptions o;
  o.isometry_tol = tol;
  return o;
}

std::string suite_unavailable(std::string_view name, const SuiteContext& ctx) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + std::string(name));
  const bool needs_matrices = name == "iso" || name == "transforms" || name == "dirac" || name == "proposition";
  if (needs_matrices && !ctx.basis) return "needs the Dirac matrix representation: " + ctx.basis_error;
  return {};
}

std::vector<CheckRecord> run_suite(std::string_view name, const SuiteContext& ctx) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + std::string(name));
  SuiteRun run(name, ctx);
  if (name == "grassmann") grassmann_suite(run, ctx);
  if (name == "clifford") clifford_suite(run, ctx);
  if (name == "iso") iso_suite(run, ctx);
  if (name == "transforms") transforms_suite(run, ctx);
  if (name == "dirac") dirac_suite(run, ctx);
  if (name == "proposition") proposition_suite(run, ctx);
  return run.take();
}

Report verify(const SuiteContext& ctx, const std::vector<std::string>& requested) {
  const auto start = std::chrono::steady_clock::now();
  std::set<std::string, std::less<>> wanted(requested.begin(), requested.end());
  for (const auto& s : wanted) {
    if (!is_suite(s)) throw std::invalid_argument("unknown suite: " + s);
  }

  Report report;
  report.command = "verify";
  report.seed = ctx.seed;
  report.metric = ctx.metric.matrix();
  report.samples = ctx.samples;
  report.tolerances = {{"isometry", ctx.tol},
                       {"lift_null", ctx.lift_options().null_tol},
                       {"lift_gap", ctx.lift_options().gap_tol},
                       {"degeneracy", ctx.metric.degeneracy_tol()}};

  std::vector<std::pair<std::string, std::future<std::vector<CheckRecord>>>> jobs;
  for (std::string_view name : kSuiteNames) {
    if (!wanted.empty() && !wanted.count(name)) {
      report.skipped.push_back({std::string(name), "not selected"});
      continue;
    }
    if (const std::string why = suite_unavailable(name, ctx); !why.empty()) {
      report.skipped.push_back({std::string(name), why});
      continue;
    }
    jobs.emplace_back(std::string(name), std::async(std::launch::async, [name, &ctx] { return run_suite(name, ctx); }));
  }
  // kSuiteNames is sorted, so collecting in launch order keeps the report ordered.
  for (auto& [name, job] : jobs) {
    report.suites.push_back(name);
    for (auto& rec : job.get()) report.checks.push_back(std::move(rec));
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace spinrep::cli

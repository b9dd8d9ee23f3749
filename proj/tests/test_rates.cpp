#include "mirrorqed/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "support/require.hpp"

using namespace mirrorqed;

namespace {

GeometryConfig bounded(double R, double Z) {
  GeometryConfig g;
  g.R = R;
  g.Z = Z;
  return g;
}

GeometryConfig unbounded(double R) {
  GeometryConfig g;
  g.R = R;
  return g;
}

// Reference values evaluated with 60-digit arithmetic, rounded to double.
// Spot checks span the near, intermediate and far zones of both rates.

void test_gamma11_table() {
  const double kRel = 1e-14;

  // dipole in the mirror plane: suppressed towards the surface
  const double z_in[] = {0.05, 0.1, 0.5, 1.0, 2.0, 5.0};
  const double g_in[] = {4.9993303984773681157e-4, 1.9989288359412612848e-3,
                         0.049334476095590705762,  0.1895465411977904239,
                         0.64457526111573244146,   1.2591504599751903032};
  for (int i = 0; i < 6; ++i) {
    const GeometryConfig g = bounded(1.0, z_in[i]);
    REQUIRE_CLOSE(gamma11(PolarizationAxis::X, g), g_in[i], kRel);
    REQUIRE_CLOSE(gamma11(PolarizationAxis::Y, g), g_in[i], kRel);
  }

  // dipole normal to the mirror: enhanced towards the surface
  const double g_out[] = {1.9997500223203952013, 1.9990003570767270918,
                          1.9752221838163994132, 1.9035060368192703678,
                          1.653096662469987426,  0.94294635515249752501};
  for (int i = 0; i < 6; ++i)
    REQUIRE_CLOSE(gamma11(PolarizationAxis::Z, bounded(1.0, z_in[i])), g_out[i], kRel);

  // no mirror: single-atom rate is exactly the free-space one
  REQUIRE(gamma11(PolarizationAxis::X, unbounded(3.0)) == 1.0);
  REQUIRE(gamma11(PolarizationAxis::Z, unbounded(0.2)) == 1.0);
}

void test_gamma12_free_table() {
  const double kRel = 1e-14;
  REQUIRE_CLOSE(gamma12(PolarizationAxis::X, unbounded(M_PI)),
                0.30396355092701331433, kRel);  // = 3 / pi^2
  REQUIRE_CLOSE(gamma12(PolarizationAxis::X, unbounded(0.5)),
                0.97522218381639941316, kRel);
  REQUIRE_CLOSE(gamma12(PolarizationAxis::X, unbounded(7.0)),
                -0.040411042405402420203, kRel);
  REQUIRE_CLOSE(gamma12(PolarizationAxis::X, unbounded(0.1)),
                0.99900035707672709177, kRel);
  REQUIRE_CLOSE(gamma12(PolarizationAxis::Y, unbounded(0.5)),
                0.95066552390440929424, kRel);
  REQUIRE_CLOSE(gamma12(PolarizationAxis::Y, unbounded(7.0)),
                0.16098836378529887233, kRel);
  // transverse orientations are equivalent without the mirror
  REQUIRE(gamma12(PolarizationAxis::Z, unbounded(0.5)) ==
          gamma12(PolarizationAxis::Y, unbounded(0.5)));
}

void test_gamma12_bounded_table() {
  const double kRel = 1e-14;
  struct Row {
    double R, Z, x, y, z;
  };
  const Row rows[] = {
      {1.0, 0.5, 0.045896948963231714525, 0.044220017758423415027,
       1.5995308115490588602},
      {2.0, 1.0, 0.14051372068747418344, 0.1183927123705787483,
       0.66134449421516247686},
      {0.7, 3.0, 1.0596675689400795005, 1.0357491977947248317,
       1.2029425461324853446},
      {10.0, 0.05, 5.8459421860572633777e-6, 1.3250175773327615991e-5,
       -0.18675674296484282499},
      {1.0, 0.03, 1.6748643336792171506e-4, 1.6140714465978802887e-4,
       1.6208292523086148816},
  };
  for (const Row& r : rows) {
    const GeometryConfig g = bounded(r.R, r.Z);
    REQUIRE_CLOSE(gamma12(PolarizationAxis::X, g), r.x, kRel);
    REQUIRE_CLOSE(gamma12(PolarizationAxis::Y, g), r.y, kRel);
    REQUIRE_CLOSE(gamma12(PolarizationAxis::Z, g), r.z, kRel);
  }
}

// With both atoms close together the cross rate approaches the single-atom
// one; the tiny deviation is itself a sharp prediction and survives the
// internal extended-precision evaluation unscathed.
void test_coincidence_limit() {
  const double kRel = 1e-6;
  const GeometryConfig a = bounded(1e-3, 0.5);
  REQUIRE_CLOSE(gamma12(PolarizationAxis::X, a) / gamma11(PolarizationAxis::X, a) - 1.0,
                -7.1641855740560044897e-8, kRel);
  const GeometryConfig b = bounded(1e-3, 1.0);
  REQUIRE_CLOSE(gamma12(PolarizationAxis::X, b) / gamma11(PolarizationAxis::X, b) - 1.0,
                -7.2290200341609902682e-8, kRel);
  REQUIRE_CLOSE(gamma12(PolarizationAxis::Z, a) / gamma11(PolarizationAxis::Z, a) - 1.0,
                -2.0071324697726655259e-7, kRel);
  REQUIRE_CLOSE(gamma12(PolarizationAxis::Z, b) / gamma11(PolarizationAxis::Z, b) - 1.0,
                -2.0283893390357113719e-7, kRel);
}

// The series branch and the closed form must agree across the switchover
// window, otherwise the Auto path would jump there.
void test_series_overlap() {
  const double kRel = 1e-9;
  for (double x : {5e-3, 0.02, 0.05}) {
    const GeometryConfig g = bounded(1.0, x);
    REQUIRE_CLOSE(gamma11(PolarizationAxis::X, g, EvalPath::Series),
                  gamma11(PolarizationAxis::X, g, EvalPath::ClosedForm), kRel);
    REQUIRE_CLOSE(gamma11(PolarizationAxis::Z, g, EvalPath::Series),
                  gamma11(PolarizationAxis::Z, g, EvalPath::ClosedForm), kRel);
    REQUIRE_CLOSE(gamma12(PolarizationAxis::X, unbounded(x), EvalPath::Series),
                  gamma12(PolarizationAxis::X, unbounded(x), EvalPath::ClosedForm),
                  kRel);
    REQUIRE_CLOSE(gamma12(PolarizationAxis::Y, unbounded(x), EvalPath::Series),
                  gamma12(PolarizationAxis::Y, unbounded(x), EvalPath::ClosedForm),
                  kRel);
  }
  // frozen spots for both branches near the switch
  REQUIRE_CLOSE(gamma11(PolarizationAxis::X, bounded(1.0, 0.005)),
                4.9999933035755621678e-6, 1e-14);
  REQUIRE_CLOSE(gamma11(PolarizationAxis::X, bounded(1.0, 0.02)),
                7.9998285731216835017e-5, 1e-14);
  REQUIRE_CLOSE(gamma11(PolarizationAxis::Z, bounded(1.0, 0.005)),
                1.9999975000022321418, 1e-15);
  REQUIRE_CLOSE(gamma11(PolarizationAxis::Z, bounded(1.0, 0.02)),
                1.9999600005714243386, 1e-15);
  REQUIRE_CLOSE(gamma12(PolarizationAxis::X, unbounded(0.005)),
                0.99999750000223214182, 1e-15);
  REQUIRE_CLOSE(gamma12(PolarizationAxis::Y, unbounded(0.02)),
                0.99992000171426878316, 1e-15);
}

// Auto switches to the series strictly below the threshold argument.
void test_series_switch_is_strict() {
  const double at = 1e-2;
  const double below = std::nextafter(at, 0.0);
  REQUIRE(gamma11(PolarizationAxis::X, bounded(1.0, at), EvalPath::Auto) ==
          gamma11(PolarizationAxis::X, bounded(1.0, at), EvalPath::ClosedForm));
  REQUIRE(gamma11(PolarizationAxis::X, bounded(1.0, below), EvalPath::Auto) ==
          gamma11(PolarizationAxis::X, bounded(1.0, below), EvalPath::Series));
  REQUIRE(gamma12(PolarizationAxis::Y, unbounded(at), EvalPath::Auto) ==
          gamma12(PolarizationAxis::Y, unbounded(at), EvalPath::ClosedForm));
  REQUIRE(gamma12(PolarizationAxis::Y, unbounded(below), EvalPath::Auto) ==
          gamma12(PolarizationAxis::Y, unbounded(below), EvalPath::Series));
}

void test_dipole_shift_table() {
  const double kRel = 1e-13;
  REQUIRE_CLOSE(dipole_shift(PolarizationAxis::X, unbounded(2.0)),
                -0.26295900320704143821, kRel);
  REQUIRE_CLOSE(dipole_shift(PolarizationAxis::X, unbounded(5.0)),
                0.05413151025422959296, kRel);
  REQUIRE_CLOSE(dipole_shift(PolarizationAxis::X, unbounded(10.0)),
                0.0094189239569552258795, kRel);
  REQUIRE_CLOSE(dipole_shift(PolarizationAxis::Y, unbounded(2.0)),
                0.28753456530869911423, kRel);
  REQUIRE_CLOSE(dipole_shift(PolarizationAxis::X, bounded(2.0, 3.0)),
                -0.38865762932457424254, kRel);
  REQUIRE_CLOSE(dipole_shift(PolarizationAxis::Z, bounded(2.0, 1.0)),
                0.48380803734343779646, kRel);
}

void test_rate_set_identities() {
  const GeometryConfig geoms[] = {bounded(1.0, 0.5), bounded(2.0, 1.0),
                                  bounded(0.7, 3.0), unbounded(0.5)};
  for (const GeometryConfig& g : geoms) {
    for (PolarizationAxis ax :
         {PolarizationAxis::X, PolarizationAxis::Y, PolarizationAxis::Z}) {
      const RateSet rs = collective_rates(ax, g);
      // bit-for-bit, by construction
      REQUIRE(rs.gamma_plus + rs.gamma_minus == 2.0 * rs.gamma11);
      REQUIRE(rs.gamma_plus - rs.gamma_minus == 2.0 * rs.gamma12);
      REQUIRE(rs.gamma_plus == gamma11(ax, g) + gamma12(ax, g));
      REQUIRE(rs.shift == dipole_shift(ax, g));
      REQUIRE_CLOSE(rs.gamma11, gamma11(ax, g), 1e-15);
    }
  }
  // subradiant channel at small separation, no mirror
  const RateSet rs = collective_rates(PolarizationAxis::X, unbounded(0.1));
  REQUIRE_CLOSE(rs.gamma_minus, 9.99642923272908226e-4, 2e-13);
}

void test_argument_guards() {
  GeometryConfig bad;
  bad.R = -1.0;
  REQUIRE_THROWS_AS(gamma12(PolarizationAxis::X, bad), std::invalid_argument);
  GeometryConfig badz = bounded(1.0, 0.0);
  REQUIRE_THROWS_AS(gamma11(PolarizationAxis::X, badz), std::invalid_argument);
  REQUIRE_THROWS_AS(dipole_shift(PolarizationAxis::X, badz), std::invalid_argument);
}

}  // namespace

int main(int, char** argv) {
  test_gamma11_table();
  test_gamma12_free_table();
  test_gamma12_bounded_table();
  test_coincidence_limit();
  test_series_overlap();
  test_series_switch_is_strict();
  test_dipole_shift_table();
  test_rate_set_identities();
  test_argument_guards();
  return testsupport::finish(argv[0]);
}

"""
Test cases for the interface numerical fluxes

Test cases can be run with:
    nosetests
    coverage report -m

While debugging just these tests it's convenient to use this:
    nosetests --stop tests/test_flux.py:TestRoe
"""
import unittest

import factory.random
import numpy as np

from mixsolver.errors import RoeFailureError, SchemeCompatibilityError
from mixsolver.flux import (
    CENTRAL_SCHEMES,
    CellStates,
    SchemeKind,
    central_flux,
    check_compatibility,
    face_fluxes,
    interface_flux,
    movers_1_alpha,
    movers_n_alpha,
    movers_plus_diffusion,
    ricca_alpha,
    roe_average,
    roe_conservation_residual,
    roe_flux,
    rusanov_alpha,
    steger_warming_flux,
    steger_warming_split,
    van_leer_flux,
    van_leer_split,
)
from mixsolver.state import (
    GammaForm,
    Mixture,
    ModelKind,
    PrimitiveState,
    physical_flux,
    to_conserved,
)
from mixsolver.thermo import GasComponent, sound_speed, MixtureThermo
from tests.factories import GammaStateFactory, MassFractionStateFactory

AIR_HELIUM = Mixture(ModelKind.MASS_FRACTION, GasComponent(1.4), GasComponent(1.6))
SINGLE_GAS = Mixture(ModelKind.MASS_FRACTION, GasComponent(1.4), GasComponent(1.4))
GAMMA_CONS = Mixture(ModelKind.GAMMA_BASED)
GAMMA_QUASI = Mixture(ModelKind.GAMMA_BASED, gamma_form=GammaForm.QUASI_CONSERVATIVE)


def y_state(rho, u, p, y1, mixture=AIR_HELIUM):
    """Conserved vector of a 1D mass fraction state"""
    return to_conserved(PrimitiveState(rho, (u,), p, y1=y1), mixture)


def g_state(rho, u, p, gamma, p_inf=0.0, mixture=GAMMA_CONS):
    """Conserved vector of a 1D gamma-based state"""
    return to_conserved(PrimitiveState(rho, (u,), p, gamma=gamma, p_inf=p_inf), mixture)


def random_mass_fraction_batch(rng, n, mach_range=(-2.5, 2.5)):
    """A batch of random 1D mass fraction states as a (4, n) array"""
    rho = rng.uniform(0.1, 5.0, n)
    p = rng.uniform(0.1, 5.0, n)
    y1 = rng.uniform(0.0, 1.0, n)
    gamma = 1.4 * y1 + 1.6 * (1.0 - y1)
    u = rng.uniform(*mach_range, n) * np.sqrt(gamma * p / rho)
    return to_conserved(PrimitiveState(rho, (u,), p, y1=y1), AIR_HELIUM)


def single_gas_roe(left, right, gamma):
    """Textbook single-gas Roe flux extended with a passive scalar"""
    def unpack(cons):
        rho, mom, energy, rho_y = cons
        u = mom / rho
        p = (gamma - 1.0) * (energy - 0.5 * rho * u * u)
        return rho, u, p, (energy + p) / rho, rho_y / rho

    rho_l, u_l, p_l, h_l, y_l = unpack(left)
    rho_r, u_r, p_r, h_r, y_r = unpack(right)
    w_l, w_r = np.sqrt(rho_l), np.sqrt(rho_r)
    u = (w_l * u_l + w_r * u_r) / (w_l + w_r)
    h = (w_l * h_l + w_r * h_r) / (w_l + w_r)
    y = (w_l * y_l + w_r * y_r) / (w_l + w_r)
    a = np.sqrt((gamma - 1.0) * (h - 0.5 * u * u))
    rho_hat = w_l * w_r

    d_rho, d_u, d_p = rho_r - rho_l, u_r - u_l, p_r - p_l
    alpha1 = (d_p - rho_hat * a * d_u) / (2.0 * a * a)
    alpha2 = d_rho - d_p / (a * a)
    alpha4 = (d_p + rho_hat * a * d_u) / (2.0 * a * a)
    alpha3 = (right[3] - left[3]) - y * (alpha1 + alpha4)

    r1 = np.array([1.0, u - a, h - u * a, y])
    r2 = np.array([1.0, u, 0.5 * u * u, 0.0])
    r3 = np.array([0.0, 0.0, 0.0, 1.0])
    r4 = np.array([1.0, u + a, h + u * a, y])

    def flux(rho, u_, p, h_, y_):
        return np.array([rho * u_, rho * u_ * u_ + p, rho * h_ * u_, rho * u_ * y_])

    average = 0.5 * (flux(rho_l, u_l, p_l, h_l, y_l) + flux(rho_r, u_r, p_r, h_r, y_r))
    diffusion = (
        abs(u - a) * alpha1 * r1 + abs(u) * alpha2 * r2 + abs(u) * alpha3 * r3 + abs(u + a) * alpha4 * r4
    )
    return average - 0.5 * diffusion


######################################################################
#  C O M P A T I B I L I T Y   T E S T   C A S E S
######################################################################
class TestCompatibility(unittest.TestCase):
    """Test Cases for scheme selection"""

    def test_scheme_names(self):
        """It should List every scheme in CLI spelling"""
        self.assertEqual(
            SchemeKind.names(),
            ["movers_n", "movers_1", "movers_plus", "ricca", "rusanov", "steger_warming", "van_leer", "roe"],
        )
        self.assertTrue(SchemeKind.RICCA.is_central)
        self.assertFalse(SchemeKind.ROE.is_central)
        self.assertEqual(len(CENTRAL_SCHEMES), 5)

    def test_upwind_restrictions(self):
        """It should Restrict the upwind schemes to 1D mass fraction problems"""
        for scheme in (SchemeKind.STEGER_WARMING, SchemeKind.VAN_LEER, SchemeKind.ROE):
            check_compatibility(scheme, AIR_HELIUM, 1)
            self.assertRaises(SchemeCompatibilityError, check_compatibility, scheme, GAMMA_CONS, 1)
            self.assertRaises(SchemeCompatibilityError, check_compatibility, scheme, AIR_HELIUM, 2)
        for scheme in CENTRAL_SCHEMES:
            check_compatibility(scheme, GAMMA_QUASI, 2)

    def test_upwind_flux_rejects_gamma_model(self):
        """It should not Compute an upwind flux for the gamma-based model"""
        left = g_state(1.0, 0.0, 1.0, 1.4)
        self.assertRaises(SchemeCompatibilityError, steger_warming_flux, left, left, GAMMA_CONS)
        self.assertRaises(SchemeCompatibilityError, van_leer_flux, left, left, GAMMA_CONS)
        self.assertRaises(SchemeCompatibilityError, roe_flux, left, left, GAMMA_CONS)
        self.assertRaises(
            SchemeCompatibilityError, interface_flux, left, left, SchemeKind.ROE, GAMMA_CONS
        )

    def test_central_flux_rejects_upwind(self):
        """It should not Run an upwind scheme through the central framework"""
        left = y_state(1.0, 0.0, 1.0, 0.5)
        self.assertRaises(
            SchemeCompatibilityError, central_flux, left, left, SchemeKind.ROE, AIR_HELIUM
        )


######################################################################
#  C E N T R A L   S C H E M E   T E S T   C A S E S
######################################################################
class TestCentralSchemes(unittest.TestCase):
    """Test Cases for the central framework and its coefficient rules"""

    def setUp(self):
        """This runs before each test"""
        factory.random.reseed_random(7)
        self.rng = np.random.default_rng(7)

    def test_consistency(self):
        """It should Return the physical flux between identical states"""
        for _ in range(20):
            mf = to_conserved(MassFractionStateFactory(), AIR_HELIUM)
            gb = to_conserved(GammaStateFactory(), GAMMA_QUASI)
            for scheme in CENTRAL_SCHEMES:
                result = central_flux(mf, mf, scheme, AIR_HELIUM)
                np.testing.assert_allclose(result.flux, physical_flux(mf, AIR_HELIUM), rtol=1e-14, atol=1e-14)
                result = central_flux(gb, gb, scheme, GAMMA_QUASI)
                np.testing.assert_allclose(result.flux, physical_flux(gb, GAMMA_QUASI), rtol=1e-14, atol=1e-14)

    def test_movers_n_coefficient_inside_eigen_range(self):
        """It should Clip every MOVERS-n coefficient into [lambda_min, lambda_max]"""
        left = random_mass_fraction_batch(self.rng, 500)
        right = random_mass_fraction_batch(self.rng, 500)
        alpha, clipped = movers_n_alpha(left, right, AIR_HELIUM)
        self.assertEqual(alpha.shape, (4, 500))
        self.assertEqual(clipped.dtype, bool)
        speeds = []
        for cons in (left, right):
            rho, u = cons[0], cons[1] / cons[0]
            y1 = cons[3] / rho
            gamma = 1.4 * y1 + 1.6 * (1.0 - y1)
            p = (gamma - 1.0) * (cons[2] - 0.5 * rho * u * u)
            speeds.append(np.abs(u) + np.sqrt(gamma * p / rho))
        lambda_max = np.maximum(*speeds)
        self.assertTrue(np.all(alpha <= lambda_max * (1.0 + 1e-12)))
        self.assertTrue(np.all(alpha >= 0.0))

    def test_movers_n_stationary_shock(self):
        """It should Floor the coefficient of a stationary shock at the acoustic speed"""
        # stationary normal shock in air: the flux is continuous so |dF/dU| = 0
        gamma, mach = 1.4, 2.0
        rho_l, u_l, p_l = 1.0, mach * np.sqrt(1.4), 1.0
        rho_r = rho_l * (gamma + 1.0) * mach**2 / ((gamma - 1.0) * mach**2 + 2.0)
        u_r = rho_l * u_l / rho_r
        p_r = p_l * (2.0 * gamma * mach**2 - (gamma - 1.0)) / (gamma + 1.0)
        left = y_state(rho_l, u_l, p_l, 1.0, SINGLE_GAS)
        right = y_state(rho_r, u_r, p_r, 1.0, SINGLE_GAS)
        alpha, clipped = movers_n_alpha(left, right, SINGLE_GAS)
        a_i = sound_speed(0.5 * (rho_l + rho_r), 0.5 * (p_l + p_r), MixtureThermo(1.4))
        lam_max = max(u_l + np.sqrt(1.4), u_r + sound_speed(rho_r, p_r, MixtureThermo(1.4)))
        np.testing.assert_allclose(alpha[:3], min(u_l + a_i, lam_max), rtol=1e-10)
        self.assertTrue(np.all(clipped[:3]))

    def test_diaphragm_at_rest_is_diffused(self):
        """It should Diffuse mass and energy across a pressure jump at rest"""
        # the mass and energy fluxes are continuous here, only p jumps
        left = y_state(1.0, 0.0, 1000.0, 1.0)
        right = y_state(0.125, 0.0, 1.0, 0.0)
        a_i = sound_speed(0.5625, 500.5, MixtureThermo(1.5))
        lam_max = sound_speed(1.0, 1000.0, MixtureThermo(1.4))
        np.testing.assert_allclose(ricca_alpha(left, right, AIR_HELIUM), a_i, rtol=1e-12)
        alpha, _ = movers_n_alpha(left, right, AIR_HELIUM)
        np.testing.assert_allclose(alpha[[0, 2, 3]], a_i, rtol=1e-12)
        np.testing.assert_allclose(alpha[1], lam_max, rtol=1e-12)
        alpha1, clipped1 = movers_1_alpha(left, right, AIR_HELIUM)
        np.testing.assert_allclose(alpha1, a_i, rtol=1e-12)
        self.assertTrue(clipped1)
        for scheme in (SchemeKind.MOVERS_N, SchemeKind.MOVERS_1, SchemeKind.MOVERS_PLUS):
            result = central_flux(left, right, scheme, AIR_HELIUM)
            self.assertGreater(result.flux[0], 0.0)
            self.assertGreater(result.flux[2], 0.0)

    def test_species_row_follows_mass_row(self):
        """It should Give the rho Y1 row the coefficient of the mass row"""
        left = random_mass_fraction_batch(self.rng, 50)
        right = random_mass_fraction_batch(self.rng, 50)
        alpha, clipped = movers_n_alpha(left, right, AIR_HELIUM)
        np.testing.assert_array_equal(alpha[3], alpha[0])
        np.testing.assert_array_equal(clipped[3], clipped[0])
        d = movers_plus_diffusion(left, right, AIR_HELIUM)
        np.testing.assert_allclose(d[3] * (right[0] - left[0]), d[0] * (right[3] - left[3]), rtol=1e-12, atol=1e-12)

    def test_coefficients_at_least_the_advection_speed(self):
        """It should Keep every MOVERS coefficient above max |Vn|"""
        left = random_mass_fraction_batch(self.rng, 200)
        right = random_mass_fraction_batch(self.rng, 200)
        floor = np.maximum(np.abs(left[1] / left[0]), np.abs(right[1] / right[0]))
        alpha, _ = movers_n_alpha(left, right, AIR_HELIUM)
        self.assertTrue(np.all(alpha >= floor * (1.0 - 1e-12)))
        alpha1, _ = movers_1_alpha(left, right, AIR_HELIUM)
        self.assertTrue(np.all(alpha1 >= floor * (1.0 - 1e-12)))

    def test_steady_contact_has_no_diffusion(self):
        """It should Give zero diffusion across a steady contact"""
        left = y_state(1.0, 0.0, 1.0, 1.0)
        right = y_state(0.125, 0.0, 1.0, 0.0)
        alpha, _ = movers_n_alpha(left, right, AIR_HELIUM)
        # the momentum jump vanishes, so that row falls back to lambda_max
        self.assertTrue(np.all(alpha[[0, 2, 3]] == 0.0))
        alpha1, _ = movers_1_alpha(left, right, AIR_HELIUM)
        self.assertEqual(alpha1, 0.0)
        self.assertEqual(ricca_alpha(left, right, AIR_HELIUM), 0.0)
        self.assertTrue(np.all(movers_plus_diffusion(left, right, AIR_HELIUM) == 0.0))
        for scheme in (SchemeKind.MOVERS_N, SchemeKind.MOVERS_1, SchemeKind.RICCA, SchemeKind.MOVERS_PLUS):
            result = central_flux(left, right, scheme, AIR_HELIUM)
            np.testing.assert_allclose(result.flux, [0.0, 1.0, 0.0, 0.0], atol=1e-15)

    def test_rusanov_diffuses_a_steady_contact(self):
        """It should Smear a steady contact with the Rusanov coefficient"""
        left = y_state(1.0, 0.0, 1.0, 1.0)
        right = y_state(0.125, 0.0, 1.0, 0.0)
        expected = max(np.sqrt(1.4), np.sqrt(1.6 / 0.125))
        self.assertAlmostEqual(rusanov_alpha(left, right, AIR_HELIUM), expected, places=14)
        result = central_flux(left, right, SchemeKind.RUSANOV, AIR_HELIUM)
        self.assertGreater(result.flux[0], 0.0)

    def test_ricca_pressure_switch(self):
        """It should Add the interface sound speed only across a pressure jump"""
        left = g_state(1.0, 1.0, 1.0, 1.4)
        right = g_state(0.125, 1.0, 1.0, 1.2)
        self.assertAlmostEqual(ricca_alpha(left, right, GAMMA_CONS), 1.0, places=14)
        right = g_state(0.125, 1.0, 0.1, 1.4)
        a_i = sound_speed(0.5625, 0.55, MixtureThermo(1.4))
        self.assertAlmostEqual(ricca_alpha(left, right, GAMMA_CONS), 1.0 + a_i, places=14)

    def test_ricca_quiet_face(self):
        """It should Fall back to the mean speed when nothing jumps"""
        left = g_state(1.0, -0.5, 1.0, 1.4)
        self.assertAlmostEqual(ricca_alpha(left, left, GAMMA_CONS), 0.5, places=15)

    def test_movers_plus_uniform_pressure(self):
        """It should Reduce MOVERS+ to mean-speed upwinding when p is uniform"""
        left = g_state(1.0, 1.0, 1.0, 1.4)
        right = g_state(0.125, 1.0, 1.0, 4.0, 1.0)
        d = movers_plus_diffusion(left, right, GAMMA_CONS)
        np.testing.assert_allclose(d, 0.5 * (right - left), rtol=1e-13, atol=1e-13)

    def test_movers_plus_strong_pressure_jump(self):
        """It should Floor MOVERS+ at the acoustic speed when the flux jump vanishes"""
        left = y_state(1.0, 0.0, 1000.0, 1.0)
        right = y_state(0.125, 0.0, 1.0, 0.0)
        d = movers_plus_diffusion(left, right, AIR_HELIUM)
        a_i = ricca_alpha(left, right, AIR_HELIUM)
        self.assertGreater(a_i, 0.0)
        np.testing.assert_allclose(d[[0, 2, 3]], 0.5 * a_i * (right - left)[[0, 2, 3]], rtol=1e-12)
        self.assertEqual(d[1], 0.0)

    def test_movers_plus_saturated_switch(self):
        """It should Use the full flux jump when the switch saturates inside the bounds"""
        # a right-running shock in air, p ratio 4.5 saturates Phi
        left = y_state(2.6666666666666665, 1.4790199457749043, 4.5, 1.0, SINGLE_GAS)
        right = y_state(1.0, 0.0, 1.0, 1.0, SINGLE_GAS)
        d = movers_plus_diffusion(left, right, SINGLE_GAS)
        d_flux = physical_flux(right, SINGLE_GAS) - physical_flux(left, SINGLE_GAS)
        d_cons = right - left
        lam_max = 1.4790199457749043 + sound_speed(2.6666666666666665, 4.5, MixtureThermo(1.4))
        coefficient = np.clip(np.abs(d_flux / d_cons)[:3] + 0.5 * 1.4790199457749043, 0.0, lam_max)
        floor = ricca_alpha(left, right, SINGLE_GAS)
        np.testing.assert_allclose(d[:3], 0.5 * np.maximum(coefficient, min(floor, lam_max)) * d_cons[:3], rtol=1e-12)

    def test_batched_faces(self):
        """It should Compute faces in a batch exactly as one at a time"""
        left = random_mass_fraction_batch(self.rng, 20, (-0.9, 0.9))
        right = random_mass_fraction_batch(self.rng, 20, (-0.9, 0.9))
        for scheme in SchemeKind:
            batch = interface_flux(left, right, scheme, AIR_HELIUM).flux
            for k in (0, 7, 19):
                single = interface_flux(left[:, k], right[:, k], scheme, AIR_HELIUM).flux
                np.testing.assert_allclose(batch[:, k], single, rtol=1e-13, atol=1e-14)


######################################################################
#  F L U X   V E C T O R   S P L I T T I N G   T E S T   C A S E S
######################################################################
class TestFluxVectorSplitting(unittest.TestCase):
    """Test Cases for Steger-Warming and van Leer"""

    def setUp(self):
        """This runs before each test"""
        self.rng = np.random.default_rng(11)

    def test_steger_warming_identity(self):
        """It should Split the flux so that F+ + F- = F on random states"""
        cons = random_mass_fraction_batch(self.rng, 10000)
        plus, minus = steger_warming_split(cons, AIR_HELIUM)
        flux = physical_flux(cons, AIR_HELIUM)
        scale = np.maximum(np.abs(flux), 1.0)
        self.assertLessEqual(np.max(np.abs(plus + minus - flux) / scale), 1e-13)

    def test_van_leer_identity(self):
        """It should Split mass and momentum so that F+ + F- = F for |M| <= 1"""
        cons = random_mass_fraction_batch(self.rng, 2000, (-1.0, 1.0))
        plus, minus = van_leer_split(cons, AIR_HELIUM)
        flux = physical_flux(cons, AIR_HELIUM)
        scale = np.maximum(np.abs(flux), 1.0)
        for row in (0, 1, 3):
            self.assertLessEqual(np.max(np.abs(plus[row] + minus[row] - flux[row]) / scale[row]), 1e-13)

    def test_van_leer_split_signs(self):
        """It should Keep the forward mass flux non-negative and the backward one non-positive"""
        cons = random_mass_fraction_batch(self.rng, 2000)
        plus, minus = van_leer_split(cons, AIR_HELIUM)
        self.assertTrue(np.all(plus[0] >= 0.0))
        self.assertTrue(np.all(minus[0] <= 0.0))

    def test_supersonic_upwinding(self):
        """It should Return the left flux exactly when both states move right supersonically"""
        left = y_state(1.0, 3.0, 1.0, 0.7)
        right = y_state(0.5, 2.5, 0.4, 0.2)
        expected = physical_flux(left, AIR_HELIUM)
        np.testing.assert_array_equal(steger_warming_flux(left, right, AIR_HELIUM).flux, expected)
        np.testing.assert_array_equal(van_leer_flux(left, right, AIR_HELIUM).flux, expected)

    def test_supersonic_left_going(self):
        """It should Return the right flux exactly when both states move left supersonically"""
        left = y_state(1.0, -3.0, 1.0, 0.7)
        right = y_state(0.5, -2.5, 0.4, 0.2)
        expected = physical_flux(right, AIR_HELIUM)
        np.testing.assert_array_equal(steger_warming_flux(left, right, AIR_HELIUM).flux, expected)
        np.testing.assert_array_equal(van_leer_flux(left, right, AIR_HELIUM).flux, expected)

    def test_upwind_consistency(self):
        """It should Return the physical flux between identical subsonic states"""
        state = y_state(1.0, 0.3, 1.0, 0.4)
        expected = physical_flux(state, AIR_HELIUM)
        np.testing.assert_allclose(steger_warming_flux(state, state, AIR_HELIUM).flux, expected, rtol=1e-13)
        np.testing.assert_allclose(van_leer_flux(state, state, AIR_HELIUM).flux[[0, 1, 3]], expected[[0, 1, 3]],
                                   rtol=1e-13)


######################################################################
#  R O E   T E S T   C A S E S
######################################################################
class TestRoe(unittest.TestCase):
    """Test Cases for the Roe flux of the mass fraction model"""

    def setUp(self):
        """This runs before each test"""
        self.rng = np.random.default_rng(5)

    def test_average_density(self):
        """It should Weight the averaged density by sqrt(rho)"""
        avg = roe_average(y_state(1.0, 0.0, 1.0, 0.5, SINGLE_GAS), y_state(4.0, 0.0, 1.0, 0.5, SINGLE_GAS), SINGLE_GAS)
        self.assertAlmostEqual(avg.rho, 3.0, places=14)

    def test_average_consistency(self):
        """It should Give B = -Y B' and B' = 0 for a single gas"""
        left, right = y_state(1.0, 0.2, 1.0, 0.8), y_state(0.5, -0.1, 0.7, 0.1)
        avg = roe_average(left, right, AIR_HELIUM)
        self.assertAlmostEqual(avg.b, -avg.y1 * avg.b_prime, places=15)
        self.assertLess(avg.b_prime, 0.0)
        single = roe_average(left, right, SINGLE_GAS)
        self.assertEqual(single.b_prime, 0.0)
        self.assertEqual(single.eigenvectors().shape, (4, 4))
        self.assertEqual(single.eigenvalues().shape, (4,))

    def test_matches_single_gas_roe(self):
        """It should Match a textbook Roe flux when both gammas are equal"""
        for _ in range(200):
            rho = self.rng.uniform(0.2, 3.0, 2)
            u = self.rng.uniform(-1.0, 1.0, 2)
            p = self.rng.uniform(0.2, 3.0, 2)
            y1 = self.rng.uniform(0.0, 1.0, 2)
            left = y_state(rho[0], u[0], p[0], y1[0], SINGLE_GAS)
            right = y_state(rho[1], u[1], p[1], y1[1], SINGLE_GAS)
            expected = single_gas_roe(left, right, 1.4)
            np.testing.assert_allclose(
                roe_flux(left, right, SINGLE_GAS).flux, expected, rtol=1e-12, atol=1e-12
            )

    def test_conservation_property(self):
        """It should Satisfy dF = A dU only when both gammas are equal"""
        left, right = y_state(1.0, 0.2, 1.0, 0.8, SINGLE_GAS), y_state(0.5, -0.1, 0.7, 0.1, SINGLE_GAS)
        self.assertLessEqual(roe_conservation_residual(left, right, SINGLE_GAS), 1e-12)
        left, right = y_state(1.0, 0.2, 1.0, 0.8), y_state(0.5, -0.1, 0.7, 0.1)
        self.assertGreater(roe_conservation_residual(left, right, AIR_HELIUM), 1e-12)

    def test_consistency(self):
        """It should Return the physical flux between identical states"""
        state = y_state(1.0, 0.4, 1.0, 0.3)
        np.testing.assert_allclose(
            roe_flux(state, state, AIR_HELIUM).flux, physical_flux(state, AIR_HELIUM), rtol=1e-14, atol=1e-14
        )

    def test_roe_failure(self):
        """It should raise a Roe failure when the averaged sound speed is imaginary"""
        # rho E = kinetic energy only: zero internal energy on both sides
        left = np.array([1.0, 1.0, 0.5, 1.0])
        self.assertRaises(RoeFailureError, roe_flux, left, left, AIR_HELIUM)


######################################################################
#  F A C E   L O O P   T E S T   C A S E S
######################################################################
class TestFaceFluxes(unittest.TestCase):
    """Test Cases for fluxes over whole padded blocks"""

    def test_1d_faces(self):
        """It should Compute n + 1 faces for n interior cells"""
        prim = PrimitiveState(np.linspace(1.0, 2.0, 7), (np.zeros(7),), np.ones(7), y1=np.full(7, 0.5))
        cells = CellStates.from_conserved(to_conserved(prim, AIR_HELIUM), AIR_HELIUM)
        for scheme in SchemeKind:
            result = face_fluxes(cells, scheme, AIR_HELIUM, 0)
            self.assertEqual(result.flux.shape, (4, 6))

    def test_2d_faces(self):
        """It should Compute faces along x and along y of a padded 2D block"""
        shape = (6, 5)
        prim = PrimitiveState(np.ones(shape), (np.ones(shape), np.zeros(shape)), np.ones(shape), gamma=1.4, p_inf=0.0)
        cells = CellStates.from_conserved(to_conserved(prim, GAMMA_CONS), GAMMA_CONS)
        self.assertEqual(face_fluxes(cells, SchemeKind.RICCA, GAMMA_CONS, 0).flux.shape, (6, 5, 3))
        self.assertEqual(face_fluxes(cells, SchemeKind.RICCA, GAMMA_CONS, 1).flux.shape, (6, 4, 4))

    def test_padding(self):
        """It should Extend the edge cells into the ghost layer"""
        prim = PrimitiveState(np.array([1.0, 2.0, 3.0]), (np.zeros(3),), np.ones(3), y1=np.ones(3))
        cells = CellStates.from_conserved(to_conserved(prim, AIR_HELIUM), AIR_HELIUM).pad(1)
        np.testing.assert_array_equal(cells.prim.rho, [1.0, 1.0, 2.0, 3.0, 3.0])
        self.assertEqual(cells.cons.shape, (4, 5))

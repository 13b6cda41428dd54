"""
Test cases for the case registry

Test cases can be run with:
    nosetests
    coverage report -m

While debugging just these tests it's convenient to use this:
    nosetests --stop tests/test_cases.py:TestCaseSpec
"""
import dataclasses
import json
import os
import tempfile
import unittest

import numpy as np

from mixsolver.cases import (
    REGISTRY,
    CaseSpec,
    Region,
    RegionShape,
    case_names,
    dump_case_config,
    get_case,
    load_case_config,
    sample_initial,
)
from mixsolver.errors import DataValidationError, UnknownCaseError
from mixsolver.grid import Grid
from mixsolver.state import GammaForm, ModelKind, PrimitiveState

EXPECTED_CASES = [
    "bubble_explosion_2d",
    "interface_only_perfect",
    "interface_only_stiff",
    "isolated_front",
    "liquid_gas_rp",
    "moving_interface_2d",
    "shock_contact_interaction",
    "sod_unequal_gamma",
    "sod_unequal_gamma_figvariant",
    "steady_contact",
    "stiff_shock_tube",
]


######################################################################
#  R E G I S T R Y   T E S T   C A S E S
######################################################################
class TestRegistry(unittest.TestCase):
    """Test Cases for the registered problems"""

    def test_case_names(self):
        """It should List every registered case, sorted"""
        self.assertEqual(case_names(), EXPECTED_CASES)

    def test_get_case(self):
        """It should Return a registered case by name"""
        case = get_case("sod_unequal_gamma")
        self.assertEqual(case.name, "sod_unequal_gamma")
        self.assertEqual(case.mixture.model, ModelKind.MASS_FRACTION)
        self.assertEqual(case.mixture.gas1.gamma, 1.6)
        self.assertEqual(case.mixture.gas2.gamma, 1.4)
        self.assertEqual(case.t_end, 0.21)
        self.assertEqual(case.cfl, 0.45)

    def test_unknown_case(self):
        """It should not Find an unregistered case and list the known ones"""
        with self.assertRaises(UnknownCaseError) as context:
            get_case("sod")
        self.assertIsInstance(context.exception, DataValidationError)
        self.assertEqual(context.exception.available, EXPECTED_CASES)
        self.assertIn("steady_contact", str(context.exception))

    def test_models_and_forms(self):
        """It should Pick the model and gamma form of every case"""
        self.assertTrue(get_case("interface_only_stiff").mixture.quasi_conservative)
        self.assertTrue(get_case("moving_interface_2d").mixture.quasi_conservative)
        self.assertEqual(get_case("liquid_gas_rp").mixture.gamma_form, GammaForm.CONSERVATIVE)
        self.assertEqual(get_case("bubble_explosion_2d").ndim, 2)
        self.assertTrue(get_case("steady_contact").steady)
        self.assertEqual(get_case("shock_contact_interaction").cells, (200,))

    def test_uniform_exact_solutions(self):
        """It should Record the uniform pressure and velocity where the exact solution has them"""
        self.assertEqual(get_case("steady_contact").exact_pressure, 1.0)
        self.assertEqual(get_case("interface_only_perfect").exact_velocity, (1.0,))
        self.assertEqual(get_case("moving_interface_2d").exact_velocity, (1.0, 1.0))
        self.assertIsNone(get_case("isolated_front").exact_pressure)

    def test_registry_round_trip(self):
        """It should Serialize and deserialize every registered case"""
        for case in REGISTRY.values():
            data = json.loads(json.dumps(case.serialize()))
            self.assertEqual(CaseSpec.deserialize(data), case)


######################################################################
#  C A S E   S P E C   T E S T   C A S E S
######################################################################
class TestCaseSpec(unittest.TestCase):
    """Test Cases for CaseSpec validation"""

    def setUp(self):
        """This runs before each test"""
        self.case = get_case("steady_contact")

    def test_reject_bad_settings(self):
        """It should not Create cases with bad settings"""
        self.assertRaises(DataValidationError, dataclasses.replace, self.case, regions=())
        self.assertRaises(DataValidationError, dataclasses.replace, self.case, cfl=0.0)
        self.assertRaises(DataValidationError, dataclasses.replace, self.case, cfl=1.5)
        self.assertRaises(DataValidationError, dataclasses.replace, self.case, t_end=-1.0)

    def test_reject_bad_states(self):
        """It should not Create cases whose region states are invalid"""
        bad = Region(PrimitiveState(1.0, (0.0,), 1.0, y1=2.0))
        self.assertRaises(DataValidationError, dataclasses.replace, self.case, regions=(bad,))
        flat = Region(PrimitiveState(1.0, (0.0, 0.0), 1.0, y1=0.5))
        self.assertRaises(DataValidationError, dataclasses.replace, self.case, regions=(flat,))

    def test_grid_override(self):
        """It should Build the case grid with other cell counts"""
        self.assertEqual(self.case.grid().cells, (100,))
        self.assertEqual(self.case.grid((40,)).spacing, (0.025,))
        self.assertRaises(DataValidationError, self.case.grid, (10, 10))

    def test_deserialize_bad_data(self):
        """It should not Deserialize a case with missing or bad data"""
        data = self.case.serialize()
        del data["mixture"]
        self.assertRaises(DataValidationError, CaseSpec.deserialize, data)
        data = self.case.serialize()
        data["cells"] = ["many"]
        self.assertRaises(DataValidationError, CaseSpec.deserialize, data)

    def test_region_round_trip(self):
        """It should Serialize and deserialize interval and disk regions"""
        state = PrimitiveState(1.0, (0.0, 0.0), 1.0, gamma=1.4, p_inf=0.0)
        for region in (
            Region(PrimitiveState(1.0, (0.0,), 1.0, y1=1.0), RegionShape.INTERVAL, lo=0.2, hi=None),
            Region(state, RegionShape.DISK, center=(0.5, 0.25), radius=0.1),
            Region(state),
        ):
            self.assertEqual(Region.deserialize(region.serialize()), region)
        self.assertRaises(DataValidationError, Region.deserialize, {"shape": "disk", "state": state.serialize()})
        self.assertRaises(DataValidationError, Region.deserialize, {"shape": "star", "state": state.serialize()})


######################################################################
#  S A M P L I N G   T E S T   C A S E S
######################################################################
class TestSampling(unittest.TestCase):
    """Test Cases for sampling regions onto grids"""

    def test_shock_tube_sampling(self):
        """It should Place the left state left of the diaphragm"""
        case = get_case("steady_contact")
        field = sample_initial(case, case.grid())
        rho = field.primitive.rho
        np.testing.assert_array_equal(rho[:50], 1.0)
        np.testing.assert_array_equal(rho[50:], 0.125)
        np.testing.assert_array_equal(field.primitive.y1[:50], 1.0)

    def test_total_mass(self):
        """It should Sum to the region densities times their cell counts"""
        case = get_case("shock_contact_interaction")
        grid = case.grid()
        field = sample_initial(case, grid)
        expected = (1.0 * 100 + 5.0 * 20 + 7.093 * 80) * grid.cell_volume
        self.assertAlmostEqual(field.totals(grid)[0], expected, places=12)

    def test_disk_sampling(self):
        """It should Fill the cells whose centers lie inside the disk"""
        case = get_case("bubble_explosion_2d")
        grid = case.grid((40, 40))
        field = sample_initial(case, grid)
        x, y = grid.mesh()
        inside = (x - 0.5) ** 2 + (y - 0.5) ** 2 < 0.04
        np.testing.assert_array_equal(field.primitive.rho[inside], 1.241)
        np.testing.assert_allclose(field.primitive.rho[~inside], 0.991)
        mass = (1.241 * np.count_nonzero(inside) + 0.991 * np.count_nonzero(~inside)) * grid.cell_volume
        self.assertAlmostEqual(field.totals(grid)[0], mass, places=12)
        np.testing.assert_array_equal(field.primitive.rho, field.primitive.rho.T)

    def test_uncovered_domain(self):
        """It should not Sample regions that leave cells uncovered"""
        case = get_case("steady_contact")
        partial = dataclasses.replace(case, regions=(case.regions[0],))
        self.assertRaises(DataValidationError, sample_initial, partial, partial.grid())

    def test_dimension_mismatch(self):
        """It should not Sample a 1D case onto a 2D grid"""
        case = get_case("steady_contact")
        grid = Grid((0.0, 0.0), (1.0, 1.0), (4, 4))
        self.assertRaises(DataValidationError, sample_initial, case, grid)


######################################################################
#  C O N F I G   F I L E   T E S T   C A S E S
######################################################################
class TestCaseConfig(unittest.TestCase):
    """Test Cases for JSON case files"""

    def setUp(self):
        """This runs before each test"""
        self.tempdir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tempdir.name, "case.json")

    def tearDown(self):
        """This runs after each test"""
        self.tempdir.cleanup()

    def test_dump_and_load(self):
        """It should Write a case to JSON and read it back"""
        case = get_case("liquid_gas_rp")
        dump_case_config(case, self.path)
        self.assertEqual(load_case_config(self.path), case)

    def test_edited_case(self):
        """It should Load a user edited case"""
        data = get_case("sod_unequal_gamma").serialize()
        data["name"] = "my_tube"
        data["cells"] = [64]
        data["cfl"] = 0.3
        with open(self.path, "w", encoding="utf-8") as handle:
            json.dump(data, handle)
        case = load_case_config(self.path)
        self.assertEqual(case.name, "my_tube")
        self.assertEqual(case.cells, (64,))
        self.assertEqual(case.cfl, 0.3)

    def test_invalid_json(self):
        """It should not Load a file that is not JSON"""
        with open(self.path, "w", encoding="utf-8") as handle:
            handle.write("{not json")
        self.assertRaises(DataValidationError, load_case_config, self.path)

    def test_missing_file(self):
        """It should raise an OS error for a missing file"""
        self.assertRaises(OSError, load_case_config, os.path.join(self.tempdir.name, "nope.json"))

import unittest
import sys
import os
import random
from fractions import Fraction

# Add parent directory to path to import modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from polyhedra import (
    DimensionMismatchError,
    EmptyPolyhedronError,
    HPolyhedron,
    LinearInequality,
    ProjectionBackendFactory,
    VPolyhedron,
    conic_hull,
    contains,
    feasible_point,
    h_to_v,
    intersect,
    is_empty,
    lineality_space,
    lp_optimize,
    minkowski_sum,
    negate,
    project,
    recession_cone,
    remove_redundant,
    set_equal,
    strictly_contains,
    v_to_h,
)
from polyhedra.double_description import lineality_basis
from polyhedra.linalg import dot, nullspace
from polyhedra.projection import BaseProjectionBackend, FourierMotzkinBackend
from polyhedra.rational import as_fraction, as_vector, format_fraction, format_vector, integer_scale

from random_instances import random_hpolyhedron, random_vpolyhedron


def H(dimension, *rows):
    """Rows given as (coefficients..., rhs)."""
    return HPolyhedron.from_rows(dimension, [(r[:-1], r[-1]) for r in rows])


def vectors(*items):
    return {as_vector(v) for v in items}


class TestRational(unittest.TestCase):

    def test_token_forms(self):
        self.assertEqual(as_fraction("3"), Fraction(3))
        self.assertEqual(as_fraction("-4/6"), Fraction(-2, 3))
        self.assertEqual(as_fraction("+1/2"), Fraction(1, 2))

    def test_rejects_bad_tokens(self):
        for token in ("1.5", "1/0", "a", "", "2/-3"):
            with self.assertRaises(ValueError):
                as_fraction(token)
        with self.assertRaises(ValueError):
            as_fraction(True)

    def test_formatting(self):
        self.assertEqual(format_fraction(Fraction(-3, 4)), "-3/4")
        self.assertEqual(format_fraction(Fraction(6, 3)), "2")
        self.assertEqual(format_vector((Fraction(1), Fraction(1, 2))), "(1, 1/2)")

    def test_integer_scale_keeps_sign(self):
        self.assertEqual(integer_scale(as_vector(["-2/3", "4/3", "2"])), as_vector([-1, 2, 3]))


class TestTypes(unittest.TestCase):

    def test_inequality_normalized(self):
        row = LinearInequality.build([2, 4], 6)
        self.assertEqual(row.coefficients, as_vector([1, 2]))
        self.assertEqual(row.rhs, 3)
        self.assertEqual(LinearInequality.build([2, 0], 0), LinearInequality.build([1, 0], 0))

    def test_describe(self):
        row = LinearInequality.build([1, -1], -1)
        self.assertEqual(row.describe(["y1", "y2"]), "y1 - y2 >= -1")

    def test_hpolyhedron_canonical(self):
        a = H(2, (0, 1, 0), (1, 0, 0), (2, 0, 0), (0, 0, -1))
        b = H(2, (1, 0, 0), (0, 1, 0))
        self.assertEqual(a, b)

    def test_contradiction_collapses(self):
        p = H(2, (1, 0, 0), (0, 0, 1))
        self.assertEqual(p, HPolyhedron.empty(2))
        self.assertTrue(p.is_trivially_empty)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            HPolyhedron(2, (LinearInequality.build([1, 0, 0], 0),))

    def test_vpolyhedron_without_points_is_empty(self):
        v = VPolyhedron(2, (), (as_vector([1, 0]),))
        self.assertTrue(v.is_empty)
        self.assertEqual(v.rays, ())


class TestConversions(unittest.TestCase):

    def test_h_to_v_cone(self):
        v = h_to_v(H(2, (0, 1, 0), (1, -1, 0)))
        self.assertEqual(set(v.points), vectors((0, 0)))
        self.assertEqual(set(v.rays), vectors((1, 0), (1, 1)))
        self.assertEqual(v.lines, ())

    def test_h_to_v_full_space(self):
        v = h_to_v(HPolyhedron.universe(2))
        self.assertEqual(set(v.points), vectors((0, 0)))
        self.assertEqual(set(v.lines), vectors((1, 0), (0, 1)))
        self.assertEqual(v.rays, ())

    def test_h_to_v_infeasible(self):
        v = h_to_v(H(1, (1, 0), (-1, 1)))
        self.assertTrue(v.is_empty)

    def test_h_to_v_polytope(self):
        v = h_to_v(H(2, (1, 0, 0), (0, 1, 0), (-1, -1, -1)))
        self.assertEqual(set(v.points), vectors((0, 0), (1, 0), (0, 1)))
        self.assertTrue(v.is_bounded)

    def test_v_to_h_graph_of_kernel_example(self):
        cone = VPolyhedron.cone(4, rays=[(1, 0, 2, -1), (1, 0, 0, 0), (0, 1, -1, 2), (0, 0, 1, 0), (0, 0, 0, 1)])
        expected = H(4, (1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 1, 1, 0, 0), (0, -3, 1, 2, 0), (1, -2, 0, 1, 0))
        self.assertEqual(v_to_h(cone), expected)

    def test_v_to_h_orthant(self):
        self.assertEqual(v_to_h(VPolyhedron.cone(2, rays=[(1, 0), (0, 1)])), H(2, (1, 0, 0), (0, 1, 0)))

    def test_v_to_h_empty(self):
        self.assertTrue(is_empty(v_to_h(VPolyhedron(3))))

    def test_v_to_h_with_line(self):
        p = v_to_h(VPolyhedron.cone(2, rays=[(1, 0)], lines=[(0, 1)]))
        self.assertEqual(p, H(2, (1, 0, 0)))

    def test_random_round_trips_and_projections(self):
        rng = random.Random(20240117)
        fm = FourierMotzkinBackend()
        checked = drawn = 0
        while checked < 1000:
            drawn += 1
            d = rng.randint(1, 4)
            p = random_hpolyhedron(rng, d, max_rows=5)
            v = h_to_v(p)
            self.assertTrue(set_equal(p, v_to_h(v)))
            if v.is_empty:
                self.assertTrue(is_empty(p))
                continue
            keep = sorted(rng.sample(range(d), rng.randint(1, d)))
            projected = fm.project(p, keep)
            cut = VPolyhedron(
                len(keep),
                tuple(tuple(x[i] for i in keep) for x in v.points),
                tuple(tuple(x[i] for i in keep) for x in v.rays),
                tuple(tuple(x[i] for i in keep) for x in v.lines),
            )
            self.assertTrue(set_equal(projected, v_to_h(cut)))
            checked += 1
        self.assertGreaterEqual(drawn, 1000)

    def test_random_v_round_trips(self):
        rng = random.Random(7)
        for _ in range(200):
            v = random_vpolyhedron(rng, rng.randint(1, 3))
            p = v_to_h(v)
            self.assertTrue(contains(p, v))
            self.assertTrue(set_equal(p, v_to_h(h_to_v(p))))

    def test_canonical_output_is_deterministic(self):
        p = H(3, (1, 1, 0, 0), (0, 1, -1, 1), (1, 0, 1, -2))
        self.assertEqual(h_to_v(p), h_to_v(H(3, (1, 0, 1, -2), (0, 1, -1, 1), (2, 2, 0, 0))))


class TestProjection(unittest.TestCase):

    def test_projection_can_remove_all_rows(self):
        p = H(2, (-1, 1, 0), (1, 1, 0))
        self.assertEqual(project(p, [1]), H(1, (1, 0)))
        self.assertEqual(project(p, [0]), HPolyhedron.universe(1))

    def test_natural_cone_system_of_first_example(self):
        rows = [(1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 1), (0, 1, 1, 0), (1, 2, 1, -1)]
        system = HPolyhedron.from_rows(4, [(r, 0) for r in rows] + [((r[0], r[1], 0, 0), 0) for r in rows])
        self.assertTrue(set_equal(project(system, [2, 3]), H(2, (1, 0, 0), (0, 1, 0))))

    def test_backends_agree(self):
        rng = random.Random(99)
        for _ in range(100):
            p = random_hpolyhedron(rng, 3, max_rows=4)
            keep = [2, 0]
            a = project(p, keep, backend="fourier_motzkin")
            b = project(p, keep, backend="double_description")
            self.assertTrue(set_equal(a, b))

    def test_keep_order_respected(self):
        p = H(2, (1, 0, 1), (0, 1, 5))
        self.assertEqual(project(p, [1, 0]), H(2, (1, 0, 5), (0, 1, 1)))

    def test_empty_projects_to_empty(self):
        p = H(3, (1, 0, 0, 1), (-1, 0, 0, 0))
        self.assertTrue(is_empty(project(p, [1, 2])))

    def test_factory(self):
        self.assertIn("fourier_motzkin", ProjectionBackendFactory.get_available_backends())
        self.assertIsInstance(ProjectionBackendFactory.create_backend("Fourier_Motzkin"), FourierMotzkinBackend)
        with self.assertRaises(ValueError):
            ProjectionBackendFactory.create_backend("simplex")
        with self.assertRaises(ValueError):
            ProjectionBackendFactory.register_backend("bad", object)

    def test_register_backend(self):
        class Generators(BaseProjectionBackend):
            def project(self, p, keep):
                return project(p, keep, backend="generators")

        ProjectionBackendFactory.register_backend("custom_generators", Generators)
        try:
            self.assertEqual(project(H(2, (1, 1, 0), (0, 1, 0)), [1], backend="custom_generators"), H(1, (1, 0)))
        finally:
            ProjectionBackendFactory._backends.pop("custom_generators")

    def test_rejects_bad_keep(self):
        with self.assertRaises(ValueError):
            project(HPolyhedron.universe(2), [0, 0])
        with self.assertRaises(ValueError):
            project(HPolyhedron.universe(2), [2])


class TestLinearProgramming(unittest.TestCase):

    def test_optimal(self):
        outcome = lp_optimize(H(2, (1, 0, 0), (0, 1, 0)), [1, 0])
        self.assertTrue(outcome.is_optimal)
        self.assertEqual(outcome.value, 0)
        self.assertEqual(outcome.witness[0], 0)

    def test_unbounded_ray(self):
        p = H(2, (0, 1, 0), (1, 1, 0))
        outcome = lp_optimize(p, [1, 0])
        self.assertTrue(outcome.is_unbounded)
        ray = outcome.witness
        self.assertLess(ray[0], 0)
        for row in p.inequalities:
            self.assertGreaterEqual(dot(row.coefficients, ray), 0)

    def test_infeasible(self):
        self.assertTrue(lp_optimize(H(1, (1, 1), (-1, 0)), [1]).is_infeasible)

    def test_maximize(self):
        outcome = lp_optimize(H(2, (-1, 0, -3), (0, -1, -2), (1, 0, 0), (0, 1, 0)), [1, 1], sense="max")
        self.assertEqual(outcome.value, 5)
        self.assertEqual(outcome.witness, as_vector([3, 2]))

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            lp_optimize(HPolyhedron.universe(1), [1], sense="up")
        with self.assertRaises(DimensionMismatchError):
            lp_optimize(HPolyhedron.universe(2), [1])

    def test_without_rows(self):
        outcome = lp_optimize(HPolyhedron.universe(2), [1, 0])
        self.assertTrue(outcome.is_unbounded)
        self.assertLess(outcome.witness[0], 0)
        outcome = lp_optimize(HPolyhedron.universe(2), [0, 1], sense="max")
        self.assertTrue(outcome.is_unbounded)
        self.assertGreater(outcome.witness[1], 0)
        outcome = lp_optimize(HPolyhedron.universe(2), [0, 0])
        self.assertTrue(outcome.is_optimal)
        self.assertEqual(outcome.value, 0)
        self.assertEqual(feasible_point(HPolyhedron.universe(3)), as_vector([0, 0, 0]))

    def test_fractional_optimum(self):
        p = H(2, (1, 0, 0), (0, 1, 0), (-2, -3, -1))
        outcome = lp_optimize(p, [-1, -1])
        self.assertEqual(outcome.value, Fraction(-1, 2))

    def test_random_optimum_not_beaten_by_vertices(self):
        rng = random.Random(5)
        for _ in range(150):
            d = rng.randint(1, 3)
            p = random_hpolyhedron(rng, d, max_rows=5)
            objective = [rng.randint(-2, 2) for _ in range(d)]
            outcome = lp_optimize(p, objective)
            v = h_to_v(p)
            if outcome.is_infeasible:
                self.assertTrue(v.is_empty)
            elif outcome.is_optimal:
                self.assertTrue(p.contains_point(outcome.witness))
                self.assertEqual(dot(as_vector(objective), outcome.witness), outcome.value)
                for point in v.points:
                    self.assertGreaterEqual(dot(as_vector(objective), point), outcome.value)
            else:
                self.assertLess(dot(as_vector(objective), outcome.witness), 0)

    def test_feasible_point(self):
        p = H(2, (1, 1, 3), (-1, 0, -1))
        point = feasible_point(p)
        self.assertTrue(p.contains_point(point))
        self.assertIsNone(feasible_point(HPolyhedron.empty(2)))


class TestOperations(unittest.TestCase):

    def test_is_empty(self):
        self.assertTrue(is_empty(H(1, (1, 1), (-1, 0))))
        self.assertFalse(is_empty(H(2, (1, -1, 0), (-1, 1, 0))))
        self.assertFalse(is_empty(H(2, (1, 0, 0), (0, 1, 0))))

    def test_remove_redundant(self):
        p = H(2, (1, 0, 0), (0, 1, 0), (1, 1, -1), (1, 0, -5))
        self.assertEqual(remove_redundant(p), H(2, (1, 0, 0), (0, 1, 0)))
        self.assertEqual(remove_redundant(H(1, (1, 1), (-1, 0))), HPolyhedron.empty(1))

    def test_remove_redundant_single_row(self):
        halfplane = H(2, (1, 0, 0))
        self.assertEqual(remove_redundant(halfplane), halfplane)
        self.assertEqual(remove_redundant(HPolyhedron.universe(2)), HPolyhedron.universe(2))
        self.assertEqual(intersect(halfplane, HPolyhedron.universe(2)), halfplane)

    def test_remove_redundant_keeps_implicit_equations(self):
        p = H(2, (1, 0, 0), (0, 1, 0), (-1, -1, 0), (1, -1, -3))
        reduced = remove_redundant(p)
        self.assertTrue(set_equal(reduced, HPolyhedron.origin(2)))
        self.assertEqual(len(reduced.inequalities), 4)

    def test_contains(self):
        orthant = H(2, (1, 0, 0), (0, 1, 0))
        self.assertTrue(contains(orthant, VPolyhedron.cone(2, rays=[(1, 0), (1, 1)])))
        self.assertFalse(contains(orthant, VPolyhedron.cone(2, lines=[(1, 0)])))
        g_zero = H(2, (0, 1, 0), (1, -1, 0))
        self.assertFalse(contains(g_zero, h_to_v(orthant)))
        self.assertTrue(contains(orthant, VPolyhedron(2)))

    def test_set_equal(self):
        a = H(2, (1, 0, 0), (0, 1, 0))
        self.assertTrue(set_equal(a, a))
        self.assertTrue(set_equal(H(1, (1, 0)), H(1, (2, 0))))
        self.assertFalse(set_equal(a, H(2, (1, 0, 0))))

    def test_strictly_contains(self):
        big = H(2, (0, 1, 0), (1, 1, 0))
        small = H(2, (1, 0, 0), (0, 1, 0))
        self.assertTrue(strictly_contains(big, small))
        self.assertFalse(strictly_contains(small, small))
        self.assertFalse(strictly_contains(small, big))

    def test_lineality_space(self):
        self.assertEqual(lineality_space(H(2, (1, 0, 0), (0, 1, 0))).lines, ())
        self.assertEqual(set(lineality_space(H(2, (1, 0, 0))).lines), vectors((0, 1)))
        with self.assertRaises(EmptyPolyhedronError):
            lineality_space(HPolyhedron.empty(2))

    def test_lineality_matches_nullspace(self):
        rng = random.Random(3)
        for _ in range(100):
            p = random_hpolyhedron(rng, 3, max_rows=3, homogeneous=True)
            lines = lineality_space(p).lines
            rows = [row.coefficients for row in p.inequalities]
            self.assertEqual(len(lines), len(nullspace(rows, 3)))
            for z in lines:
                for row in p.inequalities:
                    self.assertEqual(dot(row.coefficients, z), 0)
            self.assertEqual(lines, tuple(sorted(lineality_basis(p))))

    def test_recession_cone(self):
        self.assertEqual(recession_cone(H(2, (1, 0, 1), (0, 1, -3))), H(2, (1, 0, 0), (0, 1, 0)))
        cone = H(2, (0, 1, 0), (1, -1, 0))
        self.assertEqual(recession_cone(cone), cone)
        with self.assertRaises(EmptyPolyhedronError):
            recession_cone(HPolyhedron.empty(1))

    def test_recession_cone_matches_generators(self):
        rng = random.Random(11)
        for _ in range(150):
            p = random_hpolyhedron(rng, rng.randint(1, 3), max_rows=4)
            if is_empty(p):
                continue
            v = h_to_v(p)
            generated = v_to_h(VPolyhedron.cone(p.dimension, v.rays, v.lines))
            self.assertTrue(set_equal(recession_cone(p), generated))

    def test_bounded_polytope_has_trivial_recession_cone(self):
        polytope = H(2, (1, 0, 0), (0, 1, 0), (-1, -1, -2))
        self.assertTrue(h_to_v(recession_cone(polytope)).is_bounded)

    def test_minkowski_sum(self):
        g10 = h_to_v(H(2, (0, 1, 0), (1, 0, 0), (1, -1, -1)))
        g00 = h_to_v(H(2, (0, 1, 0), (1, -1, 0)))
        self.assertTrue(set_equal(v_to_h(minkowski_sum(g10, g00)), v_to_h(g10)))
        origin = VPolyhedron.cone(2)
        self.assertTrue(set_equal(v_to_h(minkowski_sum(g00, origin)), v_to_h(g00)))
        with self.assertRaises(EmptyPolyhedronError):
            minkowski_sum(VPolyhedron(2), origin)

    def test_minkowski_sum_membership(self):
        rng = random.Random(13)
        for _ in range(60):
            a, b = random_vpolyhedron(rng, 2), random_vpolyhedron(rng, 2)
            total = v_to_h(minkowski_sum(a, b))
            for p in a.points:
                for q in b.points:
                    self.assertTrue(total.contains_point(tuple(x + y for x, y in zip(p, q))))

    def test_conic_hull(self):
        self.assertEqual(conic_hull([], 2), HPolyhedron.origin(2))
        simplex = VPolyhedron(2, (as_vector([1, 0]), as_vector([0, 1])))
        self.assertTrue(set_equal(conic_hull([simplex], 2), H(2, (1, 0, 0), (0, 1, 0))))
        g01 = h_to_v(H(2, (0, 1, 1), (1, 0, -1), (1, -1, -2)))
        hull = conic_hull([g01], 2)
        self.assertTrue(hull.contains_point(as_vector([-1, 1])))
        self.assertTrue(H(2, (0, 1, 0), (1, 1, 0)).contains_point(as_vector([-1, 1])))

    def test_intersect_and_negate(self):
        orthant = H(2, (1, 0, 0), (0, 1, 0))
        self.assertEqual(intersect(orthant, HPolyhedron.universe(2)), orthant)
        self.assertTrue(set_equal(intersect(negate(orthant), orthant), HPolyhedron.origin(2)))
        q = H(2, (1, 2, 0), (2, 1, 0))
        self.assertEqual(h_to_v(intersect(negate(orthant), q)).rays, ())

    def test_operations_are_pure(self):
        p = H(3, (1, 0, 0, 0), (0, 1, -1, 1), (1, 1, 1, -1))
        self.assertEqual(h_to_v(p), h_to_v(p))
        self.assertEqual(remove_redundant(p), remove_redundant(p))


if __name__ == '__main__':
    unittest.main()

# This workaround makes sure that we can import from the parent dir
import sys
sys.path.append('..')

from unitarylm.foundation import ContextMismatchError, DimensionError, LatticeError, WeylError
from unitarylm.harness.sampling import make_rng, random_element
from unitarylm.weyl import (GroupContext, LevelStructure, WeylElement, affine_action, compose,
                            embed_cochar_gu_to_gsp, embed_gsp_to_gl, embed_gu_to_gsp, identity, inverse,
                            kottwitz_invariant, lift_cochar_gsp_to_gu, lift_gsp_to_gu, restrict_gl_to_gsp,
                            translation, weyl_orbit)
import unittest

gl2 = GroupContext.gl(2)
gsp1 = GroupContext.gsp(1)
gsp2 = GroupContext.gsp(2)
gu1 = GroupContext.gu(1)
gu2 = GroupContext.gu(2)

swap = WeylElement(gl2, [2, 1], [0, 0])


class TestGroupContext(unittest.TestCase):

    def test_ambient_dim(self):
        self.assertEqual(GroupContext.gl(4).ambient_dim, 4)
        self.assertEqual(gsp2.ambient_dim, 4)
        self.assertEqual(gu2.ambient_dim, 5)

    def test_bad_context(self):
        self.assertRaises(WeylError, GroupContext, 'SO', 2)
        self.assertRaises(WeylError, GroupContext, 'GU', 0)

    def test_finite_weyl_group_orders(self):
        self.assertEqual(len(GroupContext.gl(3).finite_weyl_group()), 6)
        self.assertEqual(len(gsp2.finite_weyl_group()), 8)
        self.assertEqual(len(gu1.finite_weyl_group()), 2)
        self.assertEqual(len(gu2.finite_weyl_group()), 8)

    def test_lattice(self):
        self.assertTrue(gu1.in_lattice((2, 1, 0)))
        self.assertFalse(gu1.in_lattice((2, 0, 0)))
        self.assertTrue(gsp2.in_lattice((2, 1, 1, 0)))
        self.assertFalse(gsp2.in_lattice((2, 1, 0, 0)))

    def test_omega(self):
        self.assertEqual(gu1.omega(0), (0, 0, 0))
        self.assertEqual(gu1.omega(1), (-1, 0, 0))
        self.assertEqual(gu1.omega(-1), (0, 0, 1))
        self.assertEqual(gu1.omega(3), (-1, -1, -1))

    def test_omega_generator_is_length_zero_shift(self):
        tau = gsp2.omega_generator()
        self.assertEqual(tau.act((1, 2, 3, 4)), (3, 4, 2, 3))
        self.assertEqual(tau.kottwitz(), 1)


class TestLevelStructure(unittest.TestCase):

    def test_parse_and_residues(self):
        level = LevelStructure.parse(gu1, '0,1')
        self.assertEqual(level.indices, (0, 1))
        self.assertEqual(level.residues(), (0, 1, 2))
        self.assertTrue(level.is_iwahori())

    def test_bad_level(self):
        self.assertRaises(WeylError, LevelStructure, gu1, [])
        self.assertRaises(WeylError, LevelStructure, gu1, [2])
        self.assertRaises(WeylError, LevelStructure.parse, gu1, 'a,b')

    def test_for_gl(self):
        level = LevelStructure(gsp2, [1])
        self.assertEqual(level.for_gl().indices, (1, 3))
        self.assertEqual(level.for_gl().context, GroupContext.gl(4))


class TestWeylElement(unittest.TestCase):

    def test_identity(self):
        self.assertEqual(identity(gl2).text(), 'perm=[1,2];trans=[0,0]')
        self.assertEqual(identity(gu1).text(), 'perm=[1,2,3];trans=[0,0,0]')

    def test_compose(self):
        self.assertEqual(compose(translation(gl2, (1, 0)), swap), WeylElement(gl2, [2, 1], [1, 0]))
        self.assertEqual(compose(swap, translation(gl2, (1, 0))), WeylElement(gl2, [2, 1], [0, 1]))

    def test_inverse(self):
        self.assertEqual(inverse(translation(gu1, (2, 1, 0))), translation(gu1, (-2, -1, 0)))
        self.assertEqual(inverse(WeylElement(gl2, [2, 1], [1, 0])), WeylElement(gl2, [2, 1], [0, -1]))
        self.assertEqual(inverse(identity(gsp1)), identity(gsp1))

    def test_group_axioms(self):
        rng = make_rng(7)
        for context in (gl2, gsp2, gu2):
            e = identity(context)
            for _ in range(100):
                a, b, c = (random_element(context, rng, 6, components=(-1, 0, 1)) for _ in range(3))
                self.assertEqual(a * inverse(a), e)
                self.assertEqual((a * b) * c, a * (b * c))
                self.assertEqual(kottwitz_invariant(a * b), a.kottwitz() + b.kottwitz())
                self.assertTrue(context.in_lattice((a * b).trans))

    def test_affine_action(self):
        self.assertEqual(affine_action(translation(gu1, (2, 1, 0)), (-1, 0, 0)), (1, 1, 0))
        self.assertEqual(affine_action(WeylElement(gu1, [3, 2, 1], [0, 0, 0]), (-1, 0, 0)), (0, 0, -1))
        rng = make_rng(3)
        for _ in range(50):
            a = random_element(gu2, rng, 5)
            b = random_element(gu2, rng, 5)
            x = tuple(rng.randint(-3, 3) for _ in range(5))
            self.assertEqual(affine_action(a * b, x), affine_action(a, affine_action(b, x)))
            shifted = affine_action(a, tuple(v - 1 for v in x))
            self.assertEqual(shifted, tuple(v - 1 for v in affine_action(a, x)))

    def test_dimension_mismatch(self):
        self.assertRaises(DimensionError, affine_action, identity(gu1), (0, 0))

    def test_translation_lattice(self):
        self.assertRaises(LatticeError, translation, gu1, (2, 0, 0))
        self.assertTrue(translation(gsp2, (2, 1, 1, 0)).is_translation())

    def test_bad_permutation(self):
        self.assertRaises(LatticeError, WeylElement, gu1, [2, 1, 3], [0, 0, 0])

    def test_context_mismatch(self):
        self.assertRaises(ContextMismatchError, compose, identity(gsp1), identity(gl2))

    def test_kottwitz(self):
        self.assertEqual(kottwitz_invariant(translation(gu1, (2, 1, 0))), 1)
        self.assertEqual(kottwitz_invariant(translation(gsp1, (2, 0))), 2)
        self.assertEqual(kottwitz_invariant(swap), 0)

    def test_text(self):
        w = WeylElement(gu1, [3, 2, 1], [1, 0, -1])
        self.assertEqual(w.text(), 'perm=[3,2,1];trans=[1,0,-1]')
        self.assertEqual(WeylElement.from_text(gu1, w.text()), w)
        self.assertRaises(WeylError, WeylElement.from_text, gu1, 'perm=3,2,1')

    def test_weyl_orbit(self):
        self.assertEqual(weyl_orbit(gl2, (1, 0)), {(1, 0), (0, 1)})
        self.assertEqual(weyl_orbit(gu1, (2, 1, 0)), {(2, 1, 0), (0, 1, 2)})
        self.assertEqual(weyl_orbit(gsp2, (1, 1, 1, 1)), {(1, 1, 1, 1)})


class TestEmbeddings(unittest.TestCase):

    def test_gu_to_gsp(self):
        self.assertEqual(embed_gu_to_gsp(translation(gu1, (2, 1, 0))), translation(gsp1, (2, 0)))
        self.assertEqual(embed_gu_to_gsp(identity(gu2)), identity(gsp2))

    def test_gsp_to_gl(self):
        self.assertEqual(embed_gsp_to_gl(translation(gsp1, (2, 0))), translation(gl2, (2, 0)))
        w = WeylElement(gsp2, [4, 3, 2, 1], [0, 0, 0, 0])
        self.assertEqual(embed_gsp_to_gl(w).perm, (4, 3, 2, 1))
        self.assertEqual(restrict_gl_to_gsp(embed_gsp_to_gl(w), 2), w)
        self.assertIsNone(restrict_gl_to_gsp(WeylElement(GroupContext.gl(4), [2, 1, 3, 4], [0] * 4), 2))

    def test_homomorphisms(self):
        rng = make_rng(11)
        for _ in range(100):
            a = random_element(gu2, rng, 6, components=(0, 1))
            b = random_element(gu2, rng, 6, components=(0, 1))
            self.assertEqual(embed_gu_to_gsp(a * b), embed_gu_to_gsp(a) * embed_gu_to_gsp(b))
            self.assertEqual(lift_gsp_to_gu(embed_gu_to_gsp(a)), a)
            self.assertEqual(embed_gu_to_gsp(a).kottwitz(), 2 * a.kottwitz())
            x, y = embed_gu_to_gsp(a), embed_gu_to_gsp(b)
            self.assertEqual(embed_gsp_to_gl(x * y), embed_gsp_to_gl(x) * embed_gsp_to_gl(y))

    def test_odd_kottwitz_does_not_lift(self):
        self.assertRaises(LatticeError, lift_gsp_to_gu, translation(gsp1, (1, 0)))

    def test_cochar_transfer(self):
        self.assertEqual(embed_cochar_gu_to_gsp((2, 1, 1, 1, 0)), (2, 1, 1, 0))
        self.assertEqual(lift_cochar_gsp_to_gu((2, 1, 1, 0)), (2, 1, 1, 1, 0))
        self.assertRaises(LatticeError, lift_cochar_gsp_to_gu, (1, 0))


if __name__ == '__main__':
    unittest.main()

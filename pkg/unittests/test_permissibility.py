# This workaround makes sure that we can import from the parent dir
import sys
sys.path.append('..')

from unitarylm.bruhat import clear_closure_cache
from unitarylm.foundation import LatticeError, WeylError
from unitarylm.harness.sampling import make_rng, random_dominant_mu, random_rational_vector, random_vector_in_v
from unitarylm.permissibility import (DominantCochar, EnumerationResult, canonical_order, conv_hull_member_gl,
                                     conv_hull_member_gl_suffix, conv_hull_member_gsp, enumerate_admissible,
                                     enumerate_permissible, is_mu_admissible, is_mu_permissible,
                                     is_naively_permissible, is_wedge_permissible, mu_vectors, vertex_set)
from unitarylm.weyl import GroupContext, LevelStructure, WeylElement, embed_gu_to_gsp, identity, translation
from fractions import Fraction
import unittest

gl2 = GroupContext.gl(2)
gl4 = GroupContext.gl(4)
gsp1 = GroupContext.gsp(1)
gsp2 = GroupContext.gsp(2)
gu1 = GroupContext.gu(1)
gu2 = GroupContext.gu(2)
gu_iwahori = LevelStructure(gu1, [0, 1])


class TestDominantCochar(unittest.TestCase):

    def test_validation(self):
        self.assertRaises(LatticeError, DominantCochar, gl2, (0, 1))
        self.assertRaises(WeylError, DominantCochar, gl2, (1, 0, 0))
        self.assertRaises(LatticeError, DominantCochar, gsp2, (2, 1, 0, 0))
        self.assertRaises(WeylError, DominantCochar.rs, gl2, 1)

    def test_rs(self):
        self.assertEqual(DominantCochar.rs(gu1, 1).entries, (2, 1, 0))
        self.assertEqual(DominantCochar.rs(gsp2, 1).entries, (2, 1, 1, 0))
        self.assertEqual(DominantCochar.rs(gu2, 0).entries, (1, 1, 1, 1, 1))
        self.assertEqual(DominantCochar.from_vector(gl2, (0, 2)).entries, (2, 0))

    def test_hull_descriptor(self):
        hull = DominantCochar(gsp2, (2, 1, 1, 0)).hull()
        self.assertEqual(hull.prefix_sums, (2, 3, 4, 4))
        self.assertEqual(hull.suffix_sums, (0, 1, 2, 4))
        self.assertEqual(hull.total, 4)


class TestConvexHulls(unittest.TestCase):

    def test_gl_examples(self):
        mu = DominantCochar(gl4, (2, 1, 1, 0))
        self.assertTrue(conv_hull_member_gl(mu, (2, 1, 1, 0)))
        self.assertTrue(conv_hull_member_gl(mu, (1, 1, 1, 1)))
        self.assertFalse(conv_hull_member_gl(mu, (2, 2, 0, 0)))
        self.assertFalse(conv_hull_member_gl(mu, (1, 1, 1, 0)))

    def test_gsp_examples(self):
        mu = DominantCochar(gsp2, (2, 1, 1, 0))
        self.assertTrue(conv_hull_member_gsp(mu, (2, 1, 1, 0)))
        self.assertTrue(conv_hull_member_gsp(mu, (1, 1, 1, 1)))
        half = Fraction(1, 2)
        self.assertTrue(conv_hull_member_gsp(mu, (3 * half, 1, 1, half)))
        self.assertFalse(conv_hull_member_gsp(mu, (2, 2, 0, 0)))
        self.assertFalse(conv_hull_member_gsp(mu, (2, 0, 2, 0)))

    def test_hull_forms_agree(self):
        rng = make_rng(17)
        for _ in range(500):
            mu = DominantCochar(gsp2, random_dominant_mu(gsp2, rng))
            mu_gl = DominantCochar(gl4, mu.entries)
            if rng.random() < 0.5:
                x = random_vector_in_v(gsp2, rng)
            else:
                x = random_rational_vector(rng, 4)
            member = conv_hull_member_gl(mu_gl, x)
            self.assertEqual(conv_hull_member_gl_suffix(mu_gl, x), member)
            self.assertEqual(conv_hull_member_gsp(mu, x), member and gsp2.pairing_sum(x) is not None)
            self.assertEqual(conv_hull_member_gl(mu_gl, tuple(reversed(x))), member)


class TestNaiveAndWedge(unittest.TestCase):

    def test_naive(self):
        self.assertTrue(is_naively_permissible(translation(gu1, (2, 1, 0)), gu_iwahori))
        self.assertFalse(is_naively_permissible(identity(gu1), gu_iwahori))
        self.assertFalse(is_naively_permissible(translation(gu1, (3, 1, -1)), gu_iwahori))

    def test_mu_vectors(self):
        vectors = mu_vectors(translation(gu1, (2, 1, 0)), gu_iwahori)
        self.assertEqual(list(vectors), [0, 1, 2])
        self.assertEqual(vectors[1], (2, 1, 0))

    def test_wedge(self):
        t = translation(gu1, (2, 1, 0))
        self.assertTrue(is_wedge_permissible(t, gu_iwahori, 1))
        self.assertFalse(is_wedge_permissible(t, gu_iwahori, 0))
        self.assertTrue(is_wedge_permissible(translation(gu1, (1, 1, 1)), gu_iwahori, 0))
        self.assertRaises(WeylError, is_wedge_permissible, t, gu_iwahori, 2)

    def test_gl_is_rejected(self):
        self.assertRaises(WeylError, is_naively_permissible, identity(gl2), LevelStructure(gl2, [0]))

    def test_wedge_matches_gsp_image(self):
        level = LevelStructure(gu2, [0, 2])
        gsp_level = level.transfer(gsp2)
        for w in enumerate_permissible(gu2, 'naive', level):
            for s in range(3):
                self.assertEqual(is_wedge_permissible(w, level, s),
                                 is_wedge_permissible(embed_gu_to_gsp(w), gsp_level, s))


class TestKottwitzRapoport(unittest.TestCase):

    def setUp(self):
        clear_closure_cache()

    def test_vertex_set(self):
        half = Fraction(1, 2)
        vertices = vertex_set(gsp1, LevelStructure(gsp1, [0, 1]))
        self.assertEqual(vertices, [(0, 0), (-half, half)])
        self.assertRaises(WeylError, vertex_set, gu1, gu_iwahori)

    def test_permissible_examples(self):
        mu = DominantCochar(gsp1, (2, 0))
        level = LevelStructure(gsp1, [0, 1])
        self.assertTrue(is_mu_permissible(translation(gsp1, (2, 0)), mu, level))
        self.assertTrue(is_mu_permissible(translation(gsp1, (0, 2)), mu, level))
        self.assertTrue(is_mu_permissible(WeylElement(gsp1, [2, 1], [1, 1]), mu, level))
        self.assertFalse(is_mu_permissible(identity(gsp1), mu, level))

    def test_admissible_examples(self):
        mu = DominantCochar.rs(gu1, 1)
        self.assertTrue(is_mu_admissible(translation(gu1, (1, 1, 1)), mu, gu_iwahori))
        self.assertTrue(is_mu_admissible(translation(gu1, (0, 1, 2)), mu, gu_iwahori))
        self.assertFalse(is_mu_admissible(identity(gu1), mu, gu_iwahori))

    def test_gl2_admissible_counts(self):
        level = LevelStructure.iwahori(gl2)
        self.assertEqual(len(enumerate_admissible(gl2, (1, 0), level)), 3)
        self.assertEqual(len(enumerate_admissible(gl2, (2, 0), level)), 5)
        self.assertEqual(enumerate_admissible(gl2, (1, 1), level), [translation(gl2, (1, 1))])

    def test_zero_cocharacter(self):
        level = LevelStructure(gsp2, [0, 2])
        self.assertEqual(enumerate_admissible(gsp2, (0, 0, 0, 0), level), [identity(gsp2)])
        self.assertEqual(enumerate_permissible(gsp2, 'kr-gsp', level, mu=(0, 0, 0, 0)), [identity(gsp2)])

    def test_admissible_members_pass_direct_test(self):
        mu = DominantCochar(gsp2, (2, 1, 1, 0))
        level = LevelStructure(gsp2, [1])
        for w in enumerate_admissible(gsp2, mu, level):
            self.assertTrue(is_mu_admissible(w, mu, level))
            self.assertTrue(is_mu_permissible(w, mu, level))

    def test_admissible_within_permissible(self):
        for context, variant, mu, level in (
                (gl2, 'kr-gl', (2, 0), LevelStructure(gl2, [0, 1])),
                (gsp1, 'kr-gsp', (2, 0), LevelStructure(gsp1, [0])),
                (gsp2, 'kr-gsp', (2, 1, 1, 0), LevelStructure(gsp2, [0, 1, 2]))):
            adm = set(enumerate_admissible(context, mu, level))
            perm = set(enumerate_permissible(context, variant, level, mu=mu))
            self.assertTrue(adm <= perm)

    def test_variant_errors(self):
        self.assertRaises(WeylError, enumerate_permissible, gsp1, 'kr-gl', LevelStructure(gsp1, [0]), mu=(2, 0))
        self.assertRaises(WeylError, enumerate_permissible, gsp1, 'kr-gsp', LevelStructure(gsp1, [0]))
        self.assertRaises(WeylError, enumerate_permissible, gsp1, 'wedge', LevelStructure(gsp1, [0]))
        self.assertRaises(WeylError, enumerate_permissible, gsp1, 'hull', LevelStructure(gsp1, [0]))


class TestEnumeration(unittest.TestCase):

    def setUp(self):
        clear_closure_cache()

    def test_gu1_wedge_counts(self):
        self.assertEqual(len(enumerate_permissible(gu1, 'wedge', gu_iwahori, s=1)), 5)
        self.assertEqual(enumerate_permissible(gu1, 'wedge', gu_iwahori, s=0), [translation(gu1, (1, 1, 1))])

    def test_gsp1_wedge_equals_admissible(self):
        level = LevelStructure(gsp1, [0, 1])
        wedge = enumerate_permissible(gsp1, 'wedge', level, s=1)
        self.assertEqual(len(wedge), 5)
        self.assertEqual(wedge, enumerate_admissible(gsp1, (2, 0), level))

    def test_double_cosets_are_coarser(self):
        level = LevelStructure(gu1, [0])
        single = enumerate_permissible(gu1, 'wedge', level, s=1)
        double = enumerate_permissible(gu1, 'wedge', level, s=1, double=True)
        self.assertTrue(0 < len(double) <= len(single))

    def test_canonical_order(self):
        elements = enumerate_admissible(gl2, (2, 0), LevelStructure.iwahori(gl2))
        self.assertEqual(canonical_order(reversed(elements)), elements)
        self.assertEqual(elements[0], translation(gl2, (1, 1)))

    def test_result_round_trip(self):
        level = LevelStructure(gu1, [0, 1])
        elements = enumerate_permissible(gu1, 'wedge', level, s=1)
        result = EnumerationResult(gu1, 'wedge', level, elements, s=1)
        payload = result.as_dict()
        self.assertEqual(payload['cardinality'], 5)
        self.assertEqual(payload['group'], 'GU')
        self.assertEqual(payload['I'], [0, 1])
        again = EnumerationResult.from_dict(payload)
        self.assertEqual(again.elements, result.elements)
        self.assertEqual(again.as_json(), result.as_json())


if __name__ == '__main__':
    unittest.main()

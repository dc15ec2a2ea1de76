# This workaround makes sure that we can import from the parent dir
import sys
sys.path.append('..')

from unitarylm.foundation import SpinPreconditionError, WeylError
from unitarylm.permissibility import enumerate_permissible
from unitarylm.spin import (SELF_DUAL, STRICT, enumerate_spin_permissible, is_spin_permissible, perp, pi_rank,
                            sigma_prime_sign, sigma_sign, spanners, spin_witness)
from unitarylm.weyl import GroupContext, LevelStructure, identity, translation
import itertools
import unittest

gu1 = GroupContext.gu(1)
gu2 = GroupContext.gu(2)
gsp1 = GroupContext.gsp(1)
iwahori = LevelStructure(gu1, [0, 1])


class TestSigns(unittest.TestCase):

    def test_sigma_sign(self):
        self.assertEqual(sigma_sign({2, 3, 6}), -1)
        self.assertEqual(sigma_sign({3, 5, 6}), 1)
        self.assertEqual(sigma_sign({1, 2, 3}), 1)

    def test_perp(self):
        self.assertEqual(perp({2, 3, 6}), frozenset({2, 3, 6}))
        self.assertEqual(perp({1, 2, 3}), frozenset({1, 2, 3}))
        self.assertEqual(perp({1, 2, 6}), frozenset({2, 3, 4}))
        self.assertEqual(perp({2, 3, 4}), frozenset({1, 2, 6}))

    def test_relations_exhaustively(self):
        for n in (3, 5):
            m = n // 2
            for subset in itertools.combinations(range(1, 2 * n + 1), n):
                E = frozenset(subset)
                self.assertEqual(perp(perp(E, n), n), E)
                self.assertEqual(sigma_sign(perp(E, n)), sigma_sign(E))
                self.assertEqual(sigma_prime_sign(E), (-1) ** (m + 1) * sigma_sign(E))

    def test_bad_subset(self):
        self.assertRaises(SpinPreconditionError, sigma_sign, set())
        self.assertRaises(SpinPreconditionError, sigma_sign, {1, 2, 9})


class TestSpinWitness(unittest.TestCase):

    def test_self_dual_witness(self):
        witness = spin_witness((2, 1, 0), 1)
        self.assertEqual(witness.E_minus, frozenset({2, 3, 6}))
        self.assertEqual(witness.E_plus, frozenset({3, 5, 6}))
        self.assertEqual(witness.E_perp_minus, witness.E_minus)
        self.assertEqual(witness.E_perp_plus, witness.E_plus)
        self.assertEqual((witness.q, witness.q_perp), (1, 1))
        self.assertEqual((witness.sgn_minus, witness.sgn_plus), (-1, 1))
        self.assertEqual(witness.case, SELF_DUAL)
        self.assertTrue(witness.satisfied)

    def test_target_sign(self):
        self.assertEqual(spin_witness((2, 1, 0), 1, sign=1).target_E, frozenset({3, 5, 6}))
        self.assertEqual(spin_witness((2, 1, 0), 1, sign=-1).target_E, frozenset({2, 3, 6}))
        self.assertIsNone(spin_witness((2, 1, 0), 1).target_E)
        self.assertRaises(SpinPreconditionError, spin_witness, (2, 1, 0), 1, 2)

    def test_strict_witness(self):
        witness = spin_witness((1, 1, 1, 1, 1), 0)
        self.assertEqual((witness.q, witness.q_perp), (5, 1))
        self.assertEqual(witness.case, STRICT)
        self.assertTrue(witness.satisfied)
        self.assertIsNone(spin_witness((1, 1, 1, 1, 1), 0, sign=1).target_E)

    def test_mirrored_witness(self):
        witness = spin_witness((2, 1, 0), 1, mirror=True)
        self.assertTrue(witness.mirrored)
        self.assertEqual(witness.as_dict()['i'], -1)
        self.assertTrue(witness.satisfied)

    def test_preconditions(self):
        cases = (
            (((2, 2, 0), 1), 'sum(mu) = n'),
            (((3, 0, 0), 1), '0 <= mu <= 2'),
            (((2, 0, 1), 1), 'mu(m+1) = 1'),
            (((1, 1), 0), 'n odd'),
            (((2, 1, 0), 2), '0 <= i <= m')
        )
        for args, inequality in cases:
            with self.assertRaises(SpinPreconditionError) as raised:
                spin_witness(*args)
            self.assertEqual(raised.exception.error_details['inequality'], inequality)

    def test_as_dict(self):
        payload = spin_witness((2, 1, 0), 1).as_dict()
        self.assertEqual(payload['E_minus'], [2, 3, 6])
        self.assertEqual(payload['case'], SELF_DUAL)


class TestSpinPermissibility(unittest.TestCase):

    def test_spanners(self):
        self.assertEqual(spanners((2, 1, 0)), {('e', 3), ('pi_e', 2), ('pi_e', 3)})
        self.assertEqual(pi_rank((2, 1, 0)), 1)
        self.assertEqual(spanners((1, 1, 1)), {('pi_e', 1), ('pi_e', 2), ('pi_e', 3)})
        self.assertEqual(pi_rank((1, 1, 1)), 0)
        self.assertEqual(spanners((2, 2, 2)), set())

    def test_pi_rank_counts_zeros(self):
        labels = spanners((2, 2, 1, 0, 0))
        self.assertEqual(set(j for kind, j in labels if kind == 'e'), {4, 5})
        self.assertEqual(set(j for kind, j in labels if kind == 'pi_e'), {3, 4, 5})
        self.assertEqual(pi_rank((2, 2, 1, 0, 0)), 2)
        self.assertEqual(pi_rank((2, 1, 1, 0, 0)), 2)
        self.assertEqual(pi_rank((2, 2, 2, 1, 0)), 1)
        for mu in itertools.product(range(3), repeat=3):
            self.assertEqual(pi_rank(mu), mu.count(0))

    def test_examples(self):
        t = translation(gu1, (2, 1, 0))
        self.assertTrue(is_spin_permissible(t, iwahori, 1))
        self.assertFalse(is_spin_permissible(t, iwahori, 0))
        self.assertTrue(is_spin_permissible(translation(gu1, (1, 1, 1)), iwahori, 0))
        self.assertFalse(is_spin_permissible(identity(gu1), iwahori, 1))

    def test_errors(self):
        self.assertRaises(WeylError, is_spin_permissible, identity(gsp1), LevelStructure(gsp1, [0]), 0)
        self.assertRaises(WeylError, is_spin_permissible, identity(gu1), iwahori, 2)

    def test_spin_equals_wedge(self):
        for context in (gu1, gu2):
            for indices in ([0], [context.rank], list(range(context.rank + 1))):
                level = LevelStructure(context, indices)
                for s in range(context.rank + 1):
                    self.assertEqual(enumerate_spin_permissible(context, level, s),
                                     enumerate_permissible(context, 'wedge', level, s=s))

    def test_gu1_counts(self):
        self.assertEqual(len(enumerate_spin_permissible(gu1, iwahori, 1)), 5)
        self.assertEqual(len(enumerate_spin_permissible(gu1, iwahori, 0)), 1)


if __name__ == '__main__':
    unittest.main()

import asyncio
import concurrent.futures
import functools
import itertools
import logging
from collections import OrderedDict

from unitarylm.foundation import WeylError
from unitarylm.bruhat.alcove import length
from unitarylm.bruhat.oracle import subword_leq
from unitarylm.bruhat.order import bruhat_leq, downward_closure, elements_up_to_length
from unitarylm.bruhat.parahoric import (ParahoricSubgroup, coset_elements, double_coset_elements,
                                        min_length_rep)
from unitarylm.faces.face import face_of
from unitarylm.faces.mu import MuFamily, pair_bands, check_basic_inequalities, is_self_dual, mu_family
from unitarylm.harness.report import (CLAIM_LABELS, FAIL, PASS, VerificationReport, check_subset, compare_sets,
                                      stopwatch, texts)
from unitarylm.harness.sampling import (all_levels, make_rng, random_dominant_mu, random_element,
                                        random_rational_vector, random_vector_in_v, theta_stable_subsets)
from unitarylm.permissibility.enumeration import (canonical_order, enumerate_admissible,
                                                  enumerate_permissible)
from unitarylm.permissibility.hull import (DominantCochar, conv_hull_member_gl, conv_hull_member_gl_suffix,
                                           conv_hull_member_gsp)
from unitarylm.permissibility.naive import mu_vectors
from unitarylm.spin.signs import perp, sigma_prime_sign, sigma_sign
from unitarylm.spin.witness import SELF_DUAL, enumerate_spin_permissible, spin_witness
from unitarylm.weyl.context import GroupContext, LevelStructure
from unitarylm.weyl.embeddings import (embed_gsp_to_gl, embed_gu_to_gsp, lift_cochar_gsp_to_gu,
                                       restrict_gl_to_gsp)

logger = logging.getLogger(__name__)


def _parameters(context, **extra):
    parameters = OrderedDict([('group', context.kind), ('m_or_N', context.rank)])
    for key in sorted(extra):
        value = extra[key]
        parameters[key] = list(value) if isinstance(value, tuple) else value
    return parameters


def _merge(comparisons):
    """Folds several (verdict, counterexample, cardinalities) triples into one."""
    verdict, counterexample, cardinalities = PASS, None, OrderedDict()
    for result, example, sizes in comparisons:
        cardinalities.update(sizes)
        if result == FAIL and verdict == PASS:
            verdict, counterexample = FAIL, example
    return verdict, counterexample, cardinalities


def _first_failure(failures):
    """The first recorded failure in canonical order of its element."""
    if not failures:
        return PASS, None
    failures.sort(key=lambda f: (f.get('length', 0), f.get('element', ''), f.get('I', [])))
    return FAIL, failures[0]


def verify_equivalence_gu(m, s, indices, timing=True):
    """Wedge-permissible = spin-permissible = μ_{r,s}-admissible in GU(m), for
    right cosets and for double cosets of W_I.

    Args:
        m (integer): The rank.
        s (integer): The signature parameter, 0 ≤ s ≤ m.
        indices (sequence): The level I.
        timing (boolean): Record elapsed_ms.

    Returns:
        VerificationReport
    """
    context = GroupContext.gu(m)
    level = LevelStructure(context, indices)
    mu = DominantCochar.rs(context, s)
    comparisons = []
    with stopwatch(timing) as clock:
        for double in (False, True):
            suffix = '/double' if double else ''
            wedge = enumerate_permissible(context, 'wedge', level, s=s, double=double)
            spin = enumerate_spin_permissible(context, level, s, double)
            adm = enumerate_admissible(context, mu, level, double)
            if not double:
                lhs, rhs = texts(wedge), texts(adm)
            comparisons.append(compare_sets([('wedge' + suffix, wedge), ('spin' + suffix, spin),
                                             ('adm' + suffix, adm)]))
    verdict, counterexample, cardinalities = _merge(comparisons)
    return VerificationReport('gu-equivalence', _parameters(context, s=s, I=level.indices), lhs, rhs,
                              verdict, counterexample, cardinalities, elapsed_ms=clock['elapsed_ms'])


def _meeting_gsp(gl_reps, level, gl_level, double):
    """The GSP cosets of W_I contained in the given GL cosets of W_{±I}."""
    m = level.context.rank
    gsp_right = ParahoricSubgroup(level.context, level)
    gsp_left = gsp_right if double else None
    gl_right = ParahoricSubgroup(gl_level.context, gl_level)
    found = set()
    for rep in gl_reps:
        members = double_coset_elements(rep, gl_right, gl_right) if double else coset_elements(rep, gl_right)
        for x in members:
            y = restrict_gl_to_gsp(x, m)
            if y is not None:
                found.add(min_length_rep(y, gsp_left, gsp_right))
    return found


def verify_adm_perm_intersect(m, mu, indices, timing=True):
    """Adm_GSp,I(μ) = Adm_GL,±I(μ) ∩ W~/W_I = Perm_GL,±I(μ) ∩ W~/W_I, also for double cosets.

    Args:
        m (integer): The rank of GSP(m); GL has rank 2m.
        mu (sequence): A dominant cocharacter of X_*.
        indices (sequence): The level I.
        timing (boolean): Record elapsed_ms.

    Returns:
        VerificationReport
    """
    gsp = GroupContext.gsp(m)
    level = LevelStructure(gsp, indices)
    gl_level = level.for_gl()
    gl = gl_level.context
    mu_gsp = DominantCochar(gsp, mu)
    mu_gl = DominantCochar(gl, mu_gsp.entries)
    comparisons = []
    with stopwatch(timing) as clock:
        for double in (False, True):
            suffix = '/double' if double else ''
            adm_gsp = enumerate_admissible(gsp, mu_gsp, level, double)
            adm_gl = enumerate_admissible(gl, mu_gl, gl_level, double)
            perm_gl = enumerate_permissible(gl, 'kr-gl', gl_level, mu=mu_gl, double=double)
            meets_adm = _meeting_gsp(adm_gl, level, gl_level, double)
            meets_perm = _meeting_gsp(perm_gl, level, gl_level, double)
            if not double:
                lhs, rhs = texts(adm_gsp), texts(meets_perm)
            comparisons.append(compare_sets([('adm-gsp' + suffix, adm_gsp),
                                             ('adm-gl-meets-gsp' + suffix, meets_adm),
                                             ('perm-gl-meets-gsp' + suffix, meets_perm)]))
    verdict, counterexample, cardinalities = _merge(comparisons)
    return VerificationReport('gsp-gl-intersection', _parameters(gsp, mu=mu_gsp.entries, I=level.indices),
                              lhs, rhs, verdict, counterexample, cardinalities, elapsed_ms=clock['elapsed_ms'])


def verify_perm_eq_adm(m, s, indices, timing=True):
    """Adm(μ) = Perm(μ) in GSP(m) for μ = (2^(s), 1^(2m-2s), 0^(s))."""
    context = GroupContext.gsp(m)
    level = LevelStructure(context, indices)
    mu = DominantCochar.rs(context, s)
    comparisons = []
    with stopwatch(timing) as clock:
        for double in (False, True):
            suffix = '/double' if double else ''
            adm = enumerate_admissible(context, mu, level, double)
            perm = enumerate_permissible(context, 'kr-gsp', level, mu=mu, double=double)
            if not double:
                lhs, rhs = texts(adm), texts(perm)
            comparisons.append(compare_sets([('adm' + suffix, adm), ('perm-kr' + suffix, perm)]))
    verdict, counterexample, cardinalities = _merge(comparisons)
    return VerificationReport('perm-equals-adm', _parameters(context, s=s, I=level.indices), lhs, rhs,
                              verdict, counterexample, cardinalities, elapsed_ms=clock['elapsed_ms'])


def verify_steinberg_lemma(m, J, J_prime, max_length=6, timing=True):
    """Minimal representatives of W_J·w·W_J′ in GL(2m) stay in GSP(m) when w does.

    J and J′ are Θ-stable proper sets of GL(2m) simple reflection labels,
    Θ being j -> 2m-j mod 2m. Every GSP element of GL length at most
    `max_length` is checked.

    Raises:
        WeylError: If J or J′ is not Θ-stable.
    """
    N = 2 * m
    for labels in (J, J_prime):
        if set(labels) != set((N - j) % N for j in labels):
            raise WeylError('Labels {} are not stable under j -> 2m-j'.format(sorted(labels)), labels=sorted(labels))
    gsp = GroupContext.gsp(m)
    gl = GroupContext.gl(N)
    left = ParahoricSubgroup.from_labels(gl, J)
    right = ParahoricSubgroup.from_labels(gl, J_prime)
    checked = 0
    failures = []
    with stopwatch(timing) as clock:
        for w in canonical_order(elements_up_to_length(gsp, max_length, components=(0, 1))):
            x = embed_gsp_to_gl(w)
            if length(x) > max_length:
                continue
            checked += 1
            rep = min_length_rep(x, left, right)
            if restrict_gl_to_gsp(rep, m) is None:
                failures.append({'element': w.text(), 'length': length(x), 'min_rep': rep.text()})
                break
    verdict, counterexample = _first_failure(failures)
    parameters = _parameters(gsp, J=tuple(sorted(J)), J_prime=tuple(sorted(J_prime)), max_length=max_length)
    return VerificationReport('steinberg-min-rep', parameters, verdict == PASS, True, verdict, counterexample,
                              OrderedDict([('checked', checked)]), elapsed_ms=clock['elapsed_ms'])


def _corrupted(family):
    """A copy of the family with μ(1) raised by 3 at its first residue."""
    mu = dict(family.mu)
    c = sorted(mu)[0]
    mu[c] = (mu[c][0] + 3,) + mu[c][1:]
    return MuFamily(family.context, family.level, mu, family.d)


def _face_failures(w, level, corrupt):
    context = w.context
    found = []
    base = {'element': w.text(), 'length': length(w), 'I': list(level.indices)}

    def fail(check, **details):
        entry = dict(base)
        entry['check'] = check
        entry.update(details)
        found.append(entry)

    face = face_of(w, level)
    problems = face.violations()
    if problems:
        fail('facehood', violations=problems)
        return found
    family = mu_family(face)
    if corrupt:
        family = _corrupted(family)
    ok, violations = check_basic_inequalities(family)
    if not ok:
        fail('basic-inequalities', violations=violations)
    problems = family.violations()
    if problems:
        fail('mu-family', violations=problems)

    n = context.ambient_dim
    d = family.d
    for i in level.indices:
        a_set, b_set = pair_bands(n, i)
        for index in (i, -i):
            mu = family.at(index)
            sums = dict((j, mu[j - 1] + mu[n - j]) for j in range(1, n + 1))
            if all(sums[j] == d for j in a_set) or all(sums[j] == d for j in b_set):
                if not is_self_dual(mu, d):
                    fail('self-dual', index=index, mu=list(mu))

    for g in ParahoricSubgroup(context, level).generators:
        if face_of(w * g, level) != face:
            fail('parahoric-invariance', generator=g.text())
    return found


def _hull_failures(m, rng, samples, band):
    gsp = GroupContext.gsp(m)
    found = []
    for _ in range(samples):
        mu = DominantCochar(gsp, random_dominant_mu(gsp, rng, band))
        mu_gl = DominantCochar(GroupContext.gl(2 * m), mu.entries)
        if rng.random() < 0.5:
            x = random_vector_in_v(gsp, rng, band)
        else:
            x = random_rational_vector(rng, 2 * m, band)
        in_v = gsp.pairing_sum(x) is not None
        member = conv_hull_member_gl(mu_gl, x)
        if conv_hull_member_gsp(mu, x) != (member and in_v):
            found.append({'check': 'hull-restriction', 'mu': list(mu.entries), 'x': [str(v) for v in x]})
        if conv_hull_member_gl_suffix(mu_gl, x) != member:
            found.append({'check': 'hull-suffix-form', 'mu': list(mu.entries), 'x': [str(v) for v in x]})
        shuffled = list(x)
        rng.shuffle(shuffled)
        if conv_hull_member_gl(mu_gl, shuffled) != member:
            found.append({'check': 'hull-orbit-invariance', 'mu': list(mu.entries), 'x': [str(v) for v in x]})
    return found


def _sign_failures(n):
    m = n // 2
    found = []
    for subset in itertools.combinations(range(1, 2 * n + 1), n):
        E = frozenset(subset)
        dual = perp(E, n)
        if perp(dual, n) != E:
            found.append({'check': 'perp-involution', 'E': sorted(E)})
        sign = sigma_sign(E)
        if sigma_sign(dual) != sign:
            found.append({'check': 'perp-sign', 'E': sorted(E)})
        if sigma_prime_sign(E) != (-1) ** (m + 1) * sign:
            found.append({'check': 'prime-sign', 'E': sorted(E)})
    return found


def verify_basic_lemmas(m, samples=1000, seed=0, band=3, corrupt=False, timing=True):
    """Bundles the per-face and per-vector lemmas into one report.

    Faces of every level are generated from all elements of length at most
    5 (m = 1) or from `samples` random elements; each face is checked for
    facehood, the basic inequalities and their -i counterpart, μ(m+1) = d/2,
    the self-duality criterion and W_I-invariance. Convex hull forms and the
    σ_E sign relations are checked alongside. With `corrupt` set the first
    μ-family is damaged, which must produce a FAIL.

    Returns:
        VerificationReport
    """
    context = GroupContext.gu(m)
    rng = make_rng(seed)
    failures = []
    checked = 0
    with stopwatch(timing) as clock:
        if m == 1:
            elements = canonical_order(elements_up_to_length(context, 5, components=(-1, 0, 1, 2)))
        else:
            elements = [random_element(context, rng, 8, components=(-1, 0, 1, 2)) for _ in range(samples)]
        for w in elements:
            for level in all_levels(context):
                failures.extend(_face_failures(w, level, corrupt and checked == 0))
                checked += 1
        failures.extend(_hull_failures(m, rng, samples, band))
        failures.extend(_sign_failures(2 * m + 1))
    verdict, counterexample = _first_failure(failures)
    return VerificationReport('basic-inequalities', _parameters(context, samples=samples, corrupt=corrupt),
                              verdict == PASS, True, verdict, counterexample,
                              OrderedDict([('elements', len(elements)), ('faces', checked),
                                           ('failures', len(failures))]),
                              seed=seed, elapsed_ms=clock['elapsed_ms'])


def verify_bruhat_oracle(m, pairs=200, max_length=4, seed=0, timing=True):
    """Cross-checks the Bruhat engine.

    Random pairs in GSP(m) are compared against the subword criterion;
    all pairs of length at most `max_length` are compared against the GL(2m)
    order through embed_gsp_to_gl, and GU(m) pairs against GSP(m) through
    embed_gu_to_gsp.
    """
    gsp = GroupContext.gsp(m)
    gu = GroupContext.gu(m)
    rng = make_rng(seed)
    failures = []

    def fail(check, a, b):
        failures.append({'check': check, 'length': length(b), 'element': b.text(), 'below': a.text()})

    with stopwatch(timing) as clock:
        pool = canonical_order(elements_up_to_length(gsp, max_length, components=(0, 1)))
        for _ in range(pairs):
            b = rng.choice(pool)
            if rng.random() < 0.5:
                a = rng.choice(canonical_order(downward_closure([b])))
            else:
                a = rng.choice(pool)
            if bruhat_leq(a, b) != subword_leq(a, b):
                fail('subword', a, b)
        for b in pool:
            for a in pool:
                if bruhat_leq(a, b) != bruhat_leq(embed_gsp_to_gl(a), embed_gsp_to_gl(b)):
                    fail('gl-restriction', a, b)
        gu_pool = canonical_order(elements_up_to_length(gu, max_length, components=(0, 1)))
        for b in gu_pool:
            for a in gu_pool:
                if bruhat_leq(a, b) != bruhat_leq(embed_gu_to_gsp(a), embed_gu_to_gsp(b)):
                    fail('gsp-restriction', a, b)
    verdict, counterexample = _first_failure(failures)
    sizes = OrderedDict([('gsp-elements', len(pool)), ('gu-elements', len(gu_pool)), ('random-pairs', pairs)])
    return VerificationReport('bruhat-oracle', _parameters(gsp, max_length=max_length), verdict == PASS, True,
                              verdict, counterexample, sizes, seed=seed, elapsed_ms=clock['elapsed_ms'])


def verify_kr_containment(kind, rank, mu, indices, timing=True):
    """Adm(μ) ⊆ Perm(μ) in a GL, GSP or GU context."""
    context = GroupContext(kind, rank)
    level = LevelStructure(context, indices)
    variant = 'kr-gl' if context.kind == 'GL' else 'kr-gsp'
    with stopwatch(timing) as clock:
        adm = enumerate_admissible(context, mu, level)
        perm = enumerate_permissible(context, variant, level, mu=mu)
        verdict, counterexample, cardinalities = check_subset('adm', adm, 'perm-kr', perm)
    return VerificationReport('kr-containment', _parameters(context, mu=tuple(mu), I=level.indices),
                              texts(adm), texts(perm), verdict, counterexample, cardinalities,
                              elapsed_ms=clock['elapsed_ms'])


def verify_sign_suite(n, timing=True):
    """sgn(σ_E) = sgn(σ_{E^⊥}), E^⊥⊥ = E and sgn(σ′_E) = (-1)^(m+1)·sgn(σ_E) for every
    n-element E ⊆ {1, ..., 2n}, n = 2m+1.
    """
    if n < 1 or n % 2 == 0:
        raise WeylError('The sign suite needs odd n', n=n)
    with stopwatch(timing) as clock:
        failures = _sign_failures(n)
    verdict, counterexample = _first_failure(failures)
    parameters = OrderedDict([('n', n)])
    return VerificationReport('sign-suite', parameters, verdict == PASS, True, verdict, counterexample,
                              OrderedDict([('failures', len(failures))]), elapsed_ms=clock['elapsed_ms'])


def _witness_failures(w, level, m):
    n = 2 * m + 1
    found = []
    vectors = mu_vectors(w, level)
    for i in level.indices:
        for mirror in (False, True):
            mu = vectors[(-i) % n] if mirror else vectors[i]
            witness = spin_witness(mu, i, mirror=mirror)
            base = tuple(2 - x for x in reversed(mu)) if mirror else mu
            problems = []
            if not witness.satisfied:
                problems.append('unsatisfied')
            if witness.q < witness.q_perp:
                problems.append('q-order')
            if witness.case == SELF_DUAL:
                if witness.E_minus != witness.E_perp_minus or witness.E_plus != witness.E_perp_plus:
                    problems.append('perp')
                if not is_self_dual(base, 2):
                    problems.append('self-dual')
                if witness.sgn_plus != -witness.sgn_minus:
                    problems.append('signs')
                for j in range(i + 1, m + 1):
                    if sorted((base[j - 1], base[n - j])) != [0, 2]:
                        problems.append('zero-two')
                        break
            for problem in problems:
                found.append({'check': problem, 'element': w.text(), 'length': length(w),
                              'I': list(level.indices), 'witness': witness.as_dict()})
    return found


def verify_spin_automaticity(m, indices, timing=True):
    """Every naively permissible coset satisfies the spin condition at every i and -i."""
    context = GroupContext.gu(m)
    level = LevelStructure(context, indices)
    failures = []
    with stopwatch(timing) as clock:
        naive = enumerate_permissible(context, 'naive', level)
        for w in naive:
            failures.extend(_witness_failures(w, level, m))
    verdict, counterexample = _first_failure(failures)
    return VerificationReport('spin-automatic', _parameters(context, I=level.indices), verdict == PASS, True,
                              verdict, counterexample, OrderedDict([('naive', len(naive))]),
                              elapsed_ms=clock['elapsed_ms'])


CLAIMS = ('gu-equivalence', 'gsp-gl-intersection', 'perm-equals-adm', 'steinberg-min-rep',
          'basic-inequalities', 'bruhat-oracle', 'kr-containment', 'sign-suite', 'spin-automatic')

# alternate identifier -> claim
CLAIM_ALIASES = OrderedDict([
    ('thm-5-equivalence', 'gu-equivalence'),
    ('thm-6-intersect', 'gsp-gl-intersection'),
    ('prop-6-perm-adm', 'perm-equals-adm'),
    ('lemma-steinberg', 'steinberg-min-rep'),
    ('basic-lemmas', 'basic-inequalities')
])
CLAIM_ALIASES.update((label.lower(), claim) for claim, label in CLAIM_LABELS.items())


def resolve_claim(name):
    """Maps a claim identifier, alias or report label to its claim (or 'all').

    Matching ignores case.

    Args:
        name (string): e.g. 'gu-equivalence', 'thm-5-equivalence' or 'Prop-perm-adm'.

    Returns:
        string

    Raises:
        WeylError: If the name is unknown.
    """
    key = str(name).lower()
    if key == 'all' or key in CLAIMS:
        return key
    if key in CLAIM_ALIASES:
        return CLAIM_ALIASES[key]
    raise WeylError('Unknown claim {!r}'.format(name), claim=name)


def plan_tasks(claim, m=None, s=None, indices=None, mu=None, seed=0, band=3, gu_max_rank=3,
               gl_max_rank=2, steinberg_length=6, random_mu_count=20, samples=1000, timing=True):
    """Expands a claim (or 'all') into (function, kwargs) tasks over the configured ranges.

    Explicit m, s, indices or mu pin the corresponding range to one value. The claim
    may be given by any name resolve_claim accepts.

    Returns:
        list

    Raises:
        WeylError: If the claim is unknown.
    """
    claim = resolve_claim(claim)
    if claim == 'all':
        tasks = []
        for name in CLAIMS:
            tasks.extend(plan_tasks(name, m, s, indices, mu, seed, band, gu_max_rank, gl_max_rank,
                                    steinberg_length, random_mu_count, samples, timing))
        return tasks

    gu_ranks = [m] if m else list(range(1, gu_max_rank + 1))
    gl_ranks = [m] if m else list(range(1, gl_max_rank + 1))

    def levels_of(context):
        if indices is not None:
            return [tuple(indices)]
        return [level.indices for level in all_levels(context)]

    def signatures(rank):
        return [s] if s is not None else list(range(rank + 1))

    def cochars(context, rng):
        if mu is not None:
            return [tuple(mu)]
        found = [DominantCochar.rs(context, k).entries for k in range(context.rank + 1)]
        for _ in range(random_mu_count):
            found.append(random_dominant_mu(context, rng, band))
        return list(OrderedDict.fromkeys(found))

    tasks = []
    rng = make_rng(seed)
    if claim == 'gu-equivalence':
        for rank in gu_ranks:
            for k in signatures(rank):
                for level in levels_of(GroupContext.gu(rank)):
                    tasks.append((verify_equivalence_gu, dict(m=rank, s=k, indices=level, timing=timing)))
    elif claim == 'perm-equals-adm':
        for rank in gu_ranks:
            for k in signatures(rank):
                for level in levels_of(GroupContext.gsp(rank)):
                    tasks.append((verify_perm_eq_adm, dict(m=rank, s=k, indices=level, timing=timing)))
    elif claim == 'gsp-gl-intersection':
        for rank in gl_ranks:
            gsp = GroupContext.gsp(rank)
            for vector in cochars(gsp, rng):
                for level in levels_of(gsp):
                    tasks.append((verify_adm_perm_intersect, dict(m=rank, mu=vector, indices=level, timing=timing)))
    elif claim == 'steinberg-min-rep':
        for rank in gl_ranks:
            subsets = theta_stable_subsets(rank)
            for J in subsets:
                for J_prime in subsets:
                    tasks.append((verify_steinberg_lemma, dict(m=rank, J=J, J_prime=J_prime,
                                                               max_length=steinberg_length, timing=timing)))
    elif claim == 'basic-inequalities':
        for rank in gu_ranks:
            tasks.append((verify_basic_lemmas, dict(m=rank, samples=samples, seed=seed, band=band,
                                                     timing=timing)))
    elif claim == 'bruhat-oracle':
        for rank in gl_ranks:
            tasks.append((verify_bruhat_oracle, dict(m=rank, seed=seed, timing=timing)))
    elif claim == 'kr-containment':
        for rank in gl_ranks:
            gsp = GroupContext.gsp(rank)
            for vector in cochars(gsp, rng):
                for level in levels_of(gsp):
                    gl_level = LevelStructure(gsp, level).for_gl()
                    tasks.append((verify_kr_containment, dict(kind='GL', rank=2 * rank, mu=vector,
                                                              indices=gl_level.indices, timing=timing)))
                    tasks.append((verify_kr_containment, dict(kind='GSP', rank=rank, mu=vector,
                                                              indices=level, timing=timing)))
                    if (vector[0] + vector[-1]) % 2 == 0:
                        lifted = lift_cochar_gsp_to_gu(vector)
                        tasks.append((verify_kr_containment, dict(kind='GU', rank=rank, mu=lifted,
                                                                  indices=level, timing=timing)))
    elif claim == 'sign-suite':
        for n in ([2 * m + 1] if m else [3, 5]):
            tasks.append((verify_sign_suite, dict(n=n, timing=timing)))
    elif claim == 'spin-automatic':
        for rank in gu_ranks:
            for level in levels_of(GroupContext.gu(rank)):
                tasks.append((verify_spin_automaticity, dict(m=rank, indices=level, timing=timing)))
    return tasks


def run_suite(tasks, workers=1):
    """Runs (function, kwargs) tasks on a worker pool and returns their reports in submission order.

    Args:
        tasks (list): As produced by plan_tasks.
        workers (integer): Size of the thread pool.

    Returns:
        list: VerificationReports.
    """
    async def main(loop, pool):
        futures = [loop.run_in_executor(pool, functools.partial(function, **kwargs))
                   for function, kwargs in tasks]
        return await asyncio.gather(*futures)

    loop = asyncio.new_event_loop()
    try:
        with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            reports = loop.run_until_complete(main(loop, pool))
    finally:
        loop.close()
    for report in reports:
        logger.info('%s %s: %s', report.claim, dict(report.parameters), report.verdict)
    return list(reports)

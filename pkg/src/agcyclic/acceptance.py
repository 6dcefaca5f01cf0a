"""The acceptance suite: ten exhaustive desk-scale checks of the library's
constructive claims.  Each criterion is a function returning a
CriterionResult; the CLI selftest and the pytest acceptance module both run
exactly these.

Everything here is deterministic and exact (integer equalities, row-space
identities); there are no tolerances.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .construction import (
    OrbitCodeSpec,
    artin_schreier_code,
    canonicalize,
    closed_standard_form,
    construct_ag_code,
    construct_orbit_code,
    frobenius_code,
    roots_of_unity_code,
    transport_pole_to_zero,
    transport_zero_to_infinity,
    verify_cyclic_construction,
)
from .fixedfield import fiber_decomposition, invariant_generator, splitting_report
from .gf import GF, find_element_of_order, primitive_element
from .lincode import LinearCode
from .pgl2 import INF, MobiusMap, all_pgl2, is_infinite, order_triangular, orbit_difference
from .rfield import Divisor, Place, Polynomial, invert_point, place_image, place_of_point


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float


FIELD_BY_Q = {
    2: (2, 1),
    3: (3, 1),
    4: (2, 2),
    5: (5, 1),
    7: (7, 1),
    8: (2, 3),
    9: (3, 2),
    11: (11, 1),
    13: (13, 1),
    16: (2, 4),
}

_field_cache: dict[int, GF] = {}


def field_for(q: int) -> GF:
    if q not in _field_cache:
        p, m = FIELD_BY_Q[q]
        _field_cache[q] = GF(p, m)
    return _field_cache[q]


def _triangular(field: GF, a_val: int, b_val: int) -> MobiusMap:
    """[[1, -b], [0, a]] from parameter values."""
    return MobiusMap(
        field.one,
        -field.from_value(b_val),
        field.zero,
        field.from_value(a_val),
    )


def _projective_points(field: GF):
    yield from (field.from_value(v) for v in range(field.q))
    yield INF


def _non_fixed_points(matrix: MobiusMap):
    fixed = matrix.fixed_points()
    for t in _projective_points(matrix.field):
        if is_infinite(t):
            if not any(is_infinite(f) for f in fixed):
                yield t
        elif not any((not is_infinite(f)) and f == t for f in fixed):
            yield t


def _divisors_of(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------

def criterion_1() -> CriterionResult:
    """Order-5 orbit over GF(4) through every rational point, with a fixed
    degree-2 place supplying G: order, orbit, place image, dimension and
    cyclicity all reproduce exactly."""
    start = time.perf_counter()
    field = GF(2, 2, (1, 1, 1))
    beta = field.generator
    ok = (beta * beta + beta + field.one).is_zero()
    matrix = MobiusMap.from_string(field, "1,1;b,0")
    ok &= matrix.order() == 5
    expected = (field.one, beta, beta + field.one, INF, field.zero)
    orb = matrix.orbit(field.one)
    ok &= len(orb) == 5 and all(
        (a is INF and b is INF) or (a is not INF and b is not INF and a == b)
        for a, b in zip(orb, expected)
    )
    b2 = beta * beta
    Q = Place.from_polynomial(Polynomial(field, [b2, b2, field.one]))
    ok &= place_image(matrix, Q) == Q
    D = [place_of_point(field, t) for t in orb]
    G = Divisor.of_place(Q, 1)
    code = construct_ag_code(D, G)
    ok &= code.n == 5 and code.dimension() == 3 and code.is_cyclic()
    report = verify_cyclic_construction(matrix, D, G)
    ok &= report.all_ok and report.m == 5 and report.isotropy == 1
    detail = f"order={matrix.order()}, orbit={[str(t) for t in orb]}, k={code.dimension()}"
    return CriterionResult(1, "order-5 orbit code over GF(4)", bool(ok), detail, time.perf_counter() - start)


def criterion_2() -> CriterionResult:
    """Roots-of-unity codes are MDS with k = r+s+1 and exact brute-force
    distance n-(r+s), for q in {5,7,8,9}, every n | q-1 with n >= 3, and
    every r, s >= 0 with 0 < r+s <= n-2."""
    start = time.perf_counter()
    checked = 0
    failures = []
    for q in (5, 7, 8, 9):
        field = field_for(q)
        for n in _divisors_of(q - 1):
            if n < 3:
                continue
            for total in range(1, n - 1):
                for r in range(0, total + 1):
                    s = total - r
                    code, report = roots_of_unity_code(field, n, r, s)
                    k = code.dimension()
                    d = code.min_distance()
                    checked += 1
                    if k != total + 1 or d != n - total or not report.all_ok:
                        failures.append((q, n, r, s, k, d))
    passed = not failures
    detail = f"{checked} codes checked" + (f"; failures: {failures[:3]}" if failures else "")
    return CriterionResult(2, "MDS parameters of roots-of-unity codes", passed, detail, time.perf_counter() - start)


def criterion_3() -> CriterionResult:
    """Closed-form order of triangular maps agrees with iterated
    multiplication for every non-identity [[1,-b],[0,a]] over every q <= 16."""
    start = time.perf_counter()
    checked = 0
    failures = []
    for q in sorted(FIELD_BY_Q):
        field = field_for(q)
        for a_val in range(1, q):
            for b_val in range(q):
                if a_val == 1 and b_val == 0:
                    continue
                matrix = _triangular(field, a_val, b_val)
                checked += 1
                if order_triangular(matrix) != matrix.order():
                    failures.append((q, a_val, b_val))
    passed = not failures
    detail = f"{checked} matrices checked" + (f"; failures: {failures[:3]}" if failures else "")
    return CriterionResult(3, "triangular order formula", passed, detail, time.perf_counter() - start)


def criterion_4() -> CriterionResult:
    """Orbit-difference closed form (with the power of a, as the derivation
    gives) equals direct orbit subtraction for every triangular map, every
    non-fixed finite seed and every index pair, over every q <= 9."""
    start = time.perf_counter()
    checked = 0
    failures = []
    for q in (2, 3, 4, 5, 7, 8, 9):
        field = field_for(q)
        for a_val in range(1, q):
            for b_val in range(q):
                if a_val == 1 and b_val == 0:
                    continue
                matrix = _triangular(field, a_val, b_val)
                a, b = field.from_value(a_val), field.from_value(b_val)
                for alpha_val in range(q):
                    alpha = field.from_value(alpha_val)
                    if (b + (a - field.one) * alpha).is_zero():
                        continue  # fixed point
                    orb = matrix.orbit(alpha)
                    n = len(orb)
                    for i in range(1, n):
                        for j in range(i + 1, n + 1):
                            direct = orb[j - 1] - orb[i - 1]
                            closed = orbit_difference(matrix, alpha, i, j)
                            checked += 1
                            if closed != direct:
                                failures.append((q, a_val, b_val, alpha_val, i, j))
    passed = not failures
    detail = f"{checked} differences checked" + (f"; failures: {failures[:3]}" if failures else "")
    return CriterionResult(4, "orbit difference closed form", passed, detail, time.perf_counter() - start)


def criterion_5() -> CriterionResult:
    """Closed standard form equals the elimination standard form (with
    identity pivot permutation) for q in {5,7,8,9} and all triangular maps of
    order >= 3, and is identical across every b giving the same a."""
    start = time.perf_counter()
    checked = 0
    failures = []
    for q in (5, 7, 8, 9):
        field = field_for(q)
        per_a: dict[tuple[int, int], bytes] = {}
        for a_val in range(1, q):
            for b_val in range(q):
                if a_val == 1 and b_val == 0:
                    continue
                matrix = _triangular(field, a_val, b_val)
                n = matrix.order()
                if n < 3:
                    continue
                a, b = field.from_value(a_val), field.from_value(b_val)
                alpha = None
                for v in range(1, q + 1):
                    cand = field.from_value(v % q)
                    if not (b + (a - field.one) * cand).is_zero():
                        alpha = cand
                        break
                for r in range(1, n - 1):
                    spec = OrbitCodeSpec(matrix, alpha, INF, r)
                    code = construct_orbit_code(spec)
                    perm, w_elim = code.standard_form()
                    w_closed = closed_standard_form(matrix, alpha, r)
                    checked += 1
                    if perm != tuple(range(code.n)) or not (w_elim == w_closed).all():
                        failures.append((q, a_val, b_val, r))
                        continue
                    key = (a_val, r)
                    blob = w_closed.tobytes()
                    if per_a.setdefault(key, blob) != blob:
                        failures.append((q, a_val, b_val, r, "b-dependence"))
    passed = not failures
    detail = f"{checked} standard forms checked" + (f"; failures: {failures[:3]}" if failures else "")
    return CriterionResult(5, "closed standard form and b-independence", passed, detail, time.perf_counter() - start)


def criterion_6() -> CriterionResult:
    """Both pole transports preserve the code on every valid instance with
    q <= 9 and n <= 8: beta -> 0 by translation conjugation, and 0 -> inf by
    the entry swap with elementwise-inverted orbit."""
    start = time.perf_counter()
    checked = 0
    failures = []
    for q in (2, 3, 4, 5, 7, 8, 9):
        field = field_for(q)
        # pole at a finite nonzero fixed point -> zero
        for matrix in all_pgl2(field):
            if matrix.is_identity():
                continue
            m = matrix.order()
            if m < 3 or m > 8:
                continue
            betas = [
                t for t in matrix.fixed_points() if not is_infinite(t) and t.val != 0
            ]
            if not betas:
                continue
            seeds = list(_non_fixed_points(matrix))
            for beta in betas:
                for alpha in seeds:
                    for r in range(1, m - 1):
                        spec = OrbitCodeSpec(matrix, alpha, beta, r)
                        moved = transport_pole_to_zero(spec)
                        checked += 1
                        if not construct_orbit_code(spec).equals(construct_orbit_code(moved)):
                            failures.append(("to-zero", q, str(matrix), str(beta), str(alpha), r))
        # pole at zero -> infinity
        for c_val in range(field.q):
            for d_val in range(1, field.q):
                if c_val == 0 and d_val == 1:
                    continue
                matrix = MobiusMap(
                    field.one, field.zero, field.from_value(c_val), field.from_value(d_val)
                )
                m = matrix.order()
                if m < 3 or m > 8:
                    continue
                for alpha in _non_fixed_points(matrix):
                    for r in range(1, m - 1):
                        spec = OrbitCodeSpec(matrix, alpha, field.zero, r)
                        moved = transport_zero_to_infinity(spec)
                        checked += 1
                        inverted = tuple(invert_point(field, t) for t in spec.orbit)
                        same_orbit = all(
                            (s is INF and t is INF) or (s is not INF and t is not INF and s == t)
                            for s, t in zip(moved.orbit, inverted)
                        )
                        if not same_orbit or not construct_orbit_code(spec).equals(
                            construct_orbit_code(moved)
                        ):
                            failures.append(("to-inf", q, str(matrix), str(alpha), r))
    passed = not failures
    detail = f"{checked} transports checked" + (f"; failures: {failures[:3]}" if failures else "")
    return CriterionResult(6, "pole transports preserve the code", passed, detail, time.perf_counter() - start)


def _all_specs(field: GF, max_n: int = 8):
    """All valid orbit-code specs over the field with n <= max_n."""
    for matrix in all_pgl2(field):
        if matrix.is_identity():
            continue
        m = matrix.order()
        if m < 3 or m > max_n:
            continue
        fixed = list(matrix.fixed_points())
        if not fixed:
            continue
        seeds = list(_non_fixed_points(matrix))
        for beta in sorted(fixed, key=lambda t: field.q if is_infinite(t) else t.val):
            for alpha in seeds:
                for r in range(1, m - 1):
                    yield OrbitCodeSpec(matrix, alpha, beta, r)


def criterion_7() -> CriterionResult:
    """Canonicalization over q in {5,7}: all valid specs of a given (n, r)
    map to pairwise-equal canonical codes, every monomial witness verifies,
    and for q=5, n=4 the EQUIVALENT verdicts are confirmed by exhaustive
    search over all 6144 monomial matrices."""
    start = time.perf_counter()
    checked = 0
    failures = []
    confirmed_pairs = 0
    for q in (5, 7):
        field = field_for(q)
        canonical_codes: dict[tuple[int, int], LinearCode] = {}
        brute_seen: set[bytes] = set()
        for spec in _all_specs(field):
            result = canonicalize(spec)
            source = construct_orbit_code(spec)
            target = construct_orbit_code(result.spec)
            checked += 1
            if not source.apply_monomial(result.witness).equals(target):
                failures.append(("witness", q, str(spec)))
                continue
            if result.relation == "EQUAL" and not source.equals(target):
                failures.append(("equal-claim", q, str(spec)))
                continue
            key = (spec.n, spec.r)
            prior = canonical_codes.setdefault(key, target)
            if not prior.equals(target):
                failures.append(("non-unique", q, key))
            if q == 5 and spec.n == 4 and result.relation == "EQUIVALENT":
                pair_key = source.rref.tobytes() + target.rref.tobytes()
                if pair_key not in brute_seen:
                    brute_seen.add(pair_key)
                    if not _brute_force_monomial_equivalent(source, target):
                        failures.append(("brute-force", q, str(spec)))
                    else:
                        confirmed_pairs += 1
    passed = not failures
    detail = (
        f"{checked} specs canonicalized, {confirmed_pairs} EQUIVALENT pairs "
        f"confirmed by exhaustive monomial search"
        + (f"; failures: {failures[:3]}" if failures else "")
    )
    return CriterionResult(7, "canonical forms are unique per (n, k)", passed, detail, time.perf_counter() - start)


def _brute_force_monomial_equivalent(c1: LinearCode, c2: LinearCode) -> bool:
    """Independent oracle: try all n! * (q-1)^n monomial matrices."""
    field = c1.field
    n = c1.n
    for perm in permutations(range(n)):
        for scalars in product(range(1, field.q), repeat=n):
            witness = np.zeros((n, n), dtype=np.int64)
            for pos in range(n):
                witness[perm[pos], pos] = scalars[pos]
            if c1.apply_monomial(witness).equals(c2):
                return True
    return False


def _shift_closed_brute(code: LinearCode) -> bool:
    """Independent shift-closure oracle: rotate every codeword."""
    words = code.codewords()
    codeword_set = {tuple(int(x) for x in w) for w in words}
    return all(
        tuple(int(x) for x in np.roll(w, -1)) in codeword_set for w in words
    )


def criterion_8() -> CriterionResult:
    """Every code from an automorphism orbit (q in {4,5,7,8,9}, n <= 8) and
    from the roots-of-unity and Artin-Schreier constructions passes the
    cyclic shift test, with zero failures.  The Frobenius-conjugate family
    rides on a semilinear map, outside the automorphism guarantee: there the
    pinned invocations must be cyclic and every reported verdict must agree
    with brute-force shift closure."""
    start = time.perf_counter()
    checked = 0
    failures = []
    for q in (4, 5, 7, 8, 9):
        field = field_for(q)
        for spec in _all_specs(field):
            checked += 1
            if not construct_orbit_code(spec).is_cyclic():
                failures.append(("orbit", q, str(spec)))
    for p, m, r, s in ((2, 2, 1, 0), (2, 3, 1, 1), (3, 2, 1, 0)):
        code, report = frobenius_code(p, m, r, s)
        checked += 1
        if not (code.is_cyclic() and report.code_cyclic and report.induced_shift_solvable):
            failures.append(("frobenius-pinned", p, m, r, s))
    for p, m in ((2, 2), (2, 3), (3, 2)):
        n = m
        for r in range(0, n):
            for s in range(0, n):
                if r + s >= n:
                    continue
                code, report = frobenius_code(p, m, r, s)
                checked += 1
                if report.code_cyclic != _shift_closed_brute(code):
                    failures.append(("frobenius-verdict", p, m, r, s))
    for q in (4, 5, 7, 8, 9):
        field = field_for(q)
        for n in _divisors_of(q - 1):
            if n < 2:
                continue
            for r in range(-1, n):
                for s in range(-1, n):
                    if not 0 <= r + s <= n - 2:
                        continue
                    code, report = roots_of_unity_code(field, n, r, s)
                    checked += 1
                    if not (code.is_cyclic() and report.all_ok):
                        failures.append(("roots-of-unity", q, n, r, s))
    for q in (4, 8, 9):
        field = field_for(q)
        for s in range(1, field.p + 1):
            code, report = artin_schreier_code(field, s)
            checked += 1
            if not (code.is_cyclic() and report.all_ok):
                failures.append(("artin-schreier", q, s))
    passed = not failures
    detail = f"{checked} codes checked" + (f"; failures: {failures[:3]}" if failures else "")
    return CriterionResult(8, "every constructed code is cyclic", passed, detail, time.perf_counter() - start)


def criterion_9() -> CriterionResult:
    """Fixed-field splitting over q <= 9 for an inventory covering
    translation, scaling and order-(q+1) classes: the invariant generator has
    degree m, every fiber's degrees sum to m, and every non-fixed orbit lies
    over one value with uniform e*f = m/n."""
    start = time.perf_counter()
    checked = 0
    failures = []
    for q in (2, 3, 4, 5, 7, 8, 9):
        field = field_for(q)
        inventory = [MobiusMap.translation_type(field)]
        if q > 2:
            inventory.append(MobiusMap.scaling(primitive_element(field)))
        for matrix in all_pgl2(field):
            if matrix.order() == q + 1:
                inventory.append(matrix)
                break
        if q == 4:
            inventory.append(MobiusMap.from_string(field, "1,1;b,0"))
        for matrix in inventory:
            gen = invariant_generator(matrix)
            m = matrix.order()
            if gen.m != m or gen.z.degree != m:
                failures.append(("degree", q, str(matrix)))
                continue
            for t in _projective_points(field):
                fiber = fiber_decomposition(gen, t)
                checked += 1
                if sum(e * place.degree for place, e in fiber) != m:
                    failures.append(("fiber-sum", q, str(matrix), str(t)))
            for alpha in _non_fixed_points(matrix):
                report = splitting_report(matrix, alpha)
                checked += 1
                if not report.all_ok:
                    failures.append(("orbit-fiber", q, str(matrix), str(alpha)))
    passed = not failures
    detail = f"{checked} fibers and orbits checked" + (f"; failures: {failures[:3]}" if failures else "")
    return CriterionResult(9, "fixed-field splitting structure", passed, detail, time.perf_counter() - start)


def criterion_10() -> CriterionResult:
    """Designed-distance bound: brute-force d >= n - deg G for every
    constructed code with 0 <= deg G < n across the roots-of-unity sweep, the
    classical examples, the GF(4) order-5 code, and the orbit codes over
    q in {4,5}."""
    start = time.perf_counter()
    checked = 0
    failures = []

    def check(code: LinearCode, deg_g: int, label) -> None:
        nonlocal checked
        if not 0 <= deg_g < code.n:
            return
        checked += 1
        if code.dimension() == 0:
            return
        if code.min_distance() < code.n - deg_g:
            failures.append(label)

    for q in (5, 7, 8, 9):
        field = field_for(q)
        for n in _divisors_of(q - 1):
            if n < 3:
                continue
            for total in range(1, n - 1):
                for r in range(0, total + 1):
                    code, _ = roots_of_unity_code(field, n, r, total - r)
                    check(code, total, ("roots-of-unity", q, n, r))
    for p, m in ((2, 2), (2, 3), (3, 2)):
        for r in range(0, m):
            for s in range(0, m - r):
                if r + s >= m:
                    continue
                code, _ = frobenius_code(p, m, r, s)
                check(code, r + s, ("frobenius", p, m, r, s))
    for q in (4, 8, 9):
        field = field_for(q)
        for s in range(1, field.p):
            code, _ = artin_schreier_code(field, s)
            check(code, s, ("artin-schreier", q, s))
    field4 = field_for(4)
    matrix = MobiusMap.from_string(field4, "1,1;b,0")
    orb = matrix.orbit(field4.one)
    b2 = field4.generator * field4.generator
    Q = Place.from_polynomial(Polynomial(field4, [b2, b2, field4.one]))
    code = construct_ag_code([place_of_point(field4, t) for t in orb], Divisor.of_place(Q, 1))
    check(code, 2, ("gf4-order5",))
    for q in (4, 5):
        for spec in _all_specs(field_for(q)):
            check(construct_orbit_code(spec), spec.r, ("orbit", q, str(spec)))
    passed = not failures
    detail = f"{checked} codes checked" + (f"; failures: {failures[:3]}" if failures else "")
    return CriterionResult(10, "designed-distance bound", passed, detail, time.perf_counter() - start)


ALL_CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
]


def run_all() -> list[CriterionResult]:
    return [fn() for fn in ALL_CRITERIA]

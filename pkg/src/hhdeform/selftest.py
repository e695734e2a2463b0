"""Randomized invariant checks behind ``hhdeform selftest``.

Each check returns ``(name, ok, detail)``.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import ainf, hochschild as hh, hodge, samples


def _instances(rng: random.Random, count: int, pool=samples.SMALL_POOL):
    for _ in range(count):
        name, c = samples.random_category(rng, pool)
        yield name, c, samples.random_bimodule(c, name, rng)


def check_d_squared(rng, count):
    bad = 0
    for _, c, m in _instances(rng, count):
        n = rng.randint(0, 3)
        x = samples.random_cochain(c, m, n, rng)
        bad += not hh.hochschild_differential(c, m, hh.hochschild_differential(c, m, x)).is_zero()
    return "d o d = 0", bad == 0, f"{count} instances, {bad} failures"


def check_bracket(rng, count):
    bad = 0
    for _, c, m in _instances(rng, count):
        n = rng.randint(1, 3)
        x = samples.random_cochain(c, m, n, rng)
        bad += hh.gerstenhaber_bracket(x, 2) != (-1) ** n * hh.hochschild_differential(c, m, x)
    return "[f, m2] = (-1)^i d f", bad == 0, f"{count} instances, {bad} failures"


DEFORMABLE_POOL = ("dual_numbers", "truncated_cubic", "A2_quiver", "QxQ")


def check_deform(rng, count):
    bad = 0
    for _, c, m in _instances(rng, count, DEFORMABLE_POOL):
        mdeg = 3
        if rng.random() < 0.5:
            eta = samples.random_cocycle(c, m, mdeg, rng)
        else:
            eta = samples.random_cochain(c, m, mdeg, rng)
        closed = hh.is_cocycle(eta)
        a, _ = ainf.deform(c, m, eta, validate=False)
        violations = ainf.check_ainf_relations(a, 2 * mdeg)
        bad += closed == bool(violations)
        bad += any(v.arity != mdeg + 1 for v in violations)
    return "deform relations hold iff d(eta) = 0", bad == 0, f"{count} instances, {bad} failures"


def check_nullhomotopy(rng, count):
    bad = 0
    for _, c, m in _instances(rng, count, DEFORMABLE_POOL):
        eta = samples.random_cocycle(c, m, 3, rng)
        theta = samples.random_cochain(c, m, 2, rng)
        mu = eta - hh.hochschild_differential(c, m, theta)
        h = ainf.nullhomotopy_functor(theta, eta, mu)
        bad += bool(ainf.check_functor_relations(h))
    return "nullhomotopy functor equations", bad == 0, f"{count} instances, {bad} failures"


def strict_inclusion(a: ainf.AInfCategory) -> ainf.AInfFunctor:
    c = a.fincat
    comp = {((x, y), (j,)): {j: Fraction(1)} for x, y in c.nonzero_pairs() for j in range(c.dim(x, y))}
    return ainf.AInfFunctor(ainf.from_fincategory(c), a, {x: x for x in c.objects}, {1: comp})


def check_obstruction(rng, count):
    bad = 0
    for _, c, m in _instances(rng, count, DEFORMABLE_POOL):
        eta = samples.random_cocycle(c, m, 3, rng)
        a, _ = ainf.deform(c, m, eta)
        j = strict_inclusion(a)
        ob = ainf.obstruction_class(j, 3)
        bad += ob.representative.data != (-1 * eta).data
        bad += (ainf.extendable(j, 3) is None) != (hh.coboundary_solve(c, m, eta) is None)
    return "strict inclusion obstruction = -eta, extendable iff coboundary", bad == 0, f"{count} instances, {bad} failures"


def check_lifts(rng, count):
    bad = 0
    for _, c, m in _instances(rng, count, ("dual_numbers", "truncated_cubic", "A2_quiver")):
        mdeg = rng.choice([3, 4])
        eta = samples.random_cocycle(c, m, mdeg, rng)
        u = samples.random_module(c, rng)
        cls = hh.characteristic_class(eta, u)
        lift = hh.module_lift_witness(u, eta, mdeg)
        bad += cls.vanishes != (lift is not None)
    return "module lift exists iff characteristic class vanishes", bad == 0, f"{count} instances, {bad} failures"


def check_hodge(rng, count):
    bad = 0
    for _ in range(count * 5):
        d, N, t = rng.randint(1, 7), rng.randint(2, 7), rng.randint(-12, 12)
        spec = hodge.HypersurfaceSpec(d, N, t)
        n = spec.n
        for p in range(n + 1):
            col = [hodge.twisted_hodge_number(spec, p, q) for q in range(n + 1)]
            bad += sum((-1) ** q * v for q, v in enumerate(col)) != hodge.euler_char_twisted(spec, p)
            for q in range(n + 1):
                bad += col[q] != hodge.twisted_hodge_number(spec.twisted(-t), n - p, n - q)
                bad += col[q] < 0
    return "Serre duality, Euler consistency, nonnegativity", bad == 0, f"{count * 5} hypersurfaces, {bad} failures"


def check_regressions(rng, count):
    a = hodge.diamond(hodge.HypersurfaceSpec(5, 7, 0)).rows()[6]
    b = hodge.diamond(hodge.HypersurfaceSpec(7, 6, 8)).rows()[5]
    k = hodge.kernel_dim(hodge.HypersurfaceSpec(7, 6, -8), 8)
    ok = a == [0, 36, 2472, 8093, 2472, 36, 0] and b == [2996, 20993, 15267, 917, 0, 0] and k == 20993
    return "diamond middle rows and the 20993 kernel", ok, f"{a} / {b} / {k}"


CHECKS = (
    check_d_squared,
    check_bracket,
    check_deform,
    check_nullhomotopy,
    check_obstruction,
    check_lifts,
    check_hodge,
    check_regressions,
)


def run_all(rng: random.Random, instances: int = 20) -> list[tuple[str, bool, str]]:
    return [check(rng, instances) for check in CHECKS]

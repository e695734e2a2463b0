"""Both sides of the obstruction naturality identity, built independently of ``obstruction_class`` on composites."""

from fractions import Fraction
from itertools import product

from hhdeform import ainf as A
from hhdeform import hochschild as hh


def scale_m_summand(c, m, eta, lam):
    """Strict functor X_eta -> X_{lam eta}: identity on hom, lam on M."""
    src, _ = A.deform(c, m, eta)
    tgt, _ = A.deform(c, m, lam * eta)
    f1 = {}
    for x, y in src.quiver.nonzero_pairs():
        dc = c.dim(x, y)
        for j in range(src.dim(x, y)):
            f1[((x, y), (j,))] = {j: Fraction(1) if j < dc else Fraction(lam)}
    return A.AInfFunctor(src, tgt, {x: x for x in c.objects}, {1: f1})


def expected_natural(ob, g, gprime, source_cat):
    """H(G') o o_i(phi) o H(G), expanded multilinearly from the three pieces."""
    phi_map = ob.as_target_map()
    gp1 = gprime.components[1]
    n = ob.arity
    out = {}
    for objs in hh.paths(source_cat, n):
        ranges = [range(source_cat.dim(objs[k], objs[k + 1])) for k in range(n)]
        for idx in product(*ranges):
            images = [g.apply(objs[k], objs[k + 1], {idx[k]: 1}) for k in range(n)]
            gobjs = tuple(g.objmap[o] for o in objs)
            acc = {}
            for combo in product(*(img.items() for img in images)):
                coeff = Fraction(1)
                for _, v in combo:
                    coeff *= v
                for tk, tv in phi_map.get((gobjs, tuple(k for k, _ in combo)), {}).items():
                    for ok, ov in gp1.get(((gobjs[0], gobjs[-1]), (tk,)), {}).items():
                        acc[ok] = acc.get(ok, 0) + coeff * tv * ov
            acc = {k: v for k, v in acc.items() if v}
            if acc:
                out[(objs, idx)] = acc
    return out

"""Minimal A-infinity categories with finitely many operations.

Operations ``m_k`` (degree 2 - k) and functor components ``f_k`` (degree 1 - k)
are stored unshifted as sparse multilinear maps; all checks run in the bar
convention described in :mod:`hhdeform.multilinear`.  ``m_1`` is always zero.

The constructions here:

* :func:`deform` -- the square-zero extension ``hom (+) M[2 - mdeg]`` with
  ``m_mdeg = eta`` on undeformed inputs, plus the projection ``can``;
* :func:`nullhomotopy_functor` -- the isomorphism between two deformations
  along cohomologous cocycles;
* :func:`build_tilde_f` -- the composite ``f o h o s`` lifting a functor into a
  deformation once the pulled-back cocycle is trivialized;
* :func:`obstruction_class` / :func:`extendable` -- the inductive obstruction
  to extending an A_{i-1}-functor one arity further.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping

from . import multilinear as ml
from .fincat import (
    Bimodule,
    FinCategory,
    LinearFunctor,
    Module,
    path_products,
    restrict_bimodule,
    vec_add,
)
from .hochschild import (
    Cochain,
    NotACocycleError,
    coboundary_solve,
    hochschild_differential,
    is_cocycle,
    paths,
    tensor_module_bimodule,
)
from .linalg import Matrix, solve_linear


class AInfCategory:
    """Graded quiver plus operations ``ops[k]`` (unshifted multilinear maps)."""

    def __init__(self, quiver: ml.GradedQuiver, ops: Mapping, name: str = ""):
        self.quiver = quiver
        self.ops = {k: ml.clean(v) for k, v in ops.items() if k >= 2 and ml.clean(v)}
        if any(k < 2 for k, v in ops.items() if ml.clean(v)):
            raise ValueError("minimal A-infinity categories have no m_1 (or m_0)")
        self.name = name
        self._bar = None
        # set by constructors that know the undeformed data
        self.fincat: FinCategory | None = None
        self.bimodule: Bimodule | None = None
        self.eta: Cochain | None = None
        self.mdeg: int | None = None

    def __repr__(self) -> str:
        return f"<AInfCategory {self.name} arities={sorted(self.ops)}>"

    @property
    def objects(self) -> tuple:
        return self.quiver.objects

    def dim(self, a, b) -> int:
        return self.quiver.dim(a, b)

    def graded_dims(self, a, b) -> dict[int, int]:
        out: dict[int, int] = {}
        for g in self.quiver.degrees[(a, b)]:
            out[g] = out.get(g, 0) + 1
        return out

    def bar_ops(self) -> dict:
        if self._bar is None:
            self._bar = {k: ml.to_bar(self.quiver, v) for k, v in self.ops.items()}
        return self._bar

    def top_arity(self) -> int:
        return max(self.ops, default=2)

    def same_shape(self, other: "AInfCategory") -> bool:
        return self.quiver.objects == other.quiver.objects and self.quiver.degrees == other.quiver.degrees

    def __eq__(self, other) -> bool:
        return isinstance(other, AInfCategory) and self.same_shape(other) and self.ops == other.ops

    __hash__ = object.__hash__


def from_fincategory(c: FinCategory) -> AInfCategory:
    """A k-linear category as an A-infinity category concentrated in degree 0."""
    m2 = {((a, b, d), (i, j)): dict(v) for (a, b, d), t in c.products.items() for (i, j), v in t.items()}
    a = AInfCategory(ml.ungraded_quiver(c), {2: m2}, name=c.name)
    a.fincat = c
    return a


@dataclass
class Violation:
    arity: int
    objects: tuple
    entries: int

    def __str__(self) -> str:
        return f"arity {self.arity} fails on objects {self.objects} ({self.entries} nonzero entries)"


def _violations(residual: dict, arity: int) -> list[Violation]:
    grouped: dict = {}
    for (objs, _idx), vec in residual.items():
        if vec:
            grouped[objs] = grouped.get(objs, 0) + len(vec)
    return [Violation(arity, objs, n) for objs, n in sorted(grouped.items(), key=lambda t: repr(t[0]))]


def relation_residual(a: AInfCategory, n: int, first_object=None) -> dict:
    """sum over u + s - 1 = n of sum_r b_u o (1^r (x) b_s (x) 1^t), in the bar convention."""
    bar = a.bar_ops()
    total: dict = {}
    for u, bu in bar.items():
        s = n - u + 1
        if s not in bar:
            continue
        outer = bu if first_object is None else {k: v for k, v in bu.items() if k[0][0] == first_object}
        index = ml.by_output(bar[s])
        for r in range(u):
            ml.add_into(total, ml.insert(a.quiver, outer, bar[s], r, 1, index))
    return ml.clean(total)


def default_bound(*cats: AInfCategory) -> int:
    return max([8] + [2 * c.top_arity() for c in cats])


def check_ainf_relations(a: AInfCategory, up_to: int | None = None) -> list[Violation]:
    """Violated A-infinity relations for arities 3..up_to (default max(2 * top arity, 8))."""
    bound = up_to if up_to is not None else default_bound(a)
    out = []
    for n in range(3, bound + 1):
        out += _violations(relation_residual(a, n), n)
    return out


# ---------------------------------------------------------------- functors


class AInfFunctor:
    """Components ``f[k]`` of degree 1 - k as unshifted multilinear maps source -> target."""

    def __init__(self, source: AInfCategory, target: AInfCategory, objmap: Mapping, components: Mapping, name: str = ""):
        self.source = source
        self.target = target
        self.objmap = {a: objmap[a] for a in source.objects}
        self.components = {k: ml.clean(v) for k, v in components.items() if k >= 1 and ml.clean(v)}
        self.name = name
        self._bar = None

    def __repr__(self) -> str:
        return f"<AInfFunctor {self.name} arities={sorted(self.components)}>"

    def bar_components(self) -> dict:
        if self._bar is None:
            self._bar = {k: ml.to_bar(self.source.quiver, v) for k, v in self.components.items()}
        return self._bar

    def truncated(self, below: int) -> "AInfFunctor":
        """Keep components of arity < below."""
        return AInfFunctor(
            self.source, self.target, self.objmap, {k: v for k, v in self.components.items() if k < below}
        )

    def with_component(self, k: int, mm: dict) -> "AInfFunctor":
        comps = {j: dict(v) for j, v in self.components.items()}
        comps[k] = mm
        return AInfFunctor(self.source, self.target, self.objmap, comps, self.name)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AInfFunctor)
            and self.objmap == other.objmap
            and self.components == other.components
        )

    __hash__ = object.__hash__


def _keyed_by_target(F: AInfFunctor, bar: dict) -> dict:
    """Per arity: {(F X0, F Xk, output): [(source objects, source indices, coeff)]}."""
    out = {}
    for k, mm in bar.items():
        index: dict = {}
        for (objs, idx), vec in mm.items():
            fa, fb = F.objmap[objs[0]], F.objmap[objs[-1]]
            for o, c in vec.items():
                index.setdefault((fa, fb, o), []).append((objs, idx, c))
        out[k] = index
    return out


def _pullback(outer: dict, comp_index: dict, n: int, first_object=None) -> dict:
    """sum over i_1 + ... + i_l = n of outer_l o (F_{i_1} (x) ... (x) F_{i_l}).

    ``outer`` is a single bar-convention map of some arity l; all F have bar degree 0.
    """
    arities = sorted(comp_index)
    result: dict = {}
    for (tobjs, tidx), vec in outer.items():
        l = len(tidx)
        if l > n:
            continue

        def rec(j, remaining, objs, idx, coeff):
            if j == l:
                if remaining == 0:
                    vec_add(result.setdefault((objs, idx), {}), vec, coeff)
                return
            slots_left = l - j - 1
            for a in arities:
                if a > remaining - slots_left:
                    break
                for sobjs, sidx, c in comp_index[a].get((tobjs[j], tobjs[j + 1], tidx[j]), ()):
                    if objs:
                        if sobjs[0] != objs[-1]:
                            continue
                        rec(j + 1, remaining - a, objs + sobjs[1:], idx + sidx, coeff * c)
                    else:
                        if first_object is not None and sobjs[0] != first_object:
                            continue
                        rec(j + 1, remaining - a, sobjs, sidx, coeff * c)

        rec(0, n, (), (), Fraction(1))
    return ml.clean(result)


def functor_residual(F: AInfFunctor, n: int, first_object=None) -> dict:
    """Left minus right side of the arity-n A-infinity functor equation (bar convention)."""
    S, T = F.source, F.target
    fb = F.bar_components()
    sb, tb = S.bar_ops(), T.bar_ops()
    total: dict = {}
    for u, fu in fb.items():
        s = n - u + 1
        if s < 2 or s not in sb:
            continue
        outer = fu if first_object is None else {k: v for k, v in fu.items() if k[0][0] == first_object}
        index = ml.by_output(sb[s])
        for r in range(u):
            ml.add_into(total, ml.insert(S.quiver, outer, sb[s], r, 1, index))
    comp_index = _keyed_by_target(F, fb)
    for l, bl in tb.items():
        if l <= n:
            ml.add_into(total, _pullback(bl, comp_index, n, first_object), -1)
    # arity-1 equation would be f1 m1 = m1 f1: vacuous for minimal categories
    return ml.clean(total)


def check_functor_relations(F: AInfFunctor, up_to: int | None = None) -> list[Violation]:
    bound = up_to if up_to is not None else default_bound(F.source, F.target)
    out = []
    for n in range(2, bound + 1):
        out += _violations(functor_residual(F, n), n)
    return out


def compose_functors(G: AInfFunctor, F: AInfFunctor) -> AInfFunctor:
    """G o F: (G o F)_n = sum G_l (F_{i_1} (x) ... (x) F_{i_l})."""
    if not F.target.same_shape(G.source):
        raise ValueError("functors are not composable")
    fb, gb = F.bar_components(), G.bar_components()
    comp_index = _keyed_by_target(F, fb)
    bound = max(gb, default=0) * max(fb, default=0)
    comps = {}
    for n in range(1, bound + 1):
        total: dict = {}
        for l, gl in gb.items():
            if l <= n:
                ml.add_into(total, _pullback(gl, comp_index, n))
        total = ml.clean(total)
        if total:
            comps[n] = ml.from_bar(F.source.quiver, total)
    objmap = {a: G.objmap[F.objmap[a]] for a in F.source.objects}
    return AInfFunctor(F.source, G.target, objmap, comps)


def strict_functor(lf: LinearFunctor, source: AInfCategory | None = None, target: AInfCategory | None = None) -> AInfFunctor:
    """A k-linear functor as an A-infinity functor with only f_1."""
    source = source or from_fincategory(lf.source)
    target = target or from_fincategory(lf.target)
    f1 = {}
    for (a, b), m in lf.maps.items():
        for j, v in m.items():
            if v:
                f1[((a, b), (j,))] = dict(v)
    return AInfFunctor(source, target, lf.objmap, {1: f1})


def identity_ainf_functor(a: AInfCategory) -> AInfFunctor:
    f1 = {((x, y), (j,)): {j: Fraction(1)} for x, y in a.quiver.nonzero_pairs() for j in range(a.dim(x, y))}
    return AInfFunctor(a, a, {x: x for x in a.objects}, {1: f1})


# ---------------------------------------------------------------- deformations


def deform(
    c: FinCategory, m: Bimodule, eta: Cochain, mdeg: int | None = None, validate: bool = True
) -> tuple[AInfCategory, AInfFunctor]:
    """The infinitesimal deformation of c along eta and its projection ``can``.

    Homs are ``hom(a, b) (+) M(a, b)`` with M in degree 2 - mdeg; m_2 is the
    square-zero product and m_mdeg equals eta on inputs from hom and vanishes
    as soon as an input comes from M.
    """
    mdeg = eta.degree if mdeg is None else mdeg
    if mdeg < 3:
        raise ValueError("deformations need a cocycle of degree at least 3")
    if eta.degree != mdeg:
        raise ValueError(f"eta has degree {eta.degree}, expected {mdeg}")
    if eta.category is not c and eta.category != c:
        raise ValueError("eta lives over a different category")
    if validate and not is_cocycle(eta):
        raise NotACocycleError("eta is not a cocycle; the deformation would violate the A-infinity relations")
    q = ml.square_zero_degrees(c, m, 2 - mdeg)
    ops = {2: ml.square_zero_m2(c, m)}
    if not eta.is_zero():
        ops[mdeg] = ml.embed_coefficients(c, eta.data)
    a = AInfCategory(q, ops, name=f"{c.name}_eta")
    a.fincat, a.bimodule, a.eta, a.mdeg = c, m, eta, mdeg
    base = from_fincategory(c)
    can1 = {
        ((x, y), (j,)): {j: Fraction(1)} for x, y in c.nonzero_pairs() for j in range(c.dim(x, y))
    }
    can = AInfFunctor(a, base, {x: x for x in c.objects}, {1: can1}, name="can")
    return a, can


def tensor_with_klinear(a: AInfCategory, i: FinCategory) -> AInfCategory:
    """a (x) i with m_k(x1 (x) i1, ..., xk (x) ik) = m_k(x1..xk) (x) (i1 ... ik)."""
    objs = [(x, p) for x in a.objects for p in i.objects]
    degs = {}
    for (x, p), (y, q) in product(objs, repeat=2):
        degs[((x, p), (y, q))] = tuple(g for g in a.quiver.degrees[(x, y)] for _ in range(i.dim(p, q)))
    q = ml.GradedQuiver(objs, degs)
    ops = {}
    cache: dict = {}
    for k, mk in a.ops.items():
        out: dict = {}
        for (xobjs, xidx), vec in mk.items():
            for ipath in paths(i, k):
                if ipath not in cache:
                    cache[ipath] = path_products(i, ipath)
                prods = cache[ipath]
                if not prods:
                    continue
                new_objs = tuple(zip(xobjs, ipath))
                dims = [i.dim(ipath[j], ipath[j + 1]) for j in range(k)]
                ni = i.dim(ipath[0], ipath[-1])
                for iidx, ivec in prods.items():
                    new_idx = tuple(xx * d + yy for xx, yy, d in zip(xidx, iidx, dims))
                    out[(new_objs, new_idx)] = {
                        kx * ni + ky: u * v for kx, u in vec.items() for ky, v in ivec.items()
                    }
        ops[k] = out
    return AInfCategory(q, ops, name=f"{a.name}(x){i.name}")


def pushforward_cocycle(f: LinearFunctor, eta: Cochain) -> Cochain:
    """f*eta = eta o f^{(x) n}, valued in the pulled-back bimodule."""
    x, m = eta.category, eta.bimodule
    if f.target is not x and f.target != x:
        raise ValueError("functor does not land in the category of eta")
    y = f.source
    fm = restrict_bimodule(f, m)
    n = eta.degree
    data: dict = {}
    for ypath in paths(y, n):
        fpath = tuple(f.objmap[o] for o in ypath)
        if not fm.dim(ypath[0], ypath[-1]):
            continue
        ranges = [range(y.dim(ypath[j], ypath[j + 1])) for j in range(n)]
        for idx in product(*ranges):
            images = [f.apply(ypath[j], ypath[j + 1], {idx[j]: 1}) for j in range(n)]
            if not all(images):
                continue
            out: dict = {}
            for combo in product(*(img.items() for img in images)):
                coeff = Fraction(1)
                for _, cval in combo:
                    coeff *= cval
                vec_add(out, eta.value(fpath, tuple(k for k, _ in combo)), coeff)
            if out:
                data[(ypath, idx)] = out
        if n == 0:
            data[(ypath, ())] = eta.value(fpath, ())
    return Cochain(y, fm, n, {k: v for k, v in data.items() if v}, eta.shift)


def nullhomotopy_functor(theta: Cochain, eta: Cochain, mu: Cochain, mdeg: int | None = None) -> AInfFunctor:
    """Isomorphism deform(eta) -> deform(mu) given d(theta) = eta - mu.

    f_1 is the identity on both summands and f_{mdeg-1} = (-1)^mdeg theta,
    landing in the M summand.
    """
    c, m = eta.category, eta.bimodule
    mdeg = eta.degree if mdeg is None else mdeg
    if theta.degree != mdeg - 1:
        raise ValueError(f"theta must have degree {mdeg - 1}")
    if hochschild_differential(c, m, theta) != eta - mu:
        raise ValueError("d(theta) differs from eta - mu")
    source, _ = deform(c, m, eta, mdeg)
    target, _ = deform(c, m, mu, mdeg)
    comps = {1: identity_ainf_functor(source).components[1]}
    if not theta.is_zero():
        sign = -1 if mdeg % 2 else 1
        comps[mdeg - 1] = ml.scale(ml.embed_coefficients(c, theta.data), sign)
    return AInfFunctor(source, target, {x: x for x in c.objects}, comps, name="h")


def build_tilde_f(f: LinearFunctor, theta: Cochain, eta: Cochain, mdeg: int | None = None) -> AInfFunctor:
    """The composite f o h o s : Y -> X_eta.

    ``s`` includes Y into the trivial deformation of Y by f*M, ``h`` is the
    nullhomotopy functor to the deformation along f*eta built from ``theta``
    (which must satisfy d(theta) = f*eta), and ``f`` acts diagonally.
    """
    mdeg = eta.degree if mdeg is None else mdeg
    x, m = eta.category, eta.bimodule
    y = f.source
    pulled = pushforward_cocycle(f, eta)
    fm = pulled.bimodule
    if theta.degree != mdeg - 1 or (theta.bimodule is not fm and theta.bimodule != fm):
        raise ValueError("theta must be a cochain of degree mdeg-1 over (Y, f*M)")
    if hochschild_differential(y, theta.bimodule, theta) != pulled:
        raise ValueError("theta does not bound the pulled-back cocycle")
    theta = Cochain(y, fm, theta.degree, theta.data, theta.shift)
    zero = Cochain.zero(y, fm, mdeg)
    y0, _ = deform(y, fm, zero, mdeg)
    yf, _ = deform(y, fm, pulled, mdeg)
    xe, _ = deform(x, m, eta, mdeg)
    base_y = from_fincategory(y)
    s1 = {((a, b), (j,)): {j: Fraction(1)} for a, b in y.nonzero_pairs() for j in range(y.dim(a, b))}
    s = AInfFunctor(base_y, y0, {a: a for a in y.objects}, {1: s1}, name="s")
    h = nullhomotopy_functor(-1 * theta, zero, pulled, mdeg)
    big = {}
    for a, b in y0.quiver.nonzero_pairs():
        fa, fb = f.objmap[a], f.objmap[b]
        dy = y.dim(a, b)
        for j in range(dy):
            img = f.apply(a, b, {j: 1})
            if img:
                big[((a, b), (j,))] = img
        for l in range(fm.dim(a, b)):
            big[((a, b), (dy + l,))] = {x.dim(fa, fb) + l: Fraction(1)}
    fbig = AInfFunctor(yf, xe, f.objmap, {1: big}, name="f")
    out = compose_functors(fbig, compose_functors(h, s))
    out.name = "tilde_f"
    return out


# ---------------------------------------------------------------- obstructions


@dataclass
class ObstructionClass:
    """o_i of a partial functor: an arity-i Hochschild cocycle of the source with
    values in the degree-(2 - i) part of the target, viewed as a bimodule via f_1."""

    arity: int
    shift: int
    representative: Cochain
    certificate: bool
    source: FinCategory
    coefficients: Bimodule
    selection: dict = field(repr=False)  # (a, b) -> target basis indices of the chosen degree

    def as_target_map(self) -> dict:
        """The representative with outputs written in target basis indices."""
        out = {}
        for (objs, idx), vec in self.representative.data.items():
            sel = self.selection[(objs[0], objs[-1])]
            out[(objs, idx)] = {sel[k]: v for k, v in vec.items()}
        return out


def homology_bimodule(F: AInfFunctor, degree: int) -> tuple[Bimodule, dict]:
    """The degree part of the target as a bimodule over the (k-linear) source via f_1."""
    src = F.source.fincat
    if src is None:
        raise ValueError("obstruction classes need a k-linear source category")
    T = F.target
    f1 = F.components.get(1, {})
    sel = {}
    for a, b in product(src.objects, repeat=2):
        fa, fb = F.objmap[a], F.objmap[b]
        sel[(a, b)] = [k for k, g in enumerate(T.quiver.degrees[(fa, fb)]) if g == degree]
    pos = {key: {k: n for n, k in enumerate(v)} for key, v in sel.items()}
    m2 = T.ops.get(2, {})

    def image(a, b, j) -> dict:
        return f1.get(((a, b), (j,)), {})

    left, right = {}, {}
    for a, b, c in product(src.objects, repeat=3):
        fa, fb, fc = (F.objmap[o] for o in (a, b, c))
        if src.dim(a, b) and sel[(b, c)]:
            table = {}
            for i in range(src.dim(a, b)):
                for n, beta in enumerate(sel[(b, c)]):
                    out: dict = {}
                    for k, v in image(a, b, i).items():
                        vec_add(out, m2.get(((fa, fb, fc), (k, beta)), {}), v)
                    w = {pos[(a, c)][o]: v for o, v in out.items() if o in pos[(a, c)]}
                    if w:
                        table[(i, n)] = w
            left[(a, b, c)] = table
        if sel[(a, b)] and src.dim(b, c):
            table = {}
            for n, beta in enumerate(sel[(a, b)]):
                for j in range(src.dim(b, c)):
                    out = {}
                    for k, v in image(b, c, j).items():
                        vec_add(out, m2.get(((fa, fb, fc), (beta, k)), {}), v)
                    w = {pos[(a, c)][o]: v for o, v in out.items() if o in pos[(a, c)]}
                    if w:
                        table[(n, j)] = w
            right[(a, b, c)] = table
    carriers = {key: tuple(f"t{k}" for k in v) for key, v in sel.items()}
    return Bimodule(src, carriers, left, right, shift=degree, name=f"H^{degree}"), sel


def _check_partial(F: AInfFunctor, i: int):
    if i < 3:
        raise ValueError("obstructions are defined from arity 3 on")
    for n in range(2, i):
        if functor_residual(F, n):
            raise ValueError(f"partial functor violates the A-infinity functor equation at arity {n}")


def obstruction_class(F: AInfFunctor, i: int) -> ObstructionClass:
    """o_i: the failure of the arity-i functor equation of (f_1, ..., f_{i-1}).

    Requires the equations below arity i to hold.  The result is certified to
    be a Hochschild cocycle.
    """
    part = F.truncated(i)
    _check_partial(part, i)
    src = F.source.fincat
    degree = 2 - i
    coeff, sel = homology_bimodule(part, degree)
    pos = {key: {k: n for n, k in enumerate(v)} for key, v in sel.items()}
    residual = ml.from_bar(F.source.quiver, functor_residual(part, i))
    data = {}
    for (objs, idx), vec in residual.items():
        p = pos[(objs[0], objs[-1])]
        stray = [o for o in vec if o not in p]
        if stray:
            raise ArithmeticError("obstruction has components outside the expected degree")
        data[(objs, idx)] = {p[o]: v for o, v in vec.items()}
    rep = Cochain(src, coeff, i, data, shift=degree)
    if not is_cocycle(rep):
        raise ArithmeticError("obstruction representative failed the cocycle check")
    return ObstructionClass(i, degree, rep, True, src, coeff, sel)


def extendable(F: AInfFunctor, i: int) -> Cochain | None:
    """A correction delta of arity i - 1 such that replacing f_{i-1} by f_{i-1} + delta
    makes the arity-i equation hold, or None if the obstruction class is nonzero.

    The equations below arity i do not involve f_{i-1}, so they stay satisfied.
    """
    ob = obstruction_class(F, i)
    sign = -1 if i % 2 else 1
    delta = coboundary_solve(ob.source, ob.coefficients, sign * ob.representative)
    if delta is None:
        return None
    corrected = apply_correction(F.truncated(i), ob, delta)
    if functor_residual(corrected, i):
        raise ArithmeticError("correction did not solve the functor equation")
    return delta


def apply_correction(F: AInfFunctor, ob: ObstructionClass, delta: Cochain) -> AInfFunctor:
    """Add ``delta`` (valued in the obstruction's coefficients) to f_{arity-1}."""
    k = ob.arity - 1
    comp = {key: dict(v) for key, v in F.components.get(k, {}).items()}
    for (objs, idx), vec in delta.data.items():
        sel = ob.selection[(objs[0], objs[-1])]
        vec_add(comp.setdefault((objs, idx), {}), {sel[o]: v for o, v in vec.items()})
    return F.with_component(k, ml.clean(comp))


# ---------------------------------------------------------------- module lifts


class _Star:
    """Extra object carrying a module in a one-point extension."""

    def __repr__(self) -> str:
        return "<module>"

    def __lt__(self, other):
        return True


@dataclass
class ModuleLift:
    """The arity-mdeg operation of a lift and the extended A-infinity category."""

    operation: dict
    extended: AInfCategory
    star: object


def lift_module(u: Module, eta: Cochain, mdeg: int) -> ModuleLift | None:
    """Lift the module u along deform(eta): V = U (+) (U (x) M)[2 - mdeg].

    The module is encoded as an extra object ``*`` with hom(*, x) = V(x) in a
    one-point extension of the deformation; the second operation is the
    square-zero action and the unknown arity-mdeg operation
    U (x) hom^{(x) mdeg-1} -> U (x) M is solved from the A-infinity relations at
    arity mdeg + 1 through the generic relation checker.
    """
    c, m = eta.category, eta.bimodule
    if mdeg < 3 or eta.degree != mdeg:
        raise ValueError("lifts are defined for cocycles of degree >= 3")
    if not is_cocycle(eta):
        raise NotACocycleError("eta is not a cocycle")
    xe, _ = deform(c, m, eta, mdeg)
    nmod, embed = tensor_module_bimodule(u, m)
    star = _Star()
    objs = (star,) + c.objects
    degs = dict(xe.quiver.degrees)
    for x in c.objects:
        degs[(star, x)] = (0,) * u.dim(x) + (2 - mdeg,) * nmod.dim(x)
    q = ml.GradedQuiver(objs, degs)
    n2: dict = {}
    for x, y in product(c.objects, repeat=2):
        du, dh = u.dim(x), c.dim(x, y)
        du_y = u.dim(y)
        for (ui, aj), v in u.action.get((x, y), {}).items():
            n2[((star, x, y), (ui, aj))] = dict(v)
        for (wi, aj), v in nmod.action.get((x, y), {}).items():
            n2[((star, x, y), (du + wi, aj))] = {du_y + k: val for k, val in v.items()}
        for ui in range(du):
            for mi in range(m.dim(x, y)):
                w = embed(x, ui, {mi: 1}, y)
                if w:
                    n2[((star, x, y), (ui, dh + mi))] = {du_y + k: val for k, val in w.items()}
    base_ops = {k: dict(v) for k, v in xe.ops.items()}
    base_ops[2] = {**base_ops[2], **n2}

    unknowns = []
    for cpath in paths(c, mdeg - 1):
        x0, xl = cpath[0], cpath[-1]
        if not (u.dim(x0) and nmod.dim(xl)):
            continue
        ranges = [range(u.dim(x0))] + [range(c.dim(cpath[j], cpath[j + 1])) for j in range(mdeg - 1)]
        for idx in product(*ranges):
            for k in range(nmod.dim(xl)):
                unknowns.append(((star,) + cpath, idx, u.dim(xl) + k))

    def extended(op: dict) -> AInfCategory:
        ops = dict(base_ops)
        if op:
            ops[mdeg] = {**ops.get(mdeg, {}), **op}
        return AInfCategory(q, ops, name="lift")

    r0 = relation_residual(extended({}), mdeg + 1, first_object=star)
    # The unknown enters the arity-(mdeg+1) relation linearly, through m_2 only.
    b2 = ml.to_bar(q, base_ops[2])
    b2_index = ml.by_output(b2)
    b2_star = {k: v for k, v in b2.items() if k[0][0] is star}
    columns = []
    for objs_u, idx_u, out_u in unknowns:
        lam = ml.to_bar(q, {(objs_u, idx_u): {out_u: Fraction(1)}})
        col: dict = {}
        lam_index = ml.by_output(lam)
        for r in range(2):
            ml.add_into(col, ml.insert(q, b2_star, lam, r, 1, lam_index))
        for r in range(mdeg):
            ml.add_into(col, ml.insert(q, lam, b2, r, 1, b2_index))
        columns.append(ml.clean(col))
    rows: dict = {}
    for mm in [r0] + columns:
        for key, vec in mm.items():
            for o in vec:
                rows.setdefault((key, o), len(rows))
    mat = Matrix(
        len(rows),
        len(unknowns),
        {(rows[(key, o)], j): v for j, col in enumerate(columns) for key, vec in col.items() for o, v in vec.items()},
    )
    rhs = [Fraction(0)] * len(rows)
    for key, vec in r0.items():
        for o, v in vec.items():
            rhs[rows[(key, o)]] = -v
    sol = solve_linear(mat, rhs)
    if sol is None:
        return None
    op = {}
    for (objs_u, idx_u, out_u), v in zip(unknowns, sol):
        if v:
            op.setdefault((objs_u, idx_u), {})[out_u] = v
    cat = extended(op)
    for n in range(3, 2 * mdeg + 1):
        if relation_residual(cat, n, first_object=star):
            raise ArithmeticError("lift failed its own A-infinity relation check")
    return ModuleLift(op, cat, star)

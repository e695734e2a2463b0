"""Deform the dual numbers along a Hochschild 3-class and watch the obstruction calculus.

Run with ``python3 demos/deformation_walkthrough.py``.
"""

import random

from hhdeform import ainf, hochschild as hh
from hhdeform import fincat, samples
from hhdeform.selftest import strict_inclusion


def show(title, value):
    print(f"{title:<52} {value}")


dual = fincat.dual_numbers()
coeff = fincat.regular_bimodule(dual)

print("Hochschild cohomology of Q[eps]/eps^2 with coefficients in itself")
show("dims in degrees 0..5", [hh.hh_dimension(dual, coeff, n) for n in range(6)])

eta = next(z for z in hh.cocycle_basis(dual, coeff, 3) if hh.coboundary_solve(dual, coeff, z) is None)
show("a cocycle of arity 3 that is not a coboundary", hh.is_cocycle(eta))

deformed, can = ainf.deform(dual, coeff, eta)
show("operations of the square-zero deformation", sorted(deformed.ops))
show("A-infinity relation violations through arity 7", ainf.check_ainf_relations(deformed, 7))

print()
print("Perturbing eta off the cocycle locus breaks exactly one relation")
broken = eta + hh.Cochain(dual, coeff, 3, {(("*",) * 4, (1, 0, 1)): {1: 1}})
bad, _ = ainf.deform(dual, coeff, broken, validate=False)
show("arities of the violated relations", sorted({v.arity for v in ainf.check_ainf_relations(bad, 7)}))

print()
print("The strict inclusion of the undeformed category cannot be extended")
inclusion = strict_inclusion(deformed)
ob = ainf.obstruction_class(inclusion, 3)
show("obstruction representative equals -eta", ob.representative.data == (-1 * eta).data)
show("correction to the arity-2 component exists", ainf.extendable(inclusion, 3) is not None)

print()
print("A coboundary deforms trivially: the inclusion extends")
sigma = samples.random_cochain(dual, coeff, 2, random.Random(1))
trivial = hh.hochschild_differential(dual, coeff, sigma)
inc2 = strict_inclusion(ainf.deform(dual, coeff, trivial)[0])
show("correction to the arity-2 component exists", ainf.extendable(inc2, 3) is not None)

print()
print("Modules: the simple module lifts iff its characteristic class vanishes")
simple = fincat.trivial_module(dual)
for degree in (3, 4):
    z = next(c for c in hh.cocycle_basis(dual, coeff, degree) if hh.coboundary_solve(dual, coeff, c) is None)
    cls = hh.characteristic_class(z, simple)
    lift = hh.module_lift_witness(simple, z, degree)
    show(f"degree {degree}: class vanishes / lift found", (cls.vanishes, lift is not None))

print()
print("A divisor-style toy: the class dies on a full subcategory, so a functor into the deformation exists")
x, y, f, m = samples.divisor_toy()
eta_x = samples.divisor_toy_cocycle(x, m)
pushed = ainf.pushforward_cocycle(f, eta_x)
theta = hh.coboundary_solve(y, pushed.bimodule, pushed)
show("class on X is nonzero", hh.coboundary_solve(x, m, eta_x) is None)
show("its pullback to Y is a coboundary", theta is not None)
lifted = ainf.build_tilde_f(f, theta, eta_x)
_, can_x = ainf.deform(x, m, eta_x)
show("lifted functor satisfies the functor equations", ainf.check_functor_relations(lifted) == [])
show("composing with the projection recovers f", ainf.compose_functors(can_x, lifted) == ainf.strict_functor(f, lifted.source, can_x.target))

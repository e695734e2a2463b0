"""Regenerate the JSON fixtures in this directory: python3 fixtures/generate.py"""

import json
from fractions import Fraction
from pathlib import Path

from hhdeform import ainf, hochschild as hh, samples
from hhdeform import serialize as ser
from hhdeform.fincat import build_cover_category, dual_numbers, p1_cover_spec, regular_bimodule

HERE = Path(__file__).parent


def write(name, tree):
    (HERE / name).write_text(json.dumps(tree, indent=2) + "\n")


def nonzero_class(c, m, n):
    return next(z for z in hh.cocycle_basis(c, m, n) if hh.coboundary_solve(c, m, z) is None)


def main():
    c = dual_numbers()
    m = regular_bimodule(c)
    write("dual_numbers.json", ser.category_to_tree(c))
    write("p1_cover.json", ser.category_to_tree(build_cover_category(p1_cover_spec())))
    for n in (2, 3, 4):
        write(f"dual_hh{n}_class.json", ser.cochain_to_tree(nonzero_class(c, m, n)))
    eta = nonzero_class(c, m, 3)
    broken = eta + hh.Cochain(c, m, 3, {(("*",) * 4, (0, 1, 1)): {1: Fraction(1)}})
    assert not hh.is_cocycle(broken)
    write("dual_hh3_not_closed.json", ser.cochain_to_tree(broken))

    a, _ = ainf.deform(c, m, eta)
    j = {((x, y), (k,)): {k: Fraction(1)} for x, y in c.nonzero_pairs() for k in range(c.dim(x, y))}
    inclusion = ainf.AInfFunctor(ainf.from_fincategory(c), a, {"*": "*"}, {1: j})
    write(
        "obstruct_strict_inclusion.json",
        {
            "kind": "obstruction_problem",
            "source": "dual_numbers.json",
            "target": {"kind": "deformation", "category": "dual_numbers.json", "coeff": "self", "cocycle": "dual_hh3_class.json"},
            "functor": ser.ainf_functor_to_tree(inclusion),
            "arity": 3,
        },
    )

    x, y, f, mx = samples.divisor_toy()
    eta_x = samples.divisor_toy_cocycle(x, mx)
    pulled = ainf.pushforward_cocycle(f, eta_x)
    theta = hh.coboundary_solve(y, pulled.bimodule, pulled)
    write(
        "divisor_tilde_f.json",
        {
            "kind": "tilde_f_problem",
            "source": ser.category_to_tree(y),
            "target": ser.category_to_tree(x),
            "functor": ser.functor_to_tree(f),
            "coeff": "self",
            "cocycle": ser.cochain_to_tree(eta_x),
            "nullhomotopy": ser.cochain_to_tree(theta),
        },
    )


if __name__ == "__main__":
    main()

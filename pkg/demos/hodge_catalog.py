"""Twisted Hodge diamonds of hypersurfaces and where pushforward on HH^m has a kernel.

Run with ``python3 demos/hodge_catalog.py``.
"""

from hhdeform import hodge
from hhdeform.hodge import HypersurfaceSpec

print("Quintic threefold, untwisted")
print(hodge.diamond(HypersurfaceSpec(5, 4, 0)).render())

print()
print("Quintic sixfold in P^7, untwisted; the middle row matches the Jacobian ring")
sixfold = hodge.diamond(HypersurfaceSpec(5, 7, 0))
print(sixfold.render())
print("Jacobian ring row:", hodge.jacobian_middle_row(5, 7))

print()
print("Degree-7 fivefold in P^6 twisted by O(8)")
print(hodge.diamond(HypersurfaceSpec(7, 6, 8)).render())

print()
print("Kernel of HH^m(X, O(t)) -> HH^m(P^N, O(t)) for the degree-7 fivefold, split by HKR summand")
spec = HypersurfaceSpec(7, 6, -8)
for term in hodge.kernel_terms(spec, 8):
    if term.kernel:
        print(f"  p={term.p} q={term.q}: {term.kernel}")
print("  total:", hodge.kernel_dim(spec, 8))

print()
print("Catalog of nonzero kernels with m >= n + 3 (twists -8..8)")
for d, N in [(5, 7), (6, 6), (7, 6), (6, 7)]:
    rows = hodge.catalog_non_fm(d, N, range(-8, 9), range(0, 2 * N))
    shown = ", ".join(f"t={t} m={m}: {k}" for t, m, k in rows[:6])
    more = f" (+{len(rows) - 6} more)" if len(rows) > 6 else ""
    print(f"  d={d} N={N}: {shown or 'none'}{more}")

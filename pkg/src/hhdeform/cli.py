"""Command-line interface: ``hhdeform <subcommand> [flags]``.

Exit codes: 0 success, 1 validation failure (invalid structure, non-cocycle,
failed check, rule not applicable), 2 malformed input or usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import ainf, hochschild, hodge, samples
from . import serialize as ser
from .fincat import ValidationError, regular_bimodule, representable_module, trivial_module


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    """Computation ran but a verification failed; exit code 1."""


# ---------------------------------------------------------------- input resolution


def _resolve(ref, base: Path):
    """A reference is an embedded tree, a builtin name, or a path to a JSON file."""
    if isinstance(ref, (dict, list)):
        return ref, base
    if not isinstance(ref, str):
        raise ser.FormatError(f"cannot interpret reference {ref!r}")
    path = Path(ref)
    if not path.is_absolute():
        path = base / path
    if path.is_file():
        return ser.load_json(path), path.parent
    return ref, base


def load_category(ref, base: Path = Path(".")):
    tree, base = _resolve(ref, base)
    if isinstance(tree, str):
        if tree in samples.BUILTIN_CATEGORIES:
            return samples.builtin_category(tree)
        raise ser.FormatError(f"{tree!r} is neither a builtin category nor a file")
    return ser.category_from_tree(tree)


def load_bimodule(ref, c, base: Path = Path(".")):
    if ref in (None, "self"):
        return regular_bimodule(c)
    tree, _ = _resolve(ref, base)
    if isinstance(tree, str):
        raise ser.FormatError(f"{tree!r} is neither 'self' nor a bimodule file")
    return ser.bimodule_from_tree(tree, c)


def load_module(ref, c, base: Path = Path(".")):
    if ref == "simple":
        return trivial_module(c)
    if isinstance(ref, str) and ref.startswith("regular"):
        obj = ref.partition(":")[2] or c.objects[0]
        if obj not in c.objects:
            raise ser.FormatError(f"unknown object {obj!r} for a representable module")
        return representable_module(c, obj)
    tree, _ = _resolve(ref, base)
    if isinstance(tree, str):
        raise ser.FormatError(f"{tree!r} is neither 'simple', 'regular[:object]' nor a module file")
    return ser.module_from_tree(tree, c)


def load_cochain(ref, c, m, base: Path = Path(".")):
    tree, _ = _resolve(ref, base)
    if isinstance(tree, str):
        raise ser.FormatError(f"cochain file {tree!r} not found")
    return ser.cochain_from_tree(tree, c, m)


def _target_category(ref, base: Path):
    tree, base = _resolve(ref, base)
    if isinstance(tree, dict) and tree.get("kind") == "deformation":
        c = load_category(tree["category"], base)
        m = load_bimodule(tree.get("coeff", "self"), c, base)
        eta = load_cochain(tree["cocycle"], c, m, base)
        return ainf.deform(c, m, eta)[0]
    if isinstance(tree, str):
        return ainf.from_fincategory(load_category(tree, base))
    return ser.ainf_from_tree(tree)


# ---------------------------------------------------------------- output


class Output:
    def __init__(self, structured: bool):
        self.structured = structured
        self.doc: dict = {}
        self.lines: list[str] = []

    def put(self, key: str, value, text: str | None = None):
        self.doc[key] = value
        if text is not None:
            self.lines.append(text)

    def emit(self):
        if self.structured:
            print(json.dumps(self.doc, indent=2))
        else:
            print("\n".join(self.lines))


def _range(spec: str) -> list[int]:
    out = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition(":")
        try:
            if sep:
                out += list(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad range {spec!r}; use e.g. '-3:3' or '1,4,7'") from None
    return out


# ---------------------------------------------------------------- subcommands


def cmd_hh(args, out: Output):
    c = load_category(args.category)
    m = load_bimodule(args.coeff, c)
    if args.degree < 0 or args.degree > args.max_degree:
        raise UsageError(f"--degree must lie in 0..{args.max_degree} (raise --max-degree to go further)")
    dim = hochschild.hh_dimension(c, m, args.degree, max_degree=args.max_degree)
    out.put("category", c.name)
    out.put("degree", args.degree)
    out.put("dimension", dim, str(dim))


def cmd_deform(args, out: Output):
    c = load_category(args.category)
    m = load_bimodule(args.coeff, c)
    eta = load_cochain(args.cocycle, c, m)
    closed = hochschild.is_cocycle(eta)
    if not closed and not args.force:
        raise CheckFailed("the cochain is not a cocycle; refusing to deform (use --force to inspect the violations)")
    a, can = ainf.deform(c, m, eta, validate=not args.force)
    bound = args.up_to or ainf.default_bound(a)
    violations = ainf.check_ainf_relations(a, bound)
    out.put("ainf_category", ser.ainf_to_tree(a))
    out.put("cocycle", closed)
    out.put("checked_up_to", bound)
    out.put("violations", [str(v) for v in violations])
    out.lines.append(ser.dumps(ser.ainf_to_tree(a)))
    out.lines.append(f"relations checked through arity {bound}: " + ("ok" if not violations else "FAILED"))
    out.lines += [f"  {v}" for v in violations]
    if violations:
        raise CheckFailed(f"{len(violations)} relation violations")


def cmd_obstruct(args, out: Output):
    path = Path(args.problem)
    tree = ser.load_json(path)
    base = path.parent
    src_cat = load_category(ser.need(tree, "source", "obstruction problem"), base)
    source = ainf.from_fincategory(src_cat)
    target = _target_category(ser.need(tree, "target", "obstruction problem"), base)
    functor = ser.ainf_functor_from_tree(ser.need(tree, "functor", "obstruction problem"), source, target)
    arity = args.arity or int(tree.get("arity", 0))
    if arity < 3:
        raise UsageError("give --arity (at least 3)")
    try:
        ob = ainf.obstruction_class(functor, arity)
    except ValueError as exc:
        raise CheckFailed(str(exc)) from exc
    delta = ainf.extendable(functor, arity)
    rep = ser.cochain_to_tree(ob.representative)
    out.put("arity", arity)
    out.put("shift", ob.shift)
    out.put("representative", rep)
    out.put("cocycle_certificate", ob.certificate)
    out.put("extendable", delta is not None)
    out.put("correction", None if delta is None else ser.cochain_to_tree(delta))
    out.lines.append(f"obstruction o_{arity}: arity {arity}, internal degree {ob.shift}")
    out.lines.append(ser.dumps(rep))
    out.lines.append(f"cocycle certificate: {ob.certificate}")
    out.lines.append("extendable: " + ("yes" if delta is not None else "no (class is nonzero)"))


def cmd_tilde_f(args, out: Output):
    path = Path(args.problem)
    tree = ser.load_json(path)
    base = path.parent
    src = load_category(ser.need(tree, "source", "tilde-f problem"), base)
    tgt = load_category(ser.need(tree, "target", "tilde-f problem"), base)
    f = ser.functor_from_tree(ser.need(tree, "functor", "tilde-f problem"), src, tgt)
    m = load_bimodule(tree.get("coeff", "self"), tgt, base)
    eta = load_cochain(ser.need(tree, "cocycle", "tilde-f problem"), tgt, m, base)
    if not hochschild.is_cocycle(eta):
        raise CheckFailed("eta is not a cocycle")
    pulled = ainf.pushforward_cocycle(f, eta)
    if "nullhomotopy" in tree:
        theta = load_cochain(tree["nullhomotopy"], src, pulled.bimodule, base)
    else:
        theta = hochschild.coboundary_solve(src, pulled.bimodule, pulled)
        if theta is None:
            raise CheckFailed("f*eta is not a coboundary, so no tilde f exists")
    try:
        tf = ainf.build_tilde_f(f, theta, eta)
    except ValueError as exc:
        raise CheckFailed(str(exc)) from exc
    _, can = ainf.deform(tgt, m, eta)
    composite = ainf.compose_functors(can, tf)
    agrees = composite == ainf.strict_functor(f, composite.source, composite.target)
    violations = ainf.check_functor_relations(tf)
    out.put("tilde_f", ser.ainf_functor_to_tree(tf))
    out.put("can_after_tilde_f_equals_f", agrees)
    out.put("violations", [str(v) for v in violations])
    out.lines.append(ser.dumps(ser.ainf_functor_to_tree(tf)))
    out.lines.append(f"can o tilde f = f: {agrees}")
    out.lines.append("functor equations: " + ("ok" if not violations else "FAILED"))
    if not agrees or violations:
        raise CheckFailed("tilde f failed its checks")


def cmd_charclass(args, out: Output):
    c = load_category(args.category)
    m = load_bimodule(args.coeff, c)
    eta = load_cochain(args.cocycle, c, m)
    u = load_module(args.module, c)
    try:
        cls = hochschild.characteristic_class(eta, u, dual=args.dual)
    except hochschild.NotACocycleError as exc:
        raise CheckFailed(str(exc)) from exc
    out.put("dual", args.dual)
    out.put("degree", cls.degree)
    out.put("vanishes", cls.vanishes)
    label = "c*" if args.dual else "c"
    out.lines.append(f"{label}_U(eta) in degree {cls.degree}: " + ("vanishes" if cls.vanishes else "nonzero"))


def _spec(args) -> hodge.HypersurfaceSpec:
    try:
        return hodge.HypersurfaceSpec(args.degree, args.ambient, args.twist)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_diamond(args, out: Output):
    spec = _spec(args)
    dia = hodge.diamond(spec)
    out.put("d", spec.d)
    out.put("N", spec.N)
    out.put("t", spec.t)
    out.put("table", [{"p": p, "q": q, "value": v} for p, q, v in dia.table()])
    out.put("rows", dia.rows())
    out.put("text", dia.render(), dia.render())


def cmd_hkr(args, out: Output):
    spec = _spec(args)
    try:
        value = hodge.hkr_hh_dim(spec, args.hh_degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.put("dimension", value, str(value))


def cmd_kernel(args, out: Output):
    spec = _spec(args)
    terms = hodge.kernel_terms(spec, args.hh_degree)
    value = sum(t.kernel for t in terms)
    out.put("terms", [t.__dict__ for t in terms])
    out.put("kernel", value, str(value))


def cmd_catalog(args, out: Output):
    ts, ms = _range(args.twists), _range(args.hh_degrees)
    rows = hodge.catalog_non_fm(args.degree, args.ambient, ts, ms)
    out.put("entries", [{"t": t, "m": m, "kernel": k} for t, m, k in rows])
    out.lines.append("t\tm\tkernel")
    out.lines += [f"{t}\t{m}\t{k}" for t, m, k in rows]


def cmd_selftest(args, out: Output):
    from .selftest import run_all

    results = run_all(random.Random(args.seed), instances=args.instances)
    out.put("seed", args.seed)
    out.put("results", [{"check": name, "ok": ok, "detail": detail} for name, ok, detail in results])
    for name, ok, detail in results:
        out.lines.append(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    if not all(ok for _, ok, _ in results):
        raise CheckFailed("self-test failures")


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document instead of text")

    parser = argparse.ArgumentParser(prog="hhdeform", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def algebraic(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--category", required=True, help="builtin name or category JSON file")
        p.add_argument("--coeff", default="self", help="'self' or bimodule JSON file")
        return p

    p = algebraic("hh", "dimension of Hochschild cohomology")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=hochschild.DEFAULT_MAX_DEGREE)
    p.set_defaults(func=cmd_hh)

    p = algebraic("deform", "infinitesimal deformation along a cocycle")
    p.add_argument("--cocycle", required=True, help="cochain JSON file")
    p.add_argument("--up-to", type=int, default=None, help="arity bound for the relation check")
    p.add_argument("--force", action="store_true", help="build even if the cochain is not closed")
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("obstruct", parents=[common], help="obstruction class of a partial functor")
    p.add_argument("--problem", required=True, help="obstruction problem JSON file")
    p.add_argument("--arity", type=int, default=None)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("tilde-f", parents=[common], help="the composite functor into the deformation")
    p.add_argument("--problem", required=True, help="tilde-f problem JSON file")
    p.set_defaults(func=cmd_tilde_f)

    p = algebraic("charclass", "characteristic class of a cocycle on a module")
    p.add_argument("--cocycle", required=True)
    p.add_argument("--module", default="simple", help="'simple', 'regular[:object]' or module JSON file")
    p.add_argument("--dual", action="store_true")
    p.set_defaults(func=cmd_charclass)

    def geometric(name, help_, twist_required=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--degree", type=int, required=True, help="degree d of the hypersurface")
        p.add_argument("--ambient", type=int, required=True, help="N for the ambient P^N")
        if twist_required:
            p.add_argument("--twist", type=int, default=0)
        return p

    geometric("diamond", "twisted Hodge diamond").set_defaults(func=cmd_diamond)
    p = geometric("hkr", "dim HH^k(X, O(t)) via HKR")
    p.add_argument("--hh-degree", type=int, required=True)
    p.set_defaults(func=cmd_hkr)
    p = geometric("kernel", "dim of the kernel of pushforward on HH^m(X, O(t))")
    p.add_argument("--hh-degree", type=int, required=True)
    p.set_defaults(func=cmd_kernel)
    p = geometric("catalog", "nonzero kernels with m >= n + 3", twist_required=False)
    p.add_argument("--twists", required=True, help="range like -8:8 or list 1,2")
    p.add_argument("--hh-degrees", required=True, help="range like 8:12")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("selftest", parents=[common], help="run the randomized invariant checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=20)
    p.set_defaults(func=cmd_selftest)
    return parser


_RANGE_FLAGS = ("--twists", "--hh-degrees")


def _glue_ranges(argv: list[str]) -> list[str]:
    # argparse reads a value like "-8:8" as a flag
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _RANGE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_ranges(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(getattr(args, "json", False))
    try:
        args.func(args, out)
    except (UsageError, ser.FormatError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CheckFailed, ValidationError, hochschild.NotACocycleError, hodge.RuleNotApplicable) as exc:
        out.put("error", str(exc))
        if out.structured or out.lines:
            out.emit()
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out.emit()
    return 0


def main() -> None:
    sys.exit(run())

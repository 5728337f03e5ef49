"""Command-line entry point ``segre-acm``.

Exit status: 0 on success, 1 on a domain error, 2 on a parse or usage error.
Set SEGRE_ACM_CACHE to a directory to reuse earlier outputs.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from . import __version__
from .beilinson import beilinson_table, classify
from .chow import Polynomial, compare_reduced, euler_pairing, hilbert_poly
from .cohomology import UndeterminedError, coh, ext_sheaves, is_acm, ulrich_init
from .expr import ParseError, format_sheaf, parse
from .mutation import serre_involution, ulrich_class
from .scroll import (
    ScrollDescriptor,
    ScrollDivisor,
    chi_L_dual,
    dimext_bound,
    dimext_polynomial,
    scroll_coh,
    scroll_ell,
    verify_wildness_cases,
)
from .wildness import (
    DelPezzoDatum,
    TwistVanishing,
    WildnessInput,
    cm_wild_criterion,
    dp_family_dim,
    dp_kernel_chi,
    dp_nonulrich_check,
    quasi_minimal_ext_table,
    scroll_wildness_input,
)


class UsageError(ValueError):
    """Malformed argument value (exit status 2)."""


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _big(n: int) -> str:
    return str(n)


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _coeffs(p: Polynomial) -> list[str]:
    return [_frac(c) for c in p.coeffs]


def _sheaf(text: str):
    s = parse(text)
    if s.is_zero:
        raise ValueError("the zero sheaf is not a valid input")
    return s


def _int_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like a..b, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _poly(text: str) -> Polynomial:
    """Comma-separated coefficients, constant term first."""
    try:
        return Polynomial([Fraction(c.strip()) for c in text.split(",")])
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad polynomial coefficients {text!r}") from None


def _window(text: str) -> TwistVanishing:
    """lo..hi[:t1,t2,...][:below][:above]"""
    parts = text.split(":")
    r = _int_range(parts[0])
    vanishing, below, above = set(), False, False
    for p in parts[1:]:
        if p == "below":
            below = True
        elif p == "above":
            above = True
        elif p:
            try:
                vanishing |= {int(t) for t in p.split(",")}
            except ValueError:
                raise UsageError(f"bad twist list {p!r}") from None
    return TwistVanishing(r.start, r.stop - 1, frozenset(vanishing), below, above)


def _coh_record(s, t: int, bott: bool) -> dict:
    iv = coh(s, t, exact_omega=bott)
    return {"t": t, "lo": list(iv.lo), "hi": list(iv.hi), "exact": iv.exact}


# ---------------------------------------------------------------------------
# handlers return (text, payload)


def cmd_coh(args):
    s = _sheaf(args.expr)
    twists = _int_range(args.range) if args.range else [args.twist]
    records = [_coh_record(s, t, args.bott) for t in twists]
    lines = []
    for r in records:
        cells = [str(x) if x == y else f"{x}..{y}" for x, y in zip(r["lo"], r["hi"])]
        tag = "" if r["exact"] else " (bounds)"
        lines.append(f"t={r['t']} h=(" + ",".join(cells) + ")" + tag)
    return "\n".join(lines), {"expr": format_sheaf(s), "records": records}


def cmd_hilb(args):
    s = _sheaf(args.expr)
    P = hilbert_poly(s.ch())
    rank = s.rank
    p = P / rank
    text = f"P(t) = {P}\nrank = {rank}\np(t) = {p}"
    return text, {
        "expr": format_sheaf(s),
        "rank": rank,
        "coefficients": _coeffs(P),
        "reduced": _coeffs(p),
    }


def cmd_chi(args):
    a, b = _sheaf(args.a), _sheaf(args.b)
    value = euler_pairing(a.ch(), b.ch())
    return _frac(value), {"value": _frac(value)}


def cmd_ext(args):
    iv = ext_sheaves(_sheaf(args.a), _sheaf(args.b), exact_omega=args.bott)
    tag = "" if iv.exact else " (bounds)"
    return f"Ext = {iv}{tag}", {"lo": list(iv.lo), "hi": list(iv.hi), "exact": iv.exact}


def cmd_acm(args):
    res = is_acm(_sheaf(args.expr))
    witness = None if res.witness is None else {"i": res.witness[0], "t": res.witness[1]}
    if res.acm is True:
        text = "ACM"
    elif res.acm is False:
        text = f"not ACM witness=(i={res.witness[0]}, t={res.witness[1]})"
    else:
        text = f"undetermined at (i={res.witness[0]}, t={res.witness[1]})"
    return text, {"acm": res.acm, "witness": witness}


def cmd_ulrich(args):
    try:
        t = ulrich_init(_sheaf(args.expr))
    except UndeterminedError as exc:
        return f"undetermined: {exc}", {"ulrich": None, "t": None}
    if t is None:
        return "not Ulrich", {"ulrich": False, "t": None}
    return f"Ulrich t={t}", {"ulrich": True, "t": t}


def cmd_table(args):
    table = beilinson_table(_sheaf(args.expr), exact_omega=args.bott)
    payload = table.to_json()
    payload["b"] = table.b()
    return table.format(), payload


def cmd_classify(args):
    c = classify(_sheaf(args.expr))
    return str(c), c.to_json()


def cmd_uk(args):
    u = ulrich_class(args.k)
    partner = serre_involution(u)
    chi_self = u.chi_self()
    cls = [_frac(x) for x in u.cls.components]
    text = (
        f"a={u.a} b={u.b} rank={u.rank} chi_self={chi_self} serre_partner={partner.k}\n"
        f"class=({'; '.join(cls)})"
    )
    return text, {
        "k": u.k,
        "a": _big(u.a),
        "b": _big(u.b),
        "rank": _big(u.rank),
        "class": cls,
        "chi_self": chi_self,
        "serre_partner": partner.k,
    }


def _degrees(text: str) -> ScrollDescriptor:
    try:
        degs = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad degree list {text!r}") from None
    return ScrollDescriptor(degs)


def cmd_scroll_coh(args):
    if not args.degrees:
        raise UsageError("scroll coh needs --degrees")
    S = _degrees(args.degrees)
    h = scroll_coh(S, ScrollDivisor(args.x, args.y))
    text = f"{S} x={args.x} y={args.y} h=(" + ",".join(map(str, h)) + ")"
    return text, {"degrees": list(S.degrees), "x": args.x, "y": args.y, "h": list(h)}


def cmd_scroll_ell(args):
    ell, chi = scroll_ell(args.n, args.d), chi_L_dual(args.n, args.d)
    return f"ell={ell} chi_L_dual={chi}", {"n": args.n, "d": args.d, "ell": ell, "chi_L_dual": chi}


def cmd_scroll_dimext(args):
    if args.d == "d":
        P = dimext_polynomial(args.n, args.k)
        return P.format("d"), {"n": args.n, "k": args.k, "polynomial": _coeffs(P)}
    try:
        d = int(args.d)
    except ValueError:
        raise UsageError(f"d must be an integer or the letter d, got {args.d!r}") from None
    b = dimext_bound(args.n, d, args.k)
    return f"bound={b}", {"n": args.n, "d": d, "k": args.k, "bound": _big(b)}


def cmd_scroll_wildcheck(args):
    r = verify_wildness_cases(args.n, args.d)
    text = (
        f"n={r.n} d={r.d} k={r.k} ell={r.ell} bound={r.bound} "
        f"sub={r.mult_sub} quot={r.mult_quot} {'pass' if r.passed else 'fail'}"
    )
    payload = r.to_json()
    for key in ("bound", "mult_sub", "mult_quot", "ell", "ell_from_coh", "chi_from_coh"):
        payload[key] = _big(payload[key])
    return text, payload


def cmd_wild_check(args):
    w = WildnessInput(
        n=args.n,
        rpA=_poly(args.rpA),
        rpB=_poly(args.rpB),
        ext1_dim=args.ext1,
        ulrichA=args.ulrichA,
        ulrichB=args.ulrichB,
        h0A_window=_window(args.h0A_window) if args.h0A_window else None,
        h1B_window=_window(args.h1B_window) if args.h1B_window else None,
    )
    v = cm_wild_criterion(w)
    return str(v), {"verdict": v.value, "order": compare_reduced(w.rpB, w.rpA)}


def cmd_wild_scroll(args):
    w = scroll_wildness_input(args.n, args.d)
    v = cm_wild_criterion(w)
    text = f"{v} ext1>={w.ext1_dim} rpA={w.rpA} rpB={w.rpB}"
    return text, {
        "verdict": v.value,
        "ext1_dim": _big(w.ext1_dim),
        "rpA": _coeffs(w.rpA),
        "rpB": _coeffs(w.rpB),
        "ulrichA": w.ulrichA,
        "ulrichB": w.ulrichB,
    }


def cmd_wild_dp(args):
    d = DelPezzoDatum(args.case, args.a, args.b)
    D, chi = dp_family_dim(d), dp_kernel_chi(d)
    nonu = None if args.deg is None else dp_nonulrich_check(d, args.deg)
    text = f"D={D} b_a={d.b_a} chi={chi}"
    if nonu is not None:
        text += f" non_ulrich={'yes' if nonu else 'no'}"
    return text, {"case": d.case.value, "a": d.a, "b": d.b, "D": D, "b_a": d.b_a,
                  "chi": chi, "non_ulrich": nonu}


def cmd_wild_quasi_minimal(args):
    t = quasi_minimal_ext_table(args.N, args.cone)
    higher = "?" if t.ext_higher is None else str(t.ext_higher)
    text = f"hom={list(map(list, t.hom))} ext1={list(map(list, t.ext1))} ext>=2={higher}"
    return text, t.to_json()


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _ArgParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")

    p = _ArgParser(prog="segre-acm", parents=[common],
                                description="Exact sheaf computations on P^1 x P^2 and scrolls.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func, name=name)
        return sp

    sp = add("coh", cmd_coh, "cohomology h^0..h^3 of a sheaf")
    sp.add_argument("expr")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--twist", type=int, default=0)
    g.add_argument("--range", help="a..b (write --range=-3..3 for negative a)")
    sp.add_argument("--bott", action="store_true", help="exact Omega (x) Omega via Bott")

    sp = add("hilb", cmd_hilb, "Hilbert polynomial")
    sp.add_argument("expr")

    for name, func, help_ in (("chi", cmd_chi, "Euler pairing chi(A, B)"),
                              ("ext", cmd_ext, "Ext^i(A, B) for direct sums")):
        sp = add(name, func, help_)
        sp.add_argument("a")
        sp.add_argument("b")
        if name == "ext":
            sp.add_argument("--bott", action="store_true")

    for name, func, help_ in (("acm", cmd_acm, "ACM test with witness"),
                              ("ulrich", cmd_ulrich, "Ulrich initialization"),
                              ("classify", cmd_classify, "classification of an ACM bundle")):
        sp = add(name, func, help_)
        sp.add_argument("expr")

    sp = add("table", cmd_table, "6x6 Beilinson table a[i][j]")
    sp.add_argument("expr")
    sp.add_argument("--bott", action="store_true")

    sp = add("uk", cmd_uk, "the rigid Ulrich class U_k")
    sp.add_argument("k", type=int)

    sp = add("scroll", None, "rational normal scrolls")
    sp.add_argument("--degrees", help="comma-separated a_1,...,a_n")
    ssub = sp.add_subparsers(dest="scroll_command", required=True)
    for name, func, argnames, help_ in (
        ("coh", cmd_scroll_coh, ("x", "y"), "cohomology of xH + yF"),
        ("ell", cmd_scroll_ell, ("n", "d"), "l and chi(L^dual)"),
        ("dimext", cmd_scroll_dimext, ("n", "d", "k"), "Ext^1 bound; d may be the letter d"),
        ("wildcheck", cmd_scroll_wildcheck, ("n", "d"), "wildness range check"),
    ):
        q = ssub.add_parser(name, parents=[common], help=help_)
        q.set_defaults(func=func, name=f"scroll {name}")
        for a in argnames:
            q.add_argument(a, type=str if (name, a) == ("dimext", "d") else int)

    sp = add("wild", None, "wildness certificates")
    wsub = sp.add_subparsers(dest="wild_command", required=True)
    q = wsub.add_parser("check", parents=[common], help="criterion on numerical data")
    q.set_defaults(func=cmd_wild_check, name="wild check")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--rpA", required=True, help="coefficients, constant first")
    q.add_argument("--rpB", required=True)
    q.add_argument("--ext1", type=int, required=True)
    q.add_argument("--ulrichA", type=int)
    q.add_argument("--ulrichB", type=int)
    q.add_argument("--h0A-window", dest="h0A_window", help="lo..hi[:t,...][:below][:above]")
    q.add_argument("--h1B-window", dest="h1B_window")
    q = wsub.add_parser("scroll", parents=[common], help="certificate for (O, U_k) on a scroll")
    q.set_defaults(func=cmd_wild_scroll, name="wild scroll")
    q.add_argument("n", type=int)
    q.add_argument("d", type=int)
    q = wsub.add_parser("dp", parents=[common], help="del Pezzo kernel bundles")
    q.set_defaults(func=cmd_wild_dp, name="wild dp")
    q.add_argument("case", choices=["BlowUp", "Quadric"])
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q.add_argument("--deg", type=int)
    q = wsub.add_parser("quasi-minimal", parents=[common], help="Ext table of the pair")
    q.set_defaults(func=cmd_wild_quasi_minimal, name="wild quasi-minimal")
    q.add_argument("N", type=int)
    q.add_argument("--cone", action="store_true")
    return p


# ---------------------------------------------------------------------------
# optional on-disk cache keyed by the argument vector


def _cache_path(argv: list[str]) -> Path | None:
    root = os.environ.get("SEGRE_ACM_CACHE")
    if not root:
        return None
    key = hashlib.sha256(json.dumps([__version__, argv]).encode()).hexdigest()
    return Path(root) / key[:2] / f"{key}.txt"


def _cache_get(path: Path | None) -> str | None:
    if path is None:
        return None
    try:
        return path.read_text()
    except OSError:
        return None


def _cache_put(path: Path | None, out: str) -> None:
    if path is None:
        return
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent)
        with os.fdopen(fd, "w") as fh:
            fh.write(out)
        os.replace(tmp, path)
    except OSError:
        pass


def run(argv: list[str]) -> tuple[int, str, str]:
    """Execute one command; returns (exit status, stdout, stderr)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return 2, "", f"segre-acm: usage error: {exc}\n"
    use_json = getattr(args, "json", False)
    path = _cache_path(argv)
    cached = _cache_get(path)
    if cached is not None:
        return 0, cached, ""
    try:
        text, payload = args.func(args)
    except ParseError as exc:
        return 2, "", f"segre-acm: parse error: {exc}\n"
    except UsageError as exc:
        return 2, "", f"segre-acm: usage error: {exc}\n"
    except (ValueError, TypeError, ArithmeticError) as exc:
        return 1, "", f"segre-acm: error: {exc}\n"
    if use_json:
        out = json.dumps({"command": args.name, **payload}, indent=2) + "\n"
    else:
        out = text + "\n"
    _cache_put(path, out)
    return 0, out, ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else list(argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())

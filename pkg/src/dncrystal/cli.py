"""Command-line front end.

Exit status: 0 on success, 1 when a check fails, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import data_file
from .crystal import StateError, format_path, parse_path
from .kinds import EnergyKind, table_kinds


class UsageError(Exception):
    pass


class Out:
    def __init__(self, fmt, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, text: str, **obj):
        if self.fmt == "json-lines":
            self.stream.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def _cap(text):
    if text in ("inf", "infinity", "oo"):
        return None
    try:
        l = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"capacity must be an integer or 'inf', got {text!r}")
    if l < 1:
        raise argparse.ArgumentTypeError("capacity must be >= 1")
    return l


def _kind(text):
    try:
        return EnergyKind.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _ints(text):
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}")


def _read_text(args):
    if getattr(args, "state", None) not in (None, "-"):
        return args.state
    if getattr(args, "file", None):
        with open(args.file) as fh:
            return fh.read()
    return sys.stdin.read()


def _read_state(args):
    text = _read_text(args)
    lines = [l for l in text.splitlines() if l.strip()]
    if not lines:
        raise UsageError("no state given")
    return parse_path(lines[0], args.n)


# -- commands -----------------------------------------------------------------------

def cmd_evolve(args, out):
    from .automaton import evolve, star_evolve
    p = _read_state(args)
    step = star_evolve if args.star else evolve
    rows = [p]
    for _ in range(args.steps):
        rows.append(step(rows[-1], args.l)[0])
    for t, row in enumerate(rows):
        if t == 0 and not args.include_initial:
            continue
        out.emit(format_path(row), t=t, state=format_path(row))
    return 0


def _prefix_rows(out, table, upto, prefixes):
    for kind, vals in table.items():
        vals = vals[1:upto + 1] if upto else vals[1:]
        if not prefixes:
            vals = vals[-1:]
        out.emit(f"{kind}: " + " ".join(map(str, vals)), kind=str(kind), values=vals)


def cmd_energy(args, out):
    from .energies import energy_report
    p = _read_state(args)
    kinds = args.kind or table_kinds(args.n)
    for k in kinds:
        k.check_rank(args.n)
    _prefix_rows(out, energy_report(p, kinds), args.upto, args.prefixes)
    return 0


def cmd_rho(args, out):
    from .automaton import parse_colors, rho, rho_table
    p = _read_state(args)
    if args.colors is not None:
        cs = parse_colors(args.colors, args.n)
        L = min(args.upto or len(p), len(p))
        ks = range(1, L + 1) if args.prefixes else [L]
        vals = [rho(cs, p[:k]) for k in ks]
        out.emit(f"{' '.join(map(str, cs)) or 'empty'}: " + " ".join(map(str, vals)),
                 colors=list(cs), values=vals)
        return 0
    kinds = args.kind or table_kinds(args.n)
    _prefix_rows(out, rho_table(p, kinds), args.upto, args.prefixes)
    return 0


def cmd_reconstruct(args, out):
    from .automaton import delta_kinds, reconstruct_path
    text = _read_text(args)
    table = {}
    for num, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise UsageError(f"line {num}: expected 'kind: values'")
        try:
            table[EnergyKind.parse(head)] = [0] + [int(x) for x in tail.split()]
        except ValueError as e:
            raise UsageError(f"line {num}: {e}")
    missing = [str(k) for k in delta_kinds(args.n) if k not in table]
    if missing:
        raise UsageError("table lacks rows for " + ", ".join(missing))
    shape = args.shape
    for k in delta_kinds(args.n):
        if len(table[k]) != len(shape) + 1:
            raise UsageError(f"row {k} has {len(table[k]) - 1} entries, shape has {len(shape)}")
    p = reconstruct_path(shape, table, args.n)
    out.emit(format_path(p), state=format_path(p))
    return 0


def _load_pair(path):
    from .rigged import parse_pair
    if path is None:
        text = data_file("mixed_capacity.pair").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_pair(text)


def cmd_tau(args, out):
    from .rigged import tau, tau_table
    p, rc = _load_pair(args.pair)
    ds = args.d if args.d else list(range(rc.n + 1))
    if args.k is not None:
        for d in ds:
            val, T = tau(rc, d, args.k)
            out.emit(f"tau({d})_{args.k} = {val}  minimizer: "
                     + (" ".join(f"({s.a},{s.j},{s.r})" for s in T) or "empty"),
                     d=d, k=args.k, value=val, minimizer=[list(s) for s in T])
        return 0
    tab = tau_table(rc, ds)
    for d in ds:
        vals = tab[d][1:]
        out.emit(f"tau({d}): " + " ".join(map(str, vals)), d=d, values=vals)
    return 0


def _report_suite(out, res):
    status = "PASS" if res.ok else "FAIL"
    out.emit(f"{status} {res.name} ({res.cases} cases)", suite=res.name, ok=res.ok,
             cases=res.cases, witness=[repr(w) for w in res.failures[:3]])
    for w in res.failures[:3]:
        if out.fmt == "text":
            out.emit(f"  witness: {w!r}")
    return res.ok


def cmd_check(args, out):
    from . import suites
    ranks = [args.n] if args.n else [3, 4, 5]
    ok = True
    which = args.suite
    if which in ("ybe", "all"):
        for caps in ((1, 1, 1), (2, 1, 2)):
            ok &= _report_suite(out, suites.run_ybe_exhaustive(3, caps))
        for n in ranks:
            ok &= _report_suite(out, suites.run_ybe_random(n, args.cases, args.seed + n))
    if which in ("symmetry", "all"):
        for n in ranks:
            ok &= _report_suite(out, suites.run_symmetry(n, args.cases, args.seed + n))
    if which in ("main", "all"):
        ok &= _report_suite(out, suites.run_main(args.cases, args.seed, tuple(ranks)))
    if which in ("star", "all"):
        ok &= _report_suite(out, suites.run_star(args.cases, args.seed, tuple(ranks)))
    if which in ("oracle", "all"):
        ok &= _report_suite(out, suites.run_oracle())
    if which in ("conjecture", "all"):
        from .rigged import check_conjecture
        p, rc = _load_pair(args.pair)
        rep = check_conjecture(p, rc, replay=not args.no_replay)
        for note in rep.notes:
            out.emit(f"note: {note}", note=note)
        for lab, t, d, k, ta, rh in rep.rows:
            if args.verbose or ta != rh:
                st = "PASS" if ta == rh else "FAIL"
                out.emit(f"{st} l={lab} t={t} d={d} k={k} tau={ta} energy={rh}",
                         l=lab, t=t, d=d, k=k, tau=ta, energy=rh, ok=ta == rh)
        status = "PASS" if rep.ok else "FAIL"
        out.emit(f"{status} conjecture ({len(rep.rows)} equalities, highest={rep.highest}, "
                 f"regime={rep.regime})", suite="conjecture", ok=rep.ok, cases=len(rep.rows),
                 highest=rep.highest, regime=rep.regime)
        ok &= rep.ok
    return 0 if ok else 1


def cmd_xpoly(args, out):
    from .rigged import gen_poly
    kind = args.kind
    kind.check_rank(args.n)
    if len(args.weight) != args.n:
        raise UsageError(f"weight needs {args.n} entries")
    poly = gen_poly(kind, args.shape, args.weight, args.n)
    text = " + ".join(f"{c}*q^{e}" for e, c in poly.items()) or "0"
    out.emit(text, kind=str(kind), coefficients={str(e): c for e, c in poly.items()})
    return 0


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dncrystal", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("text", "json-lines"), default="text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json-lines"), default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="cmd", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    def state_opts(sp):
        sp.add_argument("state", nargs="?", help="path text, e.g. '1 2 | -1'; '-' or omitted reads stdin")
        sp.add_argument("--file", help="read the state from the first line of this file")
        sp.add_argument("--n", type=int, required=True, help="rank (>= 3)")

    sp = sub.add_parser("evolve", help="apply T_l (or T*_l) repeatedly and print the rows")
    state_opts(sp)
    sp.add_argument("--steps", type=int, default=1)
    sp.add_argument("--l", type=_cap, default=None, help="carrier capacity or 'inf' (default)")
    sp.add_argument("--star", action="store_true", help="use the starred automaton")
    sp.add_argument("--include-initial", action="store_true")
    sp.set_defaults(func=cmd_evolve)

    for name, func, hlp in (("energy", cmd_energy, "generalized energies of a state"),
                            ("rho", cmd_rho, "counting functions of a state")):
        sp = sub.add_parser(name, help=hlp)
        state_opts(sp)
        sp.add_argument("--kind", type=_kind, action="append",
                        help="energy kind such as v0, v*3, w2-v2, v0^s1, w1 (repeatable)")
        sp.add_argument("--prefixes", action="store_true", help="report every prefix p_[k]")
        sp.add_argument("--upto", type=int, help="last prefix length to report")
        if name == "rho":
            sp.add_argument("--colors", help="explicit color list, e.g. '2 3 -1 -1'")
        sp.set_defaults(func=func)

    sp = sub.add_parser("reconstruct", help="rebuild a path from a prefix table")
    sp.add_argument("state", nargs="?", help="table text; '-' or omitted reads stdin")
    sp.add_argument("--file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--shape", type=_ints, required=True, help="box capacities, e.g. '6 3 4'")
    sp.set_defaults(func=cmd_reconstruct)

    sp = sub.add_parser("tau", help="ultradiscrete tau functions of a pair file")
    sp.add_argument("--pair", help="pair file (default: the bundled example)")
    sp.add_argument("--d", type=int, action="append")
    sp.add_argument("--k", type=int, help="single prefix length; also prints the minimizer")
    sp.set_defaults(func=cmd_tau)

    sp = sub.add_parser("check", help="run a property suite")
    sp.add_argument("suite", choices=("ybe", "symmetry", "main", "star", "conjecture", "oracle", "all"))
    sp.add_argument("--n", type=int, help="restrict randomized suites to one rank")
    sp.add_argument("--cases", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--pair", help="pair file for the conjecture suite")
    sp.add_argument("--no-replay", action="store_true")
    sp.add_argument("--verbose", action="store_true", help="print passing rows as well")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("xpoly", help="generating polynomial of an energy over highest paths")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", type=_kind, default=EnergyKind("v", 0))
    sp.add_argument("--shape", type=_ints, required=True)
    sp.add_argument("--weight", type=_ints, required=True, help="weight in the epsilon basis")
    sp.set_defaults(func=cmd_xpoly)
    return ap


def main(argv=None, stdout=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(args, "n", None) is not None and args.n < 3:
        ap.print_usage(sys.stderr)
        print("dncrystal: error: rank must be >= 3", file=sys.stderr)
        return 2
    out = Out(args.format, stdout or sys.stdout)
    try:
        return args.func(args, out)
    except (StateError, UsageError, ValueError, OSError) as e:
        print(f"dncrystal: error: {e}", file=sys.stderr)
        return 2

"""Command-line front end.

Machine output is one compact JSON object per line on stdout; errors are
JSON objects on stderr. Exit status is 0 on success, 1 when a check or
computation fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import braid3, charvar, linking, qdeform, qmbasis
from .modgroup import parse_matrix, reduce_to_cycle, word_to_matrix
from .words import CyclicWord, canonicalize, coprime, enumerate_classes

MAX_LEN_GUARD = 12


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class Config:
    max_len: int = 5
    tolerance: float = 1e-9
    seed: int = 0
    output_format: str = "json"
    threads: int = 1

    def __post_init__(self):
        if self.max_len > MAX_LEN_GUARD:
            raise InputError(f"max_len {self.max_len} exceeds the guard {MAX_LEN_GUARD}")
        if self.max_len < 1:
            raise InputError("max_len must be >= 1")
        if not self.tolerance > 0:
            raise InputError("tolerance must be positive")
        if self.output_format not in ("json", "csv"):
            raise InputError("format must be json or csv")
        if self.threads < 1:
            raise InputError("threads must be >= 1")


def _threads_default() -> int:
    raw = os.environ.get("MODKNOT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def emit(obj, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(obj, separators=(",", ":"), default=_jsonable) + "\n")


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, CyclicWord):
        return x.canonical
    raise TypeError(f"not serializable: {type(x).__name__}")


def _word(text: str) -> CyclicWord:
    try:
        return canonicalize(text)
    except ValueError as e:
        raise InputError(str(e)) from None


def _complex(text: str) -> complex:
    parts = text.split(",")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise InputError(f"bad complex number {text!r}") from None
    if len(vals) == 1:
        return complex(vals[0], 0.0)
    if len(vals) == 2:
        return complex(vals[0], vals[1])
    raise InputError(f"bad complex number {text!r}")


def fan_out(fn: Callable, items: Sequence, threads: int) -> list:
    """Apply ``fn`` to every item; results come back in input order."""
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def coprime_pairs(max_len: int) -> list[tuple[CyclicWord, CyclicWord]]:
    """Ordered pairs of distinct coprime primitive hyperbolic classes, in canonical order."""
    cl = enumerate_classes(max_len, "hyperbolic", primitive=True)
    return [(a, b) for a in cl for b in cl if a != b and coprime(a, b)]


# subcommands ----------------------------------------------------------------

def cmd_reduce(args, cfg: Config) -> int:
    try:
        m = parse_matrix(args.matrix)
    except ValueError as e:
        raise InputError(str(e)) from None
    c = reduce_to_cycle(m)
    emit(c.canonical if isinstance(c, CyclicWord) else c)
    return 0


def cmd_lk(args, cfg: Config) -> int:
    A, B = _word(args.A), _word(args.B)
    methods = {"shift": linking.lk_shift, "slp": linking.lk_slp, "oracle": linking.lk_oracle}
    if args.method == "all":
        res = {name: fn(A, B) for name, fn in methods.items()}
        emit(res)
        if len(set(res.values())) != 1:
            emit({"error": "lk methods disagree", "values": res}, sys.stderr)
            return 1
        return 0
    emit({args.method: methods[args.method](A, B)})
    return 0


def cmd_intersection(args, cfg: Config) -> int:
    emit({"intersection": linking.intersection_number(_word(args.A), _word(args.B))})
    return 0


def cmd_rad(args, cfg: Config) -> int:
    emit({"rad": _word(args.A).rad})
    return 0


def cmd_cosa(args, cfg: Config) -> int:
    emit({"cos": linking.cos_a(_word(args.A), _word(args.B))})
    return 0


def cmd_linkq(args, cfg: Config) -> int:
    A, B = _word(args.A), _word(args.B)
    if args.q is not None:
        q = _complex(args.q)
        emit({"q": q, "link": complex(charvar.link_q(A, B, q)), "cos": complex(charvar.cos_q(A, B, q))})
        return 0
    f = charvar.link_q_symbolic(A, B)
    if args.symbolic:
        emit({
            "crossings": f.crossing_count,
            "numerator": f.numerator.sparse(),
            "discA": f.discA.sparse(),
            "discB": f.discB.sparse(),
        })
        return 0
    if args.roots:
        found = charvar.roots(f, min(cfg.tolerance, 1e-10))
        if args.out:
            charvar.write_roots_csv(args.out, found)
        else:
            for r in found:
                emit({"re": r.value.real, "im": r.value.imag, "kind": r.kind, "modulus": r.modulus})
        return 0
    cx, cy, rad, px = _parse_grid(args.grid)
    if not args.out:
        raise InputError("--grid needs --out FILE.ppm")
    values = charvar.sample_grid(f, complex(cx, cy), rad, px)
    charvar.write_ppm(args.out, charvar.render_grid(values))
    if args.csv:
        import numpy as np

        xs = np.linspace(cx - rad, cx + rad, px)
        ys = np.linspace(cy + rad, cy - rad, px)
        qs = (xs[None, :] + 1j * ys[:, None]).ravel()
        charvar.write_samples_csv(args.csv, qs, values.ravel())
    emit({"raster": args.out, "pixels": px})
    return 0


def _parse_grid(text: str) -> tuple[float, float, float, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise InputError("--grid expects CX,CY,R,PX")
    try:
        cx, cy, r = (float(p) for p in parts[:3])
        px = int(parts[3])
    except ValueError:
        raise InputError(f"bad grid {text!r}") from None
    if px < 16 or r <= 0:
        raise InputError("grid needs PX >= 16 and R > 0")
    return cx, cy, r, px


def cmd_alexander(args, cfg: Config) -> int:
    A = _word(args.A)
    out = {"alexander": braid3.alexander(A).sparse()}
    ok = True
    if args.check:
        ok = braid3.fricke_alexander_check(A)
        out["fricke_side"] = braid3.fricke_side(A).sparse()
        out["agree"] = ok
    emit(out)
    return 0 if ok else 1


def cmd_fricke(args, cfg: Config) -> int:
    A = _word(args.A)
    emit({"fricke": qdeform.fricke_trace(A).sparse(), "trace": word_to_matrix(A).trace})
    return 0


def cmd_qm(args, cfg: Config) -> int:
    if args.defect:
        try:
            rep = qmbasis.defect(args.defect, args.samples, cfg.max_len, cfg.seed)
        except ValueError as e:
            raise InputError(str(e)) from None
        emit({"functional": rep.name, "samples": rep.samples, "max_defect": rep.max_defect})
        return 0
    m = args.decompose
    if not args.values:
        raise InputError("--decompose needs --values FILE")
    try:
        f = qmbasis.FunctionalVec.read_csv(args.values, m)
    except (OSError, ValueError) as e:
        raise InputError(str(e)) from None
    coeffs = qmbasis.decompose(f, args.basis)
    if cfg.output_format == "csv":
        for cls, val in coeffs.to_csv_rows():
            sys.stdout.write(f"{cls},{val}\n")
    else:
        for cls, val in coeffs.to_csv_rows():
            emit({"class": cls, "coeff": val})
    return 0


def _pair_row(pair):
    a, b = pair
    return {"A": a.canonical, "B": b.canonical, "lk": linking.lk(a, b), "I": linking.intersection_number(a, b)}


def cmd_corpus(args, cfg: Config) -> int:
    if args.emit == "pairs":
        for row in fan_out(_pair_row, coprime_pairs(cfg.max_len), cfg.threads):
            emit(row)
        return 0
    rows = [(a.canonical, len(a), a.rad, word_to_matrix(a).trace) for a in enumerate_classes(cfg.max_len, "hyperbolic")]
    if cfg.output_format == "csv":
        sys.stdout.write("class,len,rad,trace\n")
        for r in rows:
            sys.stdout.write(",".join(map(str, r)) + "\n")
    else:
        w = max(len(r[0]) for r in rows)
        sys.stdout.write(f"{'class':<{w}}  len  rad  trace\n")
        for c, n, rad, tr in rows:
            sys.stdout.write(f"{c:<{w}}  {n:>3}  {rad:>3}  {tr:>5}\n")
    return 0


def cmd_selfcheck(args, cfg: Config) -> int:
    from .selfcheck import run_suites

    ok = True
    for res in run_suites(cfg.max_len, cfg.tolerance, cfg.seed, cfg.threads):
        emit(res)
        ok = ok and res["ok"]
    return 0 if ok else 1


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-len", type=int, default=None)
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", dest="output_format", choices=("json", "csv"), default="json")
    common.add_argument("--threads", type=int, default=None)

    p = argparse.ArgumentParser(prog="modknot", description="Linking numbers and character-variety invariants of modular knots.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reduce", parents=[common], help="conjugacy class of a matrix")
    s.add_argument("--matrix", required=True, metavar="a,b,c,d")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("lk", parents=[common], help="linking number")
    s.add_argument("A")
    s.add_argument("B")
    s.add_argument("--method", choices=("shift", "slp", "oracle", "all"), default="slp")
    s.set_defaults(func=cmd_lk)

    s = sub.add_parser("intersection", parents=[common], help="geometric intersection number")
    s.add_argument("A")
    s.add_argument("B")
    s.set_defaults(func=cmd_intersection)

    s = sub.add_parser("rad", parents=[common], help="Rademacher number")
    s.add_argument("A")
    s.set_defaults(func=cmd_rad)

    s = sub.add_parser("cosa", parents=[common], help="Cos_A(B)")
    s.add_argument("A")
    s.add_argument("B")
    s.set_defaults(func=cmd_cosa)

    s = sub.add_parser("linkq", parents=[common], help="Link_q and Cos_q")
    s.add_argument("A")
    s.add_argument("B")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--q", metavar="RE[,IM]")
    mode.add_argument("--symbolic", action="store_true")
    mode.add_argument("--roots", action="store_true")
    mode.add_argument("--grid", metavar="CX,CY,R,PX")
    s.add_argument("--out", help="output file (PPM for --grid, CSV for --roots)")
    s.add_argument("--csv", help="sample dump for --grid")
    s.set_defaults(func=cmd_linkq)

    s = sub.add_parser("alexander", parents=[common], help="Alexander polynomial of the modular braid")
    s.add_argument("A")
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_alexander)

    s = sub.add_parser("fricke", parents=[common], help="Fricke polynomial Tr(A_q)")
    s.add_argument("A")
    s.set_defaults(func=cmd_fricke)

    s = sub.add_parser("qm", parents=[common], help="quasi-morphism defects and decompositions")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--defect", metavar="F", help="rad, mas:P or cos:A")
    mode.add_argument("--decompose", type=int, metavar="m")
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--basis", choices=("mas", "cos"), default="cos")
    s.add_argument("--values", metavar="FILE")
    s.set_defaults(func=cmd_qm)

    s = sub.add_parser("corpus", parents=[common], help="sweep over all classes up to a length")
    s.add_argument("--emit", choices=("pairs", "table"), default="pairs")
    s.set_defaults(func=cmd_corpus)

    s = sub.add_parser("selfcheck", parents=[common], help="run the invariant suites")
    s.set_defaults(func=cmd_selfcheck)
    return p


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as e:
        return int(e.code or 0)
    default_len = 12 if args.command == "qm" else 5
    try:
        cfg = Config(
            max_len=args.max_len if args.max_len is not None else default_len,
            tolerance=args.tolerance,
            seed=args.seed,
            output_format=args.output_format,
            threads=args.threads if args.threads is not None else _threads_default(),
        )
        return args.func(args, cfg)
    except ValueError as e:
        # bad words, non-coprime pairs and other precondition failures
        emit({"error": str(e), "kind": "input"}, sys.stderr)
        return 2
    except ArithmeticError as e:
        emit({"error": str(e), "kind": type(e).__name__}, sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

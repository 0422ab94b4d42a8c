"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a counterexample,
2 on usage errors and malformed input.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Iterable

from . import _kernels, oracle
from .invseq import (
    InversionSequenceError,
    avoiders,
    encode_word,
    parse_sequence,
    render_sequence,
    render_word,
)
from .perm import (
    MarkedPermutation,
    Permutation,
    PermutationError,
    parse_marked,
    parse_permutation,
    render_cycles,
    render_marked,
    render_one_line,
)
from .phi import (
    TaggedNonDerangement,
    ext_bijection,
    ext_inverse,
    phi,
    phi_cyclewise,
    phi_inverse,
    phi_trace,
)
from .recurrences import (
    derangement_split,
    derangement_split_inverse,
    parse_split_pair,
    theta,
    theta_inverse,
    varphi,
    varphi_alt,
    varphi_alt_inverse,
    varphi_inverse,
)

log = logging.getLogger("nonderangements")

BIJECTION_CHOICES = [
    "phi",
    "phi-cycle",
    "phi-inv",
    "ext",
    "ext-inv",
    "split",
    "split-inv",
    "varphi",
    "varphi-inv",
    "varphi-alt",
    "varphi-alt-inv",
    "theta",
    "theta-inv",
]

class UsageError(Exception):
    pass


# -- rendering helpers ----------------------------------------------------------


def _perm_fields(p: Permutation, prefix: str = "output") -> dict:
    return {f"{prefix}_one_line": render_one_line(p), f"{prefix}_cycles": render_cycles(p)}


class Writer:
    """Serializes records to one stream in the selected format."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self._csv = None

    def record(self, rec: dict, text: str | None = None) -> None:
        if self.fmt == "json":
            print(json.dumps(rec), file=self.stream)
        elif self.fmt == "csv":
            if self._csv is None:
                self._csv = csv.DictWriter(self.stream, fieldnames=list(rec), extrasaction="ignore")
                self._csv.writeheader()
            self._csv.writerow({k: v if not isinstance(v, (list, dict)) else json.dumps(v) for k, v in rec.items()})
        else:
            print(text if text is not None else " ".join(f"{k}={v}" for k, v in rec.items()), file=self.stream)

    def table(self, header: list[str], rows: Iterable[list]) -> None:
        rows = [[str(c) for c in r] for r in rows]
        if self.fmt != "text":
            for r in rows:
                self.record(dict(zip(header, r)))
            return
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
        line = " | ".join(h.ljust(w) for h, w in zip(header, widths))
        print(line.rstrip(), file=self.stream)
        print("-+-".join("-" * w for w in widths), file=self.stream)
        for r in rows:
            print(" | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip(), file=self.stream)


# -- argument parsing -----------------------------------------------------------


def _n_range(text: str) -> list[int]:
    try:
        if "-" in text or ".." in text:
            lo, hi = text.replace("..", "-").split("-")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    def options(top: bool):
        # options may come before or after the verb; only the top level sets defaults
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--format", choices=["text", "json", "csv"], default="text" if top else argparse.SUPPRESS)
        p.add_argument("-v", "--verbose", action="store_true", default=False if top else argparse.SUPPRESS)
        return p

    common = options(top=False)
    parser = argparse.ArgumentParser(
        prog="nonderangements",
        description="Bijections between 000-avoiding inversion sequences and non-derangements.",
        parents=[options(top=True)],
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", parents=[common], help="count a sequence term")
    p.add_argument("--seq", choices=sorted(oracle.METHODS), required=True)
    p.add_argument("--n", type=_n_range, required=True, help="N or LO-HI")
    p.add_argument("--method", default="enumerate")

    p = sub.add_parser("enumerate", parents=[common], help="list a combinatorial set")
    p.add_argument("--set", choices=["inv000", "nonderangements", "derangements", "marked"], required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("map", parents=[common], help="apply one bijection")
    p.add_argument("--bijection", choices=BIJECTION_CHOICES, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--n", type=int, help="domain size, needed when the input alone is ambiguous")

    p = sub.add_parser("trace", parents=[common], help="step-by-step construction of phi")
    p.add_argument("--input", required=True)

    p = sub.add_parser("tables", parents=[common], help="reproduce a worked table")
    p.add_argument("--which", type=int, choices=[1, 2, 3, 4], required=True)

    p = sub.add_parser("verify", parents=[common], help="exhaustive verification")
    p.add_argument("--target", required=True, help="bijection, identity, 'oeis', 'bijections', 'identities' or 'all'")
    p.add_argument("--max", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=10, help="counterexamples kept per report")
    p.add_argument("--refresh-oeis", action="store_true", help="re-download the OEIS fixtures first")
    p.add_argument("--allow-network", action="store_true")
    return parser


# -- verbs ----------------------------------------------------------------------


def cmd_count(args, out: Writer) -> int:
    if args.method not in oracle.METHODS[args.seq]:
        raise UsageError(f"method for {args.seq} must be one of {', '.join(oracle.METHODS[args.seq])}")
    for n in args.n:
        value = oracle.count(args.seq, n, args.method)
        out.record({"seq": args.seq, "n": n, "method": args.method, "value": value}, str(value))
    return 0


def cmd_enumerate(args, out: Writer) -> int:
    n = args.n
    if n < 0:
        raise UsageError("--n must be non-negative")
    if args.set == "inv000":
        for e in avoiders(n):
            out.record({"set": args.set, "n": n, "item": render_sequence(e)}, render_sequence(e))
        return 0
    if args.set == "marked":
        items = [MarkedPermutation(Permutation(p), m) for p, m in oracle.marked_permutations(n)]
        for mp in items:
            text = render_marked(mp)
            out.record({"set": args.set, "n": n, "item": text, "one_line": render_one_line(mp.perm), "mark": mp.mark}, text)
        return 0
    perms = oracle.derangements(n) if args.set == "derangements" else oracle.non_derangements(n)
    for images in perms:
        p = Permutation(images)
        out.record(
            {"set": args.set, "n": n, "item": render_one_line(p), "cycles": render_cycles(p)},
            f"{render_one_line(p)}  {render_cycles(p)}",
        )
    return 0


def _parse_ext_input(text: str):
    body = text.strip().strip("()")
    a, _, e = body.partition(",")
    if not e:
        raise UsageError(f"expected '(a, e)', got {text!r}")
    return int(a), parse_sequence(e.strip())


def apply_bijection(name: str, text: str, n: int | None = None) -> dict:
    """Parse ``text``, apply bijection ``name`` and return a machine-readable record."""
    rec: dict = {"bijection": name, "input": text}
    if name in ("phi", "phi-cycle"):
        e = parse_sequence(text)
        t = (phi if name == "phi" else phi_cyclewise)(e)
        rec.update(
            input=render_sequence(e),
            word=render_word(encode_word(e)),
            **_perm_fields(t.perm),
            component=t.label(),
        )
        return rec
    if name == "phi-inv":
        p = parse_permutation(text)
        t = TaggedNonDerangement(n if n is not None else p.n, p)
        e = phi_inverse(t)
        rec.update(component=t.label(), word=render_word(encode_word(e)), output=render_sequence(e))
        return rec
    if name == "ext":
        a, e = _parse_ext_input(text)
        p = ext_bijection(a, e)
        rec.update(output=render_one_line(p), **_perm_fields(p))
        return rec
    if name == "ext-inv":
        a, e = ext_inverse(parse_permutation(text))
        rec.update(output=f"({a}, {render_sequence(e)})", label=a, sequence=render_sequence(e))
        return rec
    if name in ("split", "varphi", "varphi-alt"):
        fn = {"split": derangement_split, "varphi": varphi, "varphi-alt": varphi_alt}[name]
        s = fn(parse_permutation(text))
        rec.update(output=str(s), label=s.label, **_perm_fields(s.perm, "perm"), summand=s.perm.n)
        return rec
    if name in ("split-inv", "varphi-inv", "varphi-alt-inv"):
        if n is None:
            raise UsageError(f"{name} needs --n (the size of the resulting permutation)")
        fn = {"split-inv": derangement_split_inverse, "varphi-inv": varphi_inverse, "varphi-alt-inv": varphi_alt_inverse}[name]
        p = fn(parse_split_pair(text, n))
        rec.update(output=render_cycles(p), **_perm_fields(p))
        return rec
    if name == "theta":
        m = theta(parse_permutation(text))
        rec.update(output=render_marked(m), output_one_line=render_one_line(m.perm), mark=m.mark)
        return rec
    if name == "theta-inv":
        p = theta_inverse(parse_marked(text))
        rec.update(output=render_cycles(p), **_perm_fields(p))
        return rec
    raise UsageError(f"unknown bijection {name!r}")


def cmd_map(args, out: Writer) -> int:
    rec = apply_bijection(args.bijection, args.input, args.n)
    if args.bijection in ("phi", "phi-cycle"):
        text = f"{rec['output_one_line']}  {rec['output_cycles']}  in {rec['component']}  (word {rec['word']})"
    else:
        text = rec.get("output", rec.get("output_cycles"))
    out.record(rec, text)
    return 0


def _trace_rows(e) -> list[list]:
    return [[r.k, "" if r.letter is None else r.letter, r.one_line, r.cycles] for r in phi_trace(e)]


TRACE_HEADER = ["k", "w_k", "one_line", "cycles"]


def cmd_trace(args, out: Writer) -> int:
    out.table(TRACE_HEADER, _trace_rows(parse_sequence(args.input)))
    return 0


def table_rows(which: int) -> tuple[list[str], list[list[str]]]:
    if which in (1, 2):
        return TRACE_HEADER, _trace_rows(parse_sequence("001322" if which == 1 else "0102230"))
    domain = sorted(Permutation(p) for p in oracle.non_derangements(4))
    if which == 3:
        return ["one_line", "pi", "varphi"], [[render_one_line(p), render_cycles(p), str(varphi(p))] for p in domain]
    return ["one_line", "pi", "theta"], [[render_one_line(p), render_cycles(p), render_marked(theta(p))] for p in domain]


def cmd_tables(args, out: Writer) -> int:
    header, rows = table_rows(args.which)
    out.table(header, rows)
    return 0


def _targets(target: str) -> list[tuple[str, str]]:
    bij = [("bijection", b) for b in oracle.BIJECTIONS]
    ids = [("identity", i) for i in oracle.IDENTITIES]
    fixtures = [("oeis", f) for f in oracle.FIXTURES]
    groups = {"bijections": bij, "identities": ids, "oeis": fixtures, "all": bij + ids + fixtures}
    if target in groups:
        return groups[target]
    if target in oracle.BIJECTIONS:
        return [("bijection", target)]
    if target in oracle.IDENTITIES:
        return [("identity", target)]
    if target in oracle.FIXTURES:
        return [("oeis", target)]
    raise UsageError(f"unknown verification target {target!r}")


def cmd_verify(args, out: Writer) -> int:
    if args.max < 1 or args.jobs < 1:
        raise UsageError("--max and --jobs must be positive")
    if args.refresh_oeis:
        data_dir = Path(oracle.__file__).parent / "data"
        for name in oracle.FIXTURES:
            oracle.refresh_fixture(name, data_dir / f"{name}.txt", allow_network=args.allow_network)
    ok = True
    for kind, name in _targets(args.target):
        if kind == "bijection":
            # ext at n lands in permutations of [n+1]; keep every permutation within --max
            n_max = args.max - 1 if name == "ext" else args.max
            rep = oracle.verify_bijection(name, n_max, cap=args.cap, jobs=args.jobs)
        elif kind == "identity":
            rep = oracle.verify_identity(name, args.max, cap=args.cap)
        else:
            rep = oracle.verify_oeis(name)
        ok &= rep.passed
        lo, hi = rep.n_range
        text = f"{rep.status.upper():4} {kind:9} {name:10} n={lo}..{hi}  {rep.elapsed:6.2f}s"
        for ce in rep.counterexamples:
            text += f"\n     counterexample: {ce}"
        out.record(rep.to_record() | {"kind": kind, "backend": _kernels.BACKEND}, text)
    return 0 if ok else 1


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "trace": cmd_trace,
    "tables": cmd_tables,
    "verify": cmd_verify,
}


def run(argv: list[str] | None = None, stream=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    out = Writer(args.format, stream)
    try:
        return COMMANDS[args.verb](args, out)
    except (UsageError, PermutationError, InversionSequenceError, ValueError, OSError) as exc:
        print(f"{parser.prog} {args.verb}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

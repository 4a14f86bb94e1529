"""
Command line interface: ``bandperm <subcommand> ...``.

Exit codes: 0 success, 1 bad input or usage, 2 a factorization that does not
multiply back to its permutation.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence, TextIO

from .core import CYCLIC, FINITE, Bandwidth1Factor, Permutation, Word, bandwidth, mset
from .cyclic import cyclic_bandwidth, cyclic_factor
from .gen import GenConfig, random_banded
from .hook import Factorization, hook_factor, verify_factorization
from .oracle import min_factors, reduce_word
from .render import RenderOptions, render_hook, render_wiring

__all__ = [
    "InputError", "FactorizationDocument", "parse_permutation", "parse_matrix",
    "format_text", "build_document", "run", "main",
]

CONVENTION = "apply-left-first"


class InputError(ValueError):
    """Malformed user input; reported on stderr with exit code 1."""


class VerificationError(RuntimeError):
    pass


def parse_permutation(text: str) -> Permutation:
    """
    >>> parse_permutation("2 5 1 4 3").map
    (2, 5, 1, 4, 3)
    >>> parse_permutation("2 2 1")
    Traceback (most recent call last):
    ...
    bandperm.cli.InputError: duplicate value 2
    """
    tokens = text.split()
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise InputError(f"invalid token {tok!r}: expected an integer") from None
    n = len(values)
    seen = set()
    for tok, v in zip(tokens, values):
        if not 1 <= v <= n:
            raise InputError(f"value {tok} out of range 1..{n}")
        if v in seen:
            raise InputError(f"duplicate value {v}")
        seen.add(v)
    return Permutation._trusted(values)


def parse_matrix(text: str) -> Permutation:
    """
    Read a dense 0/1 permutation matrix, one row per line.

    Entries are either whitespace separated or written as one run of digits.

    >>> parse_matrix("010\\n001\\n100").map
    (2, 3, 1)
    """
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        toks = line.split() if any(ch.isspace() for ch in line) else list(line)
        rows.append(toks)
    n = len(rows)
    ones_in_col: list[list[int]] = [[] for _ in range(n)]
    perm = []
    for r, toks in enumerate(rows, 1):
        if len(toks) != n:
            raise InputError(f"row {r} has {len(toks)} entries, expected {n}")
        ones = []
        for c, tok in enumerate(toks, 1):
            if tok == "1":
                ones.append(c)
                ones_in_col[c - 1].append(r)
            elif tok != "0":
                raise InputError(f"row {r} column {c}: invalid entry {tok!r}")
        if len(ones) != 1:
            raise InputError(f"row {r} has {len(ones)} ones (columns {ones}), expected exactly one")
        perm.append(ones[0])
    for c, rs in enumerate(ones_in_col, 1):
        if len(rs) != 1:
            raise InputError(f"column {c} has {len(rs)} ones (rows {rs}), expected exactly one")
    return Permutation(tuple(perm))


@dataclass
class FactorizationDocument:
    """JSON form of a factorization together with the permutation it claims to produce."""

    n: int
    flavor: str
    permutation: list[int]
    w: int
    mset: list[int]
    layers: list[dict]
    shift_exponent: int = 0
    convention: str = CONVENTION
    generator: dict | None = None

    FIELDS = ("n", "flavor", "permutation", "w", "mset", "layers", "shift_exponent", "convention", "generator")

    def to_json(self) -> str:
        data = {name: getattr(self, name) for name in self.FIELDS}
        return json.dumps(data, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "FactorizationDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"invalid JSON document: {e}") from None
        if not isinstance(data, dict):
            raise InputError("factorization document must be a JSON object")
        missing = [k for k in cls.FIELDS if k not in data and k not in ("generator", "shift_exponent", "convention")]
        if missing:
            raise InputError(f"document is missing fields: {', '.join(missing)}")
        unknown = sorted(set(data) - set(cls.FIELDS))
        if unknown:
            raise InputError(f"document has unknown fields: {', '.join(unknown)}")
        doc = cls(**data)
        if doc.convention != CONVENTION:
            raise InputError(f"unsupported convention {doc.convention!r}")
        if doc.flavor not in (FINITE, CYCLIC):
            raise InputError(f"unknown flavor {doc.flavor!r}")
        return doc

    def factorization(self) -> Factorization:
        try:
            layers = tuple(
                (int(layer["diagonal"]), Bandwidth1Factor(self.n, self.flavor, tuple(layer["indices"])))
                for layer in self.layers
            )
            return Factorization(self.n, self.flavor, layers, int(self.shift_exponent))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"invalid layers: {e}") from None

    def perm(self) -> Permutation:
        try:
            return Permutation(tuple(self.permutation))
        except ValueError as e:
            raise InputError(f"invalid permutation in document: {e}") from None


def build_document(p: Permutation, f: Factorization, generator: dict | None = None) -> FactorizationDocument:
    if f.flavor == FINITE:
        w, diagonals = bandwidth(p), mset(p)
    else:
        w, diagonals = cyclic_bandwidth(p), [k for k, layer in f.layers if len(layer)]
    return FactorizationDocument(
        n=f.n, flavor=f.flavor, permutation=list(p.map), w=w, mset=diagonals,
        layers=[{"diagonal": k, "indices": list(layer.indices)} for k, layer in f.layers],
        shift_exponent=f.shift_exponent, generator=generator,
    )


def format_text(f: Factorization) -> str:
    """
    >>> print(format_text(hook_factor(Permutation((2, 3, 1)))), end="")
    k=-1: s2
    k=0: s1
    """
    lines = []
    for k, layer in f.layers:
        lines.append(" ".join([f"k={k}:"] + [f"s{i}" for i in layer.indices]))
    if f.flavor == CYCLIC:
        lines.append(f"shift: {f.shift_exponent}")
    return "".join(line + "\n" for line in lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bandperm", description="Factor banded permutations into bandwidth-1 layers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    perm_help = "permutation in one-line form, e.g. \"2 5 1 4 3\" ('-' reads stdin)"

    f = sub.add_parser("factor", help="factor a permutation into bandwidth-1 layers")
    f.add_argument("perm", help=perm_help)
    f.add_argument("--cyclic", action="store_true", help="cyclic layers plus a residual shift")
    f.add_argument("--pad", action="store_true", help="emit empty layers so there are exactly 2w-1")
    f.add_argument("--format", choices=("text", "json"), default="text")
    f.add_argument("--matrix", action="store_true", help="input is a dense 0/1 matrix, one row per line")

    m = sub.add_parser("mset", help="print the set of crossing diagonals")
    m.add_argument("perm", help=perm_help)
    m.add_argument("--matrix", action="store_true")

    b = sub.add_parser("bandwidth", help="print the (cyclic) bandwidth")
    b.add_argument("perm", help=perm_help)
    b.add_argument("--cyclic", action="store_true")
    b.add_argument("--matrix", action="store_true")

    mn = sub.add_parser("min", help="minimal number of bandwidth-1 factors")
    mn.add_argument("perm", help=perm_help)
    mn.add_argument("--oracle", action="store_true", help="exact breadth-first search instead of the hook count")
    mn.add_argument("--cyclic", action="store_true")
    mn.add_argument("--max-n", type=int, default=None, help="override the search size cap")
    mn.add_argument("--matrix", action="store_true")

    r = sub.add_parser("reduce-word", help="reduce a word in s_1..s_{n-1}")
    r.add_argument("word", help="letters, e.g. \"2 1 2 1\" ('-' reads stdin)")
    r.add_argument("-n", type=int, default=None, help="size (default: largest letter + 1)")

    g = sub.add_parser("gen", help="generate a random banded permutation")
    g.add_argument("-n", type=int, required=True)
    g.add_argument("-w", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--cyclic", action="store_true")
    g.add_argument("--format", choices=("text", "json"), default="text")

    rd = sub.add_parser("render", help="draw a hook diagram or wiring diagram")
    rd.add_argument("input", help="permutation (--hook) or word (--wiring)")
    kind = rd.add_mutually_exclusive_group(required=True)
    kind.add_argument("--hook", action="store_true")
    kind.add_argument("--wiring", action="store_true")
    out = rd.add_mutually_exclusive_group(required=True)
    out.add_argument("--svg", metavar="PATH")
    out.add_argument("--ascii", action="store_true")
    rd.add_argument("--indices", action="store_true")
    rd.add_argument("--diagonals", action="store_true")
    rd.add_argument("--scale", type=float, default=30.0)
    rd.add_argument("-n", type=int, default=None, help="wiring size (default: largest letter + 1)")

    v = sub.add_parser("verify", help="check a JSON factorization document")
    v.add_argument("document", help="path to the JSON document ('-' reads stdin)")
    v.add_argument("perm", nargs="?", default=None, help="permutation to check against (default: the document's)")
    return parser


def _read_arg(arg: str, stdin: TextIO) -> str:
    return stdin.read() if arg == "-" else arg


def _read_perm(arg: str, stdin: TextIO, matrix: bool = False) -> tuple[Permutation, dict | None]:
    text = _read_arg(arg, stdin)
    if matrix:
        return parse_matrix(text), None
    if text.lstrip().startswith("{"):
        # output of `gen --format json`
        try:
            data = json.loads(text)
            return parse_permutation(" ".join(map(str, data["permutation"]))), data.get("generator")
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise InputError(f"invalid permutation document: {e}") from None
    return parse_permutation(text), None


def _parse_letters(text: str) -> list[int]:
    out = []
    for tok in text.replace(",", " ").split():
        t = tok[1:] if tok.startswith("s") else tok
        try:
            out.append(int(t))
        except ValueError:
            raise InputError(f"invalid letter {tok!r}") from None
    return out


def _cmd_factor(args, stdin, stdout):
    p, gen_meta = _read_perm(args.perm, stdin, args.matrix)
    f = cyclic_factor(p, pad=args.pad) if args.cyclic else hook_factor(p, pad=args.pad)
    if not verify_factorization(p, f):
        raise VerificationError("factorization does not reproduce the input permutation")
    if args.format == "json":
        stdout.write(build_document(p, f, gen_meta).to_json())
    else:
        stdout.write(format_text(f))


def _cmd_mset(args, stdin, stdout):
    p, _ = _read_perm(args.perm, stdin, args.matrix)
    stdout.write(" ".join(map(str, mset(p))) + "\n")


def _cmd_bandwidth(args, stdin, stdout):
    p, _ = _read_perm(args.perm, stdin, args.matrix)
    stdout.write(f"{cyclic_bandwidth(p) if args.cyclic else bandwidth(p)}\n")


def _cmd_min(args, stdin, stdout):
    p, _ = _read_perm(args.perm, stdin, args.matrix)
    flavor = CYCLIC if args.cyclic else FINITE
    if args.oracle:
        try:
            result = min_factors(p, flavor, max_n=args.max_n)
        except ValueError as e:
            raise InputError(str(e)) from None
        stdout.write(f"{result.min_length}\n")
    else:
        f = cyclic_factor(p) if args.cyclic else hook_factor(p)
        stdout.write(f"{len(f.layers)}\n")


def _cmd_reduce_word(args, stdin, stdout):
    letters = _parse_letters(_read_arg(args.word, stdin))
    n = args.n if args.n is not None else max(letters, default=0) + 1
    try:
        wd = Word(n, tuple(letters))
    except ValueError as e:
        raise InputError(str(e)) from None
    stdout.write(" ".join(map(str, reduce_word(wd).letters)) + "\n")


def _cmd_gen(args, stdin, stdout):
    try:
        cfg = GenConfig(args.n, args.w, args.seed, CYCLIC if args.cyclic else FINITE)
    except ValueError as e:
        raise InputError(str(e)) from None
    p = random_banded(cfg)
    if args.format == "json":
        stdout.write(json.dumps({"permutation": list(p.map), "generator": cfg.metadata()}, indent=2) + "\n")
    else:
        stdout.write(f"{p}\n")


def _cmd_render(args, stdin, stdout):
    try:
        opts = RenderOptions("ascii" if args.ascii else "svg", args.indices, args.diagonals, args.scale)
    except ValueError as e:
        raise InputError(str(e)) from None
    if args.hook:
        p, _ = _read_perm(args.input, stdin)
        doc = render_hook(p, opts)
    else:
        letters = _parse_letters(_read_arg(args.input, stdin))
        n = args.n if args.n is not None else max(letters, default=0) + 1
        try:
            wd = Word(n, tuple(letters))
        except ValueError as e:
            raise InputError(str(e)) from None
        doc = render_wiring(wd, opts)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        stdout.write(doc)


def _cmd_verify(args, stdin, stdout):
    if args.document == "-":
        text = stdin.read()
    else:
        try:
            with open(args.document, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {args.document}: {e.strerror}") from None
    doc = FactorizationDocument.from_json(text)
    p = doc.perm() if args.perm is None else _read_perm(args.perm, stdin)[0]
    f = doc.factorization()
    if not verify_factorization(p, f):
        raise VerificationError("factorization does not multiply out to the permutation")
    stdout.write("ok\n")


_COMMANDS = {
    "factor": _cmd_factor, "mset": _cmd_mset, "bandwidth": _cmd_bandwidth, "min": _cmd_min,
    "reduce-word": _cmd_reduce_word, "gen": _cmd_gen, "render": _cmd_render, "verify": _cmd_verify,
}


def run(argv: Sequence[str], stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _make_parser()
    old_err = sys.stderr
    sys.stderr = stderr
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return int(e.code or 0)
    finally:
        sys.stderr = old_err
    try:
        _COMMANDS[args.command](args, stdin, stdout)
    except InputError as e:
        stderr.write(f"bandperm: error: {e}\n")
        return 1
    except VerificationError as e:
        stderr.write(f"bandperm: verification failed: {e}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))

"""Instance file format, result rendering, and the seeded instance generator.

Instance files are line-oriented, whitespace-tokenized, with `#` comments:

    omuco 1
    n 6 alpha -1 beta 0 gamma 1 w 3
    tilde K 3 3 3 1 2 3 1
    hat none
    f 1 2 3 4 5 6

Line 1 is the magic plus format version.  Line 2 gives the item count, the
three senses, and the optional cardinality.  Lines 3 and 4 give the ordinal
objectives (`K` then one category index per item) or `none`; line 5 the real
coefficients (decimals, parsed exactly) or `none`.  Parsing is strict and
diagnostics carry the offending line number.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .core import Instance, OrdinalObjective, validate
from .dominance import ParetoResult

FORMAT_MAGIC = "omuco"
FORMAT_VERSION = "1"


class ParseError(ValueError):
    """Malformed instance file; `line` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _logical_lines(text: str) -> list[tuple[int, list[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append((number, tokens))
    return lines


def _int_token(line: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"{what}: expected an integer, got {token!r}") from None


def parse_instance(text: str) -> Instance:
    """Parse an instance file, raising ParseError with a line number."""
    lines = _logical_lines(text)
    if len(lines) != 5:
        last = lines[-1][0] if lines else 1
        raise ParseError(last, f"expected 5 content lines, found {len(lines)}")

    number, tokens = lines[0]
    if tokens != [FORMAT_MAGIC, FORMAT_VERSION]:
        raise ParseError(number, f"expected header '{FORMAT_MAGIC} {FORMAT_VERSION}'")

    number, tokens = lines[1]
    if len(tokens) not in (8, 10) or tokens[0] != "n" or tokens[2] != "alpha" \
            or tokens[4] != "beta" or tokens[6] != "gamma":
        raise ParseError(number, "expected 'n <int> alpha <s> beta <s> gamma <s> [w <int>]'")
    n = _int_token(number, tokens[1], "n")
    senses = {}
    for key, tok in (("alpha", tokens[3]), ("beta", tokens[5]), ("gamma", tokens[7])):
        value = _int_token(number, tok, key)
        if value not in (-1, 0, 1):
            raise ParseError(number, f"{key} must be -1, 0 or 1, got {value}")
        senses[key] = value
    cardinality = None
    if len(tokens) == 10:
        if tokens[8] != "w":
            raise ParseError(number, f"expected 'w', got {tokens[8]!r}")
        cardinality = _int_token(number, tokens[9], "w")
        if not 0 <= cardinality <= n:
            raise ParseError(number, f"w {cardinality} out of range 0..{n}")

    tilde = _parse_ordinal(lines[2], "tilde", n, senses["alpha"])
    hat = _parse_ordinal(lines[3], "hat", n, senses["beta"])

    number, tokens = lines[4]
    if tokens[0] != "f":
        raise ParseError(number, f"expected 'f', got {tokens[0]!r}")
    f: tuple[Fraction, ...] | None
    if tokens[1:] == ["none"]:
        f = None
        if senses["gamma"] != 0:
            raise ParseError(number, "gamma is nonzero but f is 'none'")
    else:
        if senses["gamma"] == 0:
            raise ParseError(number, "gamma is zero but f coefficients are given")
        if len(tokens) - 1 != n:
            raise ParseError(number, f"expected {n} f coefficients, found {len(tokens) - 1}")
        values = []
        for tok in tokens[1:]:
            try:
                value = Fraction(tok)
            except (ValueError, ZeroDivisionError):
                raise ParseError(number, f"bad f coefficient {tok!r}") from None
            if value < 0:
                raise ParseError(number, f"negative f coefficient {tok}")
            values.append(value)
        f = tuple(values)

    inst = Instance(
        n=n,
        alpha=senses["alpha"],
        beta=senses["beta"],
        gamma=senses["gamma"],
        tilde=tilde,
        hat=hat,
        f=f,
        cardinality=cardinality,
    )
    report = validate(inst)
    if not report.valid:
        raise ParseError(lines[1][0], "; ".join(report.violations))
    return inst


def _parse_ordinal(
    line: tuple[int, list[str]], name: str, n: int, sense: int
) -> OrdinalObjective | None:
    number, tokens = line
    if tokens[0] != name:
        raise ParseError(number, f"expected '{name}', got {tokens[0]!r}")
    if tokens[1:] == ["none"]:
        if sense != 0:
            raise ParseError(number, f"{name} sense is nonzero but objective is 'none'")
        return None
    if sense == 0:
        raise ParseError(number, f"{name} sense is zero but categories are given")
    if len(tokens) < 3 or tokens[1] != "K":
        raise ParseError(number, f"expected '{name} K <int> <categories...>' or '{name} none'")
    k = _int_token(number, tokens[2], "K")
    if k < 1:
        raise ParseError(number, f"K must be positive, got {k}")
    if len(tokens) - 3 != n:
        raise ParseError(number, f"expected {n} category indices, found {len(tokens) - 3}")
    assignment = []
    for tok in tokens[3:]:
        cat = _int_token(number, tok, "category")
        if not 1 <= cat <= k:
            raise ParseError(number, f"category {cat} out of range 1..{k}")
        assignment.append(cat)
    return OrdinalObjective(num_categories=k, assignment=tuple(assignment))


def serialize_instance(inst: Instance) -> str:
    """Canonical file text for an instance (round-trip stable)."""
    header = f"n {inst.n} alpha {inst.alpha} beta {inst.beta} gamma {inst.gamma}"
    if inst.cardinality is not None:
        header += f" w {inst.cardinality}"
    lines = [f"{FORMAT_MAGIC} {FORMAT_VERSION}", header]
    for name, obj in (("tilde", inst.tilde), ("hat", inst.hat)):
        if obj is None:
            lines.append(f"{name} none")
        else:
            cats = " ".join(str(c) for c in obj.assignment)
            lines.append(f"{name} K {obj.num_categories} {cats}".rstrip())
    if inst.f is None:
        lines.append("f none")
    else:
        lines.append(("f " + " ".join(str(v) for v in inst.f)).rstrip())
    return "\n".join(lines) + "\n"


def format_value(value) -> str:
    """Exact rendering: integers plainly, other rationals in lowest terms."""
    frac = Fraction(value)
    return str(frac.numerator) if frac.denominator == 1 else str(frac)


def emit_result(result: ParetoResult, fmt: str = "table", inst: Instance | None = None) -> str:
    """Render a result as `table` (human-readable) or `csv` (canonical).

    CSV rows are the canonically sorted nondominated outcomes followed by
    the representative's bitstring; the stats footer deliberately omits
    timing so equal results are byte-identical files.
    """
    names = _column_names(result, inst)
    if fmt == "csv":
        lines = [",".join(names + ["solution"])]
        for z, x in zip(result.nondominated, result.representatives):
            lines.append(",".join([format_value(v) for v in z] + ["".join(map(str, x))]))
        if not result.nondominated:
            lines.append("# no nondominated outcomes")
        stats = result.stats
        lines.append(f"# subproblems={stats.subproblems} feasible={stats.feasible} "
                     f"candidates={stats.candidates} nondominated={len(result.nondominated)}")
        return "\n".join(lines) + "\n"
    if fmt == "table":
        rows = [["solution"] + names]
        for z, x in zip(result.nondominated, result.representatives):
            rows.append(["".join(map(str, x))] + [format_value(v) for v in z])
        widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
        lines = ["  ".join(cell.rjust(widths[c]) for c, cell in enumerate(row)) for row in rows]
        if not result.nondominated:
            lines.append("(no nondominated outcomes)")
        stats = result.stats
        lines.append(f"{len(result.nondominated)} nondominated outcome(s); "
                     f"{stats.subproblems} subproblem(s), {stats.feasible} feasible, "
                     f"{stats.candidates} candidate(s), {stats.elapsed:.3f}s [{stats.algorithm}]")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _column_names(result: ParetoResult, inst: Instance | None) -> list[str]:
    if inst is not None:
        names = []
        if inst.alpha != 0 and inst.tilde is not None:
            names += [f"tilde{j + 1}" for j in range(inst.tilde.num_categories)]
        if inst.beta != 0 and inst.hat is not None:
            names += [f"hat{j + 1}" for j in range(inst.hat.num_categories)]
        if inst.gamma != 0:
            names.append("f")
        return names
    width = len(result.nondominated[0]) if result.nondominated else 0
    return [f"z{j + 1}" for j in range(width)]


@dataclass(frozen=True)
class GeneratorSpec:
    """Seeded random-instance recipe; equal specs yield identical bytes.

    Drawing uses `random.Random(seed)` (the documented Mersenne Twister,
    stable across platforms): first the tilde categories (n draws, uniform
    on 1..K), then the hat categories, then the f coefficients (uniform
    integers on 0..fmax); absent objectives consume no draws.
    """

    n: int
    ktilde: int
    khat: int
    alpha: int
    beta: int
    gamma: int
    seed: int
    w: int | None = None
    fmax: int = 10


def generate_instance(spec: GeneratorSpec) -> Instance:
    rng = random.Random(spec.seed)
    tilde = hat = None
    if spec.alpha != 0:
        tilde = OrdinalObjective(
            num_categories=spec.ktilde,
            assignment=tuple(rng.randint(1, spec.ktilde) for _ in range(spec.n)),
        )
    if spec.beta != 0:
        hat = OrdinalObjective(
            num_categories=spec.khat,
            assignment=tuple(rng.randint(1, spec.khat) for _ in range(spec.n)),
        )
    f = None
    if spec.gamma != 0:
        f = tuple(Fraction(rng.randint(0, spec.fmax)) for _ in range(spec.n))
    return Instance(
        n=spec.n,
        alpha=spec.alpha,
        beta=spec.beta,
        gamma=spec.gamma,
        tilde=tilde,
        hat=hat,
        f=f,
        cardinality=spec.w,
    )


def generate(spec: GeneratorSpec) -> str:
    """Instance file text for the spec (deterministic in the seed)."""
    return serialize_instance(generate_instance(spec))

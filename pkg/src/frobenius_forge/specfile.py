"""Plain-text ring description files.

Format: ``[section]`` headers followed by ``key = value`` lines; ``#``
starts a comment.  Integer arrays are whitespace separated.

    [grading]
    free_rank = 1
    torsion_orders =            # e.g. ``2 3`` for Z/2 + Z/3

    [weights]
    prime = 2
    x = 1 | ...                 # one line per variable: free part | torsion part
    positivity = 1 1 1 1        # optional positive degree per variable

    [group]
    prime = 5
    modulus = 6                 # eigenvalues are powers of a primitive 6th root z
    class_sizes = 1 3 2         # first class is the identity
    class.1 = 0 0               # eigenvalue exponents of a class representative
    char.triv = 1 ; 1 ; 1       # one value per class, ``;`` separated, in z
    char.std = 2 ; 0 ; -1

    [extension]
    variables = x
    characteristic = 0
    basis_size = 2              # r1 = 1
    mul.2.2 = x ; 0             # r2 * r2 = x r1 + 0 r2

    [operator]
    nvars = 2
    characteristic = 2
    window = 12
    term = 1 | 0 0 | 1 0        # coeff | multiply by x^a | Hasse derivative D^(b)
    projection = 2              # optional: adds the x^m -> [q | m] x^m projection

    [witness]
    c = 2 0                     # invariant monomial exponent
"""

import hashlib
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy as sp

from .cyclotomic import parse_cyclotomic
from .diffops import TruncatedOperator, frobenius_projection_op, hasse_op, mult_op, op_compose, op_sum
from .discriminant import RingExtensionPresentation
from .errors import InputError
from .groupchar import CharacterTable, ConjugacyClassData, FiniteGroupAction
from .lattice import GradingGroup, WeightSystem

__all__ = ["RingSpec", "parse_spec", "parse_spec_text"]

SECTIONS = ("grading", "weights", "group", "extension", "operator", "witness")
_SECTION = re.compile(r"^\[([A-Za-z_]+)\]$")


@dataclass
class Entry:
    key: str
    value: str
    line: int


@dataclass
class RingSpec:
    kind: str  # "diagonal", "group", "extension" or "operator"
    digest: str
    source: str
    weights: Optional[WeightSystem] = None
    action: Optional[FiniteGroupAction] = None
    extension: Optional[RingExtensionPresentation] = None
    operator: Optional[TruncatedOperator] = None
    witness_c: Optional[Tuple[int, ...]] = None
    sections: Dict[str, List[Entry]] = field(default_factory=dict, repr=False)


class _Reader:
    def __init__(self, source: str, sections: Dict[str, List[Entry]], header_lines: Dict[str, int]):
        self.source = source
        self.sections = sections
        self.header_lines = header_lines

    def fail(self, line: int, msg: str):
        raise InputError(f"{self.source}:{line}: {msg}")

    def get(self, sec: str, key: str, required: bool = True) -> Optional[Entry]:
        hits = [e for e in self.sections.get(sec, []) if e.key == key]
        if not hits:
            if required:
                self.fail(self.header_lines.get(sec, 0), f"[{sec}] is missing '{key}'")
            return None
        return hits[0]

    def ints(self, entry: Entry, text: Optional[str] = None) -> List[int]:
        text = entry.value if text is None else text
        try:
            return [int(t) for t in text.split()]
        except ValueError:
            self.fail(entry.line, f"'{entry.key}' expects integers, got '{text.strip()}'")

    def int1(self, sec: str, key: str, default=None) -> int:
        e = self.get(sec, key, required=default is None)
        if e is None:
            return default
        vals = self.ints(e)
        if len(vals) != 1:
            self.fail(e.line, f"'{key}' expects one integer")
        return vals[0]


def _split(text: str, source: str):
    sections: Dict[str, List[Entry]] = {}
    header_lines: Dict[str, int] = {}
    current = None
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION.match(line)
        if m:
            current = m.group(1).lower()
            if current not in SECTIONS:
                raise InputError(f"{source}:{n}: unknown section [{current}]")
            if current in sections:
                raise InputError(f"{source}:{n}: section [{current}] repeated")
            sections[current] = []
            header_lines[current] = n
            continue
        if current is None:
            raise InputError(f"{source}:{n}: entry outside any section")
        if "=" not in line:
            raise InputError(f"{source}:{n}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise InputError(f"{source}:{n}: empty key")
        sections[current].append(Entry(key, value, n))
    if not sections:
        raise InputError(f"{source}: empty ring description")
    return sections, header_lines


def _canonical(sections: Dict[str, List[Entry]]) -> str:
    out = []
    for sec in SECTIONS:
        if sec in sections:
            out.append(f"[{sec}]")
            out.extend(f"{e.key}={' '.join(e.value.split())}" for e in sections[sec])
    return "\n".join(out) + "\n"


def _diagonal(r: _Reader) -> WeightSystem:
    if "grading" not in r.sections:
        r.fail(r.header_lines["weights"], "[weights] needs a [grading] section")
    free_rank = r.int1("grading", "free_rank", default=0)
    te = r.get("grading", "torsion_orders", required=False)
    orders = tuple(r.ints(te)) if te else ()
    if free_rank < 0:
        r.fail(r.get("grading", "free_rank").line, "free_rank must be >= 0")
    for o in orders:
        if o < 2:
            r.fail(te.line, f"torsion order {o} must be >= 2")
    G = GradingGroup(free_rank, orders)
    prime_entry = r.get("weights", "prime")
    prime = r.int1("weights", "prime")
    weights = []
    positivity = None
    for e in r.sections["weights"]:
        if e.key == "prime":
            continue
        if e.key == "positivity":
            positivity = tuple(r.ints(e))
            pos_line = e.line
            continue
        free_txt, _, tors_txt = e.value.partition("|")
        free = r.ints(e, free_txt)
        tors = r.ints(e, tors_txt)
        if len(free) != free_rank or len(tors) != len(orders):
            r.fail(e.line, f"weight of '{e.key}' needs {free_rank} free and {len(orders)} torsion entries")
        weights.append(G.character(free, tors))
    if not weights:
        r.fail(r.header_lines["weights"], "no variables given")
    if positivity is not None and len(positivity) != len(weights):
        r.fail(pos_line, f"positivity needs {len(weights)} entries")
    try:
        return WeightSystem(G, tuple(weights), prime, positivity)
    except InputError as exc:
        r.fail(prime_entry.line, str(exc))


def _group(r: _Reader) -> FiniteGroupAction:
    m = r.int1("group", "modulus")
    prime_entry = r.get("group", "prime")
    prime = r.int1("group", "prime")
    size_entry = r.get("group", "class_sizes")
    sizes = r.ints(size_entry)
    classes = []
    for i, s in enumerate(sizes, start=1):
        e = r.get("group", f"class.{i}")
        classes.append(ConjugacyClassData(s, tuple(r.ints(e))))
    rows, names = [], []
    for e in r.sections["group"]:
        if not e.key.startswith("char."):
            continue
        parts = [t.strip() for t in e.value.split(";")]
        if len(parts) != len(sizes):
            r.fail(e.line, f"character needs {len(sizes)} values, got {len(parts)}")
        try:
            rows.append([parse_cyclotomic(t, m) for t in parts])
        except InputError as exc:
            r.fail(e.line, str(exc))
        names.append(e.key[5:])
    if not rows:
        r.fail(r.header_lines["group"], "no characters given")
    try:
        table = CharacterTable(m, classes, rows, names)
    except InputError as exc:
        r.fail(size_entry.line, str(exc))
    try:
        return FiniteGroupAction(table, prime)
    except InputError as exc:
        r.fail(prime_entry.line, str(exc))


def _extension(r: _Reader) -> RingExtensionPresentation:
    var_entry = r.get("extension", "variables")
    names = var_entry.value.split()
    if not names:
        r.fail(var_entry.line, "no base variables given")
    gens = sp.symbols(names)
    local = {str(g): g for g in gens}
    char = r.int1("extension", "characteristic")
    n = r.int1("extension", "basis_size")
    structure = {}
    for e in r.sections["extension"]:
        if not e.key.startswith("mul."):
            continue
        try:
            i, j = (int(t) - 1 for t in e.key[4:].split("."))
        except ValueError:
            r.fail(e.line, f"bad product key '{e.key}', expected mul.i.j")
        parts = [t.strip() for t in e.value.split(";")]
        if len(parts) != n:
            r.fail(e.line, f"product needs {n} coefficients, got {len(parts)}")
        try:
            structure[(i, j)] = tuple(sp.sympify(t, locals=local) for t in parts)
        except (sp.SympifyError, TypeError) as exc:
            r.fail(e.line, f"cannot parse coefficient: {exc}")
    try:
        return RingExtensionPresentation(tuple(gens), char, n, structure)
    except InputError as exc:
        r.fail(r.header_lines["extension"], str(exc))


def _operator(r: _Reader) -> TruncatedOperator:
    nvars = r.int1("operator", "nvars")
    char = r.int1("operator", "characteristic")
    window = r.int1("operator", "window")
    terms = []
    bound = 0
    for e in r.sections["operator"]:
        if e.key == "term":
            parts = e.value.split("|")
            if len(parts) != 3:
                r.fail(e.line, "term expects 'coeff | exponent | hasse index'")
            try:
                coeff = Fraction(parts[0].strip())
            except ValueError:
                r.fail(e.line, f"bad coefficient '{parts[0].strip()}'")
            a, b = r.ints(e, parts[1]), r.ints(e, parts[2])
            if len(a) != nvars or len(b) != nvars or min(a + b) < 0:
                r.fail(e.line, f"exponent and index need {nvars} entries >= 0")
            if coeff.denominator == 1:
                coeff = int(coeff)
            terms.append(op_compose(mult_op(a, coeff), hasse_op(b)))
            bound = max(bound, sum(b))
        elif e.key == "projection":
            q = r.ints(e)
            if len(q) != 1 or q[0] < 2:
                r.fail(e.line, "projection expects one integer q >= 2")
            terms.append(frobenius_projection_op(q[0]))
            bound = max(bound, nvars * (q[0] - 1))
    if not terms:
        r.fail(r.header_lines["operator"], "operator has no terms")
    return TruncatedOperator.from_function(op_sum(*terms), nvars, char, window, order_bound=bound)


def parse_spec_text(text: str, source: str = "<spec>") -> RingSpec:
    sections, header_lines = _split(text, source)
    r = _Reader(source, sections, header_lines)
    digest = hashlib.sha256(_canonical(sections).encode()).hexdigest()
    spec = RingSpec(kind="", digest=digest, source=source, sections=sections)
    if "weights" in sections:
        spec.weights = _diagonal(r)
        spec.kind = "diagonal"
    elif "grading" in sections:
        r.fail(header_lines["grading"], "[grading] needs a [weights] section")
    if "group" in sections:
        if spec.kind:
            r.fail(header_lines["group"], "a spec describes one ring: [group] conflicts with [weights]")
        spec.action = _group(r)
        spec.kind = "group"
    if "extension" in sections:
        spec.extension = _extension(r)
        spec.kind = spec.kind or "extension"
    if "operator" in sections:
        spec.operator = _operator(r)
        spec.kind = spec.kind or "operator"
    if "witness" in sections:
        e = r.get("witness", "c")
        spec.witness_c = tuple(r.ints(e))
    if not spec.kind:
        r.fail(1, "no ring section found")
    return spec


def parse_spec(path) -> RingSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from exc
    return parse_spec_text(text, str(path))

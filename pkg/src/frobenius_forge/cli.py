"""``frobenius-forge`` command-line front end."""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .diagonal import (ClosureResult, closure_classes, multiplicity_matrix, pushforward_decompose,
                       strongly_critical_classes)
from .diffops import is_rq_linear, operator_order
from .discriminant import discriminant, trace_form
from .dynamics import (min_findim_sequence, perron, primitivity, semisimple_block_report,
                       sfr_positivity_certificate, wielandt_bound)
from .errors import ForgeError, Inconclusive, InputError, InvariantViolation, WindowTooSmall
from .groupchar import group_multiplicity_matrix, pushforward_multiplicities
from .monomial import CovariantClass, format_key, minimal_generators
from .specfile import RingSpec, parse_spec
from .witness import dsimplicity_witness_search

COMMANDS = ("decompose", "closure", "ematrix", "certify", "discriminant", "order", "witness")
SIMPLE_RING_NOTE = ("conditional: for a ring of finite F-representation type whose multiplicity matrix "
                    "is primitive with positive row and column at R, End_R(eR) is eventually free of "
                    "finite-dimensional representations and the ring of differential operators D(R) "
                    "is a simple ring; this is a consequence of a published theorem, not verified here")


@dataclass
class Table:
    title: str
    columns: List[str]
    rows: List[List[object]]


@dataclass
class Report:
    command: str
    digest: str
    kind: str
    fields: dict = field(default_factory=dict)
    tables: List[Table] = field(default_factory=list)
    verdicts: dict = field(default_factory=dict)
    annotations: List[str] = field(default_factory=list)

    def to_machine(self) -> str:
        doc = {
            "command": self.command,
            "input_digest": self.digest,
            "kind": self.kind,
            "fields": _plain(self.fields),
            "tables": [{"title": t.title, "columns": t.columns, "rows": _plain(t.rows)} for t in self.tables],
            "verdicts": _plain(self.verdicts),
            "annotations": self.annotations,
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

    def to_human(self) -> str:
        out = [f"frobenius-forge {self.command}  ({self.kind}, digest {self.digest[:16]})", ""]
        if self.fields:
            w = max(len(k) for k in self.fields)
            out += [f"  {k.ljust(w)}  {_text(v)}" for k, v in self.fields.items()]
            out.append("")
        for t in self.tables:
            out.append(t.title)
            cells = [[_text(c) for c in row] for row in t.rows]
            widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(t.columns)]
            out.append("  " + "  ".join(h.ljust(w) for h, w in zip(t.columns, widths)).rstrip())
            out.append("  " + "  ".join("-" * w for w in widths))
            out += ["  " + "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
            out.append("")
        if self.verdicts:
            out.append("verdicts")
            w = max(len(k) for k in self.verdicts)
            out += [f"  {k.ljust(w)}  {_text(v)}" for k, v in self.verdicts.items()]
            out.append("")
        for a in self.annotations:
            out.append(f"note: {a}")
        return "\n".join(out).rstrip() + "\n"


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def _text(x) -> str:
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_text(v) for v in x) + "]"
    return str(x)


def _mono(exp: Sequence[int]) -> str:
    parts = [f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(exp) if a]
    return "*".join(parts) or "1"


def _need(spec: RingSpec, *kinds: str, what: str):
    if spec.kind not in kinds:
        raise InputError(f"{spec.source}: '{what}' needs one of {', '.join(kinds)}; this file describes {spec.kind}")


# ---- closure cache ------------------------------------------------------------------

def _cache_path(cache: str, spec: RingSpec, budget: int) -> str:
    return os.path.join(cache, f"{spec.digest}.closure.json")


def _load_closure(cache: str, spec: RingSpec, budget: int) -> Optional[ClosureResult]:
    path = _cache_path(cache, spec, budget)
    if not os.path.exists(path):
        return None
    ws = spec.weights
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    classes = []
    for entry in data["classes"]:
        deg = ws.grading.character(entry["free"], entry["torsion"])
        classes.append(CovariantClass(deg, minimal_generators(ws, deg)))
    result = ClosureResult(classes, data["verdict"], data["iterations"])
    # one conservation check on the cached set before trusting it
    rep = pushforward_decompose(ws, CovariantClass.free(ws), 1)
    keys = set(result.keys)
    if [format_key(k) for k in result.keys] != data["keys"] or any(k not in keys for k in rep.entries):
        raise InvariantViolation(f"cached closure {path} failed re-verification")
    return result


def _store_closure(cache: str, spec: RingSpec, budget: int, result: ClosureResult) -> None:
    os.makedirs(cache, exist_ok=True)
    data = {
        "digest": spec.digest,
        "verdict": result.verdict,
        "iterations": result.iterations,
        "classes": [{"free": list(c.degree.free), "torsion": list(c.degree.torsion)} for c in result.classes],
        "keys": [format_key(k) for k in result.keys],
    }
    tmp = _cache_path(cache, spec, budget) + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1)
    os.replace(tmp, _cache_path(cache, spec, budget))


def _closure(spec: RingSpec, args) -> ClosureResult:
    if args.cache:
        hit = _load_closure(args.cache, spec, args.budget)
        if hit is not None:
            return hit
    result = closure_classes(spec.weights, args.budget)
    if args.cache and result.verdict == "FFRT":
        _store_closure(args.cache, spec, args.budget, result)
    return result


def _class_rows(classes) -> List[List[object]]:
    return [[i, format_key(c.canonical_key), str(c.degree), " ".join(_mono(g) for g in c.generators)]
            for i, c in enumerate(classes)]


def _matrix(spec: RingSpec, args):
    if spec.kind == "group":
        return group_multiplicity_matrix(spec.action)
    return multiplicity_matrix(spec.weights, _closure(spec, args))


def _matrix_tables(E) -> List[Table]:
    n = E.n
    cols = [f"c{j}" for j in range(n)]
    rows = [[i, E.labels[i] if isinstance(E.labels[i], str) else format_key(E.labels[i])] + list(E.entries[i])
            for i in range(n)]
    sums = [sum(E.entries[i][j] for i in range(n)) for j in range(n)]
    weighted = [sum(E.ranks[i] * E.entries[i][j] for i in range(n)) for j in range(n)]
    return [Table("multiplicity matrix E (column j = one-step pushforward of class j)",
                  ["i", "class"] + cols, rows),
            Table("column checks", ["check"] + cols,
                  [["sum_i E[i][j]"] + sums, ["sum_i rank_i E[i][j]"] + weighted,
                   ["rank_j"] + list(E.ranks)])]


# ---- commands -------------------------------------------------------------------------

def cmd_decompose(spec: RingSpec, args) -> Report:
    _need(spec, "diagonal", "group", what="decompose")
    rep = Report("decompose", spec.digest, spec.kind, {"e": args.e})
    if spec.kind == "group":
        t = spec.action.table
        mults = pushforward_multiplicities(spec.action, args.e)
        q = spec.action.prime ** args.e
        rep.fields.update(p=spec.action.prime, q=q, group_order=t.order, dim_W=t.dim_w)
        rep.tables.append(Table("summands R(U_i) of eR", ["i", "U_i", "dim U_i", "multiplicity"],
                                [[i, t.names[i], t.degrees[i], m] for i, m in enumerate(mults)]))
        if spec.action.has_pseudo_reflections:
            rep.annotations.append("the group contains pseudo-reflections: the R(U_i) need not be indecomposable")
        rep.verdicts["weighted_rank"] = f"{sum(a * b for a, b in zip(mults, t.degrees))} = q^dim_W = {q ** t.dim_w}"
        return rep
    ws = spec.weights
    dec = pushforward_decompose(ws, CovariantClass.free(ws), args.e, args.enum_budget)
    rep.fields.update(p=ws.prime, q=dec.q, variables=ws.d, krull_dim=ws.krull_dim)
    rows = [[i, format_key(c.canonical_key), str(c.degree), " ".join(_mono(g) for g in c.generators), n]
            for i, (c, n) in enumerate(dec.entries.values())]
    rep.tables.append(Table("summands of eR", ["i", "class", "degree", "generators", "multiplicity"], rows))
    rep.verdicts["conservation"] = (f"{dec.total()} summands + {dec.zero_piece_count} empty pieces "
                                    f"= q^d = {dec.q ** dec.d}")
    rep.annotations.append("eR splits as the direct sum of its residue pieces, each isomorphic to a module of covariants")
    return rep


def cmd_closure(spec: RingSpec, args) -> Report:
    _need(spec, "diagonal", "group", what="closure")
    rep = Report("closure", spec.digest, spec.kind, {"budget": args.budget})
    if spec.kind == "group":
        E = group_multiplicity_matrix(spec.action)
        rep.tables.append(Table("irreducibles reachable from R", ["i", "U_i", "dim"],
                                [[i, lab, r] for i, (lab, r) in enumerate(zip(E.labels, E.ranks))]))
        rep.verdicts["FFRT"] = "FFRT (finite group: every summand is some R(U_i))"
        return rep
    ws = spec.weights
    res = _closure(spec, args)
    rep.fields.update(p=ws.prime, iterations=res.iterations, classes=len(res.classes))
    rep.tables.append(Table("classes in the closure of {R}", ["i", "class", "degree", "generators"],
                            _class_rows(res.classes)))
    rep.verdicts["FFRT"] = res.verdict
    if res.verdict == "FFRT":
        crit = strongly_critical_classes(ws)
        match = [c.canonical_key for c in crit] == res.keys
        rep.verdicts["strongly_critical_match"] = "agree" if match else "DISAGREE"
        if not match:
            raise InvariantViolation("closure classes differ from the strongly critical classes")
    return rep


def cmd_ematrix(spec: RingSpec, args) -> Report:
    _need(spec, "diagonal", "group", what="ematrix")
    E = _matrix(spec, args)
    rep = Report("ematrix", spec.digest, spec.kind, {"p": E.p, "dim": E.dim, "p^dim": E.p ** E.dim})
    rep.tables += _matrix_tables(E)
    rep.verdicts["rank_identity"] = E.rank_identity
    return rep


def cmd_certify(spec: RingSpec, args) -> Report:
    _need(spec, "diagonal", "group", what="certify")
    E = _matrix(spec, args)
    rep = Report("certify", spec.digest, spec.kind,
                 {"p": E.p, "dim": E.dim, "classes": E.n, "tolerance": args.tolerance})
    rep.tables += _matrix_tables(E)
    u = primitivity(E.entries)
    rep.fields["wielandt_bound"] = wielandt_bound(E.n)
    rep.verdicts["primitive"] = f"yes, E^{u} > 0" if u is not None else "no"
    if u is not None:
        pd = perron(E, Fraction(args.tolerance))
        rep.tables.append(Table(f"limit of E^e / {pd.lam}^e (exact)", ["i"] + [f"c{j}" for j in range(E.n)],
                                [[i] + list(r) for i, r in enumerate(pd.exact_limit)]))
        rep.verdicts["perron"] = (f"w E = {pd.lam} w exactly for w = {list(pd.left_eigenvector)}; "
                                  f"squaring agrees within {pd.tolerance} at e = {pd.limit_exponent}")
    sfr = sfr_positivity_certificate(E)
    rep.verdicts["sfr_certificate"] = sfr.verdict + (f" (u = {sfr.u})" if sfr.u is not None else "")
    cols = [[row[0] for row in E.power(e)] for e in (1, 2, 3)]
    mf = min_findim_sequence(cols, E=E)
    rep.fields["min_findim"] = mf.sequence
    rep.verdicts["finite_dim_reps"] = mf.verdict
    col = cols[0]
    live = [i for i, n in enumerate(col) if n]
    br = semisimple_block_report([col[i] for i in live],
                                 labels=[E.labels[i] if isinstance(E.labels[i], str) else format_key(E.labels[i])
                                         for i in live])
    rep.tables.append(Table("End_R(1R) modulo its radical", ["block", "class", "matrix size", "simple dim"],
                            [[i, lab, a, s] for i, (lab, a, s) in
                             enumerate(zip(br.labels, br.multiplicities, br.simple_dims))]))
    rep.annotations.append(sfr.statement)
    if u is not None:
        rep.annotations.append("the Perron limit gives the asymptotic share of each class in eR")
    if sfr.verdict == "CertifiedPositivity" and mf.verdict == "NoFiniteDimensionalReps":
        rep.annotations.append(SIMPLE_RING_NOTE)
    return rep


def cmd_discriminant(spec: RingSpec, args) -> Report:
    ext = spec.extension
    if ext is None:
        raise InputError(f"{spec.source}: 'discriminant' needs an [extension] section")
    rep = Report("discriminant", spec.digest, "extension",
                 {"characteristic": ext.characteristic, "basis_size": ext.basis_size,
                  "variables": " ".join(str(v) for v in ext.variables)})
    M = trace_form(ext)
    rep.tables.append(Table("trace form Tr(r_i r_j)", ["i"] + [f"r{j + 1}" for j in range(M.cols)],
                            [[f"r{i + 1}"] + [str(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]))
    rep.verdicts["discriminant"] = str(discriminant(ext))
    return rep


def cmd_order(spec: RingSpec, args) -> Report:
    theta = spec.operator
    if theta is None:
        raise InputError(f"{spec.source}: 'order' needs an [operator] section")
    bound = theta.order_bound if theta.order_bound is not None else theta.safe_degree
    rep = Report("order", spec.digest, "operator",
                 {"nvars": theta.nvars, "characteristic": theta.char, "window": theta.window,
                  "safe_degree": theta.safe_degree, "order_bound": bound})
    try:
        n = operator_order(theta, bound)
    except WindowTooSmall as exc:
        raise Inconclusive(f"{exc}; enlarge the window") from exc
    rep.verdicts["order"] = n if n is not None else f"> {bound} (bound violated)"
    if theta.order_bound is None:
        rep.annotations.append(f"order verdict assumes order <= {bound}")
    if theta.char:
        rows = []
        q = theta.char
        while q <= theta.safe_degree:
            rows.append([q, "yes" if is_rq_linear(theta, q) else "no", theta.nvars * (q - 1)])
            q *= theta.char
        rep.tables.append(Table("linearity over R^q", ["q", "R^q-linear", "order bound d(q-1)"], rows))
    return rep


def cmd_witness(spec: RingSpec, args) -> Report:
    _need(spec, "diagonal", what="witness")
    ws = spec.weights
    if args.c is not None:
        try:
            c = tuple(int(t) for t in args.c.replace(",", " ").split())
        except ValueError:
            raise InputError(f"--c expects integers, got {args.c!r}") from None
    elif spec.witness_c is not None:
        c = spec.witness_c
    else:
        raise InputError(f"{spec.source}: no monomial given (use --c or a [witness] section)")
    rep = Report("witness", spec.digest, spec.kind, {"c": _mono(c), "p": ws.prime, "q_max": args.q_max})
    wit = dsimplicity_witness_search(ws, c, args.q_max)
    if wit is None:
        raise Inconclusive(f"no witness for c = {_mono(c)} with q <= {args.q_max}")
    rep.fields.update(q=wit.q, tried=list(wit.tried), method=wit.method)
    rep.tables.append(Table("R^q-linear map theta on the residue piece of c^2",
                            ["source", "coefficient", "image"],
                            [[_mono(s), a, _mono(d)] for s, a, d in wit.table()]))
    rep.verdicts["witness"] = "theta(c^2) = 1, replay verified" if wit.verified else "unverified"
    rep.annotations.append("theta is zero on every other residue piece of R over R^q")
    return rep


HANDLERS = {
    "decompose": cmd_decompose,
    "closure": cmd_closure,
    "ematrix": cmd_ematrix,
    "certify": cmd_certify,
    "discriminant": cmd_discriminant,
    "order": cmd_order,
    "witness": cmd_witness,
}


def _rational(text: str) -> Fraction:
    try:
        val = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if val <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return val


def _positive(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return val


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="frobenius-forge", description="Frobenius pushforwards of invariant rings in characteristic p.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--spec", required=True, help="ring description file")
    ap.add_argument("--e", type=_positive, default=1, help="Frobenius exponent for decompose")
    ap.add_argument("--budget", type=_positive, default=16, help="closure rounds")
    ap.add_argument("--enum-budget", type=_positive, default=10 ** 12, help="max residues per decomposition")
    ap.add_argument("--q-max", type=_positive, default=27, help="largest q tried by witness")
    ap.add_argument("--c", help="exponent vector of the invariant monomial for witness, e.g. '2 0'")
    ap.add_argument("--format", choices=("human", "machine"), default="human")
    ap.add_argument("--cache", help="directory for cached closure class sets")
    ap.add_argument("--tolerance", type=_rational, default=Fraction(1, 10 ** 9),
                    help="Perron limit tolerance as a rational, e.g. 1/1000000")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = parse_spec(args.spec)
        report = HANDLERS[args.command](spec, args)
    except ForgeError as exc:
        print(f"frobenius-forge: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(report.to_machine() if args.format == "machine" else report.to_human())
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``subreg classify|tables|verify|plan|singularity``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from . import __version__
from .bruhat import (
    MAX_LEMMA_RANK,
    borel_cell_conclusion_holds,
    bound_ratio,
    degree_filter,
    e_star,
    gln_coset_reps,
    gln_coset_reps_expected,
    gln_coset_reps_via_weyl,
    sigma_chains,
    sigma_set_check,
    sigma_set_expected,
    unipotent_quotient_expected,
    unipotent_quotient_roots,
)
from .geometry import (
    SectionFormula,
    SurfaceDescriptor,
    base_self_intersection,
    base_surface,
    degree_d1,
    degree_sum_type_a,
    divisor_decomposition,
    hirzebruch_component,
    singular_fiber,
    singularity_types,
    theta_prime_sections,
    theta_sections,
)
from .induction import (
    FOLDING_PAIRS,
    WeightMultiset,
    first_class,
    folding_report,
    looijenga_weights,
    mu_weight,
    reference_weights_row,
    slice_fiber_dimension,
    slice_weights,
)
from .rootdata import RootDataError, build_root_datum
from .subregular import (
    SubregularClass,
    enumerate_subregular,
    levi_root_rows,
    mu_pairings,
    slice_dimension_expected,
)
from .weyl import WeylWord

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ASCII_MAP = str.maketrans({"ϖ": "w", "α": "a", "∨": "v", "−": "-"})


# ---------------------------------------------------------------------------
# Reports and encodings


@dataclass
class Report:
    kind: str
    inputs: dict
    payload: dict
    columns: list[str] = field(default_factory=list)

    def as_json(self) -> dict:
        return {
            "kind": self.kind,
            "tool_version": __version__,
            "inputs": encode(self.inputs),
            "payload": encode(self.payload),
        }


def encode(x):
    """JSON-ready form: rationals as ``{num, den}``, multisets as sorted entries."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    if isinstance(x, WeightMultiset):
        return [
            {"weight": w[0] if len(w) == 1 else list(w), "multiplicity": m}
            for w, m in x.entries
        ]
    if isinstance(x, (SectionFormula, WeylWord)):
        return str(x)
    if isinstance(x, SurfaceDescriptor):
        return encode(x.to_dict())
    if isinstance(x, dict):
        return {str(k): encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [encode(v) for v in x]
    return str(x)


def cell(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, WeightMultiset):
        return x.exponent_string()
    if isinstance(x, SurfaceDescriptor):
        return str(x)
    if isinstance(x, dict):
        return " ".join(f"{k}={cell(v)}" for k, v in x.items())
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(cell(v) for v in x) + "]"
    return str(x)


def render(report: Report, fmt: str, ascii: bool = False) -> str:
    if fmt == "json":
        text = json.dumps(report.as_json(), indent=2, sort_keys=True, ensure_ascii=False)
    else:
        rows = report.payload.get("rows", [])
        cols = report.columns or (list(rows[0]) if rows else [])
        table = [cols] + [[cell(r.get(c)) for c in cols] for r in rows]
        if fmt == "tsv":
            text = "\n".join("\t".join(line) for line in table)
        else:
            widths = [max(len(line[k]) for line in table) for k in range(len(cols))]
            lines = ["  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip() for line in table]
            lines.insert(1, "  ".join("-" * w for w in widths))
            head = f"# {report.kind}"
            if report.inputs:
                head += " (" + ", ".join(f"{k}={cell(v)}" for k, v in report.inputs.items()) + ")"
            text = "\n".join([head] + lines)
    return text.translate(ASCII_MAP) if ascii else text


# ---------------------------------------------------------------------------
# Helpers


def all_types(max_rank: int) -> list[tuple[str, int]]:
    """Every simple type of rank at most ``max_rank`` that carries subregular classes."""
    out = [("A", l) for l in range(1, max_rank + 1)]
    out += [("B", l) for l in range(3, max_rank + 1)]
    out += [("C", l) for l in range(2, max_rank + 1)]
    out += [("D", l) for l in range(4, max_rank + 1)]
    out += [("E", l) for l in range(6, min(max_rank, 8) + 1)]
    out += [t for t in (("F", 4), ("G", 2)) if t[1] <= max_rank]
    return out


def all_classes(max_rank: int) -> Iterator[SubregularClass]:
    for s, l in all_types(max_rank):
        yield from enumerate_subregular(build_root_datum(s, l))


def _group(cls: SubregularClass) -> str:
    return f"{cls.series}{cls.rank}"


# ---------------------------------------------------------------------------
# Commands


def cmd_classify(series: str, rank: int) -> Report:
    rd = build_root_datum(series, rank)
    rows = []
    for c in enumerate_subregular(rd):
        pairs = mu_pairings(c)
        rows.append(
            {
                "tag": c.tag,
                "label": c.label,
                "t": list(c.t),
                "mu_pairings": [pairs[k] for k in rd.nodes],
                "alpha_i": c.alpha_i,
                "alpha_j": c.alpha_j,
                "c0": list(c.c0),
                "c1": list(c.c1),
                "n0": c.n0,
                "n1": c.n1,
                "d": c.d,
                "N": c.N,
            }
        )
    return Report(
        "classification",
        {"series": series, "rank": rank},
        {"group": rd.name, "count": len(rows), "rows": rows},
        ["tag", "label", "t", "mu_pairings", "alpha_i", "alpha_j", "n0", "n1", "d", "N"],
    )


def _weights_rows(max_rank: int) -> list[dict]:
    rows = []
    for c in all_classes(max_rank):
        base, mw, sl = looijenga_weights(c), mu_weight(c), slice_weights(c)
        ref = reference_weights_row(c)
        notes = []
        if ref is not None:
            if ref[0] != base:
                notes.append(f"reference base {ref[0].exponent_string()}")
            if ref[2] != sl:
                notes.append(f"reference slice {ref[2].exponent_string()}")
        rows.append(
            {
                "label": c.label,
                "group": _group(c),
                "i": c.alpha_i,
                "base_weights": base,
                "mu_weight": list(mw) if isinstance(mw, tuple) else mw,
                "slice_weights": sl,
                "slice_total": len(sl),
                "expected_total": slice_dimension_expected(c),
                "discrepancy": "; ".join(notes) or None,
            }
        )
    return rows


def _degree_rows(max_rank: int) -> list[dict]:
    rows = []
    for c in all_classes(max_rank):
        if c.tag == "A1":
            continue
        row = {"label": c.label, "group": _group(c), "i": c.alpha_i, "d": c.d, "n0": c.n0, "N": c.N}
        if c.tag == "A":
            row.update(base_E2=None, degree_D1=None, degree_sum=degree_sum_type_a(c))
        else:
            row.update(base_E2=base_self_intersection(c), degree_D1=degree_d1(c), degree_sum=None)
        rows.append(row)
    return rows


def _levi_rows(max_rank: int) -> list[dict]:
    rows = []
    for c in all_classes(max_rank):
        if c.tag not in ("B", "C", "D"):
            continue
        for r in levi_root_rows(c):
            rows.append(
                {
                    "label": c.label,
                    "group": _group(c),
                    "i": c.alpha_i,
                    "root": _root_str(r.root.coeffs),
                    "pairing_mu_prime": r.mu_prime,
                    "pairing_varpi_l": r.varpi_l,
                }
            )
    return rows


def _root_str(coeffs: Sequence[int]) -> str:
    out = ""
    for k, c in enumerate(coeffs, start=1):
        if not c:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        out += f"{sign}{mag}α{k}"
    return out[1:] if out.startswith("+") else out


TABLES: dict[str, tuple[str, Callable[[int], list[dict]], list[str]]] = {
    "weights": (
        "weights_table",
        _weights_rows,
        ["label", "group", "i", "base_weights", "mu_weight", "slice_weights", "slice_total", "expected_total", "discrepancy"],
    ),
    "degrees": (
        "degrees_table",
        _degree_rows,
        ["label", "group", "i", "d", "n0", "N", "base_E2", "degree_D1", "degree_sum"],
    ),
    "levi_roots": (
        "roots_table",
        _levi_rows,
        ["label", "group", "i", "root", "pairing_mu_prime", "pairing_varpi_l"],
    ),
}


def cmd_tables(which: str, max_rank: int = 8) -> Report:
    kind, build, cols = TABLES[which]
    return Report(kind, {"which": which, "max_rank": max_rank}, {"rows": build(max_rank)}, cols)


# ---------------------------------------------------------------------------
# Verification suites


Check = tuple[str, bool, str]


def _suite_cosets() -> Iterator[Check]:
    for n in range(2, 7):
        for k in range(1, n + 1):
            got = gln_coset_reps(n, k)
            ok = got == gln_coset_reps_expected(n, k) == gln_coset_reps_via_weyl(n, k)
            yield f"coset reps n={n} k={k}", ok, f"{sorted(got)}"
    for n in range(2, 7):
        for k in range(2, n + 1):
            for p in range(1, k):
                ok = unipotent_quotient_roots(n, k, p) == unipotent_quotient_expected(n, p)
                yield f"unipotent chain n={n} k={k} p={p}", ok, ""


def _suite_degrees(max_rank: int) -> Iterator[Check]:
    for n in range(2, 9):
        got = degree_filter(n)
        yield f"degree filter n={n}", got == {e_star(n, n, -1), e_star(n, n - 1, -1)}, f"{sorted(got)}"
    for c in all_classes(max_rank):
        dim = slice_fiber_dimension(c)
        yield f"fibre dimension {c}", dim == slice_dimension_expected(c), f"{dim}"
        if c.tag not in ("A", "A1"):
            deg = degree_d1(c)
            yield f"degree (D1)_y {c}", isinstance(deg, int), f"{deg}"


def _suite_weights(max_rank: int) -> Iterator[Check]:
    for c in all_classes(max_rank):
        sl = slice_weights(c)
        yield f"slice total {c}", len(sl) == slice_dimension_expected(c), f"{len(sl)}"
        ref = reference_weights_row(c)
        if ref is not None:
            ok = ref[2] == sl and ref[1] == mu_weight(c)
            yield f"reference slice row {c}", ok, sl.exponent_string()


def _suite_folding() -> Iterator[Check]:
    for small, st, big, bt in FOLDING_PAIRS:
        rep = folding_report(first_class(small, st), first_class(big, bt))
        yield f"folding ({rep.small}, {rep.big}) d={rep.d}", rep.ok, (
            f"base {rep.base_small.exponent_string()} vs {rep.base_big_part.exponent_string()}; "
            f"slice {rep.slice_small_part.exponent_string()} vs {rep.slice_big_part.exponent_string()}"
        )


SIGMA_GROUPS = (("A", 2), ("A", 3), ("A", 4), ("A", 5), ("B", 3), ("C", 3), ("D", 4), ("D", 5), ("G", 2))


def _suite_sigma() -> Iterator[Check]:
    for s, l in SIGMA_GROUPS:
        rd = build_root_datum(s, l)
        for j, c in sigma_chains(rd):
            got = sigma_set_check(rd, j, c)
            yield f"sigma set {rd.name} j={j} c={list(c)}", got == sigma_set_expected(rd, c), (
                ", ".join(sorted(map(str, got)))
            )
    for c in all_classes(MAX_LEMMA_RANK):
        if c.tag == "A1":
            continue
        yield f"Borel cells {c} bound j", borel_cell_conclusion_holds(c, "j"), ""
        if c.tag != "A":
            yield f"Borel cells {c} bound i", borel_cell_conclusion_holds(c, "i"), ""


def _suite_bounds(max_rank: int) -> Iterator[Check]:
    for s, l in all_types(max_rank) + [("B", 2)]:
        rd = build_root_datum(s, l)
        for k in rd.nodes:
            r = bound_ratio(rd, k)
            yield f"bound {rd.name} k={k}", r >= l + 1, f"{r}"


SUITES = ("cosets", "degrees", "weights", "folding", "sigma", "bounds")


def run_suite(name: str, max_rank: int = 8) -> list[Check]:
    runners = {
        "cosets": _suite_cosets,
        "degrees": lambda: _suite_degrees(max_rank),
        "weights": lambda: _suite_weights(max_rank),
        "folding": _suite_folding,
        "sigma": _suite_sigma,
        "bounds": lambda: _suite_bounds(max_rank),
    }
    names = SUITES if name == "all" else (name,)
    return [(f"{n}: {label}", ok, detail) for n in names for label, ok, detail in runners[n]()]


def cmd_verify(suite: str, max_rank: int = 8) -> tuple[Report, int]:
    checks = run_suite(suite, max_rank)
    rows = [{"status": "PASS" if ok else "FAIL", "check": label, "detail": detail} for label, ok, detail in checks]
    failed = [r for r in rows if r["status"] == "FAIL"]
    report = Report(
        "verification",
        {"suite": suite, "max_rank": max_rank},
        {"passed": len(rows) - len(failed), "failed": len(failed), "rows": rows},
        ["status", "check", "detail"],
    )
    return report, EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# Plans and singularities


def cmd_plan(series: str, rank: int) -> Report:
    rows = []
    for c in enumerate_subregular(build_root_datum(series, rank)):
        if c.tag == "A1":
            continue
        dd = divisor_decomposition(c)
        rows.append(
            {
                "tag": c.tag,
                "label": c.label,
                "i": c.alpha_i,
                "j": c.alpha_j,
                "divisors": [{"coweight": lab, "multiplicity": m} for lab, m in dd.terms],
                "theta": theta_sections(c),
                "theta_prime": theta_prime_sections(c),
                "hirzebruch": hirzebruch_component(c),
                "base_generic": base_surface(c, "generic"),
                "base_special": base_surface(c, "special"),
            }
        )
    return Report(
        "blowup_plan",
        {"series": series, "rank": rank},
        {"rows": rows},
        ["label", "i", "j", "divisors", "theta", "theta_prime", "hirzebruch", "base_generic", "base_special"],
    )


def cmd_singularity(series: str, rank: int) -> Report:
    rows = []
    for c in enumerate_subregular(build_root_datum(series, rank)):
        fib = singular_fiber(c)
        rep = singularity_types(fib)
        rows.append(
            {
                "tag": c.tag,
                "label": c.label,
                "i": c.alpha_i,
                "fibre": fib,
                "singularities": rep.summary(),
                "report": rep.to_dict(),
            }
        )
    return Report(
        "singularity",
        {"series": series, "rank": rank},
        {"rows": rows},
        ["label", "i", "fibre", "singularities"],
    )


# ---------------------------------------------------------------------------
# Entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit code 2 with the message on stderr
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subreg", description=__doc__)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(q: argparse.ArgumentParser) -> None:
        q.add_argument("--format", choices=("text", "json", "tsv"), default="text")
        q.add_argument("--ascii", action="store_true", help="ASCII symbols in place of Greek letters")

    def group(q: argparse.ArgumentParser) -> None:
        q.add_argument("--series", required=True, choices=tuple("ABCDEFG"))
        q.add_argument("--rank", required=True, type=int)

    for name, help_ in (
        ("classify", "list the subregular classes of a group"),
        ("plan", "divisors, blowup sections and base surfaces"),
        ("singularity", "zero fibre and its singularities"),
    ):
        q = sub.add_parser(name, help=help_)
        group(q)
        common(q)

    q = sub.add_parser("tables", help="regenerate the weights, degrees or Levi-roots table")
    q.add_argument("--which", required=True, choices=tuple(TABLES))
    q.add_argument("--max-rank", type=int, default=8)
    common(q)

    q = sub.add_parser("verify", help="run a verification suite")
    q.add_argument("--suite", "--which", dest="suite", default="all", choices=SUITES + ("all",))
    q.add_argument("--max-rank", type=int, default=8)
    common(q)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "classify":
            report = cmd_classify(args.series, args.rank)
        elif args.command == "plan":
            report = cmd_plan(args.series, args.rank)
        elif args.command == "singularity":
            report = cmd_singularity(args.series, args.rank)
        elif args.command == "tables":
            if not 1 <= args.max_rank <= 8:
                raise RootDataError("--max-rank must lie in 1..8")
            report = cmd_tables(args.which, args.max_rank)
        else:
            if not 1 <= args.max_rank <= 8:
                raise RootDataError("--max-rank must lie in 1..8")
            report, code = cmd_verify(args.suite, args.max_rank)
    except RootDataError as exc:
        print(f"subreg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(report, args.format, args.ascii) + "\n")
    if code == EXIT_FAIL:
        first = next(r for r in report.payload["rows"] if r["status"] == "FAIL")
        print(f"first failure: {first['check']} {first['detail']}".rstrip(), file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Exhaustive checks of the extremal results at small vertex counts.

Each checker returns a report object with exact rational values, witness
trees (in canonical labeling, see :func:`ceitrees.tree.tree_from_code`) and a
``verdicts`` mapping. A report is ``ok`` when every verdict holds.

Witnesses are chosen deterministically: among tied trees, the one with the
smallest canonical code. Reports therefore serialize identically for any
worker count. Elapsed time is kept on the object but only serialized when
asked for, since it is the one field that differs between runs.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .constructions import (
    b_tree,
    f_tree,
    greedy_caterpillar,
    greedy_tree,
    transform_a,
    transform_b,
)
from .degseq import (
    DegreeSequence,
    all_degree_sequences,
    majorization_chain,
    majorizes,
    validate_degree_sequence,
)
from .enumeration import (
    ClassTable,
    check_bound,
    class_table,
    random_tree,
    scan_degree_sequence,
)
from .errors import BadR, TooSmall
from .tree import Tree, branching_count, canonical_code, cei, tree_from_code


def rational_json(x: Fraction) -> dict[str, int]:
    return {"num": x.numerator, "den": x.denominator}


def witness_json(code: bytes) -> dict[str, Any]:
    t = tree_from_code(code)
    return {"code": code.decode(), "n": t.n, "edges": [list(e) for e in t.edges()]}


def _extremes(classes: dict[bytes, Fraction]) -> tuple[Fraction, list[bytes], Fraction, list[bytes]]:
    lo = min(classes.values())
    hi = max(classes.values())
    lo_codes = sorted(c for c, v in classes.items() if v == lo)
    hi_codes = sorted(c for c, v in classes.items() if v == hi)
    return lo, lo_codes, hi, hi_codes


class _Report:
    kind = "report"
    verdicts: dict[str, bool]
    elapsed: float | None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        raise NotImplementedError

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False) + "\n"

    def subject_label(self) -> str:
        raise NotImplementedError

    def summary_row(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "subject": self.subject_label(),
            "labeled_count": "",
            "class_count": "",
            "min_cei": "",
            "max_cei": "",
            "ok": self.ok,
        }

    def failures(self) -> list[str]:
        return [k for k, v in self.verdicts.items() if not v]


@dataclass
class ExtremalReport(_Report):
    """Min/max CEI over a tree family against the constructions claimed extremal."""

    subject: dict[str, Any]
    labeled_count: int
    class_count: int
    min_cei: Fraction
    min_witnesses: list[bytes]
    max_cei: Fraction
    max_witnesses: list[bytes]
    construction_cei: dict[str, Fraction]
    construction_code: dict[str, bytes]
    verdicts: dict[str, bool]
    elapsed: float | None = None
    kind: str = "extremal"

    def subject_label(self) -> str:
        if "degrees" in self.subject:
            return "d=" + ",".join(map(str, self.subject["degrees"]))
        return f"n={self.subject['n']},r={self.subject['r']}"

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out = {
            "kind": self.kind,
            "subject": self.subject,
            "labeled_count": self.labeled_count,
            "class_count": self.class_count,
            "min_cei": {
                **rational_json(self.min_cei),
                "witness": witness_json(self.min_witnesses[0]),
                "classes": len(self.min_witnesses),
            },
            "max_cei": {
                **rational_json(self.max_cei),
                "witness": witness_json(self.max_witnesses[0]),
                "classes": len(self.max_witnesses),
            },
            "construction_cei": {
                name: {**rational_json(v), "code": self.construction_code[name].decode()}
                for name, v in self.construction_cei.items()
            },
            "verdicts": self.verdicts,
        }
        if timing:
            out["elapsed"] = self.elapsed
        return out

    def summary_row(self) -> dict[str, Any]:
        row = super().summary_row()
        row.update(
            labeled_count=self.labeled_count,
            class_count=self.class_count,
            min_cei=str(self.min_cei),
            max_cei=str(self.max_cei),
        )
        return row


def _extremal_report(
    subject: dict[str, Any],
    table: ClassTable,
    constructions: dict[str, Tree],
) -> tuple[ExtremalReport, dict[str, bytes]]:
    lo, lo_codes, hi, hi_codes = _extremes(table.classes)
    values = {name: cei(t) for name, t in constructions.items()}
    codes = {name: canonical_code(t) for name, t in constructions.items()}
    verdicts = {
        f"{name}_in_family": codes[name] in table.classes for name in constructions
    }
    verdicts["constructions_within_range"] = all(lo <= v <= hi for v in values.values())
    report = ExtremalReport(
        subject=subject,
        labeled_count=table.labeled_count,
        class_count=len(table.classes),
        min_cei=lo,
        min_witnesses=lo_codes,
        max_cei=hi,
        max_witnesses=hi_codes,
        construction_cei=values,
        construction_code=codes,
        verdicts=verdicts,
    )
    return report, codes


def verify_degree_sequence_extremes(
    d: Sequence[int], jobs: int = 1, bound: int | None = None
) -> ExtremalReport:
    """Brute-force min and max CEI over all trees with degree sequence ``d``.

    Verdicts: the minimum equals CEI of the greedy caterpillar and the
    maximum equals CEI of the greedy tree.
    """
    d = validate_degree_sequence(d)
    check_bound(d.n, bound)
    start = time.perf_counter()
    table = scan_degree_sequence(d, jobs)
    report, _ = _extremal_report(
        {"degrees": list(d)},
        table,
        {"greedy_caterpillar": greedy_caterpillar(d), "greedy_tree": greedy_tree(d)},
    )
    report.verdicts["min_is_greedy_caterpillar"] = (
        report.construction_cei["greedy_caterpillar"] == report.min_cei
    )
    report.verdicts["max_is_greedy_tree"] = report.construction_cei["greedy_tree"] == report.max_cei
    report.elapsed = time.perf_counter() - start
    return report


def verify_all_degree_sequences(
    n_max: int, n_min: int = 2, jobs: int = 1, bound: int | None = None
) -> list[ExtremalReport]:
    return [
        verify_degree_sequence_extremes(d, jobs, bound)
        for n in range(n_min, n_max + 1)
        for d in all_degree_sequences(n)
    ]


def verify_branching_bounds(
    n: int, r: int, jobs: int = 1, bound: int | None = None
) -> ExtremalReport:
    """Min/max CEI over trees with exactly ``r`` branching vertices.

    Verdicts: the minimum is attained by F(n, r) and by no other class; the
    maximum equals CEI of B(n, r). Several maximizing classes are recorded
    in the report but are not a failure.
    """
    if r < 1 or 2 * r > n - 2:
        raise BadR(f"need 1 <= r <= n/2 - 1, got n={n}, r={r}")
    check_bound(n, bound)
    start = time.perf_counter()
    full = class_table(n, jobs)
    family = {
        code: v
        for code, v in full.classes.items()
        if branching_count(tree_from_code(code)) == r
    }
    # labeled_count here is the number of distinct classes scanned; the
    # family is obtained by filtering the class table, not a labeled walk.
    table = ClassTable(family, len(family))
    ft, bt = f_tree(n, r), b_tree(n, r)
    report, codes = _extremal_report({"n": n, "r": r}, table, {"F": ft, "B": bt})
    report.verdicts["F_branching_is_r"] = branching_count(ft) == r
    report.verdicts["B_branching_is_r"] = branching_count(bt) == r
    report.verdicts["min_is_F"] = report.construction_cei["F"] == report.min_cei
    report.verdicts["F_unique_minimizer"] = report.min_witnesses == [codes["F"]]
    report.verdicts["max_is_B"] = report.construction_cei["B"] == report.max_cei
    report.elapsed = time.perf_counter() - start
    return report


# Majorization -------------------------------------------------------------


@dataclass
class MajorizationReport(_Report):
    """Greedy-tree CEI monotonicity over every comparable pair for one ``n``."""

    n: int
    pairs: list[dict[str, Any]]
    verdicts: dict[str, bool]
    elapsed: float | None = None
    kind: str = "majorization"

    def subject_label(self) -> str:
        return f"n={self.n}"

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out = {
            "kind": self.kind,
            "subject": {"n": self.n},
            "pair_count": len(self.pairs),
            "pairs": self.pairs,
            "verdicts": self.verdicts,
        }
        if timing:
            out["elapsed"] = self.elapsed
        return out


def verify_majorization_monotonicity(n: int, bound: int | None = None) -> MajorizationReport:
    """For every pair with ``pi2`` majorizing ``pi1``: CEI(greedy(pi1)) <= CEI(greedy(pi2)).

    CEI is also checked to be non-decreasing along the constructed unit-move
    chain between the two sequences.
    """
    if n < 2:
        raise TooSmall(f"n must be >= 2, got {n}")
    check_bound(n, bound)
    start = time.perf_counter()
    seqs = list(all_degree_sequences(n))
    value = {d: cei(greedy_tree(d)) for d in seqs}
    pairs = []
    all_pairs_ok = True
    all_chains_ok = True
    for lo in seqs:
        for hi in seqs:
            if not majorizes(hi, lo):
                continue
            chain = majorization_chain(lo, hi)
            chain_vals = [value[s] for s in chain]
            pair_ok = value[lo] <= value[hi]
            chain_ok = all(a <= b for a, b in zip(chain_vals, chain_vals[1:]))
            all_pairs_ok &= pair_ok
            all_chains_ok &= chain_ok
            pairs.append(
                {
                    "lower": list(lo),
                    "upper": list(hi),
                    "lower_cei": rational_json(value[lo]),
                    "upper_cei": rational_json(value[hi]),
                    "chain_length": len(chain),
                    "pair_ok": pair_ok,
                    "chain_ok": chain_ok,
                }
            )
    return MajorizationReport(
        n=n,
        pairs=pairs,
        verdicts={"pairs_monotone": all_pairs_ok, "chains_monotone": all_chains_ok},
        elapsed=time.perf_counter() - start,
    )


# Global ordering ----------------------------------------------------------


@dataclass
class OrderingReport(_Report):
    """CEI ordering of all classes on ``n`` vertices around star and path."""

    n: int
    class_count: int
    levels: list[tuple[Fraction, list[bytes]]]
    verdicts: dict[str, bool]
    findings: list[str] = field(default_factory=list)
    elapsed: float | None = None
    kind: str = "ordering"

    def subject_label(self) -> str:
        return f"n={self.n}"

    def _level_json(self, i: int) -> dict[str, Any]:
        value, codes = self.levels[i]
        return {
            **rational_json(value),
            "classes": len(codes),
            "witnesses": [witness_json(c) for c in codes],
        }

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out = {
            "kind": self.kind,
            "subject": {"n": self.n},
            "class_count": self.class_count,
            "max": self._level_json(-1),
            "second_max": self._level_json(-2),
            "second_min": self._level_json(1),
            "min": self._level_json(0),
            "distinct_values": len(self.levels),
            "verdicts": self.verdicts,
            "findings": self.findings,
        }
        if timing:
            out["elapsed"] = self.elapsed
        return out

    def summary_row(self) -> dict[str, Any]:
        row = super().summary_row()
        row.update(
            class_count=self.class_count,
            min_cei=str(self.levels[0][0]),
            max_cei=str(self.levels[-1][0]),
        )
        return row

    @property
    def second_min(self) -> list[Tree]:
        return [tree_from_code(c) for c in self.levels[1][1]]

    @property
    def second_max(self) -> list[Tree]:
        return [tree_from_code(c) for c in self.levels[-2][1]]


def verify_global_ordering(
    n: int, jobs: int = 1, bound: int | None = None
) -> OrderingReport:
    """Star is the unique CEI maximum and path the unique minimum on ``n >= 6``
    vertices; the runner-up classes at both ends are strictly separated from
    the rest."""
    if n < 6:
        raise TooSmall(f"the ordering needs n >= 6, got n={n}")
    check_bound(n, bound)
    start = time.perf_counter()
    classes = class_table(n, jobs).classes
    grouped: dict[Fraction, list[bytes]] = {}
    for code, v in classes.items():
        grouped.setdefault(v, []).append(code)
    levels = [(v, sorted(grouped[v])) for v in sorted(grouped)]
    star = canonical_code(tree_from_code(b"(" + b"()" * (n - 1) + b")"))
    path = canonical_code(tree_from_code(b"(" * n + b")" * n))
    verdicts = {
        "star_unique_max": levels[-1][1] == [star],
        "path_unique_min": levels[0][1] == [path],
        # Distinct CEI levels: max > second > rest and rest > second-min > min.
        "second_max_strictly_separated": len(levels) >= 4,
        "second_min_strictly_separated": len(levels) >= 4,
    }
    findings = []
    if len(levels[-2][1]) > 1:
        findings.append(f"second maximum shared by {len(levels[-2][1])} classes")
    if len(levels[1][1]) > 1:
        findings.append(f"second minimum shared by {len(levels[1][1])} classes")
    return OrderingReport(
        n=n,
        class_count=len(classes),
        levels=levels,
        verdicts=verdicts,
        findings=findings,
        elapsed=time.perf_counter() - start,
    )


# Transformations ----------------------------------------------------------


@dataclass
class TransformReport(_Report):
    trials: int
    seed: int
    violations_a: list[dict[str, Any]]
    violations_b: list[dict[str, Any]]
    verdicts: dict[str, bool]
    elapsed: float | None = None
    kind: str = "transforms"

    def subject_label(self) -> str:
        return f"trials={self.trials},seed={self.seed}"

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out = {
            "kind": self.kind,
            "subject": {"trials": self.trials, "seed": self.seed},
            "violations_a": self.violations_a,
            "violations_b": self.violations_b,
            "verdicts": self.verdicts,
        }
        if timing:
            out["elapsed"] = self.elapsed
        return out


def verify_transformations(trials: int, seed: int) -> TransformReport:
    """Random instances of both transformations. Moving pendants onto one
    vertex must not lower CEI, and lengthening the longer of two pendant
    paths at the expense of the shorter must not raise it.

    Base trees are uniform over labeled trees with 2..12 vertices; ``a`` and
    ``p >= q`` range over 1..4.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = random.Random(seed)
    start = time.perf_counter()
    bad_a: list[dict[str, Any]] = []
    bad_b: list[dict[str, Any]] = []
    for _ in range(trials):
        base = random_tree(rng.randint(2, 12), rng)
        u = rng.randint(1, base.n)
        a = rng.randint(1, 4)
        g1, g2 = transform_a(base, u, a)
        if cei(g2) < cei(g1):
            bad_a.append({"base": [list(e) for e in base.edges()], "u": u, "a": a})

        base = random_tree(rng.randint(2, 12), rng)
        w = rng.randint(1, base.n)
        q = rng.randint(1, 4)
        p = rng.randint(q, 4)
        gpq, gp1q1 = transform_b(base, w, p, q)
        if cei(gpq) < cei(gp1q1):
            bad_b.append({"base": [list(e) for e in base.edges()], "w": w, "p": p, "q": q})
    return TransformReport(
        trials=trials,
        seed=seed,
        violations_a=bad_a,
        violations_b=bad_b,
        verdicts={"transform_a_holds": not bad_a, "transform_b_holds": not bad_b},
        elapsed=time.perf_counter() - start,
    )


def write_summary_csv(reports: Iterable[_Report], path) -> None:
    import csv

    cols = ["kind", "subject", "labeled_count", "class_count", "min_cei", "max_cei", "ok"]
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        for rep in reports:
            writer.writerow(rep.summary_row())

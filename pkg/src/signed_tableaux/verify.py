"""
Exhaustive identity checks over B_n or over a tableau class, reported
with replayable counterexamples.

Each check walks its whole domain and appends one machine-readable
failure record (window plus tableau document where applicable) per
violated instance, so a red report can be replayed directly.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bruhat import apply_cover, classify_cover, weak_covers
from .perms import (
    alcr_formula_value,
    alignment_count,
    alignment_sets,
    basic_stats,
    crossing_count,
    enumerate_group,
    inversion_count,
)
from .tableaux import enumerate_tableaux, filling_stats, to_doc, validate
from .zigzag import (
    classify_zeros,
    pt_bt_convert,
    zeta,
    zeta_bare,
    zeta_bare_inverse,
    zeta_inverse,
)


@dataclass
class VerificationReport:
    theorem: str
    n: int
    instances: int
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "instances": self.instances,
            "failures": self.failures,
            "passed": self.passed,
            "elapsed": self.elapsed,
        }


def _check_stats_dictionary(n, report):
    for t in enumerate_tableaux(n, "permutation"):
        sigma = zeta(t)
        fs = filling_stats(t)
        st = basic_stats(sigma)
        drop_rows = {-r for r in t.shape.rows_top_to_bottom() if r < 0}
        ok = (
            st.wex == fs.row
            and crossing_count(sigma) == fs.so
            and st.neg == fs.diag
            and drop_rows == {i for i in range(1, n + 1) if sigma(i) < i}
        )
        report.instances += 1
        if not ok:
            report.failures.append({"window": str(sigma), "tableau": to_doc(t)})


def _check_alignments(n, report):
    for t in enumerate_tableaux(n, "permutation"):
        sigma = zeta(t)
        nest, en, ne = alignment_sets(sigma)
        fs = filling_stats(t)
        zt = classify_zeros(t)
        ok = (
            len(nest) == zt.zero_ee + zt.zero_nn
            and len(en) == zt.zero_en
            and len(ne) == fs.two
        )
        report.instances += 1
        if not ok:
            report.failures.append({"window": str(sigma), "tableau": to_doc(t)})


def _check_sum_al_cr(n, report):
    for sigma in enumerate_group(n):
        report.instances += 1
        if alignment_count(sigma) + crossing_count(sigma) != alcr_formula_value(sigma):
            report.failures.append({"window": str(sigma)})


def _check_inversion_formula(n, report):
    for t in enumerate_tableaux(n, "permutation"):
        sigma = zeta(t)
        zt = classify_zeros(t)
        report.instances += 1
        if inversion_count(sigma) != 2 * (zt.zero_ee + zt.zero_nn) + filling_stats(t).one:
            report.failures.append({"window": str(sigma), "tableau": to_doc(t)})


def _check_inversion_corollary(n, report):
    for sigma in enumerate_group(n):
        nest, _, _ = alignment_sets(sigma)
        expected = 2 * len(nest) + crossing_count(sigma) + n - basic_stats(sigma).wex
        report.instances += 1
        if inversion_count(sigma) != expected:
            report.failures.append({"window": str(sigma)})


def _check_cycles(n, report):
    for t in enumerate_tableaux(n, "bare"):
        fs = filling_stats(t)
        report.instances += 1
        if basic_stats(zeta_bare(t)).cyc != fs.dess + fs.zerorow:
            report.failures.append({"window": str(zeta_bare(t)), "tableau": to_doc(t)})


def _check_covers(n, report):
    for t in enumerate_tableaux(n, "permutation"):
        sigma = zeta(t)
        zt = classify_zeros(t)
        before = 2 * (zt.zero_ee + zt.zero_nn) + filling_stats(t).one
        for i, target in weak_covers(sigma):
            report.instances += 1
            try:
                classify_cover(t, i)
                out = apply_cover(t, i)
            except (ValueError, RuntimeError) as exc:
                report.failures.append(
                    {"window": str(sigma), "gen": i, "error": str(exc)}
                )
                continue
            zt2 = classify_zeros(out)
            after = 2 * (zt2.zero_ee + zt2.zero_nn) + filling_stats(out).one
            ok = (
                not validate(out)
                and out == zeta_inverse(target)
                and after == before + 1
            )
            if not ok:
                report.failures.append(
                    {"window": str(sigma), "gen": i, "tableau": to_doc(out)}
                )


def _check_roundtrips(n, report):
    for sigma in enumerate_group(n):
        report.instances += 1
        ok = zeta(zeta_inverse(sigma)) == sigma
        ok = ok and zeta_bare(zeta_bare_inverse(sigma)) == sigma
        if not ok:
            report.failures.append({"window": str(sigma)})
    if n <= 4:
        for kind in ("permutation", "bare"):
            for t in enumerate_tableaux(n, kind):
                report.instances += 1
                if pt_bt_convert(pt_bt_convert(t)) != t:
                    report.failures.append({"tableau": to_doc(t)})


THEOREMS = {
    "stats-dictionary": (_check_stats_dictionary, 5),
    "alignments": (_check_alignments, 5),
    "sum-al-cr": (_check_sum_al_cr, 6),
    "inversion-formula": (_check_inversion_formula, 5),
    "inversion-corollary": (_check_inversion_corollary, 6),
    "cycles": (_check_cycles, 5),
    "covers": (_check_covers, 5),
    "roundtrips": (_check_roundtrips, 5),
}


def run_verification(theorem: str, n: int) -> VerificationReport:
    if theorem not in THEOREMS:
        raise ValueError(
            f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}"
        )
    check, bound = THEOREMS[theorem]
    if not 1 <= n <= bound:
        raise ValueError(f"rank {n} outside 1..{bound} for {theorem}")
    report = VerificationReport(theorem, n, 0)
    start = time.perf_counter()
    check(n, report)
    report.elapsed = time.perf_counter() - start
    return report

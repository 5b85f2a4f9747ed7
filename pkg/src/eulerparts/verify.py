"""Finite-range verification of the partition identities.

Every checker enumerates both sides of an identity over an explicit grid
and returns a :class:`VerificationReport`; nothing is sampled, so a "pass"
means the identity holds everywhere on the grid.  The registry at the end
drives the command line.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bijections import (binary_inverse, binary_map, pairing_inverse,
                         pairing_map, sylvester_distinct_to_odd,
                         sylvester_odd_to_distinct)
from .enumeration import (UNBOUNDED, BoundSequence, CongruenceFilter,
                          bounded_partitions, count_by_statistic, parse_bounds,
                          parse_phi)
from .partition import Partition
from .series import (ALT_BY_WEIGHT, FOUR_PARAM, HALF_CELLS, ODD_BY_WEIGHT,
                     ROW_TOTALS, binary_gf, boulet_product, enumerated_series,
                     half_cells_product, pairing_gf, partition_gf,
                     restricted_boulet_product, row_totals_product,
                     series_equal)


@dataclass
class VerificationReport:
    """Outcome of one verification run.

    Serialises to ``{theorem, params, status, counterexample?, elapsed_ms}``
    plus ``skipped`` and ``notes`` when they carry information.
    """

    theorem: str
    params: dict
    status: str = "pass"
    counterexample: dict | None = None
    elapsed_ms: int = 0
    skipped: int = 0
    notes: list[str] = field(default_factory=list)

    def ok(self) -> bool:
        return self.status == "pass"

    def fail(self, **counterexample):
        self.status = "fail"
        if self.counterexample is None:
            self.counterexample = counterexample

    def to_dict(self) -> dict:
        out = {"theorem": self.theorem, "params": self.params,
               "status": self.status, "elapsed_ms": self.elapsed_ms}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.skipped:
            out["skipped"] = self.skipped
        if self.notes:
            out["notes"] = self.notes
        return out

    def summary(self) -> str:
        head = "%s %s (%d ms)" % (self.status.upper(), self.theorem, self.elapsed_ms)
        if self.counterexample is not None:
            head += "  counterexample: %s" % (self.counterexample,)
        for note in self.notes:
            head += "\n  note: %s" % note
        return head


def _finish(report: VerificationReport, started: float) -> VerificationReport:
    report.elapsed_ms = int((time.perf_counter() - started) * 1000)
    return report


def _mono_dict(exps, names) -> dict:
    return {n: e for n, e in zip(names, exps)}


# -- statistic distributions and bijections ---------------------------------

def verify_bessenrodt(max_n: int = 30) -> VerificationReport:
    """Distinct partitions counted by alternating sum match odd-part
    partitions counted by length, for every n up to ``max_n``."""
    started = time.perf_counter()
    report = VerificationReport("bessenrodt", {"max_n": max_n})
    distinct = BoundSequence.constant(1)
    odds = BoundSequence.odds_evens(UNBOUNDED, 0)
    for n in range(max_n + 1):
        left = count_by_statistic(n, Partition.alt_sum, distinct)
        right = count_by_statistic(n, Partition.odd_count, odds)
        if left != right:
            report.fail(n=n, by_alt_sum=left, by_length=right)
            break
    return _finish(report, started)


def verify_sylvester(max_n: int = 25) -> VerificationReport:
    """The fishhook map is a bijection distinct -> odd for every weight up
    to ``max_n``, inverts correctly, and satisfies

    * first part of the input = length of the image + (largest image part - 1)/2
    * alternating sum of the input = number of (odd) parts... of the image
      that is, l_a(input) = l_o(image).
    """
    started = time.perf_counter()
    report = VerificationReport("sylvester", {"max_n": max_n})
    distinct = BoundSequence.constant(1)
    odds = BoundSequence.odds_evens(UNBOUNDED, 0)
    for n in range(max_n + 1):
        images = []
        for lam in bounded_partitions(n, distinct):
            tau = sylvester_distinct_to_odd(lam)
            if any(p % 2 == 0 for p in tau.parts):
                report.fail(n=n, input=str(lam), image=str(tau), detail="even part in image")
                return _finish(report, started)
            if sylvester_odd_to_distinct(tau) != lam:
                report.fail(n=n, input=str(lam), image=str(tau), detail="round trip failed")
                return _finish(report, started)
            first = lam.parts[0] if lam.parts else 0
            expected = len(tau) + (tau.parts[0] - 1) // 2 if tau.parts else 0
            if first != expected:
                report.fail(n=n, input=str(lam), image=str(tau), detail="hook size property failed")
                return _finish(report, started)
            if lam.alt_sum() != tau.odd_count():
                report.fail(n=n, input=str(lam), image=str(tau), detail="statistic property failed")
                return _finish(report, started)
            images.append(tau)
        target = list(bounded_partitions(n, odds))
        if sorted(p.parts for p in images) != sorted(p.parts for p in target):
            report.fail(n=n, detail="images do not exhaust the odd partitions")
            return _finish(report, started)
    return _finish(report, started)


def _verify_exchange(mapper, inverse, source_bounds, target_bounds,
                     max_n: int, ms, report: VerificationReport) -> VerificationReport:
    started = time.perf_counter()
    for m in ms:
        src = source_bounds(m)
        dst = target_bounds(m)
        for n in range(max_n + 1):
            source = list(bounded_partitions(n, src))
            target = list(bounded_partitions(n, dst))
            left = count_by_statistic(n, Partition.alt_sum, src)
            right = count_by_statistic(n, Partition.odd_count, dst)
            if left != right:
                report.fail(m=m, n=n, by_alt_sum=left, by_odd_count=right)
                return _finish(report, started)
            seen = set()
            for alpha in source:
                beta, _ = mapper(alpha, m)
                if not dst.admits(beta):
                    report.fail(m=m, n=n, input=str(alpha), image=str(beta),
                                detail="image violates the target caps")
                    return _finish(report, started)
                if alpha.alt_sum() != beta.odd_count():
                    report.fail(m=m, n=n, input=str(alpha), image=str(beta),
                                detail="statistic not exchanged")
                    return _finish(report, started)
                if inverse(beta, m) != alpha:
                    report.fail(m=m, n=n, input=str(alpha), image=str(beta),
                                detail="inverse round trip failed")
                    return _finish(report, started)
                seen.add(beta)
            if len(seen) != len(source) or seen != set(target):
                report.fail(m=m, n=n, detail="images do not exhaust the target family")
                return _finish(report, started)
    return _finish(report, started)


def verify_pairing(max_n: int = 22, ms=(0, 1, 2, 3)) -> VerificationReport:
    """The pairing map is a statistic-exchanging bijection from "every part
    at most 2m+1 times" onto "even parts at most m times"."""
    report = VerificationReport("pairing", {"max_n": max_n, "m": list(ms)})
    return _verify_exchange(
        pairing_map, pairing_inverse,
        lambda m: BoundSequence.constant(2 * m + 1),
        lambda m: BoundSequence.evens_only(m),
        max_n, ms, report)


def verify_binary(max_n: int = 22, ms=(0, 1, 2, 3)) -> VerificationReport:
    """The binary map exchanges the statistics within the family "even parts
    at most 2m+1 times"."""
    report = VerificationReport("binary", {"max_n": max_n, "m": list(ms)})
    return _verify_exchange(
        binary_map, binary_inverse,
        lambda m: BoundSequence.evens_only(2 * m + 1),
        lambda m: BoundSequence.evens_only(2 * m + 1),
        max_n, ms, report)


def verify_pairing_refined(max_n: int = 20, phi_specs=("1", "i")) -> VerificationReport:
    """Refinement of the pairing map under a size-dependent cap phi.

    Sources: every part i at most 2 phi(i) + 1 times, grouped by
    (alternating sum, largest part of odd multiplicity).  Targets: even
    parts 2i at most phi(i) times, at least one odd part, grouped by
    (number of odd parts, that number + (largest odd part - 1)/2).
    Inputs with no odd multiplicity (so the second statistic is 0) fall
    outside the refinement and are counted as skipped.
    """
    started = time.perf_counter()
    report = VerificationReport("pairing-refined",
                                {"max_n": max_n, "phi": list(phi_specs)})
    for spec in phi_specs:
        phi = parse_phi(spec)
        src = BoundSequence.from_function(lambda s, phi=phi: 2 * phi(s) + 1,
                                          "phi:2*(%s)+1" % spec)
        dst = BoundSequence.from_function(
            lambda s, phi=phi: phi(s // 2) if s % 2 == 0 else UNBOUNDED,
            "even phi:%s" % spec)
        for n in range(max_n + 1):
            left: dict[tuple, int] = {}
            for alpha in bounded_partitions(n, src):
                t = alpha.largest_odd_multiplicity_part()
                if t == 0:
                    report.skipped += 1
                    continue
                key = (alpha.alt_sum(), t)
                left[key] = left.get(key, 0) + 1
                beta, _ = pairing_map(alpha)
                if not dst.admits(beta):
                    report.fail(phi=spec, n=n, input=str(alpha), image=str(beta),
                                detail="image violates the phi caps")
                    return _finish(report, started)
                k = beta.odd_count()
                t_image = k + (beta.largest_odd_part() - 1) // 2
                if (k, t_image) != key:
                    report.fail(phi=spec, n=n, input=str(alpha), image=str(beta),
                                detail="refined statistics disagree")
                    return _finish(report, started)
            right: dict[tuple, int] = {}
            for beta in bounded_partitions(n, dst):
                k = beta.odd_count()
                if k == 0:
                    continue
                key = (k, k + (beta.largest_odd_part() - 1) // 2)
                right[key] = right.get(key, 0) + 1
            if left != right:
                report.fail(phi=spec, n=n, left=_str_keys(left), right=_str_keys(right))
                return _finish(report, started)
    report.notes.append("inputs with all multiplicities even fall outside the refinement")
    return _finish(report, started)


def _str_keys(d: dict) -> dict:
    return {str(k): v for k, v in sorted(d.items())}


# -- equivalent bound sequences ---------------------------------------------

def verify_andrews(bounds_a: BoundSequence | str, bounds_b: BoundSequence | str,
                   max_n: int = 30, cutoff: int | None = None) -> VerificationReport:
    """Two cap sequences admit equally many partitions of every n iff their
    size * strict-cap products agree as multisets; check both statements up
    to ``max_n`` (products up to ``cutoff``, default ``max_n + 1``)."""
    started = time.perf_counter()
    a = parse_bounds(bounds_a) if isinstance(bounds_a, str) else bounds_a
    b = parse_bounds(bounds_b) if isinstance(bounds_b, str) else bounds_b
    if cutoff is None:
        cutoff = max_n + 1
    report = VerificationReport(
        "andrews", {"a": a.spec, "b": b.spec, "max_n": max_n, "cutoff": cutoff})
    prod_a = a.strict_products(cutoff)
    prod_b = b.strict_products(cutoff)
    equivalent = prod_a == prod_b
    report.notes.append("products %s: %s vs %s"
                        % ("agree" if equivalent else "differ", prod_a, prod_b))
    mismatch = None
    for n in range(max_n + 1):
        ca = sum(1 for _ in bounded_partitions(n, a))
        cb = sum(1 for _ in bounded_partitions(n, b))
        if ca != cb:
            mismatch = {"n": n, "count_a": ca, "count_b": cb}
            break
    if equivalent and mismatch:
        report.fail(detail="products agree but counts differ", **mismatch)
    elif not equivalent:
        if mismatch:
            report.fail(**mismatch)
        else:
            report.fail(detail="products differ; the first count difference "
                               "lies beyond max_n")
    return _finish(report, started)


# -- series identities --------------------------------------------------------

def verify_partition_gf(max_n: int = 30) -> VerificationReport:
    """Coefficient of q^n in 1/(q;q)_inf equals the number of partitions."""
    started = time.perf_counter()
    report = VerificationReport("partition-gf", {"max_n": max_n})
    gf = partition_gf(max_n)
    for n in range(max_n + 1):
        counted = sum(1 for _ in bounded_partitions(n))
        coeff = gf.coefficient((0, n))
        if counted != coeff:
            report.fail(n=n, enumerated=counted, coefficient=coeff)
            break
    return _finish(report, started)


def verify_boulet(trunc: int = 16) -> VerificationReport:
    """Four-parameter weight sum over all partitions equals Boulet's product."""
    started = time.perf_counter()
    report = VerificationReport("boulet", {"trunc": trunc})
    lhs = enumerated_series(trunc, FOUR_PARAM)
    rhs = boulet_product(trunc)
    cmp = series_equal(lhs, rhs)
    if not cmp:
        report.fail(monomial=_mono_dict(cmp.exponents, lhs.names),
                    enumerated=cmp.left, product=cmp.right)
    return _finish(report, started)


def verify_boulet_restricted(i: int = 0, k: int = 1,
                             bounds: BoundSequence | str = "1:1,2:3",
                             trunc: int = 20) -> VerificationReport:
    """Restricted four-parameter product against direct enumeration.

    For i != 0 the enumeration uses the side conditions (even length, part i
    at most once) and both readings of whether the empty partition belongs
    to the family are reported when they disagree.
    """
    started = time.perf_counter()
    bseq = parse_bounds(bounds) if isinstance(bounds, str) else bounds
    report = VerificationReport(
        "boulet-restricted",
        {"i": i, "k": k, "bounds": bseq.spec, "trunc": trunc})
    filt = CongruenceFilter(k, i, even_length=(i != 0), first_part_once=(i != 0))
    rhs = restricted_boulet_product(i, k, bseq, trunc)
    lhs = enumerated_series(trunc, FOUR_PARAM, bseq, filt)
    cmp = series_equal(lhs, rhs)
    if cmp:
        report.notes.append("matches with the empty partition included")
        return _finish(report, started)
    report.fail(monomial=_mono_dict(cmp.exponents, lhs.names),
                enumerated=cmp.left, product=cmp.right)
    if i != 0:
        bare = enumerated_series(trunc, FOUR_PARAM, bseq, filt, include_empty=False)
        cmp2 = series_equal(bare, rhs)
        if cmp2:
            report.notes.append("matches with the empty partition excluded")
        else:
            report.notes.append(
                "empty partition excluded: still differs at %s (%d vs %d)"
                % (_mono_dict(cmp2.exponents, lhs.names), cmp2.left, cmp2.right))
    return _finish(report, started)


def verify_rows_product(bounds: BoundSequence | str = "all:3",
                        trunc: int = 24) -> VerificationReport:
    """Row-totals weight sum under the caps equals its two-parameter product."""
    started = time.perf_counter()
    bseq = parse_bounds(bounds) if isinstance(bounds, str) else bounds
    report = VerificationReport("rows-product", {"bounds": bseq.spec, "trunc": trunc})
    lhs = enumerated_series(trunc, ROW_TOTALS, bseq)
    rhs = row_totals_product(bseq, trunc)
    cmp = series_equal(lhs, rhs)
    if not cmp:
        report.fail(monomial=_mono_dict(cmp.exponents, lhs.names),
                    enumerated=cmp.left, product=cmp.right)
    return _finish(report, started)


def verify_halves_product(bounds: BoundSequence | str = "even:1",
                          trunc: int = 24) -> VerificationReport:
    """Half-cells weight sum under the caps equals its two-parameter product."""
    started = time.perf_counter()
    bseq = parse_bounds(bounds) if isinstance(bounds, str) else bounds
    report = VerificationReport("halves-product", {"bounds": bseq.spec, "trunc": trunc})
    lhs = enumerated_series(trunc, HALF_CELLS, bseq)
    rhs = half_cells_product(bseq, trunc)
    cmp = series_equal(lhs, rhs)
    if not cmp:
        report.fail(monomial=_mono_dict(cmp.exponents, lhs.names),
                    enumerated=cmp.left, product=cmp.right)
    return _finish(report, started)


def _verify_gf_triple(report: VerificationReport, ms, trunc: int,
                      left_bounds, right_bounds, closed) -> VerificationReport:
    started = time.perf_counter()
    for m in ms:
        by_alt = enumerated_series(trunc, ALT_BY_WEIGHT, left_bounds(m))
        by_odd = enumerated_series(trunc, ODD_BY_WEIGHT, right_bounds(m))
        gf = closed(m, trunc)
        for tag, other in (("enumerated by odd parts", by_odd), ("closed form", gf)):
            cmp = series_equal(by_alt, other)
            if not cmp:
                report.fail(m=m, monomial=_mono_dict(cmp.exponents, by_alt.names),
                            enumerated_by_alt_sum=cmp.left, other=cmp.right,
                            other_side=tag)
                return _finish(report, started)
    return _finish(report, started)


def verify_pairing_gf(ms=(0, 1, 2), trunc: int = 24) -> VerificationReport:
    """Three-way identity: partitions with every part at most 2m+1 times by
    (alternating sum, weight) = partitions with even parts at most m times
    by (odd-part count, weight) = the closed-form product."""
    report = VerificationReport("pairing-gf", {"m": list(ms), "trunc": trunc})
    return _verify_gf_triple(
        report, ms, trunc,
        lambda m: BoundSequence.constant(2 * m + 1),
        lambda m: BoundSequence.evens_only(m),
        pairing_gf)


def verify_binary_gf(ms=(0, 1, 2), trunc: int = 24) -> VerificationReport:
    """Three-way identity for the family "even parts at most 2m+1 times":
    by (alternating sum, weight) = by (odd-part count, weight) = closed form."""
    report = VerificationReport("binary-gf", {"m": list(ms), "trunc": trunc})
    return _verify_gf_triple(
        report, ms, trunc,
        lambda m: BoundSequence.evens_only(2 * m + 1),
        lambda m: BoundSequence.evens_only(2 * m + 1),
        binary_gf)


# -- registry ------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    """Registry entry: the runner plus the grids ``verify all`` uses."""

    runner: object
    default_runs: tuple[dict, ...]
    flags: tuple[str, ...]
    help: str


REGISTRY: dict[str, Check] = {
    "bessenrodt": Check(verify_bessenrodt, ({},), ("max_n",),
                        "distinct by alternating sum vs odd parts by length"),
    "sylvester": Check(verify_sylvester, ({},), ("max_n",),
                       "fishhook bijection, inverse and its two statistics"),
    "andrews": Check(verify_andrews,
                     ({"bounds_a": "all:2s", "bounds_b": "even:1s"},
                      {"bounds_a": "all:4s", "bounds_b": "even:2s"},
                      {"bounds_a": "all:6s", "bounds_b": "even:3s"}),
                     ("bounds_a", "bounds_b", "max_n", "cutoff"),
                     "equivalence of cap sequences via strict products"),
    "boulet": Check(verify_boulet, ({},), ("trunc",),
                    "four-parameter product over all partitions"),
    "boulet-restricted": Check(verify_boulet_restricted,
                               ({"i": 0, "k": 1, "bounds": "1:1,2:3"},
                                {"i": 1, "k": 2, "bounds": "3:1,5:3"},
                                {"i": 2, "k": 3, "bounds": "5:1,8:1"}),
                               ("i", "k", "bounds", "trunc"),
                               "four-parameter product over a progression with caps"),
    "rows-product": Check(verify_rows_product,
                          ({"bounds": "all:3"}, {"bounds": "even:3"},
                           {"bounds": "1:1,3:5"}),
                          ("bounds", "trunc"),
                          "two-parameter product for the row-totals weight"),
    "halves-product": Check(verify_halves_product,
                            ({"bounds": "even:1"}, {"bounds": "all:2"},
                             {"bounds": "2:0,5:3"}),
                            ("bounds", "trunc"),
                            "two-parameter product for the half-cells weight"),
    "pairing": Check(verify_pairing, ({},), ("max_n", "ms"),
                     "bound-trading bijection (all parts capped)"),
    "binary": Check(verify_binary, ({},), ("max_n", "ms"),
                    "bound-preserving bijection (even parts capped)"),
    "pairing-gf": Check(verify_pairing_gf, ({},), ("ms", "trunc"),
                        "three-way generating function identity (pairing)"),
    "binary-gf": Check(verify_binary_gf, ({},), ("ms", "trunc"),
                       "three-way generating function identity (binary)"),
    "pairing-refined": Check(verify_pairing_refined, ({},), ("max_n", "phi_specs"),
                             "refined pairing statistics under a cap function"),
    "partition-gf": Check(verify_partition_gf, ({},), ("max_n",),
                          "Euler product against raw enumeration"),
}

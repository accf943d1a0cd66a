"""Sweep a box of extension parameters and emit certified catalog entries."""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from typing import Iterator, Optional

from ..bundles import ExtensionBundle, ExistenceNote
from ..criteria.necessary import check_brosius
from ..criteria.valma import check_valma, check_valmae, search_valma_witness, search_valmae_witness
from ..divisors import DivisorClass, RuledBase
from ..invariants import scroll_invariants
from ..schema import SearchBoxDocument, bundle_from_spec
from ..verdict import DomainError, Verdict
from .catalog import CatalogEntry

__all__ = ["iter_tuples", "build_bundle", "evaluate_tuple", "enumerate_candidates", "revalidate"]

log = logging.getLogger(__name__)

PARAMS = ("e", "a_l", "b_l", "a_m", "b_m", "w", "lm")


def iter_tuples(box: SearchBoxDocument) -> Iterator[tuple[int, ...]]:
    """Every parameter tuple in the box, in lexicographic order."""
    ranges = [range(getattr(box, p)[0], getattr(box, p)[1] + 1) for p in PARAMS]
    return itertools.product(*ranges)


def build_bundle(box: SearchBoxDocument, params: tuple[int, ...]) -> ExtensionBundle:
    e, a_l, b_l, a_m, b_m, w, lm = params
    if box.base.kind == "rational":
        base = RuledBase.hirzebruch(e)
    else:
        base = RuledBase.elliptic(e, box.base.decomposable)
    gp = box.general_position if box.general_position is not None else (lm == 1)
    label = "box(" + ",".join(f"{k}={v}" for k, v in zip(PARAMS, params)) + ")"
    return ExtensionBundle(base, DivisorClass(a_l, b_l), DivisorClass(a_m, b_m), w, lm, gp, label)


def _brosius_refutes(E: ExtensionBundle) -> bool:
    if not E.base.is_rational or E.c1.a != 3:
        return False
    return check_brosius(E.base.e, E.c1.b, E.c2).verdict is Verdict.REFUTED


def evaluate_tuple(
    box: SearchBoxDocument, params: tuple[int, ...], timestamp: Optional[str] = None
) -> tuple[Optional[CatalogEntry], str]:
    """Certify one parameter tuple; returns the entry (or None) and a short reason."""
    try:
        E = build_bundle(box, params)
    except DomainError as exc:
        return None, f"invalid: {exc}"
    if box.require_existence and E.existence_note is not ExistenceNote.SUPPORTED:
        return None, "existence unverified"
    if _brosius_refutes(E):
        return None, "refuted by the c1 = 3C0 + tf necessary conditions"
    if E.base.is_rational:
        criterion = "valma"
        report = search_valma_witness(E, box.x_max, box.z_max)
    else:
        criterion = "valmae"
        report = search_valmae_witness(E, box.x_max, box.z_max)
    if report is None:
        return None, "no witness in bounds"
    entry = CatalogEntry(
        spec=E.to_spec(),
        criterion=criterion,
        witness=report.witness,
        invariants=scroll_invariants(E),
        digest=report.digest(),
        timestamp=timestamp,
    )
    return entry, "certified"


def _worker(job):
    box, params, timestamp = job
    return params, evaluate_tuple(box, params, timestamp)


def enumerate_candidates(
    box: SearchBoxDocument, *, jobs: int = 1, deterministic: bool = False
) -> Iterator[CatalogEntry]:
    """Certified entries for the box, in lexicographic tuple order regardless of ``jobs``."""
    timestamp = None if deterministic else datetime.now(timezone.utc).isoformat(timespec="seconds")
    work = ((box, params, timestamp) for params in iter_tuples(box))
    if jobs > 1:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_worker, work, chunksize=64)
    else:
        pool = None
        results = map(_worker, work)
    try:
        for params, (entry, reason) in results:
            if entry is None:
                log.debug("%s: %s", params, reason)
                continue
            yield entry
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def revalidate(entry: CatalogEntry) -> Verdict:
    """Re-run the entry's criterion at its witness."""
    E = bundle_from_spec(entry.spec)
    if entry.witness is None:
        return Verdict.INCONCLUSIVE
    x, z = entry.witness
    if entry.criterion == "valma":
        return check_valma(E, x, z).verdict
    if entry.criterion == "valmae":
        return check_valmae(E, x, z).verdict
    raise DomainError(f"unknown criterion {entry.criterion!r}")

"""Runs the named checks of the ``verify`` command on one instance."""
from __future__ import annotations

from typing import Optional

from ..codes import LinearCode
from ..enums.verify import VerifyTarget
from ..harmonic.functions import HarmonicFunction
from ..harmonic.subsets import KSubset
from ..matroid import check_subset_cap
from ..observability.logging import get_logger
from ..utils.helpers import mask_to_subset
from ..verify import (
    VerificationReport,
    verify_btf,
    verify_duality,
    verify_greene,
    verify_lemma_slices,
    verify_macwilliams_classical,
    verify_macwilliams_harmonic,
    verify_reinterpretation,
    verify_sqrt2_reduction,
)

logger = get_logger(__name__)


def lemma_reports(f: HarmonicFunction, subset: Optional[KSubset], max_n: int) -> list[VerificationReport]:
    """The slice identity on one subset, or on every subset of E when none is given."""
    if subset is not None:
        return [verify_lemma_slices(f, subset)]
    check_subset_cap(f.n, max_n)
    return [verify_lemma_slices(f, mask_to_subset(mask)) for mask in range(1 << f.n)]


def run_target(
    target: VerifyTarget,
    code: LinearCode,
    f: HarmonicFunction,
    subset: Optional[KSubset],
    max_n: int,
    max_words: int,
) -> list[VerificationReport]:
    f.require_ground_size(code.n)
    if target is VerifyTarget.DUALITY:
        return [verify_duality(code.matroid, f, max_n=max_n)]
    if target is VerifyTarget.GREENE:
        return [verify_greene(code, f, max_n=max_n, max_words=max_words)]
    if target is VerifyTarget.MACWILLIAMS:
        reports = [verify_macwilliams_harmonic(code, f, max_words=max_words)]
        if f.d == 0:
            reports.append(verify_macwilliams_classical(code, max_words=max_words))
        if code.q == 2:
            reports.append(verify_sqrt2_reduction(code, f, max_words=max_words))
        return reports
    if target is VerifyTarget.BTF:
        return [verify_btf(code, f, max_n=max_n, max_words=max_words)]
    if target is VerifyTarget.REINTERPRETATION:
        return [verify_reinterpretation(code, f, max_n=max_n, max_words=max_words)]
    if target is VerifyTarget.LEMMA_SLICES:
        return lemma_reports(f, subset, max_n)
    reports = []
    for each in VerifyTarget:
        if each is not VerifyTarget.ALL:
            reports.extend(run_target(each, code, f, subset, max_n, max_words))
    logger.info("ran %d checks on %r", len(reports), code)
    return reports

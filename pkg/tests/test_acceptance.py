"""Acceptance gate: every criterion runs at its stated budget and prints one
pass/fail line (visible with pytest -s or in the failure report)."""

import time

import pytest

from bundlecalc.acceptance import CRITERIA


@pytest.mark.parametrize("ident,title,budget,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(ident, title, budget, fn):
    start = time.perf_counter()
    try:
        detail = fn()
    except AssertionError as exc:
        print(f"[FAIL] {ident} {title}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    print(f"[PASS] {ident} {title} ({elapsed:.2f}s): {detail}")
    assert elapsed <= budget, f"{ident} took {elapsed:.2f}s, budget {budget:.0f}s"

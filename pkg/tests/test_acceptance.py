"""Acceptance gate: twelve criteria, each an exact check under a wall-clock bound.

Every criterion prints one ``PASS``/``FAIL`` line. Run with ``pytest -s`` or as a
script (``python tests/test_acceptance.py``) to see them inline; pytest also
repeats them in its terminal summary.
"""

from __future__ import annotations

import sys
import time

import pytest

from eqgeom import verify

# (number, check tag, bound in seconds, label)
CRITERIA = [
    (1, "config-counts", 1.0, "configuration counts"),
    (2, "prop-coll-graph", 30.0, "collinearity graph diameter and witness"),
    (3, "prop2", 120.0, "maximal cliques and the one-or-all axiom"),
    (4, "lemma-lambda", 30.0, "lambda formula and equality pattern"),
    (5, "prop-conn", 60.0, "pencil connectivity"),
    (6, "theorem-aut", 300.0, "automorphism orders and classification"),
    (7, "exceptional-maps", 10.0, "exceptional maps"),
    (8, "complement-map", 5.0, "complement map at (8,2)"),
    (9, "double-perp", 60.0, "double perp of adjacent pairs"),
    (10, "codes-bonis", 30.0, "equidistant codes"),
    (11, "lemma-John", 60.0, "generalised Johnson graphs"),
    (12, "qary-example", 120.0, "q-ary example at (5,2)"),
]

# Criterion 6 is red: at (8,2) some automorphisms need two exceptional factors.
KNOWN_RED = {6: "1,411,200 elements of Aut at (8,2) have no single-exceptional decomposition"}


def evaluate(number: int, tag: str, bound: float, label: str) -> tuple[bool, str]:
    verify.clear_caches()
    start = time.perf_counter()
    result = verify.run_check(tag, 12, 0)
    elapsed = time.perf_counter() - start
    ok = result.passed and elapsed < bound
    why = [line for line in result.details if line.startswith("FAIL")]
    if elapsed >= bound:
        why.append(f"took {elapsed:.1f} s, bound {bound:.0f} s")
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d} [{tag}] {label}: {elapsed:.2f} s (bound {bound:.0f} s)"
    if why:
        line += "\n" + "\n".join(f"       {w}" for w in why)
    return ok, line


def _params():
    for number, tag, bound, label in CRITERIA:
        marks = [pytest.mark.xfail(strict=True, reason=KNOWN_RED[number])] if number in KNOWN_RED else []
        if bound > 60:
            marks.append(pytest.mark.slow)
        yield pytest.param(number, tag, bound, label, marks=marks, id=f"c{number:02d}-{tag}")


@pytest.mark.parametrize("number,tag,bound,label", list(_params()))
def test_criterion(number, tag, bound, label, request, capsys):
    ok, line = evaluate(number, tag, bound, label)
    lines = getattr(request.config, "acceptance_lines", None)
    if lines is None:
        lines = request.config.acceptance_lines = []
    lines.append((number, line))
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

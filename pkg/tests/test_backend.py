import random
import subprocess
import sys

import pytest

from seaweeds import backend
from seaweeds import _exactkernel_py as pure

compiled = pytest.importorskip("seaweeds._exactkernel", reason="compiled kernel not built")


def random_cases(seed, count=120):
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        mag = rng.choice((1, 3, 10**6))
        rows = [[rng.randint(-mag, mag) for _ in range(n)] for _ in range(m)]
        # sprinkle in rank deficiency
        if m > 1 and rng.random() < 0.4:
            scale = rng.randint(-2, 2)
            rows[-1] = [scale * x for x in rows[0]]
        cases.append(rows)
    cases.append([[0, 0], [0, 0]])
    cases.append([])
    return cases


def test_backends_agree_on_rank():
    for rows in random_cases(1):
        assert pure.rank_int_rows(rows) == compiled.rank_int_rows(rows)


def test_backends_agree_on_rref():
    for rows in random_cases(2):
        assert pure.rref_int_rows(rows) == compiled.rref_int_rows(rows)


def test_rref_output_is_primitive_with_positive_pivot():
    from math import gcd

    for rows in random_cases(3, count=40):
        pivots, out = pure.rref_int_rows(rows)
        for piv, row in zip(pivots, out):
            assert row[piv] > 0
            g = 0
            for v in row:
                g = gcd(g, abs(v))
            assert g in (0, 1)


def test_active_backend_is_exposed():
    assert backend.BACKEND_NAME in ("c", "python")


def test_backend_env_override():
    code = (
        "import seaweeds.backend as b; print(b.BACKEND_NAME)"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"SEAWEEDS_BACKEND": "python", "PATH": "/usr/bin:/bin"},
    )
    assert out.stdout.strip() == "python"

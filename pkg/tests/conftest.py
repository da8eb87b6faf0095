import json
import subprocess
import sys
from itertools import combinations

import pytest

from matroid_ears.corpus import corpus, explicit_corpus
from matroid_ears.matroid import Matroid


@pytest.fixture(scope="session")
def all_matroids():
    return corpus()


@pytest.fixture(scope="session")
def explicit_matroids():
    return explicit_corpus()


def brute_rank(M: Matroid, S) -> int:
    """Largest independent subset of S, found by trying subsets."""
    S = tuple(S)
    bases = [set(b) for b in M.bases()]
    for k in range(len(S), -1, -1):
        for T in combinations(S, k):
            if any(set(T) <= b for b in bases):
                return k
    return 0


@pytest.fixture
def run_cli():
    def run(*args, stdin=None):
        proc = subprocess.run([sys.executable, "-m", "matroid_ears", *args],
                              input=stdin, capture_output=True, text=True, timeout=120)
        payload = json.loads(proc.stdout) if proc.stdout.strip().startswith("{") else None
        return proc.returncode, payload, proc
    return run

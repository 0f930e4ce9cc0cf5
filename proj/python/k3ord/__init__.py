"""Exact lattice, cohomology and scenario routines backed by the C++ core."""
import json
from fractions import Fraction

from . import _k3ord
from ._k3ord import Error, det, h0_hirzebruch2, h1, half_gram_quotient, hnf, integer_kernel, rank, signature, snf

__all__ = [
    "Error", "det", "evaluate", "extend_by_minus_one", "h0_hirzebruch2", "h1", "half_gram_quotient", "hnf",
    "integer_kernel", "rank", "run_corpus", "run_scenario", "signature", "snf",
]


def extend_by_minus_one(target_gram, source_gram, embedding, action):
    """Extension of `action` by -1 on the orthogonal complement; phi entries are Fractions."""
    r = _k3ord.extend_by_minus_one(target_gram, source_gram, embedding, action)
    r["phi"] = [[Fraction(x) for x in row] for row in r["phi"]]
    return r


def evaluate(scenario, expected=None):
    """Evaluates a scenario dict and returns the report dict."""
    exp = "" if expected is None else json.dumps(expected)
    return json.loads(_k3ord.evaluate(json.dumps(scenario), exp))


def run_scenario(path):
    return json.loads(_k3ord.run_scenario(str(path)))


def run_corpus(root, glob="*"):
    return json.loads(_k3ord.run_corpus(str(root), glob))

#!/usr/bin/env python3
"""Regenerate the golden corpus.

Inputs come from the transcriptions in corpus_data.py. Expected values are
either transcribed facts or small computations done here with Fractions,
independently of the C++ library.

    python3 tools/make_corpus.py [--out corpus]
"""
import argparse
import itertools
import json
import math
import shutil
from fractions import Fraction
from pathlib import Path

import corpus_data as data

SCHEMA = "k3ord/1"

K3_LABELS = ([f"lambda{i}" for i in range(1, 9)] + [f"lambda{i}'" for i in range(1, 9)]
             + ["mu1", "mu2", "mu1'", "mu2'", "mu1''", "mu2''"])


# --- plain integer matrix helpers -------------------------------------------------

def parse_block(text):
    return [[int(x) for x in line.split()] for line in text.strip().splitlines()]


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    at = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[at + i][at + j] = x
        at += len(b)
    return out


def unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def combo(n, terms):
    v = [0] * n
    for i, c in terms:
        v[i] += c
    return v


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def transpose(m):
    return [list(r) for r in zip(*m)]


def form(g, x, y):
    return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y)))


def k3_vector(expr):
    """'lambda2 + 3 mu2 - mu2'' style expressions in the labelled K3 basis."""
    v = [0] * 22
    sign = 1
    for token in expr.replace("-", " - ").replace("+", " + ").split():
        if token in "+-":
            sign = 1 if token == "+" else -1
            continue
        if token.isdigit():
            sign *= int(token)
            continue
        v[K3_LABELS.index(token)] += sign
        sign = 1
    return v


def columns(vectors):
    return transpose(vectors)


# --- encoding ------------------------------------------------------------------------

def enc(x):
    if isinstance(x, Fraction):
        return {"num": str(x.numerator), "den": str(x.denominator)}
    if isinstance(x, (list, tuple)):
        return [enc(y) for y in x]
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    return str(x)


def signature_json(p, n, z=0):
    return {"positive": p, "negative": n, "zero": z}


class Writer:
    def __init__(self, root):
        self.root = root
        self.count = 0

    def add(self, case, check, kind, payload, source, computed=None, error=None):
        d = self.root / case / check
        d.mkdir(parents=True, exist_ok=True)
        scenario = {"schema": SCHEMA, "id": f"{case}/{check}", "kind": kind, "payload": payload}
        expected = {"schema": SCHEMA, "source": source}
        if error is not None:
            expected["error"] = error
        else:
            expected["computed"] = computed
        (d / "scenario.json").write_text(json.dumps(scenario, indent=1) + "\n")
        (d / "expected.json").write_text(json.dumps(expected, indent=1) + "\n")
        self.count += 1


# --- reference lattices ----------------------------------------------------------------

E8 = parse_block(data.E8_GRAM)
H = [[0, 1], [1, 0]]
K3 = block_diag(E8, E8, H, H, H)
SEXTIC_Q = parse_block(data.SEXTIC_GRAM)


def sextic_gram(n):
    return [row[:n] for row in SEXTIC_Q[:n]]


def sextic_action(n):
    # s_i -> s_1 + s_2 - s_i, columns are images
    cols = [combo(n, [(0, 1), (1, 1), (i, -1)]) for i in range(n)]
    return columns(cols)


def embedding_payload(gram, images):
    return {"target": {"gram": enc(K3), "labels": K3_LABELS}, "source_gram": enc(gram), "matrix": enc(columns([k3_vector(e) for e in images]))}


# --- cover cases -------------------------------------------------------------------------

def add_sextic(w, n):
    case = f"sextic-n{n}"
    gram = sextic_gram(n)
    images = data.SEXTIC_IMAGES[:n]

    emb = embedding_payload(gram, images)
    computed = {"isometric": True, "source_signature": signature_json(1, n - 1), "primitive": True,
                "primitive_by_extension": True, "complement_rank": 22 - n}
    if n == 3:
        emb["completing_labels"] = data.SEXTIC3_COMPLETION
        computed["completion_is_basis"] = True
    if n == 18:
        emb["completing_labels"] = data.SEXTIC18_COMPLETION
        computed["completion_is_basis"] = True
    w.add(case, "embedding", "embedding-check", emb,
          "double plane family: truncated Gram, listed images, signature (1, n-1), primitive", computed)

    iso = dict(embedding_payload(gram, images))
    iso["action"] = enc(sextic_action(n))
    iso["fixed_vector"] = enc(combo(n, [(0, 1), (1, 1)]))
    computed = {"integral": True, "orthogonal": True, "involutive": True, "fixes_vector": True}
    if n == 18:
        computed["phi"] = enc(parse_block(data.SEXTIC18_PHI))
    w.add(case, "isometry", "isometry-extend", iso,
          "double plane family: involution s_i -> s_1 + s_2 - s_i, -1 on the complement"
          + ("; printed 22 x 22 extension" if n == 18 else ""), computed)

    named = [combo(n, [(0, 1), (i, -1)]) for i in range(2, n)]
    image = [combo(n, [(0, 1), (1, -1)])] + [combo(n, [(0, 2), (i, -2)]) for i in range(2, n)]
    w.add(case, "h1", "h1",
          {"gram": enc(gram), "sigma": enc(sextic_action(n)), "order": "2", "named_classes": enc(named),
           "image_members": enc(image)},
          "double plane family: H^1 = (Z/2)^(n-2) generated by s_1 - s_i; image of 1 - sigma holds s_1 - s_2, 2(s_1 - s_i)",
          {"invariant_factors": ["2"] * (n - 2), "free_rank": 0,
           "named_classes": [{"cocycle": True, "nontrivial": True} for _ in named],
           "named_classes_generate": True, "image_members": [True] * len(image)})

    w.add(case, "quotient", "quotient-pic",
          {"gram": enc(gram), "sigma": enc(sextic_action(n)), "order": "2",
           "named_fixed_basis": enc([combo(n, [(0, 1), (1, 1)])])},
          "double plane family: fixed lattice Z(s_1 + s_2); halved form is the plane's [1]",
          {"named_basis_spans": True, "fixed_gram": [["2"]], "half_gram": [["1"]]})

    s = combo(n, [(0, 1), (1, 1)])
    payload = {"gram": enc(gram), "s": enc(s), "generators": enc([unit(n, i) for i in range(n)])}
    computed = {"pass": True, "self_int": "2",
                "pair_checks": [{"index": i, "s_dot_gen": "1", "s_dot_residual": "1"} for i in range(n)]}
    if n == 3:
        payload["effectivity"] = enc([unit(3, 2), [-1, -1, 1], [0, 0, 0]])
        computed["effectivity"] = ["Effective", "AntiEffective", "Zero"]
    w.add(case, "ample", "ample-cert", payload,
          "double plane family: s_1 + s_2 has square 2 and meets every s_i and s - s_i once", computed)


def add_quadric(w):
    gram = parse_block(data.QUADRIC_GRAM)
    action = parse_block(data.QUADRIC_ACTION)
    emb = embedding_payload(gram, data.QUADRIC_IMAGES)
    emb["completing_labels"] = data.QUADRIC_COMPLETION
    w.add("quadric", "embedding", "embedding-check", emb, "quadric double cover: listed images complete to a basis",
          {"isometric": True, "source_signature": signature_json(1, 3), "primitive": True,
           "primitive_by_extension": True, "complement_rank": 18, "completion_is_basis": True})
    iso = embedding_payload(gram, data.QUADRIC_IMAGES)
    iso["action"] = enc(action)
    iso["fixed_vector"] = enc([1, 1, 1, 0])
    w.add("quadric", "isometry", "isometry-extend", iso, "quadric double cover: printed 22 x 22 extension",
          {"integral": True, "orthogonal": True, "involutive": True, "phi": enc(parse_block(data.QUADRIC_PHI)),
           "fixes_vector": True})
    w.add("quadric", "h1", "h1",
          {"gram": enc(gram), "sigma": enc(action), "order": "2", "named_classes": enc([[0, 1, 0, -1]]),
           "image_members": enc([[0, 1, -1, 0], [0, 2, 0, -2]])},
          "quadric double cover: H^1 = Z/2 generated by s_2 - s_4",
          {"invariant_factors": ["2"], "free_rank": 0, "named_classes": [{"cocycle": True, "nontrivial": True}],
           "named_classes_generate": True, "image_members": [True, True]})
    w.add("quadric", "quotient", "quotient-pic",
          {"gram": enc(gram), "sigma": enc(action), "order": "2", "named_fixed_basis": enc([[1, 0, 0, 0], [0, 1, 1, 0]])},
          "quadric double cover: fixed lattice <s_1, s_2 + s_3>, halved form is the hyperbolic plane",
          {"named_basis_spans": True, "fixed_gram": [["0", "2"], ["2", "0"]], "half_gram": [["0", "1"], ["1", "0"]]})
    gens = [unit(4, i) for i in range(4)] + [[0, 1, 1, -1]]
    w.add("quadric", "ample", "ample-cert", {"gram": enc(gram), "s": enc([1, 1, 1, 0]), "generators": enc(gens)},
          "quadric double cover: s = s_1 + s_2 + s_3 meets s_1 twice and s_2..s_5 once",
          {"pass": True, "self_int": "4",
           "pair_checks": [{"index": i, "s_dot_gen": v} for i, v in enumerate(["2", "1", "1", "1", "1"])]})
    w.add("quadric", "order", "order-classify",
          {"surface": {"name": "quadric"},
           "ramification": [{"class": enc([4, 4]), "e": "2", "cover_irreducible": "yes"}]},
          "order on the quadric ramified on a (4,4) divisor, maximal",
          {"surface": "P1xP1", "kind": "NCY", "k_order": enc([Fraction(0), Fraction(0)]), "numerically_trivial": True,
           "ramification_indices": [2], "overlap_applicable": True, "maximality": "Maximal"})


def add_f2(w):
    gram = parse_block(data.F2_GRAM)
    action = parse_block(data.F2_ACTION)
    emb = embedding_payload(gram, data.F2_IMAGES)
    emb["completing_labels"] = data.F2_COMPLETION
    w.add("f2", "embedding", "embedding-check", emb, "F2 double cover: listed images complete to a basis",
          {"isometric": True, "source_signature": signature_json(1, 4), "primitive": True,
           "primitive_by_extension": True, "complement_rank": 17, "completion_is_basis": True})
    iso = embedding_payload(gram, data.F2_IMAGES)
    iso["action"] = enc(action)
    iso["fixed_vector"] = enc([1, 1, 3, 3, 0])
    w.add("f2", "isometry", "isometry-extend", iso, "F2 double cover: printed 22 x 22 extension",
          {"integral": True, "orthogonal": True, "involutive": True, "phi": enc(parse_block(data.F2_PHI)),
           "fixes_vector": True})
    w.add("f2", "h1", "h1",
          {"gram": enc(gram), "sigma": enc(action), "order": "2", "named_classes": enc([[0, 0, 1, 0, -1]]),
           "image_members": enc([[1, -1, 0, 0, 0], [0, 0, 1, -1, 0], [0, 0, 2, 0, -2]])},
          "F2 double cover: H^1 = Z/2 generated by s_3 - s_5",
          {"invariant_factors": ["2"], "free_rank": 0, "named_classes": [{"cocycle": True, "nontrivial": True}],
           "named_classes_generate": True, "image_members": [True, True, True]})
    w.add("f2", "quotient", "quotient-pic",
          {"gram": enc(gram), "sigma": enc(action), "order": "2",
           "named_fixed_basis": enc([[1, 1, 0, 0, 0], [0, 0, 1, 1, 0]])},
          "F2 double cover: fixed lattice <s_1 + s_2, s_3 + s_4>, halved form [[-2,1],[1,0]]",
          {"named_basis_spans": True, "half_gram": [["-2", "1"], ["1", "0"]]})
    gens = [unit(5, i) for i in range(5)] + [[0, 0, 1, 1, -1]]
    w.add("f2", "ample", "ample-cert", {"gram": enc(gram), "s": enc([1, 1, 3, 3, 0]), "generators": enc(gens)},
          "F2 double cover: s = s_1 + s_2 + 3 s_3 + 3 s_4 meets every s_i once",
          {"pass": True, "pair_checks": [{"index": i, "s_dot_gen": "1"} for i in range(6)]})
    w.add("f2", "order", "order-classify",
          {"surface": {"name": "hirzebruch", "n": "2"},
           "ramification": [{"class": enc([4, 8]), "e": "2", "cover_irreducible": "yes"}]},
          "order on F2 ramified on D ~ 4 C0 + 8 F, maximal",
          {"surface": "F2", "kind": "NCY", "k_order": enc([Fraction(0), Fraction(0)]), "numerically_trivial": True,
           "ramification_indices": [2], "maximality": "Maximal"})


def add_orders(w):
    w.add("p2", "sextic-order", "order-classify",
          {"surface": {"name": "p2"}, "ramification": [{"class": enc([6]), "e": "2", "cover_irreducible": "yes"}]},
          "orders on the plane ramified on a smooth sextic are numerically Calabi-Yau",
          {"kind": "NCY", "k_order": enc([Fraction(0)]), "numerically_trivial": True, "ramification_indices": [2],
           "overlap_applicable": True, "maximality": "Maximal"})
    w.add("p2", "unramified", "order-classify", {"surface": {"name": "p2"}, "ramification": []},
          "no ramification: K_A = K = -3H, anticanonical class ample",
          {"kind": "DelPezzo", "k_order": enc([Fraction(-3)]), "anticanonical_square": enc(Fraction(9)),
           "ramification_indices": [], "cover_degree": 1, "overlap_applicable": True, "maximality": "Azumaya"})
    w.add("p2", "cubic", "order-classify",
          {"surface": {"name": "p2"}, "ramification": [{"class": enc([3]), "e": "2"}]},
          "index 2 on a cubic: -K_A = 3/2 H",
          {"kind": "DelPezzo", "k_order": enc([Fraction(-3, 2)]), "anticanonical_square": enc(Fraction(9, 4)),
           "maximality": "Unknown"})
    for vec in ([2, 2, 2, 2], [3, 3, 3], [2, 4, 4], [2, 3, 6]):
        # Independent check of the fibre-degree identity sum (1 - 1/e) = 2.
        assert sum(1 - Fraction(1, e) for e in vec) == 2
        w.add("ruled-elliptic", "r" + "".join(map(str, vec)), "order-classify",
              {"ramification_vector": enc(vec)},
              f"split ruled surface over an elliptic curve, ramification vector {tuple(vec)}",
              {"surface": "ruled-elliptic-split", "kind": "NCY", "k_order": enc([Fraction(0), Fraction(0)]),
               "numerically_trivial": True, "ramification_indices": sorted(set(vec)),
               "cover_degree": math.lcm(*vec), "overlap_applicable": True})


# --- fibrations ------------------------------------------------------------------------------

def torsion_point(t1=Fraction(0), t2=Fraction(0)):
    return {"generic": enc(Fraction(0)), "t1": enc(t1), "t2": enc(t2)}


def add_fibrations(w):
    for n in range(2, 7):
        payload = {"model": {"elliptic_count": "1"}, "action": {"order": str(n), "elliptic": [{"sign": "1", "target": "0"}]},
                   "elements": [{"elliptic": [torsion_point(Fraction(1, n))]},
                                {"elliptic": [{"generic": enc(Fraction(1)), "t1": enc(Fraction(0)), "t2": enc(Fraction(0))}]}]}
        computed = {"invariant_factors": [str(n), str(n)], "free_rank": 0,
                    "elements": [{"cocycle": True, "coboundary": False, "class_trivial": False, "element_order": str(n)},
                                 {"cocycle": False, "element_order": "infinite"}]}
        if n == 2:
            payload["sections"] = {"fibration": {"fibre": "E", "base": "E", "zero": "e0"},
                                   "symbols": [{"kind": "zero"}, {"kind": "horizontal", "name": "e"},
                                               {"kind": "graph", "name": "id", "zero_preimages": ["e0"]}]}
            computed["line_bundles"] = ["O_Z", "O_Z({e}xE - {e0}xE)", "O_Z(Gamma_id - {e0}xE - Ex{e0})"]
        w.add("trivial-fibration", f"n{n}", "fibration-h1", payload,
              f"trivial action on the elliptic sections, order {n}: H^1 is the n-torsion (Z/{n})^2", computed)

    w.add("negation", "h1", "fibration-h1",
          {"model": {"elliptic_count": "1"}, "action": {"order": "2", "elliptic": [{"sign": "-1", "target": "0"}]},
           "elements": [{"elliptic": [torsion_point(Fraction(1, 2))]}, {"elliptic": [torsion_point(Fraction(1, 3), Fraction(1, 2))]}]},
          "negation on the fibre, order 2: H^1 is trivial since [2] is onto",
          {"invariant_factors": [], "free_rank": 0,
           "elements": [{"cocycle": True, "coboundary": True, "class_trivial": True},
                        {"cocycle": True, "coboundary": True, "class_trivial": True}]})

    w.add("gamma-psi", "h1", "fibration-h1",
          {"model": {"free_rank": "1", "elliptic_count": "1"},
           "action": {"order": "2", "free": enc([[-1]]), "elliptic": [{"sign": "-1", "target": "0"}]},
           "elements": [{"free": enc([1])}, {"free": enc([2])}]},
          "negation plus the graph class S with sigma(S) = -S: H^1 = Z/2, the class of S",
          {"invariant_factors": ["2"], "free_rank": 0,
           "elements": [{"cocycle": True, "coboundary": False, "class_trivial": False},
                        {"cocycle": True, "coboundary": True, "class_trivial": True}]})

    w.add("fibration-236", "restrictions", "fibration-h1",
          {"model": {"elliptic_count": "1"}, "action": {"order": "6"},
           "restrictions": {"gram": [["0"]], "sigma": [["1"]], "order": "6", "class": ["1"], "indices": ["2", "3", "6"]}},
          "ramification (2,3,6): restrictions M^3, M^2, M over the three fibres",
          {"invariant_factors": ["6", "6"],
           "restrictions": [{"index": "2", "d": 3, "power": "3", "claimed_torsion": 2},
                            {"index": "3", "d": 2, "power": "2", "claimed_torsion": 3},
                            {"index": "6", "d": 1, "power": "1", "claimed_torsion": 6}]})

    # Group law on the blown-up plane, checked against a direct evaluation of the alpha formula.
    g = [[0] * 10 for _ in range(10)]
    g[0][0] = 1
    for i in range(1, 10):
        g[i][i] = -1
    fibre = [3] + [-1] * 9
    e = lambda i: unit(10, i)
    for name, (c1, c2, s0) in {"disjoint": (e(1), e(2), e(9)), "identity": (e(3), e(3), e(3)),
                                "zero-left": (e(9), e(4), e(9))}.items():
        alpha = form(g, [a + b for a, b in zip(c1, c2)], s0) - form(g, c1, c2) + 1
        result = [a + b - c + alpha * f for a, b, c, f in zip(c1, c2, s0, fibre)]
        assert form(g, result, result) == -1 and form(g, result, fibre) == 1
        w.add("rational-elliptic", f"mw-{name}", "fibration-h1",
              {"model": {}, "action": {"order": "1"}, "mw_sum": {"c1": enc(c1), "c2": enc(c2), "s0": enc(s0)}},
              "group law on the rational elliptic surface: S1 + S2 - S0 + alpha F",
              {"mw_sum": {"class": enc(result), "square": "-1", "dot_fibre": "1"}})


def add_bielliptic(w):
    for kind, n in ((1, 2), (3, 4), (5, 3), (7, 6)):
        w.add("bielliptic", f"type{kind}", "twist-check",
              {"model": {"elliptic_count": "1"}, "action": {"order": str(n)},
               "element": {"elliptic": [torsion_point(Fraction(1, n))]}},
              f"bielliptic type {kind}: the twist class of exact order {n} is a nontrivial cocycle",
              {"cocycle": True, "coboundary": False, "class_trivial": False, "element_order": str(n)})


# --- non-integral extension witness ------------------------------------------------------------

def find_nonintegral_witness():
    """First primitive v in [-2,2]^4 of H + H whose reflection-type extension is not integral.

    With Pic = Zv and the identity action, the extension is x -> -x + 2 (x.v)/(v.v) v.
    """
    g = block_diag(H, H)
    for v in itertools.product(range(-2, 3), repeat=4):
        v = list(v)
        if math.gcd(*v) != 1:
            continue
        vv = form(g, v, v)
        if vv == 0:
            continue
        phi = [[Fraction(0)] * 4 for _ in range(4)]
        for j in range(4):
            x = unit(4, j)
            c = Fraction(2 * form(g, x, v), vv)
            for i in range(4):
                phi[i][j] = -x[i] + c * v[i]
        if any(q.denominator != 1 for row in phi for q in row):
            return g, v, vv, phi
    raise RuntimeError("no witness in the search box")


def add_witness(w):
    g, v, vv, phi = find_nonintegral_witness()
    w.add("nonintegral-witness", "isometry", "isometry-extend",
          {"target": {"gram": enc(g)}, "source_gram": enc([[vv]]), "matrix": enc(columns([v])), "action": enc([[1]])},
          f"brute-force search over primitive vectors of H + H: v = {v}, v.v = {vv}",
          {"integral": False, "orthogonal": True, "involutive": True, "phi": enc(phi)})


def add_schema_errors(w):
    gram = sextic_gram(3)
    bad = embedding_payload(gram, data.SEXTIC_IMAGES[:3])
    bad["action"] = enc([[1, 0], [0, 1]])
    w.add("malformed", "action-rank", "isometry-extend", bad, "action of the wrong size is rejected",
          error="SchemaError")
    w.add("malformed", "asymmetric-gram", "h1", {"gram": enc([[0, 1], [2, 0]]), "sigma": enc(H), "order": "2"},
          "asymmetric form is rejected", error="NotSymmetric")


def main():
    here = Path(__file__).resolve().parent
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=here.parent / "corpus")
    args = ap.parse_args()
    if args.out.exists():
        shutil.rmtree(args.out)
    w = Writer(args.out)
    for n in range(3, 19):
        add_sextic(w, n)
    add_quadric(w)
    add_f2(w)
    add_orders(w)
    add_fibrations(w)
    add_bielliptic(w)
    add_witness(w)
    add_schema_errors(w)
    print(f"wrote {w.count} checks to {args.out}")


if __name__ == "__main__":
    main()

"""Executable checks of the structural lemmas behind the wreath product and
the finite generation statement."""

from __future__ import annotations

import random

from ..action import ActionAlgebra, PointedBiset, associativity_probe, biset_axioms_check
from ..cohn import CohnAlgebra, format_monomial, sg_mul
from ..graph import Path
from ..linalg import SparseBasis
from ..report import Report
from .core import (
    X0,
    BridgePath,
    ExtendedGraph,
    WreathAlgebra,
    act,
    ck_full,
    enumerate_bridge_paths,
)


def cohn_monomials(g, max_total: int) -> list:
    """Monomials pq* of S with len(p) + len(q) <= max_total."""
    alg = CohnAlgebra(g)
    return [m for m in alg.monomials_up_to(max_total) if len(m[0].edges) + len(m[1].edges) <= max_total]


def bridge_biset(eg: ExtendedGraph, s_len: int = 2, x_len: int = 3, name: str | None = None) -> PointedBiset:
    """The pointed set of bridge paths with the two-sided action of S."""
    return PointedBiset(
        x0=X0,
        left=lambda s, x: act(s, x, "left"),
        right=lambda x, s: act(s, x, "right"),
        sg_mul=sg_mul,
        sg_zero=None,
        s_pool=cohn_monomials(eg.graph, s_len),
        x_pool=enumerate_bridge_paths(eg, x_len),
        name=name or "bridge paths",
        show_s=lambda s: "0" if s is None else format_monomial(s),
        show_x=str,
    )


def lemma2_check(eg: ExtendedGraph, L: int = 4) -> Report:
    """C(Gamma) maps bridge paths to bridge paths or X0, checked for s of
    length <= 2L and bridge paths of length <= L."""
    rep = Report(f"bridge-path closure (L={L})")
    S = cohn_monomials(eg.graph, 2 * L)
    X = enumerate_bridge_paths(eg, L)
    g = eg.graph
    n = 0
    for s in S:
        for x in X:
            for side in ("left", "right"):
                y = act(s, x, side)
                n += 1
                if y is X0:
                    continue
                ok = isinstance(y, BridgePath) and eg.has_bridge(y.bridge)
                if ok:
                    try:
                        g.check_path(y.path)
                        ok = g.range_of(y.path) == eg.bridge(y.bridge).source
                    except Exception:
                        ok = False
                rep.check(ok, f"{side} action of {format_monomial(s)} on {x} left P: {y}")
    rep.note(f"{len(S)} monomials x {len(X)} points x 2 sides = {n} actions")
    return rep


def lemma3_check(eg: ExtendedGraph, L: int = 4) -> Report:
    rep = Report(f"bridge-path biset properties (L={L})")
    b = bridge_biset(eg, 2 * L, L)
    bad = biset_axioms_check(b, b.s_pool, b.x_pool)
    for msg in bad:
        rep.fail(msg)
    rep.note(f"{len(b.s_pool)} monomials, {len(b.x_pool)} points")
    return rep


def wreath_action_algebra(eg: ExtendedGraph, s_len: int = 2, x_len: int = 3) -> ActionAlgebra:
    return ActionAlgebra(bridge_biset(eg, s_len, x_len), eg.coeff)


def lemma1_check(eg: ExtendedGraph, samples: int = 1000, seed: int = 0) -> Report:
    return associativity_probe(wreath_action_algebra(eg), samples, seed)


def lemma4_check(alg: WreathAlgebra, max_index: int = 4, seed: int = 0) -> Report:
    """CK(v) kills every matrix unit a_{p,q} on both sides, computed in
    C(Gamma) + I before any reduction."""
    rep = Report(f"I.CK(v) = CK(v).I = 0 (index length <= {max_index})")
    rng = random.Random(seed)
    P = enumerate_bridge_paths(alg.eg, max_index)
    n = 0
    for v in alg.graph.vertices:
        if alg.graph.is_sink(v):
            continue
        ck = ck_full(alg, v)
        for p in P:
            for q in P:
                a = alg.corner_element(rng, p, q)
                if a is None:
                    continue
                m = alg.unit(a, p, q)
                n += 1
                rep.check(not alg.mul_raw(ck, m), f"CK({v}) * {m} != 0")
                rep.check(not alg.mul_raw(m, ck), f"{m} * CK({v}) != 0")
    rep.note(f"{n} matrix units checked on both sides")
    return rep


def random_j_element(alg: WreathAlgebra, rng, max_len: int = 3, terms: int = 3, general: bool = False):
    """Random element of J: sum of alpha p CK(v) q* (or x CK(v) y for random
    raw x, y when ``general``), formed in C(Gamma) + I."""
    g = alg.graph
    nonsinks = [v for v in g.vertices if not g.is_sink(v)]
    acc = alg.zero
    for _ in range(terms):
        v = rng.choice(nonsinks)
        ck = ck_full(alg, v)
        if general:
            x = alg.random_element(rng)
            y = alg.random_element(rng)
        else:
            ends = [p for u in g.vertices for p in g.paths_from(u, max_len) if g.range_of(p) == v]
            p, q = rng.choice(ends), rng.choice(ends)
            x = alg.raw({(p, Path(v)): alg.field.one})
            y = alg.raw({(Path(v), q): alg.field.one})
        c = alg.field.random(rng, 3, nonzero=True)
        acc = alg.add(acc, alg.scale(c, alg.mul_raw(alg.mul_raw(x, ck), y)))
    return acc


def lemma6_check(alg: WreathAlgebra, samples: int = 200, seed: int = 0) -> Report:
    rep = Report("J reduces to 0")
    rng = random.Random(seed)
    for i in range(samples):
        j = random_j_element(alg, rng, general=(i % 4 == 3))
        nf = alg.normal_form(j)
        rep.check(not nf, f"sample {i}: normal form {nf} != 0")
    rep.note(f"{samples} random elements of J")
    return rep


def quotient_check(alg: WreathAlgebra, samples: int = 500, seed: int = 0) -> Report:
    """The Leavitt-part projection B -> L(Gamma) is multiplicative."""
    rep = Report("quotient B/I = L(Gamma)")
    rng = random.Random(seed)
    for i in range(samples):
        x, y = alg.random_element(rng), alg.random_element(rng)
        lhs = (x * y).leavitt_part
        rhs = x.leavitt_part * y.leavitt_part
        rep.check(lhs == rhs, f"sample {i}: {lhs} != {rhs}")
    rep.note(f"{samples} random pairs")
    return rep


def prop1_generators(alg: WreathAlgebra, A_gens) -> list:
    """(name, element) pairs: V, E, E*, (a_i)_{0,0}, (r(e))_{e,0}, (r(e))_{0,e}."""
    g = alg.graph
    eg = alg.eg
    out = [(v, alg.vertex(v)) for v in g.vertices]
    out += [(e.id, alg.edge(e.id)) for e in g.edges]
    out += [(f"{e.id}^*", alg.ghost(e.id)) for e in g.edges]
    for a in A_gens:
        out.append((f"[{alg.coeff.format(a)} @ 0, 0]", alg.unit(a, X0, X0)))
    for b in eg.bridges:
        e = BridgePath(Path(b.source), b.id)
        r = eg.range_of(e)
        out.append((f"[{b.idem} @ {b.id}, 0]", alg.unit(r, e, X0)))
        out.append((f"[{b.idem} @ 0, {b.id}]", alg.unit(r, X0, e)))
    return out


def coefficient_words(A, gens, max_len: int) -> list:
    """Distinct products of at most ``max_len`` generators (1 included)."""
    words = [A.one]
    frontier = [A.one]
    for _ in range(max_len):
        frontier = [w * a for w in frontier for a in gens]
        words.extend(frontier)
    out = []
    for w in words:
        if w not in out:
            out.append(w)
    return out


def prop1_targets(alg: WreathAlgebra, A_gens, index_len: int = 3, word_len: int = 2) -> list:
    """Basis elements to reach: Leavitt normal monomials with both paths of
    length <= index_len, and (w)_{p,q} for bridge paths p, q of length <=
    index_len and w a word of length <= word_len, cut to the corner."""
    targets = []
    for m in alg.L.normal_basis_monomials(index_len):
        targets.append(alg.element({m: alg.field.one}))
    P = enumerate_bridge_paths(alg.eg, index_len)
    r = alg.eg.range_of
    words = coefficient_words(alg.coeff, A_gens, word_len)
    for p in P:
        for q in P:
            for w in words:
                a = r(p) * w * r(q)
                if not alg.coeff.is_zero(a):
                    targets.append(alg.unit(a, p, q))
    return targets


def prop1_search(alg: WreathAlgebra, A_gens, index_len: int = 3, word_len: int = 2, max_word: int = 8,
                 targets=None) -> Report:
    """Breadth-first search over generator words (length <= max_word) until
    every target is a word product or a linear combination of found products."""
    rep = Report(f"finite generation (words <= {max_word})")
    gens = [x for _, x in prop1_generators(alg, A_gens)]
    names = [n for n, _ in prop1_generators(alg, A_gens)]
    targets = prop1_targets(alg, A_gens, index_len, word_len) if targets is None else targets
    pending = {t: None for t in targets}
    seen = {}
    frontier = []
    for i, x in enumerate(gens):
        if x and x not in seen:
            seen[x] = (i,)
            frontier.append(x)
    for t in list(pending):
        if t in seen:
            pending.pop(t)
    length = 1
    while pending and length < max_word and frontier:
        length += 1
        nxt = []
        for x in frontier:
            word = seen[x]
            for i, gx in enumerate(gens):
                y = x * gx
                if not y or y in seen:
                    continue
                seen[y] = word + (i,)
                nxt.append(y)
                if y in pending:
                    pending.pop(y)
        frontier = nxt
    witnesses = {}
    if pending:
        # fall back to linear combinations of everything found
        basis = SparseBasis()
        elems = list(seen)
        for e in elems:
            basis.add(alg.coordinates(e))
        for t in list(pending):
            if basis.contains(alg.coordinates(t)):
                pending.pop(t)
                witnesses[t] = "linear combination"
    for t in pending:
        rep.fail(f"no witness for {t}")
    rep.note(f"{len(targets)} targets, {len(seen)} distinct products of <= {length} generators")
    rep.witness = {t: ".".join(names[i] for i in seen[t]) for t in targets if t in seen}
    rep.witness.update(witnesses)
    return rep


def corrupted_biset(eg: ExtendedGraph, s_len: int = 2, x_len: int = 3) -> PointedBiset:
    """Negative control: the left action of every nonzero s returns one fixed
    live point, which breaks property (1)."""
    b = bridge_biset(eg, s_len, x_len, name="corrupted bridge paths")
    fixed = next(x for x in b.x_pool if x is not X0)
    b.left = lambda s, x: X0 if s is None or x is X0 else fixed
    return b

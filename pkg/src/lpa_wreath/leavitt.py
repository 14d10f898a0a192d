"""L(Gamma) = C(Gamma)/N as a terminating, confluent rewriting system.

For each non-sink v fix the special edge gamma(v) (lexicographically least
edge id out of v). The relation CK(v)' = 0 is oriented as

    (p gamma)(q gamma)* -> p q* - sum_{f in s^-1(v), f != gamma} (p f)(q f)*

Monomials with no such redex form a basis of L(Gamma).
"""

from __future__ import annotations

from .cohn import PathAlgebra, PathElement, degree
from .graph import Graph, GraphError, Path, enumerate_hsat
from .scalars import QQ, Field


class LeavittElement(PathElement):
    __slots__ = ()


class RewriteMeasureError(AssertionError):
    pass


def redex_measure(alg, terms) -> list:
    """Lengths of all redex monomials, sorted descending (multiset order is
    lexicographic order on these lists)."""
    return sorted((len(m[0].edges) + len(m[1].edges) for m in terms if alg.split_redex(m)), reverse=True)


class LeavittAlgebra(PathAlgebra):
    element_class = LeavittElement

    def __init__(self, graph: Graph, field: Field = QQ):
        super().__init__(graph, field)
        self._special = {v: graph.out_edges(v)[0].id for v in graph.vertices if not graph.is_sink(v)}
        self._nf_cache: dict = {}

    def special_edge(self, v) -> str:
        try:
            return self._special[v]
        except KeyError:
            if not self.graph.has_vertex(v):
                raise GraphError(f"unknown vertex {v!r}") from None
            raise GraphError(f"sink {v!r} has no special edge") from None

    def split_redex(self, m):
        """For m = (p gamma)(q gamma)* return (p, q, v) with v = s(gamma), else None."""
        p, q = m
        if not p.edges or not q.edges:
            return None
        e = p.edges[-1]
        if q.edges[-1] != e:
            return None
        v = self.graph.edge(e).source
        if self._special.get(v) != e:
            return None
        return Path(p.source, p.edges[:-1]), Path(q.source, q.edges[:-1]), v

    def is_normal_monomial(self, m) -> bool:
        return self.split_redex(m) is None

    def rewrite(self, m) -> dict:
        """One rewrite step applied to the redex monomial ``m``."""
        p, q, v = self.split_redex(m)
        one = self.field.one
        out = {(p, q): one}
        gamma = self._special[v]
        for f in self.graph.out_edges(v):
            if f.id != gamma:
                out[(p.concat((f.id,)), q.concat((f.id,)))] = -one
        return out

    def monomial_normal_form(self, m) -> dict:
        hit = self._nf_cache.get(m)
        if hit is not None:
            return hit
        if self.split_redex(m) is None:
            res = {m: self.field.one}
        else:
            res = {}
            for m2, c2 in self.rewrite(m).items():
                for m3, c3 in self.monomial_normal_form(m2).items():
                    v = res.get(m3, 0) + c2 * c3
                    if v:
                        res[m3] = v
                    else:
                        res.pop(m3, None)
        self._nf_cache[m] = res
        return res

    def reduce_terms(self, terms: dict) -> dict:
        out: dict = {}
        for m, c in terms.items():
            for m2, c2 in self.monomial_normal_form(m).items():
                v = out.get(m2, 0) + c * c2
                if v:
                    out[m2] = v
                else:
                    out.pop(m2, None)
        return out

    def normal_form_randomized(self, terms: dict, rng, check_measure: bool = False) -> dict:
        """Rewrite by picking a random redex each step (independent of the
        memoized per-monomial route); optionally assert that the redex
        measure strictly decreases at every step."""
        terms = {m: c for m, c in terms.items() if c}
        measure = redex_measure(self, terms) if check_measure else None
        while True:
            redexes = sorted((m for m in terms if self.split_redex(m)), key=self.mono_key)
            if not redexes:
                return terms
            m = rng.choice(redexes)
            c = terms.pop(m)
            for m2, c2 in self.rewrite(m).items():
                v = terms.get(m2, 0) + c * c2
                if v:
                    terms[m2] = v
                else:
                    terms.pop(m2, None)
            if check_measure:
                new = redex_measure(self, terms)
                if not new < measure:
                    raise RewriteMeasureError(f"measure did not decrease: {measure} -> {new}")
                measure = new

    def normal_basis_monomials(self, max_len: int) -> list:
        return [m for m in self.monomials_up_to(max_len) if self.split_redex(m) is None]


def special_edge(g: Graph, v) -> str:
    if not g.has_vertex(v):
        raise GraphError(f"unknown vertex {v!r}")
    if g.is_sink(v):
        raise GraphError(f"sink {v!r} has no special edge")
    return g.out_edges(v)[0].id


def lpa_normal_form(alg: LeavittAlgebra, x: PathElement) -> LeavittElement:
    """Normal form in L(Gamma) of a Cohn element (given by its terms)."""
    return alg.from_terms(dict(x.terms))


def lpa_mul(x: LeavittElement, y: LeavittElement) -> LeavittElement:
    if x.algebra != y.algebra:
        raise GraphError("elements of different algebras")
    return x.algebra.mul(x, y)


def graded_component(x: PathElement, n: int) -> PathElement:
    return x.algebra.element({m: c for m, c in x.terms.items() if degree(m) == n})


def homogeneous_degrees(x: PathElement) -> set:
    return {degree(m) for m in x.terms}


def graded_simple(g: Graph, bound: int = 16) -> bool:
    subsets = enumerate_hsat(g, bound)
    return subsets == [frozenset(), frozenset(g.vertices)] or (not g.vertices and subsets == [frozenset()])

"""Verification sweeps: criterion versus oracle over many subgraphs.

The flagness prediction is checked against the brute-force oracle for
every admissible edge subgraph of small hosts and for uniform random
admissible subgraphs of large ones.  Admissible means: nonempty, no
vertex of valency 2.

Uniform sampling cannot reject raw coin-flip subsets (the admissible
fraction decays like (5/8)^f0, about 8e-5 already for the
dodecahedron), so :class:`AdmissibleCensus` counts admissible subsets
exactly with a dynamic program over a low-bandwidth edge order and
draws exactly uniform samples by unranking.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .flags import is_flag, is_flag_oracle, missing_faces
from .polytope import Polytope3, check_star_identity, p_vector
from .truncation import (
    EdgeSubgraph,
    flag_criterion,
    predicted_face_sizes,
    truncate,
)

EXHAUSTIVE_EDGE_LIMIT = 16

State = tuple[tuple[int, int], ...]


class AdmissibleCensus:
    """Exact counting and uniform sampling of admissible edge subsets.

    Edges are processed in an order that keeps the set of vertices with
    both decided and undecided edges small; the dynamic program tracks
    the valency so far of exactly those vertices.  Subsets are ranked
    lexicographically by their decision vector with "exclude" before
    "include", so the empty set has rank 0 and sampling a rank in
    [1, total) draws a uniform nonempty admissible subset.
    """

    def __init__(self, host: Polytope3):
        self.host = host
        self.edge_seq = self._order_edges(host)
        self._ends = [host.edge_endpoints(e) for e in self.edge_seq]
        last: dict[int, int] = {}
        for t, (u, v) in enumerate(self._ends):
            last[u] = t
            last[v] = t
        self._last = last
        self._suffix = self._build_tables()

    @staticmethod
    def _order_edges(host: Polytope3) -> list[int]:
        n = host.vertex_count
        pos = [-1] * n
        pos[0] = 0
        placed = [0]
        for _ in range(n - 1):
            best = None
            best_key = None
            for v in range(n):
                if pos[v] >= 0:
                    continue
                anchored = sum(1 for u in host.neighbors[v] if pos[u] >= 0)
                key = (-anchored, v)
                if best_key is None or key < best_key:
                    best = v
                    best_key = key
            pos[best] = len(placed)
            placed.append(best)
        return sorted(
            host.edges,
            key=lambda e: tuple(
                sorted((pos[host.edge_endpoints(e)[0]], pos[host.edge_endpoints(e)[1]]))
            )[::-1],
        )

    def _step(self, state: State, t: int, take: bool) -> Optional[State]:
        u, v = self._ends[t]
        counts = dict(state)
        counts.setdefault(u, 0)
        counts.setdefault(v, 0)
        if take:
            counts[u] += 1
            counts[v] += 1
        for w in (u, v) if u != v else (u,):
            if self._last[w] == t:
                if counts[w] == 2:
                    return None
                del counts[w]
        return tuple(sorted(counts.items()))

    def _build_tables(self) -> list[dict[State, int]]:
        m = len(self.edge_seq)
        reachable: list[set[State]] = [set() for _ in range(m + 1)]
        reachable[0].add(())
        for t in range(m):
            nxt = reachable[t + 1]
            for state in reachable[t]:
                for take in (False, True):
                    s2 = self._step(state, t, take)
                    if s2 is not None:
                        nxt.add(s2)
        suffix: list[dict[State, int]] = [dict() for _ in range(m + 1)]
        suffix[m] = {(): 1}
        for t in range(m - 1, -1, -1):
            table = suffix[t + 1]
            row = suffix[t]
            for state in reachable[t]:
                total = 0
                for take in (False, True):
                    s2 = self._step(state, t, take)
                    if s2 is not None:
                        total += table.get(s2, 0)
                if total:
                    row[state] = total
        return suffix

    @property
    def total(self) -> int:
        """Number of admissible subsets, the empty one included."""
        return self._suffix[0].get((), 0)

    @property
    def total_nonempty(self) -> int:
        return self.total - 1

    def unrank(self, rank: int) -> frozenset[int]:
        if not 0 <= rank < self.total:
            raise IndexError(f"rank {rank} out of range [0, {self.total})")
        state: State = ()
        chosen: list[int] = []
        for t in range(len(self.edge_seq)):
            skip = self._step(state, t, False)
            weight = self._suffix[t + 1].get(skip, 0) if skip is not None else 0
            if rank < weight:
                state = skip
            else:
                rank -= weight
                state = self._step(state, t, True)
                chosen.append(self.edge_seq[t])
        return frozenset(chosen)

    def iter_nonempty(self) -> Iterator[frozenset[int]]:
        for rank in range(1, self.total):
            yield self.unrank(rank)

    def sample_nonempty(self, rng: random.Random) -> frozenset[int]:
        return self.unrank(rng.randrange(1, self.total))


def iter_all_subsets(host: Polytope3) -> Iterator[tuple[frozenset[int], bool]]:
    """Every nonempty edge subset with its admissibility flag.

    Plain bitmask filter, independent of the census machinery; only for
    hosts with at most EXHAUSTIVE_EDGE_LIMIT edges.
    """
    edges = host.edges
    m = len(edges)
    if m > EXHAUSTIVE_EDGE_LIMIT:
        raise ValueError(f"{m} edges is too many for an exhaustive scan")
    ends = [host.edge_endpoints(e) for e in edges]
    n = host.vertex_count
    for mask in range(1, 1 << m):
        val = [0] * n
        chosen = []
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            chosen.append(edges[i])
            u, v = ends[i]
            val[u] += 1
            val[v] += 1
        yield frozenset(chosen), 2 not in val


@dataclass(frozen=True)
class GammaVerdict:
    """Per-subgraph outcome of a criterion-versus-oracle check."""

    edges: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    valency1: int
    valency3: int
    criterion: bool
    criterion_bare: bool
    oracle: bool
    out_f: tuple[int, int, int]

    @property
    def agree(self) -> bool:
        return self.criterion == self.oracle


@dataclass(frozen=True)
class GammaAudit(GammaVerdict):
    """Verdict plus the full invariant bundle for the cut polytope."""

    predicted_ok: bool
    growth_ok: bool
    star_ok: bool
    triangulation_ok: bool
    bookkeeping_ok: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.agree
            and self.predicted_ok
            and self.growth_ok
            and self.star_ok
            and self.triangulation_ok
            and self.bookkeeping_ok
        )


def verify_subgraph(host: Polytope3, edges: frozenset[int]) -> GammaVerdict:
    """Cut, predict, and brute-force check one admissible subgraph."""
    gamma = EdgeSubgraph(host, edges)
    result = truncate(host, gamma)
    val = gamma.valencies
    return GammaVerdict(
        edges=gamma.sorted_edges,
        pairs=gamma.vertex_pairs(),
        valency1=sum(1 for c in val if c == 1),
        valency3=sum(1 for c in val if c == 3),
        criterion=flag_criterion(host, gamma),
        criterion_bare=flag_criterion(host, gamma, apply_simplex_exception=False),
        oracle=is_flag_oracle(result.polytope),
        out_f=result.polytope.f_vector,
    )


def audit_subgraph(host: Polytope3, edges: frozenset[int]) -> GammaAudit:
    """Like :func:`verify_subgraph`, plus every output-side invariant."""
    gamma = EdgeSubgraph(host, edges)
    result = truncate(host, gamma)
    out = result.polytope
    val = gamma.valencies
    v1 = sum(1 for c in val if c == 1)
    v3 = sum(1 for c in val if c == 3)

    predicted = predicted_face_sizes(host, gamma)
    sizes = out.face_sizes
    predicted_ok = all(
        sizes[result.face_of_facet[fid]] == want
        for fid, want in predicted.facets.items()
    ) and all(
        sizes[result.face_of_edge[e]] == want
        for e, want in predicted.edge_faces.items()
    )

    oracle = is_flag_oracle(out)
    only_pairs = all(mf.cardinality == 2 for mf in missing_faces(out))
    return GammaAudit(
        edges=gamma.sorted_edges,
        pairs=gamma.vertex_pairs(),
        valency1=v1,
        valency3=v3,
        criterion=flag_criterion(host, gamma),
        criterion_bare=flag_criterion(host, gamma, apply_simplex_exception=False),
        oracle=oracle,
        out_f=out.f_vector,
        predicted_ok=predicted_ok,
        growth_ok=out.f2 == host.f2 + len(gamma.edges),
        star_ok=check_star_identity(p_vector(out)),
        triangulation_ok=is_flag(out) == oracle == only_pairs,
        bookkeeping_ok=(
            out.f0 == host.f0 + v1 + 3 * v3 and 2 * out.f1 == 3 * out.f0
        ),
    )


def admissible_subgraphs(
    host: Polytope3,
    *,
    sample: Optional[int] = None,
    seed: Optional[int] = None,
) -> Iterator[frozenset[int]]:
    """All admissible nonempty subgraphs, or a uniform sample of them.

    Without ``sample`` the host must have at most
    EXHAUSTIVE_EDGE_LIMIT edges.  With ``sample`` a seed is required and
    ``sample`` subsets are drawn uniformly, with replacement.
    """
    census = AdmissibleCensus(host)
    if sample is None:
        if len(host.edges) > EXHAUSTIVE_EDGE_LIMIT:
            raise ValueError(
                f"{len(host.edges)} edges is too many for an exhaustive sweep; "
                "pass sample= and seed="
            )
        yield from census.iter_nonempty()
    else:
        if seed is None:
            raise ValueError("sampled sweeps require an explicit seed")
        rng = random.Random(seed)
        for _ in range(sample):
            yield census.sample_nonempty(rng)


def run_sweep(
    host: Polytope3,
    subgraphs: Iterable[frozenset[int]],
    *,
    audit: bool = False,
) -> Iterator[GammaVerdict]:
    check = audit_subgraph if audit else verify_subgraph
    for edges in subgraphs:
        yield check(host, edges)

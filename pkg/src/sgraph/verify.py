"""Structural facts about signed-graph products, checked mechanically.

Each claim pairs an instance generator with a pure pass/fail predicate over
serializable instance payloads. A failing claim reports the first failing
payload, which can be re-checked standalone; a pass means only that no
counterexample was found among the generated instances at the given budget.
Runs are deterministic for a fixed seed.
"""

import json
import random
import time
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Iterable, Iterator

from .bdim import BdimCapExceededError, KnownBdim, bdim_search, is_k_positive
from .core import (
    SignedGraph,
    all_negative_complete,
    all_positive_complete,
    apply_switching,
    build_graph,
    cycle_sign,
    is_all_positive,
    is_antibalanced,
    is_balanced,
    is_switching_equivalent,
    negate,
    null_graph,
    path_graph,
    unbalanced_cycle,
)
from .products import bcd_lex, cartesian, hg_lex, strong, tensor
from .tables import table_witness

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


class UnknownClaimError(ValueError):
    """Requested claim id does not exist."""


@dataclass(frozen=True)
class Budget:
    """Per-claim size limits. trials=0 skips the claim entirely."""

    trials: int = 100
    max_k: int = 6


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    budget: Budget
    instances: Callable[[Budget, random.Random], Iterable[dict]]
    holds: Callable[[dict], bool]


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    status: str
    instances_checked: int
    counterexample: dict | None
    elapsed: float


# -- payload helpers ---------------------------------------------------------
# Graphs embed in payloads as graph-document dicts ({"n", "edges"}) so that a
# counterexample serializes directly in the CLI document format.


def _gdoc(g: SignedGraph) -> dict:
    return {"n": g.n, "edges": [[u, v, s] for u, v, s in g.edges]}


def _gfrom(doc: dict) -> SignedGraph:
    return build_graph(doc["n"], doc["edges"])


def _rand_sign(rng: random.Random) -> int:
    return rng.choice((-1, 1))


def _random_connected(rng: random.Random, n: int, extra: float = 0.35) -> SignedGraph:
    """Random connected signed graph: random tree plus extra edges."""
    edges = {}
    for v in range(1, n):
        u = rng.randrange(v)
        edges[(u, v)] = _rand_sign(rng)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges[(u, v)] = _rand_sign(rng)
    return SignedGraph(n, tuple((u, v, s) for (u, v), s in sorted(edges.items())))


def _random_balanced_connected(rng: random.Random, n: int) -> SignedGraph:
    g = _random_connected(rng, n)
    allpos = SignedGraph(n, tuple((u, v, 1) for u, v, _ in g.edges))
    zeta = tuple(_rand_sign(rng) for _ in range(n))
    return apply_switching(allpos, zeta)


def _random_antibalanced_connected(rng: random.Random, n: int) -> SignedGraph:
    return negate(_random_balanced_connected(rng, n))


def _signatures(n: int, pairs: list[tuple[int, int]]) -> Iterator[SignedGraph]:
    for signs in iproduct((-1, 1), repeat=len(pairs)):
        yield SignedGraph(n, tuple((u, v, s) for (u, v), s in zip(pairs, signs)))


def _underlying(g: SignedGraph) -> list[tuple[int, int]]:
    return [(u, v) for u, v, _ in g.edges]


_SMALL = {
    "K2": path_graph(2),
    "P3": path_graph(3),
    "C3": unbalanced_cycle(3),
    "C4": unbalanced_cycle(4),
}


def _bdim(g: SignedGraph) -> int:
    return bdim_search(g).dimension


def _exceeds(g: SignedGraph, cap: int) -> bool:
    """True when the balancing dimension is strictly greater than cap."""
    try:
        bdim_search(g, max_k=cap)
    except BdimCapExceededError:
        return True
    return False


# -- claims ------------------------------------------------------------------


def _c1_instances(budget: Budget, rng: random.Random):
    for t in range(budget.trials):
        g1 = _random_connected(rng, 2 + t % 3)
        g2 = _random_balanced_connected(rng, 2 + (t // 3) % 2)
        yield {"g1": _gdoc(g1), "g2": _gdoc(g2), "swapped": t % 2 == 1}


def _c1_holds(p: dict) -> bool:
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    prod = cartesian(g2, g1) if p["swapped"] else cartesian(g1, g2)
    return _bdim(prod) == _bdim(g1)


def _c2_instances(budget: Budget, rng: random.Random):
    for m in (3, 4, 5):
        for n in (3, 4, 5):
            expected = 2 if m > 3 and n > 3 else 3
            yield {"kind": "bdim", "m": m, "n": n, "expected": expected}
    for m in (4, 5, 6):
        for n in (4, 5, 6):
            yield {"kind": "table", "table": 1, "m": m, "n": n}
    for n in (4, 5, 6):
        yield {"kind": "table", "table": 2, "m": 3, "n": n}
    for m in (4, 5, 6):
        yield {"kind": "table", "table": 3, "m": m, "n": 3}
    yield {"kind": "table", "table": 4, "m": 3, "n": 3}


def _c2_holds(p: dict) -> bool:
    m, n = p["m"], p["n"]
    prod = cartesian(unbalanced_cycle(m), unbalanced_cycle(n))
    if p["kind"] == "bdim":
        return _bdim(prod) == p["expected"]
    return is_k_positive(prod, table_witness(p["table"], m, n))


def _c3_instances(budget: Budget, rng: random.Random):
    for m in (2, 3, 4):
        for n in (2, 3, 4):
            yield {"kind": "bdim", "m": m, "n": n}
    for m, n in ((2, 2), (3, 2), (3, 3), (4, 3), (4, 4)):
        yield {"kind": "table", "m": m, "n": n}


def _c3_holds(p: dict) -> bool:
    m, n = p["m"], p["n"]
    prod = cartesian(all_negative_complete(m), all_negative_complete(n))
    if p["kind"] == "bdim":
        return _bdim(prod) == KnownBdim().antibalanced_complete_bdim(max(m, n))
    base = bdim_search(all_negative_complete(m)).witness
    return is_k_positive(prod, table_witness(5, m, n, base=base))


def _c4_instances(budget: Budget, rng: random.Random):
    for t in range(budget.trials):
        n = 2 + t % 3
        g = _random_antibalanced_connected(rng, n)
        yield {"g": _gdoc(g), "n": n}


def _c4_holds(p: dict) -> bool:
    g, n = _gfrom(p["g"]), p["n"]
    expected = KnownBdim().antibalanced_complete_bdim(n)
    return _bdim(cartesian(g, all_negative_complete(n))) == expected


def _c5_instances(budget: Budget, rng: random.Random):
    for left in ("P3", "C3", "C4"):
        for right in ("K2", "P3"):
            u1, u2 = _SMALL[left], _SMALL[right]
            for g1 in _signatures(u1.n, _underlying(u1)):
                for g2 in _signatures(u2.n, _underlying(u2)):
                    yield {"g1": _gdoc(g1), "g2": _gdoc(g2)}


def _c5_holds(p: dict) -> bool:
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    expected = is_balanced(g1)[0] and is_all_positive(g2)
    return is_balanced(hg_lex(g1, g2))[0] == expected


def _c6_instances(budget: Budget, rng: random.Random):
    for left in ("K2", "P3", "C3"):
        for right in ("K2", "P3"):
            u1, u2 = _SMALL[left], _SMALL[right]
            for g1 in _signatures(u1.n, _underlying(u1)):
                for g2 in _signatures(u2.n, _underlying(u2)):
                    if any(s == -1 for _, _, s in g2.edges):
                        yield {"g1": _gdoc(g1), "g2": _gdoc(g2)}


def _c6_holds(p: dict) -> bool:
    return _exceeds(hg_lex(_gfrom(p["g1"]), _gfrom(p["g2"])), 2)


def _c7_instances(budget: Budget, rng: random.Random):
    for name in ("P3", "C3"):
        u = _SMALL[name]
        for g in _signatures(u.n, _underlying(u)):
            for k in (1, 2, 3):
                yield {"g": _gdoc(g), "k": k}


def _c7_holds(p: dict) -> bool:
    g, k = _gfrom(p["g"]), p["k"]
    d = _bdim(g)
    nk = null_graph(k)
    return _bdim(hg_lex(nk, g)) == d and _bdim(hg_lex(g, nk)) == d


def _transport_instances(budget: Budget, rng: random.Random):
    for t in range(budget.trials):
        g1 = _random_connected(rng, 2 + t % 3)
        g2 = _random_connected(rng, 2 + (t // 2) % 2)
        zeta = tuple(_rand_sign(rng) for _ in range(g1.n))
        yield {"g1": _gdoc(g1), "g2": _gdoc(g2), "zeta": list(zeta)}


def _c8_holds(p: dict) -> bool:
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    switched = apply_switching(g1, tuple(p["zeta"]))
    return is_switching_equivalent(hg_lex(switched, g2), hg_lex(g1, g2))


def _c9_instances(budget: Budget, rng: random.Random):
    for name in ("C3", "C4"):
        u = _SMALL[name]
        for g1 in _signatures(u.n, _underlying(u)):
            if not is_antibalanced(g1):
                continue
            for g2 in (all_negative_complete(2), negate(path_graph(3))):
                yield {"g1": _gdoc(g1), "g2": _gdoc(g2)}


def _c9_holds(p: dict) -> bool:
    return is_antibalanced(hg_lex(_gfrom(p["g1"]), _gfrom(p["g2"])))


def _c10_instances(budget: Budget, rng: random.Random):
    # larger orders are exact but far beyond desk-scale budgets: the
    # all-negative complete graph on 6 vertices already has dimension 7
    # and needs minutes of search
    yield {"m": 2, "n": 2}


def _c10_holds(p: dict) -> bool:
    m, n = p["m"], p["n"]
    prod = hg_lex(all_negative_complete(m), all_negative_complete(n))
    return _bdim(prod) == KnownBdim().antibalanced_complete_bdim(m * n)


def _allpos_factor_instances(budget: Budget, rng: random.Random):
    for t in range(budget.trials):
        g1 = _random_connected(rng, 2 + t % 3)
        g2 = all_positive_complete(2) if t % 2 == 0 else path_graph(3)
        yield {"g1": _gdoc(g1), "g2": _gdoc(g2)}


def _c11_holds(p: dict) -> bool:
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    return _bdim(hg_lex(g1, g2)) == _bdim(g1)


def _c12_holds(p: dict) -> bool:
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    switched = apply_switching(g1, tuple(p["zeta"]))
    return is_switching_equivalent(bcd_lex(switched, g2), bcd_lex(g1, g2))


def _c13_holds(p: dict) -> bool:
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    return _bdim(bcd_lex(g1, g2)) == _bdim(g1)


def _c14_instances(budget: Budget, rng: random.Random):
    for t in range(budget.trials):
        g1 = _random_balanced_connected(rng, 2 + t % 2)
        n2 = 2 + (t // 2) % 2
        pairs = _underlying(all_positive_complete(n2))
        signs = tuple(_rand_sign(rng) for _ in pairs)
        g2 = SignedGraph(n2, tuple((u, v, s) for (u, v), s in zip(pairs, signs)))
        yield {"g1": _gdoc(g1), "g2": _gdoc(g2)}


def _c14_holds(p: dict) -> bool:
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    return _bdim(bcd_lex(g1, g2)) == _bdim(g2)


def _c15_instances(budget: Budget, rng: random.Random):
    for left in ("K2", "P3", "C3"):
        for right in ("K2", "P3", "C3"):
            u1, u2 = _SMALL[left], _SMALL[right]
            for g1 in _signatures(u1.n, _underlying(u1)):
                for g2 in _signatures(u2.n, _underlying(u2)):
                    yield {"g1": _gdoc(g1), "g2": _gdoc(g2)}


def _c15_holds(p: dict) -> bool:
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    both_balanced = is_balanced(g1)[0] and is_balanced(g2)[0]
    both_anti = is_antibalanced(g1) and is_antibalanced(g2)
    return is_balanced(tensor(g1, g2))[0] == (both_balanced or both_anti)


def _c16_instances(budget: Budget, rng: random.Random):
    yield {"kind": "strict"}
    yield {"kind": "equal"}
    for t in range(budget.trials):
        g1 = _random_connected(rng, 2 + t % 3)
        g2 = _random_balanced_connected(rng, 2 + (t // 3) % 2)
        yield {"kind": "bound", "g1": _gdoc(g1), "g2": _gdoc(g2), "swapped": t % 2 == 1}


def _c16_holds(p: dict) -> bool:
    if p["kind"] == "strict":
        prod = tensor(all_negative_complete(3), all_negative_complete(2))
        return (
            is_balanced(prod)[0]
            and _bdim(prod) == 1
            and _bdim(all_negative_complete(3)) == 3
        )
    if p["kind"] == "equal":
        prod = tensor(all_negative_complete(3), all_positive_complete(3))
        return _bdim(prod) == 3 == _bdim(all_negative_complete(3))
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    prod = tensor(g2, g1) if p["swapped"] else tensor(g1, g2)
    return _bdim(prod) <= _bdim(g1)


def _c17_instances(budget: Budget, rng: random.Random):
    for t in range(budget.trials):
        g1 = _random_connected(rng, 2 + t % 2)
        g2 = _random_connected(rng, 2 + (t // 2) % 2)
        z1 = tuple(_rand_sign(rng) for _ in range(g1.n))
        z2 = tuple(_rand_sign(rng) for _ in range(g2.n))
        yield {"g1": _gdoc(g1), "g2": _gdoc(g2), "z1": list(z1), "z2": list(z2)}


def _c17_holds(p: dict) -> bool:
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    s1 = apply_switching(g1, tuple(p["z1"]))
    s2 = apply_switching(g2, tuple(p["z2"]))
    return is_switching_equivalent(strong(s1, s2), strong(g1, g2))


def _c18_instances(budget: Budget, rng: random.Random):
    for t in range(budget.trials):
        g1 = _random_connected(rng, 2 + t % 2)
        g2 = _random_balanced_connected(rng, 2 + (t // 2) % 2)
        yield {"g1": _gdoc(g1), "g2": _gdoc(g2), "swapped": t % 2 == 1}


def _c18_holds(p: dict) -> bool:
    g1, g2 = _gfrom(p["g1"]), _gfrom(p["g2"])
    prod = strong(g2, g1) if p["swapped"] else strong(g1, g2)
    return _bdim(prod) == _bdim(g1)


def _c19_instances(budget: Budget, rng: random.Random):
    for check in (
        "lex-complete-embeds",
        "tensor-collapse",
        "strong-balanced",
        "lex-order-matters",
        "bcd-antibalance-gap",
    ):
        yield {"check": check}


def _c19_holds(p: dict) -> bool:
    check = p["check"]
    if check == "lex-complete-embeds":
        g = hg_lex(all_positive_complete(2), all_negative_complete(2))
        complete = all(g.has_edge(u, v) for u in range(4) for v in range(u + 1, 4))
        return (
            complete
            and is_antibalanced(g)
            and _bdim(g) == 3
            and _bdim(all_negative_complete(2)) == 1
        )
    if check == "tensor-collapse":
        prod = tensor(all_negative_complete(3), all_negative_complete(2))
        return is_balanced(prod)[0] and _bdim(prod) == 1
    if check == "strong-balanced":
        prod = strong(all_negative_complete(2), all_negative_complete(2))
        return is_balanced(prod)[0] and not is_antibalanced(prod)
    if check == "lex-order-matters":
        two_neg_triangle = build_graph(3, [(0, 1, -1), (1, 2, -1), (0, 2, 1)])
        k2 = all_positive_complete(2)
        return (
            is_balanced(two_neg_triangle)[0]
            and _bdim(hg_lex(two_neg_triangle, k2)) == 1
            and _exceeds(hg_lex(k2, two_neg_triangle), 2)
        )
    if check == "bcd-antibalance-gap":
        g1 = build_graph(3, [(0, 1, -1), (1, 2, 1)])
        g2 = all_negative_complete(2)
        prod = bcd_lex(g1, g2)
        triangle_in_negation = cycle_sign(negate(prod), (0, 2, 3)) == -1
        return (
            is_antibalanced(g1)
            and triangle_in_negation
            and not is_antibalanced(prod)
        )
    raise ValueError(f"unknown check {check!r}")


def _registry() -> dict[str, Claim]:
    specs = [
        (
            "C1",
            "Cartesian product with a balanced factor keeps the unbalanced "
            "factor's balancing dimension",
            Budget(trials=18),
            _c1_instances,
            _c1_holds,
        ),
        (
            "C2",
            "Cartesian products of one-negative cycles have dimension 2 when "
            "both orders exceed 3, otherwise 3; the tabulated assignments "
            "witness both cases",
            Budget(trials=1),
            _c2_instances,
            _c2_holds,
        ),
        (
            "C3",
            "Cartesian products of all-negative complete graphs take the "
            "dimension of the larger factor; the cyclic shift of the larger "
            "factor's witness certifies it",
            Budget(trials=1),
            _c3_instances,
            _c3_holds,
        ),
        (
            "C4",
            "An antibalanced graph on n vertices times the all-negative "
            "complete graph on n vertices has that complete graph's dimension",
            Budget(trials=9),
            _c4_instances,
            _c4_holds,
        ),
        (
            "C5",
            "First-convention lexicographic product is balanced exactly when "
            "the left factor is balanced and the right factor is all-positive",
            Budget(trials=1),
            _c5_instances,
            _c5_holds,
        ),
        (
            "C6",
            "A negative edge in the right factor forces first-convention "
            "lexicographic dimension at least 3",
            Budget(trials=1),
            _c6_instances,
            _c6_holds,
        ),
        (
            "C7",
            "Composing with an edgeless graph on either side preserves "
            "balancing dimension",
            Budget(trials=1),
            _c7_instances,
            _c7_holds,
        ),
        (
            "C8",
            "Switching the left factor keeps the first-convention "
            "lexicographic product in the same switching class",
            Budget(trials=100),
            _transport_instances,
            _c8_holds,
        ),
        (
            "C9",
            "Antibalanced left factor and all-negative right factor give an "
            "antibalanced first-convention lexicographic product",
            Budget(trials=1),
            _c9_instances,
            _c9_holds,
        ),
        (
            "C10",
            "All-negative complete factors compose to the all-negative "
            "complete graph on the product order, with matching dimension",
            Budget(trials=1),
            _c10_instances,
            _c10_holds,
        ),
        (
            "C11",
            "All-positive right factor preserves the left factor's dimension "
            "under the first-convention lexicographic product",
            Budget(trials=20),
            _allpos_factor_instances,
            _c11_holds,
        ),
        (
            "C12",
            "Switching the left factor keeps the second-convention "
            "lexicographic product in the same switching class",
            Budget(trials=100),
            _transport_instances,
            _c12_holds,
        ),
        (
            "C13",
            "All-positive right factor preserves the left factor's dimension "
            "under the second-convention lexicographic product",
            Budget(trials=20),
            _allpos_factor_instances,
            _c13_holds,
        ),
        (
            "C14",
            "Balanced left factor and complete right factor: the "
            "second-convention lexicographic product takes the right "
            "factor's dimension",
            Budget(trials=12),
            _c14_instances,
            _c14_holds,
        ),
        (
            "C15",
            "Tensor product of connected factors is balanced exactly when "
            "both are balanced or both are antibalanced",
            Budget(trials=1),
            _c15_instances,
            _c15_holds,
        ),
        (
            "C16",
            "Tensor product with a balanced factor never exceeds the other "
            "factor's dimension; both strict drop and equality occur",
            Budget(trials=16),
            _c16_instances,
            _c16_holds,
        ),
        (
            "C17",
            "Switching either strong-product factor keeps the product in the "
            "same switching class",
            Budget(trials=100),
            _c17_instances,
            _c17_holds,
        ),
        (
            "C18",
            "Strong product with a balanced factor keeps the unbalanced "
            "factor's balancing dimension",
            Budget(trials=12),
            _c18_instances,
            _c18_holds,
        ),
        (
            "C19",
            "Worked examples: the 4-vertex antibalanced complete composition, "
            "a dimension-collapsing tensor, a balanced-but-not-antibalanced "
            "strong square, composition-order asymmetry, and the "
            "second-convention antibalance gap",
            Budget(trials=1),
            _c19_instances,
            _c19_holds,
        ),
    ]
    return {
        cid: Claim(cid, desc, budget, inst, holds)
        for cid, desc, budget, inst, holds in specs
    }


CLAIM_IDS = tuple(_registry())


def run_claims(
    selection: str | Iterable[str] = "all",
    seed: int = 0,
    overrides: dict[str, Budget] | None = None,
) -> list[ClaimReport]:
    """Run the selected claims and return one report per claim.

    Reports come back in registry (claim-id) order regardless of selection
    order. A fixed seed gives identical instance streams across runs.
    """
    registry = _registry()
    if selection == "all":
        ids = list(registry)
    else:
        requested = list(selection)
        unknown = [cid for cid in requested if cid not in registry]
        if unknown:
            raise UnknownClaimError(f"unknown claim ids: {unknown}")
        ids = [cid for cid in registry if cid in requested]
    reports = []
    for cid in ids:
        claim = registry[cid]
        budget = claim.budget
        if overrides and cid in overrides:
            budget = overrides[cid]
        start = time.perf_counter()
        if budget.trials == 0:
            reports.append(
                ClaimReport(cid, SKIPPED, 0, None, time.perf_counter() - start)
            )
            continue
        rng = random.Random(f"{seed}:{cid}")
        checked = 0
        counterexample = None
        for payload in claim.instances(budget, rng):
            checked += 1
            if not claim.holds(payload):
                counterexample = payload
                break
        status = FAIL if counterexample is not None else PASS
        reports.append(
            ClaimReport(
                cid, status, checked, counterexample, time.perf_counter() - start
            )
        )
    return reports


def recheck_counterexample(claim_id: str, payload: dict) -> bool:
    """Re-run one claim instance standalone; False reproduces the failure."""
    registry = _registry()
    if claim_id not in registry:
        raise UnknownClaimError(f"unknown claim id: {claim_id}")
    return registry[claim_id].holds(payload)


def claim_description(claim_id: str) -> str:
    registry = _registry()
    if claim_id not in registry:
        raise UnknownClaimError(f"unknown claim id: {claim_id}")
    return registry[claim_id].description


def format_report(report: ClaimReport) -> str:
    line = (
        f"{report.claim_id:<4} {report.status:<7} "
        f"{report.instances_checked:>5} instances  {report.elapsed:8.2f}s"
    )
    if report.counterexample is not None:
        line += f"\n     counterexample: {json.dumps(report.counterexample)}"
    return line


def report_record(report: ClaimReport) -> dict:
    """Machine-readable form of one report."""
    return {
        "id": report.claim_id,
        "status": report.status,
        "instances_checked": report.instances_checked,
        "elapsed": report.elapsed,
        "counterexample": report.counterexample,
        "description": claim_description(report.claim_id),
    }

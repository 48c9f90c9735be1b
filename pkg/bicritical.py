import logging
from typing import List, Optional, Tuple

from config import BICRITICAL_ORACLE_LIMIT
from exceptions.exception import OracleLimitExceeded
from generators import build
from graph_core import Graph
from models import BicriticalVerdict, EarPendantRecipe

logger = logging.getLogger(__name__)


def _masks(g: Graph) -> List[int]:
    masks = []
    for v in g.vertices:
        mask = 0
        for u in g.neighbors(v):
            mask |= 1 << u
        masks.append(mask)
    return masks


def _smallest_violator(masks: List[int]) -> Optional[Tuple[int, ...]]:
    """First independent S with |N(S)| <= |S| in (size, lexicographic) order.

    One depth-first pass; once a violator of size k is known, no set larger than k is extended.
    """
    n = len(masks)
    best: Optional[Tuple[int, ...]] = None

    def walk(start: int, blocked: int, reach: int, chosen: Tuple[int, ...]) -> None:
        nonlocal best
        for v in range(start, n):
            if blocked >> v & 1:
                continue
            members = chosen + (v,)
            if best is not None and len(members) > len(best):
                return
            covered = reach | masks[v]
            if bin(covered).count("1") <= len(members):
                if best is None or (len(members), members) < (len(best), best):
                    best = members
                continue
            if best is None or len(members) < len(best):
                walk(v + 1, blocked | masks[v], covered, members)

    walk(0, 0, 0, ())
    return best


def is_2bicritical(g: Graph) -> BicriticalVerdict:
    if g.n > BICRITICAL_ORACLE_LIMIT:
        raise OracleLimitExceeded(f"Bicriticality oracle limited to {BICRITICAL_ORACLE_LIMIT} vertices, got {g.n}")

    witness = _smallest_violator(_masks(g))
    if witness is None:
        return BicriticalVerdict(is_bicritical=True)
    logger.debug(f"Bicriticality witness {witness} on graph with n={g.n}")
    return BicriticalVerdict(is_bicritical=False, witness=frozenset(witness))


def certify_by_recipe(recipe: EarPendantRecipe) -> bool:
    """A valid recipe certifies every component as 2-bicritical; replay re-validates each step."""
    graph = build(recipe)
    logger.info(
        f"Recipe certified: {graph.n} vertices, {len(recipe.steps)} steps, {len(recipe.detached)} detached cycles"
    )
    return True

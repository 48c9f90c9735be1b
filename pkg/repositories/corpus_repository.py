import logging
import os

from graph_core import Graph, to_edge_list
from models import EarPendantRecipe, FamilyTag

logger = logging.getLogger(__name__)


class CorpusRepository:
    """Edge-list files with recipe JSON sidecars, named `<Kind>_<index>_<seed>`."""

    def __init__(self, out_dir: str):
        self.out_dir = out_dir

    @staticmethod
    def stem(kind: FamilyTag, index: int, seed: int) -> str:
        return f"{kind.value}_{index:04d}_{seed:016x}"

    def save(self, kind: FamilyTag, index: int, seed: int, g: Graph, recipe: EarPendantRecipe) -> str:
        os.makedirs(self.out_dir, exist_ok=True)
        base = os.path.join(self.out_dir, self.stem(kind, index, seed))
        try:
            with open(f"{base}.el", "w", encoding="utf-8") as handle:
                handle.write(to_edge_list(g))
            with open(f"{base}.recipe.json", "w", encoding="utf-8") as handle:
                handle.write(recipe.model_dump_json(indent=2))
        except OSError as e:
            logger.error(f"Error writing {base}: {e}")
            raise
        logger.info(f"Wrote {base}.el ({g.n} vertices, {g.m} edges)")
        return f"{base}.el"


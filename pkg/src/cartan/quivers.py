"""
The quivers Q(C, Ω), Q°(C, Ω), Q~(C, Ω) and the EI quiver of Cartan type.

Arrows are ordered α_ij^(g) for (i, j) in Ω (sorted) and g = 1..g_ij, then
the loops ε_1, ..., ε_n, then on Q~ the reversed arrows α_ji^(g) in the
order of the α_ij^(g) they reverse. Q° keeps only the first block, so an
arrow α_ij^(g) has the same index in all three quivers.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.cartan.triple import CartanTriple
from src.errors import CartanError, QuiverError
from src.groups.bisets import biset_from_embeddings
from src.groups.groups import cyclic_embedding, cyclic_group
from src.quivers.ei_quiver import EIQuiver, make_ei_quiver
from src.quivers.quiver import Quiver, make_quiver
from src.utils.logger import get_logger

logger = get_logger(__name__)

ArrowKey = Tuple[int, int, int]


def _arrow_name(triple: CartanTriple, i: int, j: int, g: int) -> str:
    li, lj = triple.label(i), triple.label(j)
    base = f"α{li}{lj}" if len(li) == 1 and len(lj) == 1 else f"α[{li},{lj}]"
    return base if triple.g(i, j) == 1 else f"{base}^({g})"


def alpha_keys(triple: CartanTriple) -> List[ArrowKey]:
    """(i, j, g) for every arrow α_ij^(g): j -> i of Q°, in arrow order."""
    return [(i, j, g) for i, j in triple.omega for g in range(1, triple.g(i, j) + 1)]


@dataclass(frozen=True)
class CartanQuivers:
    """
    Q with loops, Q° without them, and Q~ with the reversed arrows added.

    ``arrows[(i, j, g)]`` is the index of α_ij^(g): j -> i in Q~ for every
    (i, j) in Ω-bar; ``loops[i]`` is the index of ε_i in Q and Q~.
    """

    triple: CartanTriple
    quiver: Quiver
    plain: Quiver
    doubled: Quiver
    arrows: Dict[ArrowKey, int]
    loops: Tuple[int, ...]

    def star_arrows(self) -> List[int]:
        """Indices of the arrows α_ij^(g) with (i, j) in Ω*."""
        return sorted(a for (i, j, _), a in self.arrows.items() if (j, i) in self.triple.omega)


def build_cartan_quivers(triple: CartanTriple) -> CartanQuivers:
    n = triple.n
    keys = alpha_keys(triple)
    alphas = [(_arrow_name(triple, i, j, g), j, i) for i, j, g in keys]
    loops = [(f"ε{triple.label(i)}", i, i) for i in range(n)]
    reversed_ = [(_arrow_name(triple, j, i, g), i, j) for i, j, g in keys]

    arrows: Dict[ArrowKey, int] = {key: a for a, key in enumerate(keys)}
    offset = len(keys) + n
    for a, (i, j, g) in enumerate(keys):
        arrows[(j, i, g)] = offset + a

    return CartanQuivers(
        triple=triple,
        quiver=make_quiver(n, alphas + loops),
        plain=make_quiver(n, alphas),
        doubled=make_quiver(n, alphas + loops + reversed_),
        arrows=arrows,
        loops=tuple(len(keys) + i for i in range(n)),
    )


def build_quivers(triple: CartanTriple) -> Tuple[Quiver, Quiver]:
    """
    Q(C, Ω) with the loops ε_i and Q°(C, Ω) without them.

    Returns:
        (Q, Q°); Q° is acyclic because Ω is
    """
    quivers = build_cartan_quivers(triple)
    return quivers.quiver, quivers.plain


def cartan_ei_quiver(triple: CartanTriple) -> EIQuiver:
    """
    (Q°, X) with X(i) = C_{c_i} and X(α_ij^(g)) = X(i) x_{G_ij} X(j).

    G_ij = C_{g_ij} embeds in X(i) by η_ij -> η_i^{c_i/g_ij} and in X(j) by
    η_ij -> η_j^{c_j/g_ij}.

    Raises:
        CartanError: g_ij does not divide c_i or c_j
        QuiverError: the assignment is not action-free
    """
    plain = build_cartan_quivers(triple).plain
    groups = [cyclic_group(c, generator=f"η{triple.label(i)}") for i, c in enumerate(triple.D)]
    bisets = []
    for i, j, _ in alpha_keys(triple):
        g = triple.g(i, j)
        if triple.D[i] % g or triple.D[j] % g:
            raise CartanError(
                "symmetrizer",
                f"g_{triple.label(i)}{triple.label(j)} = {g} must divide c_{triple.label(i)} and c_{triple.label(j)}",
            )
        middle = cyclic_group(g, generator=f"η{triple.label(i)}{triple.label(j)}")
        bisets.append(biset_from_embeddings(cyclic_embedding(middle, groups[i]), cyclic_embedding(middle, groups[j])))

    ei_quiver = make_ei_quiver(plain, groups, bisets)
    if not ei_quiver.is_action_free():
        raise QuiverError("the EI quiver of Cartan type came out with a non-free biset")
    logger.info(
        f"EI quiver of Cartan type: groups {[grp.order for grp in groups]}, "
        f"biset sizes {[b.size for b in bisets]}"
    )
    return ei_quiver

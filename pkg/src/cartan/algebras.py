"""
H(C, D, Ω) and the generalized preprojective algebra Π(C, D, Ω) as graded
path algebra quotients.

H is graded by the number of arrows α (the loops ε have degree 0), which
makes ε_i^{f_ji} α_ij = α_ij ε_j^{f_ij} homogeneous even when f_ij != f_ji.
Π(C, D, Ω) is graded by star-degree: the arrows α_ij with (i, j) in Ω* have
degree 1, everything else degree 0, so its degree 0 part is H.
"""

from typing import Dict, List, Optional, Sequence

from src.algebra.graded import Element, GradedAlgebraPresentation, path_algebra_quotient
from src.cartan.quivers import CartanQuivers, alpha_keys, build_cartan_quivers
from src.cartan.triple import CartanTriple
from src.quivers.quiver import Quiver
from src.scalars.fields import FieldDescriptor
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _add(quiver: Quiver, field: FieldDescriptor, relation: Element, arrows: Sequence[int], c) -> None:
    p = quiver.path(arrows)
    relation[p] = field.add(relation.get(p, field.zero), c)


def nilpotency_relations(quivers: CartanQuivers, quiver: Quiver, field: FieldDescriptor) -> List[Element]:
    """ε_k^{c_k} = 0 for every vertex k."""
    triple = quivers.triple
    out = []
    for k, loop in enumerate(quivers.loops):
        relation: Element = {}
        _add(quiver, field, relation, (loop,) * triple.D[k], field.one)
        out.append(relation)
    return out


def commutation_relations(
    quivers: CartanQuivers,
    quiver: Quiver,
    field: FieldDescriptor,
    pairs: Sequence,
) -> List[Element]:
    """ε_i^{f_ji} α_ij^(g) - α_ij^(g) ε_j^{f_ij} for (i, j) in ``pairs``."""
    triple = quivers.triple
    out = []
    for i, j in pairs:
        for g in range(1, triple.g(i, j) + 1):
            alpha = quivers.arrows[(i, j, g)]
            relation: Element = {}
            _add(quiver, field, relation, (quivers.loops[i],) * triple.f(j, i) + (alpha,), field.one)
            _add(quiver, field, relation, (alpha,) + (quivers.loops[j],) * triple.f(i, j), field.neg(field.one))
            out.append(relation)
    return out


def vertex_relation(quivers: CartanQuivers, field: FieldDescriptor, i: int) -> Element:
    """
    Σ_{j in Ω-bar(-,i)} Σ_g Σ_{f=0}^{f_ji - 1} sgn(i,j) ε_i^f α_ij^(g) α_ji^(g) ε_i^{f_ji - 1 - f}.
    """
    triple, quiver = quivers.triple, quivers.doubled
    loop = quivers.loops[i]
    relation: Element = {}
    for j in triple.neighbours(i):
        sign = field.from_int(triple.sgn(i, j))
        f_ji = triple.f(j, i)
        for g in range(1, triple.g(j, i) + 1):
            middle = (quivers.arrows[(i, j, g)], quivers.arrows[(j, i, g)])
            for f in range(f_ji):
                _add(quiver, field, relation, (loop,) * f + middle + (loop,) * (f_ji - 1 - f), sign)
    return {p: c for p, c in relation.items() if c != field.zero}


def h_relations(quivers: CartanQuivers, field: FieldDescriptor) -> List[Element]:
    quiver = quivers.quiver
    return nilpotency_relations(quivers, quiver, field) + commutation_relations(
        quivers, quiver, field, quivers.triple.omega
    )


def gls_relations(quivers: CartanQuivers, field: FieldDescriptor) -> List[Element]:
    """The loop, commutation and vertex relations of Π(C, D, Ω), in that order."""
    quiver = quivers.doubled
    out = nilpotency_relations(quivers, quiver, field)
    out += commutation_relations(quivers, quiver, field, quivers.triple.omega_bar)
    for i in range(quivers.triple.n):
        relation = vertex_relation(quivers, field, i)
        if relation:
            out.append(relation)
    return out


def algebra_H(triple: CartanTriple, field: FieldDescriptor, maxdeg: Optional[int] = None) -> GradedAlgebraPresentation:
    """
    H(C, D, Ω) = KQ / (ε_k^{c_k}, ε_i^{f_ji} α_ij^(g) - α_ij^(g) ε_j^{f_ij}).

    Args:
        triple: A Cartan triple
        field: Coefficient field
        maxdeg: Highest degree to build; defaults to n, past the longest path of Q°

    Returns:
        Presentation graded by the number of arrows α
    """
    quivers = build_cartan_quivers(triple)
    weights = [1] * len(alpha_keys(triple)) + [0] * triple.n
    presentation = path_algebra_quotient(
        quivers.quiver,
        h_relations(quivers, field),
        field,
        grading=weights,
        maxdeg=triple.n if maxdeg is None else maxdeg,
        name="H(C,D,Ω)",
    )
    logger.debug(f"H(C,D,Ω) relations: {presentation.relation_labels}")
    return presentation


def gls_preprojective(
    triple: CartanTriple,
    field: FieldDescriptor,
    maxdeg: Optional[int] = None,
) -> GradedAlgebraPresentation:
    """
    Π(C, D, Ω) = KQ~ / I~, graded by star-degree.

    Args:
        triple: A Cartan triple
        field: Coefficient field
        maxdeg: Highest star-degree to build; defaults to EIPRE_DEFAULT_MAXDEG
    """
    quivers = build_cartan_quivers(triple)
    presentation = path_algebra_quotient(
        quivers.doubled,
        gls_relations(quivers, field),
        field,
        grading="star",
        maxdeg=maxdeg,
        star_arrows=quivers.star_arrows(),
        name="Π(C,D,Ω)",
    )
    logger.info(f"Π(C,D,Ω) with {len(presentation.relation_labels)} relations")
    return presentation


def relation_names(quivers: CartanQuivers, field: FieldDescriptor, relations: Sequence[Element]) -> List[Dict[str, str]]:
    """Relations as {path name: coefficient} for display."""
    return [{quivers.doubled.path_name(p): field.format(c) for p, c in r.items()} for r in relations]

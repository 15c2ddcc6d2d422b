"""
Preprojective algebras of finite EI quivers.

Π(Q, X) is KC(Q-bar, X-bar) modulo the star-degree one relation

    ρ = Σ_α (Σ_{b in R_α} b b* - Σ_{c in L_α} c* c)

with R_α, L_α right and left orbit representatives of X(α). Its degree one
part Π_1 is also built directly as a KC-KC-bimodule from
KC (x)_A V_1 (x)_A KC, A the product of the vertex group algebras.
"""

import random
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.algebra import Algebra, category_algebra, vertex_group_algebra
from src.algebra.bimodule import (
    Bimodule,
    TensorProduct,
    quotient_bimodule,
    regular_bimodule,
    restrict_bimodule,
    tensor_over_algebra,
)
from src.algebra.graded import CategoryAmbient, Element, GradedAlgebraPresentation
from src.config import settings
from src.errors import AlgebraError
from src.groups.bisets import orbit_reps
from src.quivers.category import EICategory, build_category
from src.quivers.ei_quiver import EIQuiver, double_ei_quiver
from src.quivers.quiver import Path
from src.scalars.fields import FieldDescriptor
from src.scalars.linalg import Vector, mat_vec, rank, zeros
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _arrow_path(ei_quiver: EIQuiver, a: int) -> Path:
    quiver = ei_quiver.quiver
    return Path((a,), quiver.source(a), quiver.target(a))


def rho_element(
    category: EICategory,
    field: FieldDescriptor,
    rng: Optional[random.Random] = None,
) -> Element:
    """
    ρ in the morphism basis of a category over a double EI quiver.

    Orbit representatives are the minimal elements unless ``rng`` is given,
    in which case one member of every orbit is drawn at random.
    """
    double = category.ei_quiver
    if not double.is_double:
        raise AlgebraError("ρ lives in the category of a double EI quiver")
    rho: Element = {}

    def accumulate(key: Optional[int], c) -> None:
        if key is None:
            raise AlgebraError("truncation too short to hold ρ")
        rho[key] = field.add(rho.get(key, field.zero), c)

    for a in range(double.n_original):
        star = double.dual_arrow(a)
        biset = double.bisets[a]
        path, star_path = _arrow_path(double, a), _arrow_path(double, star)
        for b in orbit_reps(biset, "right", rng):
            f, g = category.index(path, b), category.index(star_path, b)
            accumulate(category.compose(f, g), field.one)
        for c in orbit_reps(biset, "left", rng):
            f, g = category.index(path, c), category.index(star_path, c)
            accumulate(category.compose(g, f), field.neg(field.one))
    return {k: c for k, c in rho.items() if c != field.zero}


def rho_components(category: EICategory, rho: Element) -> List[Element]:
    """ρ_i = e_i ρ e_i for every vertex i."""
    parts: List[Element] = [{} for _ in range(category.n_objects)]
    for key, c in rho.items():
        morphism = category.morphisms[key]
        parts[morphism.target][key] = c
    return parts


def preprojective_presentation(
    ei_quiver: EIQuiver,
    field: FieldDescriptor,
    maxdeg: Optional[int] = None,
    per_vertex: bool = False,
    rng: Optional[random.Random] = None,
) -> GradedAlgebraPresentation:
    """
    Π(Q, X) as KC(Q-bar, X-bar) modulo (ρ), graded by star-degree.

    Args:
        ei_quiver: An acyclic EI quiver
        field: Coefficient field
        maxdeg: Highest star-degree to build; defaults to EIPRE_DEFAULT_MAXDEG
        per_vertex: Use the components ρ_i as relations instead of ρ
        rng: Draw random orbit representatives

    Raises:
        QuiverError: the quiver has an oriented cycle
    """
    maxdeg = settings.engine.default_maxdeg if maxdeg is None else maxdeg
    double = double_ei_quiver(ei_quiver)
    ambient = CategoryAmbient(double, field, max(maxdeg, 1))
    rho = rho_element(ambient.category, field, rng)
    if per_vertex:
        relations = [r for r in rho_components(ambient.category, rho) if r]
        labels = [f"ρ{i + 1}" for i, r in enumerate(rho_components(ambient.category, rho)) if r]
    else:
        relations, labels = [rho], ["ρ"]
    presentation = GradedAlgebraPresentation(ambient, relations, name="Π(Q,X)", relation_labels=labels)
    logger.info(f"Preprojective presentation: ρ = {ambient.format(rho)}")
    return presentation


def arrow_bimodule(
    category: EICategory,
    vertex_algebra: Algebra,
    inclusion: Sequence[int],
    arrows: Sequence[int],
    name: str = "V",
) -> Tuple[Bimodule, List[Tuple[int, int]]]:
    """
    ⊕ KX(a) over the chosen arrows as an A-A-bimodule, with its (arrow, element) basis.

    ``inclusion`` maps the basis of A to the identity-path morphisms of the
    category, whose group elements act through the arrow bisets.
    """
    ei_quiver = category.ei_quiver
    quiver = ei_quiver.quiver
    basis: List[Tuple[int, int]] = [(a, x) for a in arrows for x in range(ei_quiver.bisets[a].size)]
    position = {pair: k for k, pair in enumerate(basis)}
    n = len(basis)
    field = vertex_algebra.field
    left, right = [], []
    for k in inclusion:
        morphism = category.morphisms[k]
        vertex, g = morphism.source, morphism.element
        lm, rm = zeros(field, n, n), zeros(field, n, n)
        for (a, x), col in position.items():
            biset = ei_quiver.bisets[a]
            if quiver.target(a) == vertex:
                lm[position[(a, biset.act_left(g, x))]][col] = field.one
            if quiver.source(a) == vertex:
                rm[position[(a, biset.act_right(x, g))]][col] = field.one
        left.append(lm)
        right.append(rm)
    labels = [ei_quiver.bisets[a].label(x) for a, x in basis]
    return Bimodule(vertex_algebra, vertex_algebra, n, left, right, name=name, labels=labels), basis


def _unit_vector(algebra: Algebra) -> Vector:
    field = algebra.field
    v = [field.zero] * algebra.dim
    for e in algebra.idempotents:
        v[e] = field.one
    return v


def _basis_vector(field: FieldDescriptor, n: int, k: int) -> Vector:
    v = [field.zero] * n
    v[k] = field.one
    return v


def pi_one_bimodule(
    ei_quiver: EIQuiver,
    field: FieldDescriptor,
    rng: Optional[random.Random] = None,
    algebra: Optional[Algebra] = None,
) -> Bimodule:
    """
    Π_1 = (KC (x)_A V_1 (x)_A KC) / KC ρ' KC with V_1 = ⊕ KX(α*).

    ρ' = Σ_α (Σ_b b (x) b* (x) 1 - Σ_c 1 (x) c* (x) c).

    Args:
        algebra: An existing KC to act on both sides; built from ``ei_quiver`` when omitted

    Raises:
        QuiverError: the quiver has an oriented cycle
    """
    double = double_ei_quiver(ei_quiver)
    if algebra is not None and algebra.category is not None:
        category, kc = algebra.category, algebra
    else:
        category = build_category(ei_quiver)
        kc = category_algebra(category, field)
    vertex_algebra, inclusion = vertex_group_algebra(category, field)
    images = [{k: field.one} for k in inclusion]

    double_category = EICategory(double, max_length=1)
    star_arrows = [double.dual_arrow(a) for a in range(double.n_original)]
    double_inclusion = [double_category.index(category.morphisms[k].path, category.morphisms[k].element) for k in inclusion]
    v1, v1_basis = arrow_bimodule(double_category, vertex_algebra, double_inclusion, star_arrows, name="V1")

    kc_a = restrict_bimodule(regular_bimodule(kc), right=(vertex_algebra, images), name="KC")
    a_kc = restrict_bimodule(regular_bimodule(kc), left=(vertex_algebra, images), name="KC")
    first: TensorProduct = tensor_over_algebra(kc_a, v1)
    second: TensorProduct = tensor_over_algebra(first.bimodule, a_kc)

    unit = _unit_vector(kc)
    position = {pair: k for k, pair in enumerate(v1_basis)}
    rho_prime = [field.zero] * second.bimodule.dim
    for a in range(double.n_original):
        star = double.dual_arrow(a)
        biset = double.bisets[a]
        arrow = _arrow_path(double, a)
        for b in orbit_reps(biset, "right", rng):
            left = first.tensor(_basis_vector(field, kc.dim, category.index(arrow, b)), _basis_vector(field, v1.dim, position[(star, b)]))
            term = second.tensor(left, unit)
            rho_prime = [field.add(x, y) for x, y in zip(rho_prime, term)]
        for c in orbit_reps(biset, "left", rng):
            left = first.tensor(unit, _basis_vector(field, v1.dim, position[(star, c)]))
            term = second.tensor(left, _basis_vector(field, kc.dim, category.index(arrow, c)))
            rho_prime = [field.sub(x, y) for x, y in zip(rho_prime, term)]

    pi_one, _ = quotient_bimodule(second.bimodule, [rho_prime] if second.bimodule.dim else [], name="Π1")
    logger.info(f"Π1 has dimension {pi_one.dim} (ambient KC⊗V1⊗KC of dimension {second.bimodule.dim})")
    return pi_one


def tensor_algebra_check(category: EICategory, field: FieldDescriptor) -> Tuple[bool, Optional[str]]:
    """
    Compare KC with T_A(V), V = ⊕ KX(α), degree by degree.

    A morphism over a_n ... a_1 with canonical tuple (x_n, ..., x_1) is sent
    to x_n (x) ... (x) x_1. The check asks that these tensors form a basis of
    V^(x)n, that composition corresponds to concatenation of tensors and that
    the vertex groups act compatibly.
    """
    ei_quiver = category.ei_quiver
    vertex_algebra, inclusion = vertex_group_algebra(category, field)
    arrows = list(range(ei_quiver.quiver.n_arrows))
    v, v_basis = arrow_bimodule(category, vertex_algebra, inclusion, arrows)
    position = {pair: k for k, pair in enumerate(v_basis)}
    top = max((m.path.length for m in category.morphisms), default=0)

    powers: List[Optional[TensorProduct]] = [None, None]
    bimodules: List[Bimodule] = [regular_bimodule(vertex_algebra), v]
    for n in range(2, top + 1):
        product = tensor_over_algebra(bimodules[-1], v)
        powers.append(product)
        bimodules.append(product.bimodule)

    def tensor_of(path_arrows: Tuple[int, ...], elements: Tuple[int, ...]) -> Vector:
        coords = _basis_vector(field, v.dim, position[(path_arrows[0], elements[0])])
        for k in range(1, len(path_arrows)):
            coords = powers[k + 1].tensor(coords, _basis_vector(field, v.dim, position[(path_arrows[k], elements[k])]))
        return coords

    images: Dict[int, Vector] = {}
    for n in range(1, top + 1):
        of_length = [k for k, m in enumerate(category.morphisms) if m.path.length == n]
        if len(of_length) != bimodules[n].dim:
            return False, f"degree {n}: {len(of_length)} morphisms but dim V^{n} = {bimodules[n].dim}"
        for k in of_length:
            m = category.morphisms[k]
            images[k] = tensor_of(m.path.arrows, category.path_data(m.path).tuples[m.element])
        if of_length and rank(field, [images[k] for k in of_length], bimodules[n].dim) != len(of_length):
            return False, f"degree {n}: morphisms do not map to a basis of V^{n}"

    positive = sorted(images)
    for f in positive:
        for g in positive:
            fg = category.compose(f, g)
            if fg is None:
                continue
            mf, mg = category.morphisms[f], category.morphisms[g]
            concatenated = tensor_of(
                mf.path.arrows + mg.path.arrows,
                category.path_data(mf.path).tuples[mf.element] + category.path_data(mg.path).tuples[mg.element],
            )
            if concatenated != images.get(fg):
                return False, f"{category.label(f)} ∘ {category.label(g)} does not match the tensor product"

    for a, k in enumerate(inclusion):
        for f in positive:
            n = category.morphisms[f].path.length
            power = bimodules[n]
            for composite, action in (
                (category.compose(k, f), power.left_actions[a]),
                (category.compose(f, k), power.right_actions[a]),
            ):
                acted = mat_vec(field, action, images[f])
                expected = images[composite] if composite is not None else [field.zero] * power.dim
                if acted != expected:
                    return False, f"vertex group action on {category.label(f)} does not match"
    return True, None


"""
Projective covers and injective envelopes.

A cover of M starts from the free-ish module Q = ⊕_k A e_{i_k} on a basis of
top M. Q maps onto M, and the summand of Q that is a projective cover is cut
out by an idempotent of End(Q) lifted from a splitting of top Q -> top M.
Injective envelopes are the duals of projective covers over A^op.
"""

from dataclasses import dataclass
from typing import List

from src.algebra.modules import (
    LeftModule,
    compose,
    direct_sum,
    dual_map,
    dual_module,
    hom_space,
    kernel,
    cokernel,
    projective_module,
    quotient_by_echelon,
    submodule,
)
from src.errors import ModuleError
from src.homology.radical import radical_layer
from src.scalars.linalg import (
    Matrix,
    identity,
    mat_add,
    mat_mul,
    mat_scale,
    mat_vec,
    mat_sub,
    solve,
    transpose,
    zeros,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)

IDEMPOTENT_LIFT_STEPS = 64


@dataclass
class ProjectiveCover:
    """P -> M with kernel; ``kernel_inclusion`` maps the kernel into P."""

    module: LeftModule
    cover: LeftModule
    cover_map: Matrix
    kernel: LeftModule
    kernel_inclusion: Matrix


@dataclass
class InjectiveEnvelope:
    """M -> I with cokernel; ``cokernel_projection`` maps I onto it."""

    module: LeftModule
    envelope: LeftModule
    embedding: Matrix
    cokernel: LeftModule
    cokernel_projection: Matrix


def _section(field, n_rows: int, complement: List[int]) -> Matrix:
    """V/S -> V sending class k to the standard vector at complement[k]."""
    out = zeros(field, n_rows, len(complement))
    for k, c in enumerate(complement):
        out[c][k] = field.one
    return out


def _lift_idempotent(field, f: Matrix) -> Matrix:
    for _ in range(IDEMPOTENT_LIFT_STEPS):
        square = mat_mul(field, f, f)
        if square == f:
            return f
        cube = mat_mul(field, square, f)
        f = mat_sub(field, mat_scale(field, field.from_int(3), square), mat_scale(field, field.from_int(2), cube))
    raise ModuleError(f"idempotent lift did not converge in {IDEMPOTENT_LIFT_STEPS} steps")


def _splitting(top: LeftModule, top_q: LeftModule, mu_bar: Matrix) -> Matrix:
    """A module map s: top M -> top Q with mu_bar s = 1."""
    field = top.field
    candidates = hom_space(top, top_q)
    n, m = top.dim, top_q.dim
    images = [mat_mul(field, mu_bar, h, m, n) for h in candidates]
    target = [x for row in identity(field, n) for x in row]
    rows = [[images[t][r][c] for t in range(len(images))] for r in range(n) for c in range(n)]
    coeffs = solve(field, rows, target, len(images))
    if coeffs is None:
        raise ModuleError("top of the free cover does not split over top M")
    out = zeros(field, m, n)
    for c, h in zip(coeffs, candidates):
        out = mat_add(field, out, mat_scale(field, c, h))
    return out


def projective_cover(module: LeftModule) -> ProjectiveCover:
    """
    A projective cover P -> M and its kernel.

    Raises:
        ModuleError: the idempotent lift fails
    """
    algebra, field = module.algebra, module.field
    if module.dim == 0:
        return ProjectiveCover(module, module, [], module, [])

    top, pi_m, generators = quotient_by_echelon(module, radical_layer(module), name=f"top {module.name}")
    vertices = [module.vertex_of[g] for g in generators]
    summands, spans = [], []
    for i in vertices:
        p, basis = projective_module(algebra, i)
        summands.append(p)
        spans.append(basis)
    free, inclusions, _ = direct_sum(summands, name=f"Q({module.name})")

    columns = []
    for g, basis in zip(generators, spans):
        unit = [field.zero] * module.dim
        unit[g] = field.one
        columns.extend(module.act(b, unit) for b in basis)
    mu = transpose(columns, module.dim)

    top_q, pi_q, q_generators = quotient_by_echelon(free, radical_layer(free), name="top Q")
    if top_q.dim == top.dim:
        cover, cover_map = free, mu
    else:
        sigma_q = _section(field, free.dim, q_generators)
        mu_bar = compose(field, pi_m, compose(field, mu, sigma_q, free.dim, top_q.dim), module.dim, top_q.dim)
        e_bar = compose(field, _splitting(top, top_q, mu_bar), mu_bar, top.dim, top_q.dim)
        lift_columns = []
        for k, (i, basis) in enumerate(zip(vertices, spans)):
            epsilon = [row[basis.index(algebra.idempotents[i])] for row in inclusions[k]]
            target = mat_vec(field, sigma_q, mat_vec(field, e_bar, mat_vec(field, pi_q, epsilon)))
            w = free.act(algebra.idempotents[i], target)
            lift_columns.extend(free.act(b, w) for b in basis)
        lift = _lift_idempotent(field, transpose(lift_columns, free.dim))
        cover, inclusion = submodule(free, transpose(lift, free.dim), name=f"P({module.name})")
        cover_map = compose(field, mu, inclusion, free.dim, cover.dim)

    cover.name = f"P({module.name})"
    kern, kern_inclusion = kernel(cover_map, cover, module, name=f"Ω{module.name}")
    logger.debug(f"projective cover of {module.name}: dim {cover.dim}, kernel dim {kern.dim}")
    return ProjectiveCover(module, cover, cover_map, kern, kern_inclusion)


def injective_envelope(module: LeftModule) -> InjectiveEnvelope:
    """M -> I(M) = D P(D M)."""
    dual = dual_module(module)
    cover = projective_cover(dual)
    envelope = dual_module(cover.cover)
    embedding = dual_map(cover.cover_map, cover.cover, dual)
    coker, projection = cokernel(embedding, module, envelope, name=f"Σ{module.name}")
    envelope.name = f"I({module.name})"
    return InjectiveEnvelope(module, envelope, embedding, coker, projection)


def is_projective(module: LeftModule) -> bool:
    return projective_cover(module).cover.dim == module.dim


def is_injective(module: LeftModule) -> bool:
    return is_projective(dual_module(module))


def projective_dimension_at_most_one(module: LeftModule) -> bool:
    """The kernel of the projective cover is projective."""
    return is_projective(projective_cover(module).kernel)


def injective_dimension_at_most_one(module: LeftModule) -> bool:
    """The cokernel of the injective envelope is injective."""
    return is_injective(injective_envelope(module).cokernel)

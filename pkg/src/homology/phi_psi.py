"""
The maps Φ and Ψ attached to a representation.

With W_α = KX(α)* (x)_{A_t} e_t KC,

    Φ: ⊕_α Hom_{A_s}(W_α, M_s) -> ⊕_i Hom_{A_i}(e_i KC, M_i),
    Φ(φ)_i(y) = Σ_{t(β)=i} M_β(φ_β^∨(y)) - Σ_{s(α)=i} Σ_{c in L_α} φ_α(c* (x) c y),

    Ψ: ⊕_i Hom_{A_i}(M_i, e_i KC) -> ⊕_α Hom_{A_t}(KX(α) (x)_{A_s} M_s, e_t KC),
    Ψ(ψ)_α(x (x) m) = ψ_t(M_α(x (x) m)) - x ψ_s(m).

Ker Φ computes Hom(Π_1, M), and the trace pairings identify D(Ψ) with Φ.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.algebra.bimodule import TensorProduct, biset_bimodule, tensor_over_algebra
from src.algebra.modules import LeftModule, compose, direct_sum, hom_space, kernel, map_rank, zero_module
from src.errors import HypothesisError
from src.groups.bisets import dual_biset, orbit_reps
from src.homology.functors import HomModule, MapSpace, hom_module
from src.homology.representations import QuiverAlgebras, Representation
from src.homology.trace import DualBasis
from src.scalars.linalg import Matrix, Vector, mat_vec, transpose, vec_add, vec_sub
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _unit(field, n: int, k: int) -> Vector:
    out = [field.zero] * n
    out[k] = field.one
    return out


def _columns_to_matrix(columns: List[Vector], n_rows: int) -> Matrix:
    return transpose(columns, n_rows) if columns else [[] for _ in range(n_rows)]


class ArrowData:
    """Per-arrow tensor spaces and orbit representatives."""

    def __init__(self, algebras: QuiverAlgebras, a: int):
        quiver = algebras.ei_quiver.quiver
        biset = algebras.ei_quiver.bisets[a]
        self.arrow = a
        self.source, self.target = quiver.source(a), quiver.target(a)
        self.left_reps = orbit_reps(biset, "left")
        self.right_reps = orbit_reps(biset, "right")
        dual = biset_bimodule(dual_biset(biset), algebras.vertex_algebras[self.source], algebras.vertex_algebras[self.target])
        self.w: TensorProduct = tensor_over_algebra(dual, algebras.corner(self.target), name=f"W{a}")


class PhiPsi:
    """
    Φ and Ψ for one representation.

    Args:
        rep: A representation of an action-free EI quiver

    Raises:
        HypothesisError: X is not action-free
    """

    def __init__(self, rep: Representation):
        algebras = rep.algebras
        if not algebras.ei_quiver.is_action_free():
            raise HypothesisError("Φ and Ψ need an action-free EI quiver")
        self.rep = rep
        self.algebras = algebras
        self.field = algebras.field
        quiver = algebras.ei_quiver.quiver
        self.arrows = [ArrowData(algebras, a) for a in range(quiver.n_arrows)]
        self.positions: List[Dict[int, int]] = [
            {k: r for r, k in enumerate(algebras.corner_basis(i))} for i in quiver.vertices()
        ]

    # Φ

    def h_module(self, a: int) -> HomModule:
        """Hom_{A_s}(W_α, M_s) with (λ φ)(w) = φ(w λ)."""
        data = self.arrows[a]
        w = data.w.bimodule
        m_s = self.rep.vertex_modules[data.source]
        field = self.field

        def act(b: int, f: Matrix) -> Matrix:
            return compose(field, f, w.right_actions[b], w.dim, w.dim)

        maps = hom_space(w.left_module(), m_s)
        return hom_module(maps, m_s.dim, w.dim, self.algebras.algebra, act, name=f"H{a + 1}")

    def g_module(self, i: int) -> HomModule:
        """Hom_{A_i}(e_i KC, M_i) with (λ φ)(y) = φ(y λ)."""
        corner = self.algebras.corner(i)
        m_i = self.rep.vertex_modules[i]
        field = self.field

        def act(b: int, f: Matrix) -> Matrix:
            return compose(field, f, corner.right_actions[b], corner.dim, corner.dim)

        maps = hom_space(corner.left_module(), m_i)
        return hom_module(maps, m_i.dim, corner.dim, self.algebras.algebra, act, name=f"G{i + 1}")

    def phi_component(self, a: int, phi: Matrix, i: int) -> Matrix:
        """Φ(φ)_i for φ supported on the arrow α."""
        field, rep = self.field, self.rep
        data = self.arrows[a]
        corner_basis = self.algebras.corner_basis(i)
        d_i = rep.vertex_modules[i].dim
        columns = []
        for r, k in enumerate(corner_basis):
            value = [field.zero] * d_i
            if data.target == i:
                for b in data.right_reps:
                    w = data.w.tensor(_unit(field, data.w.left.dim, b), _unit(field, len(corner_basis), r))
                    value = vec_add(field, value, mat_vec(field, rep.operator(a, b), mat_vec(field, phi, w)))
            if data.source == i:
                positions = self.positions[data.target]
                n_t = len(positions)
                for c in data.left_reps:
                    product = self.algebras.category.compose(self.algebras.arrow_element(a, c), k)
                    if product is None:
                        continue
                    w = data.w.tensor(_unit(field, data.w.left.dim, c), _unit(field, n_t, positions[product]))
                    value = vec_sub(field, value, mat_vec(field, phi, w))
            columns.append(value)
        return _columns_to_matrix(columns, d_i)

    def phi(self) -> "PhiMap":
        """Φ as a module map between the direct sums together with its kernel."""
        quiver = self.algebras.ei_quiver.quiver
        h_modules = [self.h_module(a) for a in range(quiver.n_arrows)]
        g_modules = [self.g_module(i) for i in quiver.vertices()]
        source = _sum([h.module for h in h_modules], self.algebras, "⊕H")
        target = _sum([g.module for g in g_modules], self.algebras, "⊕G")
        columns = []
        for a, h in enumerate(h_modules):
            for k in range(h.dim):
                phi = h.basis_map(k)
                column: Vector = []
                for i, g in enumerate(g_modules):
                    column.extend(g.vector_of(self.phi_component(a, phi, i)))
                columns.append(column)
        matrix = _columns_to_matrix(columns, target.dim)
        kern, _ = kernel(matrix, source, target, name=f"KerΦ({self.rep.name})")
        logger.debug(f"Φ for {self.rep.name}: {source.dim} -> {target.dim}, kernel dimension {kern.dim}")
        return PhiMap(h_modules, g_modules, source, target, matrix, kern)

    # Ψ

    def left_multiply(self, a: int, x: int, v: Vector) -> Vector:
        """x v for v in e_s KC and x in X(α), landing in e_t KC."""
        field = self.field
        data = self.arrows[a]
        source_basis = self.algebras.corner_basis(data.source)
        positions = self.positions[data.target]
        out = [field.zero] * len(positions)
        arrow = self.algebras.arrow_element(a, x)
        for r, coeff in enumerate(v):
            if coeff == field.zero:
                continue
            product = self.algebras.category.compose(arrow, source_basis[r])
            if product is not None:
                out[positions[product]] = field.add(out[positions[product]], coeff)
        return out

    def psi_component(self, i: int, psi: Matrix, a: int) -> Matrix:
        """Ψ(ψ)_α for ψ supported at the vertex i, on the basis of KX(α) (x) M_s."""
        field, rep = self.field, self.rep
        data = self.arrows[a]
        tensor = rep.tensor_space(a)
        n_t = len(self.positions[data.target])
        columns = []
        for x, m in tensor.pairs:
            value = [field.zero] * n_t
            if data.target == i:
                value = vec_add(field, value, mat_vec(field, psi, [row[m] for row in rep.operator(a, x)]))
            if data.source == i:
                column = [row[m] for row in psi]
                value = vec_sub(field, value, self.left_multiply(a, x, column))
            columns.append(value)
        return _columns_to_matrix(columns, n_t)

    def psi_vee(self, a: int, psi_alpha: Matrix) -> Matrix:
        """Ψ(ψ)_α^∨: M_s -> W_α, m -> Σ_{b in L_α} b* (x) Ψ(ψ)_α(b (x) m)."""
        field, rep = self.field, self.rep
        data = self.arrows[a]
        tensor = rep.tensor_space(a)
        d_s = rep.vertex_modules[data.source].dim
        w_dim = data.w.bimodule.dim
        columns = []
        for m in range(d_s):
            total = [field.zero] * w_dim
            for b in data.left_reps:
                image = mat_vec(field, psi_alpha, tensor.pure(b, m))
                total = vec_add(field, total, data.w.tensor(_unit(field, data.w.left.dim, b), image))
            columns.append(total)
        return _columns_to_matrix(columns, w_dim)

    def psi_source(self, i: int) -> List[Matrix]:
        """A basis of Hom_{A_i}(M_i, e_i KC)."""
        return hom_space(self.rep.vertex_modules[i], self.algebras.corner(i).left_module())

    def psi_target(self, a: int) -> MapSpace:
        data = self.arrows[a]
        tensor = self.rep.tensor_space(a)
        corner = self.algebras.corner(data.target).left_module()
        return MapSpace(self.field, hom_space(tensor.bimodule.left_module(), corner), corner.dim, tensor.bimodule.dim)

    def psi(self) -> Matrix:
        """Ψ in the coordinates of the Hom spaces on both sides."""
        quiver = self.algebras.ei_quiver.quiver
        targets = [self.psi_target(a) for a in range(quiver.n_arrows)]
        columns = []
        for i in quiver.vertices():
            for psi in self.psi_source(i):
                column: Vector = []
                for a, space in enumerate(targets):
                    column.extend(space.coordinates(self.psi_component(i, psi, a)))
                columns.append(column)
        return _columns_to_matrix(columns, sum(t.dimension for t in targets))

    # Trace diagram

    def check_diagram(self) -> Tuple[bool, Optional[str]]:
        """
        tr_{M_s}(φ Ψ(f)_α^∨) = tr_{M_i}(Φ(φ)_i f) for basis maps φ of each
        Hom_{A_s}(W_α, M_s) and f of each Hom_{A_i}(M_i, e_i KC).
        """
        field, rep = self.field, self.rep
        quiver = self.algebras.ei_quiver.quiver
        traces = [DualBasis(m) for m in rep.vertex_modules]
        sources = [self.psi_source(i) for i in quiver.vertices()]
        for a, data in enumerate(self.arrows):
            w = data.w.bimodule
            m_s = rep.vertex_modules[data.source]
            for phi in MapSpace(field, hom_space(w.left_module(), m_s), m_s.dim, w.dim).basis():
                for i in quiver.vertices():
                    if i not in (data.source, data.target):
                        continue
                    d_i = rep.vertex_modules[i].dim
                    n_i = self.algebras.corner(i).dim
                    phi_i = self.phi_component(a, phi, i)
                    for f in sources[i]:
                        psi_vee = self.psi_vee(a, self.psi_component(i, f, a))
                        left = traces[data.source].trace(compose(field, phi, psi_vee, w.dim, m_s.dim))
                        right = traces[i].trace(compose(field, phi_i, f, n_i, d_i))
                        if left != right:
                            return False, (
                                f"trace square fails for arrow {quiver.arrows[a].name} at vertex {i + 1}: "
                                f"{field.format(left)} != {field.format(right)}"
                            )
        return True, None


@dataclass
class PhiMap:
    """Φ between the direct sums of H_α and G_i, with its kernel as a KC-module."""

    h_modules: List[HomModule]
    g_modules: List[HomModule]
    source: LeftModule
    target: LeftModule
    matrix: Matrix
    kernel: LeftModule

    @property
    def rank(self) -> int:
        if self.source.dim == 0 or self.target.dim == 0:
            return 0
        return map_rank(self.source.field, self.matrix, self.source.dim)


def _sum(modules: List[LeftModule], algebras: QuiverAlgebras, name: str) -> LeftModule:
    if not modules:
        return zero_module(algebras.algebra)
    module, _, _ = direct_sum(modules, name=name)
    return module


def phi_map(rep: Representation) -> PhiMap:
    """Φ for a representation, with Ker Φ."""
    return PhiPsi(rep).phi()

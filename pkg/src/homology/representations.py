"""
Representations of an EI quiver and the equivalence with KC-modules.

A representation M = (M_i, M_α) stores each M_i as a module over the group
algebra A_i = KX(i), and each arrow map M_α: KX(α) (x)_{A_s} M_s -> M_t as a
balanced matrix on the plain tensor KX(α) (x)_K M_s, column x * dim M_s + c.
"""

import random
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.algebra import Algebra, category_algebra, group_algebra, vertex_group_algebra
from src.algebra.bimodule import Bimodule, TensorProduct, biset_bimodule, tensor_over_algebra
from src.algebra.modules import LeftModule, direct_sum, hom_space, make_module, quotient_module, regular_module, zero_module
from src.algebra.preprojective import pi_one_bimodule
from src.errors import ModuleError
from src.homology.covers import is_projective, projective_cover
from src.homology.functors import module_as_bimodule
from src.quivers.category import EICategory, build_category
from src.quivers.ei_quiver import EIQuiver
from src.quivers.quiver import Path
from src.scalars.fields import FieldDescriptor
from src.scalars.linalg import Matrix, from_ints, mat_add, mat_mul, mat_scale, mat_vec, zeros
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class QuiverAlgebras:
    """
    KC(Q, X) together with the vertex group algebras A_i and derived bimodules.

    Everything that compares algebras by identity (Hom spaces, tensor
    products) must be built from one instance of this class.
    """

    ei_quiver: EIQuiver
    field: FieldDescriptor
    category: EICategory
    algebra: Algebra
    vertex_algebras: List[Algebra]
    _corners: Dict[int, Bimodule] = dataclass_field(default_factory=dict, repr=False)

    @property
    def n_vertices(self) -> int:
        return self.ei_quiver.quiver.n_vertices

    def vertex_element(self, i: int, g: int) -> int:
        """Basis index of the morphism (e_i, g) in KC."""
        return self.category.index(self.ei_quiver.quiver.trivial_path(i), g)

    def arrow_element(self, a: int, x: int) -> int:
        """Basis index of the morphism (α, x) in KC."""
        quiver = self.ei_quiver.quiver
        return self.category.index(Path((a,), quiver.source(a), quiver.target(a)), x)

    @cached_property
    def vertex_product(self) -> Tuple[Algebra, List[int]]:
        """A = ⊕ A_i as one algebra, with its basis inclusion into KC."""
        return vertex_group_algebra(self.category, self.field)

    @cached_property
    def pi_one(self) -> Bimodule:
        return pi_one_bimodule(self.ei_quiver, self.field, algebra=self.algebra)

    def arrow_bimodule(self, a: int) -> Bimodule:
        """KX(α) as an (A_t, A_s)-bimodule."""
        quiver = self.ei_quiver.quiver
        return biset_bimodule(
            self.ei_quiver.bisets[a],
            self.vertex_algebras[quiver.target(a)],
            self.vertex_algebras[quiver.source(a)],
        )

    def corner(self, i: int) -> Bimodule:
        """e_i KC as an (A_i, KC)-bimodule with basis the morphisms ending at i."""
        if i in self._corners:
            return self._corners[i]
        category, field = self.category, self.field
        basis = [k for k, m in enumerate(category.morphisms) if m.target == i]
        position = {k: r for r, k in enumerate(basis)}
        n = len(basis)
        left = []
        for g in self.ei_quiver.groups[i].elements():
            matrix = zeros(field, n, n)
            h = self.vertex_element(i, g)
            for c, k in enumerate(basis):
                matrix[position[category.compose(h, k)]][c] = field.one
            left.append(matrix)
        right = []
        for b in range(self.algebra.dim):
            matrix = zeros(field, n, n)
            for c, k in enumerate(basis):
                product = category.compose(k, b)
                if product is not None:
                    matrix[position[product]][c] = field.one
            right.append(matrix)
        labels = [category.label(k) for k in basis]
        corner = Bimodule(self.vertex_algebras[i], self.algebra, n, left, right, name=f"e{i + 1}KC", labels=labels)
        self._corners[i] = corner
        return corner

    def corner_basis(self, i: int) -> List[int]:
        return [k for k, m in enumerate(self.category.morphisms) if m.target == i]


def quiver_algebras(ei_quiver: EIQuiver, field: FieldDescriptor) -> QuiverAlgebras:
    """
    Build KC(Q, X) and the vertex group algebras.

    Raises:
        QuiverError: the quiver has an oriented cycle
    """
    category = build_category(ei_quiver)
    algebra = category_algebra(category, field)
    vertex_algebras = [group_algebra(g, field) for g in ei_quiver.groups]
    return QuiverAlgebras(ei_quiver, field, category, algebra, vertex_algebras)


class Representation:
    """
    A representation (M_i, M_α) of an EI quiver.

    Args:
        algebras: The algebras of the EI quiver
        vertex_modules: M_i over A_i
        arrow_maps: Balanced matrices of the M_α
        name: Display name
    """

    def __init__(
        self,
        algebras: QuiverAlgebras,
        vertex_modules: Sequence[LeftModule],
        arrow_maps: Sequence[Matrix],
        name: str = "M",
    ):
        quiver = algebras.ei_quiver.quiver
        if len(vertex_modules) != quiver.n_vertices or len(arrow_maps) != quiver.n_arrows:
            raise ModuleError(f"{name}: one module per vertex and one map per arrow are required")
        self.algebras = algebras
        self.field = algebras.field
        self.vertex_modules = list(vertex_modules)
        self.arrow_maps = [list(m) for m in arrow_maps]
        self.name = name

    @property
    def ei_quiver(self) -> EIQuiver:
        return self.algebras.ei_quiver

    def dimension_vector(self) -> List[int]:
        return [m.dim for m in self.vertex_modules]

    @property
    def dim(self) -> int:
        return sum(self.dimension_vector())

    def operator(self, a: int, x: int) -> Matrix:
        """M_α(x (x) -) as a dim M_t x dim M_s matrix."""
        quiver = self.ei_quiver.quiver
        d_s = self.vertex_modules[quiver.source(a)].dim
        rows = self.arrow_maps[a]
        if d_s == 0:
            return [[] for _ in rows]
        return [row[x * d_s:(x + 1) * d_s] for row in rows]

    def check(self) -> Tuple[bool, Optional[str]]:
        """Vertex actions are modules and every arrow map is balanced and A_t-linear."""
        field = self.field
        quiver = self.ei_quiver.quiver
        for i, module in enumerate(self.vertex_modules):
            if module.algebra is not self.algebras.vertex_algebras[i]:
                return False, f"M_{i + 1} is not a module over A_{i + 1}"
            ok, error = module.check_axioms()
            if not ok:
                return False, error
        for a in range(quiver.n_arrows):
            s, t = quiver.source(a), quiver.target(a)
            biset = self.ei_quiver.bisets[a]
            m_s, m_t = self.vertex_modules[s], self.vertex_modules[t]
            name = quiver.arrows[a].name
            if len(self.arrow_maps[a]) != m_t.dim or any(len(row) != biset.size * m_s.dim for row in self.arrow_maps[a]):
                return False, f"arrow map {name} has the wrong shape"
            if m_s.dim == 0 or m_t.dim == 0:
                continue
            for x in range(biset.size):
                op = self.operator(a, x)
                for g in biset.right_group.elements():
                    left = self.operator(a, biset.act_right(x, g))
                    if left != mat_mul(field, op, m_s.actions[g]):
                        return False, f"arrow map {name} is not balanced at {biset.label(x)}"
                for h in biset.left_group.elements():
                    if mat_mul(field, m_t.actions[h], op) != self.operator(a, biset.act_left(h, x)):
                        return False, f"arrow map {name} is not A_{t + 1}-linear at {biset.label(x)}"
        return True, None

    def tensor_space(self, a: int) -> TensorProduct:
        return arrow_tensor_space(self.algebras, a, self.vertex_modules[self.ei_quiver.quiver.source(a)])

    def __repr__(self) -> str:
        return f"Representation({self.name}, dims={self.dimension_vector()})"


def arrow_tensor_space(algebras: QuiverAlgebras, a: int, module: LeftModule) -> TensorProduct:
    """KX(α) (x)_{A_s} M_s for a module M_s over A_{s(α)}."""
    return tensor_over_algebra(algebras.arrow_bimodule(a), module_as_bimodule(module), name=f"KX⊗{module.name}")


def _offsets(dims: Sequence[int]) -> List[int]:
    out, total = [], 0
    for d in dims:
        out.append(total)
        total += d
    return out


def rep_to_module(rep: Representation) -> LeftModule:
    """F(M) = ⊕ M_i over KC; a morphism over α_n ... α_1 acts as M_{α_n} ... M_{α_1}."""
    algebras, field = rep.algebras, rep.field
    category = algebras.category
    dims = rep.dimension_vector()
    offsets = _offsets(dims)
    total = sum(dims)
    actions = []
    for morphism in category.morphisms:
        matrix = zeros(field, total, total)
        s, t = morphism.source, morphism.target
        if dims[s] and dims[t]:
            if morphism.path.is_trivial:
                block = rep.vertex_modules[s].actions[morphism.element]
            else:
                arrows = morphism.path.arrows
                elements = category.path_data(morphism.path).tuples[morphism.element]
                block = rep.operator(arrows[-1], elements[-1])
                for a, x in zip(reversed(arrows[:-1]), reversed(elements[:-1])):
                    block = mat_mul(field, rep.operator(a, x), block)
            for r in range(dims[t]):
                for c in range(dims[s]):
                    matrix[offsets[t] + r][offsets[s] + c] = block[r][c]
        actions.append(matrix)
    return LeftModule(algebras.algebra, total, actions, name=f"F({rep.name})")


def _restrict_block(matrix: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[matrix[r][c] for c in cols] for r in rows]


def module_to_rep(module: LeftModule, algebras: QuiverAlgebras, name: Optional[str] = None) -> Representation:
    """
    G(Y): Y_i = e_i Y and Y_α(x (x) m) = (α, x) m.

    Raises:
        ModuleError: the module is not over the category algebra of ``algebras``
    """
    if module.algebra is not algebras.algebra:
        raise ModuleError(f"{module.name} is not a module over {algebras.algebra.name}")
    quiver = algebras.ei_quiver.quiver
    bases = [module.basis_at(i) for i in range(quiver.n_vertices)]
    vertex_modules = []
    for i, basis in enumerate(bases):
        group = algebras.ei_quiver.groups[i]
        actions = [_restrict_block(module.actions[algebras.vertex_element(i, g)], basis, basis) for g in group.elements()]
        vertex_modules.append(LeftModule(algebras.vertex_algebras[i], len(basis), actions, name=f"{module.name}_{i + 1}"))
    arrow_maps = []
    for a in range(quiver.n_arrows):
        s, t = quiver.source(a), quiver.target(a)
        biset = algebras.ei_quiver.bisets[a]
        blocks = [_restrict_block(module.actions[algebras.arrow_element(a, x)], bases[t], bases[s]) for x in range(biset.size)]
        arrow_maps.append([[x for block in blocks for x in block[r]] for r in range(len(bases[t]))])
    return Representation(algebras, vertex_modules, arrow_maps, name=name or f"G({module.name})")


def regular_representation(algebras: QuiverAlgebras) -> Representation:
    return module_to_rep(regular_module(algebras.algebra), algebras, name="KC")


def is_locally_projective(rep: Representation) -> bool:
    """Every M_i is projective over A_i."""
    return all(is_projective(m) for m in rep.vertex_modules)


def make_representation(
    algebras: QuiverAlgebras,
    vertex_actions: Sequence[Sequence[Sequence[Sequence[int]]]],
    arrow_maps: Sequence[Sequence[Sequence[int]]],
    dims: Optional[Sequence[int]] = None,
    name: str = "M",
) -> Representation:
    """
    A representation from integer matrices, reduced into the field.

    Args:
        vertex_actions: Per vertex, one matrix per group element
        arrow_maps: Balanced arrow matrices
        dims: Vertex dimensions, needed only for zero-dimensional vertices

    Raises:
        ModuleError: the data violates the representation axioms
    """
    field = algebras.field
    modules = []
    for i, actions in enumerate(vertex_actions):
        dim = dims[i] if dims is not None else len(actions[0])
        matrices = [from_ints(field, m) if dim else [] for m in actions]
        modules.append(make_module(algebras.vertex_algebras[i], dim, matrices, name=f"{name}_{i + 1}"))
    maps = [from_ints(field, m) for m in arrow_maps]
    rep = Representation(algebras, modules, maps, name=name)
    ok, error = rep.check()
    if not ok:
        raise ModuleError(error)
    return rep


def free_module(algebra: Algebra, rank: int, name: str = "F") -> LeftModule:
    if rank == 0:
        return zero_module(algebra)
    module, _, _ = direct_sum([regular_module(algebra)] * rank, name=name)
    return module


def trivial_module(algebra: Algebra, name: str = "K") -> LeftModule:
    """The one-dimensional module on which every group element acts as 1."""
    one = [[algebra.field.one]]
    return LeftModule(algebra, 1, [one] * algebra.dim, name=name)


def random_projective_summand(algebra: Algebra, rng: random.Random, name: str = "P") -> LeftModule:
    """
    P(A / Av) for a random v in A, a random direct summand of A.

    Over a semisimple or partly semisimple group algebra this reaches the
    non-free projectives, e.g. the trivial and sign modules of KC_2 when
    char K != 2.
    """
    field = algebra.field
    v = [field.random_element(rng) for _ in range(algebra.dim)]
    quotient, _ = quotient_module(regular_module(algebra), [v], name=f"A/A{name}")
    if quotient.dim == 0:
        return zero_module(algebra)
    summand = projective_cover(quotient).cover
    summand.name = name
    return summand


def random_arrow_map(algebras: QuiverAlgebras, a: int, source: LeftModule, target: LeftModule, rng: random.Random) -> Matrix:
    """A random A_t-linear map KX(α) (x)_{A_s} M_s -> M_t in balanced form."""
    field = algebras.field
    biset = algebras.ei_quiver.bisets[a]
    plain = biset.size * source.dim
    if plain == 0 or target.dim == 0:
        return [[field.zero] * plain for _ in range(target.dim)]
    tensor = arrow_tensor_space(algebras, a, source)
    homs = hom_space(tensor.bimodule.left_module(), target)
    h = zeros(field, target.dim, tensor.bimodule.dim)
    for matrix in homs:
        h = mat_add(field, h, mat_scale(field, field.random_element(rng), matrix))
    columns = []
    for j in range(plain):
        columns.append(mat_vec(field, h, tensor.project({j: field.one})) if tensor.bimodule.dim else [field.zero] * target.dim)
    return [[columns[j][r] for j in range(plain)] for r in range(target.dim)]


def random_representation(
    algebras: QuiverAlgebras,
    rng: random.Random,
    max_rank: int = 2,
    locally_projective: bool = True,
    name: str = "M",
) -> Representation:
    """
    A random representation whose vertex modules are free of rank <= ``max_rank``
    plus one random summand of the regular module.

    With ``locally_projective=False`` every vertex whose group order is
    divisible by the characteristic carries the trivial module instead.
    """
    field = algebras.field
    quiver = algebras.ei_quiver.quiver
    p = field.characteristic
    ranks = [rng.randint(0, max_rank) for _ in quiver.vertices()]
    if not any(ranks):
        ranks[rng.randrange(quiver.n_vertices)] = 1
    modules = []
    for i in quiver.vertices():
        algebra = algebras.vertex_algebras[i]
        order = algebras.ei_quiver.groups[i].order
        if not locally_projective and p and order % p == 0:
            modules.append(trivial_module(algebra, name=f"{name}_{i + 1}"))
        else:
            summand = random_projective_summand(algebra, rng)
            free = free_module(algebra, ranks[i])
            module, _, _ = direct_sum([free, summand], name=f"{name}_{i + 1}")
            modules.append(module)
    maps = [
        random_arrow_map(algebras, a, modules[quiver.source(a)], modules[quiver.target(a)], rng)
        for a in range(quiver.n_arrows)
    ]
    rep = Representation(algebras, modules, maps, name=name)
    logger.debug(f"random representation {name} with dimension vector {rep.dimension_vector()}")
    return rep


def simple_representation(algebras: QuiverAlgebras, i: int, name: Optional[str] = None) -> Representation:
    """The trivial module of X(i) at vertex i and zero elsewhere."""
    field = algebras.field
    quiver = algebras.ei_quiver.quiver
    modules = [
        trivial_module(algebras.vertex_algebras[j], name=f"S{i + 1}_{j + 1}") if j == i else zero_module(algebras.vertex_algebras[j])
        for j in quiver.vertices()
    ]
    maps = [
        [[field.zero] * (algebras.ei_quiver.bisets[a].size * modules[quiver.source(a)].dim) for _ in range(modules[quiver.target(a)].dim)]
        for a in range(quiver.n_arrows)
    ]
    return Representation(algebras, modules, maps, name=name or f"S{i + 1}")


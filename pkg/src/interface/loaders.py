"""
Payload loaders: JSON job files to validated schemas and library objects.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from src.cartan.triple import CartanTriple, validate_cartan
from src.config import settings
from src.errors import FieldError, InputError
from src.groups.bisets import make_biset, trivial_action_biset
from src.groups.groups import cyclic_group, group_from_table
from src.homology.representations import QuiverAlgebras, Representation, make_representation
from src.interface.schemas import CartanSpec, EIQuiverSpec, FieldSpec, JobSpec, RepresentationSpec
from src.quivers.ei_quiver import EIQuiver, make_ei_quiver
from src.quivers.quiver import make_quiver
from src.scalars.fields import FieldDescriptor, make_field
from src.utils.logger import get_logger
from src.utils.validators import validate_field_spec, validate_vertex

logger = get_logger(__name__)


def _validation_error(error: ValidationError) -> InputError:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"])
    return InputError(first["msg"], path=location or None)


def read_payload(path: Path) -> Dict[str, Any]:
    """
    Parse a JSON job file.

    Raises:
        InputError: the file is missing, not JSON, or not an object
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read input: {e.strerror}", path=str(path))
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e.msg}", path=f"{path}:{e.lineno}:{e.colno}")
    if not isinstance(payload, dict):
        raise InputError("the top level must be a JSON object", path=str(path))
    return payload


def parse_field_flag(text: str) -> Dict[str, Any]:
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e.msg}", path="--field")
    return spec


def load_job(
    path: Path,
    command: str,
    field: Optional[str] = None,
    maxdeg: Optional[int] = None,
    seed: Optional[int] = None,
    out: Optional[str] = None,
) -> JobSpec:
    """
    Combine a payload file and command line flags into a JobSpec.

    Flags win over payload keys, which win over settings defaults. The payload
    kind is detected from its keys: "vertices" is an EI quiver, "C" a Cartan
    triple.

    Raises:
        InputError: unreadable payload, unknown kind or schema violation
    """
    payload = read_payload(path)
    field_spec = parse_field_flag(field) if field else payload.get("field", settings.scalars.default_field)
    ok, error = validate_field_spec(field_spec)
    if not ok:
        raise InputError(error, path="field")

    if "vertices" in payload:
        kind = "quiver"
    elif "C" in payload:
        kind = "cartan"
    else:
        raise InputError("payload is neither an EI quiver ('vertices') nor a Cartan triple ('C')")
    body = {k: v for k, v in payload.items() if k not in ("field", "maxdeg", "seed", "representations")}

    try:
        job = JobSpec(
            command=command,
            quiver=body if kind == "quiver" else None,
            cartan=body if kind == "cartan" else None,
            representations=payload.get("representations", []),
            field=field_spec,
            maxdeg=maxdeg if maxdeg is not None else payload.get("maxdeg", settings.engine.default_maxdeg),
            seed=seed if seed is not None else payload.get("seed", settings.verification.seed),
            out=out,
        )
    except ValidationError as e:
        raise _validation_error(e)
    logger.info(f"Loaded {kind} job '{job.command.value}' from {path}")
    return job


def build_field(spec: FieldSpec) -> FieldDescriptor:
    try:
        return make_field(spec.to_spec())
    except FieldError as e:
        raise InputError(str(e), path="field")


def build_ei_quiver(spec: EIQuiverSpec) -> EIQuiver:
    """
    Build the EI quiver of a payload.

    Raises:
        InputError: a vertex index is out of range or the group count is wrong
        GroupError, BisetError, QuiverError: the data violates an axiom
    """
    n = spec.vertices
    if spec.groups is None:
        groups = [cyclic_group(1) for _ in range(n)]
    elif len(spec.groups) != n:
        raise InputError(f"expected {n} groups, got {len(spec.groups)}", path="groups")
    else:
        groups = [
            cyclic_group(g.cyclic) if g.cyclic is not None else group_from_table(g.table, name=f"X({i + 1})")
            for i, g in enumerate(spec.groups)
        ]

    arrows, bisets = [], []
    for k, arrow in enumerate(spec.arrows):
        for end in (arrow.source, arrow.target):
            ok, error = validate_vertex(end, n)
            if not ok:
                raise InputError(error, path=f"arrows.{k}")
        s, t = arrow.source - 1, arrow.target - 1
        arrows.append((arrow.name or f"a{k + 1}", s, t))
        if arrow.biset is None:
            bisets.append(trivial_action_biset(groups[t], groups[s], 1))
        else:
            b = arrow.biset
            if len(b.right) != b.size:
                raise InputError(f"right table has {len(b.right)} rows, size is {b.size}", path=f"arrows.{k}.biset")
            bisets.append(make_biset(groups[t], groups[s], b.left, b.right, b.labels))
    return make_ei_quiver(make_quiver(n, arrows), groups, bisets)


def build_cartan(spec: CartanSpec) -> CartanTriple:
    """
    Raises:
        CartanError: the triple violates a defining condition
    """
    return validate_cartan(spec.C, spec.D, [(i - 1, j - 1) for i, j in spec.Omega])


def build_representations(specs: List[RepresentationSpec], algebras: QuiverAlgebras) -> List[Representation]:
    """
    Raises:
        ModuleError: a representation violates the module axioms
    """
    return [
        make_representation(algebras, s.vertex_actions, s.arrow_maps, dims=s.dims, name=s.name)
        for s in specs
    ]

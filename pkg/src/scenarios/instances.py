"""
Explicit instances given as plain data (parsed JSON).

Matrices are row-major arrays of arrays; a subspace or Lagrangian is given by
a matrix whose columns span it. Schema problems raise ScenarioError; a frame
that parses but is not, say, Lagrangian raises the usual domain error.
"""
from numbers import Real
from typing import Any, Callable, Dict, Iterable, NamedTuple, Optional

import numpy as np
import scipy.linalg

from ..errors import ScenarioError
from ..numkern import DEFAULT_POLICY, Subspace, SymMatrix, TolerancePolicy, column_space
from ..reduction import ReductionSetup, make_reduction
from ..specflow import FormPath
from ..symplectic import DEFAULT_MAX_STEP, Lagrangian, LagrangianPath, SymplecticSpace, standard_space, unchart

COMMON_FIELDS = {'schema_version', 'kind', 'name'}

INSTANCE_FIELDS = {
    'eq1': {'matrix', 'w'},
    'sf': {'mesh', 'samples', 'reference_norm'},
    'thm1': {'mesh', 'samples', 'v'},
    'maslov': {'omega', 'l0', 'path'},
    'reduce': {'omega', 'w', 'l0', 'path'},
}

PATH_FIELDS = {
    'frames': {'mesh', 'frames'},
    'hamiltonian': {'interval', 'mesh_size', 'start', 'hamiltonian'},
    'chart': {'l1', 'mesh', 'forms'},
}


def check_fields(data: Any, allowed: Iterable[str], required: Iterable[str], where: str) -> Dict[str, Any]:
    if not isinstance(data, dict):
        raise ScenarioError(f"{where}: expected an object, got {type(data).__name__}")
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        raise ScenarioError(f"{where}: unknown field(s) {', '.join(unknown)}")
    missing = sorted(set(required) - set(data))
    if missing:
        raise ScenarioError(f"{where}: missing field(s) {', '.join(missing)}")
    return data


def _is_number(x: Any) -> bool:
    return isinstance(x, Real) and not isinstance(x, bool)


def floats_from(value: Any, where: str) -> np.ndarray:
    if not isinstance(value, list) or not all(_is_number(x) for x in value):
        raise ScenarioError(f"{where}: expected an array of numbers")
    return np.array(value, dtype=float)


def matrix_from(value: Any, where: str) -> np.ndarray:
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise ScenarioError(f"{where}: expected an array of arrays")
    if value and len({len(row) for row in value}) != 1:
        raise ScenarioError(f"{where}: rows have different lengths")
    rows = [floats_from(row, f"{where} row {i}") for i, row in enumerate(value)]
    if not rows:
        return np.zeros((0, 0))
    return np.vstack(rows)


def integer_from(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ScenarioError(f"{where}: expected an integer, got {value!r}")
    return value


def subspace_from(value: Any, n: int, where: str, policy: TolerancePolicy = DEFAULT_POLICY) -> Subspace:
    """
    The column span of a row-major n x k matrix; an empty array is the zero
    subspace. An orthonormal frame is kept as given, so chart forms over it
    are in the caller's coordinates.
    """
    if value == []:
        return Subspace.zero(n)
    m = matrix_from(value, where)
    if m.shape[0] != n:
        raise ScenarioError(f"{where}: frame has {m.shape[0]} rows, expected {n}")
    if m.shape[1] <= n and np.allclose(m.T @ m, np.eye(m.shape[1]), atol=1e-12):
        return Subspace(m)
    return column_space(m, policy)


def form_path_from(data: Dict[str, Any], where: str) -> FormPath:
    mesh = floats_from(data['mesh'], f"{where}.mesh")
    if not isinstance(data['samples'], list):
        raise ScenarioError(f"{where}.samples: expected an array of matrices")
    samples = [matrix_from(s, f"{where}.samples[{i}]") for i, s in enumerate(data['samples'])]
    for i, s in enumerate(samples):
        if s.shape[0] != s.shape[1]:
            raise ScenarioError(f"{where}.samples[{i}]: matrix is not square")
    reference = data.get('reference_norm')
    if reference is not None and not _is_number(reference):
        raise ScenarioError(f"{where}.reference_norm: expected a number")
    return FormPath(tuple(mesh), tuple(SymMatrix(s) for s in samples), reference)


def space_from(data: Dict[str, Any], dim: int, where: str, policy: TolerancePolicy = DEFAULT_POLICY) -> SymplecticSpace:
    if data.get('omega') is None:
        if dim % 2:
            raise ScenarioError(f"{where}: ambient dimension {dim} is odd")
        return standard_space(dim // 2)
    return SymplecticSpace.from_matrix(matrix_from(data['omega'], f"{where}.omega"), policy)


def _sampler_from(space: SymplecticSpace, l0: Lagrangian, data: Dict[str, Any], where: str,
                  policy: TolerancePolicy):
    """(mesh, sampler) for the hamiltonian and chart path kinds."""
    if 'hamiltonian' in data:
        a, b = floats_from(data['interval'], f"{where}.interval")
        size = integer_from(data['mesh_size'], f"{where}.mesh_size")
        start = subspace_from(data['start'], space.dim, f"{where}.start", policy)
        generator = np.linalg.solve(space.matrix, matrix_from(data['hamiltonian'], f"{where}.hamiltonian"))
        frame = start.frame

        def sampler(t: float) -> Subspace:
            return Subspace(np.linalg.qr(scipy.linalg.expm((t - a) * generator) @ frame)[0])

        return np.linspace(a, b, size), sampler

    l1 = Lagrangian.checked(space, subspace_from(data['l1'], space.dim, f"{where}.l1", policy), policy)
    forms = form_path_from({'mesh': data['mesh'], 'samples': data['forms']}, where)

    def chart_sampler(t: float) -> Subspace:
        return unchart(l0, l1, forms.at(t).entries, policy).sub

    return forms.mesh, chart_sampler


def lagrangian_path_from(space: SymplecticSpace, l0: Lagrangian, data: Any, where: str,
                         policy: TolerancePolicy = DEFAULT_POLICY,
                         max_step: float = DEFAULT_MAX_STEP) -> LagrangianPath:
    """
    A path given by sampled frames, by a Hamiltonian flow
    t -> expm((t - a) Omega^-1 S) start, or by chart forms over l0 relative to l1.
    """
    if not isinstance(data, dict):
        raise ScenarioError(f"{where}: expected an object")
    kind = next((k for k, fields in PATH_FIELDS.items() if set(data) == fields), None)
    if kind is None:
        raise ScenarioError(f"{where}: fields {sorted(data)} match no path kind "
                            f"({'; '.join(', '.join(sorted(f)) for f in PATH_FIELDS.values())})")
    if kind == 'frames':
        mesh = floats_from(data['mesh'], f"{where}.mesh")
        if not isinstance(data['frames'], list):
            raise ScenarioError(f"{where}.frames: expected an array of matrices")
        samples = tuple(Lagrangian.checked(space, subspace_from(f, space.dim, f"{where}.frames[{i}]", policy), policy)
                        for i, f in enumerate(data['frames']))
        return LagrangianPath(space, tuple(mesh), samples, max_step)
    mesh, sampler = _sampler_from(space, l0, data, where, policy)
    return LagrangianPath.build(space, mesh, sampler, policy, max_step)


class MaslovInstance(NamedTuple):
    space: SymplecticSpace
    l0: Lagrangian
    path: LagrangianPath


class ReductionInstance(NamedTuple):
    setup: ReductionSetup
    l0: Lagrangian
    path: LagrangianPath


def _lagrangian_and_space(data: Dict[str, Any], where: str, policy: TolerancePolicy):
    dim = matrix_from(data['l0'], f"{where}.l0").shape[0]
    space = space_from(data, dim, where, policy)
    l0 = Lagrangian.checked(space, subspace_from(data['l0'], dim, f"{where}.l0", policy), policy)
    return space, l0


def maslov_instance(data: Dict[str, Any], where: str = 'instance', policy: TolerancePolicy = DEFAULT_POLICY,
                    max_step: float = DEFAULT_MAX_STEP) -> MaslovInstance:
    check_fields(data, COMMON_FIELDS | INSTANCE_FIELDS['maslov'], {'l0', 'path'}, where)
    space, l0 = _lagrangian_and_space(data, where, policy)
    return MaslovInstance(space, l0, lagrangian_path_from(space, l0, data['path'], f"{where}.path", policy, max_step))


def reduction_instance(data: Dict[str, Any], where: str = 'instance', policy: TolerancePolicy = DEFAULT_POLICY,
                       max_step: float = DEFAULT_MAX_STEP) -> ReductionInstance:
    check_fields(data, COMMON_FIELDS | INSTANCE_FIELDS['reduce'], {'w', 'l0', 'path'}, where)
    space, l0 = _lagrangian_and_space(data, where, policy)
    setup = make_reduction(space, subspace_from(data['w'], space.dim, f"{where}.w", policy), policy)
    path = lagrangian_path_from(space, l0, data['path'], f"{where}.path", policy, max_step)
    return ReductionInstance(setup, l0, path)


def form_instance(data: Dict[str, Any], kind: str, where: str = 'instance',
                  policy: TolerancePolicy = DEFAULT_POLICY) -> Dict[str, Any]:
    """Parsed eq1 / sf / thm1 instances as a dict of domain objects."""
    required = {'eq1': {'matrix', 'w'}, 'sf': {'mesh', 'samples'}, 'thm1': {'mesh', 'samples', 'v'}}[kind]
    check_fields(data, COMMON_FIELDS | INSTANCE_FIELDS[kind], required, where)
    if kind == 'eq1':
        matrix = matrix_from(data['matrix'], f"{where}.matrix")
        return {'matrix': SymMatrix(matrix), 'w': subspace_from(data['w'], matrix.shape[0], f"{where}.w", policy)}
    path = form_path_from(data, where)
    parsed: Dict[str, Any] = {'path': path}
    if kind == 'thm1':
        parsed['v'] = subspace_from(data['v'], path.dim, f"{where}.v", policy)
    return parsed


INSTANCE_PARSERS: Dict[str, Callable[..., Any]] = {
    'maslov': maslov_instance,
    'reduce': reduction_instance,
}


def instance_kind(data: Any, where: str = 'instance', expected: Optional[str] = None) -> str:
    if not isinstance(data, dict):
        raise ScenarioError(f"{where}: expected an object")
    kind = data.get('kind', expected)
    if kind not in INSTANCE_FIELDS:
        raise ScenarioError(f"{where}: unknown instance kind {kind!r}")
    if expected is not None and kind != expected:
        raise ScenarioError(f"{where}: expected a {expected!r} instance, got {kind!r}")
    return kind

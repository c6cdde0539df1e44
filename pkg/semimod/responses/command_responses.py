"""
Builders turning the result of one CLI command into an OutputEnvelope.

Every payload carries the semigroup under the key "semigroup" and, when a
semimodule is involved, its normalized lean set under "lean" together with
the gap coordinates of the nonzero generators under "coords".
"""

from typing import Iterable, List, Optional, Sequence

import pandas as pd

from semimod.algebra.duality import dual, dual_dual_check, dual_oracle
from semimod.algebra.pathmatrix import (
    PathMatrix,
    canonical_matrix,
    lean_to_matrix,
    lean_to_path,
    matrix_to_lean,
    matrix_to_path,
)
from semimod.algebra.resolution import (
    bivector_syzygies,
    hat_duality_check,
    kernel_relations_balance,
    resolution_degrees,
)
from semimod.algebra.selfdual import (
    CensusReport,
    classify_form,
    is_selfdual,
)
from semimod.algebra.semigroup import (
    NumericalSemigroup,
    frobenius,
    gap_coords,
    gaps,
    genus,
)
from semimod.algebra.semimodule import LeanSet, normalize
from semimod.algebra.syzygy import (
    dihedral_orbit,
    syzygy,
    syzygy_generators,
    syzygy_matrix,
    syzygy_oracle,
    syzygy_period,
)
from semimod.exceptions import OracleMismatchError
from semimod.render.ascii import render_ascii
from semimod.render.svg import render_svg
from semimod.reports import (
    CensusTextReport,
    DualReport,
    GapsReport,
    LeanReport,
    MatrixReport,
    OrbitReport,
    PathReport,
    ResolutionReport,
    SyzygyReport,
)

from .output_envelope import OutputEnvelope


def _lean_rows(lean: LeanSet) -> pd.DataFrame:
    rows = [[0, None, None]] + [
        [gen, coord.a, coord.b] for gen, coord in zip(lean.gens[1:], lean.coords)
    ]
    return pd.DataFrame(rows, columns=["generator", "a", "b"]).astype("Int64")


def _lean_payload(gamma: NumericalSemigroup, generators: Sequence[int]) -> dict:
    lean, shift = normalize(gamma, generators)
    return {
        "semigroup": gamma,
        "input": list(generators),
        "shift": shift,
        "lean": lean,
        "coords": list(lean.coords),
        "generator_count": len(lean),
    }


def gaps_response(gamma: NumericalSemigroup, fmt: str) -> OutputEnvelope:
    gap_list = gaps(gamma)
    coords = [gap_coords(gamma, gap) for gap in gap_list]
    return OutputEnvelope(
        fmt,
        {
            "semigroup": gamma,
            "frobenius": frobenius(gamma),
            "genus": genus(gamma),
            "gaps": gap_list,
            "coords": coords,
        },
        pd.DataFrame(
            [[gap, coord.a, coord.b] for gap, coord in zip(gap_list, coords)],
            columns=["gap", "a", "b"],
        ),
        GapsReport,
    )


def lean_response(
    gamma: NumericalSemigroup, generators: Sequence[int], fmt: str
) -> OutputEnvelope:
    payload = _lean_payload(gamma, generators)
    return OutputEnvelope(fmt, payload, _lean_rows(payload["lean"]), LeanReport)


def dual_response(
    gamma: NumericalSemigroup,
    generators: Sequence[int],
    fmt: str,
    check: bool = False,
) -> OutputEnvelope:
    """
    Dual of the semimodule generated by `generators`. The raw generators and
    the dual class are those of the normalized lean set; `dual_shift`
    places the dual of the input itself.
    """
    payload = _lean_payload(gamma, generators)
    lean: LeanSet = payload["lean"]
    result = dual(lean)

    payload.update(
        {
            "raw_generators": list(result.raw_generators),
            "dual": result.lean,
            "dual_coords": list(result.lean.coords),
            "dual_shift": result.shift - payload["shift"],
            "selfdual": is_selfdual(lean),
        }
    )

    if check:
        oracle = dual_oracle(lean)
        agrees = oracle == result.as_shifted()
        if not agrees:
            raise OracleMismatchError("dual", result.as_shifted(), oracle)
        if not dual_dual_check(lean):
            raise OracleMismatchError("dual of dual", dual(result.lean).lean, lean)
        payload["check"] = {
            "oracle": oracle.lean,
            "oracle_shift": oracle.shift,
            "agrees": agrees,
        }

    return OutputEnvelope(fmt, payload, _lean_rows(result.lean), DualReport)


def syzygy_response(
    gamma: NumericalSemigroup,
    generators: Sequence[int],
    fmt: str,
    check: bool = False,
) -> OutputEnvelope:
    payload = _lean_payload(gamma, generators)
    lean: LeanSet = payload["lean"]
    couple = syzygy_generators(lean)
    syz = syzygy(lean)
    m = lean_to_matrix(lean)
    syz_m = syzygy_matrix(m)

    payload.update(
        {
            "syzygy_generators": list(couple.J),
            "complement": list(couple.complement()),
            "syzygy": syz.lean,
            "syzygy_shift": syz.shift,
            "matrix": m,
            "syzygy_matrix": syz_m,
            "period": syzygy_period(lean),
        }
    )

    if check:
        oracle = syzygy_oracle(lean)
        if oracle != syz:
            raise OracleMismatchError("syzygy", syz, oracle)
        matrix_lean, _ = matrix_to_lean(syz_m)
        if matrix_lean != syz.lean:
            raise OracleMismatchError("syzygy matrix rule", matrix_lean, syz.lean)
        payload["check"] = {
            "oracle": oracle.lean,
            "oracle_shift": oracle.shift,
            "agrees": True,
        }

    return OutputEnvelope(
        fmt,
        payload,
        pd.DataFrame(
            [[i, j] for i, j in zip(lean.gens, couple.J)],
            columns=["generator", "syzygy_generator"],
        ),
        SyzygyReport,
    )


def _matrix_payload(m: PathMatrix, lean: LeanSet, rotation: int) -> dict:
    canonical = canonical_matrix(m)
    form = classify_form(canonical)
    return {
        "semigroup": m.semigroup,
        "matrix": m,
        "canonical_matrix": canonical,
        "rotation": rotation,
        "lean": lean,
        "coords": list(lean.coords),
        "path": matrix_to_path(canonical),
        "selfdual": is_selfdual(lean),
        "form": form.kind,
    }


def matrix_response(
    gamma: NumericalSemigroup, generators: Sequence[int], fmt: str
) -> OutputEnvelope:
    lean, _ = normalize(gamma, generators)
    payload = _matrix_payload(lean_to_matrix(lean), lean, 0)
    payload["input"] = list(generators)
    return _matrix_envelope(payload, fmt)


def decode_matrix_response(
    top: Sequence[int], bottom: Sequence[int], fmt: str
) -> OutputEnvelope:
    """Decode a two-row matrix given in any of its rotations."""
    m = PathMatrix(tuple(top), tuple(bottom))
    lean, rotation = matrix_to_lean(m)
    return _matrix_envelope(_matrix_payload(m, lean, rotation), fmt)


def _matrix_envelope(payload: dict, fmt: str) -> OutputEnvelope:
    m: PathMatrix = payload["canonical_matrix"]
    return OutputEnvelope(
        fmt,
        payload,
        pd.DataFrame(
            [[k, y, x] for k, (y, x) in enumerate(zip(m.top, m.bottom))],
            columns=["column", "top", "bottom"],
        ),
        MatrixReport,
    )


def path_response(
    gamma: NumericalSemigroup,
    generators: Sequence[int],
    fmt: str,
    svg_file: Optional[str] = None,
    cell_size: Optional[float] = None,
) -> OutputEnvelope:
    lean, _ = normalize(gamma, generators)
    path = lean_to_path(lean)
    turns = path.turning_points()

    if svg_file:
        render_svg(path, svg_file, cell_size)

    payload = {
        "semigroup": gamma,
        "input": list(generators),
        "lean": lean,
        "coords": list(lean.coords),
        "path": path,
        "turning_points": [list(point) for point in turns],
        "syzygy_points": [list(point) for point in path.syzygy_points()],
        "ascii": render_ascii(path),
        "svg": svg_file,
    }
    return OutputEnvelope(
        fmt,
        payload,
        pd.DataFrame([list(point) for point in turns], columns=["x", "y"]),
        PathReport,
    )


def resolution_response(
    gamma: NumericalSemigroup,
    generators: Sequence[int],
    fmt: str,
    steps: int,
    check: bool = False,
) -> OutputEnvelope:
    lean, _ = normalize(gamma, generators)
    res = resolution_degrees(lean, steps)
    bivectors = bivector_syzygies(lean) if lean.n > 0 else []

    payload = {
        "semigroup": gamma,
        "input": list(generators),
        "lean": lean,
        "coords": list(lean.coords),
        "steps": [list(step) for step in res.steps],
        "betti_numbers": res.betti_numbers,
        "shift": res.shift,
        "periodic": res.is_periodic(),
        "bivectors": [
            {
                "positions": [f.pos_a, f.pos_b],
                "exponents": [f.exp_a, f.exp_b],
                "degree": f.degree,
            }
            for f in bivectors
        ],
    }

    if check:
        if not res.is_periodic():
            raise OracleMismatchError("resolution periodicity", res.steps, res.shift)
        if lean.n > 0:
            if not kernel_relations_balance(lean):
                raise OracleMismatchError("kernel relations", bivectors, lean)
            if not hat_duality_check(lean):
                raise OracleMismatchError("hat duality", lean, res.shift)
        payload["check"] = {"agrees": True}

    return OutputEnvelope(
        fmt,
        payload,
        pd.DataFrame(
            [
                [s, len(step), ",".join(str(degree) for degree in step)]
                for s, step in enumerate(res.steps)
            ],
            columns=["step", "rank", "degrees"],
        ),
        ResolutionReport,
    )


def census_response(report: CensusReport, fmt: str) -> OutputEnvelope:
    payload = {
        "results": [
            {
                "semigroup": result.gamma,
                "observed": result.observed,
                "expected": result.expected,
                "generator_counts": result.generator_counts,
                "total_observed": result.total_observed,
                "total_expected": result.total_expected,
                "matches": result.matches,
            }
            for result in report.results
        ],
        "mismatches": report.mismatches(),
        "matches": report.matches,
    }
    return OutputEnvelope(fmt, payload, report.to_dataframe(), CensusTextReport)


def orbit_response(
    gamma: NumericalSemigroup, generators: Iterable[int], fmt: str
) -> OutputEnvelope:
    generators = list(generators)
    lean, _ = normalize(gamma, generators)
    entries = dihedral_orbit(lean)
    distinct: List[LeanSet] = []
    for entry in entries:
        if entry.lean not in distinct:
            distinct.append(entry.lean)

    payload = {
        "semigroup": gamma,
        "input": generators,
        "lean": lean,
        "coords": list(lean.coords),
        "order": len(entries),
        "distinct_classes": len(distinct),
        "orbit": [{"word": entry.word, "lean": entry.lean} for entry in entries],
    }
    return OutputEnvelope(
        fmt,
        payload,
        pd.DataFrame(
            [[entry.word, str(entry.lean)] for entry in entries],
            columns=["word", "lean"],
        ),
        OrbitReport,
    )

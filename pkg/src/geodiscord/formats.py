"""File formats: state documents and measured Pauli-expectation tables.

States are stored as a UTF-8 JSON document with two fields, ``dims`` (list
of party dimensions) and ``matrix`` (nested rows of [re, im] pairs).  Pauli
tables are two-column CSV files ``label,value`` with a required header row;
labels are strings over {I, X, Y, Z}, one character per qubit.  A label that
is absent is treated as not measured, never as zero.
"""

from __future__ import annotations

import csv
import itertools
import json
import warnings
from dataclasses import dataclass

import numpy as np

from .bloch import BlochDecomposition, qubit_subsets, reconstruct_state
from .tensor_ops import DensityMatrix, StateValidationError

__all__ = [
    "ParseError",
    "PauliTable",
    "load_state",
    "save_state",
    "dumps_state",
    "load_pauli_table",
    "save_pauli_table",
    "pauli_table_from_decomposition",
    "ingest_pauli_table",
]

_AXES = "XYZ"


class ParseError(ValueError):
    """A file could not be parsed into the expected structure."""


def dumps_state(rho: DensityMatrix) -> str:
    payload = {
        "dims": list(rho.party_dims),
        "matrix": [
            [[float(entry.real), float(entry.imag)] for entry in row]
            for row in rho.matrix
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def save_state(rho: DensityMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_state(rho))


def load_state(path) -> DensityMatrix:
    """Parse and validate a state document; names the failing check on error."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(payload, dict) or "dims" not in payload or "matrix" not in payload:
        raise ParseError(f"{path}: expected an object with 'dims' and 'matrix'")
    try:
        dims = [int(d) for d in payload["dims"]]
        rows = payload["matrix"]
        matrix = np.array(
            [[complex(entry[0], entry[1]) for entry in row] for row in rows]
        )
    except (TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"{path}: malformed dims or matrix ({exc})") from exc
    return DensityMatrix(matrix, dims)


@dataclass(frozen=True)
class PauliTable:
    """Measured expectation values keyed by Pauli label strings."""

    n_qubits: int
    values: dict

    def __post_init__(self):
        for label, value in self.values.items():
            _check_label(label, self.n_qubits)
            if abs(value) > 1.0 + 1e-9:
                raise StateValidationError(
                    "pauli-range",
                    f"expectation for {label} is {value}, outside [-1, 1]",
                )
        identity = "I" * self.n_qubits
        if identity in self.values and abs(self.values[identity] - 1.0) > 1e-9:
            raise StateValidationError(
                "pauli-identity",
                f"all-identity label must be 1, got {self.values[identity]}",
            )


def _check_label(label: str, n_qubits: int) -> None:
    if len(label) != n_qubits or any(ch not in "IXYZ" for ch in label):
        raise ParseError(
            f"bad Pauli label {label!r}: need {n_qubits} characters over I, X, Y, Z"
        )


def load_pauli_table(path) -> PauliTable:
    """Read a ``label,value`` CSV file (header row required)."""
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        rows = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not rows:
        raise ParseError(f"{path}: empty table")
    header = [cell.strip().lower() for cell in rows[0]]
    if header[:2] != ["label", "value"]:
        raise ParseError(f"{path}: first row must be the header 'label,value'")
    values = {}
    n_qubits = None
    for row in rows[1:]:
        if len(row) < 2:
            raise ParseError(f"{path}: row {row!r} does not have two columns")
        label = row[0].strip().upper()
        if n_qubits is None:
            n_qubits = len(label)
        _check_label(label, n_qubits)
        if label in values:
            raise ParseError(f"{path}: duplicate label {label}")
        try:
            values[label] = float(row[1])
        except ValueError as exc:
            raise ParseError(f"{path}: bad value for {label}: {row[1]!r}") from exc
    return PauliTable(n_qubits, values)


def save_pauli_table(table: PauliTable, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["label", "value"])
        for label in sorted(table.values):
            writer.writerow([label, f"{table.values[label]:.17g}"])


def _label_for(n_qubits, parties, axes):
    chars = ["I"] * n_qubits
    for party, axis in zip(parties, axes):
        chars[party - 1] = _AXES[axis]
    return "".join(chars)


def pauli_table_from_decomposition(dec: BlochDecomposition) -> PauliTable:
    """Full table of every Pauli expectation encoded by a decomposition."""
    n = dec.n_qubits
    values = {"I" * n: 1.0}
    for k, vec in dec.s.items():
        for axis in range(3):
            values[_label_for(n, (k,), (axis,))] = float(vec[axis])
    for subset, tensor in dec.t.items():
        for axes in itertools.product(range(3), repeat=len(subset)):
            values[_label_for(n, subset, axes)] = float(tensor[axes])
    return PauliTable(n, values)


def ingest_pauli_table(table: PauliTable, strict: bool = False) -> BlochDecomposition:
    """Bloch decomposition from measured single- and joint-Pauli expectations.

    Every non-identity label must be present (absent labels are an error,
    listed in the message).  With ``strict`` the reconstructed matrix must
    pass the full state validator; otherwise non-physical data is admitted
    with a warning and the discord formulas operate on the tensors as given.
    """
    n = table.n_qubits
    missing = []
    s = {}
    for k in range(1, n + 1):
        vec = np.zeros(3)
        for axis in range(3):
            label = _label_for(n, (k,), (axis,))
            if label in table.values:
                vec[axis] = table.values[label]
            else:
                missing.append(label)
        s[k] = vec
    t = {}
    for subset in qubit_subsets(n):
        tensor = np.zeros((3,) * len(subset))
        for axes in itertools.product(range(3), repeat=len(subset)):
            label = _label_for(n, subset, axes)
            if label in table.values:
                tensor[axes] = table.values[label]
            else:
                missing.append(label)
        t[subset] = tensor
    if missing:
        raise StateValidationError(
            "missing-labels", f"table is missing Pauli labels: {sorted(missing)}"
        )
    dec = BlochDecomposition(n, s, t)
    rho = reconstruct_state(dec)
    try:
        rho.validate()
    except StateValidationError:
        if strict:
            raise
        lowest = float(np.linalg.eigvalsh(rho.matrix)[0])
        warnings.warn(
            "ingested expectations are not a physical state "
            f"(minimum eigenvalue {lowest:.3e}); proceeding on the raw tensors",
            stacklevel=2,
        )
    return dec

"""On-disk algebra format: a JSON document with a sparse bracket table,
an optional Levi layout block, and optional attributes.

Grammar (all JSON):

    {
      "format_version": "1",
      "dim": <int>,
      "basis": [<label>, ...],                       # dim labels
      "brackets": { "i,j": { "k": "p/q" | "n" } },   # omitted products are zero
      "layout": {                                    # optional
        "components": [[<index>, ...], ...],         # one index list per component
        "ideal": [<index>, ...]
      },
      "attributes": {                                # optional
        "irreducible_over": [<component label>, ...] # labels are "S1", "S2", ...
      }
    }

Indices are 0-based and < dim.  Rationals are exact strings, never floats.
Serialization is deterministic (sorted keys, two-space indent, trailing
newline), so save -> load -> save is byte-stable.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraTable, induced_table
from .analysis import find_sl2_roles
from .builders import LeviComponent, LeviLayout
from .errors import LayoutError
from .linalg import unit_vec

FORMAT_VERSION = "1"


class FormatError(ValueError):
    """Malformed algebra file."""


@dataclass(frozen=True)
class AlgebraDocument:
    table: AlgebraTable
    layout: LeviLayout | None = None


def component_label(position: int) -> str:
    """File-format component naming: S1, S2, ... in layout order."""
    return f"S{position + 1}"


def _unit_index(v) -> int:
    hits = [i for i, c in enumerate(v) if c]
    if len(hits) != 1 or v[hits[0]] != 1:
        raise LayoutError("layout basis vectors must be standard unit vectors")
    return hits[0]


def document_to_dict(doc: AlgebraDocument) -> dict:
    table = doc.table
    brackets: dict[str, dict[str, str]] = {}
    for i in range(table.dim):
        for j in range(table.dim):
            entries = table.products[i][j]
            if entries:
                brackets[f"{i},{j}"] = {
                    str(k): str(c) for k, c in entries
                }
    out: dict = {
        "format_version": FORMAT_VERSION,
        "dim": table.dim,
        "basis": list(table.labels),
        "brackets": brackets,
    }
    if doc.layout is not None:
        layout = doc.layout
        out["layout"] = {
            "components": [
                [_unit_index(v) for v in comp.basis_vectors]
                for comp in layout.components
            ],
            "ideal": [_unit_index(v) for v in layout.ideal_basis],
        }
        irreducible = [
            component_label(pos)
            for pos, comp in enumerate(layout.components)
            if layout.irreducible_declared(comp.label) is True
        ]
        if irreducible:
            out["attributes"] = {"irreducible_over": irreducible}
    return out


def document_to_json(doc: AlgebraDocument) -> str:
    return json.dumps(document_to_dict(doc), sort_keys=True, indent=2) + "\n"


def save_document(doc: AlgebraDocument, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(document_to_json(doc))


def _parse_fraction(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise FormatError(f"rational entries must be strings, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {s!r}") from exc


def document_from_dict(data: dict) -> AlgebraDocument:
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    if data.get("format_version") != FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {data.get('format_version')!r}")
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise FormatError("dim must be a nonnegative integer")
    basis = data.get("basis")
    if not isinstance(basis, list) or len(basis) != dim or not all(
        isinstance(b, str) for b in basis
    ):
        raise FormatError("basis must be a list of dim labels")
    brackets = data.get("brackets", {})
    if not isinstance(brackets, dict):
        raise FormatError("brackets must be an object")
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for key, entry in brackets.items():
        try:
            si, sj = key.split(",")
            i, j = int(si), int(sj)
        except (ValueError, AttributeError) as exc:
            raise FormatError(f"bad bracket key {key!r}") from exc
        if not (0 <= i < dim and 0 <= j < dim):
            raise FormatError(f"bracket key {key!r} out of range")
        if not isinstance(entry, dict):
            raise FormatError(f"bracket value for {key!r} must be an object")
        row: dict[int, Fraction] = {}
        for sk, sc in entry.items():
            try:
                k = int(sk)
            except ValueError as exc:
                raise FormatError(f"bad target index {sk!r}") from exc
            if not 0 <= k < dim:
                raise FormatError(f"target index {sk!r} out of range")
            c = _parse_fraction(sc)
            if c:
                row[k] = c
        if row:
            products[(i, j)] = row
    table = AlgebraTable.from_products(dim, products, tuple(basis))
    layout_data = data.get("layout")
    layout = None
    if layout_data is not None:
        if not isinstance(layout_data, dict):
            raise FormatError("layout must be an object")
        comp_lists = layout_data.get("components")
        ideal_list = layout_data.get("ideal")
        if not isinstance(comp_lists, list) or not isinstance(ideal_list, list):
            raise FormatError("layout needs components and ideal index lists")
        comps = []
        for pos, idxs in enumerate(comp_lists):
            if not isinstance(idxs, list) or not all(
                isinstance(i, int) and 0 <= i < dim for i in idxs
            ):
                raise FormatError("component index lists must hold indices < dim")
            vecs = tuple(unit_vec(dim, i) for i in idxs)
            sub = induced_table(table, vecs)
            roles = find_sl2_roles(sub)
            comps.append(LeviComponent(component_label(pos), sub, vecs, roles))
        if not all(isinstance(i, int) and 0 <= i < dim for i in ideal_list):
            raise FormatError("ideal index list must hold indices < dim")
        ideal_vecs = tuple(unit_vec(dim, i) for i in ideal_list)
        declared: tuple[tuple[str, bool], ...] = ()
        attrs = data.get("attributes")
        if attrs is not None:
            if not isinstance(attrs, dict):
                raise FormatError("attributes must be an object")
            names = attrs.get("irreducible_over", [])
            if not isinstance(names, list):
                raise FormatError("irreducible_over must be a list of labels")
            known = {c.label for c in comps}
            for name in names:
                if name not in known:
                    raise FormatError(f"irreducible_over names unknown component {name!r}")
            declared = tuple((name, True) for name in names)
        layout = LeviLayout(tuple(comps), ideal_vecs, declared)
    return AlgebraDocument(table, layout)


def document_from_json(text: str) -> AlgebraDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return document_from_dict(data)


def load_document(path: str) -> AlgebraDocument:
    with open(path) as fh:
        return document_from_json(fh.read())


def file_digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()

"""Command-line front end.

Commands: build, verify, info, classify, decompose, module-decompose.
Global flags: --output {text|machine}, and --out PATH where a file is written.

Exit codes: 0 success / affirmative verdict, 1 negative verdict (with a
witness), 2 usage or file-format error, 3 unsupported input (non-split
semisimple part, undecidable irreducibility).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .algebra import (
    derived_series,
    is_lie,
    leibniz_witness,
    right_annihilator,
    squares_ideal,
)
from .analysis import (
    decompose_semisimple,
    is_lie_simple,
    is_semisimple_leibniz,
    is_simple_leibniz,
    action_on_subspace,
)
from .builders import (
    BuiltAlgebra,
    ComponentSpec,
    SemisimpleSpec,
    align_module,
    sl2_roles_of,
    build_example2,
    build_example3,
    build_lie_simple,
    build_semisimple,
    build_simple_leibniz,
    build_sl2,
)
from .errors import (
    LayoutError,
    LeibnizError,
    NonSplitUnsupported,
    NotSemisimpleAction,
    NotSemisimpleError,
    UndecidableIrreducibility,
)
from .io import (
    AlgebraDocument,
    FormatError,
    document_to_json,
    file_digest,
    load_document,
)
from .modules import canonical_module, decompose_sl2, tensor_pair_module, trivial_module

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


@dataclass
class ReportDocument:
    command: str
    input_digest: str | None = None
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_machine(self) -> str:
        payload = {
            "command": self.command,
            "input_digest": self.input_digest,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "notes": self.notes,
            "timings": self.timings,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        if self.input_digest:
            lines.append(f"input: sha256 {self.input_digest[:16]}…")
        for key in sorted(self.verdicts):
            lines.append(f"{key}: {_fmt(self.verdicts[key])}")
        for key in sorted(self.witnesses):
            lines.append(f"witness {key}: {_fmt(self.witnesses[key])}")
        for key in sorted(self.notes):
            lines.append(f"note {key}: {_fmt(self.notes[key])}")
        return "\n".join(lines) + "\n"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def _subspace_rows(sub) -> list[list[str]]:
    return [[str(c) for c in row] for row in sub.basis]


def _emit(report: ReportDocument, args) -> None:
    if args.output == "machine":
        sys.stdout.write(report.to_machine())
    else:
        sys.stdout.write(report.to_text())


def _load(path: str) -> AlgebraDocument:
    return load_document(path)


def _parse_int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _build_from_recipe(path: str) -> BuiltAlgebra:
    """Recipe file: {"components": [{"label"?, "order"?}, ...],
    "modules": [{"type": "canonical"|"tensor"|"trivial", ...}, ...],
    "module_labels"?: [...]}."""
    with open(path) as fh:
        data = json.load(fh)
    comps = []
    roles_by_label = {}
    for pos, cd in enumerate(data.get("components", [])):
        label = cd.get("label", f"S{pos + 1}")
        order = tuple(cd.get("order", ("e", "f", "h")))
        comps.append(ComponentSpec.sl2(label, order))
        roles_by_label[label] = sl2_roles_of(order)
    modules = []
    for md in data.get("modules", []):
        kind = md.get("type")
        if kind == "canonical":
            modules.append(canonical_module(md["m"], md["component"]))
        elif kind == "tensor":
            a, b = md["components"]
            ma, mb = md["m"]
            modules.append(tensor_pair_module(ma, mb, (a, b)))
        elif kind == "trivial":
            modules.append(trivial_module(md["dim"], md["component"]))
        else:
            raise FormatError(f"unknown module type {kind!r}")
    modules = [align_module(m, roles_by_label) for m in modules]
    labels = data.get("module_labels")
    return build_semisimple(
        SemisimpleSpec(tuple(comps), tuple(modules)),
        tuple(labels) if labels else None,
    )


def cmd_build(args) -> int:
    name = args.name
    try:
        if name == "sl2":
            table = build_sl2()
            doc = AlgebraDocument(table)
        elif name in ("simple", "example1"):
            if args.m is None:
                raise ValueError("builder needs --m")
            ba = build_simple_leibniz(args.m)
            doc = AlgebraDocument(ba.table, ba.layout)
        elif name == "lie-simple":
            if not args.ts:
                raise ValueError("builder needs --ts t1,t2,...")
            ba = build_lie_simple(_parse_int_list(args.ts))
            doc = AlgebraDocument(ba.table, ba.layout)
        elif name == "example2":
            ts = _parse_int_list(args.t) if args.t else []
            if len(ts) != 4:
                raise ValueError("example2 needs --t t1,t2,t3,t4")
            ba = build_example2(*ts)
            doc = AlgebraDocument(ba.table, ba.layout)
        elif name == "example3":
            ba = build_example3()
            doc = AlgebraDocument(ba.table, ba.layout)
        elif name == "spec-file":
            if not args.spec:
                raise ValueError("spec-file needs --spec PATH")
            ba = _build_from_recipe(args.spec)
            doc = AlgebraDocument(ba.table, ba.layout)
        else:
            raise ValueError(f"unknown builder {name!r}")
    except (ValueError, KeyError, FormatError, LeibnizError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    text = document_to_json(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = _load(args.path)
    start = time.perf_counter()
    witness = leibniz_witness(doc.table)
    report = ReportDocument("verify", file_digest(document_to_json(doc)))
    report.timings["verify_s"] = round(time.perf_counter() - start, 6)
    report.verdicts["is_leibniz"] = witness is None
    if witness is not None:
        report.witnesses["failing_triple"] = list(witness)
    _emit(report, args)
    return EXIT_OK if witness is None else EXIT_NEGATIVE


def cmd_info(args) -> int:
    doc = _load(args.path)
    table = doc.table
    report = ReportDocument("info", file_digest(document_to_json(doc)))
    start = time.perf_counter()
    ideal = squares_ideal(table)
    series = derived_series(table)
    report.verdicts["dim"] = table.dim
    report.verdicts["is_lie"] = is_lie(table)
    report.verdicts["squares_ideal_dim"] = ideal.dim
    report.verdicts["squares_ideal_basis"] = _subspace_rows(ideal)
    report.verdicts["derived_series_dims"] = [s.dim for s in series.terms]
    report.verdicts["solvable"] = series.solvable
    report.verdicts["right_annihilator_dim"] = right_annihilator(table).dim
    report.timings["info_s"] = round(time.perf_counter() - start, 6)
    _emit(report, args)
    return EXIT_OK


def cmd_classify(args) -> int:
    doc = _load(args.path)
    table = doc.table
    report = ReportDocument("classify", file_digest(document_to_json(doc)))
    start = time.perf_counter()
    unsupported = False
    series = derived_series(table)
    report.verdicts["solvable"] = series.solvable
    try:
        report.verdicts["semisimple"] = is_semisimple_leibniz(table)
        report.verdicts["lie_simple"] = is_lie_simple(table)
    except NonSplitUnsupported as exc:
        report.notes["lie_simple"] = f"unsupported: {exc}"
        unsupported = True
    declared = None
    if doc.layout is not None and len(doc.layout.components) == 1:
        declared = doc.layout.irreducible_declared(doc.layout.components[0].label)
    try:
        report.verdicts["simple"] = is_simple_leibniz(table, declared)
    except UndecidableIrreducibility as exc:
        report.notes["simple"] = f"undecidable: {exc}"
        unsupported = True
    except NonSplitUnsupported as exc:
        report.notes["simple"] = f"unsupported: {exc}"
        unsupported = True
    report.timings["classify_s"] = round(time.perf_counter() - start, 6)
    _emit(report, args)
    return EXIT_UNSUPPORTED if unsupported else EXIT_OK


def cmd_decompose(args) -> int:
    doc = _load(args.path)
    if doc.layout is None:
        sys.stderr.write("error: decompose requires a layout block\n")
        return EXIT_USAGE
    report = ReportDocument("decompose", file_digest(document_to_json(doc)))
    start = time.perf_counter()
    try:
        result = decompose_semisimple(doc.table, doc.layout)
    except NotSemisimpleError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (NonSplitUnsupported, UndecidableIrreducibility, NotSemisimpleAction) as exc:
        sys.stderr.write(f"unsupported: {exc}\n")
        return EXIT_UNSUPPORTED
    report.timings["decompose_s"] = round(time.perf_counter() - start, 6)
    report.verdicts["status"] = result.status
    if result.status == "decomposed":
        report.verdicts["summands"] = [
            {
                "label": s.label,
                "classification": s.classification,
                "basis": _subspace_rows(s.subspace),
            }
            for s in result.summands
        ]
        report.verdicts["verified"] = result.verified
        _emit(report, args)
        return EXIT_OK
    p, q, inter = result.witness
    report.witnesses["nonzero_intersection"] = {
        "components": [p, q],
        "dim": inter.dim,
        "basis": _subspace_rows(inter),
    }
    _emit(report, args)
    return EXIT_NEGATIVE


def cmd_module_decompose(args) -> int:
    doc = _load(args.path)
    if doc.layout is None:
        sys.stderr.write("error: module-decompose requires a layout block\n")
        return EXIT_USAGE
    try:
        comp = doc.layout.component(args.component)
    except KeyError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    report = ReportDocument("module-decompose", file_digest(document_to_json(doc)))
    start = time.perf_counter()
    try:
        action = action_on_subspace(doc.table, doc.layout.ideal, [comp])
        dec = decompose_sl2(action, comp.label)
    except (NotSemisimpleAction, LayoutError) as exc:
        sys.stderr.write(f"unsupported: {exc}\n")
        return EXIT_UNSUPPORTED
    report.timings["module_decompose_s"] = round(time.perf_counter() - start, 6)
    report.verdicts["component"] = comp.label
    report.verdicts["chain_dims"] = [c.dim for c in dec.chains]
    report.verdicts["multiplicities"] = {
        str(k): v for k, v in sorted(dec.multiplicities.items())
    }
    report.verdicts["chains"] = [
        {
            "highest_weight": c.highest_weight,
            "vectors": [[str(x) for x in v] for v in c.vectors],
        }
        for c in dec.chains
    ]
    _emit(report, args)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibnizalg",
        description="Exact classification and decomposition of right Leibniz algebras",
    )
    parser.add_argument("--output", choices=("text", "machine"), default="text")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_build = sub.add_parser("build", help="construct a fixture algebra file")
    p_build.add_argument(
        "name",
        help="sl2 | simple | lie-simple | example1 | example2 | example3 | spec-file",
    )
    p_build.add_argument("--m", type=int, default=None, help="highest weight")
    p_build.add_argument("--ts", default=None, help="comma-separated highest weights")
    p_build.add_argument("--t", default=None, help="t1,t2,t3,t4 for example2")
    p_build.add_argument("--spec", default=None, help="recipe JSON path for spec-file")
    p_build.add_argument("--out", default=None, help="output path (default stdout)")
    p_build.set_defaults(func=cmd_build)

    for name, fn, extra in (
        ("verify", cmd_verify, None),
        ("info", cmd_info, None),
        ("classify", cmd_classify, None),
        ("decompose", cmd_decompose, None),
        ("module-decompose", cmd_module_decompose, "component"),
    ):
        p = sub.add_parser(name)
        p.add_argument("path", help="algebra file")
        if extra:
            p.add_argument("--component", required=True, help="component label (S1, S2, ...)")
        p.set_defaults(func=fn)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except FormatError as exc:
        sys.stderr.write(f"format error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

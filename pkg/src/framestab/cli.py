"""Command-line front end: analyze Z4-codes, compute frame reports, run
automorphism searches, list the built-in catalog.

Inputs are catalog ids or paths to matrix text files. Long searches report
progress on stderr; results go to stdout, as text or JSON.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from . import autsearch, catalog, frames, gf2, permgrp, z4
from .errors import BudgetExceeded, FramestabError, ParseError

BUDGET_ENV = "FRAMESTAB_AUT_BUDGET"


def _default_budget() -> int | None:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else None


def _progress(label):
    def report(nodes):
        print(f"{label}: {nodes} nodes explored", file=sys.stderr, flush=True)

    return report


def _load_z4(ref: str) -> tuple[str, z4.Z4Code]:
    path = Path(ref)
    if path.exists():
        try:
            return path.name, z4.from_text(path.read_text())
        except ParseError as err:
            raise click.ClickException(f"{ref}: {err}") from err
    try:
        entry = catalog.get(ref)
    except KeyError as err:
        raise click.ClickException(str(err)) from err
    if entry.kind != "z4":
        raise click.ClickException(f"catalog entry {ref} is binary, expected a Z4 matrix")
    return entry.id, entry.code()


def _load_any(ref: str, force_binary: bool):
    path = Path(ref)
    if path.exists():
        text = path.read_text()
        try:
            if force_binary or not any(ch in "23" for ch in text):
                return path.name, gf2.from_text(text)
            return path.name, z4.from_text(text)
        except ParseError as err:
            raise click.ClickException(f"{ref}: {err}") from err
    try:
        entry = catalog.get(ref)
    except KeyError as err:
        raise click.ClickException(str(err)) from err
    code = entry.code()
    if force_binary and isinstance(code, z4.Z4Code):
        raise click.ClickException(f"catalog entry {ref} is a Z4 code")
    return entry.id, code


@click.group()
def main():
    """Structure codes and Virasoro frame stabilizers from Z4-codes."""


@main.command()
@click.option("--input", "ref", required=True, help="catalog id or matrix file")
@click.option("--json", "as_json", is_flag=True, help="emit JSON")
def analyze(ref, as_json):
    """Basic invariants of a Z4-code: size, shape, residue/torsion, flags."""
    name, code = _load_z4(ref)
    c0, c1 = z4.torsion(code), z4.residue(code)
    self_orth = z4.is_self_orthogonal(code)
    self_dual = z4.is_self_dual(code)
    type_ii = z4.is_type_ii(code)
    min_w = z4.min_euclidean_weight(code)
    info = {
        "id": name,
        "length": code.length,
        "size": str(code.size()),
        "shape": z4.group_shape(code),
        "c0": {"dim": c0.dim, "min_weight": gf2.min_weight(c0) if c0.dim else None},
        "c1": {"dim": c1.dim, "min_weight": gf2.min_weight(c1) if c1.dim else None},
        "self_orthogonal": self_orth,
        "self_dual": self_dual,
        "type_ii": type_ii,
        "min_euclidean_weight": min_w,
        "extremal": type_ii and min_w == 8 * (code.length // 24 + 1),
    }
    if as_json:
        click.echo(json.dumps(info, indent=2))
        return
    click.echo(f"code {name}: length {info['length']}, |C| = {info['size']}, shape {info['shape']}")
    click.echo(
        f"C0: [{code.length},{c0.dim}] min weight {info['c0']['min_weight']}; "
        f"C1: [{code.length},{c1.dim}] min weight {info['c1']['min_weight']}"
    )
    click.echo(
        f"self-orthogonal: {self_orth}; self-dual: {self_dual}; "
        f"type II: {type_ii}; min Euclidean weight: {min_w}; extremal: {info['extremal']}"
    )


@main.command()
@click.option("--input", "ref", required=True, help="catalog id or matrix file")
@click.option("--variant", type=click.Choice(["lattice", "orbifold"]), required=True)
@click.option("--enumerate-h/--no-enumerate-h", default=None,
              help="force or forbid direct enumeration of the subcode family")
@click.option("--aut-budget", type=int, default=None, help="search node budget")
@click.option("--json", "as_json", is_flag=True, help="emit JSON")
def frame(ref, variant, enumerate_h, aut_budget, as_json):
    """Full frame-stabilizer report for one code and frame variant."""
    name, code = _load_z4(ref)
    budget = aut_budget if aut_budget is not None else _default_budget()
    try:
        report = frames.frame_report(
            code,
            variant,
            code_id=name,
            enumerate_h=enumerate_h,
            budget=budget,
            progress=_progress(f"frame {name}"),
        )
    except (frames.VariantError, FramestabError) as err:
        raise click.ClickException(str(err)) from err
    if as_json:
        click.echo(json.dumps(report.to_json(), indent=2))
        return
    click.echo(f"frame report for {name} ({variant} variant), r = {report.r}")
    click.echo(
        f"dims: C {report.dim_c}, D {report.dim_d}, P {report.dim_p}; "
        f"holomorphic: {report.holomorphic}"
    )
    a, b = report.pointwise
    click.echo(f"pointwise stabilizer: 2^({a}+{b}) = {1 << (a + b)}")
    click.echo(
        f"|Aut(code)| = {report.aut_z4_total}, image in Sym_n = {report.aut_z4_bar}, "
        f"|Aut(C0)| = {report.aut_c0}"
    )
    extra = "" if report.h_count_by_index is None else (
        f" (index formula agrees: {report.h_count_by_index})"
    )
    click.echo(f"|H| = {report.h_count}{extra}")
    click.echo(f"|K| = {report.k_order}; |Aut(C):K| = {report.index_aut_c_k}")
    click.echo(f"stabilizer order = {report.stab_order} = {report.stab_factored}")


@main.command()
@click.option("--input", "ref", required=True, help="catalog id or matrix file")
@click.option("--binary", is_flag=True, help="treat the input as a binary code")
@click.option("--aut-budget", type=int, default=None, help="search node budget")
@click.option("--json", "as_json", is_flag=True, help="emit JSON")
def aut(ref, binary, aut_budget, as_json):
    """Automorphism group (binary code in Sym_n, or Z4-code as kernel/image)."""
    name, code = _load_any(ref, binary)
    budget = aut_budget if aut_budget is not None else _default_budget()
    try:
        if isinstance(code, z4.Z4Code):
            kernel, image = autsearch.aut_z4(
                code, budget=budget, progress=_progress(f"aut {name}")
            )
            total = kernel * image.order()
            payload = {
                "id": name,
                "kind": "z4",
                "kernel_order": str(kernel),
                "image_order": str(image.order()),
                "total_order": str(total),
                "image_generators": [permgrp.images_1indexed(g) for g in image.generators],
            }
            text = (
                f"|Aut({name})| = {total} "
                f"(sign kernel {kernel}, image in Sym_{code.length} of order {image.order()})"
            )
            gens = image
        else:
            group = autsearch.aut_binary(
                code, budget=budget, progress=_progress(f"aut {name}")
            )
            payload = {
                "id": name,
                "kind": "binary",
                "order": str(group.order()),
                "generators": [permgrp.images_1indexed(g) for g in group.generators],
            }
            text = f"|Aut({name})| = {group.order()}"
            gens = group
    except BudgetExceeded as err:
        partial = err.partial.order() if err.partial is not None else 1
        raise click.ClickException(
            f"search budget exceeded; partial group order {partial} is a lower bound only"
        ) from err
    if as_json:
        click.echo(json.dumps(payload, indent=2))
        return
    click.echo(text)
    for g in gens.generators:
        click.echo(f"  {permgrp.cycle_string(g)}")


@main.group("catalog")
def catalog_cmd():
    """Built-in generator matrices."""


@catalog_cmd.command("list")
def catalog_list():
    for entry_id in catalog.list_ids():
        click.echo(entry_id)


@catalog_cmd.command("show")
@click.argument("entry_id")
def catalog_show(entry_id):
    try:
        entry = catalog.get(entry_id)
    except KeyError as err:
        raise click.ClickException(str(err)) from err
    click.echo(f"# {entry.id} ({entry.kind}): {entry.provenance}")
    for line in entry.matrix.strip().splitlines():
        click.echo(line.strip())


if __name__ == "__main__":
    main()

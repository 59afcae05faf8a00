"""Command-line interface: ``eqgeom <group> <command> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad usage.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import automorphisms as aut
from . import codes, geometry, johnson, qary, verify
from .errors import ClassificationError, GeometryError, InconsistencyError
from .f2core import format_set, make_special_map, parse_set, support_of


def _emit(obj, fmt: str, output: str | None = None) -> None:
    if fmt == "json":
        text = json.dumps(obj, indent=2)
    elif isinstance(obj, dict):
        text = "\n".join(f"{k}: {v}" for k, v in obj.items())
    else:
        text = str(obj)
    if output:
        Path(output).write_text(text + "\n")
    else:
        click.echo(text)


def _guard(func):
    """Turn library argument errors into usage errors (exit 2) and inconsistencies into exit 1."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InconsistencyError as exc:
            click.echo(f"verification failure: {exc}", err=True)
            sys.exit(1)
        except (GeometryError, ValueError) as exc:
            raise click.UsageError(str(exc)) from exc

    return wrapper


_fmt = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
_nm = [click.option("--n", "n", type=int, required=True), click.option("--m", "m", type=int, required=True)]


def _with_nm(func):
    for opt in reversed(_nm):
        func = opt(func)
    return func


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Point-line geometries of binary equidistant codes."""


# --- geometry -------------------------------------------------------------------


@main.group("geometry")
def geometry_cmd() -> None:
    """Build the weight-2m geometry and report on it."""


@geometry_cmd.command("stats")
@_with_nm
@_fmt
@_guard
def geometry_stats(n: int, m: int, fmt: str) -> None:
    _emit(geometry.build_geometry(n, m).stats(), fmt)


@geometry_cmd.command("lines")
@_with_nm
@_fmt
@_guard
def geometry_lines(n: int, m: int, fmt: str) -> None:
    G = geometry.build_geometry(n, m)
    rows = [[sorted(G.support(p)) for p in ln] for ln in G.lines]
    if fmt == "json":
        _emit(rows, fmt)
    else:
        _emit("\n".join(" ".join(format_set(s) for s in ln) for ln in rows), fmt)


@geometry_cmd.command("cliques")
@_with_nm
@_fmt
@_guard
def geometry_cliques(n: int, m: int, fmt: str) -> None:
    G = geometry.build_geometry(n, m)
    cl = geometry.maximal_cliques(G)
    if fmt == "json":
        _emit([{"points": [sorted(G.support(p)) for p in c.clique], "kind": c.kind, "design_flag": c.design_flag}
               for c in cl], fmt)
        return
    summary: dict[tuple[int, str], int] = {}
    for c in cl:
        key = (len(c.clique), c.kind)
        summary[key] = summary.get(key, 0) + 1
    lines = [f"maximal cliques: {len(cl)}"]
    lines += [f"size {size} {kind}: {count}" for (size, kind), count in sorted(summary.items())]
    _emit("\n".join(lines), fmt)


@geometry_cmd.command("export")
@_with_nm
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@_guard
def geometry_export(n: int, m: int, fmt: str, output: str | None) -> None:
    G = geometry.build_geometry(n, m)
    if fmt == "json":
        _emit(G.to_json(), "json", output)
    else:
        _emit(G.to_dot(), "text", output)


# --- codes ----------------------------------------------------------------------


@main.group("codes")
def codes_cmd() -> None:
    """Equidistant binary codes."""


@codes_cmd.command("decompose")
@click.option("--matrix", help="generator rows as 0/1 strings separated by commas")
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), help="file with one row per line")
@_fmt
@_guard
def codes_decompose(matrix: str | None, path: str | None, fmt: str) -> None:
    if (matrix is None) == (path is None):
        raise click.UsageError("give exactly one of --matrix or --file")
    text = Path(path).read_text() if path else "\n".join(matrix.split(","))
    prof = codes.bonis_decompose(codes.Code.from_text(text))
    _emit(prof.to_json(), fmt)


@codes_cmd.command("maxdim")
@click.option("--n", "n", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@_fmt
@_guard
def codes_maxdim(n: int, t: int, fmt: str) -> None:
    _emit({"n": n, "t": t, "max_dim": codes.max_equidistant_dim(n, t)}, fmt)


# --- automorphisms --------------------------------------------------------------


@main.group("aut")
def aut_cmd() -> None:
    """Automorphism groups."""


def _describe(G, g) -> dict:
    """Single-exceptional decomposition, else the two-factor word."""
    try:
        return aut.classify_automorphism(G, g).to_json()
    except ClassificationError:
        perm, tags = aut.decompose_exceptional_word(G, g)
        return {"perm": list(perm), "exceptional": None, "word": [t.to_json() for t in tags]}


@aut_cmd.command("group")
@_with_nm
@click.option("--classify", "do_classify", is_flag=True, help="also classify every element (order <= 10^5)")
@_fmt
@_guard
def aut_group(n: int, m: int, do_classify: bool, fmt: str) -> None:
    G = geometry.build_geometry(n, m)
    A = aut.automorphism_group(G)
    if do_classify and A.order > 100_000:
        raise click.UsageError(f"group order {A.order} is too large to list; use 'verify theorem-aut'")
    report = A.to_json()
    report["generators"] = [{"point_images": list(g), **_describe(G, g)} for g in A.generators]
    failures = 0
    if do_classify:
        rows = []
        for g in A.elements():
            try:
                rows.append(aut.classify_automorphism(G, g).to_json())
            except ClassificationError:
                rows.append({"perm": None, "exceptional": None})
                failures += 1
        report["classification"] = rows
    if fmt == "json":
        _emit(report, fmt)
    else:
        _emit({"order": A.order, "num_generators": len(A.generators), "orbit_sizes": A.orbit_sizes,
               **({"classification_failures": failures} if do_classify else {})}, fmt)
    if failures:
        sys.exit(1)


@aut_cmd.command("classify")
@_with_nm
@click.option("--perm", default=None, help="coordinate images, e.g. 2,1,3,4,5,6,7")
@click.option("--map", "special", default=None, help="exceptional map applied first, e.g. l:1 or s:1,2 or s_prime:1,2")
@_fmt
@_guard
def aut_classify(n: int, m: int, perm: str | None, special: str | None, fmt: str) -> None:
    """Classify induced(perm) o induced(map)."""
    G = geometry.build_geometry(n, m)
    f = tuple(range(len(G.points)))
    if special:
        kind, _, idx = special.partition(":")
        M = make_special_map(kind, [int(x) for x in idx.split(",") if x], n)
        induced = aut.induced_point_map(M, G)
        if induced is None:
            raise click.UsageError(f"{special} does not preserve the weight-{2 * m} points")
        f = induced.images
    if perm:
        f = aut.compose(aut.permutation_point_map(G, [int(x) for x in perm.split(",")]), f)
    dec = aut.classify_automorphism(G, f)
    _emit(dec.to_json() if fmt == "json" else str(dec), fmt)


@aut_cmd.command("gamma-group")
@_with_nm
@_fmt
@_guard
def aut_gamma_group(n: int, m: int, fmt: str) -> None:
    """Exploratory: automorphisms of the collinearity graph."""
    G = geometry.build_geometry(n, m)
    A = aut.gamma_automorphism_group(G)
    B = aut.automorphism_group(G)
    _emit({"order": A.order, "geometry_order": B.order, "equal": A.order == B.order}, fmt)


# --- johnson --------------------------------------------------------------------


@main.group("johnson")
def johnson_cmd() -> None:
    """Generalised Johnson graphs J(n, t, i)."""


def _nti(func):
    for name in ("i", "t", "n"):
        func = click.option(f"--{name}", name, type=int, required=True)(func)
    return func


@johnson_cmd.command("build")
@_nti
@click.option("--format", "fmt", type=click.Choice(["text", "json", "dot"]), default="text", show_default=True)
@_guard
def johnson_build(n: int, t: int, i: int, fmt: str) -> None:
    J = johnson.build_johnson(n, t, i)
    if fmt == "dot":
        _emit(J.to_dot(), "text")
    else:
        _emit(J.to_json(), fmt)


@johnson_cmd.command("path")
@_nti
@click.option("--from", "src", required=True, help="start vertex, e.g. {1,2,3}")
@click.option("--to", "dst", required=True, help="end vertex")
@_fmt
@_guard
def johnson_path(n: int, t: int, i: int, src: str, dst: str, fmt: str) -> None:
    J = johnson.build_johnson(n, t, i)
    path = johnson.connectivity_path(J, parse_set(src), parse_set(dst))
    if fmt == "json":
        _emit([sorted(s) for s in path], fmt)
    else:
        _emit(" -> ".join(format_set(s) for s in path), fmt)


# --- q-ary ----------------------------------------------------------------------


@main.group("qary")
def qary_cmd() -> None:
    """Weight-t projective points over GF(q)."""


@qary_cmd.command("stats")
@click.option("--q", "q", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@_fmt
@_guard
def qary_stats(q: int, k: int, fmt: str) -> None:
    _emit(qary.build_qgeometry(q, k).to_json(), fmt)


@qary_cmd.command("example")
@_fmt
@_guard
def qary_example(fmt: str) -> None:
    """The q = 5 pair with no common neighbour."""
    G = qary.build_qgeometry(5, 2)
    P, P2 = (0, 1, 1, 1, 1, 1), (0, 1, 1, 1, 2, 2)
    conn, diam = qary.qary_connectivity_and_diameter(G)
    _emit({
        "P": list(P),
        "P_prime": list(P2),
        "collinear": qary.qary_collinear(G, P, P2),
        "common_neighbors": len(qary.qary_common_neighbors(G, P, P2)),
        "connected": conn,
        "diameter": diam,
    }, fmt)


# --- verify ---------------------------------------------------------------------


@main.command("verify")
@click.argument("tag", type=click.Choice(["all", *verify.CHECKS]))
@click.option("--max-n", type=int, default=12, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--verbose", "-v", is_flag=True, help="print every detail line")
@_fmt
def verify_cmd(tag: str, max_n: int, seed: int, verbose: bool, fmt: str) -> None:
    """Run one named check, or all of them."""
    if max_n < 3:
        raise click.UsageError("--max-n must be at least 3")
    tags = list(verify.CHECKS) if tag == "all" else [tag]
    results = [verify.run_check(t, max_n, seed) for t in tags]
    if fmt == "json":
        payload = [r.to_json() for r in results]
        for row in payload:
            row.pop("seconds")
        _emit(payload, fmt)
    else:
        for r in results:
            click.echo(f"{'PASS' if r.passed else 'FAIL'}  {r.tag}")
            for line in r.details:
                if verbose or not line.startswith("ok"):
                    click.echo(f"      {line}")
    if not all(r.passed for r in results):
        sys.exit(1)


if __name__ == "__main__":  # pragma: no cover
    main()

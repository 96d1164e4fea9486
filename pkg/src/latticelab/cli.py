"""Command-line interface: ``latticelab <gen|classify|dynamics|export|verify>``."""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Callable

import click

from . import dot, io
from .classify import classify as classify_lattice
from .dynamics import (
    orbits,
    pop_down,
    pop_polynomial,
    pop_up,
    popping_pairs,
    shard_pop,
    shard_row,
)
from .errors import (
    CycleDetected,
    LatticeLabError,
    NotALattice,
    NotPaired,
    NotSemidistrim,
    NotUniquelyPaired,
    SizeLimitExceeded,
    UnknownId,
)
from .generators import (
    FIGURE_IDS,
    CoxeterElementSpec,
    boolean,
    cambrian,
    chain,
    figure_lattice,
    random_lattice,
    root_poset,
    tamari,
    weak_order,
)
from .lattice import DEFAULT_SIZE_CAP, Lattice, order_ideal_lattice

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NOT_LATTICE = 3
EXIT_NOT_SEMIDISTRIM = 4
EXIT_NOT_UNIQUELY_PAIRED = 5


class Settings:
    def __init__(self, as_json: bool, max_size: int | None, seed: int, cap: int) -> None:
        self.as_json = as_json
        self.max_size = max_size
        self.seed = seed
        self.cap = cap


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _run(fn: Callable[[], Any]) -> Any:
    """Call ``fn`` and translate library errors into exit codes."""
    try:
        return fn()
    except (NotALattice, CycleDetected) as exc:
        witness = getattr(exc, "witness", None) or getattr(exc, "cycle", None)
        _fail(f"{exc} (witness: {witness})", EXIT_NOT_LATTICE)
    except NotSemidistrim as exc:
        _fail(str(exc), EXIT_NOT_SEMIDISTRIM)
    except (NotUniquelyPaired, NotPaired) as exc:
        _fail(str(exc), EXIT_NOT_UNIQUELY_PAIRED)
    except (UnknownId, SizeLimitExceeded, io.DocumentError, ValueError) as exc:
        _fail(str(exc), EXIT_USAGE)
    except LatticeLabError as exc:
        _fail(str(exc), EXIT_CHECK_FAILED)


def _load(source: str) -> Lattice:
    """A lattice from a JSON document path, ``-`` for stdin, or a figure id."""
    if source == "-":
        return io.loads(sys.stdin.read())
    path = Path(source)
    if path.exists():
        return io.load(path)
    if source in FIGURE_IDS:
        return figure_lattice(source)
    raise UnknownId(f"{source!r} is neither a file nor a figure id")


def _emit(settings: Settings, payload: Any, text: str) -> None:
    if settings.as_json:
        click.echo(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        click.echo(text)


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--max-size", type=click.IntRange(min=1), default=None, help="Largest lattice the verify suites build.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for random lattices.")
@click.option("--cap", type=click.IntRange(min=1), default=DEFAULT_SIZE_CAP, show_default=True,
              help="Size cap for generated families.")
@click.pass_context
def main(ctx: click.Context, as_json: bool, max_size: int | None, seed: int, cap: int) -> None:
    """Finite lattice toolkit: classes, pairings, rowmotion and pop-stack dynamics."""
    ctx.obj = Settings(as_json, max_size, seed, cap)


# gen

FAMILIES = ("figure", "chain", "boolean", "weak-order", "tamari", "cambrian", "root-ideals", "random")


@main.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.option("--id", "fid", help="Figure id (family figure).")
@click.option("--type", "kind", type=click.Choice(["A", "B", "I2"], case_sensitive=False), default="A")
@click.option("--rank", type=click.IntRange(min=1), help="Rank, or m for I2(m).")
@click.option("--n", "n", type=click.IntRange(min=0), help="Size parameter for chain, boolean, tamari.")
@click.option("--preset", type=click.Choice(["linear", "bipartite"]), default="linear")
@click.option("--elements", type=click.IntRange(min=2), default=12, show_default=True,
              help="Upper bound on size for random lattices.")
@click.option("-o", "--out", type=click.Path(dir_okay=False, writable=True), help="Output file (default stdout).")
@click.pass_obj
def gen(settings: Settings, family: str, fid: str | None, kind: str, rank: int | None,
        n: int | None, preset: str, elements: int, out: str | None) -> None:
    """Write a lattice document for a named family."""
    kind = kind.upper()

    def need(value: int | None, flag: str) -> int:
        if value is None:
            raise click.UsageError(f"family {family} needs {flag}")
        return value

    def build() -> tuple[Lattice, str]:
        cap = settings.cap
        if family == "figure":
            if fid is None:
                raise click.UsageError("family figure needs --id")
            return figure_lattice(fid), fid
        if family == "chain":
            k = need(n, "--n")
            return chain(k, cap), f"chain({k})"
        if family == "boolean":
            k = need(n, "--n")
            return boolean(k, cap), f"boolean({k})"
        if family == "weak-order":
            r = need(rank, "--rank")
            return weak_order(kind, r, cap), f"weak({kind}{r})"
        if family == "tamari":
            k = need(n, "--n")
            return tamari(k, cap), f"tamari({k})"
        if family == "cambrian":
            r = need(rank, "--rank")
            spec = getattr(CoxeterElementSpec, preset)(kind, r)
            return cambrian(spec, cap), f"cambrian({kind}{r},{preset})"
        if family == "root-ideals":
            r = need(rank, "--rank")
            return order_ideal_lattice(root_poset(kind, r), cap), f"J({kind}{r})"
        return random_lattice(elements, settings.seed), f"random({settings.seed})"

    L, name = _run(build)
    text = io.dumps(L, name)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


# classify


@main.command()
@click.argument("source")
@click.option("--certificate", is_flag=True, help="Include a dismantling certificate.")
@click.pass_obj
def classify(settings: Settings, source: str, certificate: bool) -> None:
    """Decide every lattice class for SOURCE (document path, '-' or figure id)."""

    def run() -> dict:
        L = _load(source)
        return classify_lattice(L, certificate=certificate).to_dict()

    report = _run(run)
    text = "\n".join(
        f"{k}: {v}" for k, v in report.items() if k != "witnesses"
    )
    if report["witnesses"]:
        text += "\nwitnesses: " + json.dumps(report["witnesses"])
    _emit(settings, report, text)


# dynamics

DYNAMICS = ("row-orbits", "pop", "pop-polynomial", "popping-pairs", "shards")


@main.command()
@click.argument("what", type=click.Choice(DYNAMICS))
@click.argument("source")
@click.pass_obj
def dynamics(settings: Settings, what: str, source: str) -> None:
    """Rowmotion orbits, pop-stack maps, the pop polynomial, popping pairs or shard sets."""

    def run() -> tuple[Any, str]:
        L = _load(source)
        nm = L.name
        if what == "row-orbits":
            dec = orbits(L, "row")
            cycles = [[nm(x) for x in c] for c in dec.cycles]
            text = "\n".join(" -> ".join(c) for c in cycles)
            return {"orbits": cycles, "lengths": [len(c) for c in cycles]}, text
        if what == "pop":
            rows = [{"element": nm(x), "pop_down": nm(pop_down(L, x)), "pop_up": nm(pop_up(L, x))}
                    for x in range(L.n)]
            text = "\n".join(f"{r['element']}: down {r['pop_down']}, up {r['pop_up']}" for r in rows)
            return rows, text
        if what == "pop-polynomial":
            p = pop_polynomial(L)
            return {"polynomial": str(p), "coefficients": [list(t) for t in p.ascending()],
                    "value_at_1": p(1)}, str(p)
        if what == "popping-pairs":
            pairs = [[nm(x), nm(y)] for x, y in popping_pairs(L)]
            return {"pairs": pairs, "count": len(pairs)}, "\n".join(f"{a} {b}" for a, b in pairs)
        rows = [{"element": nm(b), "pop": sorted(nm(j) for j in shard_pop(L, b)),
                 "row": sorted(nm(j) for j in shard_row(L, b))} for b in range(L.n)]
        text = "\n".join(f"{r['element']}: pop {{{','.join(r['pop'])}}} row {{{','.join(r['row'])}}}"
                         for r in rows)
        return rows, text

    payload, text = _run(run)
    _emit(settings, payload, text)


# export


@main.command()
@click.argument("source")
@click.option("--format", "fmt", type=click.Choice(["dot-hasse", "dot-galois"]), default="dot-hasse",
              show_default=True)
@click.pass_obj
def export(settings: Settings, source: str, fmt: str) -> None:
    """Emit a DOT graph for SOURCE."""

    def run() -> str:
        L = _load(source)
        return dot.hasse_dot(L) if fmt == "dot-hasse" else dot.galois_dot(L)

    text = _run(run)
    if settings.as_json:
        click.echo(json.dumps({"format": fmt, "dot": text}, indent=2))
    else:
        click.echo(text, nl=False)


# verify


@main.command()
@click.argument("suite", type=click.Choice(["theorems", "tables", "all"]))
@click.option("--lattice", "sources", multiple=True,
              help="Restrict the theorem suite to these sources (paths or figure ids).")
@click.option("--random-count", type=click.IntRange(min=0), default=200, show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes (default: all CPUs).")
@click.option("--verbose", is_flag=True, help="List every check, not only failures.")
@click.pass_obj
def verify(settings: Settings, suite: str, sources: tuple[str, ...], random_count: int,
           jobs: int | None, verbose: bool) -> None:
    """Run the theorem suite, the table suite, or both; exit 1 on any failure."""
    from . import verify as v

    def run() -> list:
        reports = []
        if suite in ("theorems", "all"):
            if sources:
                entries = [v.Entry(s, "figure", (s,)) if s in FIGURE_IDS else v.Entry(s, "file", (s,))
                           for s in sources]
            else:
                entries = v.theorem_corpus(settings.max_size or v.DEFAULT_CORPUS_MAX, settings.seed,
                                           random_count)
            reports.append(("theorems", v.verify_theorems(entries, settings.seed, jobs=jobs)))
        if suite in ("tables", "all"):
            reports.append(("tables", v.verify_tables(max_size=settings.max_size or 6000, jobs=jobs)))
        return reports

    reports = _run(run)
    ok = all(r.ok for _, r in reports)
    if settings.as_json:
        click.echo(json.dumps({name: r.to_dict() for name, r in reports}, indent=2, default=str))
    else:
        for name, r in reports:
            click.echo(f"[{name}] {r.summary()}")
            if verbose:
                for res in r.results:
                    status = {True: "pass", False: "FAIL", None: "skip"}[res.passed]
                    extra = f" ({res.reason})" if res.reason else ""
                    click.echo(f"  {status} {res.check} {res.lattice}{extra}")
    sys.exit(0 if ok else EXIT_CHECK_FAILED)


if __name__ == "__main__":
    main()

"""Batch front end: tables, verification suites, integrality reports.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 internal cross-check failure.  ``ADETAU_THREADS`` sets the default
parallelism for the per-genus methods; output is byte-identical across
parallelism degrees.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import __version__, invariants, verify
from .backend import BACKEND, rat_to_str

EXIT_VERIFY_FAILED = 1
EXIT_INTERNAL_MISMATCH = 3


def _default_jobs() -> int:
    env = os.environ.get("ADETAU_THREADS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise click.UsageError(f"ADETAU_THREADS must be an integer, got {env!r}")
    return 1


@click.group()
@click.version_option(__version__)
def main():
    """Exact one-point intersection numbers of ADE type."""


@main.command()
@click.option("--family", type=click.Choice(["a", "d", "e6"]), required=True)
@click.option("--r", "r_opt", type=int, default=None, help="Coxeter number (A family).")
@click.option("--l", "l_opt", type=int, default=None, help="Rank (D family, l >= 4).")
@click.option("--gmax", type=int, required=True)
@click.option(
    "--method",
    type=click.Choice(["auto", "recursion", "closed", "genfunc", "hyper", "product", "psido", "ode"]),
    default="auto",
)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None)
@click.option("--verify", "do_verify", is_flag=True, help="Cross-check against a second method.")
@click.option("--jobs", type=int, default=None, help="Parallelism for per-genus methods.")
def tau(family, r_opt, l_opt, gmax, method, fmt, output, do_verify, jobs):
    """Write the invariant table for g = 0..GMAX."""
    if gmax < 0:
        raise click.UsageError("--gmax must be >= 0")
    if family == "a":
        if r_opt is None:
            raise click.UsageError("family a needs --r")
        if l_opt is not None:
            raise click.UsageError("family a takes --r, not --l")
        if r_opt < 2:
            raise click.UsageError("family a needs r >= 2")
        rank = r_opt
    elif family == "d":
        if l_opt is None:
            raise click.UsageError("family d needs --l")
        if r_opt is not None:
            raise click.UsageError("family d takes --l, not --r")
        if l_opt < 4:
            raise click.UsageError("family d needs l >= 4")
        rank = l_opt
    else:
        if r_opt is not None or l_opt is not None:
            raise click.UsageError("family e6 takes neither --r nor --l")
        rank = 6
    fam = {"a": "A", "d": "D", "e6": "E6"}[family]
    if method == "auto":
        method = invariants.default_method(fam, rank if fam == "A" else 0)
        if fam == "E6":
            method = "ode"
    if fam == "E6" and method not in ("ode", "genfunc"):
        raise click.UsageError("the E6 table is produced by its differential-equation branches")
    jobs = jobs if jobs is not None else _default_jobs()
    try:
        records = invariants.compute_table(fam, rank, gmax, method, jobs=jobs)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if do_verify:
        alt = {"recursion": "closed", "closed": "genfunc", "genfunc": "closed",
               "hyper": "genfunc", "product": "genfunc", "psido": "closed", "ode": "ode"}[method]
        if alt != method:
            check = invariants.compute_table(fam, rank, gmax, alt, jobs=jobs)
            for a, b in zip(records, check):
                if a.value != b.value:
                    click.echo(
                        f"internal cross-check failed at g={a.g}: "
                        f"{method}={rat_to_str(a.value)} vs {alt}={rat_to_str(b.value)}",
                        err=True,
                    )
                    sys.exit(EXIT_INTERNAL_MISMATCH)
    text = _render_records(records, fmt, {"family": family, "rank": rank, "gmax": gmax, "method": method})
    if output:
        with open(output, "w") as f:
            f.write(text)
    else:
        click.echo(text, nl=False)


def _render_records(records, fmt, config) -> str:
    if fmt == "csv":
        lines = ["family,r,g,method,value"]
        lines += [rec.csv_row() for rec in records]
        return "\n".join(lines) + "\n"
    payload = {
        "meta": {"version": __version__, "backend": BACKEND, "config": config},
        "records": [rec.json_obj() for rec in records],
    }
    return json.dumps(payload, indent=1) + "\n"


@main.command("verify")
@click.argument("suite", type=click.Choice(sorted(verify.SUITES)))
@click.option("--gmax", type=int, default=None, help="Range override for cross-method/integrality.")
def verify_cmd(suite, gmax):
    """Run a named verification suite; exits 1 on the first failure."""
    fn = verify.SUITES[suite]
    if suite == "cross-method":
        results = fn(gmax or 100, 300)
    elif suite == "integrality":
        results = fn(gmax or 300, min(gmax or 200, 200))
    else:
        results = fn()
    failed = False
    for res in results:
        click.echo(res.line())
        failed = failed or not res.ok
    if failed:
        sys.exit(EXIT_VERIFY_FAILED)


@main.command("report-integrality")
@click.option("--gmax", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None)
def report_integrality(gmax, fmt, output):
    """Emit a_g, b_g, c_g with factored denominators; flag primes beyond {2,3,5}."""
    from . import integrality, oderec

    if gmax < 0:
        raise click.UsageError("--gmax must be >= 0")
    taus = oderec.tau_a4_recursion(gmax)
    rows = []
    flagged = 0
    for g in range(gmax + 1):
        a, b, c = integrality.normalize_abc(g, taus[g])
        row = {"g": g, "tau": _factored(taus[g])}
        for key, val in (("a", a), ("b", b), ("c", c)):
            desc = _factored(val)
            row[key] = desc
            if desc["cofactor"] != 1:
                flagged += 1
                row.setdefault("flags", []).append(key)
        rows.append(row)
    if fmt == "csv":
        lines = ["g,value,num,den_pow2,den_pow3,den_pow5,den_cofactor,flagged"]
        for row in rows:
            for key in ("tau", "a", "b", "c"):
                d = row[key]
                lines.append(
                    f"{row['g']},{key},{d['num']},{d['pow2']},{d['pow3']},{d['pow5']},"
                    f"{d['cofactor']},{'yes' if key in row.get('flags', []) else 'no'}"
                )
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps({"meta": {"gmax": gmax, "flagged": flagged}, "rows": rows}, indent=1) + "\n"
    if output:
        with open(output, "w") as f:
            f.write(text)
    else:
        click.echo(text, nl=False)
    if flagged:
        click.echo(f"{flagged} renormalized values have denominator primes outside {{2,3,5}}", err=True)
        sys.exit(EXIT_VERIFY_FAILED)


def _factored(q) -> dict:
    den = int(q.denominator)
    powers = {}
    for p in (2, 3, 5):
        k = 0
        while den % p == 0:
            den //= p
            k += 1
        powers[p] = k
    return {
        "num": str(q.numerator),
        "pow2": powers[2],
        "pow3": powers[3],
        "pow5": powers[5],
        "cofactor": den,
    }


if __name__ == "__main__":
    main()

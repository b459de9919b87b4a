"""Command-line interface: counting, S tables, parity reports, traces, verification.

Exit codes: 0 on success, 1 when `verify` finds a counterexample, 2 on
usage errors.
"""

from __future__ import annotations

import csv
import io
import json

import click

from . import __version__, parity, partitions, svalues, verify

FORMAT_CHOICE = click.Choice(["text", "csv", "json"])


def format_option(command):
    return click.option("--format", "fmt", type=FORMAT_CHOICE, default="text",
                        show_default=True, help="Output format.")(command)


def _emit_json(command: str, key: str, payload) -> None:
    document = {"version": __version__, "command": command, key: payload}
    click.echo(json.dumps(document, indent=2))


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if value is None else value for value in row])
    click.echo(buffer.getvalue(), nl=False)


@click.group()
@click.version_option(version=__version__, prog_name="smallpart")
def main():
    """Exact partition counts split by the parity of the smallest part.

    The parity difference P_O(n) - P_E(n) is computed as the convolution
    of the signed distinct-rank counts S(i) with the partition numbers
    p(n - i); `verify` cross-checks every identity against brute-force
    enumeration.
    """


@main.command("p")
@click.argument("n", type=click.IntRange(min=0))
@format_option
def cmd_p(n: int, fmt: str):
    """Print the number of partitions of N, exactly."""
    value = partitions.build_count_table(n)[n]
    if fmt == "text":
        click.echo(str(value))
    elif fmt == "csv":
        _emit_csv(["n", "p"], [[n, value]])
    else:
        _emit_json("p", "report", {"n": n, "p": str(value)})


def _stable_row(i: int) -> dict:
    """One S-table row; Pell columns are filled only when a sign search was required.

    A factor p = 1 (mod 24) needs its sign only at odd exponents: at even
    exponents both sign branches give the same value e+1.
    """
    m = 24 * i + 1
    witness = None
    for p, e in svalues.signed_factorize(m).factors:
        if p % 24 == 1 and e % 2 == 1:
            witness = svalues.pell_witness(p)
            break
    return {
        "i": i,
        "m": m,
        "y0": witness.y0 if witness else None,
        "x0": witness.x0 if witness else None,
        "residue": witness.residue_mod_12 if witness else None,
        "s": svalues.s_of(i),
    }


@main.command("stable")
@click.option("--max", "max_i", type=click.IntRange(min=1), default=37,
              show_default=True, help="Largest i to tabulate.")
@format_option
def cmd_stable(max_i: int, fmt: str):
    """Tabulate S(i) for 1 <= i <= MAX with any Pell sign-search witnesses."""
    rows = [_stable_row(i) for i in range(1, max_i + 1)]
    if fmt == "csv":
        _emit_csv(["i", "m", "y0", "x0", "residue", "s"],
                  [[r["i"], r["m"], r["y0"], r["x0"], r["residue"], r["s"]] for r in rows])
    elif fmt == "json":
        json_rows = [dict(r, s=str(r["s"])) for r in rows]
        _emit_json("stable", "rows", json_rows)
    else:
        header = ["i", "m", "y0", "x0", "residue", "S"]
        cells = [[str(r["i"]), str(r["m"]),
                  "-" if r["y0"] is None else str(r["y0"]),
                  "-" if r["x0"] is None else str(r["x0"]),
                  "-" if r["residue"] is None else str(r["residue"]),
                  str(r["s"])] for r in rows]
        widths = [max(len(header[c]), max(len(row[c]) for row in cells)) for c in range(len(header))]
        click.echo("  ".join(header[c].rjust(widths[c]) for c in range(len(header))))
        for row in cells:
            click.echo("  ".join(row[c].rjust(widths[c]) for c in range(len(header))))
        click.echo("residue = (x0 + 3*y0) mod 12, reduced to 0..11 "
                   "(7 and 11 stand for -5 and -1).")


@main.command("parity")
@click.argument("n", type=click.IntRange(min=1))
@format_option
def cmd_parity(n: int, fmt: str):
    """Print p(N), P_O - P_E, and the counts of partitions of N by smallest-part parity."""
    report = parity.parity_counts(n, partitions.build_count_table(n))
    if fmt == "text":
        click.echo(f"n = {report.n}")
        click.echo(f"p(n) = {report.p_n}")
        click.echo(f"P_O - P_E = {report.diff}")
        click.echo(f"P_O = {report.p_odd}")
        click.echo(f"P_E = {report.p_even}")
    elif fmt == "csv":
        _emit_csv(["n", "p", "diff", "p_odd", "p_even"],
                  [[report.n, report.p_n, report.diff, report.p_odd, report.p_even]])
    else:
        _emit_json("parity", "report", {
            "n": report.n,
            "p": str(report.p_n),
            "diff": str(report.diff),
            "p_odd": str(report.p_odd),
            "p_even": str(report.p_even),
        })


def _describe_factor(p: int, e: int) -> list[str]:
    """Lines explaining the value at one signed prime power."""
    residue = p % 24
    value = svalues.t_prime_power(p, e)
    head = f"factor ({p})^{e}: residue {residue} (mod 24)"
    if residue == 1:
        witness = svalues.pell_witness(p)
        lines = [f"{head} -> sign search in x^2 - 6*y^2 = {p}"]
        for y in range(witness.y0 + 1):
            candidate = 6 * y * y + p
            if y < witness.y0:
                lines.append(f"  y={y}: 6*{y}^2 + ({p}) = {candidate}, not a square")
            else:
                lines.append(f"  y={y}: 6*{y}^2 + ({p}) = {candidate} = {witness.x0}^2")
        sign_word = "positive" if witness.sign > 0 else "negative"
        lines.append(f"  x0 + 3*y0 = {witness.x0} + {3 * witness.y0} = "
                     f"{witness.x0 + 3 * witness.y0} = {witness.residue_mod_12} (mod 12) "
                     f"-> {sign_word}")
        lines.append(f"  value {value}")
        return lines
    if e % 2 == 1:
        return [f"{head}, odd exponent -> 0"]
    if residue == 7:
        return [f"{head}, even exponent -> (-1)^({e}/2) = {value}"]
    return [f"{head}, even exponent -> 1"]


@main.command("trace-s")
@click.argument("i", type=click.IntRange(min=1))
def cmd_trace_s(i: int):
    """Show the full derivation of S(I): factorization, case analysis, Pell search."""
    m = 24 * i + 1
    click.echo(f"S({i}): m = 24*{i} + 1 = {m}")
    fact = svalues.signed_factorize(m)
    if not fact.factors:
        click.echo("m = 1 has the empty factorization -> S = 1")
        return
    pretty = " * ".join(f"({p})^{e}" if e > 1 else f"({p})" for p, e in fact.factors)
    click.echo(f"signed factorization: {m} = {pretty}")
    for p, e in fact.factors:
        for line in _describe_factor(p, e):
            click.echo(line)
    click.echo(f"S({i}) = {svalues.s_of(i)}")


@main.command("verify")
@click.option("--max-n", type=click.IntRange(min=1), default=20, show_default=True,
              help="Bound for identities quantified over n.")
@click.option("--max-i", type=click.IntRange(min=1), default=20, show_default=True,
              help="Bound for identities quantified over i.")
def cmd_verify(max_n: int, max_i: int):
    """Run every oracle-equivalence and invariant suite; exit 1 on any counterexample."""
    results = verify.run_all(max_n=max_n, max_i=max_i)
    for result in results:
        status = "PASS" if result.passed else f"FAIL: {result.detail}"
        click.echo(f"{result.name} ({result.checks} checks): {status}")
    failed = [r for r in results if not r.passed]
    if failed:
        click.echo(f"{len(failed)} of {len(results)} suites failed")
        raise SystemExit(1)
    click.echo(f"all {len(results)} suites passed")


if __name__ == "__main__":
    main()

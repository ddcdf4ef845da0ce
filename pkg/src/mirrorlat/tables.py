"""Regenerate the eigenvalue, relative-exponent and ball-quotient tables."""

from __future__ import annotations

from fractions import Fraction

from .parallel import pmap
from .polys import format_rational
from .residues import e_table
from .rootsystem import SUPPORTED_RANKS, build, supported_types
from .schwarz import (KNOWN_DISCREPANCIES, REFERENCE_TABLE3, compare_with_reference,
                      enumerate_ball_quotients, exponent_forms)


def table1() -> dict:
    """Boundary eigenvalues for E6, E7, E8: {name: [{"node", "eigenvalues"}]}."""
    out = {}
    for n in (6, 7, 8):
        rows = e_table(build("E", n))
        out[f"E{n}"] = [{"node": m, "eigenvalues": [{"value": str(lam), "multiplicity": mult}
                                                    for lam, mult in eig]} for m, eig in rows]
    return out


def _affine_in_n(values: dict) -> tuple[Fraction, Fraction] | None:
    """(a, b) with c(n) = a + b n for every rank, or None if not affine."""
    ranks = sorted(values)
    if len(ranks) == 1:
        return values[ranks[0]], Fraction(0)
    n0, n1 = ranks[:2]
    b = (values[n1] - values[n0]) / (n1 - n0)
    a = values[n0] - b * n0
    if all(values[n] == a + b * n for n in ranks):
        return a, b
    return None


def _affine_str(a: Fraction, b: Fraction) -> str:
    if b == 0:
        return format_rational(a)
    head = "n" if b == 1 else f"{format_rational(b)}*n"
    if a == 0:
        return head
    sign = "+" if a > 0 else "-"
    return f"({head} {sign} {format_rational(abs(a))})"


def _render_in_n(forms_by_rank: dict) -> str:
    """Render a family of linear forms indexed by rank with coefficients affine in n."""
    terms = []
    for var, getter in (("k", lambda t: t[1]), ("kp", lambda t: t[2]), ("", lambda t: t[0])):
        fit = _affine_in_n({n: getter(f.linear_coeffs()) for n, f in forms_by_rank.items()})
        if fit is None:
            return "; ".join(f"n={n}: {f}" for n, f in sorted(forms_by_rank.items()))
        a, b = fit
        if a == 0 and b == 0:
            continue
        coeff = _affine_str(a, b)
        if not var:
            terms.append(coeff)
        elif coeff == "1":
            terms.append(var)
        elif coeff == "-1":
            terms.append(f"-{var}")
        else:
            terms.append(f"{coeff}*{var}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def table2() -> list[dict]:
    """One row per family with entries written in terms of the rank n."""
    rows = []
    for family, ranks in SUPPORTED_RANKS.items():
        records = {n: exponent_forms(build(family, n)) for n in ranks}
        first = records[ranks[0]]
        row = {"family": family}
        for column in ("toric", "mirror"):
            row[column] = [_render_in_n({n: getattr(r, column)[i] for n, r in records.items()})
                           for i in range(len(getattr(first, column)))]
        row["identity"] = _render_in_n({n: r.identity for n, r in records.items()})
        row["by_rank"] = {f"{family}{n}": r.to_json() for n, r in records.items()}
        rows.append(row)
    return rows


def _cell(family: str, rank: int) -> dict:
    entries = enumerate_ball_quotients(family, rank)
    comparison = compare_with_reference(family, rank)
    return {
        "family": family,
        "rank": rank,
        "entries": [e.to_json() for e in entries],
        "status": comparison["status"],
        "known_discrepancy": (family, rank) in KNOWN_DISCREPANCIES,
        "missing": [[str(k), str(kp)] for k, kp in comparison["missing"]],
        "extra": [[str(k), str(kp)] for k, kp in comparison["extra"]],
    }


def table3(types=None) -> list[dict]:
    """Enumerated ball-quotient parameters with the comparison against the printed list."""
    types = supported_types() if types is None else types
    return pmap(lambda t: _cell(*t), types)


def table1_markdown(data: dict) -> str:
    lines = []
    for name, rows in data.items():
        lines += [f"### {name}", "", "| p | eigenvalues | multiplicities |", "|---|---|---|"]
        for row in rows:
            vals = ", ".join(e["value"] for e in row["eigenvalues"])
            mults = ", ".join(str(e["multiplicity"]) for e in row["eigenvalues"])
            lines.append(f"| w{row['node']} | ({vals}) | ({mults}) |")
        lines.append("")
    return "\n".join(lines)


def table2_markdown(rows: list) -> str:
    lines = ["| type | toric strata | mirror strata | identity element |", "|---|---|---|---|"]
    for row in rows:
        lines.append(f"| {row['family']} | {', '.join(row['toric'])} | {', '.join(row['mirror'])} "
                     f"| {row['identity']} |")
    return "\n".join(lines) + "\n"


def table3_markdown(cells: list) -> str:
    lines = []
    for family in "ABCDEFG":
        fam_cells = [c for c in cells if c["family"] == family and c["entries"]]
        if not fam_cells:
            continue
        second = {"A": "k'", "D": None, "E": None}.get(family, "k', p'")
        header = "| n | k | p |" + (f" {second} |" if second else "")
        lines += [f"### type {family}", "", header, "|" + "---|" * (header.count("|") - 1)]
        for cell in fam_cells:
            by_p: dict = {}
            for e in cell["entries"]:
                by_p.setdefault((e["p"], e["k"]), []).append(e)
            for (p, k), es in sorted(by_p.items()):
                row = f"| {cell['rank']} | {k} | {p} |"
                if family == "A":
                    row += " " + ", ".join(e["kp"] for e in es) + " |"
                elif second:
                    row += " " + ", ".join(f"{e['kp']} (p'={e['p_prime']})" for e in es) + " |"
                lines.append(row)
        lines.append("")
    flagged = [c for c in cells if c["status"] != "match"]
    if flagged:
        lines += ["### differences from the printed list", ""]
        for c in flagged:
            lines.append(f"- {c['family']}{c['rank']}: {c['status']}; missing {c['missing']}; "
                         f"extra {c['extra']}")
        lines.append("")
    return "\n".join(lines)


__all__ = ["table1", "table2", "table3", "table1_markdown", "table2_markdown", "table3_markdown",
           "REFERENCE_TABLE3"]

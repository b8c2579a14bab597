"""veqlab command line.

    veqlab <command> <file> [--format text|json] [--float] [--grid-order N]
                            [--morphism-cap K] [--brute-force-cap K]
                            [--values 'V1 V2 ...']

Exit codes: 0 success, 1 validation failure (bad file, invalid instance,
violated equation), 2 crosscheck mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .characters import admissible_mus, element_profiles, enumerate_characters
from .cyclo import Cyclo, LiteralError, parse_literal, to_float
from .engine import (
    GridTooLarge,
    brute_force_solutions,
    bridge_report,
    check_identities,
    default_grid_order,
    enumerate_dalembert_solutions,
    solve,
    verify_equation,
)
from .instance_file import InstanceFile, ParseError, load_instance
from .semigroup import (
    DEFAULT_MORPHISM_CAP,
    Morphism,
    MorphismKind,
    NotAssociative,
    OrderCapExceeded,
    center,
    enumerate_morphisms,
    validate_morphism,
)

COMMANDS = ("validate", "analyze", "characters", "solve", "verify", "crosscheck")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2

# brute force in crosscheck; order 8 runs in about a second
CROSSCHECK_CAP = 8


def format_float(z: complex) -> str:
    re_, im = z.real, z.imag
    re_ = 0.0 if abs(re_) < 1e-12 else re_
    im = 0.0 if abs(im) < 1e-12 else im
    if im == 0.0:
        return repr(re_ + 0.0)
    if re_ == 0.0:
        return f"{im!r}i"
    return f"{re_!r}{'+' if im > 0 else '-'}{abs(im)!r}i"


class Report:
    """Accumulates a JSON-ready result plus an exit code."""

    def __init__(self, command: str, floats: bool):
        self.data: dict = {"command": command}
        self.exit_code = EXIT_OK
        self.floats = floats
        self.messages: list[str] = []

    def fail(self, code: int, message: str):
        self.exit_code = max(self.exit_code, code)
        self.messages.append(message)

    def values(self, vals: Sequence[Cyclo]) -> dict:
        out = {"values": [v.literal() for v in vals]}
        if self.floats:
            out["approx_float"] = [format_float(to_float(v)) for v in vals]
        return out


def _check_json(names, report) -> dict:
    w = report.witness
    return {"ok": report.ok, "witness": None if w is None else [names[x] for x in w]}


def _instance_json(f: InstanceFile, s) -> dict:
    names = s.names
    out = {
        "name": f.name,
        "order": s.order,
        "elements": list(names),
        "z0": names[f.z0],
        "equation": f.equation_kind().value if f.equation_kind() else f.equation,
        "identity": None if s.identity is None else names[s.identity],
        "center": [names[z] for z in sorted(center(s))],
        "morphism": None,
        "mu": [v.literal() for v in f.mu] if f.mu is not None else ["1"] * s.order,
    }
    if f.morphism is not None:
        out["morphism"] = {"kind": f.morphism_kind.value, "map": [names[v] for v in f.morphism]}
    return out


def run_command(command: str, path: str | Path, *, floats: bool = False, grid_order: int | None = None,
                morphism_cap: int = DEFAULT_MORPHISM_CAP, values: Sequence[str] | None = None,
                brute_force_cap: int | None = None) -> Report:
    rep = Report(command, floats)
    try:
        f = load_instance(path)
    except ParseError as exc:
        rep.fail(EXIT_INVALID, f"parse error: {exc}")
        return rep
    except OSError as exc:
        rep.fail(EXIT_INVALID, f"cannot read {path}: {exc.strerror}")
        return rep
    try:
        s = f.semigroup()
    except NotAssociative as exc:
        rep.fail(EXIT_INVALID, f"not a semigroup: {exc}")
        return rep
    rep.data["instance"] = _instance_json(f, s)
    names = s.names

    diags = f.diagnostics(s)
    rep.data["diagnostics"] = [{"code": c, "message": m} for c, m in diags]
    if not diags and f.morphism is None and f.z0 not in center(s):
        diags = [("z0-not-central", f"z0 = {names[f.z0]} is not in the center")]
        rep.data["diagnostics"] = [{"code": c, "message": m} for c, m in diags]
    if diags and command != "analyze":
        for c, m in diags:
            rep.fail(EXIT_INVALID, f"invalid instance [{c}] {m}")
        return rep

    if command == "validate":
        rep.data["valid"] = True
        return rep
    if command == "analyze":
        return _analyze(rep, f, s, morphism_cap)
    if command == "characters":
        return _characters(rep, f, s)

    if f.morphism is None:
        rep.fail(EXIT_INVALID, f"{command} needs a morphism: line (run analyze to list candidates)")
        return rep
    inst = f.instance(s)
    if command == "verify":
        return _verify(rep, inst, values)
    if command == "solve":
        return _solve(rep, inst)
    if command == "crosscheck":
        return _crosscheck(rep, inst, grid_order, brute_force_cap)
    raise ValueError(f"unknown command {command!r}")


def _analyze(rep, f, s, cap):
    names = s.names
    a = {
        "identity": None if s.identity is None else names[s.identity],
        "center": [names[z] for z in sorted(center(s))],
        "commutative": s.is_commutative(),
        "group": s.is_group(),
        "profiles": [{"element": names[p.element], "index": p.index, "period": p.period} for p in element_profiles(s)],
    }
    if f.morphism is not None:
        m = Morphism(f.morphism_kind, f.morphism)
        r = validate_morphism(s, m)
        a["morphism_valid"] = _check_json(names, r) | {"detail": r.detail}
    found = {}
    for kind in MorphismKind:
        try:
            found[kind.value] = [[names[v] for v in m.map] for m in enumerate_morphisms(s, kind, cap)]
        except OrderCapExceeded as exc:
            found[kind.value] = None
            a.setdefault("notes", []).append(str(exc))
    a["morphisms"] = found
    rep.data["analysis"] = a
    if rep.data["diagnostics"]:
        rep.exit_code = EXIT_INVALID
    return rep


def _characters(rep, f, s):
    chars = enumerate_characters(s)
    adm = None
    if f.morphism is not None:
        adm = set(admissible_mus(s, Morphism(f.morphism_kind, f.morphism), chars))
    out = []
    for chi in chars:
        entry = rep.values(chi.values) | {"zero": chi.is_zero}
        if adm is not None:
            entry["admissible_mu"] = chi in adm
        out.append(entry)
    rep.data["characters"] = out
    return rep


def _verify(rep, inst, values):
    if values is None:
        rep.fail(EXIT_INVALID, "verify needs --values")
        return rep
    if len(values) != inst.n:
        rep.fail(EXIT_INVALID, f"--values needs {inst.n} entries, got {len(values)}")
        return rep
    try:
        vals = [parse_literal(v) for v in values]
    except LiteralError as exc:
        rep.fail(EXIT_INVALID, str(exc))
        return rep
    r = verify_equation(inst, vals)
    rep.data["verification"] = rep.values(vals) | _check_json(inst.semigroup.names, r) | {"detail": r.detail}
    if not r:
        x, y = (inst.semigroup.names[w] for w in r.witness)
        rep.fail(EXIT_INVALID, f"violation at ({x}, {y}): {r.detail}")
    return rep


def _solution_json(rep, inst, sol) -> dict:
    names = inst.semigroup.names
    out = rep.values(sol.values)
    out["provenance"] = None if sol.provenance is None else sol.provenance.literals()
    out["verified"] = sol.verified
    if inst.equation.is_vanvleck:
        ids = check_identities(inst, sol.values)
        out["identities"] = {k: _check_json(names, v) for k, v in ids.checks.items()}
        out["d_z0"] = None if ids.d_value is None else ids.d_value.literal()
        br = bridge_report(inst, sol)
        out["g"] = rep.values(br.g.values) | {"checks": {k: _check_json(names, v) for k, v in br.checks.items()}}
    return out


def _solve(rep, inst):
    if inst.equation.is_vanvleck:
        res = solve(inst)
        rep.data["characters"] = [rep.values(c.values) | {"zero": c.is_zero} for c in res.characters]
        rep.data["solutions"] = [_solution_json(rep, inst, s) for s in res.solutions]
        rep.data["tallies"] = {
            "characters": len(res.characters),
            "accepted": res.accepted,
            "rejected": dict(sorted(res.rejections.items())),
        }
        sols = res.solutions
    else:
        sols = enumerate_dalembert_solutions(inst)
        rep.data["solutions"] = [_solution_json(rep, inst, s) for s in sols]
    if any(not s.verified for s in sols):
        rep.fail(EXIT_INVALID, "a constructed solution failed verification")
    return rep


def _crosscheck(rep, inst, grid_order, cap):
    if not inst.equation.is_vanvleck:
        rep.fail(EXIT_INVALID, "crosscheck needs a vanvleck instance")
        return rep
    res = solve(inst)
    if grid_order is None:
        grid_order = default_grid_order(inst.semigroup)
    try:
        brute = brute_force_solutions(inst, grid_order, max_order=CROSSCHECK_CAP if cap is None else cap)
    except GridTooLarge as exc:
        rep.fail(EXIT_INVALID, str(exc))
        return rep
    characterized = {s.key(): s.values for s in res.solutions}
    nonzero = {tuple(v.sort_key() for v in b): b for b in brute if any(b)}
    only_char = sorted(set(characterized) - set(nonzero))
    only_brute = sorted(set(nonzero) - set(characterized))
    match = not only_char and not only_brute and any(not any(b) for b in brute)
    rep.data["solutions"] = [rep.values(s.values) for s in res.solutions]
    rep.data["crosscheck"] = {
        "characterized": len(characterized),
        "brute_force_nonzero": len(nonzero),
        "brute_force_total": len(brute),
        "grid_order": grid_order,
        "only_characterized": [[v.literal() for v in characterized[k]] for k in only_char],
        "only_brute_force": [[v.literal() for v in nonzero[k]] for k in only_brute],
        "match": match,
    }
    if not match:
        rep.fail(EXIT_MISMATCH, "characterized and brute-force solution sets differ")
    return rep


# -- rendering -------------------------------------------------------------------


def emit_report(rep: Report, fmt: str = "text") -> str:
    if fmt == "json":
        doc = dict(rep.data)
        doc["exit_code"] = rep.exit_code
        doc["messages"] = rep.messages
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    return _render_text(rep)


def _vec(entry: dict) -> str:
    s = "(" + ", ".join(entry["values"]) + ")"
    if "approx_float" in entry:
        s += "  ~ (" + ", ".join(entry["approx_float"]) + ")"
    return s


def _render_text(rep: Report) -> str:
    d = rep.data
    out = [f"command: {d['command']}"]
    inst = d.get("instance")
    if inst:
        out.append(f"instance: {inst['name']} (order {inst['order']}), equation {inst['equation']}, z0 = {inst['z0']}")
        if inst["morphism"]:
            out.append(f"morphism: {inst['morphism']['kind']} ({', '.join(inst['morphism']['map'])})")
        out.append(f"mu: ({', '.join(inst['mu'])})")
    if "valid" in d:
        out.append("valid: yes")
    if "analysis" in d:
        a = d["analysis"]
        out.append(f"identity: {a['identity'] or 'none'}")
        out.append(f"center: {{{', '.join(a['center'])}}}")
        out.append(f"commutative: {'yes' if a['commutative'] else 'no'}; group: {'yes' if a['group'] else 'no'}")
        out.append("profiles: " + ", ".join(f"{p['element']}[i={p['index']},p={p['period']}]" for p in a["profiles"]))
        if "morphism_valid" in a:
            mv = a["morphism_valid"]
            out.append("declared morphism: " + ("valid" if mv["ok"] else f"INVALID at {tuple(mv['witness'])}: {mv['detail']}"))
        for kind, maps in a["morphisms"].items():
            if maps is None:
                out.append(f"{kind} morphisms: not enumerated (order above cap)")
            else:
                out.append(f"{kind} morphisms: {len(maps)}")
                out.extend(f"  ({', '.join(m)})" for m in maps)
        for note in a.get("notes", []):
            out.append(f"note: {note}")
    for diag in d.get("diagnostics", []) if "analysis" in d else []:
        out.append(f"diagnostic [{diag['code']}]: {diag['message']}")
    if "characters" in d and d["command"] == "characters":
        out.append(f"characters: {len(d['characters'])}")
        for k, c in enumerate(d["characters"]):
            tags = []
            if c["zero"]:
                tags.append("zero map")
            if c.get("admissible_mu"):
                tags.append("admissible mu")
            out.append(f"  chi[{k}] = {_vec(c)}" + (f"  [{', '.join(tags)}]" if tags else ""))
    if "tallies" in d:
        t = d["tallies"]
        rej = ", ".join(f"{k}: {v}" for k, v in t["rejected"].items()) or "none"
        out.append(f"characters: {t['characters']}, accepted: {t['accepted']}, rejected: {rej}")
    if "solutions" in d and d["command"] == "solve":
        out.append(f"solutions: {len(d['solutions'])}")
        for k, s in enumerate(d["solutions"]):
            out.append(f"solution {k + 1}:")
            out.append(f"  f = {_vec(s)}")
            if s["provenance"] is not None:
                out.append(f"  provenance chi = ({', '.join(s['provenance'])})")
            out.append(f"  verified: {'yes' if s['verified'] else 'NO'}")
            if "identities" in s:
                fails = [k for k, v in s["identities"].items() if not v["ok"]]
                out.append("  identities: " + ("all pass" if not fails else "FAIL " + ", ".join(fails)))
                out.append("    " + " ".join(f"{k}={'ok' if v['ok'] else 'FAIL'}" for k, v in s["identities"].items()))
                out.append(f"  d(z0) = {s['d_z0']}")
                g = s["g"]
                gfails = [k for k, v in g["checks"].items() if not v["ok"]]
                out.append(f"  g = {_vec(g)}")
                out.append("  bridge: " + ("all pass" if not gfails else "FAIL " + ", ".join(gfails)))
    if "verification" in d:
        v = d["verification"]
        out.append(f"f = {_vec(v)}")
        out.append("equation holds" if v["ok"] else f"violation at ({', '.join(v['witness'])}): {v['detail']}")
    if "crosscheck" in d:
        c = d["crosscheck"]
        verdict = "MATCH" if c["match"] else "MISMATCH"
        out.append(f"characterized: {c['characterized']}, brute-force nonzero: {c['brute_force_nonzero']}, {verdict}")
        for vec in c["only_characterized"]:
            out.append(f"  only characterized: ({', '.join(vec)})")
        for vec in c["only_brute_force"]:
            out.append(f"  only brute force: ({', '.join(vec)})")
    for msg in rep.messages:
        out.append(f"error: {msg}")
    out.append(f"exit: {rep.exit_code}")
    return "\n".join(out) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    p = argparse.ArgumentParser(prog="veqlab", description="Solve and verify twisted Van Vleck equations on finite semigroups.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--float", action="store_true", help="add approximate complex renderings")
    p.add_argument("--grid-order", type=int, default=None, help="root-of-unity order of the brute-force grid")
    p.add_argument("--morphism-cap", type=int, default=DEFAULT_MORPHISM_CAP)
    p.add_argument("--brute-force-cap", type=int, default=None, help=f"largest order the brute force accepts (default {CROSSCHECK_CAP})")
    p.add_argument("--values", default=None, help="f table for verify: whitespace-separated cyclotomic literals")
    args = p.parse_args(argv)
    rep = run_command(
        args.command,
        args.file,
        floats=args.float,
        grid_order=args.grid_order,
        morphism_cap=args.morphism_cap,
        values=None if args.values is None else args.values.split(),
        brute_force_cap=args.brute_force_cap,
    )
    sys.stdout.write(emit_report(rep, args.format))
    return rep.exit_code


if __name__ == "__main__":
    raise SystemExit(main())

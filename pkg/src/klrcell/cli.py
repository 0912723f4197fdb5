"""Command-line front end.

Usage: ``klrcell <command> [--e E] [--ell L] [--n N] [--theta a,b,...]
[--kappa k1,k2,...] [--field Q|Fp:p] [--config FILE] [--out PATH]``.

Exit codes: 0 success, 1 invalid configuration (or a failed ``verify-paper``),
2 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from . import combinatorics as cb
from . import goldens, linalg, quotients, uglov
from .linalg import Field, LaurentPoly
from .params import Params, ParamsError, flotw_theta, parse_e, parse_rational

COMMANDS = (
    "tableaux", "dominance", "uglov", "basis", "gram", "decompose",
    "branch-check", "cyclic-check", "quotient", "verify-paper",
)
# commands that build the cellular algebra
ENGINE_COMMANDS = {"basis", "gram", "decompose", "quotient"}
MAX_N_ENGINE = 4
MAX_N_COMBINATORIAL = 10

CONFIG_KEYS = {"e", "ell", "n", "theta", "kappa", "field", "out", "h", "shape", "convention", "format", "word", "verify"}


class ConfigError(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# serialization


def mp_json(lam) -> list:
    return [list(part) for part in lam]


def poly_json(f: LaurentPoly) -> dict:
    return {str(k): str(v) for k, v in sorted(f.coeffs.items())}


def num_json(x) -> str:
    return str(Fraction(x)) if not isinstance(x, int) else str(x)


def tableau_json(t, p: Params) -> dict:
    lam = cb.shape_of(t, p.ell)
    entry = {b: k + 1 for k, b in enumerate(t)}
    boxes = cb.sort_boxes(cb.boxes_of(lam), p)
    return {
        "shape": mp_json(lam),
        "boxes": [list(b) for b in boxes],
        "entries": [entry[b] for b in boxes],
        "degree": cb.degree(t, p),
        "residues": list(cb.residue_sequence(t, p)),
    }


def matrix_json(rows, cols, data) -> dict:
    return {"rows": rows, "columns": cols, "data": data}


def matrix_csv(m: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + [json.dumps(c, ensure_ascii=False) for c in m["columns"]])
    for label, row in zip(m["rows"], m["data"]):
        w.writerow([json.dumps(label, ensure_ascii=False)] + [
            json.dumps(x, ensure_ascii=False, sort_keys=True) if isinstance(x, dict) else x for x in row
        ])
    return buf.getvalue()


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


# ---------------------------------------------------------------------------
# configuration


def read_config(path: str) -> dict:
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (x.strip() for x in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")


def parse_shape(text: str) -> tuple:
    """``"3,2|3,1"`` (``|`` between components, empty component allowed)."""
    return tuple(tuple(sorted(_int_list(part), reverse=True)) for part in text.split("|"))


def build_params(opts: dict) -> tuple[Params, Field]:
    try:
        e = parse_e(opts.get("e") or "inf")
        if opts.get("n") is None:
            raise ConfigError("n is required")
        n = int(opts["n"])
        theta = kappa = None
        if opts.get("theta"):
            theta = tuple(parse_rational(x) for x in str(opts["theta"]).split(","))
        if opts.get("kappa"):
            kappa = _int_list(str(opts["kappa"]))
        ell = int(opts["ell"]) if opts.get("ell") else len(theta or kappa or (0,))
        theta = theta if theta is not None else flotw_theta(ell)
        kappa = kappa if kappa is not None else (0,) * ell
        p = Params(e, n, theta, kappa, ell)
        field = Field.parse(str(opts.get("field") or "Q"))
    except (ParamsError, ConfigError):
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(str(exc)) from exc
    return p, field


def _check_limits(cmd: str, p: Params) -> None:
    limit = MAX_N_ENGINE if cmd in ENGINE_COMMANDS else MAX_N_COMBINATORIAL
    if p.n > limit:
        raise ResourceLimit(f"n={p.n} exceeds the limit {limit} for {cmd!r}")


# ---------------------------------------------------------------------------
# KLR expressions

_TOKEN = re.compile(r"psi(\d+)|y(\d+)|e\(([^)]*)\)")


def parse_klr(text: str) -> list:
    """``"psi1 e(0,1) - 2 y2 e(1,0)"`` into ``[(coeff, tokens), ...]``."""
    terms = []
    for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", text.replace("*", " ")):
        body = body.strip()
        coeff = -1 if sign == "-" else 1
        m = re.match(r"(\d+)\s+(.*)", body)
        if m:
            coeff *= int(m.group(1))
            body = m.group(2)
        toks = []
        pos = 0
        for mt in _TOKEN.finditer(body):
            if body[pos:mt.start()].strip():
                raise ConfigError(f"cannot parse {body[pos:mt.start()]!r} in KLR word")
            pos = mt.end()
            if mt.group(1):
                toks.append(("psi", int(mt.group(1))))
            elif mt.group(2):
                toks.append(("y", int(mt.group(2))))
            else:
                toks.append(("e", _int_list(mt.group(3))))
        if body[pos:].strip() or not toks:
            raise ConfigError(f"cannot parse KLR term {body!r}")
        terms.append((coeff, toks))
    return terms


# ---------------------------------------------------------------------------
# commands


def cmd_tableaux(p: Params, field: Field, opts: dict) -> Any:
    if p.n == 0:
        return []
    shapes = [parse_shape(opts["shape"])] if opts.get("shape") else cb.sorted_multipartitions(p)
    return [tableau_json(t, p) for lam in shapes for t in cb.enumerate_std(lam, p)]


def cmd_dominance(p: Params, field: Field, opts: dict) -> Any:
    mps = cb.sorted_multipartitions(p)
    return {
        "order": [mp_json(lam) for lam in mps],
        "relations": [
            [mp_json(lam), mp_json(mu)] for lam in mps for mu in mps if cb.dominates(lam, mu, p)
        ],
    }


def cmd_uglov(p: Params, field: Field, opts: dict) -> Any:
    conv = opts.get("convention") or "cellular"
    labels = uglov.uglov_set(p, conv)
    return [goldens.fmt_mp(lam) for lam in cb.sorted_multipartitions(p) if lam in labels]


def _algebra(p: Params):
    from .engine.cellular import CellularAlgebra

    return CellularAlgebra(p)


def cmd_basis(p: Params, field: Field, opts: dict) -> Any:
    alg = _algebra(p)
    if opts.get("word"):
        terms = parse_klr(opts["word"])
        for _, toks in terms:
            alg.klr_embed(toks)
        x = alg.normalize(goldens.klr_element(terms))
        return [
            {"shape": mp_json(lam), "s": tableau_json(s, p), "t": tableau_json(t, p), "coeff": num_json(c)}
            for (lam, s, t), c in sorted(x.terms, key=lambda kv: _sym_key(alg, kv[0]))
        ]
    return [
        {"shape": mp_json(lam), "s": tableau_json(s, p), "t": tableau_json(t, p), "degree": alg.deg(s) + alg.deg(t)}
        for lam, s, t in alg.symbols()
    ]


def _sym_key(alg, sym):
    lam, s, t = sym
    tabs = alg.tableaux(lam)
    return (alg.dominance_rank(lam), tabs.index(s), tabs.index(t))


def _shapes(p: Params, opts: dict) -> list:
    return [parse_shape(opts["shape"])] if opts.get("shape") else list(cb.sorted_multipartitions(p))


def cmd_gram(p: Params, field: Field, opts: dict) -> Any:
    alg = _algebra(p)
    out = []
    for lam in _shapes(p, opts):
        tabs = alg.tableaux(lam)
        labels = [tableau_json(t, p)["entries"] for t in tabs]
        mat = [[num_json(x) for x in row] for row in alg.gram_matrix(lam)]
        out.append({
            "shape": mp_json(lam),
            "rank": linalg.gram_rank(alg, lam, field),
            "matrix": matrix_json(labels, labels, mat),
        })
    return out


def cmd_decompose(p: Params, field: Field, opts: dict) -> Any:
    D = linalg.decomposition_matrix(_algebra(p), field)
    return matrix_json(
        [mp_json(r) for r in D.rows],
        [mp_json(c) for c in D.columns],
        [[poly_json(x) for x in row] for row in D.as_lists()],
    )


def cmd_branch_check(p: Params, field: Field, opts: dict) -> Any:
    if p.n == 0:
        return {"holds": True, "checks": []}
    checks = []
    for lam in cb.sorted_multipartitions(p):
        r = cb.branching_data(lam, p)
        checks.append({
            "shape": mp_json(lam),
            "removable": [{"box": list(b), "degree": d} for b, d in r.removable],
            "lhs": poly_json(r.lhs),
            "rhs": poly_json(r.rhs),
            "holds": r.holds,
        })
    return {"holds": all(c["holds"] for c in checks), "checks": checks}


def cmd_cyclic_check(p: Params, field: Field, opts: dict) -> Any:
    out = []
    alg = _algebra(p) if _truthy(opts.get("verify")) else None
    if alg is not None and p.n > MAX_N_ENGINE:
        raise ResourceLimit(f"n={p.n} exceeds the limit {MAX_N_ENGINE} for the transition check")
    for lam in cb.sorted_multipartitions(p):
        a = cb.cyclic_analysis(lam, p)
        entry = {
            "shape": mp_json(lam),
            "cyclic_boxes": [[list(b), v] for b, v in sorted(a.cyclic_boxes.items())],
            "cyclic_tableau": tableau_json(a.cyclic_tableau, p) if a.cyclic_tableau else None,
            "t_lambda_theta": tableau_json(a.t_lambda_theta, p) if lam != cb.empty_multipartition(p.ell) else None,
            "y_exponents": list(a.data.y_exponents),
        }
        if alg is not None and a.cyclic_tableau is not None:
            alg.psi_basis_transition(lam)
            signs = [v for (mu, _, _), v in sorted(alg.psi_signs.items(), key=repr) if mu == lam]
            entry["unitriangular_up_to_sign"] = True
            entry["negative_leading_terms"] = sum(1 for v in signs if v < 0)
        out.append(entry)
    return out


def cmd_quotient(p: Params, field: Field, opts: dict) -> Any:
    h = int(opts.get("h") or 1)
    spec = quotients.QuotientSpec.make(p.e, p.ell, p.n, p.kappa, h)
    alg = _algebra(spec.params)
    ic = quotients.ideal_equality_check(spec, alg)
    D = quotients.quotient_decomposition_submatrix(spec, field, alg)
    return {
        "params": spec.params.as_dict(),
        "h": h,
        "labels": [mp_json(lam) for lam in spec.label_set()],
        "basis_size": len(quotients.quotient_basis(spec)),
        "ideal_dimension": ic.ideal_dimension,
        "cell_ideal_dimension": ic.cell_ideal_dimension,
        "ideal_equal": ic.equal,
        "decomposition_submatrix": matrix_json(
            [mp_json(r) for r in D.rows],
            [mp_json(c) for c in D.columns],
            [[poly_json(x) for x in row] for row in D.as_lists()],
        ),
    }


def _truthy(x) -> bool:
    return str(x).lower() in {"1", "true", "yes", "on"} if x is not None else False


def _goldens_json(results) -> dict:
    return {
        "sign_diagonal": {
            f"{goldens.fmt_theta(th)} {name}": s for (th, name), s in goldens.SIGN_DIAGONAL.items()
        },
        "passed": sum(1 for g in results if g.passed),
        "failed": sum(1 for g in results if not g.passed),
        "results": [_jsonable(g.as_dict()) for g in results],
    }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


HANDLERS = {
    "tableaux": cmd_tableaux,
    "dominance": cmd_dominance,
    "uglov": cmd_uglov,
    "basis": cmd_basis,
    "gram": cmd_gram,
    "decompose": cmd_decompose,
    "branch-check": cmd_branch_check,
    "cyclic-check": cmd_cyclic_check,
    "quotient": cmd_quotient,
}
MATRIX_COMMANDS = {"decompose"}


# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="klrcell", description="Weighted KLR algebra computations.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", help="file of 'key = value' lines; flags override it")
    ap.add_argument("--e", help="quantum characteristic, an integer >= 2 or 'inf'")
    ap.add_argument("--ell", help="level")
    ap.add_argument("--n", help="degree")
    ap.add_argument("--theta", help="weighting, comma separated rationals 'p/q'")
    ap.add_argument("--kappa", help="multicharge, comma separated")
    ap.add_argument("--field", help="Q or Fp:<prime>")
    ap.add_argument("--out", help="write output here instead of stdout")
    ap.add_argument("--format", choices=("json", "csv"), help="csv is available for matrices")
    ap.add_argument("--shape", help="restrict to one multipartition, e.g. '3,2|3,1'")
    ap.add_argument("--convention", choices=uglov.CONVENTIONS)
    ap.add_argument("--h", help="column bound for quotient")
    ap.add_argument("--word", help="KLR expression to normalize, e.g. 'psi1 e(0,1) - y2 e(1,0)'")
    ap.add_argument("--verify", action="store_const", const="true", help="cyclic-check: verify the psi-basis transition")
    return ap


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fail(code: int, kind: str, message: str) -> int:
    sys.stderr.write(dumps({"error": kind, "message": message}))
    return code


def run(argv: Optional[Sequence[str]] = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        opts = read_config(args.config) if args.config else {}
        for k, v in vars(args).items():
            if k not in ("command", "config") and v is not None:
                opts[k] = v
        fmt = opts.get("format") or "json"
        if args.command == "verify-paper":
            results = goldens.run_goldens()
            _emit(dumps(_goldens_json(results)), opts.get("out"))
            return 0 if all(g.passed for g in results) else 1
        p, field = build_params(opts)
        _check_limits(args.command, p)
        result = HANDLERS[args.command](p, field, opts)
        if fmt == "csv":
            if args.command not in MATRIX_COMMANDS:
                raise ConfigError(f"csv output is only available for {sorted(MATRIX_COMMANDS)}")
            text = matrix_csv(result)
        else:
            text = dumps(result)
        _emit(text, opts.get("out"))
        return 0
    except ResourceLimit as exc:
        return _fail(2, "resource-limit", str(exc))
    except (ConfigError, ParamsError, quotients.InadmissibleError) as exc:
        return _fail(1, "invalid-config", str(exc))
    except (ValueError, IndexError, LookupError) as exc:
        return _fail(1, "invalid-config", str(exc))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

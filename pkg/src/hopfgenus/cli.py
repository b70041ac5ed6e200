"""Command-line entry point.

One executable, one subcommand per module.  Config precedence is
flags > config file > defaults, and the effective config is echoed into
every JSON report.  Errors come back as JSON objects with a stable
``code`` field: exit 0 on success, 1 on computation errors, 2 on usage
or config errors.  Output is deterministic (sorted keys, sorted rows).
"""

import argparse
import json
import sys

from . import acceptance as acceptance_mod
from . import genus as genus_mod
from . import homology, mzv, qsymm, symm
from .core import ParseError, format_polynomial, parse_polynomial
from .rational import Q, is_exact, rational_from_string, rational_to_string

DEFAULTS = {
    "degree": 30,
    "error": 1e-8,
    "model": "kge0",
    "format": "text",
    "output": None,
}

MODELS = ("kge0", "igt0")
FORMATS = ("json", "csv", "text")


class CLIError(Exception):
    def __init__(self, code, message, exit_code=1):
        super().__init__(message)
        self.code = code
        self.exit_code = exit_code


def _load_config_file(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CLIError("config-error", "cannot read config %s: %s" % (path, exc), 2)
    if not isinstance(data, dict):
        raise CLIError("config-error", "config file must hold a JSON object", 2)
    unknown = set(data) - set(DEFAULTS)
    if unknown:
        raise CLIError(
            "config-error", "unknown config keys: %s" % ", ".join(sorted(unknown)), 2
        )
    return data


def _effective_config(args):
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        cfg.update(_load_config_file(args.config))
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    if cfg["degree"] < 1:
        raise CLIError("config-error", "degree must be >= 1", 2)
    if cfg["error"] <= 0:
        raise CLIError("config-error", "error must be positive", 2)
    if cfg["model"] not in MODELS:
        raise CLIError("config-error", "model must be one of %s" % (MODELS,), 2)
    if cfg["format"] not in FORMATS:
        raise CLIError("config-error", "format must be one of %s" % (FORMATS,), 2)
    return cfg


def _emit(text, cfg):
    out = cfg.get("output")
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _json_dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1)


def _config_echo(cfg):
    return {k: cfg[k] for k in ("degree", "error", "model", "format")}


def _scalar_text(v):
    if is_exact(v):
        return rational_to_string(v)
    return repr(v)


def _rows_text(header, rows, cfg):
    if cfg["format"] == "json":
        return _json_dump(
            {
                "columns": list(header),
                "rows": [list(r) for r in rows],
                "config": _config_echo(cfg),
            }
        )
    lines = [",".join(header)]
    lines += [",".join(str(x) for x in r) for r in rows]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_symm(args, cfg):
    bound = args.max_weight if args.max_weight is not None else min(cfg["degree"], 20)
    report = {"identity": args.which, "max_weight": bound, "config": _config_echo(cfg)}
    if args.which == "d-classes":
        lhs = symm.d_classes(bound)
        rhs = symm.d_classes_exp_form(bound)
        mismatch = next(
            (k for k in range(bound + 1) if lhs.comps[k] != rhs.comps[k]), None
        )
    elif args.which == "a-classes":
        a = symm.a_classes(bound)
        mismatch = None
        for k in range(2, bound + 1, 2):
            from .core import gen_id

            if a.comps[k].coefficient(((gen_id("b", k), 1),)) != 2:
                mismatch = k
                break
        for k in range(3, bound + 1, 2):
            if any(len(m) == 1 and m[0][1] == 1 for m in a.comps[k].terms):
                mismatch = k if mismatch is None else min(mismatch, k)
                break
    else:
        raise CLIError("unknown-name", "unknown identity %r" % args.which, 2)
    if mismatch is None:
        report["status"] = "exact-match"
    else:
        report["status"] = "mismatch"
        report["first_mismatch_weight"] = mismatch
    _emit(_json_dump(report), cfg)
    return 0 if mismatch is None else 1


def _cmd_qsymm(args, cfg):
    try:
        profile = qsymm.GeneratorProfile.from_text(args.profile)
    except ValueError as exc:
        raise CLIError("parse-error", str(exc), 2)
    if args.action == "hilbert":
        dims = qsymm.free_algebra_hilbert(profile, args.bound, args.flavor)
        rows = [(n, dims[n]) for n in range(args.bound + 1)]
        _emit(_rows_text(("degree", "dim"), rows, cfg), cfg)
    else:  # lyndon
        words = qsymm.lyndon_generators(args.bound, profile)
        if cfg["format"] == "json":
            _emit(
                _json_dump(
                    {
                        "weight": args.bound,
                        "words": [list(w) for w in words],
                        "config": _config_echo(cfg),
                    }
                ),
                cfg,
            )
        else:
            _emit("\n".join(qsymm.format_composition(w) for w in words) or "(none)", cfg)
    return 0


def _cmd_mzv(args, cfg):
    try:
        idx = qsymm.parse_composition(args.index)
    except ValueError as exc:
        raise CLIError("parse-error", str(exc), 2)
    error = args.error if args.error is not None else cfg["error"]
    try:
        enc = mzv.mzv_eval(idx, error)
    except mzv.DivergentIndexError as exc:
        raise CLIError("divergent-index", str(exc))
    except mzv.PrecisionError as exc:
        raise CLIError("precision-error", str(exc))
    _emit(
        _json_dump(
            {
                "index": list(idx),
                "value": enc.value,
                "error_bound": enc.error_bound,
                "admissible": True,
                "config": _config_echo(cfg),
            }
        ),
        cfg,
    )
    return 0


def _parse_algebra(text, bound):
    kind, _, rest = text.partition(":")
    try:
        degrees = [int(d) for d in rest.split(",") if d]
    except ValueError:
        raise CLIError("parse-error", "bad algebra degrees in %r" % text, 2)
    if kind == "exterior":
        return homology.exterior_algebra(degrees, bound)
    if kind == "squarezero":
        return homology.square_zero_extension(degrees, bound)
    raise CLIError("parse-error", "unknown algebra kind %r" % kind, 2)


def _cmd_tor(args, cfg):
    try:
        algebra = _parse_algebra(args.algebra, cfg["degree"])
        table = homology.tor_via_bar(algebra, args.bound)
    except (ValueError, homology.TruncationError) as exc:
        raise CLIError("value-error", str(exc))
    rows = [(s, t, s + t, d) for s, t, d in table.nonzero()]
    rows.sort(key=lambda r: (r[2], r[0]))
    _emit(_rows_text(("s", "t", "total", "dim"), rows, cfg), cfg)
    return 0


def _cmd_series(args, cfg):
    poly_start = 2 if cfg["model"] == "kge0" else 6
    try:
        dims = homology.coefficient_ring_series(
            args.which, args.bound, polynomial_start=poly_start
        )
    except ValueError as exc:
        raise CLIError("unknown-name", str(exc))
    rows = [(n, dims[n]) for n in range(args.bound + 1)]
    _emit(_rows_text(("degree", "dim"), rows, cfg), cfg)
    return 0


def _load_manifold(args):
    if getattr(args, "manifold_file", None):
        try:
            with open(args.manifold_file) as fh:
                return genus_mod.manifold_from_json(fh.read())
        except (OSError, ValueError, KeyError, ParseError) as exc:
            raise CLIError("parse-error", "bad manifold file: %s" % exc)
    try:
        return genus_mod.catalog_model(args.manifold)
    except KeyError as exc:
        raise CLIError("unknown-name", str(exc.args[0]))


_SERIES = {
    "A-hat": genus_mod.a_hat_series,
    "Todd": genus_mod.todd_series,
}


def _genus_series(name, bound):
    if name not in _SERIES:
        raise CLIError("unknown-name", "unknown series %r (have %s)" % (name, sorted(_SERIES)))
    return _SERIES[name](bound)


def _parse_t(text):
    entries = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        k, _, v = piece.partition(":")
        try:
            entries[int(k)] = rational_from_string(v)
        except (ValueError, ZeroDivisionError):
            raise CLIError("parse-error", "bad deformation entry %r" % piece, 2)
    try:
        return genus_mod.DeformationParameters.from_dict(entries)
    except ValueError as exc:
        raise CLIError("value-error", str(exc))


def _cmd_genus(args, cfg):
    model = _load_manifold(args)
    series = _genus_series(args.series, max(model.dim_c, 1) + 1)
    report = {
        "manifold": model.name,
        "series": args.series,
        "config": _config_echo(cfg),
    }
    if args.action == "compute":
        value = genus_mod.genus(model, series)
        report["value"] = _scalar_text(value)
    else:  # deform
        params = _parse_t(args.t)
        include = cfg["model"] == "kge0"
        value = genus_mod.deform_genus(model, series, params, include_ch1=include)
        report["t"] = {str(k): _scalar_text(v) for k, v in params.entries}
        report["value"] = _scalar_text(value)
    _emit(_json_dump(report), cfg)
    return 0


def _cmd_coaction(args, cfg):
    model = _load_manifold(args)
    degs = {sym: deg for sym, _, deg, _ in model.generators}
    try:
        cls = parse_polynomial(args.cls, lambda fam, idx: degs.get(fam, idx))
    except ParseError as exc:
        raise CLIError("parse-error", str(exc))
    psi = genus_mod.coaction(model, cls, args.bound)
    comps = {
        "".join("y%d^%d" % (2 * j, m) if m > 1 else "y%d" % (2 * j) for j, m in alpha)
        or "1": format_polynomial(poly)
        for alpha, poly in psi.items()
    }
    _emit(
        _json_dump(
            {
                "manifold": model.name,
                "class": format_polynomial(cls),
                "bound": args.bound,
                "components": comps,
                "config": _config_echo(cfg),
            }
        ),
        cfg,
    )
    return 0


def _cmd_acceptance(args, cfg):
    config = acceptance_mod.AcceptanceConfig(
        degree=cfg["degree"], target_error=cfg["error"]
    )
    only = set(args.only) if args.only else None
    results = acceptance_mod.run_all(config, only=only)
    ok = acceptance_mod.all_passed(results)
    if cfg["format"] == "json":
        _emit(
            _json_dump(
                {
                    "results": results,
                    "all_passed": ok,
                    "config": _config_echo(cfg),
                }
            ),
            cfg,
        )
    else:
        lines = [
            "[%s] %2d %-20s %7.2fs  %s"
            % (r["status"].upper(), r["id"], r["name"], r["seconds"], r["detail"])
            for r in results
        ]
        lines.append("result: %s" % ("all passed" if ok else "FAILURES"))
        _emit("\n".join(lines), cfg)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def _add_common(sub):
    sub.add_argument("--config", help="JSON config file")
    sub.add_argument("--degree", type=int, help="truncation degree")
    sub.add_argument("--error", type=float, help="float target error")
    sub.add_argument("--model", choices=MODELS, help="generator-start convention")
    sub.add_argument("--format", choices=FORMATS, help="output format")
    sub.add_argument("--output", help="output path (default stdout)")


def build_parser():
    p = argparse.ArgumentParser(prog="hopfgenus")
    subs = p.add_subparsers(dest="command", required=True)

    s = subs.add_parser("symm", help="symmetric-function identity checks")
    s.add_argument("action", choices=["identity-check"])
    s.add_argument("--which", required=True, choices=["d-classes", "a-classes"])
    s.add_argument("--max-weight", type=int)
    _add_common(s)
    s.set_defaults(fn=_cmd_symm)

    s = subs.add_parser("qsymm", help="Lyndon generators and Hilbert series")
    s.add_argument("action", choices=["hilbert", "lyndon"])
    s.add_argument("--profile", default="all")
    s.add_argument(
        "--flavor",
        default="associative",
        choices=["associative", "lie", "polynomial-on-lyndon"],
    )
    s.add_argument("--bound", type=int, required=True)
    _add_common(s)
    s.set_defaults(fn=_cmd_qsymm)

    s = subs.add_parser("mzv", help="certified multizeta evaluation")
    s.add_argument("action", choices=["eval"])
    s.add_argument("--index", required=True)
    s.add_argument("--error", type=float, dest="error")
    _add_common_minus_error(s)
    s.set_defaults(fn=_cmd_mzv)

    s = subs.add_parser("tor", help="bar-complex Tor tables")
    s.add_argument("--algebra", required=True)
    s.add_argument("--bound", type=int, required=True)
    _add_common(s)
    s.set_defaults(fn=_cmd_tor)

    s = subs.add_parser("series", help="named coefficient-ring series")
    s.add_argument(
        "--which",
        required=True,
        choices=[homology.SOMEGA, homology.THH, homology.K_THEORY_FIBER],
    )
    s.add_argument("--bound", type=int, required=True)
    _add_common(s)
    s.set_defaults(fn=_cmd_series)

    s = subs.add_parser("genus", help="genus computation and deformation")
    s.add_argument("action", choices=["compute", "deform"])
    s.add_argument("--manifold", default="CP1")
    s.add_argument("--manifold-file")
    s.add_argument("--series", default="A-hat")
    s.add_argument("--t", default="")
    _add_common(s)
    s.set_defaults(fn=_cmd_genus)

    s = subs.add_parser("coaction", help="comodule coaction on a manifold class")
    s.add_argument("--manifold", default="CP1")
    s.add_argument("--manifold-file")
    s.add_argument("--class", dest="cls", default="1")
    s.add_argument("--bound", type=int, required=True)
    _add_common(s)
    s.set_defaults(fn=_cmd_coaction)

    s = subs.add_parser("acceptance", help="run the acceptance suite")
    s.add_argument("--only", type=int, nargs="*")
    _add_common(s)
    s.set_defaults(fn=_cmd_acceptance)

    return p


def _add_common_minus_error(sub):
    sub.add_argument("--config", help="JSON config file")
    sub.add_argument("--degree", type=int, help="truncation degree")
    sub.add_argument("--model", choices=MODELS, help="generator-start convention")
    sub.add_argument("--format", choices=FORMATS, help="output format")
    sub.add_argument("--output", help="output path (default stdout)")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _effective_config(args)
        return args.fn(args, cfg)
    except CLIError as exc:
        sys.stdout.write(
            _json_dump({"code": exc.code, "message": str(exc)}) + "\n"
        )
        return exc.exit_code
    except (ValueError, ParseError) as exc:
        sys.stdout.write(
            _json_dump({"code": "value-error", "message": str(exc)}) + "\n"
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())

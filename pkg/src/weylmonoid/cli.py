"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 some result could
not be certified within its budget (output is still written, with flags).
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .catalog import CATALOG
from .errors import NonSpecialTheta, UnknownToken, WeylMonoidError
from .gcm import classify_component, components, format_set, is_special, orthogonal_complement, validate_gcm
from .monoid import (
    TYPE1,
    TYPE2,
    element_word,
    enumerate_elements,
    from_weyl,
    idempotent,
    multiply,
    normal_form,
    unit,
)
from .oracle import build_sample, oracle_equal, oracle_multiply, to_partial_map
from .realization import Realization, build_realization
from .strata import big_cell_data, birkhoff_strata, emit, orbit_poset, strata_counts
from .tits import DEFAULT_INTERSECT_BUDGET, DEFAULT_STABILITY_WINDOW, Status, standard_face
from .weyl import simple_reflection

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

_TOKEN = re.compile(r"\S+")
_REFL = re.compile(r"s(\d+)$")
_IDEM = re.compile(r"e\[([0-9,]*)\]$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_element(word: str, r: Realization, budget: int = DEFAULT_INTERSECT_BUDGET,
                  window: int = DEFAULT_STABILITY_WINDOW):
    """Parse ``"s1 s2 e[1,2] s1"`` as a left-to-right product.

    Returns ``(element, status)``; status is the worst status of the products.
    """
    x = unit(r)
    status = Status.EXACT
    for m in _TOKEN.finditer(word):
        tok, pos = m.group(), m.start()
        if (mr := _REFL.match(tok)) is not None:
            i = int(mr.group(1))
            if not 1 <= i <= r.n:
                raise UnknownToken(f"reflection index {i} out of range at position {pos}", pos)
            factor = from_weyl(simple_reflection(r, i))
        elif (mi := _IDEM.match(tok)) is not None:
            body = mi.group(1)
            try:
                theta = frozenset(int(t) for t in body.split(",") if t) if body else frozenset()
            except ValueError:
                raise UnknownToken(f"malformed index list {tok!r} at position {pos}", pos) from None
            if any(not 1 <= i <= r.n for i in theta) or not is_special(r.gcm, theta):
                raise NonSpecialTheta(f"{tok!r} at position {pos} is not a special set", pos)
            factor = idempotent(standard_face(r, theta))
        else:
            raise UnknownToken(f"unknown token {tok!r} at position {pos}", pos)
        x, st = multiply(x, factor, budget, window)
        if st is not Status.EXACT:
            status = Status.BUDGET_EXHAUSTED
    return x, status


def _load_gcm(args):
    sources = [s for s in (args.input, args.matrix, args.gcm) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --input, --matrix, --gcm")
    if args.gcm is not None:
        if args.gcm not in CATALOG:
            raise UsageError(f"unknown catalog name {args.gcm!r}; known: {', '.join(CATALOG)}")
        return validate_gcm(CATALOG[args.gcm])
    try:
        if args.input is not None:
            with open(args.input) as fh:
                data = json.load(fh)
        else:
            data = json.loads(args.matrix)
            if isinstance(data, list):
                data = {"matrix": data}
    except (OSError, json.JSONDecodeError) as exc:
        raise WeylMonoidError(f"cannot read GCM: {exc}") from exc
    if not isinstance(data, dict) or "matrix" not in data:
        raise WeylMonoidError('GCM input must be a JSON object {"matrix": [[...], ...]}')
    return validate_gcm(data["matrix"])


def _budget_meta(args, **extra):
    meta = {"word_length_budget": args.budget, "stability_window": args.window}
    meta.update(extra)
    return meta


def _write_meta(out, meta):
    out.write("# " + " ".join(f"{k}={meta[k]}" for k in sorted(meta)) + "\n")


def _set(s):
    return sorted(s)


def cmd_classify(args, gcm, out):
    comps = components(gcm, gcm.index_set)
    report = {
        "matrix": [list(r) for r in gcm.entries],
        "symmetrizer": list(gcm.symmetrizer),
        "rank": gcm.rank_l,
        "realization_dim": 2 * gcm.n - gcm.rank_l,
        "completion_columns": list(build_realization(gcm).completion_columns),
        "components": [{"indices": _set(c), "type": str(classify_component(gcm, c))} for c in comps],
        "specials": [_set(s.theta) for s in gcm.specials],
        "orthogonal_complements": [
            {"theta": _set(s.theta), "perp": _set(orthogonal_complement(gcm, s.theta))} for s in gcm.specials
        ],
    }
    if args.format == "json":
        out.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        out.write(f"matrix: {report['matrix']}\n")
        out.write(f"symmetrizer: {report['symmetrizer']}\n")
        out.write(f"rank: {gcm.rank_l}  realization dim: {report['realization_dim']}\n")
        for c in comps:
            out.write(f"component {format_set(c)}: {classify_component(gcm, c)}\n")
        for s in gcm.specials:
            out.write(f"special {format_set(s.theta)}  perp {format_set(orthogonal_complement(gcm, s.theta))}\n")
    return EXIT_OK


def cmd_monoid(args, gcm, out):
    r = build_realization(gcm)
    parsed = []
    worst = Status.EXACT
    for w in args.words:
        x, st = parse_element(w, r, args.budget, args.window)
        parsed.append(x)
        if st is not Status.EXACT:
            worst = st
    op = args.op
    result: dict = {"meta": _budget_meta(args)}
    if op == "mul":
        if not parsed:
            raise UsageError("mul needs at least one element word")
        acc = parsed[0]
        for y in parsed[1:]:
            acc, st = multiply(acc, y, args.budget, args.window)
            if st is not Status.EXACT:
                worst = st
        result["product"] = element_word(acc)
        text = element_word(acc)
    elif op == "nf":
        if len(parsed) != 1:
            raise UsageError("nf needs exactly one element word")
        nfs = {fl: normal_form(parsed[0], fl) for fl in (TYPE1, TYPE2)}
        result["normal_forms"] = {
            fl: {
                "sigma1": list(nf.sigma1.reduced_word),
                "theta": _set(nf.theta),
                "sigma2": list(nf.sigma2.reduced_word),
                "word": str(nf),
            }
            for fl, nf in nfs.items()
        }
        text = "\n".join(f"{fl}: {nf}" for fl, nf in nfs.items())
    else:
        if len(parsed) != 2:
            raise UsageError("eq needs exactly two element words")
        equal = parsed[0] == parsed[1]
        result["equal"] = equal
        text = "equal" if equal else "not equal"
    result["status"] = str(worst)
    if args.format == "json":
        out.write(json.dumps(result, sort_keys=True) + "\n")
    else:
        _write_meta(out, dict(result["meta"], status=worst))
        out.write(text + "\n")
    return EXIT_OK if worst is Status.EXACT else EXIT_BUDGET


def cmd_enum(args, gcm, out):
    r = build_realization(gcm)
    els = enumerate_elements(r, args.bound)
    if args.format == "json":
        payload = {
            "meta": _budget_meta(args, bound=args.bound),
            "elements": [{"word": element_word(x), "theta": _set(x.theta)} for x in els],
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        _write_meta(out, _budget_meta(args, bound=args.bound, count=len(els)))
        for x in els:
            out.write(element_word(x) + "\n")
    return EXIT_OK


def cmd_poset(args, gcm, out):
    poset = orbit_poset(gcm)
    if args.format == "text":
        for s in poset.specials:
            out.write(f"{format_set(s.theta)}\n")
        for i, j in poset.hasse:
            out.write(f"{format_set(poset.specials[i].theta)} < {format_set(poset.specials[j].theta)}\n")
    else:
        out.write(emit(poset, args.format))
    return EXIT_OK


def cmd_strata(args, gcm, out):
    strata = birkhoff_strata(gcm, args.bound)
    if args.format == "json":
        payload = json.loads(emit(orbit_poset(gcm), "json", strata))
        payload["meta"] = _budget_meta(args, bound=args.bound)
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    elif args.format == "dot":
        out.write(emit(orbit_poset(gcm), "dot"))
    else:
        _write_meta(out, _budget_meta(args, bound=args.bound))
        for o, k in strata_counts(strata):
            out.write(f"{format_set(o.theta)}: {k}\n")
    return EXIT_OK


def cmd_bigcell(args, gcm, out):
    theta = frozenset(int(t) for t in args.theta.split(",") if t.strip()) if args.theta else frozenset()
    data = big_cell_data(gcm, theta, args.height)
    payload = {
        "theta": _set(data.theta.theta),
        "torus_rank": data.torus_rank,
        "torus_basis": list(data.torus_basis),
        "height_bound": data.height_bound,
        "positive_root_count": data.positive_root_count,
        "slice_specials": [_set(s.theta) for s in data.slice_specials],
        "note": data.note,
    }
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for k in sorted(payload):
            out.write(f"{k}: {payload[k]}\n")
    return EXIT_OK


def cmd_oracle_check(args, gcm, out):
    r = build_realization(gcm)
    els = enumerate_elements(r, args.bound)
    sample = build_sample(r, args.sample)
    maps = {x: to_partial_map(x, sample) for x in els}
    products = hom_failures = non_exact = eq_disagree = 0
    for x in els:
        for y in els:
            p, st = multiply(x, y, args.budget, args.window)
            products += 1
            if st is not Status.EXACT:
                non_exact += 1
                continue
            if not oracle_equal(to_partial_map(p, sample), oracle_multiply(maps[x], maps[y])):
                hom_failures += 1
            if (x == y) != oracle_equal(maps[x], maps[y]):
                eq_disagree += 1
    report = {
        "meta": _budget_meta(args, bound=args.bound, sample_orbit_length=args.sample),
        "elements": len(els),
        "sample_points": len(sample.points),
        "products": products,
        "non_exact_products": non_exact,
        "homomorphism_failures": hom_failures,
        "equality_disagreements_on_sample": eq_disagree,
    }
    if args.format == "json":
        out.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        _write_meta(out, report.pop("meta"))
        for k in sorted(report):
            out.write(f"{k}: {report[k]}\n")
    if hom_failures or eq_disagree:
        return EXIT_INPUT
    return EXIT_BUDGET if non_exact else EXIT_OK


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", help='JSON file {"matrix": [[...], ...]}')
    common.add_argument("--matrix", help="inline JSON matrix or object")
    common.add_argument("--gcm", help="catalog name (" + ", ".join(CATALOG) + ")")
    common.add_argument("--format", choices=("json", "dot", "text"), default="text")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--budget", type=_positive, default=DEFAULT_INTERSECT_BUDGET,
                        help="word-length budget for face intersections")
    common.add_argument("--window", type=_positive, default=DEFAULT_STABILITY_WINDOW,
                        help="stability window for face intersections")

    p = _Parser(prog="weylmonoid", description="Weyl monoid and Tits cone combinatorics of a GCM")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("classify", parents=[common])
    m = sub.add_parser("monoid", parents=[common])
    m.add_argument("op", choices=("mul", "nf", "eq"))
    m.add_argument("words", nargs="*")
    e = sub.add_parser("enum", parents=[common])
    e.add_argument("--bound", type=_nonneg, default=2)
    sub.add_parser("poset", parents=[common])
    s = sub.add_parser("strata", parents=[common])
    s.add_argument("--bound", type=_nonneg, default=2)
    b = sub.add_parser("bigcell", parents=[common])
    b.add_argument("--theta", default="")
    b.add_argument("--height", type=_positive, default=2)
    o = sub.add_parser("oracle-check", parents=[common])
    o.add_argument("--bound", type=_nonneg, default=2)
    o.add_argument("--sample", type=_positive, default=3)
    return p


COMMANDS = {
    "classify": cmd_classify,
    "monoid": cmd_monoid,
    "enum": cmd_enum,
    "poset": cmd_poset,
    "strata": cmd_strata,
    "bigcell": cmd_bigcell,
    "oracle-check": cmd_oracle_check,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        gcm = _load_gcm(args)
        if args.output:
            with open(args.output, "w") as fh:
                return COMMANDS[args.command](args, gcm, fh)
        return COMMANDS[args.command](args, gcm, stdout)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except WeylMonoidError as exc:
        pos = getattr(exc, "position", None)
        where = f" (position {pos})" if pos is not None else ""
        stderr.write(f"invalid input{where}: {exc}\n")
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line surface: classify classes, compute covers, evaluate bounds,
enumerate admissible sets, and list the built-in catalog.

Output is a readable table by default; --json emits a canonical document
(sorted keys, rationals as {"num", "den"} in lowest terms).  Exit status is
0 on success (including empty admissible sets), 1 on validation errors, and
2 on mathematically inconsistent input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import floor

from .admissible import (
    NECESSITY_NOTE,
    CharacteristicClass,
    DivisibleClass,
    Scenario,
    divisible_bound_outcomes,
    enumerate_admissible,
)
from .bounds import BoundOutcome, ConjectureParams, char_bound, conjectural_bound, furuta_conjecture_params
from .cover import PrimePower, betti_signature_check, branched_cover, furuta_check
from .errors import NegsqError, ValidationError
from .lattice import ManifoldModel, as_hom_class, catalog, catalog_entries, divisibility, manifold_from_json


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a rational number: {text!r}") from exc


def _parse_coords(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValidationError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_invariants(text: str) -> ManifoldModel:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValidationError(f"expected B2,SIGMA,SPIN, got {text!r}")
    try:
        b2, sigma = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ValidationError(f"b2 and sigma must be integers in {text!r}") from exc
    flag = parts[2].lower()
    if flag in ("spin", "true", "yes", "1"):
        spin = True
    elif flag in ("nonspin", "non-spin", "notspin", "false", "no", "0"):
        spin = False
    else:
        raise ValidationError(f"spin flag must be spin/nonspin (or true/false), got {parts[2]!r}")
    return ManifoldModel.from_invariants(b2, sigma, spin)


def _load_manifold(args) -> tuple[ManifoldModel, str]:
    if args.catalog:
        return catalog(args.catalog), f"catalog:{args.catalog}"
    if args.invariants:
        return _parse_invariants(args.invariants), "invariants"
    try:
        with open(args.gram, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {args.gram}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{args.gram} is not valid JSON: {exc}") from exc
    return manifold_from_json(doc), f"file:{args.gram}"


def render_json(doc: dict) -> str:
    """Canonical JSON rendering: sorted keys, two-space indent."""
    return json.dumps(doc, sort_keys=True, indent=2)


def _rational_json(value: Fraction) -> dict:
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def _exact_decimal(value: Fraction):
    """Exact decimal string when the denominator is of the form 2^a * 5^b."""
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    k = max(twos, fives)
    digits = str(abs(int(value * 10**k))).rjust(k + 1, "0")
    sign = "-" if value < 0 else ""
    return f"{sign}{digits[:-k]}.{digits[-k:]}" if k else f"{sign}{digits}"


def _format_value(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    text = f"{value.numerator}/{value.denominator}"
    decimal = _exact_decimal(value)
    if decimal is not None:
        return f"{text} (= {decimal}, floor {floor(value)})"
    return f"{text} (floor {floor(value)})"


def _outcome_json(outcome: BoundOutcome) -> dict:
    return {
        "theorem": outcome.theorem.value,
        "applicable": outcome.applicable,
        "hypotheses": [{"name": name, "satisfied": ok} for name, ok in outcome.hypotheses],
        "value": None if outcome.value is None else _rational_json(outcome.value),
    }


def _outcome_lines(outcomes) -> list[str]:
    lines = []
    for outcome in outcomes:
        value = "-" if outcome.value is None else _format_value(outcome.value)
        lines.append(f"  {outcome.theorem.value:<20} {'applies' if outcome.applicable else 'does not apply':<15} {value}")
        for name, ok in outcome.hypotheses:
            lines.append(f"      [{'ok' if ok else 'unmet'}] {name}")
    return lines


def _binding_lines(outcomes) -> list[str]:
    applicable = [o for o in outcomes if o.applicable]
    if not applicable:
        return ["binding bound: none (no hypothesis set is satisfied)"]
    best = min(applicable, key=lambda o: o.value)
    return [f"binding bound: {_format_value(best.value)} ({best.theorem.value})"]


def _spin_text(spin) -> str:
    if spin is None:
        return "unknown"
    return "yes" if spin else "no"


def _doc(command: str, inputs: dict, outcomes: list, candidates: list, warnings: list) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "outcomes": outcomes,
        "candidates": candidates,
        "warnings": warnings,
    }


def _manifold_json(model: ManifoldModel, source: str) -> dict:
    return {"b2": model.b2, "sigma": model.sigma, "spin": model.spin, "source": source}


def _manifold_lines(model: ManifoldModel, source: str, warnings) -> list[str]:
    lines = [f"manifold: {model.describe()} [{source}]"]
    lines.extend(f"warning: {w}" for w in warnings)
    return lines


def _cmd_classify(args):
    model, source = _load_manifold(args)
    if model.gram is None:
        raise ValidationError("classification needs a Gram matrix; use --catalog or --gram")
    form = model.gram
    coords = as_hom_class(_parse_coords(args.hom_class), form.rank)
    result = {
        "class": list(coords),
        "square": form.square(coords),
        "divisibility": divisibility(coords),
        "characteristic": form.is_characteristic(coords),
        "form_even": form.is_even(),
    }
    warnings = list(model.smoothness_warnings())
    doc = _doc("classify", {"manifold": _manifold_json(model, source), "class": list(coords)}, [result], [], warnings)
    lines = _manifold_lines(model, source, warnings)
    lines += [
        f"class: {coords}",
        f"  square:         {result['square']}",
        f"  divisibility:   {result['divisibility']}",
        f"  characteristic: {'yes' if result['characteristic'] else 'no'}",
        f"  form parity:    {'even' if result['form_even'] else 'odd'}",
    ]
    return doc, lines


def _cmd_cover(args):
    model, source = _load_manifold(args)
    q = PrimePower(args.q)
    quotient_char = None
    if args.branch_class is not None:
        if model.gram is None:
            raise ValidationError("--branch-class needs a Gram matrix; use --catalog or --gram")
        if args.quotient_characteristic is not None:
            raise ValidationError("--quotient-characteristic is computed from the class; do not pass both")
        coords = as_hom_class(_parse_coords(args.branch_class), model.gram.rank)
        div = divisibility(coords)
        if div % q.q != 0:
            raise ValidationError(f"branch class has divisibility {div}, not divisible by q = {q.q}")
        branch_square = model.gram.square(coords)
        quotient = tuple(c // q.q for c in coords)
        quotient_char = model.gram.is_characteristic(quotient)
    else:
        branch_square = args.branch_square
        if args.quotient_characteristic is not None:
            quotient_char = args.quotient_characteristic == "yes"
    inv = branched_cover(
        q,
        model.b2,
        model.sigma,
        args.branch_genus,
        branch_square,
        base_spin=model.spin,
        branch_class_over_q_characteristic=quotient_char,
    )
    betti_ok = betti_signature_check(inv.b2, inv.sigma)
    furuta_ok = furuta_check(inv.b2, inv.sigma)
    result = {
        "q": q.q,
        "b2": inv.b2,
        "sigma": inv.sigma,
        "spin": inv.spin,
        "betti_signature_ok": betti_ok,
        "furuta_ok": furuta_ok,
    }
    warnings = list(model.smoothness_warnings())
    inputs = {
        "manifold": _manifold_json(model, source),
        "q": q.q,
        "branch_genus": args.branch_genus,
        "branch_square": branch_square,
    }
    doc = _doc("cover", inputs, [result], [], warnings)
    lines = _manifold_lines(model, source, warnings)
    lines += [
        f"cover: q = {q.q} (= {q.p}^{q.r}), branch genus {args.branch_genus}, branch square {branch_square}",
        f"  b2(cover):    {inv.b2}",
        f"  sigma(cover): {inv.sigma}",
        f"  spin(cover):  {_spin_text(inv.spin)}",
        f"  b2 >= |sigma|:         {'holds' if betti_ok else 'FAILS'} ({inv.b2} vs {abs(inv.sigma)})",
        f"  4*b2 >= 5*|sigma| + 8: {'holds' if furuta_ok else 'FAILS'} ({4 * inv.b2} vs {5 * abs(inv.sigma) + 8})"
        " [meaningful for spin covers]",
    ]
    return doc, lines


def _conjecture_params(args, model: ManifoldModel) -> ConjectureParams:
    if (args.c is None) != (args.kappa is None):
        raise ValidationError("--c and --kappa must be given together")
    if args.c is not None:
        return ConjectureParams(c=_parse_rational(args.c), kappa=_parse_rational(args.kappa))
    return furuta_conjecture_params(model.b2, model.sigma)


def _cmd_bound(args):
    model, source = _load_manifold(args)
    if not (args.divisible or args.characteristic or args.conjectural):
        raise ValidationError("choose at least one of --divisible, --characteristic, --conjectural")
    if args.quotient_characteristic and not args.divisible:
        raise ValidationError("--quotient-characteristic only makes sense with --divisible")
    if (args.c is not None or args.kappa is not None) and not args.conjectural:
        raise ValidationError("--c/--kappa only make sense with --conjectural")
    outcomes: list[BoundOutcome] = []
    conjectural_banner = False
    if args.divisible:
        outcomes.extend(
            divisible_bound_outcomes(
                PrimePower(args.divisible), model.b2, model.sigma, args.genus, model.spin, args.quotient_characteristic
            )
        )
    if args.characteristic:
        outcomes.append(char_bound(model.b2, model.sigma, args.genus))
    if args.conjectural:
        outcomes.append(conjectural_bound(_conjecture_params(args, model), args.genus))
        conjectural_banner = True
    warnings = list(model.smoothness_warnings())
    inputs = {
        "manifold": _manifold_json(model, source),
        "genus": args.genus,
        "divisible": args.divisible,
        "characteristic": args.characteristic,
        "conjectural": args.conjectural,
    }
    doc = _doc("bound", inputs, [_outcome_json(o) for o in outcomes], [], warnings)
    lines = _manifold_lines(model, source, warnings)
    lines.append(f"genus: {args.genus}")
    if conjectural_banner:
        lines.append("NOTE: conjectural values are conditional on an open conjecture and prove nothing by themselves")
    lines.append("upper bounds on N = -(self-intersection):")
    lines += _outcome_lines(outcomes)
    lines += _binding_lines(outcomes)
    return doc, lines


def _cmd_admissible(args):
    if args.sphere and args.divisible:
        raise ValidationError("--sphere only makes sense with --characteristic")
    if args.quotient_characteristic and args.divisible is None:
        raise ValidationError("--quotient-characteristic only makes sense with --divisible")
    model, source = _load_manifold(args)
    if args.divisible:
        kind = DivisibleClass(PrimePower(args.divisible), bool(args.quotient_characteristic))
    else:
        kind = CharacteristicClass(sphere=bool(args.sphere))
    scenario = Scenario(model, args.genus, kind)
    report = enumerate_admissible(scenario)
    warnings = list(model.smoothness_warnings())
    inputs = {
        "manifold": _manifold_json(model, source),
        "genus": args.genus,
        "divisible": args.divisible,
        "characteristic": not args.divisible,
        "sphere": bool(args.sphere) if not args.divisible else False,
        "filters": list(report.filters),
    }
    doc = _doc("admissible", inputs, [_outcome_json(o) for o in report.bounds], list(report.candidates), warnings)
    lines = _manifold_lines(model, source, warnings)
    lines.append(f"genus: {args.genus}")
    lines.append("bounds evaluated:")
    lines += _outcome_lines(report.bounds)
    lines.append("filters: " + "; ".join(report.filters))
    if report.candidates:
        lines.append(f"admissible N ({len(report.candidates)} value(s)): " + " ".join(str(n) for n in report.candidates))
    else:
        lines.append("admissible N: none")
    lines.append(f"note: {NECESSITY_NOTE}")
    return doc, lines


def _cmd_catalog(args):
    entries = [dict(e) for e in catalog_entries()]
    doc = _doc("catalog", {}, entries, [], [])
    lines = [f"{'name':<8} {'b2':>6} {'sigma':>6}  spin"]
    for e in entries:
        lines.append(f"{e['name']:<8} {e['b2']!s:>6} {e['sigma']!s:>6}  {'yes' if e['spin'] else 'no'}")
    lines.append("cp2-k takes any k >= 1, e.g. cp2-3")
    return doc, lines


def _add_manifold_arguments(parser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--catalog", metavar="NAME", help="built-in manifold: k3, cp2, cp2-K, s2xs2")
    group.add_argument("--invariants", metavar="B2,SIGMA,SPIN", help="abstract invariants, e.g. 22,-16,spin")
    group.add_argument("--gram", metavar="FILE", help='JSON file: {"gram": [[..],..]} or {"b2":..,"sigma":..,"spin":..}')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="negsq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="square, divisibility, characteristic flag of a class")
    _add_manifold_arguments(p)
    p.add_argument("--class", dest="hom_class", required=True, metavar="C1,C2,...", help="class coordinates")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("cover", help="invariants of a cyclic branched cover")
    _add_manifold_arguments(p)
    p.add_argument("--q", type=int, required=True, help="covering degree (prime power)")
    p.add_argument("--branch-genus", type=int, required=True, metavar="G", help="genus of the branch surface")
    branch = p.add_mutually_exclusive_group(required=True)
    branch.add_argument("--branch-square", type=int, metavar="S", help="self-intersection of the branch surface")
    branch.add_argument("--branch-class", metavar="C1,C2,...", help="branch class coordinates (needs a Gram matrix)")
    p.add_argument(
        "--quotient-characteristic",
        choices=("yes", "no"),
        help="whether (1/q) of the branch class is characteristic (for even q with --branch-square)",
    )
    p.set_defaults(handler=_cmd_cover)

    p = sub.add_parser("bound", help="evaluate every applicable upper bound on N")
    _add_manifold_arguments(p)
    p.add_argument("--genus", type=int, default=0, help="genus of the surface (default 0)")
    p.add_argument("--divisible", type=int, metavar="Q", help="class divisible by the prime power Q")
    p.add_argument(
        "--quotient-characteristic",
        action="store_true",
        help="assert that the class divided by Q is characteristic",
    )
    p.add_argument("--characteristic", action="store_true", help="class is characteristic")
    p.add_argument("--conjectural", action="store_true", help="include the conjecture-conditional bound")
    p.add_argument("--c", metavar="RAT", help="conjectural constant c (rational, e.g. 16/5)")
    p.add_argument("--kappa", metavar="RAT", help="conjectural slope kappa (rational, must be < 4)")
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("admissible", help="enumerate candidate values of N")
    _add_manifold_arguments(p)
    p.add_argument("--genus", type=int, default=0, help="genus of the surface (default 0)")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--divisible", type=int, metavar="Q", help="class divisible by the prime power Q")
    kind.add_argument("--characteristic", action="store_true", help="class is characteristic")
    p.add_argument(
        "--quotient-characteristic",
        action="store_true",
        help="assert that the class divided by Q is characteristic",
    )
    p.add_argument("--sphere", action="store_true", help="restrict to spheres (genus 0, mod-16 congruence)")
    p.set_defaults(handler=_cmd_admissible)

    p = sub.add_parser("catalog", help="list built-in manifolds")
    p.set_defaults(handler=_cmd_catalog)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", help="emit a canonical JSON report")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc, lines = args.handler(args)
    except NegsqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.json:
        print(render_json(doc))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())

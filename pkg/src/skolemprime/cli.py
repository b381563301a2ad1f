"""Command-line entry point: ``skolemprime {decide,eval,field-info,gen-hardness}``.

Exit codes: 0 no zero, 10 zero found, 20 unresolved, 1 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arith, document, hardness
from .errors import SkolemError
from .lrs import eval_exp_poly, eval_exp_poly_mod, eval_recurrence, eval_recurrence_mod
from .number_field import NumberField, ramified_candidates, splitting_data
from .skolem import (DecideConfig, InertialFamily, PrimePower, PrimePowerMultiple, SumFamily,
                     decide, summarize_value)

EXIT_NO_ZERO, EXIT_ZERO, EXIT_UNRESOLVED, EXIT_INPUT = 0, 10, 20, 1
OUTCOME_EXIT = {"no_zero": EXIT_NO_ZERO, "zero_found": EXIT_ZERO, "unresolved": EXIT_UNRESOLVED}


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _sum_pattern(text: str) -> list:
    try:
        pairs = []
        for item in text.split(","):
            l, k = item.split(":")
            pairs.append((int(l), int(k)))
        return pairs
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'l1:k1,l2:k2,...', got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skolemprime",
                                 description="Zeros of linear recurrences at prime-power indices")
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", help="decide whether a family index is a zero")
    d.add_argument("input")
    d.add_argument("--family", choices=["prime-power", "multiple", "inertial", "sum"],
                   default="prime-power")
    d.add_argument("--c", type=int, help="family bound c (default 1; unbounded for sum patterns)")
    d.add_argument("--k-min", type=int, default=0,
                   help="smallest exponent k; 1 restricts prime-power to n = p")
    d.add_argument("--sum-pattern", type=_sum_pattern)
    d.add_argument("--exact-ceiling", type=int, default=DecideConfig.exact_ceiling)
    d.add_argument("--witnesses", type=int, default=DecideConfig.witness_count)
    d.add_argument("--seed", type=int, default=DecideConfig.witness_seed)
    d.add_argument("--workers", type=int, default=1)
    d.add_argument("--json", action="store_true", help="print the JSON report")

    e = sub.add_parser("eval", help="evaluate a term exactly or modulo a prime")
    e.add_argument("input")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--mod", type=int)

    f = sub.add_parser("field-info", help="splitting data and ramified candidates")
    f.add_argument("input")
    f.add_argument("--primes", type=_int_list, default=[])

    g = sub.add_parser("gen-hardness", help="encode a subset-sum instance as a sequence")
    g.add_argument("--a", type=_int_list, required=True)
    g.add_argument("--b", type=int, required=True)
    g.add_argument("--variant", choices=["prime", "cyclotomic"], default="prime")
    g.add_argument("-o", "--output", required=True)
    return ap


def _family(args):
    if args.family == "sum":
        if not args.sum_pattern:
            raise SkolemError("--family sum needs --sum-pattern")
        return SumFamily(args.sum_pattern, c=args.c)
    cls = {"prime-power": PrimePower, "multiple": PrimePowerMultiple,
           "inertial": InertialFamily}[args.family]
    return cls(1 if args.c is None else args.c, k_min=args.k_min)


def cmd_decide(args, out) -> int:
    doc = document.load(args.input)
    config = DecideConfig(exact_ceiling=args.exact_ceiling, witness_count=args.witnesses,
                          witness_seed=args.seed, workers=args.workers)
    report = decide(doc.sequence(), _family(args), config)
    if args.json:
        print(report.to_json(), file=out)
    else:
        _print_report(report, out)
    return OUTCOME_EXIT[report.outcome]


def _print_report(report, out):
    fam = report.family
    print(f"family: {fam['name']} " + " ".join(f"{k}={v}" for k, v in fam.items() if k != "name"),
          file=out)
    print(f"outcome: {report.outcome}", file=out)
    if report.zero:
        print("zero: " + " ".join(f"{k}={v}" for k, v in report.zero.items()), file=out)
    if report.short_circuit:
        print("every A_i(0) vanishes, so u_0 = 0", file=out)
    for l, val in report.multipliers:
        print(f"l={l}: v_l={val} norm={report.norms.get(l)} "
              f"candidates={report.candidates.get(l, [])}", file=out)
    for r in report.ramified_handled:
        print(f"ramified candidate p={r['p']}: {r['status']} e={r['e']} f={r['f']} g={r['g']}",
              file=out)
    for ev in report.evidence:
        how = f"witness q={ev.witness}" if ev.method == "witness" else ev.method
        val = f" value={ev.value}" if ev.value is not None else ""
        print(f"  n={ev.n} ({ev.role}, l={ev.ell}, k={ev.k}, p={ev.p}, f={ev.f}): "
              f"{ev.status} [{how}]{val}", file=out)
    for ob in report.obstructions:
        print(f"obstruction: {ob}", file=out)


def cmd_eval(args, out) -> int:
    doc = document.load(args.input)
    if args.mod is not None:
        if doc.terms is None and doc.roots is None:
            print(eval_recurrence_mod(doc.recurrence, args.n, args.mod), file=out)
            return 0
        image = eval_exp_poly_mod(_integral(doc), args.n, args.mod)
        print(image[0] if len(image) == 1 else list(image), file=out)
        return 0
    if doc.terms is None and doc.roots is None:
        val = doc.field.element([eval_recurrence(doc.recurrence, args.n)])
    else:
        val = eval_exp_poly(doc.sequence(), args.n)
    coords = [str(c) for c in val.coords]
    print(coords[0] if val.is_rational else coords, file=out)
    summary = summarize_value(val, full_limit=40)
    if summary != coords:
        print("summary: " + (summary[0] if val.is_rational else str(summary)), file=out)
    return 0


def _integral(doc):
    seq = doc.sequence()
    if not seq.integral_certified:
        raise SkolemError("modular evaluation needs integral coordinates")
    return seq


def cmd_field_info(args, out) -> int:
    doc = document.load(args.input)
    K = doc.field
    print(f"field: {list(K.defining_poly)} degree={K.degree} galois={K.galois_claimed}", file=out)
    if K.degree > 1:
        print(f"discriminant: {arith.discriminant(K.defining_poly)}", file=out)
    print(f"ramified candidates: {list(ramified_candidates(K))}", file=out)
    for p in args.primes:
        sd = splitting_data(K, p)
        print(f"p={p}: e={sd.e} f={sd.f} g={sd.g} {sd.status}", file=out)
    return 0


def cmd_gen_hardness(args, out) -> int:
    variant = "one_phase" if args.variant == "prime" else "zero_phase"
    inst = hardness.SubsetSumInstance(args.a, args.b)
    spec = hardness.reduce_to_lrs(inst, variant)
    built = hardness.cyclotomic_roots(inst, variant)
    if built is None:
        K, roots = NumberField.rationals(), None
    else:
        K, roots = built
    doc = document.SequenceDocument(K, recurrence=spec, roots=roots)
    document.dump(doc, args.output)
    subset = hardness.subset_sum_bruteforce(inst)
    primes = hardness.selector_primes(inst.m, variant)
    meta = {"a": list(inst.a), "b": inst.b, "variant": args.variant,
            "selector_primes": primes, "solvable": subset is not None,
            "subset": list(subset) if subset is not None else None}
    if subset is not None:
        if variant == "one_phase":
            meta["witness_prime"] = hardness.prime_in_progression(
                hardness.residue_system(subset, inst.m))
        else:
            meta["witness_index"] = 1
            for k in subset:
                meta["witness_index"] *= primes[k - 1]
    with open(args.output + ".meta.json", "w", encoding="utf-8") as fh:
        fh.write(json.dumps(meta, indent=2) + "\n")
    print(f"wrote {args.output} (order {spec.order}); "
          + ("solvable" if subset is not None else "unsolvable"), file=out)
    return 0


COMMANDS = {"decide": cmd_decide, "eval": cmd_eval, "field-info": cmd_field_info,
            "gen-hardness": cmd_gen_hardness}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        return COMMANDS[args.command](args, out)
    except (SkolemError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

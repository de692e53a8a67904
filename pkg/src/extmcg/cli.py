"""Command line front end.

Every subcommand wraps exactly one library operation (verify-all wraps
the acceptance suite).  --json switches to the documented JSON schemas.
Exit codes: 0 success, 1 domain/validation error (non-member matrix,
coset cap, out-of-domain parameter), 2 malformed input (bad word syntax,
undecodable JSON, unknown subcommand).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ambient_geom, classifier, f2_forms, sl2z, smallgrp, verify


class ParseInputError(ValueError):
    pass


def _load_json(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseInputError(f"bad JSON: {exc}") from None


def _refinement_from_json(text: str) -> f2_forms.QuadraticRefinement:
    data = _load_json(text)
    if not isinstance(data, dict) or "basis_values" not in data:
        raise ParseInputError("expected {\"basis_values\": [...], \"gram\": optional}")
    values = tuple(data["basis_values"])
    if "gram" in data:
        space = f2_forms.SymplecticSpaceF2(tuple(tuple(r) for r in data["gram"]))
    else:
        if len(values) % 2:
            raise ParseInputError("basis_values length must be even")
        space = f2_forms.standard_space(len(values) // 2)
    return f2_forms.QuadraticRefinement(space, values)


def _group_from_arg(text: str) -> smallgrp.MulTableGroup:
    """Named shorthand (cyclic:n, dihedral:n, quaternion:8, klein, trivial,
    e-even) or a JSON table {"table": [[...]]}."""
    if text.lstrip().startswith("{"):
        data = _load_json(text)
        if "table" not in data:
            raise ParseInputError("expected {\"table\": [[...]]}")
        return smallgrp.MulTableGroup(tuple(tuple(r) for r in data["table"]))
    name, colon, arg = text.partition(":")
    builders = {"klein": smallgrp.klein, "trivial": lambda: smallgrp.cyclic(1),
                "e-even": smallgrp.build_E_even}
    if name in builders and not colon:
        return builders[name]()
    sized = {"cyclic": smallgrp.cyclic, "dihedral": smallgrp.dihedral,
             "quaternion": smallgrp.quaternion}
    if name in sized and colon:
        try:
            n = int(arg)
        except ValueError:
            raise ParseInputError(f"bad group size in {text!r}") from None
        return sized[name](n)
    raise ParseInputError(f"unknown group shorthand {text!r}")


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def cmd_arf(args) -> int:
    q = _refinement_from_json(args.refinement)
    value = f2_forms.arf(q)
    _emit(args, {"arf": value}, str(value))
    return 0


def cmd_stabilizer(args) -> int:
    q = _refinement_from_json(args.refinement)
    elems = f2_forms.stabilizer(q)
    mats = [[list(row) for row in s.matrix] for s in elems]
    if args.json:
        print(json.dumps({"order": len(elems), "elements": mats}))
    else:
        print(f"order {len(elems)}")
        for m in mats:
            print(" / ".join(" ".join(str(e) for e in row) for row in m))
    return 0


def cmd_orbit(args) -> int:
    q = _refinement_from_json(args.refinement)
    elems = f2_forms.orbit(q)
    values = [list(t.basis_values) for t in elems]
    if args.json:
        print(json.dumps({"order": len(elems), "elements": values}))
    else:
        print(f"order {len(elems)}")
        for v in values:
            print(" ".join(str(e) for e in v))
    return 0


def cmd_enumerate_sp(args) -> int:
    elems = f2_forms.enumerate_sp(args.k)
    payload: dict = {"k": args.k, "order": len(elems)}
    if not args.count:
        payload["elements"] = [[list(row) for row in s.matrix] for s in elems]
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"order {len(elems)}")
        if not args.count:
            for s in elems:
                print(" / ".join(" ".join(str(e) for e in row) for row in s.matrix))
    return 0


def cmd_member(args) -> int:
    m = sl2z.UniModMat2.from_json(_load_json(args.matrix))
    result = sl2z.is_member(m)
    _emit(args, {"member": result}, "true" if result else "false")
    return 0


def cmd_mod2(args) -> int:
    m = sl2z.UniModMat2.from_json(_load_json(args.matrix))
    cls = sl2z.reduce_mod2(m)
    _emit(args, {"class": cls}, cls)
    return 0


def cmd_decompose(args) -> int:
    m = sl2z.UniModMat2.from_json(_load_json(args.matrix))
    sl2z.require_member(m)
    word = sl2z.decompose(m)
    _emit(args, {"word": str(word), "sign": word.sign,
                 "tokens": [[g, e] for g, e in word.tokens]}, str(word))
    return 0


def cmd_eval_word(args) -> int:
    word = sl2z.parse_word(args.word)
    m = sl2z.eval_word(word)
    _emit(args, m.to_json(), f"{m.a} {m.b} / {m.c} {m.d}")
    return 0


def cmd_coset_enum(args) -> int:
    pres = smallgrp.parse_presentation(args.presentation)
    group = smallgrp.todd_coxeter(pres, max_cosets=args.max_cosets)
    _emit(args, {"order": group.order, "generators": list(pres.generators)},
          f"order {group.order}")
    return 0


def cmd_isomorphic(args) -> int:
    g = _group_from_arg(args.first)
    h = _group_from_arg(args.second)
    ok, witness = smallgrp.is_isomorphic(g, h)
    _emit(args, {"isomorphic": ok,
                 "witness": list(witness) if witness else None},
          "true" if ok else "false")
    return 0


def _build_variant(variant: str, p: int, q: int | None) -> ambient_geom.SignedPermMatrix:
    if variant == "plain":
        return ambient_geom.build_omega(p)
    if variant == "hat":
        return ambient_geom.build_omega_hat(p)
    return ambient_geom.build_omega_prime(p, q if q is not None else p)


def cmd_build_omega(args) -> int:
    m = _build_variant(args.variant, args.p, args.q)
    if args.json:
        print(json.dumps(m.to_json()))
    else:
        print(f"size {m.size}, determinant {m.determinant()}, order {m.order()}")
        for row, (col, sign) in enumerate(m.image):
            print(f"{row} -> {col} ({'+' if sign > 0 else '-'})")
    return 0


def cmd_induced_action(args) -> int:
    if args.matrix is not None:
        m = ambient_geom.SignedPermMatrix.from_json(_load_json(args.matrix))
        if args.p is None:
            raise ParseInputError("--p is required with an explicit matrix")
        p = args.p
        q = args.q if args.q is not None else p
    elif args.variant is not None:
        if args.p is None:
            raise ParseInputError("--p is required with --variant")
        p = args.p
        q = args.q if args.q is not None else p
        m = _build_variant(args.variant, p, args.q)
    else:
        raise ParseInputError("give a sparse matrix JSON or --variant")
    desc = ambient_geom.restrict_to_product(m, p, q)
    action = ambient_geom.induced_homology_action(desc)
    _emit(args, {"rows": [list(r) for r in action.rows]},
          " / ".join(" ".join(str(e) for e in row) for row in action.rows))
    return 0


def cmd_classify(args) -> int:
    kind = args.family
    if kind == "unknot-sphere":
        if args.n is None:
            raise ParseInputError("--n is required for unknot-sphere")
        family = classifier.KnotFamily.unknot_sphere(args.n)
    elif kind == "equal-product":
        if args.p is None:
            raise ParseInputError("--p is required for equal-product")
        family = classifier.KnotFamily.equal_product(args.p)
    elif kind == "unequal-product":
        if args.p is None or args.q is None:
            raise ParseInputError("--p and --q are required for unequal-product")
        family = classifier.KnotFamily.unequal_product(args.p, args.q)
    else:
        if args.p is None:
            raise ParseInputError("--p is required for adjacent-product")
        family = classifier.KnotFamily.adjacent_product(args.p)
    result = classifier.classify(family).to_json()
    if args.json:
        print(json.dumps(result))
    else:
        print(result["manifold"])
        for label in ("image", "kernel", "total"):
            value = result[label]
            extra = f" ({result[label + '_reason']})" if value is None else ""
            print(f"  {label}: {value if value is not None else 'unknown'}{extra}")
        splits = result["splits"]
        print(f"  splits: {'unknown' if splits is None else splits}")
        print(f"  citations: {', '.join(result['citations'])}")
    return 0


def cmd_verify_all(args) -> int:
    results = verify.run_all()
    if args.json:
        print(json.dumps([{"name": r.name, "passed": r.passed,
                           "detail": r.detail, "citations": list(r.citations)}
                          for r in results]))
    else:
        print(verify.format_report(results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extmcg",
        description="exact algebra for extendable mapping class groups of "
                    "sphere products")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(fn=fn)
        return p

    p = add("arf", cmd_arf, "Arf invariant of a quadratic refinement")
    p.add_argument("refinement", help='{"basis_values": [...], "gram": optional}')
    p = add("stabilizer", cmd_stabilizer, "symplectic stabilizer of a refinement")
    p.add_argument("refinement")
    p = add("orbit", cmd_orbit, "symplectic orbit of a refinement")
    p.add_argument("refinement")
    p = add("enumerate-sp", cmd_enumerate_sp, "list Sp(2k,2)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count", action="store_true", help="order only")
    p = add("member", cmd_member, "row products both even?")
    p.add_argument("matrix", help='{"rows": [[a, b], [c, d]]}')
    p = add("mod2", cmd_mod2, "congruence class mod 2 (Id, V or Other)")
    p.add_argument("matrix")
    p = add("decompose", cmd_decompose, "normal-form word for a member matrix")
    p.add_argument("matrix")
    p = add("eval-word", cmd_eval_word, "multiply out a word in V and T")
    p.add_argument("word", help="e.g. 'V T^2' or '- V T^-1' or 'e'")
    p = add("coset-enum", cmd_coset_enum, "order of a finitely presented group")
    p.add_argument("presentation", help="'gens: a,b; rels: a^2, [a,b]'")
    p.add_argument("--max-cosets", type=int, default=100_000)
    p = add("isomorphic", cmd_isomorphic, "isomorphism test for small groups")
    p.add_argument("first", help="cyclic:n, dihedral:n, quaternion:8, klein, "
                                 "trivial, e-even, or JSON table")
    p.add_argument("second")
    p = add("build-omega", cmd_build_omega, "ambient rotation matrices")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--variant", choices=("plain", "hat", "prime"), default="plain")
    p = add("induced-action", cmd_induced_action, "2x2 homology action")
    p.add_argument("matrix", nargs="?", help="sparse signed permutation JSON")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--variant", choices=("plain", "hat", "prime"))
    p = add("classify", cmd_classify, "image / kernel / total classification")
    p.add_argument("--family", required=True,
                   choices=("unknot-sphere", "equal-product", "unequal-product",
                            "adjacent-product"))
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    add("verify-all", cmd_verify_all, "run the acceptance checks")
    return parser


PARSE_ERRORS = (ParseInputError, sl2z.WordSyntaxError, smallgrp.PresentationError)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: parse table files, dispatch, print text or JSON."""
from __future__ import annotations

import argparse
import json
import sys

from . import (classify, enumerate_right_congruences, find_x_sequence,
               green_data, maximal_subgroups, minimal_generating_pairs,
               pair_set, rc_diameter, rc_generate, schutzenberger)
from .congruence import CapExceeded, Disconnected, FORMAL_IDENTITY
from .core import FiniteSemigroup, Transformation, from_cayley, from_transformations
from .green import GreenData
from .structure import (ReesStructure, archimedean_decomposition,
                        cr_decomposition, diagonal_cyclic_witness,
                        rees_construct, rees_coordinates, rees_structure,
                        theta_congruence)
from .verify import (ideal_subsemigroup, sweep, verify_dp_gens,
                     verify_extend_gens, verify_fg_gens, verify_ideal_gens,
                     verify_lclass_gens, verify_quotient_gens,
                     verify_schutz_gens)


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str):
    """(line_number, tokens) for every non-blank, non-comment line."""
    out = []
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((num, line.split()))
    return out


def _ints(tokens, num):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(num, f"expected integers, got {' '.join(tokens)}")


def parse_input(text: str, fmt: str = "auto") -> tuple[FiniteSemigroup, ReesStructure | None]:
    """Parse one of the table formats; returns the structure too for rees input."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError(0, "empty input")
    num, head = lines[0]
    kind = head[0].lower()
    if fmt != "auto" and kind != fmt:
        raise ParseError(num, f"expected {fmt} input, found {kind}")
    if kind == "cayley":
        if len(head) != 2:
            raise ParseError(num, "usage: cayley <n>")
        n = int(head[1])
        if len(lines) != 1 + n:
            raise ParseError(num, f"expected {n} table rows")
        rows = [_ints(tokens, ln) for ln, tokens in lines[1:]]
        return from_cayley(n, rows), None
    if kind == "transformation":
        if len(head) != 3:
            raise ParseError(num, "usage: transformation <degree> <count>")
        degree, count = int(head[1]), int(head[2])
        if len(lines) != 1 + count:
            raise ParseError(num, f"expected {count} generator rows")
        gens = []
        for ln, tokens in lines[1:]:
            images = _ints(tokens, ln)
            if len(images) != degree:
                raise ParseError(ln, f"expected {degree} images")
            gens.append(Transformation(degree, tuple(images)))
        return from_transformations(degree, gens), None
    if kind == "rees":
        if len(head) != 5:
            raise ParseError(num, "usage: rees <|G|> <|I|> <|J|> <zero:0|1>")
        ng, isz, jsz, wz = (int(v) for v in head[1:])
        need = 1 + ng + jsz
        if len(lines) != need:
            raise ParseError(num, f"expected {need - 1} content rows after header")
        gtable = [_ints(tokens, ln) for ln, tokens in lines[1:1 + ng]]
        group = from_cayley(ng, gtable)
        p = []
        for ln, tokens in lines[1 + ng:]:
            row = []
            for t in tokens:
                row.append(None if t == "-" else int(t))
            if len(row) != isz:
                raise ParseError(ln, f"expected {isz} matrix entries")
            p.append(row)
        r = rees_structure(group, isz, jsz, p, with_zero=bool(wz))
        return rees_construct(r), r
    raise ParseError(num, f"unknown format {kind!r}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def parse_pairs(text: str, s: FiniteSemigroup):
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split()
        if len(parts) != 2:
            raise ParseError(0, f"bad pair {chunk!r}; expected 'a b'")
        pairs.append((int(parts[0]), int(parts[1])))
    return pair_set(s, pairs)


def congruence_json(rho) -> dict:
    return {"index": rho.index, "classes": rho.classes()}


def _cayley_text(s: FiniteSemigroup) -> str:
    lines = [f"cayley {s.size}"]
    for row in s.table:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines)


def _rees_text(r: ReesStructure) -> str:
    lines = [f"rees {r.group.size} {r.i_size} {r.j_size} {1 if r.with_zero else 0}"]
    for row in r.group.table:
        lines.append(" ".join(str(v) for v in row))
    for row in r.p_matrix:
        lines.append(" ".join("-" if v is None else str(v) for v in row))
    return "\n".join(lines)


def _egg_box(gd: GreenData) -> dict:
    s = gd.parent
    d_ids = sorted(set(gd.d_class))
    out = []
    for d in d_ids:
        members = [x for x in range(s.size) if gd.d_class[x] == d]
        r_ids = sorted({gd.r_class[x] for x in members})
        l_ids = sorted({gd.l_class[x] for x in members})
        h_size = len([x for x in members
                      if gd.h_class[x] == gd.h_class[members[0]]])
        out.append({"R_rows": len(r_ids), "L_cols": len(l_ids),
                    "H_size": h_size,
                    "is_group": any(gd.h_class[x] in gd.group_h_classes
                                    for x in members)})
    return {"D": out}


def _egg_box_grid(gd: GreenData) -> str:
    s = gd.parent
    lines = []
    for d in sorted(set(gd.d_class)):
        members = [x for x in range(s.size) if gd.d_class[x] == d]
        r_ids = sorted({gd.r_class[x] for x in members})
        l_ids = sorted({gd.l_class[x] for x in members})
        lines.append(f"D-class {d}: {len(r_ids)} x {len(l_ids)}")
        for r in r_ids:
            cells = []
            for l in l_ids:
                cell = [x for x in members
                        if gd.r_class[x] == r and gd.l_class[x] == l]
                star = "*" if gd.h_class[cell[0]] in gd.group_h_classes else " "
                cells.append(f"{len(cell)}{star}")
            lines.append("  [ " + " ".join(cells) + "]")
    return "\n".join(lines)


def _steps_json(seq):
    steps = []
    for st in seq.steps:
        steps.append({"x": st.x, "y": st.y,
                      "s": "1" if st.s is FORMAL_IDENTITY else st.s})
    return steps


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def _require_semigroup(args) -> FiniteSemigroup:
    s, _ = parse_input(_read(args.input), args.format)
    return s


def _cmd_info(args) -> int:
    s = _require_semigroup(args)
    flags = classify(s).as_dict()
    payload = {"size": s.size, "identity": s.identity, "zero": s.zero, **flags}
    human = [f"size: {s.size}", f"identity: {s.identity}", f"zero: {s.zero}"]
    human += [f"{k}: {v}" for k, v in flags.items()]
    _emit(args, payload, "\n".join(human))
    return 0


def _cmd_green(args) -> int:
    s = _require_semigroup(args)
    gd = green_data(s)
    payload = _egg_box(gd)
    payload["maximal_subgroups"] = [{"h_class": list(m), "order": g.size}
                                    for m, g in maximal_subgroups(s)]
    human = _egg_box_grid(gd) + "\nmaximal subgroups: " + " ".join(
        f"{list(m)}(order {g.size})" for m, g in maximal_subgroups(s))
    _emit(args, payload, human)
    return 0


def _cmd_congruences(args) -> int:
    s = _require_semigroup(args)
    try:
        lattice = enumerate_right_congruences(s, cap=args.max)
    except CapExceeded as exc:
        print(f"cap exceeded: more than {args.max} right congruences "
              f"(found {exc.partial_count})", file=sys.stderr)
        return 1
    payload = {"count": len(lattice),
               "congruences": [congruence_json(r) for r in lattice.congruences]}
    human = [f"count: {len(lattice)}"]
    human += [f"index {r.index}: " + " ".join("{" + ",".join(map(str, c)) + "}"
                                              for c in r.classes())
              for r in lattice.congruences]
    _emit(args, payload, "\n".join(human))
    return 0


def _cmd_close(args) -> int:
    s = _require_semigroup(args)
    x = parse_pairs(args.pairs, s)
    rho = rc_generate(s, x, two_sided=args.two_sided)
    payload = congruence_json(rho)
    human = [f"index: {rho.index}"]
    human += [f"class {i}: " + " ".join(map(str, c))
              for i, c in enumerate(rho.classes())]
    _emit(args, payload, "\n".join(human))
    return 0


def _cmd_witness(args) -> int:
    s = _require_semigroup(args)
    x = parse_pairs(args.pairs, s)
    seq = find_x_sequence(s, x, args.from_el, args.to_el)
    if seq is None:
        _emit(args, {"nopath": True, "from": args.from_el, "to": args.to_el},
              "no path")
        return 0
    payload = {"from": seq.a, "to": seq.b, "k": len(seq),
               "steps": _steps_json(seq)}
    human = [f"k: {len(seq)}"]
    for i, st in enumerate(seq.steps, start=1):
        mult = "1" if st.s is FORMAL_IDENTITY else st.s
        human.append(f"step {i}: x={st.x} y={st.y} s={mult}")
    _emit(args, payload, "\n".join(human))
    return 0


def _cmd_minimize(args) -> int:
    s = _require_semigroup(args)
    x = parse_pairs(args.pairs, s)
    rho = rc_generate(s, x)
    out, optimal = minimal_generating_pairs(s, rho, exact_limit=args.exact_limit)
    pairs = sorted(out.pairs)
    payload = {"pairs": [list(p) for p in pairs], "optimal": optimal}
    _emit(args, payload,
          "pairs: " + "; ".join(f"{a} {b}" for a, b in pairs) +
          f"\noptimal: {optimal}")
    return 0


def _cmd_diameter(args) -> int:
    s = _require_semigroup(args)
    x = parse_pairs(args.pairs, s)
    out = rc_diameter(s, x)
    if isinstance(out, Disconnected):
        _emit(args, {"disconnected": True, "index": out.index},
              f"disconnected (index {out.index})")
    else:
        _emit(args, {"diameter": out}, f"diameter: {out}")
    return 0


def _cmd_schutz(args) -> int:
    s = _require_semigroup(args)
    sg = schutzenberger(s, args.element)
    stab = ["1" if m is FORMAL_IDENTITY else m for m in sg.stabilizer]
    payload = {"h_class": list(sg.h_class), "stabilizer": stab,
               "group_size": sg.group.size,
               "group_table": [list(r) for r in sg.group.table]}
    human = [f"H: {list(sg.h_class)}", f"stabilizer: {stab}",
             f"group size: {sg.group.size}"]
    _emit(args, payload, "\n".join(human))
    return 0


def _cmd_decompose(args) -> int:
    s = _require_semigroup(args)
    dec = cr_decomposition(s) if args.mode == "cr" else archimedean_decomposition(s)
    payload = {
        "kind": args.mode,
        "components": [{"elements": members, "kind": dec.kind[i]}
                       for i, members in enumerate(dec.components())],
        "semilattice": {"size": dec.semilattice.size,
                        "table": [list(r) for r in dec.semilattice.table]},
    }
    human = [f"components: {len(dec.kind)}"]
    human += [f"component {i} ({dec.kind[i]}): " + " ".join(map(str, members))
              for i, members in enumerate(dec.components())]
    human.append(f"semilattice size: {dec.semilattice.size}")
    _emit(args, payload, "\n".join(human))
    return 0


def _cmd_rees(args) -> int:
    s, r = parse_input(_read(args.input), args.format)
    if args.construct:
        if r is None:
            print("--construct needs rees-format input", file=sys.stderr)
            return 1
        payload = {"size": s.size, "table": [list(row) for row in s.table]}
        _emit(args, payload, _cayley_text(s))
        return 0
    # --to-coordinates
    struct, mapping = rees_coordinates(s)
    payload = {"group_size": struct.group.size, "i_size": struct.i_size,
               "j_size": struct.j_size,
               "p_matrix": [["-" if v is None else v for v in row]
                            for row in struct.p_matrix],
               "map": list(mapping)}
    _emit(args, payload, _rees_text(struct))
    return 0


def _cmd_theta(args) -> int:
    s, r = parse_input(_read(args.input), args.format)
    if r is None:
        print("theta needs rees-format input", file=sys.stderr)
        return 1
    pattern, rho = theta_congruence(s, r)
    payload = {"patterns": [list(v) for v in pattern.vectors],
               **congruence_json(rho)}
    human = ["patterns: " + " ".join("".join(map(str, v))
                                     for v in pattern.vectors),
             f"index: {rho.index}"]
    human += [f"class {i}: " + " ".join(map(str, c))
              for i, c in enumerate(rho.classes())]
    _emit(args, payload, "\n".join(human))
    return 0


def _report_json(rep) -> dict:
    return {
        "construction": rep.construction,
        "inputs": rep.inputs,
        "passed": rep.passed,
        "built_pairs": sorted(list(p) for p in rep.built_pairs.pairs)
        if rep.built_pairs is not None else None,
        "built_elements": list(rep.built_elements)
        if rep.built_elements is not None else None,
        "expected": congruence_json(rep.expected) if rep.expected else None,
        "computed": congruence_json(rep.computed) if rep.computed else None,
        "distinguishing_pair": list(rep.distinguishing_pair)
        if rep.distinguishing_pair else None,
        "note": rep.note,
    }


def _verify_dispatch(args) -> int:
    if args.sweep:
        reports = sweep()
        counts: dict[str, list[int]] = {}
        for rep in reports:
            counts.setdefault(rep.construction, [0, 0])
            counts[rep.construction][0] += 1
            counts[rep.construction][1] += rep.passed
        all_passed = all(ran == ok for ran, ok in counts.values())
        if args.json:
            payload = {"all_passed": all_passed,
                       "constructions": {k: {"runs": v[0], "passed": v[1]}
                                         for k, v in sorted(counts.items())}}
            print(json.dumps(payload))
        else:
            for k in sorted(counts):
                ran, ok = counts[k]
                print(f"{k:10s} {ok}/{ran} passed")
            print("all passed" if all_passed else "FAILURES PRESENT")
        return 0 if all_passed else 2

    s, r = parse_input(_read(args.input), args.format)
    con = args.construction
    if con == "diagonal":
        witness = diagonal_cyclic_witness(s)
        expected_cyclic = s.size == 1
        passed = (witness is not None) == expected_cyclic
        payload = {"construction": "diagonal",
                   "witness": list(witness) if witness else None,
                   "passed": passed}
        _emit(args, payload,
              f"witness: {witness}\npassed: {passed}")
        return 0 if passed else 2

    if con == "fg":
        gens = ([int(v) for v in args.gens.split(",")] if args.gens
                else list(range(s.size)))
        rho = rc_generate(s, parse_pairs(args.pairs, s)) if args.pairs \
            else rc_generate(s, [(0, b) for b in range(s.size)])
        rep = verify_fg_gens(s, gens, rho, inputs="cli")
    elif con == "lclass":
        from .verify import _l_congruence
        if args.pairs:
            x = parse_pairs(args.pairs, s)
        else:
            x, _ = minimal_generating_pairs(s, _l_congruence(s))
        rep = verify_lclass_gens(s, x, inputs="cli")
    elif con == "dp":
        if not args.second:
            print("dp needs --second FILE", file=sys.stderr)
            return 1
        m = s
        n2, _ = parse_input(_read(args.second), "auto")
        from .core import direct_product
        p = direct_product(m, n2)
        rho = rc_generate(p, parse_pairs(args.pairs, p)) if args.pairs \
            else rc_generate(p, [(0, b) for b in range(p.size)])
        rep = verify_dp_gens(m, n2, rho, inputs="cli")
    elif con == "schutz":
        rep = verify_schutz_gens(s, args.element, inputs="cli")
    elif con == "quotient":
        from .congruence import quotient_semigroup
        rho2 = rc_generate(s, parse_pairs(args.pairs, s), two_sided=True)
        t = quotient_semigroup(s, rho2)
        rho_t = rc_generate(t, parse_pairs(args.target_pairs, t)) \
            if args.target_pairs else rc_generate(t, [(0, b) for b in range(t.size)])
        rep = verify_quotient_gens(s, t, rho2.class_of, rho_t, inputs="cli")
    elif con == "ideal":
        if not args.ideal:
            print("ideal needs --ideal LIST", file=sys.stderr)
            return 1
        ideal = sorted(int(v) for v in args.ideal.split(","))
        isub, members = ideal_subsemigroup(s, ideal)
        e = next((c for c in members
                  if all(s.table[c][v] == v == s.table[v][c] for v in members)),
                 None)
        if e is None:
            print("ideal has no internal identity", file=sys.stderr)
            return 1
        rho_i = rc_generate(isub, parse_pairs(args.target_pairs, isub)) \
            if args.target_pairs \
            else rc_generate(isub, [(0, b) for b in range(isub.size)])
        rep = verify_ideal_gens(s, ideal, e, rho_i, inputs="cli")
    elif con == "extend":
        rho = rc_generate(s, parse_pairs(args.pairs, s)) if args.pairs \
            else rc_generate(s, [])
        sigma = rc_generate(s, parse_pairs(args.sigma_pairs, s)) \
            if args.sigma_pairs else rc_generate(s, [(0, b) for b in range(s.size)])
        rep = verify_extend_gens(s, rho, sigma, inputs="cli")
    else:
        print(f"unknown construction {con!r}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(_report_json(rep)))
    else:
        print(f"construction: {rep.construction}")
        print(f"passed: {rep.passed}")
        if rep.note:
            print(f"note: {rep.note}")
    return 0 if rep.passed else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sgt",
                                     description="finite semigroup toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("-i", "--input", default="-",
                       help="input file, or - for stdin")
        p.add_argument("--format", default="auto",
                       choices=["auto", "cayley", "transformation", "rees"])
        p.add_argument("--json", action="store_true",
                       help="emit machine-readable JSON")

    p = sub.add_parser("info", help="classification flags")
    common(p)

    p = sub.add_parser("green", help="egg-box structure and maximal subgroups")
    common(p)

    p = sub.add_parser("congruences", help="enumerate all right congruences")
    common(p)
    p.add_argument("--max", type=int, default=None, help="abort above this count")

    p = sub.add_parser("close", help="right congruence generated by pairs")
    common(p)
    p.add_argument("--pairs", required=True, help='"a b; c d; ..."')
    p.add_argument("--two-sided", action="store_true", dest="two_sided")

    p = sub.add_parser("witness", help="shortest connecting sequence")
    common(p)
    p.add_argument("--pairs", required=True)
    p.add_argument("--from", type=int, required=True, dest="from_el")
    p.add_argument("--to", type=int, required=True, dest="to_el")

    p = sub.add_parser("minimize", help="minimal generating pairs of a congruence")
    common(p)
    p.add_argument("--pairs", required=True)
    p.add_argument("--exact-limit", type=int, default=12, dest="exact_limit")

    p = sub.add_parser("diameter", help="worst-case connecting length")
    common(p)
    p.add_argument("--pairs", required=True)

    p = sub.add_parser("schutz", help="stabilizer quotient of an H-class")
    common(p)
    p.add_argument("--element", type=int, required=True)

    p = sub.add_parser("decompose", help="semilattice decomposition")
    common(p)
    p.add_argument("--mode", required=True, choices=["cr", "arch"])

    p = sub.add_parser("rees", help="matrix semigroup construction/coordinates")
    common(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--construct", action="store_true")
    g.add_argument("--to-coordinates", action="store_true", dest="to_coordinates")

    p = sub.add_parser("theta", help="column-pattern congruence of a matrix semigroup")
    common(p)

    p = sub.add_parser("verify", help="replay a constructive argument")
    common(p)
    p.add_argument("--construction",
                   choices=["fg", "lclass", "dp", "schutz", "quotient",
                            "ideal", "extend", "diagonal"])
    p.add_argument("--sweep", action="store_true",
                   help="run the whole built-in library suite")
    p.add_argument("--gens", default=None, help="comma-separated generators (fg)")
    p.add_argument("--pairs", default=None)
    p.add_argument("--sigma-pairs", default=None, dest="sigma_pairs")
    p.add_argument("--target-pairs", default=None, dest="target_pairs")
    p.add_argument("--ideal", default=None, help="comma-separated ideal elements")
    p.add_argument("--element", type=int, default=0)
    p.add_argument("--second", default=None, help="second monoid file (dp)")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "info": _cmd_info,
        "green": _cmd_green,
        "congruences": _cmd_congruences,
        "close": _cmd_close,
        "witness": _cmd_witness,
        "minimize": _cmd_minimize,
        "diameter": _cmd_diameter,
        "schutz": _cmd_schutz,
        "decompose": _cmd_decompose,
        "rees": _cmd_rees,
        "theta": _cmd_theta,
        "verify": _verify_dispatch,
    }
    if args.verb == "verify" and not args.sweep and not args.construction:
        print("verify needs --construction or --sweep", file=sys.stderr)
        return 1
    try:
        return handlers[args.verb](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    console_main()

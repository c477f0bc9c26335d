"""Command-line front end: ``burnzeta <verb> [options]``."""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .acampo import acampo_zeta, fermat_s3_strata, orbifold_reduce
from .burnside import (BurnsideElement, burnside_class, character, equivariant_euler, marks,
                       orbifold_euler, phi)
from .dynamics import zeta_G, zeta_nonequivariant, zeta_orb, zeta_tilde_G
from .errors import BurnzetaError, CapacityError, ValidationError
from .groups import element_classes
from .gsets import coset_gset
from .series import (DEFAULT_ORDER, binomial_rational_form, expand, one_minus_t_power, power,
                     sigma_series)

EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_MATH = 4


def _emit(args, text: str, data) -> str:
    return io.dumps(data) if args.json else text


def _gset_from_args(args):
    if args.gset:
        return io.load_gset(args.gset)
    if args.group and args.coset:
        g = io.load_group(args.group)
        return coset_gset(g.lattice(), g.lattice().resolve(args.coset))
    raise ValidationError("give --gset FILE or --group REF --coset CLASS")


def _parse_element(lattice, text: str) -> BurnsideElement:
    text = text.strip()
    if text.startswith("{"):
        return io.burnside_from_json(lattice, json.loads(text))
    return BurnsideElement.basis(lattice, lattice.resolve(text))


def cmd_group(args):
    g = io.load_group(args.group)
    classes = element_classes(g)
    data = io.group_to_json(g)
    data["element_classes"] = [list(c) for c in classes]
    lines = [f"{g.name}: order {g.order}, {'abelian' if g.is_abelian else 'non-abelian'}",
             f"generators: {list(g.generators)}",
             f"element classes: {[list(c) for c in classes]}"]
    if g.permutations is not None:
        lines += [f"  {i}: {list(p)}" for i, p in enumerate(g.permutations)]
    return _emit(args, "\n".join(lines), data)


def cmd_lattice(args):
    g = io.load_group(args.group)
    data = io.lattice_to_json(g)
    lines = [f"{len(data['classes'])} conjugacy classes of subgroups of {g.name}:"]
    for c in data["classes"]:
        lines.append(f"  {c['label']:<6} {c['name']:<8} |H|={c['order']:<3} conjugates={c['size']:<3} "
                     f"rep={c['representative']}")
    return _emit(args, "\n".join(lines), data)


def cmd_marks(args):
    g = io.load_group(args.group)
    lat = g.lattice()
    data = io.marks_to_json(g)
    width = max(len(c.name) for c in lat) + 2
    head = " " * (width + len(g.name) + 1) + "".join(f"{c.name:>{width}}" for c in lat)
    lines = [head] + [f"{g.name}/{c.name:<{width}}" + "".join(f"{v:>{width}}" for v in row)
                      for c, row in zip(lat, lat.marks.rows)]
    return _emit(args, "\n".join(lines), data)


def cmd_burnside(args):
    x = _gset_from_args(args)
    b = burnside_class(x)
    data = {"group": x.group.ref, "size": x.size, "class": b.to_dict(), "marks": list(marks(b)),
            "equivariant_euler": equivariant_euler(x).to_dict(), "character": list(character(b)),
            "phi": phi(b), "orbifold_euler": orbifold_euler(x)}
    text = "\n".join([f"[X] = {b}", f"marks = {list(marks(b))}", f"character = {list(character(b))}",
                      f"orbifold Euler characteristic = {data['orbifold_euler']}"])
    return _emit(args, text, data)


def cmd_sigma(args):
    x = _gset_from_args(args)
    s = sigma_series(x, args.order)
    return _emit(args, str(s), {"group": x.group.ref, "order": args.order, "series": s.to_json()})


def cmd_binomial(args):
    g = io.load_group(args.group)
    lat = g.lattice()
    h = lat.resolve(args.subgroup)
    form = binomial_rational_form(lat, h)
    if args.exact:
        return _emit(args, str(form), {"group": g.ref, "subgroup": f"G/{h.label}",
                                       "rational_form": form.to_json()})
    s = expand(form, args.order)
    return _emit(args, str(s), {"group": g.ref, "subgroup": f"G/{h.label}", "order": args.order,
                                "series": s.to_json()})


def cmd_power(args):
    g = io.load_group(args.group)
    lat = g.lattice()
    base = _parse_element(lat, args.base)
    m = _parse_element(lat, args.exponent)
    a = one_minus_t_power(base, args.order)
    s = power(a, m, args.order)
    return _emit(args, str(s), {"group": g.ref, "order": args.order, "series": s.to_json()})


def cmd_zeta(args):
    phi_map = io.load_map(args.map)
    if args.variant == "tilde":
        z = zeta_tilde_G(phi_map)
    elif args.variant == "plain":
        z = zeta_G(phi_map)
    else:
        z = zeta_nonequivariant(phi_map.images)
    data = {"variant": args.variant, **z.to_json()}
    text = str(z)
    if args.expand is not None:
        s = expand(z, args.expand, lattice=phi_map.lattice)
        data["series"] = s.to_json()
        text += "\n" + str(s)
    return _emit(args, text, data)


def cmd_acampo(args):
    if args.fermat_s3 is not None:
        d = fermat_s3_strata(args.fermat_s3)
    elif args.strata:
        d = io.load_strata(args.strata)
    else:
        raise ValidationError("give --strata FILE or --fermat-s3 K")
    z = acampo_zeta(d)
    if args.orbifold:
        z = orbifold_reduce(z)
    data = {"group": d.lattice.group.ref, "orbifold": args.orbifold, **z.to_json()}
    return _emit(args, str(z), data)


def cmd_orbifold(args):
    if args.map:
        phi_map = io.load_map(args.map)
        zt, zp = zeta_orb(phi_map, "tilde"), zeta_orb(phi_map, "plain")
        data = {"tilde": zt.to_json(), "plain": zp.to_json()}
        return _emit(args, f"tilde: {zt}\nplain: {zp}", data)
    if args.gset or args.coset:
        x = _gset_from_args(args)
        v = orbifold_euler(x)
        return _emit(args, f"orbifold Euler characteristic = {v}", {"orbifold_euler": v})
    if args.group:
        g = io.load_group(args.group)
        lat = g.lattice()
        vals = {f"G/{c.label}": phi(BurnsideElement.basis(lat, c)) for c in lat}
        text = "\n".join(f"Phi([{g.name}/{c.name}]) = {vals[f'G/{c.label}']}" for c in lat)
        return _emit(args, text, {"group": g.ref, "phi": vals})
    raise ValidationError("give --map, --gset or --group")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="burnzeta", description="Burnside-ring invariants of finite group actions")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("group", cmd_group, "describe a group")
    p.add_argument("group", nargs="?", default=None)
    p.add_argument("--group", dest="group_opt")
    p = add("lattice", cmd_lattice, "conjugacy classes of subgroups")
    p.add_argument("--group", required=True)
    p = add("marks", cmd_marks, "table of marks")
    p.add_argument("--group", required=True)
    for name, fn, help_text in [("burnside", cmd_burnside, "class of a G-set in the Burnside ring"),
                                ("sigma", cmd_sigma, "sigma series by symmetric-power enumeration")]:
        p = add(name, fn, help_text)
        p.add_argument("--gset")
        p.add_argument("--group")
        p.add_argument("--coset", help="use G/H for this subgroup class")
        if name == "sigma":
            p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p = add("binomial", cmd_binomial, "(1-t)^(-[G/H])")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--exact", action="store_true", help="print the rational form")
    p = add("power", cmd_power, "((1-t)^(-base))^exponent in the power structure")
    p.add_argument("--group", required=True)
    p.add_argument("--base", required=True, help="class label/name or JSON Burnside element")
    p.add_argument("--exponent", required=True, help="class label/name or JSON Burnside element")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p = add("zeta", cmd_zeta, "zeta function of an equivariant map")
    p.add_argument("--map", required=True)
    p.add_argument("--variant", choices=["tilde", "plain", "nonequivariant"], default="tilde")
    p.add_argument("--expand", type=int, default=None, metavar="N")
    p = add("acampo", cmd_acampo, "equivariant monodromy zeta function from strata")
    p.add_argument("--strata")
    p.add_argument("--fermat-s3", type=int, metavar="K")
    p.add_argument("--orbifold", action="store_true")
    p = add("orbifold", cmd_orbifold, "orbifold Euler characteristics and zeta functions")
    p.add_argument("--map")
    p.add_argument("--gset")
    p.add_argument("--group")
    p.add_argument("--coset")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "group":
        args.group = args.group or args.group_opt
        if not args.group:
            parser.error("group: a group reference is required")
    try:
        text = args.fn(args)
    except FileNotFoundError as exc:
        err.write(json.dumps({"error": "file-not-found", "message": str(exc)}) + "\n")
        return EXIT_INPUT
    except CapacityError as exc:
        err.write(json.dumps(exc.to_dict()) + "\n")
        return EXIT_CAPACITY
    except ValidationError as exc:
        err.write(json.dumps(exc.to_dict()) + "\n")
        return EXIT_INPUT
    except BurnzetaError as exc:
        err.write(json.dumps(exc.to_dict()) + "\n")
        return EXIT_MATH
    out.write(text + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
